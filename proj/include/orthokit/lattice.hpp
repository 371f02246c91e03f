#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthokit/bits.hpp"
#include "orthokit/kernels.hpp"
#include "orthokit/report.hpp"

namespace ortho {

/// Unvalidated candidate for a finite (monadic) ortholattice. `leq` rows are
/// up-sets: leq[a] contains b iff a <= b. Missing orthocomplement entries are
/// -1 and reported as structural errors by the validator.
struct LatticeData {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Bitset> leq;
  std::vector<int> ortho;
  std::optional<std::vector<int>> exists;

  int size() const { return static_cast<int>(labels.size()); }
  bool operator==(const LatticeData&) const = default;
};

/// Validated immutable finite ortholattice with total meet/join tables and an
/// optional quantifier map (present iff the lattice is monadic; the quantifier
/// itself is validated separately by validate_quantifier).
class FiniteOrthoLattice {
 public:
  /// Throws StructureError when the ortholattice axioms fail.
  static FiniteOrthoLattice build(const LatticeData& d, Exec exec = Exec::parallel);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(b); }
  const Bitset& up(int a) const { return up_[static_cast<std::size_t>(a)]; }
  const Bitset& down(int a) const { return down_[static_cast<std::size_t>(a)]; }
  int meet(int a, int b) const { return tables_.meet[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)]; }
  int join(int a, int b) const { return tables_.join[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)]; }
  int ortho(int a) const { return ortho_[static_cast<std::size_t>(a)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool monadic() const { return exists_.has_value(); }
  int exists_of(int a) const { return (*exists_)[static_cast<std::size_t>(a)]; }
  const std::optional<std::vector<int>>& exists_map() const { return exists_; }

  /// Elements covering bottom.
  Bitset atoms() const;
  /// Covers of a: minimal elements strictly above a.
  std::vector<std::pair<int, int>> cover_pairs() const;

  int meet_of(const Bitset& subset) const;  // meet over subset, top for {}
  int join_of(const Bitset& subset) const;  // join over subset, bottom for {}

  FiniteOrthoLattice with_exists(std::vector<int> ex) const;
  FiniteOrthoLattice without_exists() const;
  FiniteOrthoLattice renamed(std::string name) const;

  LatticeData data() const;

  bool operator==(const FiniteOrthoLattice& o) const { return data() == o.data(); }

 private:
  FiniteOrthoLattice() = default;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Bitset> up_, down_;
  std::vector<int> ortho_;
  kernels::Tables tables_;
  int bottom_ = 0, top_ = 0;
  std::optional<std::vector<int>> exists_;
};

/// Checks the ortholattice axioms (poset laws, meets/joins, bounds,
/// involution, order-inversion, complement laws) plus De Morgan as a derived
/// property. Structural defects are reported as kind=structure and suppress
/// the axiom scan. Empty failure list iff d is an ortholattice.
Report validate_ortholattice(const LatticeData& d, Exec exec = Exec::parallel);

/// Quantifier axioms: increasing, monotone, idempotent, orthocomplement of a
/// closed element closed; derived checks that bottom is fixed and the closed
/// elements form a sub-ortholattice; advisory note on join preservation.
Report validate_quantifier(const FiniteOrthoLattice& L);

/// Throws StructureError unless L is monadic and validate_quantifier passes.
void require_quantifier(const FiniteOrthoLattice& L);

struct LatticeHom {
  const FiniteOrthoLattice* source = nullptr;
  const FiniteOrthoLattice* target = nullptr;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<std::size_t>(a)]; }
  bool operator==(const LatticeHom& o) const { return map == o.map; }
};

LatticeHom identity_hom(const FiniteOrthoLattice& L);
LatticeHom compose(const LatticeHom& g, const LatticeHom& f);  // g after f

/// True iff f preserves meet, join, orthocomplement and bounds (and the
/// quantifier when both sides are monadic); on failure the witness is the
/// first violated equation instance.
Check is_homomorphism(const LatticeHom& f);

/// All (monadic) ortholattice homomorphisms L -> M, lexicographically sorted.
/// Backtracking over a generating set; throws BudgetError past
/// budget.max_candidates leaf candidates.
std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteOrthoLattice& L,
                                                      const FiniteOrthoLattice& M,
                                                      const Budget& budget = {},
                                                      Exec exec = Exec::parallel);

/// Oracle route: filters all |M|^|L| maps through is_homomorphism.
std::vector<std::vector<int>> enumerate_homomorphisms_raw(const FiniteOrthoLattice& L,
                                                          const FiniteOrthoLattice& M,
                                                          const Budget& budget = {},
                                                          Exec exec = Exec::parallel);

std::optional<std::vector<int>> find_isomorphism(const FiniteOrthoLattice& L,
                                                 const FiniteOrthoLattice& M,
                                                 const Budget& budget = {});

/// All subsets containing the bounds and closed under meet, join and
/// orthocomplement, sorted ascending.
std::vector<Bitset> sub_ortholattices(const FiniteOrthoLattice& L);

/// The quantifier of a sub-ortholattice S: a -> least element of S above a.
std::vector<int> quantifier_from_subalgebra(const FiniteOrthoLattice& L, const Bitset& S);

/// One quantifier per sub-ortholattice, in sub_ortholattices order. Every
/// returned map passes validate_quantifier.
std::vector<std::vector<int>> quantifiers_from_subalgebras(const FiniteOrthoLattice& L);

/// Fixpoints of the quantifier; verified to be a sub-ortholattice (throws
/// InconsistencyError otherwise). Requires a valid quantifier.
Bitset closed_elements(const FiniteOrthoLattice& L);

}  // namespace ortho
