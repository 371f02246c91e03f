#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthokit/bits.hpp"
#include "orthokit/kernels.hpp"
#include "orthokit/lattice.hpp"
#include "orthokit/report.hpp"

namespace ortho {

/// Finite carrier with an orthogonality relation (rows of ⊥) and, when
/// monadic, an additional relation R (rows of R). Plain data; the validators
/// decide whether it is an orthoframe / monadic orthoframe.
struct OrthoFrame {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Bitset> perp;
  std::optional<std::vector<Bitset>> rel;

  int size() const { return static_cast<int>(labels.size()); }
  bool monadic() const { return rel.has_value(); }
  bool operator==(const OrthoFrame&) const = default;
};

/// Irreflexivity and symmetry of ⊥ (plus structural totality).
Report validate_orthoframe(const OrthoFrame& X);

/// Adds reflexivity and transitivity of R and the frame condition
/// R[R[{x}]^⊥] ⊆ R[{x}]^⊥, with the violating point as witness.
Report validate_monadic_frame(const OrthoFrame& X);

void require_orthoframe(const OrthoFrame& X);
void require_monadic_frame(const OrthoFrame& X);

/// S^⊥ = {y : x ⊥ y for all x in S}; the full carrier for S = {}.
Bitset orthogonal(const OrthoFrame& X, const Bitset& S);
Bitset biorthogonal(const OrthoFrame& X, const Bitset& S);
bool is_biorthogonally_closed(const OrthoFrame& X, const Bitset& S);

/// R[A] = {y : x R y for some x in A}.
Bitset rel_image(const std::vector<Bitset>& rel, const Bitset& A);

/// The ortholattice of bi-orthogonally closed subsets: order ⊆, meet ∩, join
/// biorthogonal of union, orthocomplement S^⊥, and quantifier R[A]^⊥⊥ when
/// the frame is monadic. `sets` is sorted; element i of `lattice` is sets[i].
struct ClosedSetLattice {
  std::vector<Bitset> sets;
  FiniteOrthoLattice lattice;

  int index_of(const Bitset& s) const;  // -1 when absent
};

/// Enumerates B(X) as the meet-closure of the singleton orthogonals together
/// with the carrier (never via the powerset). Throws BudgetError past
/// budget.max_closed_sets.
std::vector<Bitset> enumerate_closed_sets(const OrthoFrame& X, const Budget& budget = {},
                                          Exec exec = Exec::parallel);

/// Oracle route: filters the whole powerset by S == S^⊥⊥ (|X| capped at 25).
std::vector<Bitset> enumerate_closed_sets_powerset(const OrthoFrame& X, Exec exec = Exec::parallel);

/// Builds B(X), validates it as a (monadic) ortholattice, and cross-checks
/// the generic meet/join tables against the set-level operations. Any failed
/// check throws InconsistencyError: these are guaranteed properties.
ClosedSetLattice closed_set_lattice(const OrthoFrame& X, const Budget& budget = {},
                                    Exec exec = Exec::parallel);

}  // namespace ortho
