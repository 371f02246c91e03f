#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthokit/completions.hpp"
#include "orthokit/frame.hpp"
#include "orthokit/lattice.hpp"

namespace ortho {

/// Finite orthospace: a frame, a stored order (normally derived as
/// x <= y iff y ∈ {x}^⊥⊥) and the family C(X) of closed sets. On finite
/// carriers the topology is discrete, so C(X) coincides with B(X) and all
/// continuity conditions hold identically.
struct FiniteOrthoSpace {
  OrthoFrame frame;
  std::vector<Bitset> order_up;  // order_up[x] = {y : x <= y}
  ClosedSetLattice closed;

  int size() const { return frame.size(); }
  bool monadic() const { return frame.monadic(); }
};

/// Derived order rows plus diagnostics: reflexive/transitive always hold;
/// antisymmetry holds iff the closed sets separate points, and the report
/// says which.
std::pair<std::vector<Bitset>, Report> derive_order(const OrthoFrame& X,
                                                    const Budget& budget = {});

FiniteOrthoSpace make_space(const OrthoFrame& X, const Budget& budget = {});
/// Keeps a caller-supplied order (validation decides whether it is lawful).
FiniteOrthoSpace make_space_with_order(const OrthoFrame& X, std::vector<Bitset> order,
                                       const Budget& budget = {});

/// The four orthospace conditions, separation/antisymmetry, and agreement of
/// the stored order with the derived one.
Report validate_orthospace(const FiniteOrthoSpace& X);

/// Adds the monadic frame conditions and closure of C(X) under R-images.
Report validate_monadic_orthospace(const FiniteOrthoSpace& X);

struct OSMorphism {
  const FiniteOrthoSpace* source = nullptr;
  const FiniteOrthoSpace* target = nullptr;
  std::vector<int> map;

  int operator()(int p) const { return map[static_cast<std::size_t>(p)]; }
  bool operator==(const OSMorphism& o) const { return map == o.map; }
};

OSMorphism identity_morphism(const FiniteOrthoSpace& X);
OSMorphism compose(const OSMorphism& g, const OSMorphism& f);  // g after f

/// Conditions: (1) φ(p) ⊥ φ(q) implies p ⊥ q; (2) x not ⊥ φ(p) implies some
/// q with q not ⊥ p and φ(q) ∈ {x}^⊥⊥; when both spaces are monadic,
/// R[φ⁻¹[U]] = φ⁻¹[R[U]] for every U ∈ C(target).
Report validate_os_morphism(const OSMorphism& phi);

/// The dual space of a lattice: the (monadic) Goldblatt frame as a space,
/// with the filter carrier kept alongside.
struct FilterSpace {
  FiniteOrthoSpace space;
  std::vector<Bitset> filters;  // point -> filter of the lattice
  int point_of(const Bitset& f) const;
};

FilterSpace filter_space(const FiniteOrthoLattice& L, const Budget& budget = {});

/// Contravariant functor on morphisms: for f : L -> M, the preimage map
/// F(M) -> F(L), y -> f⁻¹[y].
OSMorphism functor_F(const LatticeHom& f, const FilterSpace& FL, const FilterSpace& FM);

/// Contravariant functor on morphisms: for φ : P -> X, the preimage map
/// C(X) -> C(P), U -> φ⁻¹[U]. Preimages of closed sets are closed for valid
/// morphisms; InconsistencyError otherwise.
LatticeHom functor_C(const OSMorphism& phi);

/// h_L : L -> C(F(L)), a -> {x : a ∈ x}.
LatticeHom unit_h(const FiniteOrthoLattice& L, const FilterSpace& FL);

/// g_X : X -> F(C(X)), x -> {U : x ∈ U}. FCX must be filter_space of
/// X.closed.lattice.
OSMorphism unit_g(const FiniteOrthoSpace& X, const FilterSpace& FCX);

/// True iff every proper filter of C(X) is the filter of closed sets
/// containing some point; the witness is the first unrealized filter.
struct SobrietyResult {
  bool sober = false;
  std::optional<Bitset> witness;  // unrealized filter over C(X) elements
};
SobrietyResult is_ortho_sober(const FiniteOrthoSpace& X, const Budget& budget = {});

/// f⁻(x) = {a : x ∈ f(a)} for f : L -> C(X); equals F(f) ∘ g_X.
OSMorphism transpose_minus(const LatticeHom& f, const FiniteOrthoSpace& X, const FilterSpace& FL);

/// φ⁺(a) = {x : a ∈ φ(x)} for φ : X -> F(L); equals C(φ) ∘ h_L.
LatticeHom transpose_plus(const OSMorphism& phi, const FiniteOrthoLattice& L,
                          const FilterSpace& FL);

/// All OS morphisms P -> X (monadic morphisms when both spaces are monadic),
/// sorted lexicographically. Backtracking pruned by condition (1).
std::vector<std::vector<int>> enumerate_os_morphisms(const FiniteOrthoSpace& P,
                                                     const FiniteOrthoSpace& X,
                                                     const Budget& budget = {},
                                                     Exec exec = Exec::parallel);

/// Oracle route: all |X|^|P| maps filtered by validate_os_morphism.
std::vector<std::vector<int>> enumerate_os_morphisms_raw(const FiniteOrthoSpace& P,
                                                         const FiniteOrthoSpace& X,
                                                         const Budget& budget = {},
                                                         Exec exec = Exec::parallel);

/// Enumerates Hom(L, C(X)) and Hom(X, F(L)), verifies the transposes are
/// mutually inverse bijections agreeing with their composite forms, and
/// checks both naturality equations over the given test families (defaults:
/// the endomorphisms of X and L).
Report verify_adjunction(const FiniteOrthoLattice& L, const FiniteOrthoSpace& X,
                         const Budget& budget = {},
                         const std::vector<const FiniteOrthoSpace*>& space_family = {},
                         const std::vector<const FiniteOrthoLattice*>& lattice_family = {});

/// For each lattice: h_L is an isomorphism. For each ortho-sober space: g_X
/// is an isomorphism whose two-sided inverse is itself a valid (monadic) OS
/// morphism. Non-sober spaces are reported and skipped.
Report verify_dual_equivalence(const std::vector<const FiniteOrthoLattice*>& lattices,
                               const std::vector<const FiniteOrthoSpace*>& spaces,
                               const Budget& budget = {});

}  // namespace ortho
