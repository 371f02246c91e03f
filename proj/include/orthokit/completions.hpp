#pragma once

#include <string>
#include <vector>

#include "orthokit/frame.hpp"
#include "orthokit/lattice.hpp"

namespace ortho {

/// Dual frame over the nonzero elements of L, with point <-> element maps.
struct MacLarenFrame {
  OrthoFrame frame;
  std::vector<int> elem;   // point -> element of L
  std::vector<int> point;  // element -> point, -1 for bottom
};

/// Carrier a ∈ L \ {0}, a ⊥ b iff a <= b'. Rejects the one-element lattice.
MacLarenFrame maclaren_frame(const FiniteOrthoLattice& L);

/// Adds a R b iff b <= ∃a and asserts the result is a monadic orthoframe
/// (InconsistencyError when not: the construction guarantees it).
MacLarenFrame maclaren_monadic_frame(const FiniteOrthoLattice& L);

/// Proper nonempty filters of L as element subsets, sorted ascending.
struct FilterSet {
  std::vector<Bitset> filters;
  int index_of(const Bitset& f) const;
};

/// Generic enumeration: upward-closed, meet-closed, proper, nonempty subsets
/// grown by closure from the top filter. Does not assume principality.
FilterSet enumerate_proper_filters(const FiniteOrthoLattice& L);

/// Finite-lattice oracle: up-sets of the nonzero elements, sorted.
std::vector<Bitset> principal_filters(const FiniteOrthoLattice& L);

/// Smallest filter containing gens (may be improper, i.e. contain bottom).
Bitset filter_generated(const FiniteOrthoLattice& L, const Bitset& gens);
/// Smallest ideal containing gens (may be improper, i.e. contain top).
Bitset ideal_generated(const FiniteOrthoLattice& L, const Bitset& gens);
/// Proper nonempty ideals, sorted (dual route of enumerate_proper_filters).
std::vector<Bitset> enumerate_proper_ideals(const FiniteOrthoLattice& L);

/// Dual frame over the proper filters: x ⊥ y iff some a has a ∈ x, a' ∈ y.
struct GoldblattFrame {
  OrthoFrame frame;
  std::vector<Bitset> filters;  // point -> filter of L
  int point_of(const Bitset& f) const;
};

GoldblattFrame goldblatt_frame(const FiniteOrthoLattice& L);

/// Adds x R y iff ∃[x] ⊆ y and asserts the monadic orthoframe conditions.
GoldblattFrame goldblatt_monadic_frame(const FiniteOrthoLattice& L);

/// {∃a : a ∈ x} as an element subset.
Bitset exists_image(const FiniteOrthoLattice& L, const Bitset& filter);

enum class CompletionKind { macneille, canonical };

/// An embedding of L into the closed-set lattice of one of its dual frames.
/// Fields are plain data so verifiers can be pointed at corrupted witnesses.
struct CompletionWitness {
  FiniteOrthoLattice source;
  OrthoFrame frame;
  ClosedSetLattice target;
  std::vector<int> embed;  // source element -> target element
  CompletionKind kind = CompletionKind::macneille;
};

/// g(a) = {b ∈ L*: b <= a} into B of the MacLaren frame (monadic when L is).
CompletionWitness embedding_g(const FiniteOrthoLattice& L);

/// h(a) = {x : a ∈ x} into B of the Goldblatt frame (monadic when L is).
CompletionWitness embedding_h(const FiniteOrthoLattice& L);

/// Checks the embedding property, join- and meet-density of the image, and
/// that the target orthocomplement (and quantifier, when monadic) equals the
/// completion extension formulas evaluated over the image.
Report verify_macneille(const CompletionWitness& w);

/// Checks embedding, density through the closed elements K (meets of image
/// subsets), compactness via the filter/ideal criterion (exhaustive) plus
/// subset pairs (exhaustive when small, sampled otherwise), and that the
/// target operations match the σ-extension formulas.
Report verify_canonical(const CompletionWitness& w, const Budget& budget = {});

/// x S y iff ∃[x] = ∃[y] on the Goldblatt frame, with its verification
/// bundle: S is an equivalence, R equals inclusion-after-S, (F(L),⊥,S) is a
/// monadic orthoframe, and both quantifiers agree on every closed set.
struct SRelation {
  GoldblattFrame goldblatt;     // carries R
  std::vector<Bitset> s_rows;   // S relation rows
  Report report;
};

SRelation relation_S(const FiniteOrthoLattice& L);

}  // namespace ortho
