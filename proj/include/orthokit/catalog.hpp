#pragma once

#include <string>
#include <vector>

#include "orthokit/frame.hpp"
#include "orthokit/lattice.hpp"

namespace ortho {

/// Generator recipe. `family` is one of boolean, mo, o6, chain,
/// horizontal_sum, product; sums and products carry two child specs.
/// `quantifier` is empty, "identity", "collapse", or a decimal index into
/// sub_ortholattices order.
struct CatalogSpec {
  std::string family;
  std::vector<int> params;
  std::vector<CatalogSpec> children;
  std::string quantifier;

  std::string describe() const;
};

/// Builds and fully validates the instance (ortholattice axioms, and the
/// quantifier axioms when a quantifier is selected). Throws StructureError on
/// bad parameters, BudgetError past max_elements.
FiniteOrthoLattice generate(const CatalogSpec& spec, std::size_t max_elements = 4096);

FiniteOrthoLattice boolean_lattice(int n_atoms);
FiniteOrthoLattice mo_lattice(int n_blocks);      // MOn: 2n+2 elements
FiniteOrthoLattice o6_lattice();                  // hexagon 0<a<b', 0<b<a'<1
FiniteOrthoLattice chain_lattice(int n);          // n in {1,2}
FiniteOrthoLattice horizontal_sum(const FiniteOrthoLattice& A, const FiniteOrthoLattice& B);
FiniteOrthoLattice product(const FiniteOrthoLattice& A, const FiniteOrthoLattice& B);

/// Attaches the selected quantifier and validates it.
FiniteOrthoLattice with_quantifier(const FiniteOrthoLattice& L, const std::string& selector);

/// The fixed desk-scale corpus: boolean(2..4), mo(1..6), o6, chain(2),
/// horizontal sums and products, all of size <= 24.
std::vector<CatalogSpec> standard_catalog();
std::vector<FiniteOrthoLattice> standard_lattices();

/// Two points with ⊥ given by inequality; every subset is closed.
OrthoFrame two_point_frame();
/// Same frame with the identity relation attached (monadic variant).
OrthoFrame two_point_frame_monadic();
/// One point, empty orthogonality.
OrthoFrame one_point_frame();

}  // namespace ortho
