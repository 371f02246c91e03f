#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orthokit/frame.hpp"
#include "orthokit/lattice.hpp"

namespace ortho::io {

/// Parsed `map` block; source/target name objects declared earlier in the
/// same document.
struct MorphismData {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> sends;
  int line = 0;
};

using DocumentItem = std::variant<LatticeData, OrthoFrame, MorphismData>;

struct Document {
  std::vector<DocumentItem> items;

  const LatticeData* first_lattice() const;
  const OrthoFrame* first_frame() const;
};

/// Line-oriented format, '#' comments. Lattice blocks:
///   lattice <name> / elements <id>... / covers <a> <b> / leq <a> <b>
///   / ortho <a> <b> / exists <a> <b> / end
/// `covers`/`leq` pairs are closed reflexively-transitively on load. Frame
/// blocks: frame / points / perp (symmetrized on load) / rel / end. Morphism
/// blocks: map <name> <source> <target> / send <p> <q> / end.
/// Throws ParseError (syntax) or UndeclaredError (unknown identifier).
Document parse_document(const std::string& text);

std::string to_text(const LatticeData& d);
std::string to_text(const OrthoFrame& f);

/// Hasse diagram (cover edges only) for lattices; undirected ⊥ edges and
/// directed R edges for frames. Byte-identical for identical input.
std::string to_dot(const FiniteOrthoLattice& L);
std::string to_dot(const OrthoFrame& f);

}  // namespace ortho::io
