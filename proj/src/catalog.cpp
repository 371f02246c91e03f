#include "orthokit/catalog.hpp"

#include <algorithm>

namespace ortho {
namespace {

FiniteOrthoLattice build_named(LatticeData d) { return FiniteOrthoLattice::build(d); }

std::string atom_letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

std::string CatalogSpec::describe() const {
  std::string s = family;
  if (!children.empty()) {
    s += "(" + children[0].describe() + "," + children[1].describe() + ")";
  } else if (!params.empty()) {
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i)
      s += (i ? "," : "") + std::to_string(params[i]);
    s += ")";
  }
  if (!quantifier.empty()) s += "[" + quantifier + "]";
  return s;
}

FiniteOrthoLattice boolean_lattice(int n_atoms) {
  if (n_atoms < 1 || n_atoms > 6)
    throw StructureError("boolean(n) supports 1 <= n <= 6, got " + std::to_string(n_atoms));
  const int n = 1 << n_atoms;
  LatticeData d;
  d.name = "boolean(" + std::to_string(n_atoms) + ")";
  d.labels.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    if (m == 0)
      d.labels[static_cast<std::size_t>(m)] = "0";
    else if (m == n - 1)
      d.labels[static_cast<std::size_t>(m)] = "1";
    else {
      std::string s;
      for (int i = 0; i < n_atoms; ++i)
        if (m >> i & 1) s += atom_letter(i);
      d.labels[static_cast<std::size_t>(m)] = s;
    }
  }
  d.leq.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) d.leq[static_cast<std::size_t>(a)].set(b);
  d.ortho.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) d.ortho[static_cast<std::size_t>(a)] = (n - 1) & ~a;
  return build_named(d);
}

FiniteOrthoLattice mo_lattice(int n_blocks) {
  if (n_blocks < 1 || n_blocks > 12)
    throw StructureError("mo(n) supports 1 <= n <= 12, got " + std::to_string(n_blocks));
  const int n = 2 * n_blocks + 2;
  LatticeData d;
  d.name = "mo(" + std::to_string(n_blocks) + ")";
  d.labels.resize(static_cast<std::size_t>(n));
  d.labels[0] = "0";
  d.labels[static_cast<std::size_t>(n - 1)] = "1";
  for (int i = 0; i < n_blocks; ++i) {
    d.labels[static_cast<std::size_t>(1 + 2 * i)] = atom_letter(i);
    d.labels[static_cast<std::size_t>(2 + 2 * i)] = atom_letter(i) + "'";
  }
  d.leq.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    d.leq[static_cast<std::size_t>(a)].set(a);
    d.leq[static_cast<std::size_t>(a)].set(n - 1);
    d.leq[0].set(a);
  }
  d.ortho.resize(static_cast<std::size_t>(n));
  d.ortho[0] = n - 1;
  d.ortho[static_cast<std::size_t>(n - 1)] = 0;
  for (int i = 0; i < n_blocks; ++i) {
    d.ortho[static_cast<std::size_t>(1 + 2 * i)] = 2 + 2 * i;
    d.ortho[static_cast<std::size_t>(2 + 2 * i)] = 1 + 2 * i;
  }
  return build_named(d);
}

FiniteOrthoLattice o6_lattice() {
  // 0 < a < b' < 1 and 0 < b < a' < 1, with a <-> a', b <-> b'.
  LatticeData d;
  d.name = "o6";
  d.labels = {"0", "a", "b", "a'", "b'", "1"};
  const int B = 0, A = 1, Bm = 2, Ap = 3, Bp = 4, T = 5;
  d.leq.assign(6, Bitset(6));
  auto le = [&](int x, int y) { d.leq[static_cast<std::size_t>(x)].set(y); };
  for (int x = 0; x < 6; ++x) {
    le(x, x);
    le(B, x);
    le(x, T);
  }
  le(A, Bp);
  le(Bm, Ap);
  d.ortho = {T, Ap, Bp, A, Bm, B};
  return build_named(d);
}

FiniteOrthoLattice chain_lattice(int n) {
  if (n == 1) {
    LatticeData d;
    d.name = "chain(1)";
    d.labels = {"0"};
    d.leq.assign(1, Bitset(1));
    d.leq[0].set(0);
    d.ortho = {0};
    return build_named(d);
  }
  if (n == 2) {
    LatticeData d;
    d.name = "chain(2)";
    d.labels = {"0", "1"};
    d.leq.assign(2, Bitset(2));
    d.leq[0].set(0);
    d.leq[0].set(1);
    d.leq[1].set(1);
    d.ortho = {1, 0};
    return build_named(d);
  }
  throw StructureError("chain(" + std::to_string(n) +
                       ") has no orthocomplement; only n in {1,2} is supported");
}

FiniteOrthoLattice horizontal_sum(const FiniteOrthoLattice& A, const FiniteOrthoLattice& B) {
  if (A.size() < 2 || B.size() < 2)
    throw StructureError("horizontal sum needs blocks with distinct bounds");
  // Shared bounds, disjoint middles; no order across blocks.
  std::vector<int> amap(static_cast<std::size_t>(A.size()), -1);
  std::vector<int> bmap(static_cast<std::size_t>(B.size()), -1);
  LatticeData d;
  d.labels.push_back("0");
  amap[static_cast<std::size_t>(A.bottom())] = 0;
  bmap[static_cast<std::size_t>(B.bottom())] = 0;
  for (int a = 0; a < A.size(); ++a)
    if (a != A.bottom() && a != A.top()) {
      amap[static_cast<std::size_t>(a)] = static_cast<int>(d.labels.size());
      d.labels.push_back("l" + A.label(a));
    }
  for (int b = 0; b < B.size(); ++b)
    if (b != B.bottom() && b != B.top()) {
      bmap[static_cast<std::size_t>(b)] = static_cast<int>(d.labels.size());
      d.labels.push_back("r" + B.label(b));
    }
  const int top = static_cast<int>(d.labels.size());
  d.labels.push_back("1");
  amap[static_cast<std::size_t>(A.top())] = top;
  bmap[static_cast<std::size_t>(B.top())] = top;

  const std::size_t n = d.labels.size();
  d.name = "hsum(" + A.name() + "," + B.name() + ")";
  d.leq.assign(n, Bitset(n));
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (A.leq(a, b))
        d.leq[static_cast<std::size_t>(amap[static_cast<std::size_t>(a)])].set(
            amap[static_cast<std::size_t>(b)]);
  for (int a = 0; a < B.size(); ++a)
    for (int b = 0; b < B.size(); ++b)
      if (B.leq(a, b))
        d.leq[static_cast<std::size_t>(bmap[static_cast<std::size_t>(a)])].set(
            bmap[static_cast<std::size_t>(b)]);
  d.ortho.assign(n, -1);
  for (int a = 0; a < A.size(); ++a)
    d.ortho[static_cast<std::size_t>(amap[static_cast<std::size_t>(a)])] =
        amap[static_cast<std::size_t>(A.ortho(a))];
  for (int b = 0; b < B.size(); ++b)
    d.ortho[static_cast<std::size_t>(bmap[static_cast<std::size_t>(b)])] =
        bmap[static_cast<std::size_t>(B.ortho(b))];
  return build_named(d);
}

FiniteOrthoLattice product(const FiniteOrthoLattice& A, const FiniteOrthoLattice& B) {
  const int n = A.size() * B.size();
  LatticeData d;
  d.name = "product(" + A.name() + "," + B.name() + ")";
  auto idx = [&](int a, int b) { return a * B.size() + b; };
  d.labels.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b)
      d.labels[static_cast<std::size_t>(idx(a, b))] = "(" + A.label(a) + "," + B.label(b) + ")";
  d.leq.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b)
      for (int a2 = 0; a2 < A.size(); ++a2)
        for (int b2 = 0; b2 < B.size(); ++b2)
          if (A.leq(a, a2) && B.leq(b, b2))
            d.leq[static_cast<std::size_t>(idx(a, b))].set(idx(a2, b2));
  d.ortho.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b)
      d.ortho[static_cast<std::size_t>(idx(a, b))] = idx(A.ortho(a), B.ortho(b));
  if (A.monadic() && B.monadic()) {
    std::vector<int> ex(static_cast<std::size_t>(n));
    for (int a = 0; a < A.size(); ++a)
      for (int b = 0; b < B.size(); ++b)
        ex[static_cast<std::size_t>(idx(a, b))] = idx(A.exists_of(a), B.exists_of(b));
    d.exists = std::move(ex);
  }
  return build_named(d);
}

FiniteOrthoLattice with_quantifier(const FiniteOrthoLattice& L, const std::string& selector) {
  std::vector<int> ex(static_cast<std::size_t>(L.size()));
  if (selector == "identity") {
    for (int a = 0; a < L.size(); ++a) ex[static_cast<std::size_t>(a)] = a;
  } else if (selector == "collapse") {
    for (int a = 0; a < L.size(); ++a)
      ex[static_cast<std::size_t>(a)] = a == L.bottom() ? L.bottom() : L.top();
  } else {
    std::size_t pos = 0;
    int idx = -1;
    try {
      idx = std::stoi(selector, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != selector.size() || idx < 0)
      throw StructureError("unknown quantifier selector '" + selector +
                           "' (expected identity, collapse, or a sub-ortholattice index)");
    auto subs = sub_ortholattices(L);
    if (static_cast<std::size_t>(idx) >= subs.size())
      throw StructureError("sub-ortholattice index " + std::to_string(idx) + " out of range (" +
                           std::to_string(subs.size()) + " available)");
    ex = quantifier_from_subalgebra(L, subs[static_cast<std::size_t>(idx)]);
  }
  FiniteOrthoLattice M =
      L.with_exists(std::move(ex)).renamed(L.name() + "[" + selector + "]");
  require_quantifier(M);
  return M;
}

FiniteOrthoLattice generate(const CatalogSpec& spec, std::size_t max_elements) {
  auto need_params = [&](std::size_t k) {
    if (spec.params.size() != k)
      throw StructureError("family '" + spec.family + "' expects " + std::to_string(k) +
                           " parameter(s)");
  };
  FiniteOrthoLattice L = [&]() {
    if (spec.family == "boolean") {
      need_params(1);
      return boolean_lattice(spec.params[0]);
    }
    if (spec.family == "mo") {
      need_params(1);
      return mo_lattice(spec.params[0]);
    }
    if (spec.family == "o6") {
      need_params(0);
      return o6_lattice();
    }
    if (spec.family == "chain") {
      need_params(1);
      return chain_lattice(spec.params[0]);
    }
    if (spec.family == "horizontal_sum" || spec.family == "hsum") {
      if (spec.children.size() != 2)
        throw StructureError("horizontal_sum expects two operand specs");
      return horizontal_sum(generate(spec.children[0], max_elements),
                            generate(spec.children[1], max_elements));
    }
    if (spec.family == "product") {
      if (spec.children.size() != 2)
        throw StructureError("product expects two operand specs");
      return product(generate(spec.children[0], max_elements),
                     generate(spec.children[1], max_elements));
    }
    throw StructureError("unknown family '" + spec.family + "'");
  }();
  if (static_cast<std::size_t>(L.size()) > max_elements)
    throw BudgetError("instance size " + std::to_string(L.size()) + " exceeds bound " +
                      std::to_string(max_elements));
  if (!spec.quantifier.empty()) L = with_quantifier(L, spec.quantifier);
  return L;
}

std::vector<CatalogSpec> standard_catalog() {
  std::vector<CatalogSpec> out;
  for (int n = 2; n <= 4; ++n) out.push_back({"boolean", {n}, {}, ""});
  for (int n = 1; n <= 6; ++n) out.push_back({"mo", {n}, {}, ""});
  out.push_back({"o6", {}, {}, ""});
  out.push_back({"chain", {2}, {}, ""});
  out.push_back({"horizontal_sum", {}, {{"boolean", {2}, {}, ""}, {"boolean", {2}, {}, ""}}, ""});
  out.push_back({"horizontal_sum", {}, {{"boolean", {2}, {}, ""}, {"o6", {}, {}, ""}}, ""});
  out.push_back({"product", {}, {{"chain", {2}, {}, ""}, {"boolean", {2}, {}, ""}}, ""});
  out.push_back({"product", {}, {{"boolean", {2}, {}, ""}, {"mo", {2}, {}, ""}}, ""});
  return out;
}

std::vector<FiniteOrthoLattice> standard_lattices() {
  std::vector<FiniteOrthoLattice> out;
  for (const auto& spec : standard_catalog()) out.push_back(generate(spec));
  return out;
}

OrthoFrame two_point_frame() {
  OrthoFrame f;
  f.name = "two-point";
  f.labels = {"x", "y"};
  f.perp.assign(2, Bitset(2));
  f.perp[0].set(1);
  f.perp[1].set(0);
  return f;
}

OrthoFrame two_point_frame_monadic() {
  OrthoFrame f = two_point_frame();
  f.name += "-monadic";
  std::vector<Bitset> rel(2, Bitset(2));
  rel[0].set(0);
  rel[1].set(1);
  f.rel = std::move(rel);
  return f;
}

OrthoFrame one_point_frame() {
  OrthoFrame f;
  f.name = "one-point";
  f.labels = {"x"};
  f.perp.assign(1, Bitset(1));
  return f;
}

}  // namespace ortho
