#include "orthokit/duality.hpp"

#include <algorithm>
#include <atomic>

namespace ortho {
namespace {

std::string plabel(const OrthoFrame& f, int x) { return f.labels[static_cast<std::size_t>(x)]; }

void assert_found(int idx, const std::string& what) {
  if (idx < 0) throw InconsistencyError(what);
}

}  // namespace

std::pair<std::vector<Bitset>, Report> derive_order(const OrthoFrame& X, const Budget& budget) {
  Report r;
  r.subject = (X.name.empty() ? "frame" : X.name) + "/derived-order";
  const int n = X.size();
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    rows.push_back(biorthogonal(X, Bitset::single(static_cast<std::size_t>(n), x)));

  {
    Check& c = r.add("order/reflexive");
    for (int x = 0; x < n && c.pass; ++x)
      if (!rows[static_cast<std::size_t>(x)].test(x)) {
        c.pass = false;
        c.witness = plabel(X, x);
      }
  }
  {
    Check& c = r.add("order/transitive");
    for (int x = 0; x < n && c.pass; ++x)
      rows[static_cast<std::size_t>(x)].for_each([&](int y) {
        if (!c.pass) return;
        if (!rows[static_cast<std::size_t>(y)].subset_of(rows[static_cast<std::size_t>(x)])) {
          c.pass = false;
          c.witness = "(" + plabel(X, x) + "," + plabel(X, y) + ")";
        }
      });
  }
  {
    Check& c = r.add("order/antisymmetric-separation");
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = x + 1; y < n && c.pass; ++y)
        if (rows[static_cast<std::size_t>(x)].test(y) && rows[static_cast<std::size_t>(y)].test(x)) {
          c.pass = false;
          c.witness = "closed sets do not separate (" + plabel(X, x) + "," + plabel(X, y) + ")";
        }
  }
  // Separation and up-closure for the derived order, against C(X) = B(X).
  std::vector<Bitset> closed = enumerate_closed_sets(X, budget);
  {
    Check& c = r.add("order/separating-set-exists");
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y) {
        if (rows[static_cast<std::size_t>(x)].test(y)) continue;
        bool found = false;
        for (const auto& U : closed)
          if (U.test(x) && !U.test(y)) {
            found = true;
            break;
          }
        if (!found) {
          c.pass = false;
          c.witness = "(" + plabel(X, x) + "," + plabel(X, y) + ")";
        }
      }
  }
  {
    Check& c = r.add("order/perp-up-closed");
    for (int x = 0; x < n && c.pass; ++x)
      X.perp[static_cast<std::size_t>(x)].for_each([&](int z) {
        if (!c.pass) return;
        rows[static_cast<std::size_t>(x)].for_each([&](int y) {
          if (!c.pass) return;
          if (!X.perp[static_cast<std::size_t>(y)].test(z)) {
            c.pass = false;
            c.witness = "(" + plabel(X, x) + "," + plabel(X, y) + "," + plabel(X, z) + ")";
          }
        });
      });
  }
  return {std::move(rows), std::move(r)};
}

FiniteOrthoSpace make_space(const OrthoFrame& X, const Budget& budget) {
  FiniteOrthoSpace s;
  s.frame = X;
  s.closed = closed_set_lattice(X, budget);
  s.order_up = derive_order(X, budget).first;
  return s;
}

FiniteOrthoSpace make_space_with_order(const OrthoFrame& X, std::vector<Bitset> order,
                                       const Budget& budget) {
  FiniteOrthoSpace s;
  s.frame = X;
  s.closed = closed_set_lattice(X, budget);
  s.order_up = std::move(order);
  return s;
}

Report validate_orthospace(const FiniteOrthoSpace& X) {
  Report r;
  r.subject = (X.frame.name.empty() ? "space" : X.frame.name);
  r.absorb(validate_orthoframe(X.frame), "frame/");
  const int n = X.size();
  {
    Check& c = r.add("structure/order-total", CheckKind::structure);
    if (X.order_up.size() != static_cast<std::size_t>(n)) {
      c.pass = false;
      c.witness = "order has " + std::to_string(X.order_up.size()) + " rows, expected " +
                  std::to_string(n);
      return r;
    }
  }
  if (!r.ok()) return r;
  auto leq = [&](int x, int y) { return X.order_up[static_cast<std::size_t>(x)].test(y); };
  {
    Check& c = r.add("order/reflexive");
    for (int x = 0; x < n && c.pass; ++x)
      if (!leq(x, x)) {
        c.pass = false;
        c.witness = plabel(X.frame, x);
      }
  }
  {
    Check& c = r.add("order/transitive");
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y)
        if (leq(x, y) &&
            !X.order_up[static_cast<std::size_t>(y)].subset_of(X.order_up[static_cast<std::size_t>(x)])) {
          c.pass = false;
          c.witness = "(" + plabel(X.frame, x) + "," + plabel(X.frame, y) + ")";
        }
  }
  {
    Check& c = r.add("order/antisymmetric");
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = x + 1; y < n && c.pass; ++y)
        if (leq(x, y) && leq(y, x)) {
          c.pass = false;
          c.witness = "(" + plabel(X.frame, x) + "," + plabel(X.frame, y) + ")";
        }
  }
  {
    // (1) if x is not below y, some closed U holds x and misses y.
    Check& c = r.add("space/separation");
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y) {
        if (leq(x, y)) continue;
        bool found = false;
        for (const auto& U : X.closed.sets)
          if (U.test(x) && !U.test(y)) {
            found = true;
            break;
          }
        if (!found) {
          c.pass = false;
          c.witness = "(" + plabel(X.frame, x) + "," + plabel(X.frame, y) + ")";
        }
      }
  }
  {
    // (2) x ⊥ z and x <= y imply y ⊥ z.
    Check& c = r.add("space/perp-up-closed");
    for (int x = 0; x < n && c.pass; ++x)
      X.frame.perp[static_cast<std::size_t>(x)].for_each([&](int z) {
        if (!c.pass) return;
        X.order_up[static_cast<std::size_t>(x)].for_each([&](int y) {
          if (!c.pass) return;
          if (!X.frame.perp[static_cast<std::size_t>(y)].test(z)) {
            c.pass = false;
            c.witness = "(" + plabel(X.frame, x) + "," + plabel(X.frame, y) + "," +
                        plabel(X.frame, z) + ")";
          }
        });
      });
  }
  {
    // (3) closed sets are closed under orthogonal.
    Check& c = r.add("space/closed-under-orthogonal");
    for (const auto& U : X.closed.sets) {
      if (X.closed.index_of(orthogonal(X.frame, U)) < 0) {
        c.pass = false;
        c.witness = set_label(U, X.frame.labels);
        break;
      }
    }
  }
  {
    // (4) if x ⊥ y, some closed U has x ∈ U and y ∈ U^⊥.
    Check& c = r.add("space/orthogonality-witnessed");
    for (int x = 0; x < n && c.pass; ++x)
      X.frame.perp[static_cast<std::size_t>(x)].for_each([&](int y) {
        if (!c.pass) return;
        bool found = false;
        for (const auto& U : X.closed.sets)
          if (U.test(x) && orthogonal(X.frame, U).test(y)) {
            found = true;
            break;
          }
        if (!found) {
          c.pass = false;
          c.witness = "(" + plabel(X.frame, x) + "," + plabel(X.frame, y) + ")";
        }
      });
  }
  {
    // Stored order agrees with x <= y iff y ∈ {x}^⊥⊥.
    Check& c = r.add("space/order-is-biorthogonal-order");
    for (int x = 0; x < n && c.pass; ++x) {
      Bitset derived = biorthogonal(X.frame, Bitset::single(static_cast<std::size_t>(n), x));
      if (!(derived == X.order_up[static_cast<std::size_t>(x)])) {
        c.pass = false;
        c.witness = plabel(X.frame, x);
      }
    }
  }
  return r;
}

Report validate_monadic_orthospace(const FiniteOrthoSpace& X) {
  Report r = validate_orthospace(X);
  r.subject += "/monadic";
  {
    Check& c = r.add("structure/rel-present", CheckKind::structure);
    if (!X.frame.monadic()) {
      c.pass = false;
      c.witness = "no additional relation";
      return r;
    }
  }
  {
    Report fr = validate_monadic_frame(X.frame);
    for (const auto& c : fr.checks)
      if (c.name.rfind("rel/", 0) == 0) r.checks.push_back(c);
  }
  {
    Check& c = r.add("space/rel-image-closed");
    for (const auto& U : X.closed.sets) {
      if (X.closed.index_of(rel_image(*X.frame.rel, U)) < 0) {
        c.pass = false;
        c.witness = set_label(U, X.frame.labels);
        break;
      }
    }
  }
  return r;
}

OSMorphism identity_morphism(const FiniteOrthoSpace& X) {
  OSMorphism m{&X, &X, std::vector<int>(static_cast<std::size_t>(X.size()))};
  for (int x = 0; x < X.size(); ++x) m.map[static_cast<std::size_t>(x)] = x;
  return m;
}

OSMorphism compose(const OSMorphism& g, const OSMorphism& f) {
  OSMorphism h{f.source, g.target, std::vector<int>(f.map.size())};
  for (std::size_t p = 0; p < f.map.size(); ++p)
    h.map[p] = g.map[static_cast<std::size_t>(f.map[p])];
  return h;
}

Report validate_os_morphism(const OSMorphism& phi) {
  Report r;
  const FiniteOrthoSpace& P = *phi.source;
  const FiniteOrthoSpace& X = *phi.target;
  r.subject = (P.frame.name.empty() ? "space" : P.frame.name) + " -> " +
              (X.frame.name.empty() ? "space" : X.frame.name);
  {
    Check& c = r.add("structure/map-total", CheckKind::structure);
    if (phi.map.size() != static_cast<std::size_t>(P.size())) {
      c.pass = false;
      c.witness = "map is not total";
      return r;
    }
    for (int v : phi.map)
      if (v < 0 || v >= X.size()) {
        c.pass = false;
        c.witness = "image out of range";
        return r;
      }
  }
  {
    Check& c = r.add("continuity", CheckKind::note);
    c.detail = "finite discrete topology: every map is continuous";
  }
  {
    // (1) φ(p) ⊥ φ(q) implies p ⊥ q.
    Check& c = r.add("morphism/orthogonality-reflecting");
    for (int p = 0; p < P.size() && c.pass; ++p)
      for (int q = 0; q < P.size() && c.pass; ++q)
        if (X.frame.perp[static_cast<std::size_t>(phi(p))].test(phi(q)) &&
            !P.frame.perp[static_cast<std::size_t>(p)].test(q)) {
          c.pass = false;
          c.witness = "(" + plabel(P.frame, p) + "," + plabel(P.frame, q) + ")";
        }
  }
  {
    // (2) x not ⊥ φ(p) implies some q with q not ⊥ p and φ(q) ∈ {x}^⊥⊥.
    Check& c = r.add("morphism/biorthogonal-witness");
    for (int x = 0; x < X.size() && c.pass; ++x) {
      Bitset xcl = biorthogonal(X.frame, Bitset::single(static_cast<std::size_t>(X.size()), x));
      for (int p = 0; p < P.size() && c.pass; ++p) {
        if (X.frame.perp[static_cast<std::size_t>(x)].test(phi(p))) continue;
        bool found = false;
        for (int q = 0; q < P.size() && !found; ++q)
          if (!P.frame.perp[static_cast<std::size_t>(q)].test(p) && xcl.test(phi(q))) found = true;
        if (!found) {
          c.pass = false;
          c.witness = "(" + plabel(X.frame, x) + "," + plabel(P.frame, p) + ")";
        }
      }
    }
  }
  if (P.monadic() && X.monadic()) {
    // R[φ⁻¹[U]] = φ⁻¹[R[U]] for every closed U of the target.
    Check& c = r.add("morphism/rel-preimage-exchange");
    for (const auto& U : X.closed.sets) {
      Bitset pre(static_cast<std::size_t>(P.size()));
      for (int p = 0; p < P.size(); ++p)
        if (U.test(phi(p))) pre.set(p);
      Bitset lhs = rel_image(*P.frame.rel, pre);
      Bitset rimg = rel_image(*X.frame.rel, U);
      Bitset rhs(static_cast<std::size_t>(P.size()));
      for (int p = 0; p < P.size(); ++p)
        if (rimg.test(phi(p))) rhs.set(p);
      if (!(lhs == rhs)) {
        c.pass = false;
        c.witness = set_label(U, X.frame.labels);
        break;
      }
    }
  }
  return r;
}

int FilterSpace::point_of(const Bitset& f) const {
  auto it = std::lower_bound(filters.begin(), filters.end(), f);
  if (it == filters.end() || !(*it == f)) return -1;
  return static_cast<int>(it - filters.begin());
}

FilterSpace filter_space(const FiniteOrthoLattice& L, const Budget& budget) {
  GoldblattFrame gf = L.monadic() ? goldblatt_monadic_frame(L) : goldblatt_frame(L);
  FilterSpace fs;
  fs.space = make_space(gf.frame, budget);
  fs.filters = std::move(gf.filters);
  return fs;
}

OSMorphism functor_F(const LatticeHom& f, const FilterSpace& FL, const FilterSpace& FM) {
  const FiniteOrthoLattice& L = *f.source;
  OSMorphism phi{&FM.space, &FL.space, {}};
  phi.map.reserve(FM.filters.size());
  for (const auto& y : FM.filters) {
    Bitset pre(static_cast<std::size_t>(L.size()));
    for (int a = 0; a < L.size(); ++a)
      if (y.test(f.map[static_cast<std::size_t>(a)])) pre.set(a);
    int p = FL.point_of(pre);
    assert_found(p, "preimage of a proper filter is not a proper filter");
    phi.map.push_back(p);
  }
  return phi;
}

LatticeHom functor_C(const OSMorphism& phi) {
  const FiniteOrthoSpace& P = *phi.source;
  const FiniteOrthoSpace& X = *phi.target;
  LatticeHom h{&X.closed.lattice, &P.closed.lattice, {}};
  h.map.reserve(X.closed.sets.size());
  for (const auto& U : X.closed.sets) {
    Bitset pre(static_cast<std::size_t>(P.size()));
    for (int p = 0; p < P.size(); ++p)
      if (U.test(phi(p))) pre.set(p);
    int idx = P.closed.index_of(pre);
    assert_found(idx, "preimage of a closed set under a morphism is not closed");
    h.map.push_back(idx);
  }
  return h;
}

LatticeHom unit_h(const FiniteOrthoLattice& L, const FilterSpace& FL) {
  LatticeHom h{&L, &FL.space.closed.lattice, {}};
  h.map.reserve(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) {
    Bitset ha(FL.filters.size());
    for (std::size_t x = 0; x < FL.filters.size(); ++x)
      if (FL.filters[x].test(a)) ha.set(static_cast<int>(x));
    int idx = FL.space.closed.index_of(ha);
    assert_found(idx, "filter-membership set of " + L.label(a) + " is not closed");
    h.map.push_back(idx);
  }
  return h;
}

OSMorphism unit_g(const FiniteOrthoSpace& X, const FilterSpace& FCX) {
  OSMorphism g{&X, &FCX.space, {}};
  g.map.reserve(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    Bitset gx(X.closed.sets.size());
    for (std::size_t u = 0; u < X.closed.sets.size(); ++u)
      if (X.closed.sets[u].test(x)) gx.set(static_cast<int>(u));
    int p = FCX.point_of(gx);
    assert_found(p, "point filter of " + plabel(X.frame, x) + " is not a proper filter");
    g.map.push_back(p);
  }
  return g;
}

SobrietyResult is_ortho_sober(const FiniteOrthoSpace& X, const Budget& budget) {
  (void)budget;
  SobrietyResult res;
  auto filters = enumerate_proper_filters(X.closed.lattice).filters;
  std::vector<Bitset> realized;
  realized.reserve(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    Bitset gx(X.closed.sets.size());
    for (std::size_t u = 0; u < X.closed.sets.size(); ++u)
      if (X.closed.sets[u].test(x)) gx.set(static_cast<int>(u));
    realized.push_back(gx);
  }
  std::sort(realized.begin(), realized.end());
  res.sober = true;
  for (const auto& f : filters)
    if (!std::binary_search(realized.begin(), realized.end(), f)) {
      res.sober = false;
      res.witness = f;
      break;
    }
  return res;
}

OSMorphism transpose_minus(const LatticeHom& f, const FiniteOrthoSpace& X, const FilterSpace& FL) {
  const FiniteOrthoLattice& L = *f.source;
  OSMorphism phi{&X, &FL.space, {}};
  phi.map.reserve(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    Bitset fx(static_cast<std::size_t>(L.size()));
    for (int a = 0; a < L.size(); ++a)
      if (X.closed.sets[static_cast<std::size_t>(f.map[static_cast<std::size_t>(a)])].test(x))
        fx.set(a);
    int p = FL.point_of(fx);
    assert_found(p, "lower transpose image is not a proper filter");
    phi.map.push_back(p);
  }
  return phi;
}

LatticeHom transpose_plus(const OSMorphism& phi, const FiniteOrthoLattice& L,
                          const FilterSpace& FL) {
  const FiniteOrthoSpace& X = *phi.source;
  LatticeHom f{&L, &X.closed.lattice, {}};
  f.map.reserve(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) {
    Bitset fa(static_cast<std::size_t>(X.size()));
    for (int x = 0; x < X.size(); ++x)
      if (FL.filters[static_cast<std::size_t>(phi(x))].test(a)) fa.set(x);
    int idx = X.closed.index_of(fa);
    assert_found(idx, "upper transpose image of " + L.label(a) + " is not closed");
    f.map.push_back(idx);
  }
  return f;
}

std::vector<std::vector<int>> enumerate_os_morphisms(const FiniteOrthoSpace& P,
                                                     const FiniteOrthoSpace& X,
                                                     const Budget& budget, Exec exec) {
  const int np = P.size();
  const int nx = X.size();
  std::atomic<std::size_t> leaves{0};
  std::atomic<bool> over{false};

  auto consistent = [&](const std::vector<int>& img, int p) {
    for (int q = 0; q < p; ++q) {
      bool img_perp = X.frame.perp[static_cast<std::size_t>(img[static_cast<std::size_t>(p)])]
                          .test(img[static_cast<std::size_t>(q)]);
      if (img_perp && !P.frame.perp[static_cast<std::size_t>(p)].test(q)) return false;
    }
    return true;
  };

  auto search = [&](std::vector<int>& img, int depth, auto&& self,
                    std::vector<std::vector<int>>& out) -> void {
    if (over.load(std::memory_order_relaxed)) return;
    if (depth == np) {
      if (leaves.fetch_add(1) + 1 > budget.max_candidates) {
        over.store(true);
        return;
      }
      OSMorphism phi{&P, &X, img};
      if (validate_os_morphism(phi).ok()) out.push_back(img);
      return;
    }
    for (int v = 0; v < nx; ++v) {
      img[static_cast<std::size_t>(depth)] = v;
      if (consistent(img, depth)) self(img, depth + 1, self, out);
    }
  };

  std::vector<std::vector<int>> result;
  if (np == 0) {
    std::vector<int> img;
    OSMorphism phi{&P, &X, img};
    if (validate_os_morphism(phi).ok()) result.push_back(img);
  } else if (exec == Exec::serial) {
    std::vector<int> img(static_cast<std::size_t>(np), -1);
    search(img, 0, search, result);
  } else {
    std::vector<std::vector<std::vector<int>>> local(static_cast<std::size_t>(nx));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int v = 0; v < nx; ++v) {
      std::vector<int> img(static_cast<std::size_t>(np), -1);
      img[0] = v;
      if (consistent(img, 0)) search(img, 1, search, local[static_cast<std::size_t>(v)]);
    }
    for (auto& chunk : local)
      for (auto& m : chunk) result.push_back(std::move(m));
  }
  if (over.load())
    throw BudgetError("morphism search exceeds " + std::to_string(budget.max_candidates) +
                      " candidates");
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> enumerate_os_morphisms_raw(const FiniteOrthoSpace& P,
                                                         const FiniteOrthoSpace& X,
                                                         const Budget& budget, Exec exec) {
  return kernels::filter_maps(
      static_cast<std::size_t>(P.size()), static_cast<std::size_t>(X.size()), budget.max_raw_maps,
      [&](const std::vector<int>& map) {
        OSMorphism phi{&P, &X, map};
        return validate_os_morphism(phi).ok();
      },
      exec);
}

Report verify_adjunction(const FiniteOrthoLattice& L, const FiniteOrthoSpace& X,
                         const Budget& budget,
                         const std::vector<const FiniteOrthoSpace*>& space_family,
                         const std::vector<const FiniteOrthoLattice*>& lattice_family) {
  Report r;
  r.subject = "adjunction(" + (L.name().empty() ? "lattice" : L.name()) + ", " +
              (X.frame.name.empty() ? "space" : X.frame.name) + ")";
  {
    Check& c = r.add("structure/kind-match", CheckKind::structure);
    if (L.monadic() != X.monadic()) {
      c.pass = false;
      c.witness = "lattice and space are not both monadic or both plain";
      return r;
    }
  }

  FilterSpace FL = filter_space(L, budget);
  FilterSpace FCX = filter_space(X.closed.lattice, budget);

  auto homol = enumerate_homomorphisms(L, X.closed.lattice, budget);
  auto homos = enumerate_os_morphisms(X, FL.space, budget);
  r.add("homsets/enumerated", CheckKind::note).detail =
      "algebra side " + std::to_string(homol.size()) + ", space side " +
      std::to_string(homos.size());
  {
    Check& c = r.add("bijection/sizes-equal");
    if (homol.size() != homos.size()) {
      c.pass = false;
      c.witness = std::to_string(homol.size()) + " ≠ " + std::to_string(homos.size());
    }
  }

  OSMorphism gx = unit_g(X, FCX);
  std::vector<std::vector<int>> minus_images;
  {
    Check& c = r.add("transpose/lower-into-homset");
    Check& cr = r.add("transpose/lower-then-upper-identity");
    Check& cc = r.add("transpose/lower-is-functor-after-unit");
    for (const auto& fm : homol) {
      LatticeHom f{&L, &X.closed.lattice, fm};
      OSMorphism phi = transpose_minus(f, X, FL);
      minus_images.push_back(phi.map);
      if (c.pass && !std::binary_search(homos.begin(), homos.end(), phi.map)) {
        c.pass = false;
        c.witness = "transpose of a homomorphism is not an enumerated morphism";
      }
      if (cr.pass && !(transpose_plus(phi, L, FL).map == fm)) {
        cr.pass = false;
        cr.witness = "f⁻⁺ ≠ f";
      }
      if (cc.pass) {
        OSMorphism via_unit = compose(functor_F(f, FL, FCX), gx);
        if (!(via_unit.map == phi.map)) {
          cc.pass = false;
          cc.witness = "f⁻ ≠ F(f)∘g";
        }
      }
    }
  }
  LatticeHom hl = unit_h(L, FL);
  {
    Check& c = r.add("transpose/upper-into-homset");
    Check& cr = r.add("transpose/upper-then-lower-identity");
    Check& cc = r.add("transpose/upper-is-functor-after-unit");
    for (const auto& pm : homos) {
      OSMorphism phi{&X, &FL.space, pm};
      LatticeHom f = transpose_plus(phi, L, FL);
      if (c.pass && !std::binary_search(homol.begin(), homol.end(), f.map)) {
        c.pass = false;
        c.witness = "transpose of a morphism is not an enumerated homomorphism";
      }
      if (cr.pass && !(transpose_minus(f, X, FL).map == pm)) {
        cr.pass = false;
        cr.witness = "φ⁺⁻ ≠ φ";
      }
      if (cc.pass) {
        LatticeHom via_unit = compose(functor_C(phi), hl);
        if (!(via_unit.map == f.map)) {
          cc.pass = false;
          cc.witness = "φ⁺ ≠ C(φ)∘h";
        }
      }
    }
  }
  {
    Check& c = r.add("bijection/lower-transpose-is-onto");
    std::sort(minus_images.begin(), minus_images.end());
    if (!(minus_images == homos)) {
      c.pass = false;
      c.witness = "lower transposes do not exhaust the space-side hom-set";
    }
  }

  std::vector<const FiniteOrthoSpace*> sfam = space_family;
  if (sfam.empty()) sfam.push_back(&X);
  std::vector<const FiniteOrthoLattice*> lfam = lattice_family;
  if (lfam.empty()) lfam.push_back(&L);

  {
    // (α∘ψ)⁺ = C(ψ)∘α⁺ for ψ : X' -> X.
    Check& c = r.add("naturality/space-coordinate");
    std::size_t triples = 0;
    for (const auto& am : homos) {
      OSMorphism alpha{&X, &FL.space, am};
      LatticeHom alpha_plus = transpose_plus(alpha, L, FL);
      for (const FiniteOrthoSpace* Xp : sfam) {
        if (Xp->monadic() != X.monadic()) continue;
        for (const auto& psim : enumerate_os_morphisms(*Xp, X, budget)) {
          OSMorphism psi{Xp, &X, psim};
          ++triples;
          LatticeHom lhs = transpose_plus(compose(alpha, psi), L, FL);
          LatticeHom rhs = compose(functor_C(psi), alpha_plus);
          if (!(lhs.map == rhs.map)) {
            c.pass = false;
            c.witness = "(α∘ψ)⁺ ≠ C(ψ)∘α⁺";
          }
          if (!c.pass) break;
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    c.detail = std::to_string(triples) + " triples";
  }
  {
    // (F(f)∘α)⁺ = α⁺∘f for f : L' -> L.
    Check& c = r.add("naturality/lattice-coordinate");
    std::size_t triples = 0;
    for (const FiniteOrthoLattice* Lp : lfam) {
      if (Lp->monadic() != L.monadic()) continue;
      FilterSpace FLp = filter_space(*Lp, budget);
      for (const auto& fm : enumerate_homomorphisms(*Lp, L, budget)) {
        LatticeHom f{Lp, &L, fm};
        OSMorphism Ff = functor_F(f, FLp, FL);
        for (const auto& am : homos) {
          OSMorphism alpha{&X, &FL.space, am};
          ++triples;
          LatticeHom lhs = transpose_plus(compose(Ff, alpha), *Lp, FLp);
          LatticeHom rhs = compose(transpose_plus(alpha, L, FL), f);
          if (!(lhs.map == rhs.map)) {
            c.pass = false;
            c.witness = "(F(f)∘α)⁺ ≠ α⁺∘f";
          }
          if (!c.pass) break;
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    c.detail = std::to_string(triples) + " triples";
  }
  return r;
}

Report verify_dual_equivalence(const std::vector<const FiniteOrthoLattice*>& lattices,
                               const std::vector<const FiniteOrthoSpace*>& spaces,
                               const Budget& budget) {
  Report r;
  r.subject = "dual-equivalence";
  {
    Check& c = r.add("unit-h/isomorphism");
    for (const FiniteOrthoLattice* L : lattices) {
      FilterSpace FL = filter_space(*L, budget);
      LatticeHom h = unit_h(*L, FL);
      Check hc = is_homomorphism(h);
      bool inj = true;
      std::vector<int> sorted = h.map;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) inj = false;
      bool surj = static_cast<int>(h.map.size()) == FL.space.closed.lattice.size();
      if (!hc.pass || !inj || !surj) {
        c.pass = false;
        c.witness = (L->name().empty() ? "lattice" : L->name()) +
                    (hc.pass ? (inj ? " (not surjective)" : " (not injective)")
                             : " (" + hc.witness + ")");
        break;
      }
    }
  }
  {
    Check& csob = r.add("spaces/ortho-sober");
    Check& ciso = r.add("unit-g/isomorphism-with-morphism-inverse");
    for (const FiniteOrthoSpace* X : spaces) {
      SobrietyResult sob = is_ortho_sober(*X, budget);
      if (!sob.sober) {
        csob.pass = false;
        csob.witness = X->frame.name + " unrealized filter " +
                       set_label(*sob.witness, X->closed.lattice.labels());
        break;
      }
      FilterSpace FCX = filter_space(X->closed.lattice, budget);
      OSMorphism g = unit_g(*X, FCX);
      if (!validate_os_morphism(g).ok()) {
        ciso.pass = false;
        ciso.witness = X->frame.name + " (unit is not a morphism)";
        break;
      }
      // Bijectivity plus a two-sided inverse that is itself a morphism.
      std::vector<int> inverse(static_cast<std::size_t>(FCX.space.size()), -1);
      bool bij = static_cast<int>(FCX.space.size()) == X->size();
      for (int x = 0; x < X->size() && bij; ++x) {
        if (inverse[static_cast<std::size_t>(g(x))] != -1)
          bij = false;
        else
          inverse[static_cast<std::size_t>(g(x))] = x;
      }
      if (!bij) {
        ciso.pass = false;
        ciso.witness = X->frame.name + " (unit not bijective)";
        break;
      }
      OSMorphism ginv{&FCX.space, X, inverse};
      if (!validate_os_morphism(ginv).ok()) {
        ciso.pass = false;
        ciso.witness = X->frame.name + " (inverse is not a morphism)";
        break;
      }
      if (!(compose(ginv, g).map == identity_morphism(*X).map) ||
          !(compose(g, ginv).map == identity_morphism(FCX.space).map)) {
        ciso.pass = false;
        ciso.witness = X->frame.name + " (inverse is not two-sided)";
        break;
      }
    }
  }
  return r;
}

}  // namespace ortho
