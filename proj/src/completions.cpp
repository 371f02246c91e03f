#include "orthokit/completions.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

namespace ortho {
namespace {

std::string frame_name(const std::string& base, const FiniteOrthoLattice& L) {
  return base + "(" + (L.name().empty() ? "lattice" : L.name()) + ")";
}

void assert_ok(const Report& r, const char* what) {
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw InconsistencyError(std::string(what) + ": " + f->name +
                             (f->witness.empty() ? "" : " at " + f->witness));
  }
}

}  // namespace

MacLarenFrame maclaren_frame(const FiniteOrthoLattice& L) {
  if (L.size() < 2)
    throw StructureError("dual frame of the one-element lattice is degenerate");
  MacLarenFrame out;
  out.point.assign(static_cast<std::size_t>(L.size()), -1);
  for (int a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    out.point[static_cast<std::size_t>(a)] = static_cast<int>(out.elem.size());
    out.elem.push_back(a);
  }
  const std::size_t n = out.elem.size();
  out.frame.name = frame_name("L*", L);
  out.frame.labels.reserve(n);
  for (int a : out.elem) out.frame.labels.push_back(L.label(a));
  out.frame.perp.assign(n, Bitset(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (L.leq(out.elem[p], L.ortho(out.elem[q]))) out.frame.perp[p].set(static_cast<int>(q));
  assert_ok(validate_orthoframe(out.frame), "element frame is not an orthoframe");
  return out;
}

MacLarenFrame maclaren_monadic_frame(const FiniteOrthoLattice& L) {
  require_quantifier(L);
  MacLarenFrame out = maclaren_frame(L);
  const std::size_t n = out.elem.size();
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (L.leq(out.elem[q], L.exists_of(out.elem[p]))) rel[p].set(static_cast<int>(q));
  out.frame.rel = std::move(rel);
  assert_ok(validate_monadic_frame(out.frame), "element frame is not a monadic orthoframe");
  return out;
}

int FilterSet::index_of(const Bitset& f) const {
  auto it = std::lower_bound(filters.begin(), filters.end(), f);
  if (it == filters.end() || !(*it == f)) return -1;
  return static_cast<int>(it - filters.begin());
}

Bitset filter_generated(const FiniteOrthoLattice& L, const Bitset& gens) {
  Bitset s = gens;
  s.set(L.top());
  bool grew = true;
  while (grew) {
    grew = false;
    Bitset next = s;
    s.for_each([&](int a) { next |= L.up(a); });
    s.for_each([&](int a) {
      s.for_each([&](int b) { next.set(L.meet(a, b)); });
    });
    if (!(next == s)) {
      s = next;
      grew = true;
    }
  }
  return s;
}

Bitset ideal_generated(const FiniteOrthoLattice& L, const Bitset& gens) {
  Bitset s = gens;
  s.set(L.bottom());
  bool grew = true;
  while (grew) {
    grew = false;
    Bitset next = s;
    s.for_each([&](int a) { next |= L.down(a); });
    s.for_each([&](int a) {
      s.for_each([&](int b) { next.set(L.join(a, b)); });
    });
    if (!(next == s)) {
      s = next;
      grew = true;
    }
  }
  return s;
}

namespace {

std::vector<Bitset> closure_grown_family(const FiniteOrthoLattice& L, const Bitset& seed,
                                         bool proper(const FiniteOrthoLattice&, const Bitset&),
                                         Bitset extend(const FiniteOrthoLattice&, const Bitset&,
                                                       int)) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Bitset> queue;
  if (proper(L, seed)) {
    seen.insert(seed);
    queue.push_back(seed);
  }
  while (!queue.empty()) {
    Bitset s = queue.front();
    queue.pop_front();
    for (int a = 0; a < L.size(); ++a) {
      if (s.test(a)) continue;
      Bitset t = extend(L, s, a);
      if (proper(L, t) && seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<Bitset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FilterSet enumerate_proper_filters(const FiniteOrthoLattice& L) {
  FilterSet out;
  out.filters = closure_grown_family(
      L, filter_generated(L, Bitset(static_cast<std::size_t>(L.size()))),
      [](const FiniteOrthoLattice& M, const Bitset& s) { return !s.test(M.bottom()); },
      [](const FiniteOrthoLattice& M, const Bitset& s, int a) {
        return filter_generated(M, Bitset::single(static_cast<std::size_t>(M.size()), a) | s);
      });
  return out;
}

std::vector<Bitset> enumerate_proper_ideals(const FiniteOrthoLattice& L) {
  return closure_grown_family(
      L, ideal_generated(L, Bitset(static_cast<std::size_t>(L.size()))),
      [](const FiniteOrthoLattice& M, const Bitset& s) { return !s.test(M.top()); },
      [](const FiniteOrthoLattice& M, const Bitset& s, int a) {
        return ideal_generated(M, Bitset::single(static_cast<std::size_t>(M.size()), a) | s);
      });
}

std::vector<Bitset> principal_filters(const FiniteOrthoLattice& L) {
  std::vector<Bitset> out;
  for (int a = 0; a < L.size(); ++a)
    if (a != L.bottom()) out.push_back(L.up(a));
  std::sort(out.begin(), out.end());
  return out;
}

Bitset exists_image(const FiniteOrthoLattice& L, const Bitset& filter) {
  Bitset out(static_cast<std::size_t>(L.size()));
  filter.for_each([&](int a) { out.set(L.exists_of(a)); });
  return out;
}

int GoldblattFrame::point_of(const Bitset& f) const {
  auto it = std::lower_bound(filters.begin(), filters.end(), f);
  if (it == filters.end() || !(*it == f)) return -1;
  return static_cast<int>(it - filters.begin());
}

GoldblattFrame goldblatt_frame(const FiniteOrthoLattice& L) {
  GoldblattFrame out;
  out.filters = enumerate_proper_filters(L).filters;
  const std::size_t n = out.filters.size();
  out.frame.name = frame_name("F", L);
  out.frame.labels.reserve(n);
  for (const auto& f : out.filters)
    out.frame.labels.push_back("^" + L.label(L.meet_of(f)));
  out.frame.perp.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool orth = false;
      out.filters[x].for_each([&](int a) {
        if (!orth && out.filters[y].test(L.ortho(a))) orth = true;
      });
      if (orth) out.frame.perp[x].set(static_cast<int>(y));
    }
  assert_ok(validate_orthoframe(out.frame), "filter frame is not an orthoframe");
  return out;
}

GoldblattFrame goldblatt_monadic_frame(const FiniteOrthoLattice& L) {
  require_quantifier(L);
  GoldblattFrame out = goldblatt_frame(L);
  const std::size_t n = out.filters.size();
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    Bitset ex = exists_image(L, out.filters[x]);
    for (std::size_t y = 0; y < n; ++y)
      if (ex.subset_of(out.filters[y])) rel[x].set(static_cast<int>(y));
  }
  out.frame.rel = std::move(rel);
  assert_ok(validate_monadic_frame(out.frame), "filter frame is not a monadic orthoframe");
  return out;
}

CompletionWitness embedding_g(const FiniteOrthoLattice& L) {
  MacLarenFrame mf = L.monadic() ? maclaren_monadic_frame(L) : maclaren_frame(L);
  CompletionWitness w;
  w.source = L;
  w.frame = mf.frame;
  w.target = closed_set_lattice(mf.frame);
  w.kind = CompletionKind::macneille;
  w.embed.assign(static_cast<std::size_t>(L.size()), -1);
  const std::size_t n = mf.elem.size();
  for (int a = 0; a < L.size(); ++a) {
    Bitset g(n);
    for (std::size_t p = 0; p < n; ++p)
      if (L.leq(mf.elem[p], a)) g.set(static_cast<int>(p));
    int idx = w.target.index_of(g);
    if (idx < 0)
      throw InconsistencyError("down-set image of " + L.label(a) + " is not closed");
    w.embed[static_cast<std::size_t>(a)] = idx;
  }
  return w;
}

CompletionWitness embedding_h(const FiniteOrthoLattice& L) {
  GoldblattFrame gf = L.monadic() ? goldblatt_monadic_frame(L) : goldblatt_frame(L);
  CompletionWitness w;
  w.source = L;
  w.frame = gf.frame;
  w.target = closed_set_lattice(gf.frame);
  w.kind = CompletionKind::canonical;
  w.embed.assign(static_cast<std::size_t>(L.size()), -1);
  const std::size_t n = gf.filters.size();
  for (int a = 0; a < L.size(); ++a) {
    Bitset h(n);
    for (std::size_t x = 0; x < n; ++x)
      if (gf.filters[x].test(a)) h.set(static_cast<int>(x));
    int idx = w.target.index_of(h);
    if (idx < 0)
      throw InconsistencyError("filter-membership image of " + L.label(a) + " is not closed");
    w.embed[static_cast<std::size_t>(a)] = idx;
  }
  return w;
}

namespace {

void check_embedding(Report& r, const CompletionWitness& w) {
  {
    Check& c = r.add("embedding/injective");
    std::vector<int> sorted = w.embed;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size() && c.pass; ++i)
      if (sorted[i] == sorted[i + 1]) {
        c.pass = false;
        c.witness = "two elements share image " +
                    w.target.lattice.label(sorted[i]);
      }
  }
  {
    LatticeHom e{&w.source, &w.target.lattice, w.embed};
    Check hom = is_homomorphism(e);
    Check& c = r.add("embedding/homomorphism");
    c.pass = hom.pass;
    c.witness = hom.witness;
  }
}

Bitset image_below(const CompletionWitness& w, int x) {
  // Elements of the source whose image sits below target element x.
  Bitset out(static_cast<std::size_t>(w.source.size()));
  for (int a = 0; a < w.source.size(); ++a)
    if (w.target.lattice.leq(w.embed[static_cast<std::size_t>(a)], x)) out.set(a);
  return out;
}

Bitset image_above(const CompletionWitness& w, int x) {
  Bitset out(static_cast<std::size_t>(w.source.size()));
  for (int a = 0; a < w.source.size(); ++a)
    if (w.target.lattice.leq(x, w.embed[static_cast<std::size_t>(a)])) out.set(a);
  return out;
}

}  // namespace

Report verify_macneille(const CompletionWitness& w) {
  Report r;
  r.subject = (w.source.name().empty() ? "lattice" : w.source.name()) + "/macneille";
  {
    Check& c = r.add("kind/macneille", CheckKind::structure);
    if (w.kind != CompletionKind::macneille) {
      c.pass = false;
      c.witness = "witness is not a MacNeille witness";
      return r;
    }
  }
  check_embedding(r, w);
  const auto& T = w.target.lattice;
  {
    Check& c = r.add("density/every-element-a-join-of-images");
    for (int x = 0; x < T.size() && c.pass; ++x) {
      int acc = T.bottom();
      image_below(w, x).for_each(
          [&](int a) { acc = T.join(acc, w.embed[static_cast<std::size_t>(a)]); });
      if (acc != x) {
        c.pass = false;
        c.witness = T.label(x);
      }
    }
  }
  {
    Check& c = r.add("density/every-element-a-meet-of-images");
    for (int x = 0; x < T.size() && c.pass; ++x) {
      int acc = T.top();
      image_above(w, x).for_each(
          [&](int a) { acc = T.meet(acc, w.embed[static_cast<std::size_t>(a)]); });
      if (acc != x) {
        c.pass = false;
        c.witness = T.label(x);
      }
    }
  }
  {
    // x' = meet of e(a') over e(a) <= x.
    Check& c = r.add("formula/ortho-extension");
    for (int x = 0; x < T.size() && c.pass; ++x) {
      int acc = T.top();
      image_below(w, x).for_each([&](int a) {
        acc = T.meet(acc, w.embed[static_cast<std::size_t>(w.source.ortho(a))]);
      });
      if (acc != T.ortho(x)) {
        c.pass = false;
        c.witness = T.label(x);
      }
    }
  }
  if (w.source.monadic() && T.monadic()) {
    // ∃x = join of e(∃a) over e(a) <= x.
    Check& c = r.add("formula/exists-extension");
    for (int x = 0; x < T.size() && c.pass; ++x) {
      int acc = T.bottom();
      image_below(w, x).for_each([&](int a) {
        acc = T.join(acc, w.embed[static_cast<std::size_t>(w.source.exists_of(a))]);
      });
      if (acc != T.exists_of(x)) {
        c.pass = false;
        c.witness = T.label(x);
      }
    }
  }
  return r;
}

Report verify_canonical(const CompletionWitness& w, const Budget& budget) {
  Report r;
  r.subject = (w.source.name().empty() ? "lattice" : w.source.name()) + "/canonical";
  {
    Check& c = r.add("kind/canonical", CheckKind::structure);
    if (w.kind != CompletionKind::canonical) {
      c.pass = false;
      c.witness = "witness is not a canonical witness";
      return r;
    }
  }
  check_embedding(r, w);

  const FiniteOrthoLattice& L = w.source;
  const auto& T = w.target;
  const std::size_t carrier = static_cast<std::size_t>(w.frame.size());
  auto eset = [&](int a) -> const Bitset& {
    return T.sets[static_cast<std::size_t>(w.embed[static_cast<std::size_t>(a)])];
  };

  // Closed elements K: meets (intersections) of image subsets.
  std::vector<Bitset> image_sets;
  image_sets.reserve(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) image_sets.push_back(eset(a));
  std::vector<Bitset> K = kernels::intersection_closure(image_sets, Bitset::full(carrier),
                                                        budget.max_closed_sets, Exec::serial);
  // Their duals O: joins (bi-orthogonals of unions) of image subsets.
  std::vector<Bitset> O;
  {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::deque<Bitset> queue;
    auto admit = [&](const Bitset& s) {
      if (seen.insert(s).second) queue.push_back(s);
    };
    admit(Bitset(carrier));
    for (const auto& s : image_sets) admit(s);
    while (!queue.empty()) {
      Bitset s = queue.front();
      queue.pop_front();
      for (const auto& g : image_sets) admit(biorthogonal(w.frame, s | g));
    }
    O.assign(seen.begin(), seen.end());
    std::sort(O.begin(), O.end());
  }

  {
    Check& c = r.add("density/join-of-meets");
    for (std::size_t x = 0; x < T.sets.size() && c.pass; ++x) {
      Bitset u(carrier);
      for (const auto& k : K)
        if (k.subset_of(T.sets[x])) u |= k;
      if (!(biorthogonal(w.frame, u) == T.sets[x])) {
        c.pass = false;
        c.witness = T.lattice.label(static_cast<int>(x));
      }
    }
  }
  {
    Check& c = r.add("density/meet-of-joins");
    for (std::size_t x = 0; x < T.sets.size() && c.pass; ++x) {
      Bitset m = Bitset::full(carrier);
      for (const auto& o : O)
        if (T.sets[x].subset_of(o)) m &= o;
      if (!(m == T.sets[x])) {
        c.pass = false;
        c.witness = T.lattice.label(static_cast<int>(x));
      }
    }
  }

  auto meet_of_images = [&](const Bitset& S) {
    Bitset acc = Bitset::full(carrier);
    S.for_each([&](int a) { acc &= eset(a); });
    return acc;
  };
  auto join_of_images = [&](const Bitset& S) {
    Bitset acc(carrier);
    S.for_each([&](int a) { acc |= eset(a); });
    return biorthogonal(w.frame, acc);
  };

  {
    // Compactness via the filter/ideal criterion:
    // meet of e[S] below join of e[T] iff the filter generated by S meets
    // the ideal generated by T. Exhaustive over all (filter, ideal) pairs.
    Check& c = r.add("compactness/filter-ideal-criterion");
    auto filters = enumerate_proper_filters(L).filters;
    auto ideals = enumerate_proper_ideals(L);
    for (std::size_t i = 0; i < filters.size() && c.pass; ++i)
      for (std::size_t j = 0; j < ideals.size() && c.pass; ++j) {
        bool lhs = meet_of_images(filters[i]).subset_of(join_of_images(ideals[j]));
        bool rhs = filters[i].intersects(ideals[j]);
        if (lhs != rhs) {
          c.pass = false;
          c.witness = "(^" + L.label(L.meet_of(filters[i])) + ", v" +
                      L.label(L.join_of(ideals[j])) + ")";
        }
      }
  }
  {
    // Raw subset pairs: exhaustive when the pair space is small, sampled with
    // a fixed seed otherwise.
    Check& c = r.add("compactness/subset-pairs");
    auto check_pair = [&](const Bitset& S, const Bitset& Tset) {
      bool lhs = meet_of_images(S).subset_of(join_of_images(Tset));
      bool rhs = filter_generated(L, S).intersects(ideal_generated(L, Tset));
      return lhs == rhs;
    };
    const std::size_t n = static_cast<std::size_t>(L.size());
    if (n <= 8) {
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t s = 0; s < total && c.pass; ++s)
        for (std::uint64_t t = 0; t < total && c.pass; ++t) {
          Bitset S = Bitset::from_mask(n, s), Tset = Bitset::from_mask(n, t);
          if (!check_pair(S, Tset)) {
            c.pass = false;
            c.witness = "(" + set_label(S, L.labels()) + "," + set_label(Tset, L.labels()) + ")";
          }
        }
    } else {
      c.exhaustive = false;
      c.detail = "sampled " + std::to_string(budget.sample_pairs) + " pairs, seed " +
                 std::to_string(budget.seed);
      std::mt19937_64 rng(budget.seed);
      for (std::size_t i = 0; i < budget.sample_pairs && c.pass; ++i) {
        std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        Bitset S = Bitset::from_mask(n, rng() & mask);
        Bitset Tset = Bitset::from_mask(n, rng() & mask);
        if (!check_pair(S, Tset)) {
          c.pass = false;
          c.witness = "(" + set_label(S, L.labels()) + "," + set_label(Tset, L.labels()) + ")";
        }
      }
    }
  }

  {
    // x'^σ = meet over closed k <= x of (join of e(a') over k <= e(a)).
    Check& c = r.add("formula/sigma-ortho");
    for (std::size_t x = 0; x < T.sets.size() && c.pass; ++x) {
      Bitset acc = Bitset::full(carrier);
      for (const auto& k : K) {
        if (!k.subset_of(T.sets[x])) continue;
        Bitset inner(carrier);
        for (int a = 0; a < L.size(); ++a)
          if (k.subset_of(eset(a))) inner |= eset(L.ortho(a));
        acc &= biorthogonal(w.frame, inner);
      }
      if (!(acc == T.sets[static_cast<std::size_t>(T.lattice.ortho(static_cast<int>(x)))])) {
        c.pass = false;
        c.witness = T.lattice.label(static_cast<int>(x));
      }
    }
  }
  if (L.monadic() && T.lattice.monadic()) {
    // ∃^σ x = join over closed k <= x of (meet of e(∃a) over k <= e(a)).
    Check& c = r.add("formula/sigma-exists");
    for (std::size_t x = 0; x < T.sets.size() && c.pass; ++x) {
      Bitset acc(carrier);
      for (const auto& k : K) {
        if (!k.subset_of(T.sets[x])) continue;
        Bitset inner = Bitset::full(carrier);
        for (int a = 0; a < L.size(); ++a)
          if (k.subset_of(eset(a))) inner &= eset(L.exists_of(a));
        acc |= inner;
      }
      acc = biorthogonal(w.frame, acc);
      if (!(acc == T.sets[static_cast<std::size_t>(T.lattice.exists_of(static_cast<int>(x)))])) {
        c.pass = false;
        c.witness = T.lattice.label(static_cast<int>(x));
      }
    }
  }
  return r;
}

SRelation relation_S(const FiniteOrthoLattice& L) {
  SRelation out{goldblatt_monadic_frame(L), {}, {}};
  out.report.subject = (L.name().empty() ? "lattice" : L.name()) + "/exists-kernel-relation";
  const auto& gf = out.goldblatt;
  const std::size_t n = gf.filters.size();

  std::vector<Bitset> eimg;
  eimg.reserve(n);
  for (const auto& f : gf.filters) eimg.push_back(exists_image(L, f));
  out.s_rows.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (eimg[x] == eimg[y]) out.s_rows[x].set(static_cast<int>(y));

  Report& r = out.report;
  {
    Check& c = r.add("s/equivalence");
    for (std::size_t x = 0; x < n && c.pass; ++x) {
      if (!out.s_rows[x].test(static_cast<int>(x))) {
        c.pass = false;
        c.witness = gf.frame.labels[x] + " (not reflexive)";
        break;
      }
      out.s_rows[x].for_each([&](int y) {
        if (!c.pass) return;
        if (!out.s_rows[static_cast<std::size_t>(y)].test(static_cast<int>(x))) {
          c.pass = false;
          c.witness = "(" + gf.frame.labels[x] + "," + gf.frame.labels[static_cast<std::size_t>(y)] +
                      ") (not symmetric)";
        } else if (!(out.s_rows[static_cast<std::size_t>(y)] == out.s_rows[x])) {
          c.pass = false;
          c.witness = "(" + gf.frame.labels[x] + "," + gf.frame.labels[static_cast<std::size_t>(y)] +
                      ") (not transitive)";
        }
      });
    }
  }
  {
    // x R z iff some y has x S y and y included in z.
    Check& c = r.add("s/r-is-inclusion-after-s");
    std::vector<Bitset> incl(n, Bitset(n));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (gf.filters[y].subset_of(gf.filters[z])) incl[y].set(static_cast<int>(z));
    for (std::size_t x = 0; x < n && c.pass; ++x) {
      Bitset row(n);
      out.s_rows[x].for_each([&](int y) { row |= incl[static_cast<std::size_t>(y)]; });
      if (!(row == (*gf.frame.rel)[x])) {
        c.pass = false;
        c.witness = gf.frame.labels[x];
      }
    }
  }
  {
    Check& c = r.add("s/monadic-frame");
    OrthoFrame sframe = gf.frame;
    sframe.name += "/S";
    sframe.rel = out.s_rows;
    Report fr = validate_monadic_frame(sframe);
    c.pass = fr.ok();
    if (!c.pass) {
      const Check* f = fr.first_failure();
      c.witness = f->name + (f->witness.empty() ? "" : " at " + f->witness);
    }
  }
  {
    Check& c = r.add("s/quantifiers-agree");
    OrthoFrame plain = gf.frame;
    plain.rel.reset();
    for (const auto& A : enumerate_closed_sets(plain)) {
      Bitset via_r = biorthogonal(plain, rel_image(*gf.frame.rel, A));
      Bitset via_s = biorthogonal(plain, rel_image(out.s_rows, A));
      if (!(via_r == via_s)) {
        c.pass = false;
        c.witness = set_label(A, gf.frame.labels);
        break;
      }
    }
  }
  return out;
}

}  // namespace ortho
