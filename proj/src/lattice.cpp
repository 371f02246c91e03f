#include "orthokit/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ortho {
namespace {

std::string pair_label(const std::vector<std::string>& lab, int a, int b) {
  return "(" + lab[static_cast<std::size_t>(a)] + "," + lab[static_cast<std::size_t>(b)] + ")";
}

struct Analysis {
  Report report;
  std::vector<Bitset> down;
  kernels::Tables tables;
  int bottom = -1, top = -1;
  bool structural_ok = false;
};

Analysis analyze(const LatticeData& d, Exec exec) {
  Analysis an;
  Report& r = an.report;
  r.subject = d.name.empty() ? "lattice" : d.name;
  const int n = d.size();
  const std::size_t un = static_cast<std::size_t>(n);

  bool structure_ok = true;
  {
    Check& c = r.add("structure/elements-nonempty", CheckKind::structure);
    if (n == 0) {
      c.pass = false;
      c.witness = "no elements";
      structure_ok = false;
    }
  }
  {
    Check& c = r.add("structure/labels-distinct", CheckKind::structure);
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = a + 1; b < n && c.pass; ++b)
        if (d.labels[static_cast<std::size_t>(a)] == d.labels[static_cast<std::size_t>(b)]) {
          c.pass = false;
          c.witness = "duplicate label " + d.labels[static_cast<std::size_t>(a)];
        }
    structure_ok &= c.pass;
  }
  {
    Check& c = r.add("structure/order-total", CheckKind::structure);
    if (d.leq.size() != un) {
      c.pass = false;
      c.witness = "order relation has " + std::to_string(d.leq.size()) + " rows, expected " +
                  std::to_string(n);
    } else {
      for (int a = 0; a < n && c.pass; ++a)
        if (d.leq[static_cast<std::size_t>(a)].universe() != un) {
          c.pass = false;
          c.witness = "order row for " + d.labels[static_cast<std::size_t>(a)] + " has wrong size";
        }
    }
    structure_ok &= c.pass;
  }
  {
    Check& c = r.add("structure/ortho-total", CheckKind::structure);
    if (d.ortho.size() != un) {
      c.pass = false;
      c.witness = "orthocomplement map has " + std::to_string(d.ortho.size()) +
                  " entries, expected " + std::to_string(n);
    } else {
      for (int a = 0; a < n && c.pass; ++a) {
        int v = d.ortho[static_cast<std::size_t>(a)];
        if (v < 0 || v >= n) {
          c.pass = false;
          c.witness = "orthocomplement of " + d.labels[static_cast<std::size_t>(a)] +
                      " is undefined or out of range";
        }
      }
    }
    structure_ok &= c.pass;
  }
  if (d.exists) {
    Check& c = r.add("structure/exists-total", CheckKind::structure);
    if (d.exists->size() != un) {
      c.pass = false;
      c.witness = "quantifier map has " + std::to_string(d.exists->size()) +
                  " entries, expected " + std::to_string(n);
    } else {
      for (int a = 0; a < n && c.pass; ++a) {
        int v = (*d.exists)[static_cast<std::size_t>(a)];
        if (v < 0 || v >= n) {
          c.pass = false;
          c.witness = "quantifier image of " + d.labels[static_cast<std::size_t>(a)] +
                      " is undefined or out of range";
        }
      }
    }
    structure_ok &= c.pass;
  }
  if (!structure_ok) return an;
  an.structural_ok = true;

  const auto& lab = d.labels;
  const auto& up = d.leq;

  {
    Check& c = r.add("poset/reflexive");
    for (int a = 0; a < n && c.pass; ++a)
      if (!up[static_cast<std::size_t>(a)].test(a)) {
        c.pass = false;
        c.witness = lab[static_cast<std::size_t>(a)];
      }
  }
  {
    Check& c = r.add("poset/antisymmetric");
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = a + 1; b < n && c.pass; ++b)
        if (up[static_cast<std::size_t>(a)].test(b) && up[static_cast<std::size_t>(b)].test(a)) {
          c.pass = false;
          c.witness = pair_label(lab, a, b);
        }
  }
  {
    Check& c = r.add("poset/transitive");
    for (int a = 0; a < n && c.pass; ++a) {
      const Bitset& ua = up[static_cast<std::size_t>(a)];
      ua.for_each([&](int b) {
        if (!c.pass) return;
        if (!up[static_cast<std::size_t>(b)].subset_of(ua)) {
          Bitset extra = up[static_cast<std::size_t>(b)] - ua;
          c.pass = false;
          c.witness = "(" + lab[static_cast<std::size_t>(a)] + "," + lab[static_cast<std::size_t>(b)] +
                      "," + lab[static_cast<std::size_t>(extra.first())] + ")";
        }
      });
    }
  }

  an.down.assign(un, Bitset(un));
  for (int a = 0; a < n; ++a)
    up[static_cast<std::size_t>(a)].for_each([&](int b) { an.down[static_cast<std::size_t>(b)].set(a); });

  const Bitset everything = Bitset::full(un);
  {
    Check& c = r.add("bounds/bottom");
    for (int a = 0; a < n; ++a)
      if (up[static_cast<std::size_t>(a)] == everything) {
        if (an.bottom == -1)
          an.bottom = a;
        else {
          c.pass = false;
          c.witness = "two bottoms " + pair_label(lab, an.bottom, a);
        }
      }
    if (an.bottom == -1) {
      c.pass = false;
      c.witness = "no least element";
    }
  }
  {
    Check& c = r.add("bounds/top");
    for (int a = 0; a < n; ++a)
      if (an.down[static_cast<std::size_t>(a)] == everything) {
        if (an.top == -1)
          an.top = a;
        else {
          c.pass = false;
          c.witness = "two tops " + pair_label(lab, an.top, a);
        }
      }
    if (an.top == -1) {
      c.pass = false;
      c.witness = "no greatest element";
    }
  }

  an.tables = kernels::meet_join_tables(up, an.down, exec);
  {
    Check& c = r.add("lattice/meets-exist");
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b)
        if (an.tables.meet[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] < 0) {
          c.pass = false;
          c.witness = "no meet for " + pair_label(lab, a, b);
        }
  }
  {
    Check& c = r.add("lattice/joins-exist");
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b)
        if (an.tables.join[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] < 0) {
          c.pass = false;
          c.witness = "no join for " + pair_label(lab, a, b);
        }
  }

  const auto& oc = d.ortho;
  {
    Check& c = r.add("ortho/involution");
    for (int a = 0; a < n && c.pass; ++a)
      if (oc[static_cast<std::size_t>(oc[static_cast<std::size_t>(a)])] != a) {
        c.pass = false;
        c.witness = lab[static_cast<std::size_t>(a)] + "'' ≠ " + lab[static_cast<std::size_t>(a)];
      }
  }
  {
    Check& c = r.add("ortho/order-inverting");
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b)
        if (up[static_cast<std::size_t>(a)].test(b) &&
            !up[static_cast<std::size_t>(oc[static_cast<std::size_t>(b)])].test(oc[static_cast<std::size_t>(a)])) {
          c.pass = false;
          c.witness = pair_label(lab, a, b);
        }
  }
  {
    Check& c = r.add("ortho/meet-complement");
    for (int a = 0; a < n && c.pass; ++a) {
      int m = an.tables.meet[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(oc[static_cast<std::size_t>(a)])];
      if (m >= 0 && an.bottom >= 0 && m != an.bottom) {
        c.pass = false;
        c.witness = lab[static_cast<std::size_t>(a)] + " ∧ " + lab[static_cast<std::size_t>(oc[static_cast<std::size_t>(a)])] +
                    " = " + lab[static_cast<std::size_t>(m)] + " ≠ " +
                    (an.bottom >= 0 ? lab[static_cast<std::size_t>(an.bottom)] : "0");
      }
    }
  }
  {
    Check& c = r.add("ortho/join-complement");
    for (int a = 0; a < n && c.pass; ++a) {
      int j = an.tables.join[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(oc[static_cast<std::size_t>(a)])];
      if (j >= 0 && an.top >= 0 && j != an.top) {
        c.pass = false;
        c.witness = lab[static_cast<std::size_t>(a)] + " ∨ " + lab[static_cast<std::size_t>(oc[static_cast<std::size_t>(a)])] +
                    " = " + lab[static_cast<std::size_t>(j)] + " ≠ " +
                    (an.top >= 0 ? lab[static_cast<std::size_t>(an.top)] : "1");
      }
    }
  }
  {
    Check& c = r.add("property/de-morgan", CheckKind::property);
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b) {
        int j = an.tables.join[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)];
        int m = an.tables.meet[static_cast<std::size_t>(oc[static_cast<std::size_t>(a)]) * un +
                               static_cast<std::size_t>(oc[static_cast<std::size_t>(b)])];
        if (j >= 0 && m >= 0 && oc[static_cast<std::size_t>(j)] != m) {
          c.pass = false;
          c.witness = pair_label(lab, a, b);
        }
      }
  }
  return an;
}

}  // namespace

Report validate_ortholattice(const LatticeData& d, Exec exec) {
  return analyze(d, exec).report;
}

FiniteOrthoLattice FiniteOrthoLattice::build(const LatticeData& d, Exec exec) {
  Analysis an = analyze(d, exec);
  if (!an.report.ok()) {
    const Check* f = an.report.first_failure();
    throw StructureError("invalid ortholattice '" + an.report.subject + "': " + f->name +
                         (f->witness.empty() ? "" : " at " + f->witness));
  }
  FiniteOrthoLattice L;
  L.name_ = d.name;
  L.labels_ = d.labels;
  L.up_ = d.leq;
  L.down_ = std::move(an.down);
  L.ortho_ = d.ortho;
  L.tables_ = std::move(an.tables);
  L.bottom_ = an.bottom;
  L.top_ = an.top;
  L.exists_ = d.exists;
  return L;
}

Bitset FiniteOrthoLattice::atoms() const {
  Bitset out(labels_.size());
  for (int a = 0; a < size(); ++a)
    if (a != bottom_ && down_[static_cast<std::size_t>(a)].count() == 2) out.set(a);
  return out;
}

std::vector<std::pair<int, int>> FiniteOrthoLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      Bitset between = up_[static_cast<std::size_t>(a)] & down_[static_cast<std::size_t>(b)];
      if (between.count() == 2) out.emplace_back(a, b);
    }
  return out;
}

int FiniteOrthoLattice::meet_of(const Bitset& subset) const {
  int acc = top_;
  subset.for_each([&](int a) { acc = meet(acc, a); });
  return acc;
}

int FiniteOrthoLattice::join_of(const Bitset& subset) const {
  int acc = bottom_;
  subset.for_each([&](int a) { acc = join(acc, a); });
  return acc;
}

FiniteOrthoLattice FiniteOrthoLattice::with_exists(std::vector<int> ex) const {
  FiniteOrthoLattice L = *this;
  L.exists_ = std::move(ex);
  return L;
}

FiniteOrthoLattice FiniteOrthoLattice::without_exists() const {
  FiniteOrthoLattice L = *this;
  L.exists_.reset();
  return L;
}

FiniteOrthoLattice FiniteOrthoLattice::renamed(std::string name) const {
  FiniteOrthoLattice L = *this;
  L.name_ = std::move(name);
  return L;
}

LatticeData FiniteOrthoLattice::data() const {
  LatticeData d;
  d.name = name_;
  d.labels = labels_;
  d.leq = up_;
  d.ortho = ortho_;
  d.exists = exists_;
  return d;
}

Report validate_quantifier(const FiniteOrthoLattice& L) {
  Report r;
  r.subject = (L.name().empty() ? "lattice" : L.name()) + "/quantifier";
  {
    Check& c = r.add("structure/exists-present", CheckKind::structure);
    if (!L.monadic()) {
      c.pass = false;
      c.witness = "no quantifier map";
      return r;
    }
  }
  const int n = L.size();
  auto lab = [&](int a) { return L.label(a); };
  {
    Check& c = r.add("exists/increasing");
    for (int a = 0; a < n && c.pass; ++a)
      if (!L.leq(a, L.exists_of(a))) {
        c.pass = false;
        c.witness = lab(a) + " ≰ ∃" + lab(a);
      }
  }
  {
    Check& c = r.add("exists/monotone");
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b)
        if (L.leq(a, b) && !L.leq(L.exists_of(a), L.exists_of(b))) {
          c.pass = false;
          c.witness = pair_label(L.labels(), a, b);
        }
  }
  {
    Check& c = r.add("exists/idempotent");
    for (int a = 0; a < n && c.pass; ++a)
      if (L.exists_of(L.exists_of(a)) != L.exists_of(a)) {
        c.pass = false;
        c.witness = lab(a);
      }
  }
  {
    Check& c = r.add("exists/ortho-of-closed-closed");
    for (int a = 0; a < n && c.pass; ++a) {
      int ea = L.exists_of(a);
      int oea = L.ortho(ea);
      if (L.exists_of(oea) != oea) {
        c.pass = false;
        c.witness = "(∃" + lab(a) + ")' = " + lab(oea) + " is not closed";
      }
    }
  }
  if (!r.ok()) return r;

  {
    Check& c = r.add("derived/bottom-fixed", CheckKind::property);
    if (L.exists_of(L.bottom()) != L.bottom()) {
      c.pass = false;
      c.witness = "∃0 = " + lab(L.exists_of(L.bottom()));
    }
  }
  {
    Check& c = r.add("derived/closed-sub-ortholattice", CheckKind::property);
    Bitset closed(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      if (L.exists_of(a) == a) closed.set(a);
    if (!closed.test(L.bottom()) || !closed.test(L.top())) {
      c.pass = false;
      c.witness = "bounds not closed";
    }
    closed.for_each([&](int a) {
      if (!c.pass) return;
      if (!closed.test(L.ortho(a))) {
        c.pass = false;
        c.witness = lab(a) + "' not closed";
        return;
      }
      closed.for_each([&](int b) {
        if (!c.pass) return;
        if (!closed.test(L.meet(a, b))) {
          c.pass = false;
          c.witness = lab(a) + " ∧ " + lab(b) + " not closed";
        } else if (!closed.test(L.join(a, b))) {
          c.pass = false;
          c.witness = lab(a) + " ∨ " + lab(b) + " not closed";
        }
      });
    });
  }
  {
    // Not part of the axiom set; recorded only as an observation.
    Check& c = r.add("note/join-preserving", CheckKind::note);
    c.advisory = true;
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b)
        if (L.exists_of(L.join(a, b)) != L.join(L.exists_of(a), L.exists_of(b))) {
          c.pass = false;
          c.witness = pair_label(L.labels(), a, b);
        }
  }
  return r;
}

void require_quantifier(const FiniteOrthoLattice& L) {
  Report r = validate_quantifier(L);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw StructureError("invalid quantifier on '" + L.name() + "': " + f->name +
                         (f->witness.empty() ? "" : " at " + f->witness));
  }
}

LatticeHom identity_hom(const FiniteOrthoLattice& L) {
  LatticeHom f{&L, &L, std::vector<int>(static_cast<std::size_t>(L.size()))};
  for (int a = 0; a < L.size(); ++a) f.map[static_cast<std::size_t>(a)] = a;
  return f;
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  LatticeHom h{f.source, g.target, std::vector<int>(f.map.size())};
  for (std::size_t a = 0; a < f.map.size(); ++a)
    h.map[a] = g.map[static_cast<std::size_t>(f.map[a])];
  return h;
}

Check is_homomorphism(const LatticeHom& f) {
  Check c{"homomorphism", true, "", "", CheckKind::axiom, true, false};
  const FiniteOrthoLattice& L = *f.source;
  const FiniteOrthoLattice& M = *f.target;
  if (f.map.size() != static_cast<std::size_t>(L.size())) {
    c.pass = false;
    c.witness = "map is not total";
    return c;
  }
  for (int v : f.map)
    if (v < 0 || v >= M.size()) {
      c.pass = false;
      c.witness = "image out of range";
      return c;
    }
  auto at = [&](int a) { return f.map[static_cast<std::size_t>(a)]; };
  if (at(L.bottom()) != M.bottom()) {
    c.pass = false;
    c.witness = "f(0) ≠ 0";
    return c;
  }
  if (at(L.top()) != M.top()) {
    c.pass = false;
    c.witness = "f(1) ≠ 1";
    return c;
  }
  for (int a = 0; a < L.size(); ++a)
    if (at(L.ortho(a)) != M.ortho(at(a))) {
      c.pass = false;
      c.witness = "f(a') ≠ f(a)' at a=" + L.label(a);
      return c;
    }
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (at(L.meet(a, b)) != M.meet(at(a), at(b))) {
        c.pass = false;
        c.witness = "f(a∧b) ≠ f(a)∧f(b) at (a,b)=" + pair_label(L.labels(), a, b);
        return c;
      }
      if (at(L.join(a, b)) != M.join(at(a), at(b))) {
        c.pass = false;
        c.witness = "f(a∨b) ≠ f(a)∨f(b) at (a,b)=" + pair_label(L.labels(), a, b);
        return c;
      }
    }
  if (L.monadic() && M.monadic()) {
    for (int a = 0; a < L.size(); ++a)
      if (at(L.exists_of(a)) != M.exists_of(at(a))) {
        c.pass = false;
        c.witness = "f(∃a) ≠ ∃f(a) at a=" + L.label(a);
        return c;
      }
  }
  return c;
}

namespace {

enum class PlanOp { meet, join, ortho };
struct PlanStep {
  int target;
  PlanOp op;
  int x, y;
};

// Generating set (atoms and their orthocomplements, greedily extended until
// it generates) plus a construction plan deriving every other element.
struct GeneratorPlan {
  std::vector<int> gens;
  std::vector<PlanStep> plan;
};

GeneratorPlan make_plan(const FiniteOrthoLattice& L) {
  const int n = L.size();
  GeneratorPlan gp;
  std::vector<bool> known(static_cast<std::size_t>(n), false);
  std::vector<bool> is_gen(static_cast<std::size_t>(n), false);

  auto add_gen = [&](int a) {
    if (a == L.bottom() || a == L.top() || is_gen[static_cast<std::size_t>(a)]) return;
    is_gen[static_cast<std::size_t>(a)] = true;
    gp.gens.push_back(a);
    known[static_cast<std::size_t>(a)] = true;
  };

  known[static_cast<std::size_t>(L.bottom())] = true;
  known[static_cast<std::size_t>(L.top())] = true;
  L.atoms().for_each([&](int a) {
    add_gen(a);
    add_gen(L.ortho(a));
  });

  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a) {
        if (!known[static_cast<std::size_t>(a)]) continue;
        int oa = L.ortho(a);
        if (!known[static_cast<std::size_t>(oa)]) {
          gp.plan.push_back({oa, PlanOp::ortho, a, -1});
          known[static_cast<std::size_t>(oa)] = true;
          grew = true;
        }
        for (int b = 0; b < n; ++b) {
          if (!known[static_cast<std::size_t>(b)]) continue;
          int m = L.meet(a, b);
          if (!known[static_cast<std::size_t>(m)]) {
            gp.plan.push_back({m, PlanOp::meet, a, b});
            known[static_cast<std::size_t>(m)] = true;
            grew = true;
          }
          int j = L.join(a, b);
          if (!known[static_cast<std::size_t>(j)]) {
            gp.plan.push_back({j, PlanOp::join, a, b});
            known[static_cast<std::size_t>(j)] = true;
            grew = true;
          }
        }
      }
    }
  };

  close();
  for (int a = 0; a < n; ++a)
    if (!known[static_cast<std::size_t>(a)]) {
      add_gen(a);
      close();
    }
  return gp;
}

// Order/ortho constraints between already-assigned generator images.
bool partial_consistent(const FiniteOrthoLattice& L, const FiniteOrthoLattice& M,
                        const std::vector<int>& gens, const std::vector<int>& img, std::size_t k) {
  int gk = gens[k];
  int ik = img[k];
  for (std::size_t j = 0; j < k; ++j) {
    int gj = gens[j];
    int ij = img[j];
    if (L.leq(gj, gk) && !M.leq(ij, ik)) return false;
    if (L.leq(gk, gj) && !M.leq(ik, ij)) return false;
    if (L.ortho(gj) == gk && M.ortho(ij) != ik) return false;
  }
  return true;
}

std::vector<int> extend_by_plan(const FiniteOrthoLattice& L, const FiniteOrthoLattice& M,
                                const GeneratorPlan& gp, const std::vector<int>& img) {
  std::vector<int> f(static_cast<std::size_t>(L.size()), -1);
  f[static_cast<std::size_t>(L.bottom())] = M.bottom();
  f[static_cast<std::size_t>(L.top())] = M.top();
  for (std::size_t j = 0; j < gp.gens.size(); ++j)
    f[static_cast<std::size_t>(gp.gens[j])] = img[j];
  for (const auto& s : gp.plan) {
    switch (s.op) {
      case PlanOp::meet:
        f[static_cast<std::size_t>(s.target)] =
            M.meet(f[static_cast<std::size_t>(s.x)], f[static_cast<std::size_t>(s.y)]);
        break;
      case PlanOp::join:
        f[static_cast<std::size_t>(s.target)] =
            M.join(f[static_cast<std::size_t>(s.x)], f[static_cast<std::size_t>(s.y)]);
        break;
      case PlanOp::ortho:
        f[static_cast<std::size_t>(s.target)] = M.ortho(f[static_cast<std::size_t>(s.x)]);
        break;
    }
  }
  return f;
}

}  // namespace

std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteOrthoLattice& L,
                                                      const FiniteOrthoLattice& M,
                                                      const Budget& budget, Exec exec) {
  GeneratorPlan gp = make_plan(L);
  const int m = M.size();

  std::atomic<std::size_t> leaves{0};
  std::atomic<bool> over{false};

  auto search = [&](std::vector<int>& img, std::size_t depth, auto&& self,
                    std::vector<std::vector<int>>& out) -> void {
    if (over.load(std::memory_order_relaxed)) return;
    if (depth == gp.gens.size()) {
      if (leaves.fetch_add(1) + 1 > budget.max_candidates) {
        over.store(true);
        return;
      }
      std::vector<int> f = extend_by_plan(L, M, gp, img);
      LatticeHom h{&L, &M, f};
      if (is_homomorphism(h).pass) out.push_back(std::move(f));
      return;
    }
    for (int v = 0; v < m; ++v) {
      img[depth] = v;
      if (partial_consistent(L, M, gp.gens, img, depth)) self(img, depth + 1, self, out);
    }
  };

  std::vector<std::vector<int>> result;
  if (gp.gens.empty() || exec == Exec::serial) {
    std::vector<int> img(gp.gens.size(), -1);
    search(img, 0, search, result);
  } else {
    const int nt = m;
    std::vector<std::vector<std::vector<int>>> local(static_cast<std::size_t>(nt));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int v = 0; v < nt; ++v) {
      std::vector<int> img(gp.gens.size(), -1);
      img[0] = v;
      if (partial_consistent(L, M, gp.gens, img, 0))
        search(img, 1, search, local[static_cast<std::size_t>(v)]);
    }
    for (auto& chunk : local)
      for (auto& f : chunk) result.push_back(std::move(f));
  }
  if (over.load())
    throw BudgetError("homomorphism search exceeds " + std::to_string(budget.max_candidates) +
                      " candidates");
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> enumerate_homomorphisms_raw(const FiniteOrthoLattice& L,
                                                          const FiniteOrthoLattice& M,
                                                          const Budget& budget, Exec exec) {
  return kernels::filter_maps(
      static_cast<std::size_t>(L.size()), static_cast<std::size_t>(M.size()), budget.max_raw_maps,
      [&](const std::vector<int>& map) {
        LatticeHom h{&L, &M, map};
        return is_homomorphism(h).pass;
      },
      exec);
}

std::optional<std::vector<int>> find_isomorphism(const FiniteOrthoLattice& L,
                                                 const FiniteOrthoLattice& M,
                                                 const Budget& budget) {
  if (L.size() != M.size()) return std::nullopt;
  for (auto& f : enumerate_homomorphisms(L, M, budget)) {
    std::vector<bool> hit(static_cast<std::size_t>(M.size()), false);
    bool bij = true;
    for (int v : f) {
      if (hit[static_cast<std::size_t>(v)]) {
        bij = false;
        break;
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
    if (bij) return f;
  }
  return std::nullopt;
}

namespace {

Bitset subalgebra_closure(const FiniteOrthoLattice& L, Bitset s) {
  s.set(L.bottom());
  s.set(L.top());
  bool grew = true;
  while (grew) {
    grew = false;
    Bitset next = s;
    s.for_each([&](int a) {
      int oa = L.ortho(a);
      if (!next.test(oa)) {
        next.set(oa);
        grew = true;
      }
      s.for_each([&](int b) {
        int m = L.meet(a, b);
        int j = L.join(a, b);
        if (!next.test(m)) {
          next.set(m);
          grew = true;
        }
        if (!next.test(j)) {
          next.set(j);
          grew = true;
        }
      });
    });
    s = next;
  }
  return s;
}

}  // namespace

std::vector<Bitset> sub_ortholattices(const FiniteOrthoLattice& L) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Bitset> queue;
  Bitset base = subalgebra_closure(L, Bitset(static_cast<std::size_t>(L.size())));
  seen.insert(base);
  queue.push_back(base);
  while (!queue.empty()) {
    Bitset s = queue.front();
    queue.pop_front();
    for (int a = 0; a < L.size(); ++a) {
      if (s.test(a)) continue;
      Bitset t = subalgebra_closure(L, Bitset::single(static_cast<std::size_t>(L.size()), a) | s);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<Bitset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> quantifier_from_subalgebra(const FiniteOrthoLattice& L, const Bitset& S) {
  std::vector<int> ex(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a) {
    Bitset above = S & L.up(a);
    ex[static_cast<std::size_t>(a)] = L.meet_of(above);
  }
  return ex;
}

std::vector<std::vector<int>> quantifiers_from_subalgebras(const FiniteOrthoLattice& L) {
  std::vector<std::vector<int>> out;
  for (const auto& S : sub_ortholattices(L)) {
    std::vector<int> ex = quantifier_from_subalgebra(L, S);
    FiniteOrthoLattice M = L.with_exists(ex);
    Report r = validate_quantifier(M);
    if (!r.ok())
      throw InconsistencyError("quantifier induced by a sub-ortholattice failed validation: " +
                               r.first_failure()->name);
    out.push_back(std::move(ex));
  }
  return out;
}

Bitset closed_elements(const FiniteOrthoLattice& L) {
  require_quantifier(L);
  Bitset closed(static_cast<std::size_t>(L.size()));
  for (int a = 0; a < L.size(); ++a)
    if (L.exists_of(a) == a) closed.set(a);
  Bitset cl = subalgebra_closure(L, closed);
  if (!(cl == closed))
    throw InconsistencyError("closed elements of a valid quantifier are not a sub-ortholattice");
  return closed;
}

}  // namespace ortho
