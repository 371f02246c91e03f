#include "orthokit/frame.hpp"

#include <algorithm>

namespace ortho {

Report validate_orthoframe(const OrthoFrame& X) {
  Report r;
  r.subject = X.name.empty() ? "frame" : X.name;
  const int n = X.size();
  {
    Check& c = r.add("structure/perp-total", CheckKind::structure);
    if (X.perp.size() != static_cast<std::size_t>(n)) {
      c.pass = false;
      c.witness = "orthogonality relation has " + std::to_string(X.perp.size()) +
                  " rows, expected " + std::to_string(n);
      return r;
    }
    for (int x = 0; x < n && c.pass; ++x)
      if (X.perp[static_cast<std::size_t>(x)].universe() != static_cast<std::size_t>(n)) {
        c.pass = false;
        c.witness = "row for " + X.labels[static_cast<std::size_t>(x)] + " has wrong size";
      }
    if (!c.pass) return r;
  }
  {
    Check& c = r.add("perp/irreflexive");
    for (int x = 0; x < n && c.pass; ++x)
      if (X.perp[static_cast<std::size_t>(x)].test(x)) {
        c.pass = false;
        c.witness = X.labels[static_cast<std::size_t>(x)];
      }
  }
  {
    Check& c = r.add("perp/symmetric");
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y)
        if (X.perp[static_cast<std::size_t>(x)].test(y) && !X.perp[static_cast<std::size_t>(y)].test(x)) {
          c.pass = false;
          c.witness = "(" + X.labels[static_cast<std::size_t>(x)] + "," +
                      X.labels[static_cast<std::size_t>(y)] + ")";
        }
  }
  return r;
}

Report validate_monadic_frame(const OrthoFrame& X) {
  Report r = validate_orthoframe(X);
  r.subject += "/monadic";
  const int n = X.size();
  {
    Check& c = r.add("structure/rel-present", CheckKind::structure);
    if (!X.rel) {
      c.pass = false;
      c.witness = "no additional relation";
      return r;
    }
    if (X.rel->size() != static_cast<std::size_t>(n)) {
      c.pass = false;
      c.witness = "relation has " + std::to_string(X.rel->size()) + " rows, expected " +
                  std::to_string(n);
      return r;
    }
  }
  if (!r.ok()) return r;
  const auto& rel = *X.rel;
  {
    Check& c = r.add("rel/reflexive");
    for (int x = 0; x < n && c.pass; ++x)
      if (!rel[static_cast<std::size_t>(x)].test(x)) {
        c.pass = false;
        c.witness = X.labels[static_cast<std::size_t>(x)];
      }
  }
  {
    Check& c = r.add("rel/transitive");
    for (int x = 0; x < n && c.pass; ++x) {
      const Bitset& row = rel[static_cast<std::size_t>(x)];
      row.for_each([&](int y) {
        if (!c.pass) return;
        if (!rel[static_cast<std::size_t>(y)].subset_of(row)) {
          Bitset extra = rel[static_cast<std::size_t>(y)] - row;
          c.pass = false;
          c.witness = "(" + X.labels[static_cast<std::size_t>(x)] + "," +
                      X.labels[static_cast<std::size_t>(y)] + "," +
                      X.labels[static_cast<std::size_t>(extra.first())] + ")";
        }
      });
    }
  }
  {
    // R[R[{x}]^⊥] ⊆ R[{x}]^⊥ for every x.
    Check& c = r.add("rel/ortho-image-condition");
    for (int x = 0; x < n && c.pass; ++x) {
      Bitset rx = rel[static_cast<std::size_t>(x)];
      Bitset perp_rx = orthogonal(X, rx);
      Bitset image = rel_image(rel, perp_rx);
      if (!image.subset_of(perp_rx)) {
        Bitset extra = image - perp_rx;
        c.pass = false;
        c.witness = X.labels[static_cast<std::size_t>(x)] + " (point " +
                    X.labels[static_cast<std::size_t>(extra.first())] + " escapes)";
      }
    }
  }
  return r;
}

void require_orthoframe(const OrthoFrame& X) {
  Report r = validate_orthoframe(X);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw StructureError("invalid orthoframe '" + r.subject + "': " + f->name +
                         (f->witness.empty() ? "" : " at " + f->witness));
  }
}

void require_monadic_frame(const OrthoFrame& X) {
  Report r = validate_monadic_frame(X);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw StructureError("invalid monadic orthoframe '" + r.subject + "': " + f->name +
                         (f->witness.empty() ? "" : " at " + f->witness));
  }
}

Bitset orthogonal(const OrthoFrame& X, const Bitset& S) {
  Bitset acc = Bitset::full(static_cast<std::size_t>(X.size()));
  S.for_each([&](int x) { acc &= X.perp[static_cast<std::size_t>(x)]; });
  return acc;
}

Bitset biorthogonal(const OrthoFrame& X, const Bitset& S) {
  return orthogonal(X, orthogonal(X, S));
}

bool is_biorthogonally_closed(const OrthoFrame& X, const Bitset& S) {
  return biorthogonal(X, S) == S;
}

Bitset rel_image(const std::vector<Bitset>& rel, const Bitset& A) {
  Bitset acc(rel.empty() ? A.universe() : rel.front().universe());
  A.for_each([&](int x) { acc |= rel[static_cast<std::size_t>(x)]; });
  return acc;
}

int ClosedSetLattice::index_of(const Bitset& s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s);
  if (it == sets.end() || !(*it == s)) return -1;
  return static_cast<int>(it - sets.begin());
}

std::vector<Bitset> enumerate_closed_sets(const OrthoFrame& X, const Budget& budget, Exec exec) {
  std::vector<Bitset> gens;
  gens.reserve(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x)
    gens.push_back(orthogonal(X, Bitset::single(static_cast<std::size_t>(X.size()), x)));
  return kernels::intersection_closure(gens, Bitset::full(static_cast<std::size_t>(X.size())),
                                       budget.max_closed_sets, exec);
}

std::vector<Bitset> enumerate_closed_sets_powerset(const OrthoFrame& X, Exec exec) {
  return kernels::filter_subsets(
      static_cast<std::size_t>(X.size()),
      [&](const Bitset& s) { return is_biorthogonally_closed(X, s); }, exec);
}

ClosedSetLattice closed_set_lattice(const OrthoFrame& X, const Budget& budget, Exec exec) {
  if (X.monadic())
    require_monadic_frame(X);
  else
    require_orthoframe(X);

  ClosedSetLattice out;
  out.sets = enumerate_closed_sets(X, budget, exec);
  const std::size_t n = out.sets.size();
  if (n > budget.max_lattice)
    throw BudgetError("closed-set lattice with " + std::to_string(n) + " elements exceeds " +
                      std::to_string(budget.max_lattice));

  LatticeData d;
  d.name = "B(" + (X.name.empty() ? "frame" : X.name) + ")";
  d.labels.reserve(n);
  for (const auto& s : out.sets) d.labels.push_back(set_label(s, X.labels));
  d.leq.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.sets[i].subset_of(out.sets[j])) d.leq[i].set(static_cast<int>(j));
  d.ortho.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int oi = out.index_of(orthogonal(X, out.sets[i]));
    if (oi < 0)
      throw InconsistencyError("orthogonal of a closed set is not closed: " + d.labels[i]);
    d.ortho[i] = oi;
  }
  if (X.monadic()) {
    std::vector<int> ex(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      int ei = out.index_of(biorthogonal(X, rel_image(*X.rel, out.sets[i])));
      if (ei < 0)
        throw InconsistencyError("relational image closure is not a closed set: " + d.labels[i]);
      ex[i] = ei;
    }
    d.exists = std::move(ex);
  }

  try {
    out.lattice = FiniteOrthoLattice::build(d, exec);
  } catch (const StructureError& e) {
    throw InconsistencyError(std::string("closed sets do not form an ortholattice: ") + e.what());
  }

  // Generic tables vs. the set-level operations: meet is intersection, join
  // is the bi-orthogonal of the union, bounds are {} and the carrier.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int m = out.lattice.meet(static_cast<int>(i), static_cast<int>(j));
      if (!(out.sets[static_cast<std::size_t>(m)] == (out.sets[i] & out.sets[j])))
        throw InconsistencyError("meet differs from intersection at (" + d.labels[i] + "," +
                                 d.labels[j] + ")");
      int jn = out.lattice.join(static_cast<int>(i), static_cast<int>(j));
      if (!(out.sets[static_cast<std::size_t>(jn)] == biorthogonal(X, out.sets[i] | out.sets[j])))
        throw InconsistencyError("join differs from bi-orthogonal of union at (" + d.labels[i] +
                                 "," + d.labels[j] + ")");
    }
  if (!(out.sets[static_cast<std::size_t>(out.lattice.bottom())].none()))
    throw InconsistencyError("bottom of the closed-set lattice is not the empty set");
  if (!(out.sets[static_cast<std::size_t>(out.lattice.top())] ==
        Bitset::full(static_cast<std::size_t>(X.size()))))
    throw InconsistencyError("top of the closed-set lattice is not the carrier");

  if (X.monadic()) {
    Report q = validate_quantifier(out.lattice);
    if (!q.ok())
      throw InconsistencyError("frame quantifier fails on the closed-set lattice: " +
                               q.first_failure()->name);
  }
  return out;
}

}  // namespace ortho
