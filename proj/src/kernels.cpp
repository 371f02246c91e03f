#include "orthokit/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ortho {

Budget Budget::from_env() {
  Budget b;
  if (const char* v = std::getenv("ORTHOKIT_BUDGET")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) {
      b.max_candidates = static_cast<std::size_t>(n);
      b.max_raw_maps = static_cast<std::size_t>(n);
      b.max_closed_sets = static_cast<std::size_t>(n);
    }
  }
  return b;
}

namespace kernels {
namespace {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

std::vector<Bitset> intersection_closure(const std::vector<Bitset>& gens, const Bitset& universe,
                                         std::size_t budget, Exec exec) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> frontier;
  auto admit = [&](const Bitset& s) {
    if (seen.insert(s).second) frontier.push_back(s);
  };
  admit(universe);
  for (const auto& g : gens) admit(g);

  // Level-synchronous expansion: each level intersects the previous frontier
  // with every generator. The closure system this produces is independent of
  // visit order, so the parallel and serial paths agree.
  while (!frontier.empty()) {
    if (seen.size() > budget)
      throw BudgetError("intersection closure exceeds " + std::to_string(budget) + " sets");
    std::vector<Bitset> produced;
    if (exec == Exec::parallel && frontier.size() * gens.size() > 256) {
      const int nt = thread_count();
      std::vector<std::vector<Bitset>> local(static_cast<std::size_t>(nt));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i) {
#ifdef _OPENMP
        auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#else
        auto& mine = local[0];
#endif
        for (const auto& g : gens) {
          Bitset s = frontier[static_cast<std::size_t>(i)] & g;
          if (!seen.count(s)) mine.push_back(s);
        }
      }
      for (auto& v : local)
        for (auto& s : v) produced.push_back(std::move(s));
    } else {
      for (const auto& f : frontier)
        for (const auto& g : gens) {
          Bitset s = f & g;
          if (!seen.count(s)) produced.push_back(s);
        }
    }
    frontier.clear();
    for (auto& s : produced)
      if (seen.insert(s).second) frontier.push_back(std::move(s));
  }
  if (seen.size() > budget)
    throw BudgetError("intersection closure exceeds " + std::to_string(budget) + " sets");

  std::vector<Bitset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bitset> filter_subsets(std::size_t n, const std::function<bool(const Bitset&)>& accept,
                                   Exec exec) {
  if (n > 25) throw BudgetError("powerset filter limited to 25 points, got " + std::to_string(n));
  const std::int64_t total = std::int64_t{1} << n;
  std::vector<std::uint8_t> keep(static_cast<std::size_t>(total), 0);
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1024)
#endif
    for (std::int64_t v = 0; v < total; ++v)
      keep[static_cast<std::size_t>(v)] =
          accept(Bitset::from_mask(n, static_cast<std::uint64_t>(v))) ? 1 : 0;
  } else {
    for (std::int64_t v = 0; v < total; ++v)
      keep[static_cast<std::size_t>(v)] =
          accept(Bitset::from_mask(n, static_cast<std::uint64_t>(v))) ? 1 : 0;
  }
  std::vector<Bitset> out;
  for (std::int64_t v = 0; v < total; ++v)
    if (keep[static_cast<std::size_t>(v)])
      out.push_back(Bitset::from_mask(n, static_cast<std::uint64_t>(v)));
  return out;  // mask order == Bitset order, already sorted
}

std::vector<std::vector<int>> filter_maps(std::size_t src, std::size_t dst, std::size_t max_maps,
                                          const std::function<bool(const std::vector<int>&)>& accept,
                                          Exec exec) {
  if (dst == 0) {
    if (src == 0) {
      std::vector<int> empty;
      return accept(empty) ? std::vector<std::vector<int>>{empty}
                           : std::vector<std::vector<int>>{};
    }
    return {};
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < src; ++i) {
    if (total > max_maps / dst + 1)
      throw BudgetError("map space " + std::to_string(dst) + "^" + std::to_string(src) +
                        " exceeds " + std::to_string(max_maps));
    total *= dst;
  }
  if (total > max_maps)
    throw BudgetError("map space " + std::to_string(total) + " exceeds " +
                      std::to_string(max_maps));

  auto decode = [&](std::size_t k) {
    std::vector<int> m(src);
    for (std::size_t i = 0; i < src; ++i) {
      m[i] = static_cast<int>(k % dst);
      k /= dst;
    }
    return m;
  };

  std::vector<std::uint8_t> keep(total, 0);
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(total); ++k)
      keep[static_cast<std::size_t>(k)] = accept(decode(static_cast<std::size_t>(k))) ? 1 : 0;
  } else {
    for (std::size_t k = 0; k < total; ++k) keep[k] = accept(decode(k)) ? 1 : 0;
  }
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < total; ++k)
    if (keep[k]) out.push_back(decode(k));
  std::sort(out.begin(), out.end());
  return out;
}

Tables meet_join_tables(const std::vector<Bitset>& up, const std::vector<Bitset>& down, Exec exec) {
  const std::size_t n = up.size();
  Tables t;
  t.meet.assign(n * n, -1);
  t.join.assign(n * n, -1);

  auto row = [&](std::int64_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t at = static_cast<std::size_t>(a) * n + b;
      Bitset lower = down[static_cast<std::size_t>(a)] & down[b];
      int m = -1;
      lower.for_each([&](int c) {
        if (m == -1 && lower.subset_of(down[static_cast<std::size_t>(c)])) m = c;
      });
      t.meet[at] = m;
      Bitset upper = up[static_cast<std::size_t>(a)] & up[b];
      int j = -1;
      upper.for_each([&](int c) {
        if (j == -1 && upper.subset_of(up[static_cast<std::size_t>(c)])) j = c;
      });
      t.join[at] = j;
    }
  };

  if (exec == Exec::parallel && n > 64) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) row(a);
  } else {
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) row(a);
  }
  return t;
}

}  // namespace kernels
}  // namespace ortho
