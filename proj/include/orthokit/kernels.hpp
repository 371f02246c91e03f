#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orthokit/bits.hpp"
#include "orthokit/report.hpp"

namespace ortho {

enum class Exec { serial, parallel };

/// Resource bounds. Enumerations that would exceed a bound throw BudgetError;
/// results are never silently truncated.
struct Budget {
  std::size_t max_candidates = 4096;       // pruned hom/morphism leaves
  std::size_t max_raw_maps = 1u << 22;     // raw map-space size
  std::size_t max_closed_sets = 1u << 16;  // closure-system enumeration
  std::size_t max_lattice = 4096;          // elements for table construction
  std::size_t sample_pairs = 10000;        // sampled subset pairs
  std::uint64_t seed = 0;

  /// Reads ORTHOKIT_BUDGET (a single integer) into max_candidates,
  /// max_raw_maps and max_closed_sets when set.
  static Budget from_env();
};

namespace kernels {

/// Closure of {universe} ∪ gens under pairwise intersection, sorted
/// ascending. This is the meet-closure of a closure system given by its
/// meet-generators. Throws BudgetError when the family exceeds `budget`.
std::vector<Bitset> intersection_closure(const std::vector<Bitset>& gens, const Bitset& universe,
                                         std::size_t budget, Exec exec);

/// All subsets S of an n-point universe with accept(S), sorted ascending.
/// Walks the full powerset; n is capped at 25.
std::vector<Bitset> filter_subsets(std::size_t n, const std::function<bool(const Bitset&)>& accept,
                                   Exec exec);

/// All total maps [0,src) -> [0,dst) passing accept, sorted lexicographically.
/// Throws BudgetError when dst^src exceeds max_maps.
std::vector<std::vector<int>> filter_maps(std::size_t src, std::size_t dst, std::size_t max_maps,
                                          const std::function<bool(const std::vector<int>&)>& accept,
                                          Exec exec);

/// Meet and join tables from up-set/down-set rows; entries are -1 where no
/// greatest lower / least upper bound exists. Flattened n*n, row-major.
struct Tables {
  std::vector<std::int32_t> meet;
  std::vector<std::int32_t> join;
};
Tables meet_join_tables(const std::vector<Bitset>& up, const std::vector<Bitset>& down, Exec exec);

}  // namespace kernels
}  // namespace ortho
