#pragma once

#include <cstdint>
#include <map>

#include "moff/designs.hpp"
#include "moff/fusion.hpp"

namespace moff {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 240.0;
};

struct CliqueResult {
  std::size_t size = 0;
  BlockFamily witness;
  std::uint64_t nodes = 0;
  bool complete = false;  // false when the budget cut the search short
};

/// Exact maximum cardinality of a c-cohesive family of l-subsets of [m],
/// by branch-and-bound maximum clique over the compatibility graph
/// (vertices: l-subsets; edges: intersection at most c). Vertices are ordered
/// by degree and pruned with greedy coloring bounds.
CliqueResult max_cohesive_family(std::size_t m, std::size_t l, std::size_t c,
                                 SearchBudget budget = {});

/// True iff some l-subset outside the family keeps it c-cohesive.
bool extendability_check(const BlockFamily& f, std::size_t c);

/// Histogram: containment count -> number of t-subsets with that count.
/// A t-design shows a single bar.
std::map<long long, std::size_t> direct_design_count(const BlockFamily& f, int t);

/// n independent Haar-random rank-l projections (float mode), deterministic
/// under the seed.
FusionFrame random_frame(std::size_t m, std::size_t l, std::size_t n,
                         std::uint64_t seed, Field field = Field::cplx);

}  // namespace moff
