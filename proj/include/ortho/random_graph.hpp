#pragma once

#include <cstdint>

#include "ortho/multigraph.hpp"

namespace ortho {

// Connected random multigraph: a uniformly random spanning tree first, then
// the remaining edges drawn uniformly over vertex pairs (parallel edges and
// self-loops allowed). m = round(n * avg_degree / 2); requires m >= n-1.
Multigraph generate_random_multigraph(int n, double avg_degree, std::uint64_t seed);

}  // namespace ortho
