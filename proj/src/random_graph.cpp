#include "ortho/random_graph.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ortho {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;  // tiny modulo bias is irrelevant here
}

}  // namespace

Multigraph generate_random_multigraph(int n, double avg_degree, std::uint64_t seed) {
  if (n < 1 || avg_degree < 0.0) {
    throw std::invalid_argument("generate_random_multigraph: need n >= 1, avg_degree >= 0");
  }
  long m = std::lround(static_cast<double>(n) * avg_degree / 2.0);
  if (m < n - 1) {
    throw std::invalid_argument("generate_random_multigraph: too few edges for connectivity");
  }

  Multigraph g;
  for (int i = 0; i < n; ++i) {
    Vertex v;
    v.id = "v" + std::to_string(i);
    g.add_vertex(std::move(v));
  }

  std::mt19937_64 rng(seed);
  long next_edge = 0;
  auto add = [&](int a, int b) {
    Edge e;
    e.id = "e" + std::to_string(next_edge++);
    e.source = a;
    e.target = b;
    g.add_edge(std::move(e));
  };

  // Uniform spanning tree from a random Pruefer sequence.
  if (n == 2) {
    add(0, 1);
  } else if (n > 2) {
    std::vector<int> pruefer(static_cast<size_t>(n - 2));
    for (int& x : pruefer) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int x : pruefer) ++degree[static_cast<size_t>(x)];
    std::vector<char> used(static_cast<size_t>(n), 0);
    int leaf_ptr = 0;
    while (degree[static_cast<size_t>(leaf_ptr)] != 1) ++leaf_ptr;
    int leaf = leaf_ptr;
    for (int x : pruefer) {
      add(leaf, x);
      if (--degree[static_cast<size_t>(x)] == 1 && x < leaf_ptr) {
        leaf = x;
      } else {
        ++leaf_ptr;
        while (degree[static_cast<size_t>(leaf_ptr)] != 1) ++leaf_ptr;
        leaf = leaf_ptr;
      }
    }
    // The last Pruefer step joins the remaining leaf to vertex n-1.
    add(leaf, n - 1);
  }

  for (long k = n - 1; k < m && n >= 1; ++k) {
    int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    add(a, b);
  }
  return g;
}

}  // namespace ortho
