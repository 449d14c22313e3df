#pragma once

// Bundled example cones and seeded SL(n,Z) twists of them.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ctoric/cone.hpp"
#include "ctoric/lattice.hpp"

namespace ctoric {

struct CorpusCone {
  std::string file;  // stem of the bundled JSON file
  ConeSpec cone;
  bool negative = false;  // expected to be rejected in integral mode
};

inline ConeSpec cone_from(std::size_t n, std::initializer_list<std::initializer_list<long long>> rows, std::string name) {
  std::vector<IntVector> normals;
  for (auto r : rows) normals.push_back(to_int_vector(r));
  return make_cone(n, std::move(normals), std::move(name));
}

inline std::vector<CorpusCone> base_corpus() {
  return {
      {"orthant", cone_from(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "orthant"), false},
      {"orthant4", cone_from(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, "orthant4"), false},
      {"square", cone_from(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}}, "square"), false},
      {"cube",
       cone_from(4,
                 {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}},
                 "cube"),
       false},
      {"hexagon",
       cone_from(3, {{1, 0, 0}, {1, 1, -1}, {0, 1, 0}, {-1, 0, 2}, {-1, -1, 3}, {0, -1, 2}}, "hexagon"), false},
      {"lens_space", cone_from(2, {{1, 0}, {-1, 3}}, "lens_space"), false},
      {"lens", cone_from(3, {{1, 0, 0}, {0, 1, 0}, {-1, -2, 2}}, "lens"), true},
      {"non_delzant", cone_from(3, {{1, 0, 0}, {0, 1, 0}, {-1, -2, 3}}, "non_delzant"), true},
  };
}

/// A product of random elementary row operations with small multipliers and
/// occasional signed swaps; determinant +-1 by construction.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 5) {
  IntMatrix d = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2), kind(0, 4);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) j = (i + 1) % n;
    if (kind(rng) == 0) {
      d.swap_rows(i, j);
      d.negate_row(i);
    } else {
      int f = mult(rng);
      d.add_row(i, j, f == 0 ? 1 : f);
    }
  }
  return d;
}

/// `count` twisted copies of every corpus cone, reproducible from `seed`.
inline std::vector<CorpusCone> twisted_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusCone> out;
  for (const auto& c : base_corpus()) {
    for (std::size_t t = 1; t <= count; ++t) {
      ConeSpec cone = transform_cone(c.cone, random_unimodular(c.cone.dim, rng));
      cone.name = c.cone.name + "_twist" + std::to_string(t);
      out.push_back({cone.name, std::move(cone), c.negative});
    }
  }
  return out;
}

inline constexpr std::uint64_t kCorpusSeed = 20260101;

}  // namespace ctoric
