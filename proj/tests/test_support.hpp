#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "genus_forge/poly.hpp"

namespace genus_forge::testing {

/// Seed for randomized properties; GENUS_FORGE_SEED overrides the default.
inline std::uint64_t seed() {
  if (const char* env = std::getenv("GENUS_FORGE_SEED")) return std::stoull(env);
  return 20240611;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline Fp random_fp(std::mt19937_64& g, std::uint32_t p) {
  return Fp(static_cast<std::int64_t>(g() % p), p);
}

inline Fp random_nonzero_fp(std::mt19937_64& g, std::uint32_t p) {
  return Fp(static_cast<std::int64_t>(1 + g() % (p - 1)), p);
}

inline Poly random_poly(std::mt19937_64& g, std::uint32_t p, int max_deg) {
  std::vector<Fp> c;
  for (int i = 0; i <= max_deg; ++i) c.push_back(random_fp(g, p));
  return Poly(p, std::move(c));
}

inline Poly random_nonzero_poly(std::mt19937_64& g, std::uint32_t p, int max_deg) {
  while (true) {
    Poly f = random_poly(g, p, max_deg);
    if (!f.is_zero()) return f;
  }
}

}  // namespace genus_forge::testing
