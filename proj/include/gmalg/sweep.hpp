#pragma once

// Seeded sampling of solution spaces and an order-preserving parallel map.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gmalg/maps.hpp"

namespace gmalg {

/// GMALG_WORKERS when set to a positive integer, else the hardware count.
inline unsigned worker_count() {
  if (const char* env = std::getenv("GMALG_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(i) for i < count, computed on `workers` threads. The first
/// exception (lowest index) is rethrown after every worker has finished.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, unsigned workers = worker_count()) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += workers) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// The generators of `space` followed by `extra` random combinations of them.
/// Coefficients are uniform residues over Z/n and integers in [-3, 3] over Q,
/// drawn from mt19937_64(seed) so the list is reproducible everywhere.
template <class S>
std::vector<Vector<S>> sample_space(const Submodule<S>& space, std::size_t extra, std::uint64_t seed) {
  const auto& r = space.ring();
  std::vector<Vector<S>> out = space.generators();
  if (space.generators().empty()) return out;
  std::mt19937_64 rng(seed);
  std::uint64_t span = 7;
  if constexpr (std::is_same_v<S, Zn>) span = static_cast<std::uint64_t>(r.modulus());
  for (std::size_t c = 0; c < extra; ++c) {
    Vector<S> v = zeros(r, space.ambient());
    for (const auto& g : space.generators()) {
      auto coeff = static_cast<std::int64_t>(rng() % span);
      if constexpr (!std::is_same_v<S, Zn>) coeff -= 3;
      if (coeff != 0) v += r.from_int(coeff) * g;
    }
    out.push_back(canon(r, v));
  }
  return out;
}

}  // namespace gmalg
