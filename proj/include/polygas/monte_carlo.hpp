#pragma once

// Deterministic parallel Monte Carlo engine.
//
// Each worker owns a Philox4x32-10 stream keyed by (seed, worker index); the
// sample count of a worker depends only on (n, workers), and partial results
// are merged in worker order, so a fixed (seed, n, workers) triple always
// yields bit-identical estimates.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "polygas/vec3.hpp"

namespace polygas {

struct MCEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  /// Mean of |integrand| (times the same prefactor as value); scale for round-off floors.
  double abs_scale = 0.0;
};

/// Counter-based generator (Salmon et al. Philox4x32 with 10 rounds).
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        ctr_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

  result_type operator()() {
    if (idx_ == 4) {
      refill();
      idx_ = 0;
    }
    return buf_[idx_++];
  }

  /// Uniform double in (0, 1), 53 random bits.
  double uniform() {
    const std::uint64_t hi = (*this)() >> 5, lo = (*this)() >> 6;
    return (static_cast<double>(hi * 67108864ull + lo) + 0.5) * (1.0 / 9007199254740992.0);
  }

 private:
  void refill() {
    std::array<std::uint32_t, 4> x = ctr_;
    std::array<std::uint32_t, 2> k = key_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ull * x[0];
      const std::uint64_t p1 = 0xCD9E8D57ull * x[2];
      x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k[1], static_cast<std::uint32_t>(p0)};
      k[0] += 0x9E3779B9u;
      k[1] += 0xBB67AE85u;
    }
    buf_ = x;
    if (++ctr_[0] == 0) ++ctr_[1];
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int idx_ = 4;
};

/// Per-worker sampling context: generator plus the distributions used by the oracles.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

  double uniform() { return rng_.uniform(); }
  double normal() { return normal_(rng_); }
  Vec3 normal3(double sd) { return {sd * normal(), sd * normal(), sd * normal()}; }
  /// Gamma(shape, scale).
  double gamma(double shape, double scale) {
    return scale * gamma_(rng_, std::gamma_distribution<double>::param_type(shape, 1.0));
  }
  Vec3 unit_sphere() {
    const double z = 2.0 * uniform() - 1.0;
    const double phi = 2.0 * std::numbers::pi * uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

 private:
  Philox4x32 rng_;
  std::normal_distribution<double> normal_;
  std::gamma_distribution<double> gamma_;
};

namespace detail {

template <std::size_t K>
struct Accum {
  std::uint64_t n = 0;
  std::array<double, K> mean{}, m2{}, abs_mean{};

  void push(const std::array<double, K>& x) {
    ++n;
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < K; ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d * inv;
      m2[i] += d * (x[i] - mean[i]);
      abs_mean[i] += (std::abs(x[i]) - abs_mean[i]) * inv;
    }
  }

  void merge(const Accum& o) {
    if (o.n == 0) return;
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n), nt = na + nb;
    for (std::size_t i = 0; i < K; ++i) {
      const double d = o.mean[i] - mean[i];
      mean[i] += d * nb / nt;
      m2[i] += o.m2[i] + d * d * na * nb / nt;
      abs_mean[i] += (o.abs_mean[i] - abs_mean[i]) * nb / nt;
    }
    n += o.n;
  }
};

}  // namespace detail

/// Estimates the means of K integrands. `draw(Sampler&, std::array<double,K>&)` fills one
/// sample and returns false to reject it (the sample then counts as zero).
template <std::size_t K, class Draw>
std::array<MCEstimate, K> mc_integrate(std::uint64_t n, std::uint64_t seed, unsigned workers, Draw draw) {
  if (workers == 0) workers = 1;
  std::vector<detail::Accum<K>> parts(workers);
  auto run = [&](unsigned w) {
    Sampler s(seed, w);
    const std::uint64_t count = n / workers + (w < n % workers ? 1 : 0);
    std::array<double, K> x{};
    for (std::uint64_t i = 0; i < count; ++i) {
      x.fill(0.0);
      if (!draw(s, x)) x.fill(0.0);
      parts[w].push(x);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  detail::Accum<K> total;
  for (const auto& p : parts) total.merge(p);

  std::array<MCEstimate, K> out;
  for (std::size_t i = 0; i < K; ++i) {
    const double var = total.n > 1 ? total.m2[i] / static_cast<double>(total.n - 1) : 0.0;
    out[i] = {total.mean[i], std::sqrt(var / static_cast<double>(total.n)), total.n, seed, total.abs_mean[i]};
  }
  return out;
}

/// Multiplies value, error and scale by a constant prefactor.
inline MCEstimate scaled(MCEstimate e, double c) {
  e.value *= c;
  e.std_error *= std::abs(c);
  e.abs_scale *= std::abs(c);
  return e;
}

}  // namespace polygas
