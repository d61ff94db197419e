#include "hapol/probability.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "hapol/quadrature.hpp"
#include "hapol/rng.hpp"

namespace hapol {

namespace {

// Evaluates flag(i) for i in [0, n), split into contiguous shards.
template <class Flag>
std::vector<bool> sharded_flags(std::uint64_t n, unsigned threads, const Flag& flag) {
  // vector<bool> packs bits, so shards write to byte storage first.
  std::vector<unsigned char> bytes(n);
  threads = std::max(1u, threads);
  const std::uint64_t chunk = (n + threads - 1) / threads;
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) bytes[i] = flag(i) ? 1 : 0;
  };
  if (threads == 1 || n < 2) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t begin = 0; begin < n; begin += chunk)
      pool.emplace_back(work, begin, std::min(n, begin + chunk));
  }
  return {bytes.begin(), bytes.end()};
}

ProbEstimate summarize(const std::vector<bool>& flags, std::uint64_t seed) {
  std::uint64_t hits = 0;
  for (bool f : flags) hits += f ? 1 : 0;
  const auto n = static_cast<std::uint64_t>(flags.size());
  const double mean = static_cast<double>(hits) / static_cast<double>(n);
  return {mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(n)), n, seed};
}

void require_count(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be >= 1");
}

}  // namespace

HyperProbSetup::HyperProbSetup(double ratio) : ratio_(ratio) {
  if (!std::isfinite(ratio) || !(ratio > 1.0))
    throw Error(ErrorKind::InvalidArgument, "ratio must be finite and > 1");
}

double pe_closed_form() { return (15.0 - 16.0 * std::numbers::ln2) / 9.0; }

double ph_closed_form_paper() {
  const double sqrt5 = std::sqrt(5.0);
  return (2.0 * sqrt5 * std::log(2.0 + sqrt5) - 5.0) / (5.0 * std::numbers::ln2);
}

std::vector<bool> indicator_stream_euclid(std::uint64_t n, std::uint64_t seed, Segment seg,
                                          unsigned threads) {
  return sharded_flags(n, threads, [&](std::uint64_t i) {
    SampleStream stream(seed, i);
    return exists_euclid(sample_config_euclid(stream, seg));
  });
}

std::vector<bool> indicator_stream_hyper(std::uint64_t n, std::uint64_t seed,
                                         const HyperProbSetup& setup, double base,
                                         unsigned threads) {
  if (!std::isfinite(base) || !(base > 0.0))
    throw Error(ErrorKind::InvalidArgument, "base height must be finite and > 0");
  return sharded_flags(n, threads, [&](std::uint64_t i) {
    SampleStream stream(seed, i);
    return exists_hyper(sample_config_hyper(stream, setup, base));
  });
}

ProbEstimate estimate_pe(std::uint64_t n, std::uint64_t seed, unsigned threads) {
  require_count(n);
  return summarize(indicator_stream_euclid(n, seed, {}, threads), seed);
}

ProbEstimate estimate_ph(std::uint64_t n, std::uint64_t seed, const HyperProbSetup& setup,
                         unsigned threads) {
  require_count(n);
  return summarize(indicator_stream_hyper(n, seed, setup, 1.0, threads), seed);
}

double pe_quadrature(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
  // With a = 1, d = 0 the cross-ratio test reads b (1 + 3c) < 4c.
  auto width = [](double c) { return std::max(0.0, 4.0 * c / (1.0 + 3.0 * c) - c); };
  return 2.0 * adaptive_simpson(width, 0.0, 1.0, tol / 2.0);
}

double ph_quadrature(const HyperProbSetup& setup, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
  // Heights b = e^{Lu} > c = e^{Lv} with d = 1, a = R. The test is linear in
  // X = b^2 and holds iff X < 1 + 4me / (m + 3e), where m = R^2 - 1 and
  // e = c^2 - 1; that bound always lies in [c^2, R^2].
  const double log_len = setup.log_length();
  const double m = std::expm1(2.0 * log_len);
  auto width = [&](double v) {
    const double e = std::expm1(2.0 * log_len * v);
    const double u_max = std::log1p(4.0 * m * e / (m + 3.0 * e)) / (2.0 * log_len);
    return std::max(0.0, u_max - v);
  };
  return 2.0 * adaptive_simpson(width, 0.0, 1.0, tol / 2.0);
}

std::optional<double> calibrate_ratio(double target, std::pair<double, double> bracket,
                                      double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
  double lo = bracket.first, hi = bracket.second;
  if (!(lo > 1.0) || !(hi > lo) || !std::isfinite(hi))
    throw Error(ErrorKind::InvalidArgument, "calibration bracket must satisfy 1 < lo < hi");
  constexpr double kQuadTol = 1e-13;
  auto excess = [&](double ratio) { return ph_quadrature(HyperProbSetup(ratio), kQuadTol) - target; };
  double f_lo = excess(lo);
  const double f_hi = excess(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;
  // bisection in log(ratio)
  while (hi - lo > tol * lo) {
    const double mid = std::sqrt(lo * hi);
    const double f_mid = excess(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

}  // namespace hapol
