#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace isac {

// splitmix64; used to derive independent stream seeds from (seed, index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix_seed(seed, stream));
}

// Circularly symmetric complex Gaussian, unit variance per complex entry.
inline Eigen::VectorXcd randn_complex(std::mt19937_64& gen, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v[i] = std::complex<double>(re, im);
  }
  return v;
}

inline Eigen::MatrixXcd randn_complex_matrix(std::mt19937_64& gen, Eigen::Index rows,
                                             Eigen::Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) m.col(c) = randn_complex(gen, rows);
  return m;
}

// Uniform phase on the unit circle.
inline std::complex<double> random_phase(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> uni(0.0, 2.0 * EIGEN_PI);
  const double phi = uni(gen);
  return {std::cos(phi), std::sin(phi)};
}

// Unit-power QPSK symbol.
inline std::complex<double> random_qpsk(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> pick(0, 3);
  constexpr double s = 0.70710678118654752440;
  switch (pick(gen)) {
    case 0: return {s, s};
    case 1: return {s, -s};
    case 2: return {-s, s};
    default: return {-s, -s};
  }
}

}  // namespace isac
