#include "isac/array.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "isac/diagnostics.hpp"
#include "isac/errors.hpp"

namespace isac {

UlaConfig::UlaConfig(int num_antennas, double spacing, double wavelength)
    : num_antennas_(num_antennas), spacing_(spacing), wavelength_(wavelength) {
  if (num_antennas < 3 || num_antennas % 2 == 0)
    throw std::invalid_argument("UlaConfig: num_antennas must be odd and >= 3");
  if (!(spacing > 0.0)) throw std::invalid_argument("UlaConfig: spacing must be positive");
  if (!(wavelength > 0.0)) throw std::invalid_argument("UlaConfig: wavelength must be positive");
}

UlaConfig UlaConfig::from_aperture(int num_antennas, double aperture, double wavelength) {
  if (num_antennas < 3) throw std::invalid_argument("UlaConfig: num_antennas must be >= 3");
  return UlaConfig(num_antennas, aperture / (num_antennas - 1), wavelength);
}

PolarPoint::PolarPoint(double r_m, double theta_rad) : r(r_m), theta(theta_rad) {
  if (!(r > 0.0)) throw std::invalid_argument("PolarPoint: r must be positive");
  if (!(theta > 0.0 && theta < EIGEN_PI))
    throw std::invalid_argument("PolarPoint: theta must lie in (0, pi)");
}

double element_distance(const UlaConfig& cfg, const PolarPoint& p, int n) {
  if (std::abs(n) > cfg.half_span())
    throw std::invalid_argument("element_distance: element index out of range");
  const double nd = n * cfg.spacing();
  return std::sqrt(p.r * p.r + nd * nd - 2.0 * p.r * nd * std::cos(p.theta));
}

Eigen::VectorXcd near_field_steering(const UlaConfig& cfg, const PolarPoint& p) {
  const Eigen::Index n = cfg.num_antennas();
  const double k = cfg.wavenumber();
  Eigen::VectorXcd a(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double excess = element_distance(cfg, p, cfg.element_index(i)) - p.r;
    a[i] = std::polar(1.0, -k * excess);
  }
  return a;
}

Eigen::VectorXcd far_field_steering(const UlaConfig& cfg, double theta) {
  if (!(theta > 0.0 && theta < EIGEN_PI))
    throw std::invalid_argument("far_field_steering: theta must lie in (0, pi)");
  const Eigen::Index n = cfg.num_antennas();
  const double k = cfg.wavenumber();
  const double cos_theta = std::cos(theta);
  Eigen::VectorXcd a(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double nd = cfg.element_index(i) * cfg.spacing();
    a[i] = std::polar(1.0, k * nd * cos_theta);
  }
  return a;
}

Complex pathloss_gain(const UlaConfig& cfg, const PolarPoint& p, PathlossConvention convention) {
  if (p.r < cfg.fresnel_lower_bound()) {
    std::ostringstream msg;
    msg << "pathloss_gain: r = " << p.r << " m is below the Fresnel bound 1.2*D = "
        << cfg.fresnel_lower_bound() << " m; constant-gain model degrades";
    warn(msg.str());
  }
  double rho0 = cfg.wavelength() / (4.0 * EIGEN_PI);
  if (convention == PathlossConvention::FourPiSquared) rho0 *= rho0;
  const double magnitude = std::sqrt(rho0) / p.r;
  return std::polar(magnitude, -cfg.wavenumber() * p.r);
}

ChannelVector user_channel(const UlaConfig& cfg, const PolarPoint& p,
                           PathlossConvention convention) {
  return channel_from_gain(cfg, p, pathloss_gain(cfg, p, convention));
}

ChannelVector channel_from_gain(const UlaConfig& cfg, const PolarPoint& p, Complex gain) {
  return {gain * near_field_steering(cfg, p), gain};
}

SensingChannel sensing_channel(const UlaConfig& cfg, const PolarPoint& target, Complex gain) {
  const Eigen::VectorXcd a = near_field_steering(cfg, target);
  Eigen::MatrixXcd g = gain * (a * a.transpose());
  return {std::move(g), gain, target};
}

double achievable_rate(const ChannelVector& h, const Eigen::VectorXcd& beamformer,
                       const Eigen::MatrixXcd& covariance, double noise_power) {
  if (!(noise_power > 0.0)) throw std::invalid_argument("achievable_rate: noise_power <= 0");
  // hᵀ f = h̄ᴴ f and hᵀ R h* = h̄ᴴ R h̄, real for Hermitian R.
  const Eigen::VectorXcd hc = h.vector.conjugate();
  const Complex desired = hc.dot(beamformer);
  const double total = std::real(hc.dot(covariance * hc));
  const double signal = std::norm(desired);
  const double denom = total - signal + noise_power;
  const double tol = 1e-9 * std::max(1.0, std::abs(total)) + 1e-12 * noise_power;
  if (denom < -tol)
    throw InfeasibleWaveform("achievable_rate: negative interference-plus-noise power", denom);
  const double sinr = signal / std::max(denom, noise_power * 1e-15);
  return std::log2(1.0 + sinr);
}

}  // namespace isac
