#pragma once

#include <Eigen/Dense>
#include <complex>

namespace isac {

using Complex = std::complex<double>;

// Free-space pathloss at the reference distance. PaperLinear is rho0 = λ/(4π);
// FourPiSquared is the conventional (λ/(4π))² form. The choice only rescales
// SNR and is isolated here.
enum class PathlossConvention { PaperLinear, FourPiSquared };

// Symmetric ULA on the x-axis with an odd element count N = 2*half_span + 1.
// Element n sits at (n*d, 0) for n in {-half_span, ..., half_span}.
class UlaConfig {
 public:
  UlaConfig(int num_antennas, double spacing, double wavelength);

  // Builds the array from its physical aperture D = (N-1)d.
  static UlaConfig from_aperture(int num_antennas, double aperture, double wavelength);

  int num_antennas() const { return num_antennas_; }
  int half_span() const { return (num_antennas_ - 1) / 2; }
  double spacing() const { return spacing_; }
  double wavelength() const { return wavelength_; }
  double aperture() const { return (num_antennas_ - 1) * spacing_; }
  double rayleigh_distance() const {
    const double d = aperture();
    return 2.0 * d * d / wavelength_;
  }
  // Lower edge of the Fresnel region, 1.2*D.
  double fresnel_lower_bound() const { return 1.2 * aperture(); }
  double wavenumber() const { return 2.0 * EIGEN_PI / wavelength_; }

  // Signed element index for storage row i in [0, N).
  int element_index(Eigen::Index i) const { return static_cast<int>(i) - half_span(); }

 private:
  int num_antennas_;
  double spacing_;
  double wavelength_;
};

// Location in the array plane: range r > 0 meters, angle θ in (0, π) radians
// measured from the positive array axis.
struct PolarPoint {
  PolarPoint(double r_m, double theta_rad);
  double r;
  double theta;
};

// h = β a(r, θ): per-element response with a common Fresnel-region gain.
struct ChannelVector {
  Eigen::VectorXcd vector;  // β a(r, θ)
  Complex gain;             // β
};

// Round-trip monostatic channel G = β_s a aᵀ (complex symmetric, rank one).
struct SensingChannel {
  Eigen::MatrixXcd matrix;
  Complex gain;
  PolarPoint target;
};

// ‖r - s_n‖ for element n.
double element_distance(const UlaConfig& cfg, const PolarPoint& p, int n);

// Near-field (spherical wavefront) steering vector, unity at the center element.
Eigen::VectorXcd near_field_steering(const UlaConfig& cfg, const PolarPoint& p);

// Planar-wavefront limit; depends on the angle only.
Eigen::VectorXcd far_field_steering(const UlaConfig& cfg, double theta);

// Complex gain β = (√ρ0 / r) e^{-j 2π r / λ}. Emits a warning diagnostic when
// r is below the Fresnel bound 1.2*D; the value is still defined.
Complex pathloss_gain(const UlaConfig& cfg, const PolarPoint& p,
                      PathlossConvention convention = PathlossConvention::PaperLinear);

// h_k = β_k a(r_k, θ_k) with β_k from the pathloss model.
ChannelVector user_channel(const UlaConfig& cfg, const PolarPoint& p,
                           PathlossConvention convention = PathlossConvention::PaperLinear);

ChannelVector channel_from_gain(const UlaConfig& cfg, const PolarPoint& p, Complex gain);

SensingChannel sensing_channel(const UlaConfig& cfg, const PolarPoint& target, Complex gain);

// log2(1 + |hᵀf|² / (hᵀ R_x h* - |hᵀf|² + σ²)) in bits/s/Hz. Throws
// InfeasibleWaveform when the denominator is negative beyond tolerance.
double achievable_rate(const ChannelVector& h, const Eigen::VectorXcd& beamformer,
                       const Eigen::MatrixXcd& covariance, double noise_power);

}  // namespace isac
