#pragma once

#include <Eigen/Dense>

#include "isac/array.hpp"

namespace isac {

// Steering vector, its range/angle derivatives, and the rank-one outer
// products that drive the Fisher information:
//   outer = a aᵀ, outer_range = ∂(a aᵀ)/∂r, outer_angle = ∂(a aᵀ)/∂θ.
struct SteeringDerivatives {
  Eigen::VectorXcd steering;
  Eigen::VectorXcd d_range;
  Eigen::VectorXcd d_angle;
  Eigen::MatrixXcd outer;
  Eigen::MatrixXcd outer_range;
  Eigen::MatrixXcd outer_angle;
};

SteeringDerivatives steering_derivatives(const UlaConfig& cfg, const PolarPoint& target);

// 2×2 blocks of the Fisher information for ξ = [r, θ, β^r, β^i]:
//   [[J11, J12], [J12ᵀ, J22]], J22 = j22·I.
struct FimBlocks {
  Eigen::Matrix2d j11;
  Eigen::Matrix2d j12;
  Eigen::Matrix2d j22;
  double snapshots = 0.0;
  double noise_power = 0.0;
  Complex gain;

  Eigen::Matrix4d full() const;
};

FimBlocks fim(const SteeringDerivatives& deriv, const Eigen::MatrixXcd& covariance, Complex gain,
              double snapshots, double noise_power);

// 2×2 bound on (r, θ); distance entry in m², angle entry in rad².
struct CrbMatrix {
  Eigen::Matrix2d matrix;
  double distance() const { return matrix(0, 0); }
  double angle() const { return matrix(1, 1); }
  double trace() const { return matrix.trace(); }
};

// (J11 - J12 J22⁻¹ J12ᵀ)⁻¹. Throws SingularFim when J22 or the Schur
// complement loses definiteness (target not illuminated).
CrbMatrix crb(const FimBlocks& blocks);

// Analog-combined receive path: every outer-product matrix is left-multiplied
// by W_RF and the effective noise power is N·σ_s².
CrbMatrix crb_hybrid(const SteeringDerivatives& deriv, const Eigen::MatrixXcd& radiated_covariance,
                     const Eigen::MatrixXcd& analog_combiner, Complex gain, double snapshots,
                     double noise_power);

// Angle-only bound with the planar-wavefront dictionary, ξ = [θ, β^r, β^i].
double far_field_crb(const UlaConfig& cfg, double theta, const Eigen::MatrixXcd& covariance,
                     Complex gain, double snapshots, double noise_power);

}  // namespace isac
