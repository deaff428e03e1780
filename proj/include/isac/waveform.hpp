#pragma once

#include <Eigen/Dense>

#include "isac/array.hpp"

namespace isac {

// Transmit design: K communication beamformers plus a dedicated sensing
// covariance. Immutable after construction; the constructor checks that the
// sensing covariance is Hermitian PSD within tolerance.
class IsacWaveform {
 public:
  IsacWaveform(Eigen::MatrixXcd beamformers, Eigen::MatrixXcd sensing_covariance,
               double psd_tol = 1e-8);

  const Eigen::MatrixXcd& beamformers() const { return beamformers_; }
  Eigen::VectorXcd beamformer(Eigen::Index k) const { return beamformers_.col(k); }
  const Eigen::MatrixXcd& sensing_covariance() const { return sensing_covariance_; }
  Eigen::Index num_users() const { return beamformers_.cols(); }
  Eigen::Index num_antennas() const { return sensing_covariance_.rows(); }

  // R_x = Σ f_k f_kᴴ + R_s
  Eigen::MatrixXcd covariance() const;
  double total_power() const;

 private:
  Eigen::MatrixXcd beamformers_;        // N×K, K may be zero
  Eigen::MatrixXcd sensing_covariance_; // N×N
};

// Phase-shifter network wrapped around a low-dimensional digital stage. All
// analog entries are unit modulus; checked at construction within 1e-12.
class HybridFrontEnd {
 public:
  HybridFrontEnd(Eigen::MatrixXcd analog_precoder, Eigen::MatrixXcd analog_combiner,
                 Eigen::MatrixXcd digital_beamformers, Eigen::MatrixXcd digital_sensing_covariance,
                 double psd_tol = 1e-8);

  const Eigen::MatrixXcd& analog_precoder() const { return analog_precoder_; }    // F_RF, N×N_RF
  const Eigen::MatrixXcd& analog_combiner() const { return analog_combiner_; }    // W_RF, N_RF×N
  const Eigen::MatrixXcd& digital_beamformers() const { return digital_beamformers_; }
  const Eigen::MatrixXcd& digital_sensing_covariance() const { return digital_sensing_covariance_; }
  Eigen::Index num_antennas() const { return analog_precoder_.rows(); }
  Eigen::Index num_rf_chains() const { return analog_precoder_.cols(); }
  Eigen::Index num_users() const { return digital_beamformers_.cols(); }

  // R_BB = Σ f_BB,k f_BB,kᴴ + R_BB,s
  Eigen::MatrixXcd baseband_covariance() const;
  // R_HB = F_RF R_BB F_RFᴴ
  Eigen::MatrixXcd radiated_covariance() const;
  // Antenna-domain view: f_HB,k = F_RF f_BB,k and sensing covariance F_RF R_BB,s F_RFᴴ.
  IsacWaveform effective_waveform() const;

 private:
  Eigen::MatrixXcd analog_precoder_;
  Eigen::MatrixXcd analog_combiner_;
  Eigen::MatrixXcd digital_beamformers_;
  Eigen::MatrixXcd digital_sensing_covariance_;
};

}  // namespace isac
