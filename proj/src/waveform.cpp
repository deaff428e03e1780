#include "isac/waveform.hpp"

#include <stdexcept>

namespace isac {

namespace {

void require_hermitian_psd(const Eigen::MatrixXcd& m, double tol, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": not square");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > 1e-10 * scale)
    throw std::invalid_argument(std::string(what) + ": not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol * scale)
    throw std::invalid_argument(std::string(what) + ": not positive semidefinite");
}

void require_unit_modulus(const Eigen::MatrixXcd& m, const char* what) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (std::abs(std::abs(m(i, j)) - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + ": entry is not unit modulus");
}

}  // namespace

IsacWaveform::IsacWaveform(Eigen::MatrixXcd beamformers, Eigen::MatrixXcd sensing_covariance,
                           double psd_tol)
    : beamformers_(std::move(beamformers)), sensing_covariance_(std::move(sensing_covariance)) {
  require_hermitian_psd(sensing_covariance_, psd_tol, "IsacWaveform sensing covariance");
  if (beamformers_.cols() > 0 && beamformers_.rows() != sensing_covariance_.rows())
    throw std::invalid_argument("IsacWaveform: beamformer length mismatch");
  if (beamformers_.cols() == 0 && beamformers_.rows() != sensing_covariance_.rows())
    beamformers_.resize(sensing_covariance_.rows(), 0);
}

Eigen::MatrixXcd IsacWaveform::covariance() const {
  Eigen::MatrixXcd r = sensing_covariance_;
  if (beamformers_.cols() > 0) r += beamformers_ * beamformers_.adjoint();
  return r;
}

double IsacWaveform::total_power() const { return covariance().trace().real(); }

HybridFrontEnd::HybridFrontEnd(Eigen::MatrixXcd analog_precoder, Eigen::MatrixXcd analog_combiner,
                               Eigen::MatrixXcd digital_beamformers,
                               Eigen::MatrixXcd digital_sensing_covariance, double psd_tol)
    : analog_precoder_(std::move(analog_precoder)),
      analog_combiner_(std::move(analog_combiner)),
      digital_beamformers_(std::move(digital_beamformers)),
      digital_sensing_covariance_(std::move(digital_sensing_covariance)) {
  require_unit_modulus(analog_precoder_, "HybridFrontEnd analog precoder");
  require_unit_modulus(analog_combiner_, "HybridFrontEnd analog combiner");
  require_hermitian_psd(digital_sensing_covariance_, psd_tol,
                        "HybridFrontEnd digital sensing covariance");
  const Eigen::Index n_rf = analog_precoder_.cols();
  if (analog_combiner_.rows() != n_rf || digital_sensing_covariance_.rows() != n_rf ||
      (digital_beamformers_.cols() > 0 && digital_beamformers_.rows() != n_rf))
    throw std::invalid_argument("HybridFrontEnd: RF-chain dimension mismatch");
  if (analog_combiner_.cols() != analog_precoder_.rows())
    throw std::invalid_argument("HybridFrontEnd: combiner antenna dimension mismatch");
  if (digital_beamformers_.cols() + 1 > n_rf)
    throw std::invalid_argument("HybridFrontEnd: needs K+1 <= N_RF RF chains");
}

Eigen::MatrixXcd HybridFrontEnd::baseband_covariance() const {
  Eigen::MatrixXcd r = digital_sensing_covariance_;
  if (digital_beamformers_.cols() > 0) r += digital_beamformers_ * digital_beamformers_.adjoint();
  return r;
}

Eigen::MatrixXcd HybridFrontEnd::radiated_covariance() const {
  return analog_precoder_ * baseband_covariance() * analog_precoder_.adjoint();
}

IsacWaveform HybridFrontEnd::effective_waveform() const {
  Eigen::MatrixXcd beams = analog_precoder_ * digital_beamformers_;
  Eigen::MatrixXcd sensing =
      analog_precoder_ * digital_sensing_covariance_ * analog_precoder_.adjoint();
  // Symmetrize away roundoff so the waveform constructor's Hermitian check holds.
  sensing = 0.5 * (sensing + sensing.adjoint().eval());
  return IsacWaveform(std::move(beams), std::move(sensing));
}

}  // namespace isac
