#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "ghostsim/base.hpp"
#include "ghostsim/rng.hpp"

namespace ghostsim {

/// Source and optics constants of the down-conversion setup. Lengths in
/// metres. Defaults model a 3 mm type-I BBO crystal pumped at 355 nm with a
/// 1.2 mm (intensity FWHM) beam, relayed by an M = 3 imaging system or an
/// f_e = 300 mm Fourier system.
struct SpdcParams {
  double lambda_pump = 355e-9;
  double lambda_down = 710e-9;
  double crystal_length = 3e-3;
  double pump_fwhm_intensity = 1.2e-3;
  double magnification = 3.0;
  double effective_focal = 0.300;
  bool degenerate = true;  // enforce lambda_down = 2 * lambda_pump

  void validate() const {
    if (lambda_pump <= 0 || lambda_down <= 0 || crystal_length <= 0 ||
        pump_fwhm_intensity <= 0 || magnification <= 0 || effective_focal <= 0) {
      throw DomainError("SpdcParams: all lengths and the magnification must be positive");
    }
    if (degenerate) {
      const double rel = std::abs(lambda_down - 2.0 * lambda_pump) / lambda_down;
      if (rel > 1e-12) {
        throw DomainError("SpdcParams: degenerate source requires lambda_down = 2*lambda_pump");
      }
    }
  }
};

enum class PlaneMode { PositionCorrelated, MomentumAntiCorrelated };

inline const char* to_string(PlaneMode m) {
  return m == PlaneMode::PositionCorrelated ? "position" : "momentum";
}

// Measured field widths at the detection planes. These come from the
// experiment, not from the pump optics (the relay between crystal and
// detection planes is not modelled); overrides allow what-if runs.
inline constexpr double kDefaultGammaPosition = 1.83e-3;
inline constexpr double kDefaultGammaMomentum = 3.06e-3;

/// Amplitude standard deviation of a Gaussian beam specified by its
/// intensity FWHM: sigma_amp = FWHM / (2*sqrt(ln 2)).
inline double pump_amplitude_sigma(double fwhm_intensity) {
  if (fwhm_intensity <= 0) throw DomainError("pump_amplitude_sigma: FWHM must be positive");
  return fwhm_intensity / (2.0 * std::sqrt(std::numbers::ln2));
}

/// Pair correlation length in an image plane of the crystal:
/// sigma_IP = (M/sqrt(2)) * sqrt(0.455 L / k_p). The 0.455 factor is the
/// Gaussian stand-in for the sinc phase-matching profile.
inline double correlation_length_image_plane(double crystal_length, double lambda_pump,
                                             double magnification) {
  if (crystal_length <= 0 || lambda_pump <= 0 || magnification <= 0) {
    throw DomainError("correlation_length_image_plane: inputs must be positive");
  }
  const double k_p = 2.0 * std::numbers::pi / lambda_pump;
  return magnification / std::numbers::sqrt2 * std::sqrt(0.455 * crystal_length / k_p);
}

/// Pair correlation length in the far field:
/// sigma_FF = (1/sqrt(2)) * f_e / (sigma_p * k), with sigma_p the *amplitude*
/// stdev of the pump and k the down-converted wavenumber.
inline double correlation_length_far_field(double effective_focal, double sigma_p_amplitude,
                                           double lambda_down) {
  if (effective_focal <= 0 || sigma_p_amplitude <= 0 || lambda_down <= 0) {
    throw DomainError("correlation_length_far_field: inputs must be positive");
  }
  const double k = 2.0 * std::numbers::pi / lambda_down;
  return effective_focal / (sigma_p_amplitude * k * std::numbers::sqrt2);
}

/// The sampled two-plane pair state: an isotropic Gaussian marginal of width
/// gamma_marginal at each plane, with the partner position tied to it within
/// sigma_cond. corr_sign = +1 reproduces image-plane position correlation,
/// -1 far-field anti-correlation.
struct JointGaussian {
  double gamma_marginal = kDefaultGammaPosition;
  double sigma_cond = 0.0;
  int corr_sign = +1;

  void validate() const {
    if (gamma_marginal <= 0) throw DomainError("JointGaussian: gamma_marginal must be positive");
    if (sigma_cond < 0) throw DomainError("JointGaussian: sigma_cond must be non-negative");
    if (!(sigma_cond < gamma_marginal)) {
      throw ConfigError("JointGaussian: requires sigma_cond < gamma_marginal (strong correlation)");
    }
    if (corr_sign != +1 && corr_sign != -1) throw DomainError("JointGaussian: corr_sign must be +-1");
  }
};

struct StateOverrides {
  std::optional<double> gamma_marginal;
  std::optional<double> sigma_cond;
};

inline JointGaussian derive_joint_gaussian(const SpdcParams& params, PlaneMode mode,
                                           const StateOverrides& overrides = {}) {
  params.validate();
  JointGaussian state;
  if (mode == PlaneMode::PositionCorrelated) {
    state.gamma_marginal = kDefaultGammaPosition;
    state.sigma_cond =
        correlation_length_image_plane(params.crystal_length, params.lambda_pump, params.magnification);
    state.corr_sign = +1;
  } else {
    state.gamma_marginal = kDefaultGammaMomentum;
    state.sigma_cond = correlation_length_far_field(
        params.effective_focal, pump_amplitude_sigma(params.pump_fwhm_intensity), params.lambda_down);
    state.corr_sign = -1;
  }
  if (overrides.gamma_marginal) state.gamma_marginal = *overrides.gamma_marginal;
  if (overrides.sigma_cond) state.sigma_cond = *overrides.sigma_cond;
  state.validate();
  return state;
}

/// One down-converted pair: object-plane position, camera-plane position and
/// the emission time within the frame exposure.
struct PairSample {
  Vec2 rho_obj;
  Vec2 rho_cam;
  double t_emit = 0.0;
};

/// Draw a pair from the state. rho_cam is the isotropic marginal; rho_obj
/// follows it (or its point reflection) within sigma_cond per axis. This
/// conditional form inflates the object-plane marginal by
/// sqrt(1 + sigma_cond^2/gamma^2), below 1e-4 relative at default widths.
inline PairSample sample_pair(const JointGaussian& state, RngStream& rng, double frame_exposure) {
  PairSample s;
  s.rho_cam.x = rng.normal(0.0, state.gamma_marginal);
  s.rho_cam.y = rng.normal(0.0, state.gamma_marginal);
  s.rho_obj.x = state.corr_sign * s.rho_cam.x + rng.normal(0.0, state.sigma_cond);
  s.rho_obj.y = state.corr_sign * s.rho_cam.y + rng.normal(0.0, state.sigma_cond);
  s.t_emit = rng.uniform(0.0, frame_exposure);
  return s;
}

/// EPR variance product in units of hbar^2:
/// ((sigma_pos_cam / M) * (k/f_e) * sigma_mom_cam)^2, to be compared with 1/4.
inline double epr_variance_product(double sigma_pos_cam, double sigma_mom_cam, double magnification,
                                   double effective_focal, double lambda_down) {
  if (sigma_pos_cam <= 0 || sigma_mom_cam <= 0 || magnification <= 0 || effective_focal <= 0 ||
      lambda_down <= 0) {
    throw DomainError("epr_variance_product: inputs must be positive");
  }
  const double k = 2.0 * std::numbers::pi / lambda_down;
  const double delta_pos = sigma_pos_cam / magnification;
  const double delta_mom = k / effective_focal * sigma_mom_cam;
  const double product = delta_pos * delta_mom;
  return product * product;
}

}  // namespace ghostsim
