#pragma once

// Fifth-order point-value interpolation at x_{j+1/2} from six uniformly
// spaced samples W_{j-2}, ..., W_{j+3}: limited WENO-Z weights or the
// nonlimited linear weights.

#include <array>
#include <cmath>

namespace aweno {

using Stencil6 = std::array<double, 6>;
using Triple = std::array<double, 3>;

enum class InterpolationMode { Limited, Nonlimited };

struct WenoParams {
  double power = 2.0;
  double epsilon = 1e-12;
  Triple linear_weights{1.0 / 16.0, 5.0 / 8.0, 5.0 / 16.0};
};

/// Values of the three parabolas through (j-2..j), (j-1..j+1), (j..j+2) at
/// x_{j+1/2}. Index 0 of the stencil is j-2.
inline Triple parabolic_values(const Stencil6& w) {
  return {3.0 / 8.0 * w[0] - 5.0 / 4.0 * w[1] + 15.0 / 8.0 * w[2],
          -1.0 / 8.0 * w[1] + 3.0 / 4.0 * w[2] + 3.0 / 8.0 * w[3],
          3.0 / 8.0 * w[2] + 3.0 / 4.0 * w[3] - 1.0 / 8.0 * w[4]};
}

inline Triple smoothness_betas(const Stencil6& w) {
  const double a0 = w[0] - 2.0 * w[1] + w[2];
  const double b0 = w[0] - 4.0 * w[1] + 3.0 * w[2];
  const double a1 = w[1] - 2.0 * w[2] + w[3];
  const double b1 = w[1] - w[3];
  const double a2 = w[2] - 2.0 * w[3] + w[4];
  const double b2 = 3.0 * w[2] - 4.0 * w[3] + w[4];
  return {13.0 / 12.0 * a0 * a0 + 0.25 * b0 * b0, 13.0 / 12.0 * a1 * a1 + 0.25 * b1 * b1,
          13.0 / 12.0 * a2 * a2 + 0.25 * b2 * b2};
}

inline Triple wenoz_weights(const Triple& beta, const WenoParams& params) {
  const double tau5 = std::abs(beta[2] - beta[0]);
  Triple alpha;
  for (int k = 0; k < 3; ++k) {
    const double r = tau5 / (beta[k] + params.epsilon);
    const double rp = params.power == 2.0 ? r * r : std::pow(r, params.power);
    alpha[k] = params.linear_weights[k] * (1.0 + rp);
  }
  const double sum = alpha[0] + alpha[1] + alpha[2];
  return {alpha[0] / sum, alpha[1] / sum, alpha[2] / sum};
}

inline Triple linear_weights(const WenoParams& params) {
  const Triple& d = params.linear_weights;
  const double sum = d[0] + d[1] + d[2];
  return {d[0] / sum, d[1] / sum, d[2] / sum};
}

/// Left-sided value W^-_{j+1/2}.
inline double interpolate_left(const Stencil6& w, InterpolationMode mode, const WenoParams& params = {}) {
  const Triple p = parabolic_values(w);
  const Triple om = mode == InterpolationMode::Limited ? wenoz_weights(smoothness_betas(w), params)
                                                       : linear_weights(params);
  return om[0] * p[0] + om[1] * p[1] + om[2] * p[2];
}

inline Stencil6 reversed(const Stencil6& w) { return {w[5], w[4], w[3], w[2], w[1], w[0]}; }

/// Right-sided value W^+_{j+1/2}: the left kernel applied to the mirrored
/// stencil (W_{j+3}, ..., W_{j-2}).
inline double interpolate_right(const Stencil6& w, InterpolationMode mode, const WenoParams& params = {}) {
  return interpolate_left(reversed(w), mode, params);
}

}  // namespace aweno
