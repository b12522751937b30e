#pragma once

// Central-upwind finite-volume flux with local characteristic
// decomposition, the fifth-order A-WENO flux corrections, and assembly of
// the semi-discrete right-hand side dU/dt = -(F_{j+1/2} - F_{j-1/2})/dx
// (plus the y-direction analogue in 2-D).
//
// Everything here is templated on a physics policy `System` that provides
//   kDim, kVars, State, Basis,
//   State flux(const State&, int axis),
//   State eigenvalues(const State&, int axis)     (ascending),
//   Basis basis(const State& left, const State& right, int axis),
//   bool admissible(const State&),
// where Basis has `right` and `left` (= right^-1) matrices.

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aweno/errors.hpp"
#include "aweno/euler.hpp"
#include "aweno/grid.hpp"
#include "aweno/mask.hpp"
#include "aweno/weno.hpp"

namespace aweno {

template <int K>
struct InterfaceSpeeds {
  Vec<K> plus{};
  Vec<K> minus{};
};

template <int K>
struct DiffusionCoeffs {
  Vec<K> P{};
  Vec<K> M{};
  Vec<K> Q{};
};

struct SchemeParams {
  WenoParams weno{};
  /// Desingularization of the P, M, Q coefficients.
  double flux_epsilon = 1e-10;
  /// Replace interpolated values that are not admissible states by the
  /// neighbouring node values (first order at that interface only).
  bool node_fallback = true;
};

template <class System>
InterfaceSpeeds<System::kVars> one_sided_speeds(const System& sys, const typename System::State& u_minus,
                                                const typename System::State& u_plus, int axis = 0) {
  const auto lm = sys.eigenvalues(u_minus, axis);
  const auto lp = sys.eigenvalues(u_plus, axis);
  InterfaceSpeeds<System::kVars> s;
  for (int i = 0; i < System::kVars; ++i) {
    s.plus[i] = std::max({lm[i], lp[i], 0.0});
    s.minus[i] = std::min({lm[i], lp[i], 0.0});
  }
  return s;
}

template <int K>
DiffusionCoeffs<K> pmq_coeffs(const InterfaceSpeeds<K>& s, double epsilon) {
  DiffusionCoeffs<K> c;
  for (int i = 0; i < K; ++i) {
    const double span = s.plus[i] - s.minus[i];
    if (span > epsilon) {
      c.P[i] = s.plus[i] / span;
      c.M[i] = -s.minus[i] / span;
      c.Q[i] = s.plus[i] * s.minus[i] / span;
    }
  }
  return c;
}

/// Central average of the node fluxes plus the characteristic diffusion
/// R P R^-1 [F(U-) - avg] + R M R^-1 [F(U+) - avg] + R Q R^-1 (U+ - U-).
template <class System>
typename System::State cu_flux_with_basis(const System& sys, const typename System::State& u_minus,
                                          const typename System::State& u_plus,
                                          const typename System::State& flux_j,
                                          const typename System::State& flux_jp1,
                                          const typename System::Basis& basis, double epsilon,
                                          int axis) {
  constexpr int K = System::kVars;
  const auto coeffs = pmq_coeffs<K>(one_sided_speeds(sys, u_minus, u_plus, axis), epsilon);
  const auto f_minus = sys.flux(u_minus, axis);
  const auto f_plus = sys.flux(u_plus, axis);
  Vec<K> avg, a, b, c;
  for (int k = 0; k < K; ++k) {
    avg[k] = 0.5 * (flux_j[k] + flux_jp1[k]);
    a[k] = f_minus[k] - avg[k];
    b[k] = f_plus[k] - avg[k];
    c[k] = u_plus[k] - u_minus[k];
  }
  const Vec<K> la = mat_vec<K>(basis.left, a);
  const Vec<K> lb = mat_vec<K>(basis.left, b);
  const Vec<K> lc = mat_vec<K>(basis.left, c);
  Vec<K> w;
  for (int i = 0; i < K; ++i) w[i] = coeffs.P[i] * la[i] + coeffs.M[i] * lb[i] + coeffs.Q[i] * lc[i];
  const Vec<K> d = mat_vec<K>(basis.right, w);
  Vec<K> out;
  for (int k = 0; k < K; ++k) out[k] = avg[k] + d[k];
  return out;
}

/// Finite-volume flux from interpolated values u_minus/u_plus and the
/// neighbouring node states u_j/u_jp1 (which also define the LCD basis).
template <class System>
typename System::State cu_flux(const System& sys, const typename System::State& u_minus,
                               const typename System::State& u_plus, const typename System::State& u_j,
                               const typename System::State& u_jp1, double epsilon = 1e-10, int axis = 0) {
  const auto basis = sys.basis(u_j, u_jp1, axis);
  return cu_flux_with_basis(sys, u_minus, u_plus, sys.flux(u_j, axis), sys.flux(u_jp1, axis), basis, epsilon,
                            axis);
}

template <int K>
struct FluxCorrections {
  Vec<K> second{};  // (F_xx)_{j+1/2}
  Vec<K> fourth{};  // (F_xxxx)_{j+1/2}
};

/// Finite differences of the node fluxes F_{j-2..j+3} at x_{j+1/2}.
template <int K>
FluxCorrections<K> flux_corrections(const std::array<Vec<K>, 6>& f, double dx) {
  FluxCorrections<K> c;
  const double dx2 = dx * dx;
  const double dx4 = dx2 * dx2;
  for (int k = 0; k < K; ++k) {
    c.second[k] = (-5.0 * f[0][k] + 39.0 * f[1][k] - 34.0 * f[2][k] - 34.0 * f[3][k] + 39.0 * f[4][k] -
                   5.0 * f[5][k]) /
                  (48.0 * dx2);
    c.fourth[k] =
        (f[0][k] - 3.0 * f[1][k] + 2.0 * f[2][k] + 2.0 * f[3][k] - 3.0 * f[4][k] + f[5][k]) / (2.0 * dx4);
  }
  return c;
}

template <int K>
Vec<K> aweno_interface_flux(const Vec<K>& fv, const FluxCorrections<K>& corr, double dx) {
  const double dx2 = dx * dx;
  Vec<K> out;
  for (int k = 0; k < K; ++k) {
    out[k] = fv[k] - 1.0 / 24.0 * dx2 * corr.second[k] + 7.0 / 5760.0 * (dx2 * dx2) * corr.fourth[k];
  }
  return out;
}

/// One-sided interface values U^-_{j+1/2}, U^+_{j+1/2} from the stencil
/// U_{j-2..j+3}, interpolating local characteristic variables.
template <class System>
std::pair<typename System::State, typename System::State> characteristic_interpolation(
    const std::array<typename System::State, 6>& u, const typename System::Basis& basis, InterpolationMode mode,
    const WenoParams& weno) {
  constexpr int K = System::kVars;
  std::array<Vec<K>, 6> gamma;
  for (int m = 0; m < 6; ++m) gamma[m] = mat_vec<K>(basis.left, u[m]);
  Vec<K> gm, gp;
  for (int i = 0; i < K; ++i) {
    const Stencil6 s{gamma[0][i], gamma[1][i], gamma[2][i], gamma[3][i], gamma[4][i], gamma[5][i]};
    gm[i] = interpolate_left(s, mode, weno);
    gp[i] = interpolate_right(s, mode, weno);
  }
  return {mat_vec<K>(basis.right, gm), mat_vec<K>(basis.right, gp)};
}

/// Fifth-order A-WENO numerical flux at x_{j+1/2} from the node states and
/// node fluxes at j-2..j+3.
/// `fell_back`, when given, is set if the node fallback was used.
template <class System>
typename System::State interface_flux(const System& sys, const std::array<typename System::State, 6>& u,
                                      const std::array<typename System::State, 6>& f, int axis, double dx,
                                      InterpolationMode mode, const SchemeParams& params,
                                      bool* fell_back = nullptr) {
  const auto basis = sys.basis(u[2], u[3], axis);
  auto [u_minus, u_plus] = characteristic_interpolation<System>(u, basis, mode, params.weno);
  const bool fallback = params.node_fallback && !(sys.admissible(u_minus) && sys.admissible(u_plus));
  if (fallback) {
    u_minus = u[2];
    u_plus = u[3];
  }
  if (fell_back) *fell_back = fallback;
  const auto fv = cu_flux_with_basis(sys, u_minus, u_plus, f[2], f[3], basis, params.flux_epsilon, axis);
  return aweno_interface_flux<System::kVars>(fv, flux_corrections<System::kVars>(f, dx), dx);
}

/// Semi-discrete operator L[U]. Holds line buffers so repeated evaluations
/// do not allocate; a single instance must not be shared between threads.
template <class System>
class AwenoOperator {
 public:
  static constexpr int kDim = System::kDim;
  static constexpr int kVars = System::kVars;
  using State = typename System::State;
  using FieldType = Field<kDim, kVars>;
  using Source = std::function<void(const FieldType& u, FieldType& rhs)>;

  explicit AwenoOperator(System sys, SchemeParams params = {}, Source source = {})
      : sys_(std::move(sys)), params_(params), source_(std::move(source)) {}

  const System& system() const { return sys_; }
  const SchemeParams& params() const { return params_; }
  /// Interfaces that used the node fallback since construction.
  long fallback_count() const { return fallbacks_; }

  /// Writes L[u] into the interior of `out`; ghosts of `out` are zeroed.
  /// `u` must have its ghost cells filled.
  void apply(const FieldType& u, const RoughnessMask<kDim>& mask, FieldType& out) {
    const Grid<kDim>& grid = u.grid();
    if (out.values().size() != u.values().size()) out = FieldType(grid);
    std::fill(out.values().begin(), out.values().end(), State{});
    const int g = grid.ghosts();
    const int nx = grid.cells(0);
    const double dx = grid.spacing(0);

    if constexpr (kDim == 1) {
      sweep(&u(-g), nx, g, 0, dx, [&](int i) { return mask.rough(0, i); }, "x-interface ", 0);
      for (int i = 0; i < nx; ++i) {
        for (int k = 0; k < kVars; ++k) out(i)[k] = -(flux_[i + 1][k] - flux_[i][k]) / dx;
      }
    } else {
      const int ny = grid.cells(1);
      const double dy = grid.spacing(1);
      for (int j = 0; j < ny; ++j) {
        sweep(&u(-g, j), nx, g, 0, dx, [&](int i) { return mask.rough(0, i, j); }, "x-interface ", j);
        for (int i = 0; i < nx; ++i) {
          for (int k = 0; k < kVars; ++k) out(i, j)[k] = -(flux_[i + 1][k] - flux_[i][k]) / dx;
        }
      }
      column_.resize(static_cast<std::size_t>(ny + 2 * g));
      for (int i = 0; i < nx; ++i) {
        for (int j = -g; j < ny + g; ++j) column_[j + g] = u(i, j);
        sweep(column_.data(), ny, g, 1, dy, [&](int k) { return mask.rough(1, i, k); }, "y-interface ", i);
        for (int j = 0; j < ny; ++j) {
          for (int k = 0; k < kVars; ++k) out(i, j)[k] -= (flux_[j + 1][k] - flux_[j][k]) / dy;
        }
      }
    }
    if (source_) source_(u, out);
  }

 private:
  // Computes interface fluxes along one line. `line` points at the first
  // ghost cell (line index -g); results land in flux_[0..n].
  template <class RoughAt>
  void sweep(const State* line, int n, int g, int axis, double h, RoughAt&& rough_at, const char* what,
             int other) {
    nodes_.resize(static_cast<std::size_t>(n + 2 * g));
    flux_.resize(static_cast<std::size_t>(n + 1));
    for (int m = 0; m < n + 2 * g; ++m) nodes_[m] = sys_.flux(line[m], axis);
    int i = 0;
    try {
      for (; i <= n; ++i) {
        // stencil cells i-3 .. i+2 around the left face of cell i
        const int base = i - 3 + g;
        std::array<State, 6> u, f;
        for (int m = 0; m < 6; ++m) {
          u[m] = line[base + m];
          f[m] = nodes_[base + m];
        }
        const auto mode = rough_at(i) ? InterpolationMode::Limited : InterpolationMode::Nonlimited;
        bool fell_back = false;
        flux_[i] = interface_flux(sys_, u, f, axis, h, mode, params_, &fell_back);
        fallbacks_ += fell_back ? 1 : 0;
      }
    } catch (const PhysicalStateError& e) {
      const std::string where = kDim == 1 ? std::string(what) + std::to_string(i)
                                          : std::string(what) + std::to_string(axis == 0 ? i : other) + "," +
                                                std::to_string(axis == 0 ? other : i);
      throw PhysicalStateError(where + ": " + e.what());
    }
  }

  System sys_;
  SchemeParams params_;
  Source source_;
  std::vector<State> nodes_;
  std::vector<State> flux_;
  std::vector<State> column_;
  long fallbacks_ = 0;
};

/// Convenience wrapper evaluating L[u] once.
template <class System>
Field<System::kDim, System::kVars> semi_discrete_rhs(const System& sys, const Field<System::kDim, System::kVars>& u,
                                                     const RoughnessMask<System::kDim>& mask,
                                                     const SchemeParams& params = {}) {
  AwenoOperator<System> op(sys, params);
  Field<System::kDim, System::kVars> out(u.grid());
  op.apply(u, mask, out);
  return out;
}

}  // namespace aweno
