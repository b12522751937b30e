#pragma once

// Euler equations of gas dynamics for an ideal gas in one and two space
// dimensions. Conserved variables are (rho, rho u, E) in 1-D and
// (rho, rho u, rho v, E) in 2-D.

#include <array>
#include <cmath>
#include <string>

#include "aweno/errors.hpp"

namespace aweno {

template <int K>
using Vec = std::array<double, K>;

/// Row-major K x K matrix, m[row][col].
template <int K>
using Matrix = std::array<std::array<double, K>, K>;

template <int K>
inline Vec<K> mat_vec(const Matrix<K>& m, const Vec<K>& x) {
  Vec<K> y{};
  for (int r = 0; r < K; ++r) {
    double s = 0.0;
    for (int c = 0; c < K; ++c) s += m[r][c] * x[c];
    y[r] = s;
  }
  return y;
}

template <int K>
inline Matrix<K> mat_mul(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> out{};
  for (int r = 0; r < K; ++r)
    for (int c = 0; c < K; ++c) {
      double s = 0.0;
      for (int k = 0; k < K; ++k) s += a[r][k] * b[k][c];
      out[r][c] = s;
    }
  return out;
}

struct GasParams {
  double gamma = 1.4;
};

/// Density, velocity components and pressure. `v` is ignored in 1-D.
struct PrimitiveState {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

template <int Dim>
using ConservedState = Vec<Dim + 2>;

template <int Dim>
constexpr int energy_index() {
  return Dim + 1;
}

void validate(const GasParams& gas);
void validate(const PrimitiveState& w);
std::string describe(const PrimitiveState& w);

template <int Dim>
inline double kinetic_energy(const ConservedState<Dim>& U) {
  double m2 = U[1] * U[1];
  if constexpr (Dim == 2) m2 += U[2] * U[2];
  return 0.5 * m2 / U[0];
}

/// p = (gamma - 1)(E - rho |u|^2 / 2); no validity check.
template <int Dim>
inline double pressure(const ConservedState<Dim>& U, const GasParams& gas) {
  return (gas.gamma - 1.0) * (U[energy_index<Dim>()] - kinetic_energy<Dim>(U));
}

template <int Dim>
inline bool is_physical(const ConservedState<Dim>& U, const GasParams& gas) {
  return U[0] > 0.0 && pressure<Dim>(U, gas) > 0.0 && std::isfinite(U[energy_index<Dim>()]);
}

template <int Dim>
ConservedState<Dim> prim_to_cons(const PrimitiveState& w, const GasParams& gas) {
  ConservedState<Dim> U{};
  U[0] = w.rho;
  U[1] = w.rho * w.u;
  double q2 = w.u * w.u;
  if constexpr (Dim == 2) {
    U[2] = w.rho * w.v;
    q2 += w.v * w.v;
  }
  U[energy_index<Dim>()] = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * q2;
  return U;
}

/// Throws PhysicalStateError on nonpositive density or internal energy.
template <int Dim>
PrimitiveState cons_to_prim(const ConservedState<Dim>& U, const GasParams& gas) {
  if (!(U[0] > 0.0)) throw PhysicalStateError("nonpositive density " + std::to_string(U[0]));
  const double p = pressure<Dim>(U, gas);
  if (!(p > 0.0)) throw PhysicalStateError("nonpositive internal energy (p = " + std::to_string(p) + ")");
  PrimitiveState w;
  w.rho = U[0];
  w.u = U[1] / U[0];
  if constexpr (Dim == 2) w.v = U[2] / U[0];
  w.p = p;
  return w;
}

/// Physical flux in direction `axis` (F for axis 0, G for axis 1).
template <int Dim>
inline ConservedState<Dim> physical_flux(const ConservedState<Dim>& U, const GasParams& gas,
                                         int axis = 0) {
  constexpr int e = energy_index<Dim>();
  const int n = 1 + axis;
  const double p = pressure<Dim>(U, gas);
  const double un = U[n] / U[0];
  ConservedState<Dim> F{};
  F[0] = U[n];
  F[1] = U[1] * un;
  if constexpr (Dim == 2) F[2] = U[2] * un;
  F[n] += p;
  F[e] = un * (U[e] + p);
  return F;
}

/// Sound speed; throws when p/rho is not positive.
template <int Dim>
inline double sound_speed(const ConservedState<Dim>& U, const GasParams& gas) {
  const double p = pressure<Dim>(U, gas);
  if (!(U[0] > 0.0) || !(p > 0.0)) {
    throw PhysicalStateError("invalid state for sound speed: rho = " + std::to_string(U[0]) +
                             ", p = " + std::to_string(p));
  }
  return std::sqrt(gas.gamma * p / U[0]);
}

/// Eigenvalues of the flux Jacobian in direction `axis`, ascending:
/// (un - c, un, un + c) in 1-D and (un - c, un, un, un + c) in 2-D.
template <int Dim>
inline ConservedState<Dim> eigenvalues(const ConservedState<Dim>& U, const GasParams& gas,
                                       int axis = 0) {
  const double c = sound_speed<Dim>(U, gas);
  const double un = U[1 + axis] / U[0];
  ConservedState<Dim> lam{};
  lam[0] = un - c;
  for (int i = 1; i <= Dim; ++i) lam[i] = un;
  lam[Dim + 1] = un + c;
  return lam;
}

/// Analytic flux Jacobian dF/dU in direction `axis`.
template <int Dim>
Matrix<Dim + 2> flux_jacobian(const ConservedState<Dim>& U, const GasParams& gas, int axis = 0) {
  constexpr int e = energy_index<Dim>();
  const double g1 = gas.gamma - 1.0;
  const int n = 1 + axis;
  const double un = U[n] / U[0];
  double q2 = un * un;
  double ut = 0.0;
  int t = -1;
  if constexpr (Dim == 2) {
    t = 2 - axis;
    ut = U[t] / U[0];
    q2 += ut * ut;
  }
  const double p = pressure<Dim>(U, gas);
  const double H = (U[e] + p) / U[0];
  Matrix<Dim + 2> A{};
  A[0][n] = 1.0;
  A[n][0] = 0.5 * g1 * q2 - un * un;
  A[n][n] = (3.0 - gas.gamma) * un;
  A[n][e] = g1;
  if constexpr (Dim == 2) {
    A[n][t] = -g1 * ut;
    A[t][0] = -un * ut;
    A[t][n] = ut;
    A[t][t] = un;
    A[e][t] = -g1 * un * ut;
  }
  A[e][0] = un * (0.5 * g1 * q2 - H);
  A[e][n] = H - g1 * un * un;
  A[e][e] = gas.gamma * un;
  return A;
}

/// Right eigenvectors (columns of `right`) and their inverse (`left`) of the
/// flux Jacobian at the averaged state, in eigenvalue-ascending order.
///
/// Convention: the acoustic and entropy eigenvectors have unit density
/// component; in 2-D the repeated eigenvalue carries the shear vector
/// (zero density, unit tangential momentum) first and the entropy vector
/// second.
template <int K>
struct CharacteristicBasis {
  Matrix<K> right{};
  Matrix<K> left{};
  Vec<K> averaged{};
};

template <int Dim>
inline CharacteristicBasis<Dim + 2> eigen_basis(const ConservedState<Dim>& Uhat,
                                               const GasParams& gas, int axis = 0) {
  constexpr int e = energy_index<Dim>();
  const double rho = Uhat[0];
  const double p = pressure<Dim>(Uhat, gas);
  if (!(rho > 0.0) || !(p > 0.0) || !std::isfinite(p)) {
    throw DecompositionError("averaged state is not physical: rho = " + std::to_string(rho) +
                             ", p = " + std::to_string(p));
  }
  const int n = 1 + axis;
  const double un = Uhat[n] / rho;
  double ut = 0.0;
  double q2 = un * un;
  if constexpr (Dim == 2) {
    ut = Uhat[2 - axis] / rho;
    q2 += ut * ut;
  }
  const double c2 = gas.gamma * p / rho;
  const double c = std::sqrt(c2);
  const double H = (Uhat[e] + p) / rho;
  const double b1 = (gas.gamma - 1.0) / c2;
  const double b2 = 0.5 * b1 * q2;
  const double inv_c = 1.0 / c;

  CharacteristicBasis<Dim + 2> B;
  B.averaged = Uhat;
  auto& R = B.right;
  auto& L = B.left;
  constexpr int last = Dim + 1;
  const int entropy = Dim;  // 1 in 1-D, 2 in 2-D

  // acoustic u - c
  R[0][0] = 1.0;
  R[n][0] = un - c;
  R[e][0] = H - un * c;
  // entropy
  R[0][entropy] = 1.0;
  R[n][entropy] = un;
  R[e][entropy] = 0.5 * q2;
  // acoustic u + c
  R[0][last] = 1.0;
  R[n][last] = un + c;
  R[e][last] = H + un * c;

  L[0][0] = 0.5 * (b2 + un * inv_c);
  L[0][n] = -0.5 * (b1 * un + inv_c);
  L[0][e] = 0.5 * b1;
  L[entropy][0] = 1.0 - b2;
  L[entropy][n] = b1 * un;
  L[entropy][e] = -b1;
  L[last][0] = 0.5 * (b2 - un * inv_c);
  L[last][n] = -0.5 * (b1 * un - inv_c);
  L[last][e] = 0.5 * b1;

  if constexpr (Dim == 2) {
    const int t = 2 - axis;
    R[t][0] = ut;
    R[t][entropy] = ut;
    R[t][last] = ut;
    // shear
    R[t][1] = 1.0;
    R[e][1] = ut;

    L[0][t] = -0.5 * b1 * ut;
    L[entropy][t] = b1 * ut;
    L[last][t] = -0.5 * b1 * ut;
    L[1][0] = -ut;
    L[1][t] = 1.0;
  }
  return B;
}

/// Local characteristic decomposition at an interface from the arithmetic
/// mean of the two neighbouring conserved states.
template <int Dim>
inline CharacteristicBasis<Dim + 2> lcd_basis(const ConservedState<Dim>& left_state,
                                             const ConservedState<Dim>& right_state,
                                             const GasParams& gas, int axis = 0) {
  ConservedState<Dim> avg;
  for (int k = 0; k < Dim + 2; ++k) avg[k] = 0.5 * (left_state[k] + right_state[k]);
  return eigen_basis<Dim>(avg, gas, axis);
}

/// Policy object binding the Euler physics to the generic flux assembly.
template <int Dim>
class EulerSystem {
 public:
  static constexpr int kDim = Dim;
  static constexpr int kVars = Dim + 2;
  using State = ConservedState<Dim>;
  using Basis = CharacteristicBasis<kVars>;

  explicit EulerSystem(GasParams gas = {}) : gas_(gas) {}

  const GasParams& gas() const { return gas_; }

  State flux(const State& U, int axis) const { return physical_flux<Dim>(U, gas_, axis); }
  State eigenvalues(const State& U, int axis) const { return aweno::eigenvalues<Dim>(U, gas_, axis); }
  Basis basis(const State& a, const State& b, int axis) const { return lcd_basis<Dim>(a, b, gas_, axis); }
  bool admissible(const State& U) const { return is_physical<Dim>(U, gas_); }

 private:
  GasParams gas_;
};

}  // namespace aweno
