#pragma once

// Local smoothness indicator built from the SSP-RK3 stage-two solution and
// two consecutive time levels, and the rough-interface mask derived from it.

#include <optional>
#include <string>

#include "aweno/euler.hpp"
#include "aweno/grid.hpp"
#include "aweno/mask.hpp"

namespace aweno {

enum class IndicatorKind { Pressure, Density, Component };

struct IndicatorSelector {
  IndicatorKind kind = IndicatorKind::Pressure;
  int component = 0;  // used by IndicatorKind::Component

  static IndicatorSelector pressure() { return {}; }
  static IndicatorSelector density() { return {IndicatorKind::Density, 0}; }
  static IndicatorSelector parse(const std::string& text);
  std::string to_string() const;
};

/// 1-D smear stencils. Printed: (D_{j-1} + D_j + D_{j+1})/6, weights
/// summing to 1/2. Normalized: (D_{j-1} + 4 D_j + D_{j+1})/6, the 1-D
/// factor of the 2-D tensor stencil. 2-D always uses (1, 4, 1) x (1, 4, 1)/36.
enum class SmearStencil { Printed, Normalized };

std::string to_string(SmearStencil s);
SmearStencil parse_smear_stencil(const std::string& name);

/// Threshold C * dt_prev^(3/2).
struct AdaptiveConfig {
  double constant = 1.0;

  void validate() const;
  double threshold(double dt_previous) const;
};

/// Indicator variable psi per interior cell.
template <int Dim>
ScalarField<Dim> extract_indicator(const ConservedField<Dim>& u, const GasParams& gas,
                                   const IndicatorSelector& selector);

/// psi(t^{n-1}), psi^II(t^{n-1/2}) and dt^{n-1}.
template <int Dim>
struct LsiHistory {
  ScalarField<Dim> previous;
  ScalarField<Dim> stage_two;
  double dt_previous = 0.0;
};

/// D_j = |(psi_j(t^n) + psi_j(t^{n-1}))/2 - psi_j^II(t^{n-1/2})| on
/// interior cells.
template <int Dim>
ScalarField<Dim> pointwise_lsi(const ScalarField<Dim>& current, const LsiHistory<Dim>& history);

/// Spatial smear of D (see SmearStencil). Ghosts of `d` must be filled.
template <int Dim>
ScalarField<Dim> smear_lsi(const ScalarField<Dim>& d, SmearStencil stencil = SmearStencil::Printed);

/// Flags interfaces near every cell whose smoothed indicator exceeds the
/// threshold. 1-D: x_{j-3/2}, x_{j-1/2}, x_{j+1/2}, x_{j+3/2}. 2-D: the
/// x-interfaces (j+-1/2, k+-1), (j+-1/2, k), (j+-3/2, k) and the mirrored
/// y-interfaces.
template <int Dim>
RoughnessMask<Dim> flag_rough(const ScalarField<Dim>& smoothed, const AdaptiveConfig& cfg, double dt_previous);

/// Keeps the LSI history between steps.
template <int Dim>
class LsiTracker {
 public:
  LsiTracker(GasParams gas, IndicatorSelector selector, BoundarySet<Dim> bc,
             SmearStencil stencil = SmearStencil::Printed)
      : gas_(gas), selector_(selector), bc_(bc), stencil_(stencil) {}

  bool has_history() const { return history_.has_value(); }
  const std::optional<LsiHistory<Dim>>& history() const { return history_; }
  const IndicatorSelector& selector() const { return selector_; }

  ScalarField<Dim> indicator(const ConservedField<Dim>& u) const { return extract_indicator<Dim>(u, gas_, selector_); }

  /// Smoothed indicator at t^{n-1/2} given the solution at t^n, or nullopt
  /// on the first step.
  std::optional<ScalarField<Dim>> smoothed(const ScalarField<Dim>& current) const;

  /// Stores psi(t^n), psi^II(t^{n+1/2}) and dt^n after a completed step.
  void advance(ScalarField<Dim> start_of_step, ScalarField<Dim> stage_two, double dt) {
    history_ = LsiHistory<Dim>{std::move(start_of_step), std::move(stage_two), dt};
  }

 private:
  GasParams gas_;
  IndicatorSelector selector_;
  BoundarySet<Dim> bc_;
  SmearStencil stencil_;
  std::optional<LsiHistory<Dim>> history_;
};

}  // namespace aweno
