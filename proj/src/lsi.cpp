#include "aweno/lsi.hpp"

#include <cmath>

namespace aweno {

IndicatorSelector IndicatorSelector::parse(const std::string& text) {
  if (text == "pressure") return pressure();
  if (text == "density") return density();
  const std::string prefix = "component:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      return {IndicatorKind::Component, std::stoi(text.substr(prefix.size()))};
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("unknown indicator '" + text + "' (expected pressure, density or component:<k>)");
}

std::string IndicatorSelector::to_string() const {
  switch (kind) {
    case IndicatorKind::Pressure: return "pressure";
    case IndicatorKind::Density: return "density";
    case IndicatorKind::Component: return "component:" + std::to_string(component);
  }
  return "pressure";
}

std::string to_string(SmearStencil s) { return s == SmearStencil::Printed ? "printed" : "normalized"; }

SmearStencil parse_smear_stencil(const std::string& name) {
  if (name == "printed") return SmearStencil::Printed;
  if (name == "normalized") return SmearStencil::Normalized;
  throw ConfigError("unknown smear stencil '" + name + "' (expected printed or normalized)");
}

void AdaptiveConfig::validate() const {
  if (!(constant >= 0.0)) throw ConfigError("adaption constant C must be nonnegative");
}

double AdaptiveConfig::threshold(double dt_previous) const {
  return constant * std::pow(dt_previous, 1.5);
}

template <int Dim>
ScalarField<Dim> extract_indicator(const ConservedField<Dim>& u, const GasParams& gas,
                                   const IndicatorSelector& selector) {
  ScalarField<Dim> psi(u.grid());
  const Grid<Dim>& grid = u.grid();
  if (selector.kind == IndicatorKind::Component && (selector.component < 0 || selector.component >= Dim + 2)) {
    throw ConfigError("indicator component out of range");
  }
  auto value = [&](const ConservedState<Dim>& U) {
    switch (selector.kind) {
      case IndicatorKind::Pressure: return cons_to_prim<Dim>(U, gas).p;
      case IndicatorKind::Density: return U[0];
      case IndicatorKind::Component: return U[selector.component];
    }
    return 0.0;
  };
  if constexpr (Dim == 1) {
    for (int i = 0; i < grid.cells(0); ++i) psi(i)[0] = value(u(i));
  } else {
    for (int j = 0; j < grid.cells(1); ++j)
      for (int i = 0; i < grid.cells(0); ++i) psi(i, j)[0] = value(u(i, j));
  }
  return psi;
}

template <int Dim>
ScalarField<Dim> pointwise_lsi(const ScalarField<Dim>& current, const LsiHistory<Dim>& history) {
  ScalarField<Dim> d(current.grid());
  const auto& now = current.values();
  const auto& prev = history.previous.values();
  const auto& mid = history.stage_two.values();
  auto& out = d.values();
  // ghost entries are meaningless here; callers refill them
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    out[idx][0] = std::abs((now[idx][0] + prev[idx][0]) / 2.0 - mid[idx][0]);
  return d;
}

template <int Dim>
ScalarField<Dim> smear_lsi(const ScalarField<Dim>& d, SmearStencil stencil) {
  ScalarField<Dim> s(d.grid());
  const Grid<Dim>& grid = d.grid();
  if constexpr (Dim == 1) {
    const double centre = stencil == SmearStencil::Printed ? 1.0 : 4.0;
    for (int j = 0; j < grid.cells(0); ++j) s(j)[0] = 1.0 / 6.0 * (d(j - 1)[0] + centre * d(j)[0] + d(j + 1)[0]);
  } else {
    (void)stencil;
    for (int k = 0; k < grid.cells(1); ++k)
      for (int j = 0; j < grid.cells(0); ++j) {
        const double corners = d(j - 1, k - 1)[0] + d(j - 1, k + 1)[0] + d(j + 1, k - 1)[0] + d(j + 1, k + 1)[0];
        const double edges = d(j - 1, k)[0] + d(j, k - 1)[0] + d(j, k + 1)[0] + d(j + 1, k)[0];
        s(j, k)[0] = 1.0 / 36.0 * (corners + 4.0 * edges + 16.0 * d(j, k)[0]);
      }
  }
  return s;
}

template <int Dim>
RoughnessMask<Dim> flag_rough(const ScalarField<Dim>& smoothed, const AdaptiveConfig& cfg, double dt_previous) {
  const Grid<Dim>& grid = smoothed.grid();
  RoughnessMask<Dim> mask(grid, false);
  const double threshold = cfg.threshold(dt_previous);
  if constexpr (Dim == 1) {
    for (int j = 0; j < grid.cells(0); ++j) {
      if (!(smoothed(j)[0] > threshold)) continue;
      // faces j-3/2 .. j+3/2 are interfaces j-1 .. j+2
      for (int i = j - 1; i <= j + 2; ++i) mask.mark_clamped(0, i, 0);
    }
  } else {
    for (int k = 0; k < grid.cells(1); ++k)
      for (int j = 0; j < grid.cells(0); ++j) {
        if (!(smoothed(j, k)[0] > threshold)) continue;
        for (int dk = -1; dk <= 1; ++dk) {
          mask.mark_clamped(0, j, k + dk);
          mask.mark_clamped(0, j + 1, k + dk);
          mask.mark_clamped(1, j + dk, k);
          mask.mark_clamped(1, j + dk, k + 1);
        }
        mask.mark_clamped(0, j - 1, k);
        mask.mark_clamped(0, j + 2, k);
        mask.mark_clamped(1, j, k - 1);
        mask.mark_clamped(1, j, k + 2);
      }
  }
  return mask;
}

template <int Dim>
std::optional<ScalarField<Dim>> LsiTracker<Dim>::smoothed(const ScalarField<Dim>& current) const {
  if (!history_) return std::nullopt;
  ScalarField<Dim> d = pointwise_lsi<Dim>(current, *history_);
  fill_ghosts_scalar(d, bc_);
  return smear_lsi<Dim>(d, stencil_);
}

template ScalarField<1> extract_indicator<1>(const ConservedField<1>&, const GasParams&, const IndicatorSelector&);
template ScalarField<2> extract_indicator<2>(const ConservedField<2>&, const GasParams&, const IndicatorSelector&);
template ScalarField<1> pointwise_lsi<1>(const ScalarField<1>&, const LsiHistory<1>&);
template ScalarField<2> pointwise_lsi<2>(const ScalarField<2>&, const LsiHistory<2>&);
template ScalarField<1> smear_lsi<1>(const ScalarField<1>&, SmearStencil);
template ScalarField<2> smear_lsi<2>(const ScalarField<2>&, SmearStencil);
template RoughnessMask<1> flag_rough<1>(const ScalarField<1>&, const AdaptiveConfig&, double);
template RoughnessMask<2> flag_rough<2>(const ScalarField<2>&, const AdaptiveConfig&, double);
template class LsiTracker<1>;
template class LsiTracker<2>;

}  // namespace aweno
