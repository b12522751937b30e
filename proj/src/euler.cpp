#include "aweno/euler.hpp"

#include <cstdio>

namespace aweno {

void validate(const GasParams& gas) {
  if (!(gas.gamma > 1.0) || !std::isfinite(gas.gamma)) {
    throw ConfigError("specific heat ratio must exceed 1, got " + std::to_string(gas.gamma));
  }
}

void validate(const PrimitiveState& w) {
  if (!(w.rho > 0.0) || !(w.p > 0.0) || !std::isfinite(w.rho) || !std::isfinite(w.p) ||
      !std::isfinite(w.u) || !std::isfinite(w.v)) {
    throw PhysicalStateError("invalid primitive state " + describe(w));
  }
}

std::string describe(const PrimitiveState& w) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(rho=%.6g, u=%.6g, v=%.6g, p=%.6g)", w.rho, w.u, w.v, w.p);
  return buf;
}

}  // namespace aweno
