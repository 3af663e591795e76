#pragma once

#include <map>
#include <optional>
#include <string>

#include "gdh/enumerate.hpp"
#include "gdh/rational.hpp"

namespace gdh {

/// Cycle shape ∏ t^{b_t} with Σ t·b_t = 24 and all b_t > 0.
struct CycleShape {
  std::map<long, long> terms;  // cycle length t -> exponent b_t

  long order() const;  // lcm of the lengths
  friend bool operator==(const CycleShape&, const CycleShape&) = default;
};

/// Parses "1^2 2^2 3^2 6^2" (bare factor means exponent 1); validates
/// Σ t·b_t = 24.
CycleShape parse_cycle_shape(const std::string& s);
std::string shape_name(const CycleShape& s);

/// Bundled per-shape class data; optional fields are null where the
/// bundled tables do not state them.
struct ShapeClassInfo {
  CycleShape shape;
  std::optional<long> lifted_order;  // |φ_η(ν)|, = order or 2·order
  std::optional<bool> doubling;
  std::optional<bool> defect_is_one;
};

struct EisensteinCoeffs {
  long n = 1;
  std::map<long, Rat> coeffs;  // d | n -> c_n(d)
};

/// Unique solution of Σ_{d|n} c_n(d)·gcd(t,d) = n/t over the divisors of n,
/// solved exactly; uniqueness (invertibility of the gcd matrix) asserted.
EisensteinCoeffs eisenstein_coeffs(long n);

/// ρ_ν = (1/24)·Σ_t b_t·(t - 1/t).
Rat vacuum_anomaly(const CycleShape& s);

/// Shape of the d-th power: t^{b_t} ↦ (t/gcd(t,d))^{b_t·gcd(t,d)}.
CycleShape power_shape(const CycleShape& s, long d);

/// Σ_t b_t·gcd(t,d): the eigenvalue-1 multiplicity of the d-th power,
/// used as dim of the fixed weight-1 space.
long fixdim_power(const CycleShape& s, long d);

/// 24 + Σ_{d|n} c_n(d)·fixdim_power(s,d); asserts the result is an integer.
long dim_bound(const CycleShape& s, long n);

/// ρ_ν + (min coset norm)/2.
Rat twisted_weight(const Rat& rho_nu, const Coset& coset, const EnumOptions& opt = {});

}  // namespace gdh
