#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace gdh {

/// Exact rational scalar. All lattice geometry in this library is carried
/// out in `Rat`; no floating point ever enters an accept/reject decision.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Nearest integer; halves round up. Exact.
inline Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

inline std::string to_string(const Rat& q) {
  return is_integer(q) ? q.get_num().get_str()
                       : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "a/b" or "a". Decimal notation is rejected on purpose.
inline Rat parse_rat(const std::string& s) {
  if (s.empty() || s.find('.') != std::string::npos)
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  try {
    Rat q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  }
}

}  // namespace gdh

namespace Eigen {

template <>
struct NumTraits<gdh::Rat> : GenericNumTraits<gdh::Rat> {
  typedef gdh::Rat Real;
  typedef gdh::Rat NonInteger;
  typedef gdh::Rat Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
