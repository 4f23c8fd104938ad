#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nrsched/model.hpp"

namespace nrsched {

/// A value rounded up to a power of the base: either exactly zero or
/// base^exponent. Equality and hashing use only these two fields.
struct RoundedValue {
  bool zero = true;
  long exponent = 0;

  static RoundedValue make_zero() { return RoundedValue{}; }
  static RoundedValue power(long k) { return RoundedValue{false, k}; }

  friend bool operator==(const RoundedValue&, const RoundedValue&) = default;
};

/// Exact geometric rounding r(v) = base^ceil(log_base v), r(0) = 0, with
/// base = 1 + step for a rational step > 0.
///
/// Two entry points: arbitrary rationals (mpq_class), and the DP fast path
/// `Scaled` = num / d^exp where d is the base's denominator. Sums and
/// products of powers of the base stay in that form, so the DP never pays
/// for gcd normalization. The exponent is located from a floating-point
/// estimate and then fixed by exact integer comparisons.
///
/// Not thread-safe: power tables grow lazily.
class GeometricRounding {
 public:
  struct Scaled {
    mpz_class num;
    long exp = 0;
  };

  explicit GeometricRounding(Ratio step);

  RoundedValue round(const mpq_class& v);
  RoundedValue round(const Scaled& v);

  mpq_class value(RoundedValue r);
  /// Requires r.exponent >= 0 (or zero).
  Scaled scaled(RoundedValue r);

  Scaled from_int(const mpz_class& v) const { return Scaled{v, 0}; }
  Scaled add(const Scaled& x, const Scaled& y);
  Scaled mul(const Scaled& x, const Scaled& y) const { return Scaled{x.num * y.num, x.exp + y.exp}; }
  Scaled mul(const Scaled& x, const mpz_class& k) const { return Scaled{x.num * k, x.exp}; }
  int compare(const Scaled& x, const Scaled& y);
  mpq_class to_rational(const Scaled& x);

  /// base = numerator / denominator in lowest terms.
  const mpz_class& numerator() const noexcept { return c_; }
  const mpz_class& denominator() const noexcept { return d_; }

 private:
  const mpz_class& cpow(long k);
  const mpz_class& dpow(long k);
  mpq_class qpow(long k);
  long estimate(double log_v) const;

  template <class Cmp>
  long search(long guess, Cmp&& base_pow_ge);

  mpz_class c_;
  mpz_class d_;
  double log_base_;
  std::vector<mpz_class> cpow_;
  std::vector<mpz_class> dpow_;
};

/// Rounding base 1 + eps/(2n) used by the FPTAS for n jobs.
Ratio fptas_rounding_step(Ratio eps, Int n);

/// Throws InvalidEpsilon unless 0 < eps <= 1.
void validate_epsilon(Ratio eps);

/// r(v) with base 1 + eps/(2n).
RoundedValue round_up(const mpq_class& v, Ratio eps, Int n);

}  // namespace nrsched
