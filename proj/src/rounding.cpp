#include "nrsched/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nrsched {

namespace {

double log_of(const mpz_class& v) {
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

GeometricRounding::GeometricRounding(Ratio step) {
  if (step.num <= 0 || step.den <= 0) throw Error(ErrorKind::InvalidEpsilon, "rounding step must be positive");
  mpq_class base(mpz_class(step.den) + mpz_class(step.num), mpz_class(step.den));
  base.canonicalize();
  c_ = base.get_num();
  d_ = base.get_den();
  log_base_ = std::log1p(static_cast<double>(step.num) / static_cast<double>(step.den));
  cpow_.push_back(1);
  dpow_.push_back(1);
}

const mpz_class& GeometricRounding::cpow(long k) {
  while (static_cast<long>(cpow_.size()) <= k) cpow_.push_back(cpow_.back() * c_);
  return cpow_[static_cast<std::size_t>(k)];
}

const mpz_class& GeometricRounding::dpow(long k) {
  while (static_cast<long>(dpow_.size()) <= k) dpow_.push_back(dpow_.back() * d_);
  return dpow_[static_cast<std::size_t>(k)];
}

mpq_class GeometricRounding::qpow(long k) {
  if (k >= 0) return mpq_class(cpow(k), dpow(k));
  return mpq_class(dpow(-k), cpow(-k));
}

long GeometricRounding::estimate(double log_v) const {
  const double k = std::ceil(log_v / log_base_);
  constexpr double limit = 1e15;
  return static_cast<long>(std::clamp(k, -limit, limit));
}

// Smallest k with base^k >= v, starting from `guess`. base_pow_ge(k) must be
// monotone in k.
template <class Cmp>
long GeometricRounding::search(long guess, Cmp&& base_pow_ge) {
  long k = guess;
  if (base_pow_ge(k)) {
    while (base_pow_ge(k - 1)) --k;
  } else {
    do ++k;
    while (!base_pow_ge(k));
  }
  return k;
}

RoundedValue GeometricRounding::round(const mpq_class& v) {
  if (sgn(v) < 0) throw Error(ErrorKind::InvariantViolation, "cannot round a negative value");
  if (sgn(v) == 0) return RoundedValue::make_zero();
  const long guess = estimate(log_of(v.get_num()) - log_of(v.get_den()));
  return RoundedValue::power(search(guess, [&](long k) { return qpow(k) >= v; }));
}

RoundedValue GeometricRounding::round(const Scaled& v) {
  if (sgn(v.num) < 0) throw Error(ErrorKind::InvariantViolation, "cannot round a negative value");
  if (sgn(v.num) == 0) return RoundedValue::make_zero();
  // Values below 1 need negative exponents; the rational path handles them.
  if (v.num < dpow(v.exp)) return round(to_rational(v));
  const long guess = std::max(0L, estimate(log_of(v.num) - static_cast<double>(v.exp) * log_of(d_)));
  // c^k / d^k >= num / d^e  <=>  c^k * d^e >= num * d^k
  auto ge = [&](long k) {
    if (k < 0) return false;
    return cpow(k) * dpow(v.exp) >= v.num * dpow(k);
  };
  return RoundedValue::power(search(guess, ge));
}

mpq_class GeometricRounding::value(RoundedValue r) {
  if (r.zero) return mpq_class(0);
  return qpow(r.exponent);
}

GeometricRounding::Scaled GeometricRounding::scaled(RoundedValue r) {
  if (r.zero) return Scaled{0, 0};
  if (r.exponent < 0) throw Error(ErrorKind::InvariantViolation, "negative exponent has no scaled form");
  return Scaled{cpow(r.exponent), r.exponent};
}

GeometricRounding::Scaled GeometricRounding::add(const Scaled& x, const Scaled& y) {
  if (x.exp == y.exp) return Scaled{x.num + y.num, x.exp};
  if (x.exp < y.exp) return Scaled{x.num * dpow(y.exp - x.exp) + y.num, y.exp};
  return Scaled{x.num + y.num * dpow(x.exp - y.exp), x.exp};
}

int GeometricRounding::compare(const Scaled& x, const Scaled& y) {
  if (x.exp == y.exp) return cmp(x.num, y.num);
  if (x.exp < y.exp) return cmp(mpz_class(x.num * dpow(y.exp - x.exp)), y.num);
  return cmp(x.num, mpz_class(y.num * dpow(x.exp - y.exp)));
}

mpq_class GeometricRounding::to_rational(const Scaled& x) {
  mpq_class q(x.num, dpow(x.exp));
  q.canonicalize();
  return q;
}

void validate_epsilon(Ratio eps) {
  if (eps.den <= 0 || eps.num <= 0 || eps.num > eps.den)
    throw Error(ErrorKind::InvalidEpsilon, "eps must satisfy 0 < eps <= 1, got " + eps.to_string());
}

Ratio fptas_rounding_step(Ratio eps, Int n) {
  validate_epsilon(eps);
  if (n < 1) throw Error(ErrorKind::InvariantViolation, "job count must be positive");
  return Ratio{eps.num, 2 * n * eps.den};
}

RoundedValue round_up(const mpq_class& v, Ratio eps, Int n) {
  GeometricRounding rounding(fptas_rounding_step(eps, n));
  return rounding.round(v);
}

}  // namespace nrsched
