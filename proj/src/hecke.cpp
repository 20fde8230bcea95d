#include <cmath>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "arithver/equivariant_gmod.hpp"

namespace arithver {

namespace {

constexpr mpfr_prec_t kPrec = 170;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// An enclosure [lo, hi] for a real number.
struct Interval {
  mpfr_t lo, hi;
  Interval() {
    mpfr_init2(lo, kPrec);
    mpfr_init2(hi, kPrec);
  }
  ~Interval() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;
};

void log_of(Interval& out, double x) {
  mpfr_t v;
  mpfr_init2(v, 64);
  mpfr_set_d(v, x, MPFR_RNDN);  // exact: a double fits in 64 bits
  mpfr_log(out.lo, v, MPFR_RNDD);
  mpfr_log(out.hi, v, MPFR_RNDU);
  mpfr_clear(v);
}

// acc += c·x with outward rounding.
void add_scaled(Interval& acc, long c, const Interval& x) {
  mpfr_t t;
  mpfr_init2(t, kPrec);
  if (c >= 0) {
    mpfr_mul_si(t, x.lo, c, MPFR_RNDD);
    mpfr_add(acc.lo, acc.lo, t, MPFR_RNDD);
    mpfr_mul_si(t, x.hi, c, MPFR_RNDU);
    mpfr_add(acc.hi, acc.hi, t, MPFR_RNDU);
  } else {
    mpfr_mul_si(t, x.hi, c, MPFR_RNDD);
    mpfr_add(acc.lo, acc.lo, t, MPFR_RNDD);
    mpfr_mul_si(t, x.lo, c, MPFR_RNDU);
    mpfr_add(acc.hi, acc.hi, t, MPFR_RNDU);
  }
  mpfr_clear(t);
}

// Certified upper bound on |n·log p + m·log q − log x|, as a double rounded up.
double residual_bound(const Interval& lp, const Interval& lq, const Interval& lx, long n, long m) {
  Interval r;
  mpfr_set_zero(r.lo, 1);
  mpfr_set_zero(r.hi, 1);
  add_scaled(r, n, lp);
  add_scaled(r, m, lq);
  add_scaled(r, -1, lx);
  mpfr_abs(r.lo, r.lo, MPFR_RNDU);
  mpfr_abs(r.hi, r.hi, MPFR_RNDU);
  const double a = mpfr_get_d(r.lo, MPFR_RNDU), b = mpfr_get_d(r.hi, MPFR_RNDU);
  return a > b ? a : b;
}

}  // namespace

HeckeApprox hecke_log_approx(double x, long p, long q, double eps, long max_n) {
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("hecke_log_approx: x must be positive");
  if (!(eps > 0)) throw std::invalid_argument("hecke_log_approx: eps must be positive");
  if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("hecke_log_approx: p and q must be distinct odd primes");

  Interval lp, lq, lx;
  log_of(lp, static_cast<double>(p));
  log_of(lq, static_cast<double>(q));
  log_of(lx, x);
  const long double a = std::log(static_cast<long double>(p));
  const long double b = std::log(static_cast<long double>(q));
  const long double t = std::log(static_cast<long double>(x));

  for (long k = 0; k <= 2 * max_n; ++k) {
    const long n = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    const long double target = (t - n * a) / b;
    const long m = std::lround(target);
    const long double approx = std::fabs(n * a + m * b - t);
    if (approx >= eps * 1.000001L + 1e-15L) continue;
    const double bound = residual_bound(lp, lq, lx, n, m);
    if (bound < eps) return {n, m, bound};
  }
  throw MathError("hecke_log_approx: no solution with |n| <= " + std::to_string(max_n));
}

}  // namespace arithver
