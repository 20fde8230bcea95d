#include "arithver/glue_combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arithver {

void NodeDatum::validate() const {
  if (m < 2) throw std::invalid_argument("NodeDatum: m must be >= 2");
  if (a < 0 || b < 0) throw std::invalid_argument("NodeDatum: a and b must be nonnegative");
  if (2 * a + b > n) throw std::invalid_argument("NodeDatum: 2a + b exceeds the dimension n");
}

namespace {
Integer ipow(int base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}
}  // namespace

Integer count_equivalent_involutions(const NodeDatum& d) {
  d.validate();
  return ipow(d.m, d.a + d.b);
}

Integer node_group_order(const NodeDatum& d) {
  d.validate();
  return ipow(d.m, d.nodes());
}

int intersection_dimension(const NodeDatum& d, const CopyLabel& j, const CopyLabel& jp) {
  d.validate();
  if (j.size() != static_cast<std::size_t>(d.a) || jp.size() != j.size())
    throw std::invalid_argument("intersection_dimension: labels must have length a");
  int c = 0;
  for (std::size_t v = 0; v < j.size(); ++v)
    if (((j[v] - jp[v]) % d.m + d.m) % d.m == 0) ++c;
  return 2 * c + (d.n - 2 * d.a);
}

CopiesReport copies_and_intersections(const NodeDatum& d, std::size_t max_labels) {
  d.validate();
  Integer total = ipow(d.m, d.a);
  if (total > Integer(static_cast<unsigned long>(max_labels)))
    throw std::invalid_argument("copies_and_intersections: " + total.get_str() + " labels exceed the limit");
  CopiesReport rep;
  CopyLabel cur(d.a, 0);
  for (;;) {
    rep.labels.push_back(cur);
    int k = d.a;
    while (k > 0 && ++cur[k - 1] == d.m) cur[--k] = 0;
    if (k == 0) break;
  }
  const std::size_t N = rep.labels.size();
  rep.dimensions.assign(N, std::vector<int>(N));
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) rep.dimensions[x][y] = intersection_dimension(d, rep.labels[x], rep.labels[y]);
  return rep;
}

int ExponentAssignment::partner(int v) const {
  if (v < 2 * a) return v ^ 1;
  return v;
}

bool involution_criterion(const ExponentAssignment& e) {
  if (e.m < 2 || e.a < 0 || static_cast<int>(e.i.size()) < 2 * e.a)
    throw std::invalid_argument("involution_criterion: invalid exponent assignment");
  for (int v = 0; v < static_cast<int>(e.i.size()); ++v)
    if (((e.i[v] - e.i[e.partner(v)]) % e.m + e.m) % e.m != 0) return false;
  return true;
}

RotationRep rotation_representative(const Rational& r, const Rational& q, int m) {
  if (m < 2) throw std::invalid_argument("rotation_representative: m must be >= 2");
  if (sgn(r) < 0) throw std::invalid_argument("rotation_representative: modulus must be nonnegative");
  Rational mq = m * q;
  if (mq.get_den() != 1) throw MathError("rotation_representative: t^m is not real");
  RotationRep rep;
  rep.r = r;
  rep.r_value = r.get_d();
  if (sgn(r) == 0) return rep;
  // arguments are taken modulo 2π/m; with m = 2^s·k the representative angle
  // π/2^s = π·k/m has odd numerator, so only the parity of m·q matters
  Integer j = mq.get_num();
  rep.epsilon = mpz_odd_p(j.get_mpz_t()) ? 1 : 0;
  return rep;
}

RotationRep rotation_representative(std::complex<double> t, int m, double tol) {
  if (m < 2) throw std::invalid_argument("rotation_representative: m must be >= 2");
  const double mod = std::abs(t);
  RotationRep rep;
  rep.r_value = mod;
  rep.r = Rational(mod);
  if (mod == 0) return rep;
  const double x = m * std::arg(t) / M_PI;
  const double j = std::round(x);
  if (std::abs(x - j) > tol) throw MathError("rotation_representative: t^m is not real within tolerance");
  long jl = static_cast<long>(j);
  rep.epsilon = static_cast<int>(((jl % 2) + 2) % 2);
  return rep;
}

}  // namespace arithver
