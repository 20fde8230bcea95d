#include "arithver/hyperbolic_triangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arithver {

double lorentz(const HypVec& u, const HypVec& v) { return u.x * v.x + u.y * v.y - u.z * v.z; }

bool TriangleSig::hyperbolic() const { return p >= 2 && q >= 2 && r >= 2 && q * r + p * r + p * q < p * q * r; }

void TriangleSig::validate() const {
  if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("triangle signature entries must be >= 2");
  if (!hyperbolic()) throw std::invalid_argument("triangle signature is not hyperbolic: 1/p + 1/q + 1/r >= 1");
}

std::array<HypVec, 3> triangle_from_angles(const TriangleSig& sig) {
  sig.validate();
  const double cp = std::cos(M_PI / sig.p), sp = std::sin(M_PI / sig.p);
  const double cq = std::cos(M_PI / sig.q), cr = std::cos(M_PI / sig.r);
  HypVec n1{1, 0, 0};
  HypVec n2{-cp, sp, 0};
  const double a = -cq;
  const double b = (-cr + a * cp) / sp;
  const double c = std::sqrt(a * a + b * b - 1);
  return {n1, n2, HypVec{a, b, c}};
}

Mat3 reflection_matrix(const HypVec& n, double tol) {
  if (std::abs(lorentz(n, n) - 1) > tol) throw std::invalid_argument("reflection_matrix: normal is not a unit spacelike vector");
  const double v[3] = {n.x, n.y, n.z};
  const double Jv[3] = {n.x, n.y, -n.z};  // B(x, n) = x·Jn
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? 1.0 : 0.0) - 2 * v[i] * Jv[j];
  return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat3 mat_identity() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double form_defect(const Mat3& m) {
  const double J[3] = {1, 1, -1};
  Mat3 g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g[i][j] += m[k][i] * J[k] * m[k][j];
  Mat3 Jm{};
  for (int i = 0; i < 3; ++i) Jm[i][i] = J[i];
  return max_abs_diff(g, Jm);
}

std::optional<int> rotation_order(const Mat3& m, int max_order, double tol) {
  Mat3 p = m;
  const Mat3 I = mat_identity();
  for (int k = 1; k <= max_order; ++k) {
    if (max_abs_diff(p, I) <= tol) return k;
    p = mat_mul(p, m);
  }
  return std::nullopt;
}

double area_gauss_bonnet(const TriangleSig& sig) {
  sig.validate();
  return M_PI - (M_PI / sig.p + M_PI / sig.q + M_PI / sig.r);
}

Rational orbifold_euler(const TriangleSig& sig) {
  sig.validate();
  Rational s = Rational(1, sig.p) + Rational(1, sig.q) + Rational(1, sig.r);
  return -(1 - s) / 2;
}

const std::vector<std::array<int, 3>>& arithmetic_triangle_table() {
  static const std::vector<std::array<int, 3>> table = {
      {2, 4, 6},   {2, 6, 6},   {3, 4, 4},   {3, 6, 6},                                                // Q
      {2, 3, 8},   {2, 4, 8},   {2, 6, 8},   {2, 8, 8},   {3, 3, 4}, {3, 8, 8}, {4, 4, 4}, {4, 6, 6},  // Q(√2)
      {4, 8, 8},                                                                                      //
      {2, 3, 12},  {2, 6, 12},  {3, 3, 6},   {3, 4, 12},  {3, 12, 12}, {6, 6, 6},                      // Q(√3)
      {2, 4, 12},  {2, 12, 12}, {4, 4, 6},   {6, 12, 12},                                              //
      {2, 4, 5},   {2, 4, 10},  {2, 5, 5},   {2, 10, 10}, {4, 4, 5}, {5, 10, 10},                      // Q(√5)
      {2, 5, 6},   {3, 5, 5},                                                                          //
      {2, 3, 10},  {2, 5, 10},  {3, 3, 5},   {5, 5, 5},                                                //
      {3, 4, 6},                                                                                      // Q(√6)
      {2, 3, 7},   {2, 3, 14},  {2, 4, 7},   {2, 7, 7},   {2, 7, 14}, {3, 3, 7}, {7, 7, 7},            // Q(cos π/7)
      {2, 3, 16},  {2, 8, 16},  {3, 3, 8},   {4, 16, 16}, {8, 8, 8},                                   // Q(cos π/8)
      {2, 5, 20},  {5, 5, 10},                                                                         // Q(cos π/10)
      {2, 3, 24},  {2, 12, 24}, {3, 3, 12},  {3, 8, 24},  {6, 24, 24}, {12, 12, 12},                   // Q(cos π/12)
      {2, 3, 9},   {2, 3, 18},  {2, 9, 18},  {3, 3, 9},   {3, 6, 18}, {9, 9, 9},                       // Q(cos π/9)
      {2, 4, 18},  {2, 18, 18}, {4, 4, 9},   {9, 18, 18},                                              //
      {2, 3, 30},  {2, 15, 30}, {3, 3, 15},  {3, 10, 30}, {15, 15, 15},                                // Q(cos π/15)
      {2, 5, 30},  {5, 5, 15},                                                                         //
      {2, 3, 11},                                                                                      // Q(cos π/11)
      {2, 5, 8},   {4, 5, 5},                                                                          // Q(√2, √5)
  };
  return table;
}

bool is_arithmetic(const TriangleSig& sig) {
  sig.validate();
  std::array<int, 3> k = {sig.p, sig.q, sig.r};
  std::sort(k.begin(), k.end());
  const auto& t = arithmetic_triangle_table();
  return std::find(t.begin(), t.end(), k) != t.end();
}

}  // namespace arithver
