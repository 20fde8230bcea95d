#pragma once

// Hyperbolic reflection triangles in the hyperboloid model of the real
// hyperbolic plane, with Q(x, y, z) = x² + y² − z².

#include <array>
#include <optional>
#include <vector>

#include "arithver/exact_rings.hpp"

namespace arithver {

struct HypVec {
  double x = 0, y = 0, z = 0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Polar form of Q.
double lorentz(const HypVec& u, const HypVec& v);

/// Angles π/p, π/q, π/r between sides (1,2), (1,3), (2,3).
struct TriangleSig {
  int p = 2, q = 3, r = 7;
  bool hyperbolic() const;
  /// Throws std::invalid_argument unless all entries are ≥ 2 and 1/p + 1/q + 1/r < 1.
  void validate() const;
};

/// Unit spacelike normals n₁, n₂, n₃ with B(nᵢ, nⱼ) = −cos(angle between sides i, j).
std::array<HypVec, 3> triangle_from_angles(const TriangleSig& sig);

/// x ↦ x − 2·B(x, n)·n. Throws std::invalid_argument unless |Q(n) − 1| ≤ tol.
Mat3 reflection_matrix(const HypVec& n, double tol = 1e-12);

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 mat_identity();
double max_abs_diff(const Mat3& a, const Mat3& b);
/// max |MᵗJM − J| with J = diag(1, 1, −1).
double form_defect(const Mat3& m);

/// Smallest k ≤ max_order with M^k = I within tol.
std::optional<int> rotation_order(const Mat3& m, int max_order, double tol);

double area_gauss_bonnet(const TriangleSig& sig);
/// −area/(2π) as an exact rational.
Rational orbifold_euler(const TriangleSig& sig);

/// Compact arithmetic triangle groups (Takeuchi), as sorted triples.
const std::vector<std::array<int, 3>>& arithmetic_triangle_table();
bool is_arithmetic(const TriangleSig& sig);

}  // namespace arithver
