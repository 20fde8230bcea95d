#pragma once

// Real binary quintics as conjugation-stable 5-point multisets on P¹(C):
// stability, components, and stabilizers in PGL₂(R).

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "arithver/exact_rings.hpp"
#include "arithver/parallel.hpp"

namespace arithver {

using Real = boost::multiprecision::mpfr_float_50;

struct Complex {
  Real re, im;
  Complex() = default;
  Complex(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i = 0) : re(r), im(i) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex conj(const Complex& a);
Real abs(const Complex& a);

/// Homogeneous coordinates [z : w].
struct ProjPoint {
  Complex z{1.0}, w{1.0};
};

ProjPoint finite(const Complex& z);
ProjPoint infinity_point();
/// Scaled so the larger coordinate is 1; ∞ becomes [1 : 0].
ProjPoint normalized(const ProjPoint& p);
bool is_infinite(const ProjPoint& p, const Real& tol);
bool same_point(const ProjPoint& a, const ProjPoint& b, const Real& tol);
bool is_real_point(const ProjPoint& p, const Real& tol);
ProjPoint conj(const ProjPoint& p);
std::string to_string(const ProjPoint& p, int digits = 12);

inline const Real& default_tol() {
  static const Real t("1e-30");
  return t;
}

struct QuinticConfig {
  std::array<ProjPoint, 5> points;
  bool exact = false;  // coordinates were given exactly (e.g. rationals)
  bool smooth = true;
  int real_nodes = 0;
  int complex_node_pairs = 0;
};

/// Throws MathError if the multiset is not closed under conjugation or some
/// point has multiplicity ≥ 3.
QuinticConfig validate(const std::vector<ProjPoint>& points, const Real& tol = default_tol(), bool exact = false);

/// Number of complex-conjugate pairs; throws MathError unless smooth.
int component_index(const QuinticConfig& c, const Real& tol = default_tol());

/// 2×2 real matrix up to scalars, scaled so that the first entry of largest
/// magnitude is 1.
struct RealMoebius {
  std::array<Real, 4> m{1, 0, 0, 1};  // a b c d
};

RealMoebius moebius(const Real& a, const Real& b, const Real& c, const Real& d);
RealMoebius canonical(const RealMoebius& g);
RealMoebius compose(const RealMoebius& g, const RealMoebius& h);  // g∘h
RealMoebius inverse(const RealMoebius& g);
bool same_moebius(const RealMoebius& g, const RealMoebius& h, const Real& tol = default_tol());
bool is_identity(const RealMoebius& g, const Real& tol = default_tol());
/// Smallest n ≤ max_order with gⁿ = 1, or 0.
int element_order(const RealMoebius& g, int max_order = 12, const Real& tol = default_tol());
ProjPoint act(const RealMoebius& g, const ProjPoint& p);
QuinticConfig act(const RealMoebius& g, const QuinticConfig& c, const Real& tol = default_tol());

enum class StabLabel { trivial, z2, d3, d5, other };
std::string to_string(StabLabel l);

struct StabGroup {
  std::vector<RealMoebius> elements;  // identity first
  StabLabel label = StabLabel::trivial;
  std::vector<int> element_orders;  // sorted
  std::size_t order() const { return elements.size(); }
};

/// Exhaustive search over images of three support points. Throws MathError
/// if a candidate transformation is too ill-conditioned to decide realness.
StabGroup stabilizer(const QuinticConfig& c, const Real& tol = default_tol(), Exec exec = Exec::parallel);

bool closed_under_composition(const StabGroup& s, const Real& tol = default_tol());

struct Order4Report {
  std::size_t samples = 0;
  std::size_t order4_elements = 0;
  std::vector<std::size_t> order_counts;  // indexed by group order, up to 12
};

Order4Report order4_absence_check(const std::vector<QuinticConfig>& samples, const Real& tol = default_tol(),
                                  Exec exec = Exec::parallel);

/// Reference configurations and their generators.
Real golden_lambda();  // ζ₅ + ζ₅⁻¹
QuinticConfig d3_normal_form();
QuinticConfig d5_normal_form();
QuinticConfig z2_nodal_example();
RealMoebius gen_rho();    // z ↦ −1/(z+1)
RealMoebius gen_nu();     // z ↦ 1/z
RealMoebius gen_gamma();  // z ↦ ((λ+1)z − 1)/(z+1)

/// Smooth configuration with `pairs` conjugate pairs and small random
/// rational coordinates.
QuinticConfig random_configuration(std::mt19937_64& rng, int pairs);
RealMoebius random_moebius(std::mt19937_64& rng);

}  // namespace arithver
