#include "arithver/quintic_moduli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace arithver {

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const Real n = b.re * b.re + b.im * b.im;
  if (n == 0) throw MathError("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Complex conj(const Complex& a) { return {a.re, -a.im}; }
Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

ProjPoint finite(const Complex& z) { return {z, Complex(1.0)}; }
ProjPoint infinity_point() { return {Complex(1.0), Complex(0.0)}; }

ProjPoint normalized(const ProjPoint& p) {
  const Real az = abs(p.z), aw = abs(p.w);
  if (az == 0 && aw == 0) throw MathError("projective point [0 : 0]");
  if (az > aw) return {Complex(1.0), p.w / p.z};
  return {p.z / p.w, Complex(1.0)};
}

bool is_infinite(const ProjPoint& p, const Real& tol) { return abs(normalized(p).w) <= tol; }

bool same_point(const ProjPoint& a, const ProjPoint& b, const Real& tol) {
  const ProjPoint x = normalized(a), y = normalized(b);
  return abs(x.z * y.w - x.w * y.z) <= tol;
}

bool is_real_point(const ProjPoint& p, const Real& tol) {
  const ProjPoint n = normalized(p);
  return abs((n.z * conj(n.w)).im) <= tol;
}

ProjPoint conj(const ProjPoint& p) { return {conj(p.z), conj(p.w)}; }

std::string to_string(const ProjPoint& p, int digits) {
  if (is_infinite(p, default_tol())) return "inf";
  const ProjPoint n = normalized(p);
  const Complex z = n.z / n.w;
  std::ostringstream os;
  os.precision(digits);
  os << z.re.convert_to<long double>();
  if (z.im != 0) os << (z.im > 0 ? "+" : "-") << abs(z.im).convert_to<long double>() << "i";
  return os.str();
}

namespace {

struct Cluster {
  ProjPoint rep;
  int mult = 0;
};

std::vector<Cluster> clusters(const std::array<ProjPoint, 5>& pts, const Real& tol) {
  std::vector<Cluster> out;
  for (const auto& p : pts) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Cluster& c) { return same_point(c.rep, p, tol); });
    if (it == out.end())
      out.push_back({normalized(p), 1});
    else
      ++it->mult;
  }
  return out;
}

using CMat = std::array<Complex, 4>;

CMat cmul(const CMat& x, const CMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Complex hdet(const ProjPoint& u, const ProjPoint& v) { return u.z * v.w - u.w * v.z; }

// Sends p1, p2, p3 to 0, ∞, 1.
CMat to_standard(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  const Complex s = hdet(p3, p2), t = hdet(p3, p1);
  return {s * p1.w, -(s * p1.z), t * p2.w, -(t * p2.z)};
}

CMat adjugate(const CMat& x) { return {x[3], -x[1], -x[2], x[0]}; }

std::size_t leading_index(const std::array<Real, 4>& mags) {
  const Real mx = *std::max_element(mags.begin(), mags.end());
  static const Real slack("1e-20");
  for (std::size_t i = 0; i < 4; ++i)
    if (mags[i] >= mx * (1 - slack)) return i;
  return 0;
}

// Real representative of a complex Möbius matrix, if there is one.
std::optional<RealMoebius> realify(const CMat& x, const Real& tol) {
  std::array<Real, 4> mags;
  for (int i = 0; i < 4; ++i) mags[i] = abs(x[i]);
  const Complex lead = x[leading_index(mags)];
  RealMoebius g;
  static const Real cond("1e-20");
  for (int i = 0; i < 4; ++i) {
    const Complex y = x[i] / lead;
    if (abs(y.im) > tol) return std::nullopt;
    g.m[i] = y.re;
  }
  if (abs(g.m[0] * g.m[3] - g.m[1] * g.m[2]) < cond)
    throw MathError("stabilizer: numerically ambiguous transformation");
  return g;
}

bool permutes(const RealMoebius& g, const std::vector<Cluster>& cl, const Real& tol) {
  for (const auto& c : cl) {
    const ProjPoint q = act(g, c.rep);
    bool hit = false;
    for (const auto& d : cl)
      if (d.mult == c.mult && same_point(q, d.rep, tol)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

StabLabel label_for(std::size_t order, const std::vector<int>& orders) {
  static const std::map<std::size_t, std::pair<StabLabel, std::vector<int>>> expected{
      {1, {StabLabel::trivial, {1}}},
      {2, {StabLabel::z2, {1, 2}}},
      {6, {StabLabel::d3, {1, 2, 2, 2, 3, 3}}},
      {10, {StabLabel::d5, {1, 2, 2, 2, 2, 2, 5, 5, 5, 5}}},
  };
  auto it = expected.find(order);
  if (it == expected.end() || it->second.second != orders) return StabLabel::other;
  return it->second.first;
}

Real small_rational(std::mt19937_64& rng) {
  const long p = static_cast<long>(rng() % 41) - 20;
  const long q = static_cast<long>(rng() % 7) + 1;
  return Real(p) / Real(q);
}

}  // namespace

QuinticConfig validate(const std::vector<ProjPoint>& points, const Real& tol, bool exact) {
  if (points.size() != 5) throw std::invalid_argument("validate: a quintic has exactly five points");
  QuinticConfig c;
  std::copy(points.begin(), points.end(), c.points.begin());
  c.exact = exact;
  const auto cl = clusters(c.points, tol);
  for (const auto& k : cl)
    if (k.mult >= 3) throw MathError("validate: point of multiplicity " + std::to_string(k.mult));
  for (const auto& k : cl) {
    const ProjPoint b = conj(k.rep);
    const bool ok = std::any_of(cl.begin(), cl.end(),
                                [&](const Cluster& d) { return d.mult == k.mult && same_point(b, d.rep, tol); });
    if (!ok) throw MathError("validate: not closed under complex conjugation");
  }
  int complex_nodes = 0;
  for (const auto& k : cl)
    if (k.mult == 2) {
      c.smooth = false;
      if (is_real_point(k.rep, tol))
        ++c.real_nodes;
      else
        ++complex_nodes;
    }
  c.complex_node_pairs = complex_nodes / 2;
  return c;
}

int component_index(const QuinticConfig& c, const Real& tol) {
  if (!c.smooth) throw MathError("component_index: configuration has a double point");
  int nonreal = 0;
  for (const auto& p : c.points)
    if (!is_real_point(p, tol)) ++nonreal;
  return nonreal / 2;
}

RealMoebius moebius(const Real& a, const Real& b, const Real& c, const Real& d) {
  if (a * d - b * c == 0) throw MathError("moebius: singular matrix");
  RealMoebius g;
  g.m = {a, b, c, d};
  return canonical(g);
}

RealMoebius canonical(const RealMoebius& g) {
  std::array<Real, 4> mags;
  for (int i = 0; i < 4; ++i) mags[i] = abs(g.m[i]);
  const Real lead = g.m[leading_index(mags)];
  RealMoebius out;
  for (int i = 0; i < 4; ++i) out.m[i] = g.m[i] / lead;
  return out;
}

RealMoebius compose(const RealMoebius& g, const RealMoebius& h) {
  const auto& x = g.m;
  const auto& y = h.m;
  RealMoebius r;
  r.m = {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  return canonical(r);
}

RealMoebius inverse(const RealMoebius& g) {
  RealMoebius r;
  r.m = {g.m[3], -g.m[1], -g.m[2], g.m[0]};
  return canonical(r);
}

bool same_moebius(const RealMoebius& g, const RealMoebius& h, const Real& tol) {
  const RealMoebius x = canonical(g), y = canonical(h);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (abs(x.m[i] * y.m[j] - x.m[j] * y.m[i]) > tol) return false;
  return true;
}

bool is_identity(const RealMoebius& g, const Real& tol) { return same_moebius(g, RealMoebius{}, tol); }

int element_order(const RealMoebius& g, int max_order, const Real& tol) {
  RealMoebius p = canonical(g);
  for (int n = 1; n <= max_order; ++n) {
    if (is_identity(p, tol)) return n;
    p = compose(p, g);
  }
  return 0;
}

ProjPoint act(const RealMoebius& g, const ProjPoint& p) {
  const Complex a(g.m[0]), b(g.m[1]), c(g.m[2]), d(g.m[3]);
  return normalized({a * p.z + b * p.w, c * p.z + d * p.w});
}

QuinticConfig act(const RealMoebius& g, const QuinticConfig& c, const Real& tol) {
  std::vector<ProjPoint> pts;
  for (const auto& p : c.points) pts.push_back(act(g, p));
  return validate(pts, tol, c.exact);
}

std::string to_string(StabLabel l) {
  switch (l) {
    case StabLabel::trivial: return "trivial";
    case StabLabel::z2: return "Z/2";
    case StabLabel::d3: return "D3";
    case StabLabel::d5: return "D5";
    case StabLabel::other: return "other";
  }
  return "other";
}

StabGroup stabilizer(const QuinticConfig& c, const Real& tol, Exec exec) {
  const auto cl = clusters(c.points, tol);
  if (cl.size() < 3) throw MathError("stabilizer: fewer than three distinct points");
  const std::size_t k = cl.size();
  std::vector<std::array<std::size_t, 3>> targets;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (i != j && j != l && i != l && cl[i].mult == cl[0].mult && cl[j].mult == cl[1].mult &&
            cl[l].mult == cl[2].mult)
          targets.push_back({i, j, l});

  const CMat src = to_standard(cl[0].rep, cl[1].rep, cl[2].rep);
  std::vector<std::optional<RealMoebius>> found(targets.size());
  auto attempt = [&](std::size_t t) {
    const auto& [i, j, l] = targets[t];
    const CMat x = cmul(adjugate(to_standard(cl[i].rep, cl[j].rep, cl[l].rep)), src);
    auto g = realify(x, tol);
    if (g && permutes(*g, cl, tol)) found[t] = canonical(*g);
  };
  if (exec == Exec::parallel) {
    std::optional<MathError> err;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::size_t t = 0; t < targets.size(); ++t) {
      try {
        attempt(t);
      } catch (const MathError& e) {
#pragma omp critical
        if (!err) err = e;
      }
    }
    if (err) throw *err;
  } else {
    for (std::size_t t = 0; t < targets.size(); ++t) attempt(t);
  }

  StabGroup s;
  s.elements.push_back(RealMoebius{});
  for (const auto& g : found) {
    if (!g) continue;
    const bool dup =
        std::any_of(s.elements.begin(), s.elements.end(), [&](const RealMoebius& h) { return same_moebius(*g, h, tol); });
    if (!dup) s.elements.push_back(*g);
  }
  for (const auto& g : s.elements) s.element_orders.push_back(element_order(g, 12, tol));
  std::sort(s.element_orders.begin(), s.element_orders.end());
  s.label = label_for(s.order(), s.element_orders);
  return s;
}

bool closed_under_composition(const StabGroup& s, const Real& tol) {
  auto member = [&](const RealMoebius& g) {
    return std::any_of(s.elements.begin(), s.elements.end(), [&](const RealMoebius& h) { return same_moebius(g, h, tol); });
  };
  for (const auto& g : s.elements) {
    if (!member(inverse(g))) return false;
    for (const auto& h : s.elements)
      if (!member(compose(g, h))) return false;
  }
  return true;
}

Order4Report order4_absence_check(const std::vector<QuinticConfig>& samples, const Real& tol, Exec exec) {
  std::vector<StabGroup> groups(samples.size());
  if (exec == Exec::parallel) {
    std::optional<MathError> err;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::size_t i = 0; i < samples.size(); ++i) {
      try {
        groups[i] = stabilizer(samples[i], tol, Exec::serial);
      } catch (const MathError& e) {
#pragma omp critical
        if (!err) err = e;
      }
    }
    if (err) throw *err;
  } else {
    for (std::size_t i = 0; i < samples.size(); ++i) groups[i] = stabilizer(samples[i], tol, Exec::serial);
  }
  Order4Report r;
  r.samples = samples.size();
  r.order_counts.assign(13, 0);
  for (const auto& g : groups) {
    ++r.order_counts[std::min<std::size_t>(g.order(), 12)];
    r.order4_elements += std::count(g.element_orders.begin(), g.element_orders.end(), 4);
  }
  return r;
}

Real golden_lambda() { return (sqrt(Real(5)) - 1) / 2; }

QuinticConfig d3_normal_form() {
  const Real h = sqrt(Real(3)) / 2;
  return validate({finite(Complex(-1.0)), infinity_point(), finite(Complex(0.0)), finite(Complex(Real(-0.5), h)),
                   finite(Complex(Real(-0.5), -h))});
}

QuinticConfig d5_normal_form() {
  const Real l = golden_lambda();
  if (abs(l * (l + 1) - 1) > default_tol()) throw MathError("d5_normal_form: λ(λ+1) ≠ 1");
  return validate({finite(Complex(0.0)), finite(Complex(-1.0)), infinity_point(), finite(Complex(l + 1)),
                   finite(Complex(l))});
}

QuinticConfig z2_nodal_example() {
  const ProjPoint i = finite(Complex(0.0, 1.0)), mi = finite(Complex(0.0, -1.0));
  return validate({infinity_point(), i, i, mi, mi}, default_tol(), true);
}

RealMoebius gen_rho() { return moebius(0, -1, 1, 1); }
RealMoebius gen_nu() { return moebius(0, 1, 1, 0); }
RealMoebius gen_gamma() { return moebius(golden_lambda() + 1, -1, 1, 1); }

QuinticConfig random_configuration(std::mt19937_64& rng, int pairs) {
  if (pairs < 0 || pairs > 2) throw std::invalid_argument("random_configuration: pairs must be 0, 1 or 2");
  const Real tol = default_tol();
  for (;;) {
    std::vector<ProjPoint> pts;
    const int reals = 5 - 2 * pairs;
    for (int i = 0; i < reals; ++i)
      pts.push_back(i == 0 && rng() % 4 == 0 ? infinity_point() : finite(Complex(small_rational(rng))));
    for (int i = 0; i < pairs; ++i) {
      Real im = small_rational(rng);
      if (im == 0) im = 1;
      const Complex z(small_rational(rng), im);
      pts.push_back(finite(z));
      pts.push_back(finite(conj(z)));
    }
    bool distinct = true;
    for (std::size_t i = 0; i < pts.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (same_point(pts[i], pts[j], tol)) {
          distinct = false;
          break;
        }
    if (distinct) return validate(pts, tol, true);
  }
}

RealMoebius random_moebius(std::mt19937_64& rng) {
  for (;;) {
    std::array<long, 4> e;
    for (auto& x : e) x = static_cast<long>(rng() % 11) - 5;
    if (e[0] * e[3] - e[1] * e[2] != 0) return moebius(e[0], e[1], e[2], e[3]);
  }
}

}  // namespace arithver
