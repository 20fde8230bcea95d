#include "arithver/abelian_cohomology.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace arithver {

std::uint32_t AbvarModel::full_mask() const {
  return gens() == 32 ? 0xffffffffu : ((1u << gens()) - 1u);
}

std::pair<int, int> AbvarModel::pair(int i) const {
  const int b = i / g, k = i % g;
  return {2 * g * b + k, 2 * g * b + g + k};
}

AbvarModel abvar(int g, int blocks) {
  if (g < 1 || blocks < 1) throw std::invalid_argument("abvar: g and blocks must be positive");
  if (2 * g * blocks > 32) throw std::invalid_argument("abvar: more than 32 generators");
  return {g, blocks};
}

AbvarModel product(const AbvarModel& a, const AbvarModel& b) {
  if (a.g != b.g) throw std::invalid_argument("product: factors of different dimension");
  return abvar(a.g, a.blocks + b.blocks);
}

// ---------------------------------------------------------------------------

CohClass CohClass::one(const AbvarModel& m) { return monomial(m, 0); }

CohClass CohClass::monomial(const AbvarModel& m, std::uint32_t mask, const Rational& c) {
  if ((mask & ~m.full_mask()) != 0) throw std::invalid_argument("monomial outside the model");
  CohClass u(m);
  u.add(mask, c);
  return u;
}

CohClass CohClass::generator(const AbvarModel& m, int i) {
  if (i < 0 || i >= m.gens()) throw std::invalid_argument("generator index out of range");
  return monomial(m, 1u << i);
}

void CohClass::add(std::uint32_t mask, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational CohClass::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

CohClass CohClass::grade_part(int d) const {
  CohClass r(model_);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) == d) r.terms_.emplace(m, c);
  return r;
}

std::optional<int> CohClass::grade() const {
  if (terms_.empty()) return std::nullopt;
  const int d = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != d) return std::nullopt;
  return d;
}

bool CohClass::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

CohClass CohClass::operator-() const {
  CohClass r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  if (o.model_ != model_) throw std::invalid_argument("CohClass: model mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  if (o.model_ != model_) throw std::invalid_argument("CohClass: model mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

CohClass operator*(const Rational& c, const CohClass& u) {
  CohClass r(u.model_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, x] : u.terms_) r.terms_.emplace(m, c * x);
  return r;
}

std::string to_string(const CohClass& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (m == 0) continue;
    os << "*";
    for (int i = 0; i < 32; ++i)
      if (m >> i & 1u) os << "x" << i + 1;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int wedge_sign(std::uint32_t s, std::uint32_t t) {
  if ((s & t) != 0) return 0;
  int inv = 0;
  for (std::uint32_t r = t; r != 0; r &= r - 1) {
    const int b = std::countr_zero(r);
    inv += std::popcount(static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) >> (b + 1)));
  }
  return (inv & 1) ? -1 : 1;
}

CohClass wedge(const CohClass& u, const CohClass& v) {
  if (u.model() != v.model()) throw std::invalid_argument("wedge: model mismatch");
  CohClass r(u.model());
  for (const auto& [s, a] : u.terms())
    for (const auto& [t, b] : v.terms()) {
      const int sg = wedge_sign(s, t);
      if (sg == 0) continue;
      r.add(s | t, sg > 0 ? Rational(a * b) : Rational(-(a * b)));
    }
  return r;
}

CohClass exp_nilpotent(const CohClass& u) {
  if (!u.grade_part(0).is_zero()) throw MathError("exp: class has a grade-0 component");
  CohClass sum = CohClass::one(u.model());
  CohClass term = sum;
  for (int n = 1; !term.is_zero(); ++n) {
    term = Rational(1, n) * wedge(term, u);
    sum += term;
  }
  return sum;
}

CohClass divided_power(const CohClass& u, int n) {
  if (n < 0) throw std::invalid_argument("divided_power: negative exponent");
  CohClass p = CohClass::one(u.model());
  for (int k = 1; k <= n && !p.is_zero(); ++k) p = Rational(1, k) * wedge(p, u);
  return p;
}

int orientation_sign(const AbvarModel& m) {
  std::uint32_t acc = 0;
  int sg = 1;
  for (int i = 0; i < m.dim(); ++i) {
    auto [p, q] = m.pair(i);
    const std::uint32_t pq = (1u << p) | (1u << q);
    sg *= wedge_sign(acc, pq);
    acc |= pq;
  }
  return sg;
}

Rational integrate(const CohClass& u) {
  const Rational c = u.coeff(u.model().full_mask());
  return orientation_sign(u.model()) > 0 ? c : Rational(-c);
}

Rational pairing(const CohClass& u, const CohClass& v) {
  if (u.model() != v.model()) throw std::invalid_argument("pairing: model mismatch");
  const std::uint32_t full = u.model().full_mask();
  Rational s = 0;
  for (const auto& [t, b] : v.terms()) {
    const std::uint32_t c = full ^ t;
    auto it = u.terms().find(c);
    if (it == u.terms().end()) continue;
    const Rational x = it->second * b;
    if (wedge_sign(c, t) > 0) s += x; else s -= x;
  }
  return orientation_sign(u.model()) > 0 ? s : Rational(-s);
}

CohClass theta(const AbvarModel& m) {
  CohClass t(m);
  for (int i = 0; i < m.dim(); ++i) {
    auto [p, q] = m.pair(i);
    t.add((1u << p) | (1u << q), 1);
  }
  return t;
}

CohClass theta_power(const AbvarModel& m, int i) { return divided_power(theta(m), i); }

CohClass minimal_class(const AbvarModel& m) { return theta_power(m, m.dim() - 1); }

CohClass point_class(const AbvarModel& m) {
  return CohClass::monomial(m, m.full_mask(), orientation_sign(m));
}

// ---------------------------------------------------------------------------

Hom block_hom(const AbvarModel& src, const AbvarModel& dst,
              const std::vector<std::vector<std::pair<int, long>>>& blocks) {
  if (src.g != dst.g) throw std::invalid_argument("block_hom: different g");
  if (static_cast<int>(blocks.size()) != dst.blocks) throw std::invalid_argument("block_hom: block count");
  const int w = 2 * src.g;
  Hom f{src, dst, std::vector<std::vector<std::pair<int, long>>>(dst.gens())};
  for (int b = 0; b < dst.blocks; ++b)
    for (int k = 0; k < w; ++k)
      for (auto [s, c] : blocks[b]) {
        if (s < 0 || s >= src.blocks) throw std::invalid_argument("block_hom: source block");
        if (c != 0) f.image[b * w + k].emplace_back(s * w + k, c);
      }
  return f;
}

Hom mult(const AbvarModel& a) {
  std::vector<std::vector<std::pair<int, long>>> bl(a.blocks);
  for (int b = 0; b < a.blocks; ++b) bl[b] = {{b, 1}, {a.blocks + b, 1}};
  return block_hom(product(a, a), a, bl);
}

Hom projection(const AbvarModel& a, const AbvarModel& b, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("projection: which must be 1 or 2");
  const AbvarModel& dst = which == 1 ? a : b;
  const int off = which == 1 ? 0 : a.blocks;
  std::vector<std::vector<std::pair<int, long>>> bl(dst.blocks);
  for (int k = 0; k < dst.blocks; ++k) bl[k] = {{off + k, 1}};
  return block_hom(product(a, b), dst, bl);
}

Hom diagonal(const AbvarModel& a) {
  std::vector<std::vector<std::pair<int, long>>> bl(2 * a.blocks);
  for (int k = 0; k < 2 * a.blocks; ++k) bl[k] = {{k % a.blocks, 1}};
  return block_hom(a, product(a, a), bl);
}

Hom inclusion(const AbvarModel& a, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("inclusion: which must be 1 or 2");
  std::vector<std::vector<std::pair<int, long>>> bl(2 * a.blocks);
  const int off = which == 1 ? 0 : a.blocks;
  for (int k = 0; k < a.blocks; ++k) bl[off + k] = {{k, 1}};
  return block_hom(a, product(a, a), bl);
}

Hom scalar(const AbvarModel& a, long n) {
  std::vector<std::vector<std::pair<int, long>>> bl(a.blocks);
  for (int k = 0; k < a.blocks; ++k) bl[k] = {{k, n}};
  return block_hom(a, a, bl);
}

namespace {

// u ∧ (Σ c·x_i), the linear form given as an image list.
CohClass wedge_linear(const CohClass& u, const std::vector<std::pair<int, long>>& lin) {
  CohClass r(u.model());
  for (const auto& [s, a] : u.terms())
    for (auto [i, c] : lin) {
      const std::uint32_t t = 1u << i;
      const int sg = wedge_sign(s, t);
      if (sg == 0) continue;
      r.add(s | t, Rational(a * (sg * c)));
    }
  return r;
}

CohClass pull_monomial(const Hom& f, std::uint32_t mask) {
  CohClass r = CohClass::one(f.src);
  for (std::uint32_t m = mask; m != 0 && !r.is_zero(); m &= m - 1) r = wedge_linear(r, f.image[std::countr_zero(m)]);
  return r;
}

}  // namespace

CohClass pullback(const Hom& f, const CohClass& u) {
  if (u.model() != f.dst) throw std::invalid_argument("pullback: class not on the target");
  CohClass r(f.src);
  for (const auto& [m, c] : u.terms()) r += c * pull_monomial(f, m);
  return r;
}

CohClass pushforward(const Hom& f, const CohClass& u) {
  if (u.model() != f.src) throw std::invalid_argument("pushforward: class not on the source");
  const int shift = 2 * (f.src.dim() - f.dst.dim());
  const int nd = f.dst.gens();
  const std::uint32_t full_src = f.src.full_mask(), full_dst = f.dst.full_mask();
  const int os = orientation_sign(f.src), od = orientation_sign(f.dst);
  CohClass r(f.dst);
  for (int d = 0; d <= f.src.gens(); ++d) {
    const int e = d - shift;
    if (e < 0 || e > nd) continue;
    const CohClass ud = u.grade_part(d);
    if (ud.is_zero()) continue;
    for (std::uint64_t kk = 0; kk <= full_dst; ++kk) {
      const auto k = static_cast<std::uint32_t>(kk);
      if (std::popcount(k) != e) continue;
      const std::uint32_t kc = full_dst ^ k;
      const CohClass w = pull_monomial(f, kc);
      Rational val = 0;
      for (const auto& [t, b] : w.terms()) {
        const std::uint32_t c = full_src ^ t;
        const Rational a = ud.coeff(c);
        if (sgn(a) == 0) continue;
        if (wedge_sign(c, t) > 0) val += a * b; else val -= a * b;
      }
      if (os * od * wedge_sign(k, kc) < 0) val = -val;
      r.add(k, val);
    }
  }
  return r;
}

CohClass pull_first(const CohClass& u, const AbvarModel& b) {
  CohClass r(product(u.model(), b));
  for (const auto& [m, c] : u.terms()) r.add(m, c);
  return r;
}

CohClass pull_second(const AbvarModel& a, const CohClass& v) {
  CohClass r(product(a, v.model()));
  const int n = a.gens();
  for (const auto& [m, c] : v.terms()) r.add(m << n, c);
  return r;
}

CohClass push_second(const CohClass& w, const AbvarModel& a) {
  const AbvarModel& ab = w.model();
  if (ab.g != a.g || ab.blocks <= a.blocks) throw std::invalid_argument("push_second: not a product with a");
  const AbvarModel b = abvar(a.g, ab.blocks - a.blocks);
  const std::uint32_t fa = a.full_mask();
  const int n = a.gens();
  const bool flip = orientation_sign(a) < 0;
  CohClass r(b);
  for (const auto& [m, c] : w.terms())
    if ((m & fa) == fa) r.add(m >> n, flip ? Rational(-c) : c);
  return r;
}

// ---------------------------------------------------------------------------

CohClass poincare_line_class(const AbvarModel& m) {
  CohClass l(product(m, m));
  const int n = m.gens();
  for (int i = 0; i < m.dim(); ++i) {
    auto [p, q] = m.pair(i);
    l.add((1u << p) | (1u << (n + q)), 1);
    l.add((1u << q) | (1u << (n + p)), -1);
  }
  return l;
}

CohClass poincare_line_class_dual(int g) {
  const AbvarModel a = abvar(g);
  CohClass l(product(a, a));
  for (int j = 0; j < 2 * g; ++j) l.add((1u << j) | (1u << (2 * g + j)), 1);
  return l;
}

Hom polarization_identification(int g) {
  const AbvarModel a = abvar(g);
  const AbvarModel aa = product(a, a);
  Hom f{aa, aa, std::vector<std::vector<std::pair<int, long>>>(aa.gens())};
  for (int j = 0; j < 2 * g; ++j) f.image[j] = {{j, 1}};
  for (int i = 0; i < g; ++i) {
    f.image[2 * g + i] = {{2 * g + g + i, 1}};
    f.image[2 * g + g + i] = {{2 * g + i, -1}};
  }
  return f;
}

CohClass fourier(const CohClass& u) {
  const AbvarModel& x = u.model();
  const CohClass kernel = exp_nilpotent(poincare_line_class(x));
  return push_second(wedge(kernel, pull_first(u, x)), x);
}

CohClass pontryagin(const CohClass& u, const CohClass& v) {
  if (u.model() != v.model()) throw std::invalid_argument("pontryagin: model mismatch");
  const AbvarModel& x = u.model();
  CohClass w(product(x, x));
  const int n = x.gens();
  for (const auto& [s, a] : u.terms())
    for (const auto& [t, b] : v.terms()) w.add(s | (t << n), a * b);
  return pushforward(mult(x), w);
}

CohClass star_exponential(const CohClass& a) {
  const AbvarModel& x = a.model();
  if (!a.grade_part(x.gens()).is_zero()) throw MathError("star_exponential: class has a top-grade component");
  CohClass sum = point_class(x);
  CohClass term = sum;
  for (int n = 1; !term.is_zero(); ++n) {
    term = Rational(1, n) * pontryagin(term, a);
    sum += term;
  }
  return sum;
}

CohClass pullback_scalar(long n, const CohClass& u) {
  CohClass r(u.model());
  for (const auto& [m, c] : u.terms()) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(std::popcount(m)));
    r.add(m, c * p);
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Rational sign_pow(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

std::vector<IdentityCheck> check_poincare_exponential(int g) {
  const AbvarModel a = abvar(g);
  const AbvarModel x = product(a, a);
  const Rational sg = sign_pow(g);
  const CohClass l = poincare_line_class(a);
  const CohClass r = divided_power(l, 2 * g - 1);
  const Hom swap = block_hom(x, x, {{{1, 1}}, {{0, 1}}});
  const CohClass l_hat = pullback(swap, l);

  std::vector<IdentityCheck> out;
  out.push_back({"exp_l_equals_star_exp", exp_nilpotent(l) == sg * star_exponential(sg * r)});
  out.push_back({"fourier_of_exp_l", fourier(exp_nilpotent(l)) == sg * exp_nilpotent(-l_hat)});
  out.push_back({"fourier_of_l", sign_pow(g + 1) * fourier(l_hat) == r});

  const CohClass via_pairing = pullback(polarization_identification(g), poincare_line_class_dual(g));
  const CohClass th = theta(a);
  const CohClass via_theta = pullback(mult(a), th) - pull_first(th, a) - pull_second(a, th);
  out.push_back({"l_from_pairing_and_theta", via_pairing == l && via_theta == l});

  bool functorial = true;
  const Hom delta = diagonal(a), m = mult(a);
  for (std::uint32_t k = 0; k <= a.full_mask() && functorial; ++k) {
    const CohClass u = CohClass::monomial(a, k);
    functorial = pullback(m, fourier(u)) == fourier(pushforward(delta, u));
  }
  out.push_back({"diagonal_functoriality", functorial});
  return out;
}

std::vector<IdentityCheck> check_minimal_class_kernel(int g) {
  const AbvarModel a = abvar(g);
  const CohClass gamma = minimal_class(a);
  const CohClass r = divided_power(poincare_line_class(a), 2 * g - 1);
  const Hom j1 = inclusion(a, 1), j2 = inclusion(a, 2), delta = diagonal(a);

  std::vector<IdentityCheck> out;
  const CohClass tau = pushforward(j1, gamma) + pushforward(j2, gamma) - pushforward(delta, gamma);
  out.push_back({"tau_equals_R", tau == sign_pow(g + 1) * r});

  const CohClass ft = fourier(theta(a));
  out.push_back({"fourier_theta_is_minimal", ft == sign_pow(g - 1) * gamma});
  const CohClass lhs = fourier(poincare_line_class(a));
  const CohClass rhs =
      sign_pow(g) * (pushforward(delta, ft) - pushforward(j1, ft) - pushforward(j2, ft));
  out.push_back({"fourier_l_via_pushforwards", lhs == rhs});
  return out;
}

std::vector<IdentityCheck> check_product_identities(int g, std::uint64_t seed) {
  const AbvarModel a = abvar(g);
  const AbvarModel x = product(a, a);
  const CohClass l = poincare_line_class(a);
  const CohClass rho = divided_power(l, 2 * g - 1);
  const CohClass sigma = divided_power(l, 2 * g - 2);

  std::vector<IdentityCheck> out;
  out.push_back({"sigma_is_star_square", sigma == Rational(sign_pow(g) / 2) * pontryagin(rho, rho)});

  if (g <= 2) {
    const AbvarModel y = product(x, x);
    const CohClass r_y = divided_power(poincare_line_class(x), 4 * g - 1);
    const Hom p13 = block_hom(y, x, {{{0, 1}}, {{2, 1}}});
    const Hom p24 = block_hom(y, x, {{{1, 1}}, {{3, 1}}});
    const Hom swap = block_hom(x, x, {{{1, 1}}, {{0, 1}}});
    const CohClass rho_hat = divided_power(pullback(swap, l), 2 * g - 1);
    const CohClass pt = point_class(x);
    // ℓ^{2g}/(2g)! is (−1)^g times the point class, not the point class.
    out.push_back({"top_power_of_l", divided_power(l, 2 * g) == sign_pow(g) * pt});
    const CohClass split = wedge(pullback(p13, rho), pullback(p24, pt)) + wedge(pullback(p13, pt), pullback(p24, rho_hat));
    out.push_back({"R_of_product_splits", r_y == sign_pow(g) * split});
  }

  // A random integral divisor class.
  std::mt19937_64 rng(seed);
  CohClass d(a);
  for (int p = 0; p < 2 * g; ++p)
    for (int q = p + 1; q < 2 * g; ++q) d.add((1u << p) | (1u << q), static_cast<long>(rng() % 7) - 3);

  const Hom m = mult(a);
  auto expansion = [&](const CohClass& div) {
    CohClass beta(a);
    const int n = 2 * g - 2;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        const int k = n - i - j;
        const CohClass inner = wedge(wedge(pullback(m, theta_power(a, i)), pull_first(theta_power(a, j), a)), pull_first(div, a));
        beta += sign_pow(j + k) * wedge(push_second(inner, a), theta_power(a, k));
      }
    return beta;
  };
  auto direct = [&](const CohClass& div) { return push_second(wedge(sigma, pull_first(div, a)), a); };

  out.push_back({"divisor_expansion", expansion(d) == direct(d)});
  out.push_back({"divisor_expansion_theta", expansion(theta(a)) == sign_pow(g - 1) * minimal_class(a)});
  return out;
}

}  // namespace arithver
