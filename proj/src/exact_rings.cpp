#include "arithver/exact_rings.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace arithver {

CycRat to_rat(const CycInt& x) {
  CycRat r;
  for (int i = 0; i < 4; ++i) r.c[i] = Rational(static_cast<long>(x.c[i]));
  return r;
}

bool is_integral(const CycRat& x) {
  for (const auto& v : x.c)
    if (v.get_den() != 1) return false;
  return true;
}

CycInt to_int(const CycRat& x) {
  CycInt r;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i].get_den() != 1) throw MathError("to_int: non-integral coefficient " + x.c[i].get_str());
    if (!x.c[i].get_num().fits_slong_p()) throw MathError("to_int: coefficient overflows int64");
    r.c[i] = x.c[i].get_num().get_si();
  }
  return r;
}

Rational trace_KQ(const CycRat& x) { return 4 * x.c[0] - x.c[1] - x.c[2] - x.c[3]; }

std::int64_t trace_KQ(const CycInt& x) { return 4 * x.c[0] - x.c[1] - x.c[2] - x.c[3]; }

Rational norm_KQ(const CycRat& x) {
  CycRat n = x * x.galois(2) * x.galois(3) * x.galois(4);
  return n.c[0];
}

CycRat inverse(const CycRat& x) {
  if (x.is_zero()) throw MathError("inverse of zero");
  CycRat y = x.galois(2) * x.galois(3) * x.galois(4);
  Rational n = (x * y).c[0];
  Rational inv_n = 1 / n;
  return y.scaled(inv_n);
}

int reduce_mod_theta(const CycInt& x) {
  std::int64_t s = x.c[0] % 5 + x.c[1] % 5 + x.c[2] % 5 + x.c[3] % 5;
  return static_cast<int>(((s % 5) + 5) % 5);
}

CycInt zeta10_power(int i) {
  i = ((i % 10) + 10) % 10;
  const CycInt z10(0, 0, 0, -1);
  CycInt r(1);
  for (int k = 0; k < i; ++k) r = r * z10;
  return r;
}

CycInt theta() { return CycInt(1, 2, 1, 1); }

CycRat eta() { return inverse(to_rat(theta())).scaled(Rational(5)); }

GoldRat gold_from_cyc(const CycRat& x) {
  if (sgn(x.c[1]) != 0 || x.c[2] != x.c[3]) throw MathError("gold_from_cyc: element is not fixed by conjugation");
  Rational b = -x.c[2];
  return GoldRat(x.c[0] + b, b);
}

GoldInt gold_from_cyc(const CycInt& x) {
  if (x.c[1] != 0 || x.c[2] != x.c[3]) throw MathError("gold_from_cyc: element is not fixed by conjugation");
  std::int64_t b = -x.c[2];
  return GoldInt(x.c[0] + b, b);
}

namespace {

// Sign of p + q·√5.
int sign_p_q_sqrt5(const Rational& p, const Rational& q) {
  int sp = sgn(p), sq = sgn(q);
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  Rational lhs = p * p, rhs = 5 * q * q;
  return lhs > rhs ? sp : sq;
}

}  // namespace

int embed_sign(const GoldRat& x, Embedding which) {
  Rational p = 2 * x.a - x.b;
  Rational q = which == Embedding::plus ? Rational(x.b) : Rational(-x.b);
  return sign_p_q_sqrt5(p, q);
}

int embed_sign(const GoldInt& x, Embedding which) {
  return embed_sign(GoldRat(Rational(static_cast<long>(x.a)), Rational(static_cast<long>(x.b))), which);
}

double embed_value(const GoldRat& x, Embedding which) {
  const double s5 = std::sqrt(5.0);
  double al = which == Embedding::plus ? (s5 - 1) / 2 : (-s5 - 1) / 2;
  return x.a.get_d() + x.b.get_d() * al;
}

const char* to_string(Embedding e) { return e == Embedding::plus ? "plus" : "minus"; }

Fp5 Fp5::inverse() const {
  static constexpr int inv[5] = {0, 1, 3, 2, 4};
  if (v_ == 0) throw MathError("inverse of zero in F5");
  return Fp5(inv[v_]);
}

namespace {

template <class It>
std::string join(It first, It last) {
  std::ostringstream os;
  for (It it = first; it != last; ++it) {
    if (it != first) os << ',';
    os << *it;
  }
  return os.str();
}

std::vector<Rational> parse_list(std::string_view text, std::size_t expected) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(start, end - start));
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty field in '" + std::string(text) + "'");
    tok = tok.substr(b, e - b + 1);
    Rational v;
    if (v.set_str(tok, 10) != 0) throw std::invalid_argument("not a rational: '" + tok + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + tok + "'");
    v.canonicalize();
    out.push_back(v);
    start = end + 1;
  }
  if (out.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " fields in '" + std::string(text) + "'");
  return out;
}

}  // namespace

std::string to_string(const CycRat& x) { return join(x.c.begin(), x.c.end()); }
std::string to_string(const CycInt& x) { return join(x.c.begin(), x.c.end()); }
std::string to_string(const GoldRat& x) { return x.a.get_str() + "," + x.b.get_str(); }
std::string to_string(const GoldInt& x) { return std::to_string(x.a) + "," + std::to_string(x.b); }

CycRat parse_cyc(std::string_view text) {
  auto v = parse_list(text, 4);
  return CycRat(v[0], v[1], v[2], v[3]);
}

GoldRat parse_gold(std::string_view text) {
  auto v = parse_list(text, 2);
  return GoldRat(v[0], v[1]);
}

std::ostream& operator<<(std::ostream& os, const CycRat& x) { return os << '[' << to_string(x) << ']'; }
std::ostream& operator<<(std::ostream& os, const CycInt& x) { return os << '[' << to_string(x) << ']'; }
std::ostream& operator<<(std::ostream& os, const GoldRat& x) { return os << '(' << to_string(x) << ')'; }
std::ostream& operator<<(std::ostream& os, const GoldInt& x) { return os << '(' << to_string(x) << ')'; }

}  // namespace arithver
