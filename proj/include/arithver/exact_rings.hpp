#pragma once

// Exact arithmetic in Z[ζ], Q(ζ) (ζ a primitive fifth root of unity), in the
// real subring Z[α], Q(α) with α = ζ + ζ⁻¹, and in the residue field F₅.

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arithver {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown by operations whose preconditions are violated by the input data.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace detail

/// c0 + c1ζ + c2ζ² + c3ζ³, canonical under ζ⁴ = −(1 + ζ + ζ² + ζ³).
template <class T>
struct Cyc {
  std::array<T, 4> c{};

  Cyc() : c{T(0), T(0), T(0), T(0)} {}
  Cyc(T c0) : c{c0, T(0), T(0), T(0)} {}  // NOLINT(google-explicit-constructor)
  Cyc(T c0, T c1, T c2, T c3) : c{c0, c1, c2, c3} {}

  static Cyc zeta() { return Cyc(T(0), T(1), T(0), T(0)); }

  /// Reduces a five-term vector over 1, ζ, …, ζ⁴ to canonical form.
  static Cyc from_five(const std::array<T, 5>& q) {
    return Cyc(q[0] - q[4], q[1] - q[4], q[2] - q[4], q[3] - q[4]);
  }

  bool is_zero() const {
    return detail::is_zero(c[0]) && detail::is_zero(c[1]) && detail::is_zero(c[2]) &&
           detail::is_zero(c[3]);
  }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c == b.c; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
  /// Lexicographic on coefficients; only used for canonical sorting.
  friend bool operator<(const Cyc& a, const Cyc& b) { return a.c < b.c; }

  Cyc operator-() const { return Cyc(-c[0], -c[1], -c[2], -c[3]); }
  Cyc& operator+=(const Cyc& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    std::array<T, 7> p{};
    for (auto& x : p) x = T(0);
    for (int i = 0; i < 4; ++i) {
      if (detail::is_zero(a.c[i])) continue;
      for (int j = 0; j < 4; ++j) p[i + j] += a.c[i] * b.c[j];
    }
    return from_five({p[0] + p[5], p[1] + p[6], p[2], p[3], p[4]});
  }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  Cyc scaled(const T& s) const { return Cyc(c[0] * s, c[1] * s, c[2] * s, c[3] * s); }

  /// Galois automorphism ζ ↦ ζᵏ, k ∈ {1,2,3,4}.
  Cyc galois(int k) const {
    std::array<T, 5> q{};
    for (auto& x : q) x = T(0);
    for (int j = 0; j < 4; ++j) q[(j * k) % 5] += c[j];
    return from_five(q);
  }
};

using CycInt = Cyc<std::int64_t>;
using CycRat = Cyc<Rational>;

CycRat to_rat(const CycInt& x);
/// Throws MathError if some coefficient is not an integer (or overflows int64).
CycInt to_int(const CycRat& x);
bool is_integral(const CycRat& x);

/// Complex conjugation σ: ζ ↦ ζ⁴.
template <class T>
Cyc<T> conj_sigma(const Cyc<T>& x) {
  return x.galois(4);
}

/// Tr_{K/Q}: sum of the four conjugates.
Rational trace_KQ(const CycRat& x);
std::int64_t trace_KQ(const CycInt& x);

/// Multiplicative inverse in Q(ζ); throws MathError on zero.
CycRat inverse(const CycRat& x);

/// Norm to Q (product of the four conjugates).
Rational norm_KQ(const CycRat& x);

/// Image of x under O_K → O_K/(θ) = F₅, ζ ↦ 1.
int reduce_mod_theta(const CycInt& x);

/// ζ₁₀ⁱ for the fixed primitive tenth root ζ₁₀ := −ζ³.
CycInt zeta10_power(int i);

/// θ = ζ − ζ⁻¹.
CycInt theta();
/// η = 5/(ζ − ζ⁻¹), a generator of the different of Z[ζ].
CycRat eta();

/// a + bα with α² = 1 − α.
template <class T>
struct Gold {
  T a{0};
  T b{0};

  Gold() : a(0), b(0) {}
  Gold(T a_) : a(a_), b(0) {}  // NOLINT(google-explicit-constructor)
  Gold(T a_, T b_) : a(a_), b(b_) {}

  static Gold alpha() { return Gold(T(0), T(1)); }

  bool is_zero() const { return detail::is_zero(a) && detail::is_zero(b); }

  friend bool operator==(const Gold& x, const Gold& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Gold& x, const Gold& y) { return !(x == y); }

  Gold operator-() const { return Gold(-a, -b); }
  Gold& operator+=(const Gold& y) { return *this = *this + y; }
  Gold& operator-=(const Gold& y) { return *this = *this - y; }
  friend Gold operator+(const Gold& x, const Gold& y) { return Gold(x.a + y.a, x.b + y.b); }
  friend Gold operator-(const Gold& x, const Gold& y) { return Gold(x.a - y.a, x.b - y.b); }
  friend Gold operator*(const Gold& x, const Gold& y) {
    return Gold(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
  }

  /// Galois conjugate α ↦ α' = −1 − α.
  Gold conjugate() const { return Gold(a - b, -b); }
  /// N_{F/Q}(a + bα) = a² − ab − b².
  T norm() const { return a * a - a * b - b * b; }

  Cyc<T> to_cyc() const { return Cyc<T>(a - b, T(0), -b, -b); }
};

using GoldInt = Gold<std::int64_t>;
using GoldRat = Gold<Rational>;

/// Converts a σ-fixed element to a + bα; throws MathError otherwise.
GoldRat gold_from_cyc(const CycRat& x);
GoldInt gold_from_cyc(const CycInt& x);

enum class Embedding { plus, minus };

/// Real embeddings of Q(α): plus sends α to (√5−1)/2, minus to (−√5−1)/2.
int embed_sign(const GoldRat& x, Embedding which);
int embed_sign(const GoldInt& x, Embedding which);
/// Floating-point value, for diagnostics only.
double embed_value(const GoldRat& x, Embedding which);

const char* to_string(Embedding e);

/// Residue field F₅.
class Fp5 {
 public:
  Fp5() = default;
  explicit Fp5(std::int64_t v) : v_(static_cast<std::uint8_t>(((v % 5) + 5) % 5)) {}

  int value() const { return v_; }
  friend bool operator==(Fp5 x, Fp5 y) { return x.v_ == y.v_; }
  friend bool operator!=(Fp5 x, Fp5 y) { return x.v_ != y.v_; }
  friend Fp5 operator+(Fp5 x, Fp5 y) { return Fp5(x.v_ + y.v_); }
  friend Fp5 operator-(Fp5 x, Fp5 y) { return Fp5(x.v_ + 5 - y.v_); }
  friend Fp5 operator*(Fp5 x, Fp5 y) { return Fp5(x.v_ * y.v_); }
  Fp5 operator-() const { return Fp5(5 - v_); }
  Fp5 inverse() const;
  /// Nonzero squares of F₅ are {1, 4}.
  bool is_square() const { return v_ == 1 || v_ == 4; }

 private:
  std::uint8_t v_ = 0;
};

// Text forms: "c0,c1,c2,c3" and "a,b" with rationals written p/q.
std::string to_string(const CycRat& x);
std::string to_string(const CycInt& x);
std::string to_string(const GoldRat& x);
std::string to_string(const GoldInt& x);
CycRat parse_cyc(std::string_view text);
GoldRat parse_gold(std::string_view text);

std::ostream& operator<<(std::ostream& os, const CycRat& x);
std::ostream& operator<<(std::ostream& os, const CycInt& x);
std::ostream& operator<<(std::ostream& os, const GoldRat& x);
std::ostream& operator<<(std::ostream& os, const GoldInt& x);

}  // namespace arithver
