#pragma once

// Rational cohomology of a principally polarized abelian variety A and its
// powers, realized as an exterior algebra on H¹. The dual Â is identified
// with A through the polarization throughout, so a "product model" A^k is
// just k concatenated blocks of 2g generators.
//
// Conventions. Block b owns generators 2g·b .. 2g·b + 2g − 1; inside a block
// θ = Σᵢ xᵢ∧x_{g+i}. The orientation is ω = Π over pairs (xᵢ∧x_{g+i}), so
// ∫θ^g/g! = 1 and ω is the point class. Monomials are bitmasks with
// generators wedged in increasing index order.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithver/exact_rings.hpp"

namespace arithver {

struct AbvarModel {
  int g = 1;
  int blocks = 1;

  int dim() const { return g * blocks; }
  int gens() const { return 2 * g * blocks; }
  std::uint32_t full_mask() const;
  /// The i-th symplectic pair (p, q), i < dim(); θ = Σ x_p∧x_q.
  std::pair<int, int> pair(int i) const;

  friend bool operator==(const AbvarModel& a, const AbvarModel& b) {
    return a.g == b.g && a.blocks == b.blocks;
  }
  friend bool operator!=(const AbvarModel& a, const AbvarModel& b) { return !(a == b); }
};

/// Throws std::invalid_argument if g < 1, blocks < 1 or more than 32 generators.
AbvarModel abvar(int g, int blocks = 1);
/// Concatenation of blocks; both factors must share g.
AbvarModel product(const AbvarModel& a, const AbvarModel& b);

class CohClass {
 public:
  explicit CohClass(AbvarModel m) : model_(m) {}

  static CohClass one(const AbvarModel& m);
  static CohClass monomial(const AbvarModel& m, std::uint32_t mask, const Rational& c = 1);
  static CohClass generator(const AbvarModel& m, int i);

  const AbvarModel& model() const { return model_; }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

  /// Adds c·e_mask, dropping the entry if it cancels.
  void add(std::uint32_t mask, const Rational& c);
  Rational coeff(std::uint32_t mask) const;
  CohClass grade_part(int d) const;
  /// The common grade if homogeneous and nonzero.
  std::optional<int> grade() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  CohClass operator-() const;
  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const Rational& c, const CohClass& u);
  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CohClass& a, const CohClass& b) { return !(a == b); }

 private:
  AbvarModel model_;
  std::map<std::uint32_t, Rational> terms_;
};

std::string to_string(const CohClass& u);

/// Sign of e_S∧e_T against e_{S∪T}; 0 if S and T overlap.
int wedge_sign(std::uint32_t s, std::uint32_t t);

CohClass wedge(const CohClass& u, const CohClass& v);
/// e^u for u without grade-0 part; throws MathError otherwise.
CohClass exp_nilpotent(const CohClass& u);
/// u^n / n! under the wedge product.
CohClass divided_power(const CohClass& u, int n);

/// ∫e_full = ±1 relative to ω.
int orientation_sign(const AbvarModel& m);
Rational integrate(const CohClass& u);
/// ∫u∧v.
Rational pairing(const CohClass& u, const CohClass& v);

CohClass theta(const AbvarModel& m);
/// θ^i / i!.
CohClass theta_power(const AbvarModel& m, int i);
/// γ_θ = θ^{d−1}/(d−1)! with d = m.dim().
CohClass minimal_class(const AbvarModel& m);
CohClass point_class(const AbvarModel& m);

/// A homomorphism f: src → dst, recorded by its pullback on H¹:
/// f*(y_j) = Σ c·x_i over image[j] = {(i, c)}.
struct Hom {
  AbvarModel src;
  AbvarModel dst;
  std::vector<std::vector<std::pair<int, long>>> image;
};

/// dst block b pulls back to Σ c·(src block s) over blocks[b] = {(s, c)}.
Hom block_hom(const AbvarModel& src, const AbvarModel& dst,
              const std::vector<std::vector<std::pair<int, long>>>& blocks);
/// Group law A^k × A^k → A^k.
Hom mult(const AbvarModel& a);
/// Projection of a × b onto factor 1 or 2.
Hom projection(const AbvarModel& a, const AbvarModel& b, int which);
Hom diagonal(const AbvarModel& a);
/// x ↦ (x, 0) for which = 1, x ↦ (0, x) for which = 2.
Hom inclusion(const AbvarModel& a, int which);
Hom scalar(const AbvarModel& a, long n);

CohClass pullback(const Hom& f, const CohClass& u);
/// Adjoint of pullback: ∫_dst f_*u ∧ v = ∫_src u ∧ f*v. Lowers grade by
/// 2(dim src − dim dst); components falling outside [0, 2·dim dst] vanish.
CohClass pushforward(const Hom& f, const CohClass& u);

/// π₁*u on a × b (masks of u shifted into the first factor).
CohClass pull_first(const CohClass& u, const AbvarModel& b);
CohClass pull_second(const AbvarModel& a, const CohClass& v);
/// π₂,* on a × b, by fibre integration over a.
CohClass push_second(const CohClass& w, const AbvarModel& a);

/// ℓ on X × X for X = m: Σ over pairs (x_p∧x'_q − x_q∧x'_p).
CohClass poincare_line_class(const AbvarModel& m);
/// ℓ on A × Â built from the duality pairing, Σⱼ xⱼ∧yⱼ, before identifying
/// Â with A.
CohClass poincare_line_class_dual(int g);
/// (id, λ): A × A → A × Â with λ*y_i = x_{g+i}, λ*y_{g+i} = −x_i.
Hom polarization_identification(int g);

CohClass fourier(const CohClass& u);
CohClass pontryagin(const CohClass& u, const CohClass& v);
/// Σ a^{⋆n}/n!; throws MathError if a has a top-grade component.
CohClass star_exponential(const CohClass& a);
/// [n]*: multiplies grade i by nⁱ.
CohClass pullback_scalar(long n, const CohClass& u);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// ch(P) = e^ℓ = (−1)^g E((−1)^g R_A) and F_{A×Â}(e^ℓ) = (−1)^g e^{−ℓ̂} on A × Â,
/// together with (−1)^{g+1} F(ℓ) = R_A.
std::vector<IdentityCheck> check_poincare_exponential(int g);
/// j₁,*γ + j₂,*γ − (id,λ)_*γ = (−1)^{g+1} R_A, and the Fourier image of ℓ
/// written through Δ_*, j₁,*, j₂,* of F(θ).
std::vector<IdentityCheck> check_minimal_class_kernel(int g);
/// σ_A = (−1)^g ρ^{⋆2}/2, the splitting
/// R_{A×Â} = (−1)^g (π₁₃*R_A·π₂₄*[0] + π₁₃*[0]·π₂₄*R_Â) on A×Â×Â×A (skipped
/// for g > 2), and the θ-expansion of π₂,*(σ_A·π₁*D) for a random divisor D.
std::vector<IdentityCheck> check_product_identities(int g, std::uint64_t seed);

}  // namespace arithver
