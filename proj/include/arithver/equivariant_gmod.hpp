#pragma once

// Lattices with an anti-symplectic involution: Silhol types and normal
// forms, cohomology of G = Z/2 with integer coefficients, Hochschild–Serre
// E₂ rows for abelian varieties, principalization of polarizations, and the
// Hecke log-density search.

#include <cstdint>
#include <string>
#include <vector>

#include "arithver/exact_rings.hpp"
#include "arithver/matrix.hpp"

namespace arithver {

struct SilholType {
  int r = 0;
  int a = 1;
  friend bool operator==(const SilholType& x, const SilholType& y) { return x.r == y.r && x.a == y.a; }
  friend bool operator!=(const SilholType& x, const SilholType& y) { return !(x == y); }
};

std::string to_string(const SilholType& t);
/// Throws std::invalid_argument unless t ∈ T(g).
void validate_type(const SilholType& t, int g);

struct TypeEntry {
  SilholType type;
  ZMat M;
};

/// T(g) in the order (0,1), (1,1), (2,1), (2,2), (3,1), …
std::vector<TypeEntry> types_list(int g);
/// I_r ⊕ 0 for a = 1, the r×r anti-diagonal ⊕ 0 for a = 2.
ZMat type_matrix(const SilholType& t, int g);

/// Standard symplectic form [[0, I], [−I, 0]].
ZMat standard_symplectic(int g);
/// [[I, M(τ)], [0, −I]].
ZMat f_infty(const SilholType& t, int g);

/// Elementary divisors ≥ 2 in nonincreasing order, plus the free rank.
struct FinAb {
  int free_rank = 0;
  std::vector<Integer> torsion;
  /// |group|; throws MathError if infinite.
  Integer order() const;
  friend bool operator==(const FinAb& x, const FinAb& y) {
    return x.free_rank == y.free_rank && x.torsion == y.torsion;
  }
};

std::string to_string(const FinAb& a);

/// G acts on Zⁿ through (−1)^k·S.
struct TwistedGModule {
  ZMat S;
  int k = 0;
};

/// H^p(G, M). H⁰ is the invariant lattice (free rank only); for p > 0 the
/// kernel of A ∓ I modulo the image of A ± I, by Smith form.
FinAb group_cohomology(const TwistedGModule& m, int p);

/// |H¹(G, Z^{2g})| for the involution f_infty(τ).
Integer pi0_count(const SilholType& t, int g);

/// H^p(G, Λ^{N−p}(dual) ⊗ Z(k)) for p = 0..N, with the involution acting on
/// the dual by the transpose.
std::vector<FinAb> hs_E2_row(const SilholType& t, int g, int k, int N);

struct SilholForm {
  SilholType type;
  ZMat P;  // columns: new basis; PᵗEP = J and P⁻¹SP = f_infty(type)
};

/// Throws MathError if E is not unimodular alternating, S is not an
/// anti-compatible involution, or the reduction fails.
SilholForm silhol_normal_form(const ZMat& E, const ZMat& S);

struct Principalized {
  QMat basis;  // columns, in the coordinates of the input lattice
  ZMat E;      // restricted form, unimodular
  ZMat S;      // restricted involution
  Integer index;
  int steps = 0;
};

/// Enlarges Zⁿ inside its E-dual through S-stable subgroups of prime order
/// (smallest prime first, first vector of the echelon eigenbasis) until E is
/// unimodular.
Principalized principalize(const ZMat& E, const ZMat& S);

/// [[Tᵗ, ½(M(τ)T⁻¹ − TᵗM(τ))], [0, T⁻¹]]. Throws MathError if T is singular.
QMat f_tau_embed(const QMat& T, const SilholType& t);
/// Tᵗ·M(τ)·T ≡ M(τ) (mod 2) and det T = ±1.
bool in_gl_tau(const ZMat& T, const SilholType& t);
/// M·[[0, D], [−D, 0]]·Mᵗ = [[0, D], [−D, 0]] with D = diag(d).
bool in_sp_delta(const QMat& M, const std::vector<Integer>& d);

struct HeckeApprox {
  long n = 0;
  long m = 0;
  double residual_upper = 0;  // certified bound on |n log p + m log q − log x|
};

/// Integers (n, m) with |n log p + m log q − log x| < ε, scanning n by
/// increasing |n| (0, 1, −1, 2, …) with m the nearest integer. The residual
/// is certified with outward-rounded MPFR logarithms. Throws MathError if no
/// n with |n| ≤ max_n works.
HeckeApprox hecke_log_approx(double x, long p, long q, double eps, long max_n = 10000000);

/// All (k₁, …, k_r) with 0 ≤ kᵢ ≤ dᵢ and Σkᵢ = k, lexicographically decreasing.
std::vector<std::vector<int>> grassmann_fixed_components(const std::vector<int>& d, int k);

}  // namespace arithver
