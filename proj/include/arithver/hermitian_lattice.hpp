#pragma once

// Hermitian lattices over Z[ζ₅]: evaluation, signatures, short roots,
// hyperplane tests for the root arrangement, complex reflections, and the
// translation to alternating forms on the underlying Z-module.

#include <cstddef>
#include <utility>
#include <vector>

#include "arithver/exact_rings.hpp"
#include "arithver/matrix.hpp"
#include "arithver/parallel.hpp"

namespace arithver {

using CycVec = std::vector<CycInt>;
using CycRatVec = std::vector<CycRat>;
using CycMat = Matrix<CycInt>;
using CycRatMat = Matrix<CycRat>;
using RootVec = CycVec;

CycRatVec to_rat(const CycVec& v);
CycMat conj_sigma(const CycMat& m);
CycVec conj_sigma(const CycVec& v);

class HermLattice {
 public:
  /// Throws std::invalid_argument unless gram is square and hermitian with
  /// conjugation-fixed diagonal.
  explicit HermLattice(CycMat gram);

  /// The rank-3 lattice with Gram diag(1, 1, −α).
  static HermLattice thesis();

  std::size_t rank() const { return gram_.rows(); }
  const CycMat& gram() const { return gram_; }
  bool is_diagonal() const;

  friend bool operator==(const HermLattice& a, const HermLattice& b) { return a.gram_ == b.gram_; }

 private:
  CycMat gram_;
};

/// xᵗ·G·σ(y).
CycRat herm_eval(const HermLattice& L, const CycRatVec& x, const CycRatVec& y);
CycInt herm_eval(const HermLattice& L, const CycVec& x, const CycVec& y);

/// (positive, negative) counts at the embedding; throws MathError if the
/// form is degenerate.
std::pair<int, int> signature_at(const HermLattice& L, Embedding which);

/// The embedding at which the signature is (n, 1). Throws MathError if neither is.
Embedding hyperbolic_embedding(const HermLattice& L);

/// All r with every integer coefficient in [−bound, bound] and h(r,r) = 1,
/// sorted lexicographically.
std::vector<RootVec> enumerate_short_roots(const HermLattice& L, int bound, Exec exec = Exec::parallel);

/// True iff t is a K-multiple of r (same hyperplane).
bool hyperplane_equal(const RootVec& r, const RootVec& t);

/// Rank 3 only. Throws MathError when r and t span the same hyperplane.
bool hyperplanes_intersect(const HermLattice& L, const RootVec& r, const RootVec& t, Embedding hyperbolic);

struct PairRecord {
  RootVec r;
  RootVec t;
  CycInt h_rt;
  bool intersects = false;
};

struct ArrangementReport {
  std::size_t roots = 0;
  std::size_t pairs = 0;
  std::size_t equal_pairs = 0;
  std::size_t intersecting_pairs = 0;
  std::size_t orthogonal_pairs = 0;
  std::vector<PairRecord> violations;
};

/// Scans every unordered pair; a violation is a pair of distinct intersecting
/// hyperplanes with h(r,t) ≠ 0.
ArrangementReport verify_orthogonal_arrangement(const HermLattice& L, const std::vector<RootVec>& roots,
                                                Exec exec = Exec::parallel);

/// Matrix of φ_r^i : x ↦ x − (1 − ζ₁₀ⁱ)·h(x,r)·r acting on column vectors.
CycMat reflection(const HermLattice& L, const RootVec& r, int i);

/// Preserves h: Aᵗ·G·σ(A) = G.
bool is_unitary(const HermLattice& L, const CycMat& A);

/// E on the underlying Z-module with basis ζᵏ·e_i (index 4i + k, k = 0..3).
struct AlternatingLattice {
  std::size_t rank = 0;  // O_K-rank; E is 4·rank square
  ZMat E;
};

/// E(x,y) = Tr(η⁻¹·h(x,y)).
AlternatingLattice alternating_from_herm(const HermLattice& L);
/// h(x,y) = θ⁻¹·Σⱼ ζʲ·E(x, ζʲ·y). Throws MathError if E is not compatible
/// with the O_K-action or the resulting h is not integral.
HermLattice herm_from_alternating(const AlternatingLattice& A);

/// Z-coordinates (length 4·rank) of an O_K-vector and back.
std::vector<Integer> to_z_coords(const CycVec& v);
CycVec from_z_coords(const std::vector<Integer>& z);
/// 4n×4n integer matrix of x ↦ A·x.
ZMat z_matrix(const CycMat& A);
/// 4n×4n integer matrix of x ↦ A·σ(x).
ZMat z_matrix_semilinear(const CycMat& A);

}  // namespace arithver
