#pragma once

// Anti-unitary involutions x ↦ M·σ(x) on a hermitian lattice: validation,
// fixed lattices over Z[α], restricted forms, invariants of the reduction
// mod θ, and the finite orthogonal groups of ternary forms over F₅.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithver/hermitian_lattice.hpp"

namespace arithver {

using GoldMat = Matrix<GoldInt>;

struct AntiUnitary {
  CycMat M;
};

/// Checks M·σ(M) = I and Mᵗ·G·σ(M) = σ(G); throws MathError naming the
/// failed condition.
AntiUnitary validate_involution(const HermLattice& L, const CycMat& M);

CycVec act(const AntiUnitary& a, const CycVec& x);

/// g∘a∘g⁻¹ for a unitary g with known inverse.
AntiUnitary conjugate(const AntiUnitary& a, const CycMat& g, const CycMat& g_inv);

struct FixedLattice {
  ZMat z_basis;               // 4n × k, columns in Hermite form
  std::vector<CycVec> basis;  // Z[α]-basis, echelon with normalized pivots
  GoldMat gram;               // h restricted to `basis`
};

FixedLattice fixed_lattice(const HermLattice& L, const AntiUnitary& a);

/// Gram of h on the fixed lattice; throws MathError unless its Z[α]-rank is 3.
GoldMat restricted_form(const HermLattice& L, const AntiUnitary& a);

/// P over Z[α] with ref = basis·P, if ref is another Z[α]-basis of the same
/// module (det P a unit).
std::optional<GoldMat> basis_change(const FixedLattice& F, const std::vector<CycVec>& ref);

/// Z-lattice spanned by {v, α·v : v ∈ vs}, in Hermite form (columns).
ZMat z_span_over_gold(const std::vector<CycVec>& vs);

enum class DetClass { square, nonsquare, degenerate, void_ };

struct InvarPair {
  int dim = 0;
  DetClass det = DetClass::void_;
  friend bool operator==(const InvarPair& a, const InvarPair& b) { return a.dim == b.dim && a.det == b.det; }
  friend bool operator<(const InvarPair& a, const InvarPair& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.det < b.det;
  }
};

const char* to_string(DetClass d);

InvarPair invariant_pair(const HermLattice& L, const AntiUnitary& a);

/// The six reference involutions ±α₀, ±α₁, ±α₂ of the rank-3 lattice,
/// with labels "alpha0", "-alpha0", ….
struct Reference {
  std::string label;
  AntiUnitary involution;
  InvarPair invariants;
};
const std::vector<Reference>& reference_involutions();

/// Reference label matching the invariant pair, or "unknown".
std::string classify(const HermLattice& L, const AntiUnitary& a);

/// a∘φ_r^i = φ_{a(r)}^{−i}∘a, checked as matrices: M·σ(Φ) = Φ'·M.
bool reflection_twist_holds(const HermLattice& L, const AntiUnitary& a, const RootVec& r, int i);

struct OrthogonalGroupData {
  long order = 0;              // |O(q)|
  long projective_order = 0;   // |O(q)/{±1}|
  std::map<int, long> histogram;  // element orders in the projective group
};

/// Brute force over all 5⁹ matrices for the diagonal form d over F₅.
OrthogonalGroupData orthogonal_group_F5(const std::array<Fp5, 3>& d, Exec exec = Exec::parallel);

}  // namespace arithver
