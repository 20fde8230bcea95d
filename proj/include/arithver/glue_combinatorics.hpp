#pragma once

// Local models of the glued real ball quotient near a point with nodes:
// counting involutions, copies of the real ball and their intersections,
// the involution criterion, and rotation representatives.

#include <complex>
#include <utility>
#include <vector>

#include "arithver/exact_rings.hpp"

namespace arithver {

/// m: reflection order; a: complex-conjugate node pairs; b: real nodes;
/// n: ball dimension.
struct NodeDatum {
  int m = 10;
  int a = 0;
  int b = 0;
  int n = 0;
  /// Throws std::invalid_argument unless m ≥ 2, a, b ≥ 0 and 2a + b ≤ n.
  void validate() const;
  int nodes() const { return 2 * a + b; }
};

/// m^(a+b).
Integer count_equivalent_involutions(const NodeDatum& d);
/// |G(x)| = m^(2a+b).
Integer node_group_order(const NodeDatum& d);

using CopyLabel = std::vector<int>;

/// Real dimension of the intersection of copies j and j′: 2·#{v : j_v = j′_v}
/// from the conjugate pairs plus n − 2a from the real coordinates.
int intersection_dimension(const NodeDatum& d, const CopyLabel& j, const CopyLabel& jp);

struct CopiesReport {
  std::vector<CopyLabel> labels;              // (Z/m)^a, lexicographic
  std::vector<std::vector<int>> dimensions;   // symmetric
};

/// Throws std::invalid_argument if m^a exceeds max_labels.
CopiesReport copies_and_intersections(const NodeDatum& d, std::size_t max_labels = 4096);

/// Exponents i over the 2a + b node indices; nodes 2v and 2v+1 (v < a) form
/// a conjugate pair, the remaining nodes are real.
struct ExponentAssignment {
  int m = 10;
  int a = 0;
  std::vector<int> i;
  /// The node involution: swaps 2v ↔ 2v+1 for v < a, fixes the rest.
  int partner(int v) const;
};

/// g∘α is an involution iff i_v ≡ i_{α(v)} (mod m) for every node v.
bool involution_criterion(const ExponentAssignment& e);

struct RotationRep {
  int epsilon = 0;  // t ≡ i^ε·r modulo m-th roots of unity (for m = 10)
  Rational r;       // exact input
  double r_value = 0;
};

/// Exact input t = r·exp(iπ·q) with r ≥ 0; requires m·q ∈ Z.
RotationRep rotation_representative(const Rational& r, const Rational& q, int m);
/// Floating input; requires |Im(t^m)| ≤ tol·|t|^m.
RotationRep rotation_representative(std::complex<double> t, int m, double tol = 1e-9);

}  // namespace arithver
