#include "arithver/involution_classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace arithver {

AntiUnitary validate_involution(const HermLattice& L, const CycMat& M) {
  if (!M.square() || M.rows() != L.rank()) throw std::invalid_argument("validate_involution: matrix size must equal the lattice rank");
  if (M * conj_sigma(M) != CycMat::identity(M.rows())) throw MathError("not an involution: M*sigma(M) != I");
  if (M.transpose() * L.gram() * conj_sigma(M) != conj_sigma(L.gram()))
    throw MathError("not an anti-isometry: M^t*G*sigma(M) != sigma(G)");
  return AntiUnitary{M};
}

CycVec act(const AntiUnitary& a, const CycVec& x) { return a.M.apply(conj_sigma(x)); }

AntiUnitary conjugate(const AntiUnitary& a, const CycMat& g, const CycMat& g_inv) {
  return AntiUnitary{g * a.M * conj_sigma(g_inv)};
}

namespace {

// Z[ζ] = Z[α] ⊕ Z[α]·ζ, using ζ² = αζ − 1 and ζ³ = −α − αζ.
std::pair<GoldInt, GoldInt> split(const CycInt& x) {
  return {GoldInt(x.c[0] - x.c[2], -x.c[3]), GoldInt(x.c[1], x.c[2] - x.c[3])};
}

CycInt join(const GoldInt& a, const GoldInt& b) { return a.to_cyc() + b.to_cyc() * CycInt::zeta(); }

std::int64_t round_div(std::int64_t x, std::int64_t n) {
  if (n < 0) {
    x = -x;
    n = -n;
  }
  std::int64_t num = 2 * x + n, den = 2 * n;
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// Nearest-lattice-point quotient in Z[α]; the remainder has smaller |N|.
GoldInt round_quotient(const GoldInt& a, const GoldInt& b) {
  GoldInt num = a * b.conjugate();
  std::int64_t n = b.norm();
  return GoldInt(round_div(num.a, n), round_div(num.b, n));
}

std::int64_t height(const GoldInt& x) { return std::llabs(x.a) + std::llabs(x.b); }

// Unit u with u·p of minimal height and positive at the plus embedding.
GoldInt normalizing_unit(const GoldInt& p) {
  const GoldInt al = GoldInt::alpha(), al_inv(1, 1);
  GoldInt u(1), cur = p;
  for (bool improved = true; improved;) {
    improved = false;
    for (const GoldInt& e : {al, al_inv}) {
      GoldInt cand = cur * e;
      if (height(cand) < height(cur)) {
        cur = cand;
        u = u * e;
        improved = true;
      }
    }
  }
  if (embed_sign(cur, Embedding::plus) < 0) u = -u;
  return u;
}

void row_sub(GoldMat& m, std::size_t dst, std::size_t src, const GoldInt& q) {
  if (q.is_zero()) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = m(dst, j) - q * m(src, j);
}

// Row echelon form over the Euclidean ring Z[α]; returns the nonzero rows.
GoldMat gold_hermite(GoldMat H) {
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (!H(i, c).is_zero() && (best == m || std::llabs(H(i, c).norm()) < std::llabs(H(best, c).norm()))) best = i;
      if (best == m) break;
      if (best != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(H(r, j), H(best, j));
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c).is_zero()) continue;
        row_sub(H, i, r, round_quotient(H(i, c), H(r, c)));
        if (!H(i, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (H(r, c).is_zero()) continue;
    GoldInt u = normalizing_unit(H(r, c));
    for (std::size_t j = 0; j < n; ++j) H(r, j) = u * H(r, j);
    for (std::size_t i = 0; i < r; ++i) row_sub(H, i, r, round_quotient(H(i, c), H(r, c)));
    ++r;
  }
  return H.block(0, 0, r, n);
}

GoldRat to_rat(const GoldInt& x) {
  return GoldRat(Rational(static_cast<long>(x.a)), Rational(static_cast<long>(x.b)));
}

GoldRat inverse(const GoldRat& x) {
  Rational n = x.norm();
  if (sgn(n) == 0) throw MathError("inverse of zero in Q(alpha)");
  GoldRat c = x.conjugate();
  return GoldRat(c.a / n, c.b / n);
}

std::vector<GoldInt> gold_coords(const CycVec& v) {
  std::vector<GoldInt> out;
  for (const auto& x : v) {
    auto [a, b] = split(x);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

}  // namespace

ZMat z_span_over_gold(const std::vector<CycVec>& vs) {
  if (vs.empty()) return ZMat(0, 0);
  const std::size_t n = vs.front().size();
  ZMat rows(2 * vs.size(), 4 * n);
  const CycInt al = GoldInt::alpha().to_cyc();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    CycVec av = vs[k];
    for (auto& x : av) x = al * x;
    auto z0 = to_z_coords(vs[k]), z1 = to_z_coords(av);
    for (std::size_t j = 0; j < 4 * n; ++j) {
      rows(2 * k, j) = z0[j];
      rows(2 * k + 1, j) = z1[j];
    }
  }
  return row_lattice_basis(rows).transpose();
}

FixedLattice fixed_lattice(const HermLattice& L, const AntiUnitary& a) {
  const std::size_t n = L.rank();
  ZMat A = z_matrix_semilinear(a.M) - ZMat::identity(4 * n);
  FixedLattice F;
  F.z_basis = integer_kernel(A);
  GoldMat gens(F.z_basis.cols(), 2 * n);
  for (std::size_t k = 0; k < F.z_basis.cols(); ++k) {
    auto g = gold_coords(from_z_coords(F.z_basis.column(k)));
    for (std::size_t j = 0; j < 2 * n; ++j) gens(k, j) = g[j];
  }
  GoldMat H = gold_hermite(gens);
  for (std::size_t r = 0; r < H.rows(); ++r) {
    CycVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = join(H(r, 2 * i), H(r, 2 * i + 1));
    F.basis.push_back(std::move(v));
  }
  F.gram = GoldMat(F.basis.size(), F.basis.size());
  for (std::size_t i = 0; i < F.basis.size(); ++i)
    for (std::size_t j = 0; j < F.basis.size(); ++j) F.gram(i, j) = gold_from_cyc(herm_eval(L, F.basis[i], F.basis[j]));
  return F;
}

GoldMat restricted_form(const HermLattice& L, const AntiUnitary& a) {
  FixedLattice F = fixed_lattice(L, a);
  if (F.basis.size() != 3) throw MathError("restricted_form: fixed lattice does not have rank 3 over Z[alpha]");
  return F.gram;
}

std::optional<GoldMat> basis_change(const FixedLattice& F, const std::vector<CycVec>& ref) {
  const std::size_t k = F.basis.size();
  if (ref.size() != k || k == 0) return std::nullopt;
  const std::size_t rows = 2 * F.basis.front().size();
  // Augmented system [B | R] over Q(α), B columns = coordinates of the basis.
  Matrix<GoldRat> Aug(rows, 2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    auto b = gold_coords(F.basis[j]);
    auto r = gold_coords(ref[j]);
    for (std::size_t i = 0; i < rows; ++i) {
      Aug(i, j) = to_rat(b[i]);
      Aug(i, k + j) = to_rat(r[i]);
    }
  }
  std::size_t piv = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = piv;
    while (p < rows && Aug(p, c).is_zero()) ++p;
    if (p == rows) return std::nullopt;
    for (std::size_t j = 0; j < 2 * k; ++j) std::swap(Aug(piv, j), Aug(p, j));
    GoldRat inv = inverse(Aug(piv, c));
    for (std::size_t j = 0; j < 2 * k; ++j) Aug(piv, j) = Aug(piv, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == piv || Aug(i, c).is_zero()) continue;
      GoldRat f = Aug(i, c);
      for (std::size_t j = 0; j < 2 * k; ++j) Aug(i, j) = Aug(i, j) - f * Aug(piv, j);
    }
    ++piv;
  }
  for (std::size_t i = k; i < rows; ++i)
    for (std::size_t j = k; j < 2 * k; ++j)
      if (!Aug(i, j).is_zero()) return std::nullopt;
  GoldMat P(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const GoldRat& v = Aug(i, k + j);
      if (v.a.get_den() != 1 || v.b.get_den() != 1) return std::nullopt;
      P(i, j) = GoldInt(v.a.get_num().get_si(), v.b.get_num().get_si());
    }
  // det P must be a unit of Z[α].
  GoldInt d;
  if (k == 1) {
    d = P(0, 0);
  } else if (k == 2) {
    d = P(0, 0) * P(1, 1) - P(0, 1) * P(1, 0);
  } else if (k == 3) {
    d = P(0, 0) * (P(1, 1) * P(2, 2) - P(1, 2) * P(2, 1)) - P(0, 1) * (P(1, 0) * P(2, 2) - P(1, 2) * P(2, 0)) +
        P(0, 2) * (P(1, 0) * P(2, 1) - P(1, 1) * P(2, 0));
  } else {
    throw std::invalid_argument("basis_change: rank above 3 not supported");
  }
  if (std::llabs(d.norm()) != 1) return std::nullopt;
  return P;
}

const char* to_string(DetClass d) {
  switch (d) {
    case DetClass::square: return "square";
    case DetClass::nonsquare: return "nonsquare";
    case DetClass::degenerate: return "degenerate";
    case DetClass::void_: return "void";
  }
  return "?";
}

namespace {

using F5Mat = std::vector<std::vector<Fp5>>;

// Basis (as rows) of the kernel of a square matrix over F₅.
std::vector<std::vector<Fp5>> f5_kernel(F5Mat A) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && A[p][c] == Fp5(0)) ++p;
    if (p == m) continue;
    std::swap(A[r], A[p]);
    Fp5 inv = A[r][c].inverse();
    for (auto& v : A[r]) v = v * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || A[i][c] == Fp5(0)) continue;
      Fp5 f = A[i][c];
      for (std::size_t j = 0; j < n; ++j) A[i][j] = A[i][j] - f * A[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<std::vector<Fp5>> ker;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
    std::vector<Fp5> v(n, Fp5(0));
    v[free] = Fp5(1);
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -A[i][free];
    ker.push_back(v);
  }
  return ker;
}

Fp5 f5_det(F5Mat A) {
  const std::size_t n = A.size();
  Fp5 d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == Fp5(0)) ++p;
    if (p == n) return Fp5(0);
    if (p != c) {
      std::swap(A[p], A[c]);
      d = -d;
    }
    d = d * A[c][c];
    Fp5 inv = A[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      Fp5 f = A[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) A[i][j] = A[i][j] - f * A[c][j];
    }
  }
  return d;
}

}  // namespace

InvarPair invariant_pair(const HermLattice& L, const AntiUnitary& a) {
  const std::size_t n = L.rank();
  F5Mat A(n, std::vector<Fp5>(n)), Q(n, std::vector<Fp5>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      A[i][j] = Fp5(reduce_mod_theta(a.M(i, j))) - Fp5(i == j ? 1 : 0);
      Q[i][j] = Fp5(reduce_mod_theta(L.gram()(i, j)));
    }
  auto ker = f5_kernel(A);
  InvarPair p;
  p.dim = static_cast<int>(ker.size());
  if (ker.empty()) return p;
  const std::size_t k = ker.size();
  F5Mat R(k, std::vector<Fp5>(k));
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      Fp5 v(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v = v + ker[s][i] * Q[i][j] * ker[t][j];
      R[s][t] = v;
    }
  Fp5 d = f5_det(R);
  p.det = d == Fp5(0) ? DetClass::degenerate : d.is_square() ? DetClass::square : DetClass::nonsquare;
  return p;
}

const std::vector<Reference>& reference_involutions() {
  static const std::vector<Reference> refs = [] {
    const HermLattice L = HermLattice::thesis();
    auto diag = [](long a, long b, long c) {
      CycMat m(3, 3);
      m(0, 0) = CycInt(a);
      m(1, 1) = CycInt(b);
      m(2, 2) = CycInt(c);
      return m;
    };
    std::vector<Reference> out;
    const CycMat base[3] = {diag(1, 1, 1), diag(-1, 1, 1), diag(-1, -1, 1)};
    for (int j = 0; j < 3; ++j)
      for (int s : {1, -1}) {
        CycMat M = s == 1 ? base[j] : -base[j];
        AntiUnitary a = validate_involution(L, M);
        std::string label = std::string(s == 1 ? "" : "-") + "alpha" + std::to_string(j);
        out.push_back({label, a, invariant_pair(L, a)});
      }
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t k = i + 1; k < out.size(); ++k)
        if (out[i].invariants == out[k].invariants)
          throw std::logic_error("reference involutions " + out[i].label + " and " + out[k].label + " share invariants");
    return out;
  }();
  return refs;
}

std::string classify(const HermLattice& L, const AntiUnitary& a) {
  InvarPair p = invariant_pair(L, a);
  for (const auto& r : reference_involutions())
    if (r.invariants == p) return r.label;
  return "unknown";
}

bool reflection_twist_holds(const HermLattice& L, const AntiUnitary& a, const RootVec& r, int i) {
  CycMat lhs = a.M * conj_sigma(reflection(L, r, i));
  CycMat rhs = reflection(L, act(a, r), -i) * a.M;
  return lhs == rhs;
}

namespace {

using M3 = std::array<int, 9>;

M3 decode(long idx) {
  M3 m{};
  for (int k = 0; k < 9; ++k) {
    m[k] = static_cast<int>(idx % 5);
    idx /= 5;
  }
  return m;
}

M3 mul(const M3& a, const M3& b) {
  M3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
      c[3 * i + j] = s % 5;
    }
  return c;
}

bool preserves(const M3& m, const std::array<int, 3>& d) {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += m[3 * k + i] * d[k] * m[3 * k + j];
      if (s % 5 != (i == j ? d[i] : 0)) return false;
    }
  return true;
}

int projective_order(const M3& m) {
  const M3 I = {1, 0, 0, 0, 1, 0, 0, 0, 1}, mI = {4, 0, 0, 0, 4, 0, 0, 0, 4};
  M3 p = m;
  for (int k = 1; k <= 1000; ++k) {
    if (p == I || p == mI) return k;
    p = mul(p, m);
  }
  throw std::logic_error("projective_order: no finite order found");
}

}  // namespace

OrthogonalGroupData orthogonal_group_F5(const std::array<Fp5, 3>& d, Exec exec) {
  if (d[0] == Fp5(0) || d[1] == Fp5(0) || d[2] == Fp5(0)) throw MathError("orthogonal_group_F5: degenerate form");
  const std::array<int, 3> dd = {d[0].value(), d[1].value(), d[2].value()};
  constexpr long total = 1953125;  // 5⁹
  constexpr long shards = 125;     // first row
  std::vector<std::vector<long>> found(shards);
  auto scan = [&](long s) {
    for (long rest = 0; rest < total / shards; ++rest) {
      long idx = s + shards * rest;
      if (preserves(decode(idx), dd)) found[s].push_back(idx);
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long s = 0; s < shards; ++s) scan(s);
  } else {
    for (long s = 0; s < shards; ++s) scan(s);
  }
  OrthogonalGroupData out;
  std::map<int, long> counts;
  for (const auto& f : found)
    for (long idx : f) {
      ++out.order;
      ++counts[projective_order(decode(idx))];
    }
  out.projective_order = out.order / 2;
  for (auto [k, c] : counts) out.histogram[k] = c / 2;
  return out;
}

}  // namespace arithver
