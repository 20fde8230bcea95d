#include "arithver/matrix.hpp"

#include <algorithm>
#include <utility>

namespace arithver {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ZMat zmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
  ZMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

QMat to_q(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

ZMat to_z(const QMat& m) {
  ZMat z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw MathError("to_z: non-integral entry " + m(i, j).get_str());
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

namespace {

void swap_rows(ZMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(ZMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst -= q·row_src
void row_axpy(ZMat& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}
void col_axpy(ZMat& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}
void negate_row(ZMat& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HermiteResult hermite_rows(const ZMat& A) {
  HermiteResult res{A, ZMat::identity(A.rows()), 0};
  ZMat& H = res.H;
  ZMat& U = res.U;
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == m) break;
      swap_rows(H, r, best);
      swap_rows(U, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Integer q = floor_div(H(i, c), H(r, c));
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= m || H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      row_axpy(H, i, r, q);
      row_axpy(U, i, r, q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

ZMat row_lattice_basis(const ZMat& A) {
  auto h = hermite_rows(A);
  return h.H.block(0, 0, h.rank, A.cols());
}

std::vector<Integer> SmithResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithResult::rank() const {
  std::size_t k = 0;
  for (const auto& v : diagonal())
    if (v != 0) ++k;
  return k;
}

namespace {

bool is_diagonal(const ZMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

}  // namespace

// Alternating row and column Hermite forms until diagonal, which keeps
// entries reduced; then a gcd pass enforces the divisibility chain.
SmithResult smith(const ZMat& A) {
  SmithResult res{ZMat::identity(A.rows()), A, ZMat::identity(A.cols())};
  ZMat& D = res.D;
  ZMat& U = res.U;
  ZMat& V = res.V;
  while (!is_diagonal(D)) {
    auto r = hermite_rows(D);
    D = r.H;
    U = r.U * U;
    if (is_diagonal(D)) break;
    auto c = hermite_rows(D.transpose());
    D = c.H.transpose();
    V = V * c.U.transpose();
  }
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (D(i, i) < 0) {
      negate_row(D, i);
      negate_row(U, i);
    }
  // diag(x, y) -> diag(gcd, lcm) with unimodular 2x2 blocks.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Integer x = D(i, i), y = D(j, j);
      if (y == 0 && x != 0) continue;
      if (x == 0 && y == 0) continue;
      if (x != 0 && y % x == 0) continue;
      Integer g, a, b;
      mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      if (x == 0) {  // move the nonzero entry forward
        swap_rows(D, i, j);
        swap_rows(U, i, j);
        swap_cols(D, i, j);
        swap_cols(V, i, j);
        continue;
      }
      const Integer xg = x / g, yg = y / g;
      // U-block [[a, b], [-y/g, x/g]], V-block [[1, -b*y/g], [1, a*x/g]].
      for (std::size_t c = 0; c < U.cols(); ++c) {
        const Integer ui = U(i, c), uj = U(j, c);
        U(i, c) = a * ui + b * uj;
        U(j, c) = -yg * ui + xg * uj;
      }
      for (std::size_t r = 0; r < V.rows(); ++r) {
        const Integer vi = V(r, i), vj = V(r, j);
        V(r, i) = vi + vj;
        V(r, j) = -b * yg * vi + a * xg * vj;
      }
      D(i, i) = g;
      D(j, j) = x / g * y;
      if (D(j, j) < 0) {
        D(j, j) = -D(j, j);
        negate_row(U, j);
      }
    }
  return res;
}

ZMat integer_kernel(const ZMat& A) {
  const std::size_t n = A.cols();
  auto h = hermite_rows(A.transpose());
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = h.rank; i < n; ++i) rows.push_back(h.U.row(i));
  if (rows.empty()) return ZMat(n, 0);
  ZMat K(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) K(i, j) = rows[i][j];
  return row_lattice_basis(K).transpose();
}

std::optional<ZMat> solve_integer(const ZMat& A, const ZMat& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  auto s = smith(A);
  ZMat UB = s.U * B;
  ZMat Y(A.cols(), B.cols());
  const std::size_t k = std::min(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const Integer d = i < k ? s.D(i, i) : Integer(0);
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (d == 0) {
        if (UB(i, j) != 0) return std::nullopt;
      } else {
        if (UB(i, j) % d != 0) return std::nullopt;
        Y(i, j) = UB(i, j) / d;
      }
    }
  }
  return s.V * Y;
}

Integer det(const ZMat& A) {
  if (!A.square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  ZMat M = A;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(M, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

namespace {

// Gaussian elimination on [A | B]; returns rank and leaves A in reduced echelon form.
std::size_t rref(QMat& A, QMat* B) {
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(A(p, c)) == 0) ++p;
    if (p == m) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(A(r, j), A(p, j));
    if (B)
      for (std::size_t j = 0; j < B->cols(); ++j) std::swap((*B)(r, j), (*B)(p, j));
    Rational inv = 1 / A(r, c);
    for (std::size_t j = 0; j < n; ++j) A(r, j) *= inv;
    if (B)
      for (std::size_t j = 0; j < B->cols(); ++j) (*B)(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(A(i, c)) == 0) continue;
      Rational f = A(i, c);
      for (std::size_t j = 0; j < n; ++j) A(i, j) -= f * A(r, j);
      if (B)
        for (std::size_t j = 0; j < B->cols(); ++j) (*B)(i, j) -= f * (*B)(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational det(const QMat& A) {
  if (!A.square()) throw std::invalid_argument("det: matrix not square");
  QMat M = A;
  const std::size_t n = M.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(M(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(c, j), M(p, j));
      d = -d;
    }
    d *= M(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(M(i, c)) == 0) continue;
      Rational f = M(i, c) / M(c, c);
      for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(c, j);
    }
  }
  return d;
}

QMat inverse(const QMat& A) {
  if (!A.square()) throw std::invalid_argument("inverse: matrix not square");
  QMat M = A;
  QMat B = QMat::identity(A.rows());
  if (rref(M, &B) != A.rows()) throw MathError("inverse: singular matrix");
  return B;
}

std::size_t rank(const QMat& A) {
  QMat M = A;
  return rref(M, nullptr);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  std::vector<std::size_t> s(q);
  for (std::size_t i = 0; i < q; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = q;
    while (i > 0 && s[i - 1] == n - q + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < q; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

ZMat exterior_power(const ZMat& A, std::size_t q) {
  if (!A.square()) throw std::invalid_argument("exterior_power: matrix not square");
  auto subs = subsets(A.rows(), q);
  ZMat E(subs.size(), subs.size());
  for (std::size_t I = 0; I < subs.size(); ++I)
    for (std::size_t J = 0; J < subs.size(); ++J) {
      ZMat minor(q, q);
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) minor(a, b) = A(subs[I][a], subs[J][b]);
      E(I, J) = det(minor);
    }
  return E;
}

}  // namespace arithver
