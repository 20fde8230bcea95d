#include "arithver/equivariant_gmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arithver {

std::string to_string(const SilholType& t) {
  return "(" + std::to_string(t.r) + "," + std::to_string(t.a) + ")";
}

void validate_type(const SilholType& t, int g) {
  if (g < 1) throw std::invalid_argument("Silhol type: g must be positive");
  const bool ok = (t.r == 0 && t.a == 1) ||
                  (t.r >= 1 && t.r <= g && (t.a == 1 || (t.a == 2 && t.r % 2 == 0)));
  if (!ok) throw std::invalid_argument("not a Silhol type for g = " + std::to_string(g) + ": " + to_string(t));
}

ZMat type_matrix(const SilholType& t, int g) {
  validate_type(t, g);
  ZMat m(g, g);
  for (int i = 0; i < t.r; ++i) {
    if (t.a == 1) m(i, i) = 1;
    else m(i, t.r - 1 - i) = 1;
  }
  return m;
}

std::vector<TypeEntry> types_list(int g) {
  if (g < 1) throw std::invalid_argument("types_list: g must be positive");
  std::vector<TypeEntry> out;
  out.push_back({{0, 1}, type_matrix({0, 1}, g)});
  for (int r = 1; r <= g; ++r) {
    out.push_back({{r, 1}, type_matrix({r, 1}, g)});
    if (r % 2 == 0) out.push_back({{r, 2}, type_matrix({r, 2}, g)});
  }
  return out;
}

ZMat standard_symplectic(int g) {
  ZMat j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

ZMat f_infty(const SilholType& t, int g) {
  const ZMat m = type_matrix(t, g);
  ZMat s(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    s(i, i) = 1;
    s(g + i, g + i) = -1;
  }
  s.set_block(0, g, m);
  return s;
}

// ---------------------------------------------------------------------------

Integer FinAb::order() const {
  if (free_rank != 0) throw MathError("FinAb::order: group is infinite");
  Integer o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string to_string(const FinAb& a) {
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << "Z";
    if (a.free_rank > 1) os << "^" << a.free_rank;
    first = false;
  }
  for (const auto& d : a.torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

// Z^k / (column span of X).
FinAb cokernel(const ZMat& X, std::size_t k) {
  FinAb out;
  if (X.cols() == 0) {
    out.free_rank = static_cast<int>(k);
    return out;
  }
  const SmithResult sm = smith(X);
  const auto diag = sm.diagonal();
  out.free_rank = static_cast<int>(k - sm.rank());
  for (const auto& d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end(), std::greater<>());
  return out;
}

bool is_involution(const ZMat& s) {
  return s.square() && s * s == ZMat::identity(s.rows());
}

}  // namespace

FinAb group_cohomology(const TwistedGModule& m, int p) {
  if (p < 0) throw std::invalid_argument("group_cohomology: negative degree");
  if (!is_involution(m.S)) throw MathError("group_cohomology: S is not an involution");
  const std::size_t n = m.S.rows();
  const ZMat a = (m.k % 2 == 0) ? m.S : ZMat(-m.S);
  const ZMat id = ZMat::identity(n);
  if (p == 0) {
    FinAb h0;
    h0.free_rank = static_cast<int>(integer_kernel(a - id).cols());
    return h0;
  }
  // odd: ker(A + I) / im(A − I); even: ker(A − I) / im(A + I)
  const ZMat kill = (p % 2 == 1) ? ZMat(a + id) : ZMat(a - id);
  const ZMat img = (p % 2 == 1) ? ZMat(a - id) : ZMat(a + id);
  const ZMat k = integer_kernel(kill);
  if (k.cols() == 0) return {};
  const auto x = solve_integer(k, img);
  if (!x) throw MathError("group_cohomology: image not inside the kernel lattice");
  return cokernel(*x, k.cols());
}

Integer pi0_count(const SilholType& t, int g) {
  return group_cohomology({f_infty(t, g), 0}, 1).order();
}

std::vector<FinAb> hs_E2_row(const SilholType& t, int g, int k, int N) {
  if (N < 0 || N > 2 * g) throw std::invalid_argument("hs_E2_row: need 0 ≤ N ≤ 2g");
  const ZMat dual = f_infty(t, g).transpose();
  std::vector<FinAb> row;
  for (int p = 0; p <= N; ++p) {
    const ZMat s = exterior_power(dual, static_cast<std::size_t>(N - p));
    row.push_back(group_cohomology({s, k}, p));
  }
  return row;
}

// ---------------------------------------------------------------------------

namespace {

struct F2Reduction {
  ZMat W;  // integer, unimodular; Wᵗ·B·W ≡ M(τ) (mod 2)
  SilholType type;
};

int mod2(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

// Congruence reduction of a symmetric integer matrix mod 2 to I_r ⊕ 0 or
// (anti-diagonal)_r ⊕ 0, recording the integer column operations.
F2Reduction reduce_mod2(const ZMat& b0) {
  const int g = static_cast<int>(b0.rows());
  std::vector<std::vector<int>> b(g, std::vector<int>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) b[i][j] = mod2(b0(i, j));
  ZMat w = ZMat::identity(g);

  auto swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < g; ++r) std::swap(w(r, i), w(r, j));
    std::swap(b[i], b[j]);
    for (int r = 0; r < g; ++r) std::swap(b[r][i], b[r][j]);
  };
  auto add = [&](int src, int dst) {  // basis vector dst += src
    for (int r = 0; r < g; ++r) w(r, dst) += w(r, src);
    for (int c = 0; c < g; ++c) b[dst][c] ^= b[src][c];
    for (int r = 0; r < g; ++r) b[r][dst] ^= b[r][src];
  };
  auto negate = [&](int i) {
    for (int r = 0; r < g; ++r) w(r, i) = -w(r, i);
  };

  int k = 0, s = 0, t = 0;
  for (;;) {
    int i = k;
    while (i < g && b[i][i] == 0) ++i;
    if (i == g) break;
    swap(i, k);
    for (int j = k + 1; j < g; ++j)
      if (b[k][j]) add(k, j);
    ++k;
    ++s;
  }
  for (;;) {
    int pi = -1, pj = -1;
    for (int i = k; i < g && pi < 0; ++i)
      for (int j = i + 1; j < g; ++j)
        if (b[i][j]) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    swap(pi, k);
    swap(pj, k + 1);
    for (int l = k + 2; l < g; ++l) {
      if (b[k][l]) add(k + 1, l);
      if (b[k + 1][l]) add(k, l);
    }
    k += 2;
    ++t;
  }
  const int r = s + 2 * t;
  if (s > 0) {
    // 1 ⊕ H ≅ I₃: (a, b, c) ↦ (a + b + c, a + b, a + c).
    for (int h = 0; h < t; ++h) {
      const int a = s - 1 + 2 * h, bb = a + 1, c = a + 2;
      add(a, bb);
      add(a, c);
      negate(a);
      add(bb, a);
      add(c, a);
    }
    return {w, {r, 1}};
  }
  if (t == 0) return {w, {0, 1}};
  // H^t → anti-diagonal pairing (m, r − 1 − m).
  ZMat perm(g, g);
  for (int m = 0; m < t; ++m) {
    perm(2 * m, m) = 1;
    perm(2 * m + 1, r - 1 - m) = 1;
  }
  for (int i = r; i < g; ++i) perm(i, i) = 1;
  return {w * perm, {r, 2}};
}

QMat qinv(const ZMat& a) { return inverse(to_q(a)); }

ZMat zinv(const ZMat& a) { return to_z(qinv(a)); }

}  // namespace

SilholForm silhol_normal_form(const ZMat& E, const ZMat& S) {
  const std::size_t n = E.rows();
  if (!E.square() || n % 2 != 0 || S.rows() != n || !S.square())
    throw std::invalid_argument("silhol_normal_form: need square 2g×2g matrices");
  if (E.transpose() != -E) throw MathError("silhol_normal_form: E is not alternating");
  for (std::size_t i = 0; i < n; ++i)
    if (E(i, i) != 0) throw MathError("silhol_normal_form: E is not alternating");
  if (abs(det(E)) != 1) throw MathError("silhol_normal_form: E is not unimodular");
  if (!is_involution(S)) throw MathError("silhol_normal_form: S is not an involution");
  if (S.transpose() * E * S != -E) throw MathError("silhol_normal_form: S is not anti-compatible with E");
  const int g = static_cast<int>(n / 2);
  const ZMat id = ZMat::identity(n);
  if (E == standard_symplectic(g))
    for (const auto& entry : types_list(g))
      if (S == f_infty(entry.type, g)) return {entry.type, id};

  const ZMat e = integer_kernel(S - id);
  if (static_cast<int>(e.cols()) != g) throw MathError("silhol_normal_form: +1 eigenlattice has wrong rank");
  const auto fp = solve_integer(e.transpose() * E, ZMat::identity(g));
  if (!fp) throw MathError("silhol_normal_form: no dual vectors to the +1 eigenlattice");
  // Make f isotropic: f_i += −E(f_i, f_j)·e_j for j > i.
  const ZMat ef = fp->transpose() * E * *fp;
  ZMat c_low(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) c_low(j, i) = -ef(i, j);
  const ZMat f = *fp + e * c_low;
  ZMat p0(n, n);
  p0.set_block(0, 0, e);
  p0.set_block(0, g, f);
  if (p0.transpose() * E * p0 != standard_symplectic(g)) throw MathError("silhol_normal_form: symplectic completion failed");
  const ZMat s0 = zinv(p0) * S * p0;
  const ZMat bmat = s0.block(0, g, g, g);

  const F2Reduction red = reduce_mod2(bmat);
  const ZMat M = type_matrix(red.type, g);
  const ZMat bnew = red.W.transpose() * bmat * red.W;
  ZMat c(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const Integer diff = M(i, j) - bnew(i, j);
      if (mod2(diff) != 0) throw MathError("silhol_normal_form: mod-2 reduction failed");
      c(i, j) = diff / 2;
    }
  const ZMat enew = e * zinv(red.W).transpose();
  const ZMat fnew = f * red.W + enew * c;
  ZMat P(n, n);
  P.set_block(0, 0, enew);
  P.set_block(0, g, fnew);
  if (P.transpose() * E * P != standard_symplectic(g) || zinv(P) * S * P != f_infty(red.type, g))
    throw MathError("silhol_normal_form: verification failed");
  return {red.type, P};
}

// ---------------------------------------------------------------------------

namespace {

long mod_p(const Integer& x, long p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.get_si();
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return ((t % p) + p) % p;
}

// Reduced echelon basis of the kernel of A over F_p.
std::vector<std::vector<long>> kernel_mod_p(std::vector<std::vector<long>> a, long p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const long inv = inv_mod(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<long>> basis;
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol) is_piv[c] = true;
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_piv[fcol]) continue;
    std::vector<long> v(cols, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = (p - a[i][fcol]) % p;
    basis.push_back(v);
  }
  return basis;
}

long smallest_prime_factor(Integer n) {
  if (n < 0) n = -n;
  for (long d = 2; Integer(d) * d <= n; ++d)
    if (n % d == 0) return d;
  return n.get_si();
}

// Canonical basis (columns) of the lattice generated by rational columns.
QMat lattice_basis(const QMat& gens) {
  Integer den = 1;
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) den = lcm(den, Integer(gens(i, j).get_den()));
  const ZMat z = to_z(gens.map([&](const Rational& v) { return Rational(v * den); }));
  const ZMat rows = row_lattice_basis(z.transpose());
  return to_q(rows.transpose()).map([&](const Rational& v) { return Rational(v / den); });
}

}  // namespace

Principalized principalize(const ZMat& E, const ZMat& S) {
  const std::size_t n = E.rows();
  if (!E.square() || S.rows() != n || !S.square()) throw std::invalid_argument("principalize: shape mismatch");
  if (E.transpose() != -E) throw MathError("principalize: E is not alternating");
  if (det(E) == 0) throw MathError("principalize: E is degenerate");
  if (!is_involution(S) || S.transpose() * E * S != -E) throw MathError("principalize: S is not an anti-compatible involution");

  const QMat eq = to_q(E), sq = to_q(S);
  QMat basis = QMat::identity(n);
  Integer index = 1;
  int steps = 0;
  for (;;) {
    const ZMat eb = to_z(basis.transpose() * eq * basis);
    const Integer d = det(eb);
    if (abs(d) == 1) {
      const ZMat sb = to_z(inverse(basis) * sq * basis);
      return {basis, eb, sb, index, steps};
    }
    const SmithResult sm = smith(eb);
    const auto diag = sm.diagonal();
    const long p = smallest_prime_factor(diag.back());
    std::vector<std::size_t> ip;
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (diag[i] % p == 0) ip.push_back(i);

    const ZMat sb = to_z(inverse(basis) * sq * basis);
    const ZMat t = zinv(sm.V) * sb * sm.V;
    const std::size_t m = ip.size();
    std::vector<long> v;
    for (long sign : {1L, -1L}) {
      std::vector<std::vector<long>> a(m, std::vector<long>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i][j] = mod_p(t(ip[i], ip[j]) - (i == j ? sign : 0), p);
      auto ker = kernel_mod_p(a, p);
      if (!ker.empty()) {
        v = ker.front();
        break;
      }
    }
    if (v.empty()) throw MathError("principalize: no stable subgroup of order " + std::to_string(p));

    std::vector<Rational> y(n, 0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < n; ++r) y[r] += Rational(sm.V(r, ip[j]) * v[j], p);
    const std::vector<Rational> x = basis.apply(y);
    QMat gens(n, n + 1);
    gens.set_block(0, 0, basis);
    for (std::size_t r = 0; r < n; ++r) gens(r, n) = x[r];
    basis = lattice_basis(gens);
    index *= p;
    ++steps;
  }
}

// ---------------------------------------------------------------------------

QMat f_tau_embed(const QMat& T, const SilholType& t) {
  if (!T.square()) throw std::invalid_argument("f_tau_embed: T not square");
  const std::size_t g = T.rows();
  if (det(T) == 0) throw MathError("f_tau_embed: T is singular");
  const QMat m = to_q(type_matrix(t, static_cast<int>(g)));
  const QMat ti = inverse(T);
  const QMat off = (m * ti - T.transpose() * m).map([](const Rational& v) { return Rational(v / 2); });
  QMat x(2 * g, 2 * g);
  x.set_block(0, 0, T.transpose());
  x.set_block(0, g, off);
  x.set_block(g, g, ti);
  return x;
}

bool in_gl_tau(const ZMat& T, const SilholType& t) {
  if (!T.square()) return false;
  if (abs(det(T)) != 1) return false;
  const ZMat m = type_matrix(t, static_cast<int>(T.rows()));
  const ZMat d = T.transpose() * m * T - m;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (mod2(d(i, j)) != 0) return false;
  return true;
}

bool in_sp_delta(const QMat& M, const std::vector<Integer>& d) {
  const std::size_t g = d.size();
  if (M.rows() != 2 * g || M.cols() != 2 * g) return false;
  QMat j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = d[i];
    j(g + i, i) = -d[i];
  }
  return M * j * M.transpose() == j;
}

std::vector<std::vector<int>> grassmann_fixed_components(const std::vector<int>& d, int k) {
  for (int x : d)
    if (x < 0) throw std::invalid_argument("grassmann_fixed_components: negative multiplicity");
  if (k < 0 || k > std::accumulate(d.begin(), d.end(), 0))
    throw std::invalid_argument("grassmann_fixed_components: need 0 ≤ k ≤ Σd");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == d.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int x = std::min(d[i], left); x >= 0; --x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
    cur[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

}  // namespace arithver
