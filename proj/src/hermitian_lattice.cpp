#include "arithver/hermitian_lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

namespace arithver {

namespace {
int g_threads = 0;
}

void set_thread_count(int n) { g_threads = n < 0 ? 0 : n; }
int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

CycRatVec to_rat(const CycVec& v) {
  CycRatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_rat(x));
  return out;
}

CycMat conj_sigma(const CycMat& m) {
  return m.map([](const CycInt& x) { return conj_sigma(x); });
}

CycVec conj_sigma(const CycVec& v) {
  CycVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(conj_sigma(x));
  return out;
}

HermLattice::HermLattice(CycMat gram) : gram_(std::move(gram)) {
  if (!gram_.square() || gram_.rows() == 0) throw std::invalid_argument("HermLattice: Gram matrix must be square and nonempty");
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (gram_(j, i) != conj_sigma(gram_(i, j)))
        throw std::invalid_argument("HermLattice: Gram matrix is not hermitian");
}

HermLattice HermLattice::thesis() {
  CycMat g(3, 3);
  g(0, 0) = CycInt(1);
  g(1, 1) = CycInt(1);
  g(2, 2) = (-GoldInt::alpha()).to_cyc();
  return HermLattice(g);
}

bool HermLattice::is_diagonal() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (i != j && !gram_(i, j).is_zero()) return false;
  return true;
}

namespace {

template <class T>
Cyc<T> eval_impl(const Matrix<Cyc<T>>& G, const std::vector<Cyc<T>>& x, const std::vector<Cyc<T>>& y) {
  if (x.size() != G.rows() || y.size() != G.rows()) throw std::invalid_argument("herm_eval: dimension mismatch");
  Cyc<T> s;
  for (std::size_t j = 0; j < G.cols(); ++j) {
    if (y[j].is_zero()) continue;
    Cyc<T> col;
    for (std::size_t i = 0; i < G.rows(); ++i)
      if (!x[i].is_zero() && !G(i, j).is_zero()) col += x[i] * G(i, j);
    if (!col.is_zero()) s += col * conj_sigma(y[j]);
  }
  return s;
}

CycRatMat to_rat(const CycMat& m) {
  CycRatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_rat(m(i, j));
  return r;
}

}  // namespace

CycRat herm_eval(const HermLattice& L, const CycRatVec& x, const CycRatVec& y) {
  return eval_impl(to_rat(L.gram()), x, y);
}

CycInt herm_eval(const HermLattice& L, const CycVec& x, const CycVec& y) { return eval_impl(L.gram(), x, y); }

std::pair<int, int> signature_at(const HermLattice& L, Embedding which) {
  CycRatMat G = to_rat(L.gram());
  const std::size_t n = G.rows();
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && G(p, p).is_zero()) ++p;
    if (p == n) {
      // Zero diagonal: replace e_i by e_i + h_ij·e_j, whose norm is 2·N(h_ij).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (i != j && !G(i, j).is_zero()) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) throw MathError("signature_at: degenerate form");
      CycRat c = G(bi, bj);
      CycRat cs = conj_sigma(c);
      for (std::size_t j = 0; j < n; ++j) G(bi, j) += c * G(bj, j);
      for (std::size_t i = 0; i < n; ++i) G(i, bi) += G(i, bj) * cs;
      p = bi;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(G(k, j), G(p, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(G(i, k), G(i, p));
    }
    CycRat inv = inverse(G(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (G(i, k).is_zero()) continue;
      CycRat f = G(i, k) * inv;
      CycRat fs = conj_sigma(f);
      for (std::size_t j = 0; j < n; ++j) G(i, j) -= f * G(k, j);
      for (std::size_t r = 0; r < n; ++r) G(r, i) -= G(r, k) * fs;
    }
    int s = embed_sign(gold_from_cyc(G(k, k)), which);
    (s > 0 ? pos : neg)++;
  }
  return {pos, neg};
}

Embedding hyperbolic_embedding(const HermLattice& L) {
  for (Embedding e : {Embedding::plus, Embedding::minus})
    if (signature_at(L, e).second == 1) return e;
  throw MathError("hyperbolic_embedding: no embedding of signature (n,1)");
}

namespace {

std::vector<CycInt> box_values(int bound) {
  std::vector<CycInt> vals;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) vals.emplace_back(a, b, c, d);
  return vals;
}

struct GoldKeyHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
    return std::hash<std::int64_t>()(k.first * 1000003 + k.second);
  }
};

using GoldKey = std::pair<std::int64_t, std::int64_t>;

// Diagonal Gram: h(r,r) = Σ dᵢ·N(rᵢ). The last coordinate is looked up in a
// table keyed by dₙ·N(v); the others are enumerated with the first one as the
// outer (parallel) index.
std::vector<RootVec> roots_diagonal(const HermLattice& L, int bound, Exec exec) {
  const std::size_t n = L.rank();
  const auto vals = box_values(bound);
  const std::size_t V = vals.size();
  std::vector<GoldInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = gold_from_cyc(L.gram()(i, i));
  std::vector<std::vector<GoldInt>> weighted(n, std::vector<GoldInt>(V));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < V; ++v) weighted[i][v] = d[i] * gold_from_cyc(vals[v] * conj_sigma(vals[v]));
  std::unordered_map<GoldKey, std::vector<std::size_t>, GoldKeyHash> last;
  for (std::size_t v = 0; v < V; ++v) last[{weighted[n - 1][v].a, weighted[n - 1][v].b}].push_back(v);

  auto scan = [&](std::size_t first, std::vector<RootVec>& out) {
    if (n == 1) {
      if (weighted[0][first] == GoldInt(1)) out.push_back({vals[first]});
      return;
    }
    std::vector<std::size_t> idx(n - 1, 0);
    idx[0] = first;
    // odometer over coordinates 1..n-2
    for (;;) {
      GoldInt s(0);
      for (std::size_t i = 0; i + 1 < n; ++i) s = s + weighted[i][idx[i]];
      GoldInt need = GoldInt(1) - s;
      auto it = last.find({need.a, need.b});
      if (it != last.end())
        for (std::size_t v : it->second) {
          RootVec r(n);
          for (std::size_t i = 0; i + 1 < n; ++i) r[i] = vals[idx[i]];
          r[n - 1] = vals[v];
          out.push_back(std::move(r));
        }
      std::size_t k = n - 2;
      while (k >= 1 && ++idx[k] == V) idx[k--] = 0;
      if (k == 0) break;
    }
  };

  std::vector<std::vector<RootVec>> parts(V);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::size_t f = 0; f < V; ++f) scan(f, parts[f]);
  } else {
    for (std::size_t f = 0; f < V; ++f) scan(f, parts[f]);
  }
  std::vector<RootVec> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<RootVec> roots_general(const HermLattice& L, int bound) {
  const std::size_t n = L.rank();
  const auto vals = box_values(bound);
  const std::size_t V = vals.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(V);
  if (total > 5e7) throw std::invalid_argument("enumerate_short_roots: box too large for a non-diagonal Gram matrix");
  std::vector<RootVec> out;
  std::vector<std::size_t> idx(n, 0);
  const CycInt one(1);
  for (;;) {
    RootVec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = vals[idx[i]];
    if (herm_eval(L, r, r) == one) out.push_back(std::move(r));
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == V) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

std::vector<RootVec> enumerate_short_roots(const HermLattice& L, int bound, Exec exec) {
  if (bound < 1) throw std::invalid_argument("enumerate_short_roots: bound must be >= 1");
  auto out = L.is_diagonal() ? roots_diagonal(L, bound, exec) : roots_general(L, bound);
  std::sort(out.begin(), out.end());
  return out;
}

bool hyperplane_equal(const RootVec& r, const RootVec& t) {
  if (r.size() != t.size()) throw std::invalid_argument("hyperplane_equal: dimension mismatch");
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (r[i] * t[j] != r[j] * t[i]) return false;
  return true;
}

bool hyperplanes_intersect(const HermLattice& L, const RootVec& r, const RootVec& t, Embedding hyperbolic) {
  if (L.rank() != 3) throw std::invalid_argument("hyperplanes_intersect: rank 3 only");
  const CycMat& G = L.gram();
  CycVec u(3), v(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      u[i] += G(i, j) * conj_sigma(r[j]);
      v[i] += G(i, j) * conj_sigma(t[j]);
    }
  // w is orthogonal to r and t: the bilinear cross product of G·σ(r), G·σ(t).
  CycVec w = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero())
    throw MathError("hyperplanes_intersect: roots span the same hyperplane");
  GoldInt hw = gold_from_cyc(herm_eval(L, w, w));
  return embed_sign(hw, hyperbolic) < 0;
}

ArrangementReport verify_orthogonal_arrangement(const HermLattice& L, const std::vector<RootVec>& roots, Exec exec) {
  ArrangementReport rep;
  rep.roots = roots.size();
  if (roots.size() < 2) return rep;
  const Embedding hyp = hyperbolic_embedding(L);
  const std::size_t N = roots.size();
  std::vector<std::vector<PairRecord>> bad(N);
  std::size_t pairs = 0, eq = 0, inter = 0, orth = 0;

  auto row = [&](std::size_t i, std::size_t& p, std::size_t& e, std::size_t& in, std::size_t& o) {
    for (std::size_t j = i + 1; j < N; ++j) {
      ++p;
      if (hyperplane_equal(roots[i], roots[j])) {
        ++e;
        continue;
      }
      CycInt h = herm_eval(L, roots[i], roots[j]);
      bool x = hyperplanes_intersect(L, roots[i], roots[j], hyp);
      if (!x) continue;
      ++in;
      if (h.is_zero())
        ++o;
      else
        bad[i].push_back({roots[i], roots[j], h, true});
    }
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : pairs, eq, inter, orth) num_threads(thread_count())
    for (std::size_t i = 0; i < N; ++i) row(i, pairs, eq, inter, orth);
  } else {
    for (std::size_t i = 0; i < N; ++i) row(i, pairs, eq, inter, orth);
  }
  rep.pairs = pairs;
  rep.equal_pairs = eq;
  rep.intersecting_pairs = inter;
  rep.orthogonal_pairs = orth;
  for (auto& b : bad)
    for (auto& rec : b) rep.violations.push_back(std::move(rec));
  return rep;
}

CycMat reflection(const HermLattice& L, const RootVec& r, int i) {
  const std::size_t n = L.rank();
  if (r.size() != n) throw std::invalid_argument("reflection: dimension mismatch");
  const CycInt c = CycInt(1) - zeta10_power(i);
  const CycMat& G = L.gram();
  CycVec u(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) u[a] += G(a, b) * conj_sigma(r[b]);
  CycMat M = CycMat::identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) M(a, b) -= c * r[a] * u[b];
  return M;
}

bool is_unitary(const HermLattice& L, const CycMat& A) {
  return A.transpose() * L.gram() * conj_sigma(A) == L.gram();
}

std::vector<Integer> to_z_coords(const CycVec& v) {
  std::vector<Integer> z;
  z.reserve(4 * v.size());
  for (const auto& x : v)
    for (auto c : x.c) z.emplace_back(static_cast<long>(c));
  return z;
}

CycVec from_z_coords(const std::vector<Integer>& z) {
  if (z.size() % 4 != 0) throw std::invalid_argument("from_z_coords: length not a multiple of 4");
  CycVec v(z.size() / 4);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      if (!z[4 * i + k].fits_slong_p()) throw MathError("from_z_coords: coefficient overflows int64");
      v[i].c[k] = z[4 * i + k].get_si();
    }
  return v;
}

namespace {

ZMat z_matrix_impl(const CycMat& A, int galois_k) {
  const std::size_t n = A.rows();
  ZMat Z(4 * A.rows(), 4 * A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (int k = 0; k < 4; ++k) {
      CycInt zk = CycInt::zeta();
      CycInt basis(1);
      for (int e = 0; e < k; ++e) basis = basis * zk;
      basis = basis.galois(galois_k);
      for (std::size_t i = 0; i < n; ++i) {
        CycInt img = A(i, j) * basis;
        for (int l = 0; l < 4; ++l) Z(4 * i + l, 4 * j + k) = static_cast<long>(img.c[l]);
      }
    }
  return Z;
}

// Z-matrix of multiplication by x on O_K^n.
ZMat scalar_z_matrix(const CycInt& x, std::size_t n) {
  CycMat D(n, n);
  for (std::size_t i = 0; i < n; ++i) D(i, i) = x;
  return z_matrix_impl(D, 1);
}

CycInt zeta_pow(int j) {
  CycInt r(1);
  for (int e = 0; e < j; ++e) r = r * CycInt::zeta();
  return r;
}

}  // namespace

ZMat z_matrix(const CycMat& A) { return z_matrix_impl(A, 1); }
ZMat z_matrix_semilinear(const CycMat& A) { return z_matrix_impl(A, 4); }

AlternatingLattice alternating_from_herm(const HermLattice& L) {
  const std::size_t n = L.rank();
  const CycRat xi = to_rat(theta()).scaled(Rational(1, 5));
  AlternatingLattice A{n, ZMat(4 * n, 4 * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (int l = 0; l < 4; ++l) {
          // h(ζᵏeᵢ, ζˡeⱼ) = ζᵏ·σ(ζˡ)·Gᵢⱼ
          CycInt h = zeta_pow(k) * conj_sigma(zeta_pow(l)) * L.gram()(i, j);
          Rational t = trace_KQ(xi * to_rat(h));
          if (t.get_den() != 1) throw MathError("alternating_from_herm: non-integral trace form");
          A.E(4 * i + k, 4 * j + l) = t.get_num();
        }
  return A;
}

HermLattice herm_from_alternating(const AlternatingLattice& A) {
  const std::size_t n = A.rank;
  if (A.E.rows() != 4 * n || A.E.cols() != 4 * n) throw std::invalid_argument("herm_from_alternating: E must be 4n x 4n");
  if (A.E.transpose() != -A.E) throw MathError("herm_from_alternating: E is not alternating");
  // E(ζx, y) = E(x, ζ⁴y)
  ZMat Z1 = scalar_z_matrix(zeta_pow(1), n), Z4 = scalar_z_matrix(zeta_pow(4), n);
  if (Z1.transpose() * A.E != A.E * Z4) throw MathError("herm_from_alternating: E is not compatible with the O_K-action");
  const CycRat theta_inv = inverse(to_rat(theta()));
  CycMat G(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      CycRat s;
      for (int j = 0; j < 5; ++j) {
        CycInt zj = zeta_pow(j);
        // E(e_a, ζʲ·e_b)
        Integer e = 0;
        for (int l = 0; l < 4; ++l) e += A.E(4 * a, 4 * b + l) * Integer(static_cast<long>(zj.c[l]));
        s += to_rat(zj).scaled(Rational(e));
      }
      CycRat h = theta_inv * s;
      if (!is_integral(h)) throw MathError("herm_from_alternating: resulting hermitian form is not integral");
      G(a, b) = to_int(h);
    }
  return HermLattice(G);
}

}  // namespace arithver
