#include <cmath>
#include <set>

#include "arithver/equivariant_gmod.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace arithver;

namespace {

// A Z[G]-lattice is Z^a ⊕ Z₋^b ⊕ Z[G]^c. Over F₂, rank(A − I) = c; over Q,
// dim ker(A − I) = a + c and dim ker(A + I) = b + c. Then |H¹| = 2^b and
// |H²| = 2^a.
struct Decomposition {
  long a, b, c;
};

long rank_f2(const ZMat& m) {
  std::vector<std::vector<int>> r(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
  long rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < static_cast<long>(m.rows()); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && !r[p][c]) ++p;
    if (p == m.rows()) continue;
    std::swap(r[p], r[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != static_cast<std::size_t>(rank) && r[i][c])
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] ^= r[rank][j];
    ++rank;
  }
  return rank;
}

Decomposition decompose(const ZMat& a) {
  const std::size_t n = a.rows();
  const ZMat id = ZMat::identity(n);
  const long c = rank_f2(a - id);
  const long plus = static_cast<long>(n - rank(to_q(a - id)));
  const long minus = static_cast<long>(n - rank(to_q(a + id)));
  return {plus - c, minus - c, c};
}

Integer pow2(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 2;
  return r;
}

ZMat conjugate(const ZMat& s, const ZMat& x) { return to_z(inverse(to_q(x))) * s * x; }

// Polarized lattice (E_D, f_infty(τ)) with D symmetric under the anti-diagonal
// when a = 2, moved by a random unimodular change of basis.
std::pair<ZMat, ZMat> random_polarized(gen::Rng& rng, int g, const SilholType& t, long max_prod) {
  std::vector<long> d(g, 1);
  for (;;) {
    long prod = 1;
    for (int i = 0; i < g; ++i) d[i] = gen::int_in(rng, 1, 6);
    if (t.a == 2)
      for (int i = 0; i < t.r; ++i) d[t.r - 1 - i] = d[i];
    for (long v : d) prod *= v;
    if (prod <= max_prod) break;
  }
  ZMat e(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    e(i, g + i) = d[i];
    e(g + i, i) = -d[i];
  }
  const ZMat s = f_infty(t, g);
  const ZMat x = gen::unimodular(rng, 2 * g);
  return {x.transpose() * e * x, conjugate(s, x)};
}

}  // namespace

TEST_CASE("Silhol types") {
  auto g1 = types_list(1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].type == SilholType{0, 1});
  CHECK(g1[1].type == SilholType{1, 1});
  auto g3 = types_list(3);
  REQUIRE(g3.size() == 5);
  const std::vector<SilholType> want{{0, 1}, {1, 1}, {2, 1}, {2, 2}, {3, 1}};
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(g3[i].type == want[i]);
  for (int g = 1; g <= 6; ++g)
    for (const auto& [t, m] : types_list(g)) {
      CHECK(m.transpose() == m);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) CHECK((m(i, j) == 0 || m(i, j) == 1));
      CHECK(rank(to_q(m)) == static_cast<std::size_t>(t.r));
    }
  CHECK(type_matrix({2, 2}, 3) == zmat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK_THROWS_AS(validate_type({3, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(validate_type({0, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(validate_type({5, 1}, 4), std::invalid_argument);
}

TEST_CASE("f_infty is an anti-symplectic involution") {
  CHECK(f_infty({0, 1}, 1) == zmat({{1, 0}, {0, -1}}));
  for (int g = 1; g <= 5; ++g) {
    const ZMat j = standard_symplectic(g);
    for (const auto& [t, m] : types_list(g)) {
      const ZMat s = f_infty(t, g);
      CHECK(s * s == ZMat::identity(2 * g));
      CHECK(s.transpose() * j * s == -j);
    }
  }
}

TEST_CASE("group cohomology examples") {
  const ZMat triv = zmat({{1}});
  CHECK(group_cohomology({triv, 0}, 1) == FinAb{});
  CHECK(group_cohomology({triv, 0}, 0).free_rank == 1);
  CHECK(group_cohomology({triv, 0}, 2) == FinAb{0, {2}});
  const FinAb z2{0, {2}};
  CHECK(group_cohomology({zmat({{-1}}), 0}, 1) == z2);
  CHECK(group_cohomology({triv, 1}, 1) == z2);
  const ZMat swap = zmat({{0, 1}, {1, 0}});
  for (int p = 1; p <= 4; ++p) CHECK(group_cohomology({swap, 0}, p) == FinAb{});
  CHECK(group_cohomology({swap, 0}, 0).free_rank == 1);
  CHECK_THROWS_AS(group_cohomology({zmat({{2}}), 0}, 1), MathError);
}

TEST_CASE("group cohomology against the lattice decomposition") {
  gen::Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    const int g = static_cast<int>(gen::int_in(rng, 1, 4));
    const auto types = types_list(g);
    const auto& t = types[gen::int_in(rng, 0, types.size() - 1)].type;
    const ZMat s = conjugate(f_infty(t, g), gen::unimodular(rng, 2 * g));
    const int k = static_cast<int>(gen::int_in(rng, 0, 1));
    const ZMat a = k ? ZMat(-s) : s;
    const Decomposition dec = decompose(a);
    const FinAb h0 = group_cohomology({s, k}, 0), h1 = group_cohomology({s, k}, 1), h2 = group_cohomology({s, k}, 2);
    CHECK(h0.free_rank == dec.a + dec.c);
    CHECK(h1.order() == pow2(dec.b));
    CHECK(h2.order() == pow2(dec.a));
    for (const auto& d : h1.torsion) CHECK(d == 2);
    for (int p = 1; p <= 3; ++p) CHECK(group_cohomology({s, k}, p) == group_cohomology({s, k}, p + 2));
  }
}

TEST_CASE("H1·H2 is invariant under change of basis") {
  gen::Rng rng(12);
  for (int it = 0; it < 30; ++it) {
    const int g = static_cast<int>(gen::int_in(rng, 1, 3));
    const auto types = types_list(g);
    const ZMat s = f_infty(types[gen::int_in(rng, 0, types.size() - 1)].type, g);
    const ZMat s2 = conjugate(s, gen::unimodular(rng, 2 * g));
    CHECK(group_cohomology({s, 0}, 1).order() * group_cohomology({s, 0}, 2).order() ==
          group_cohomology({s2, 0}, 1).order() * group_cohomology({s2, 0}, 2).order());
  }
}

TEST_CASE("connected components of the real locus") {
  std::multiset<Integer> got;
  for (const auto& [t, m] : types_list(3)) got.insert(pi0_count(t, 3));
  CHECK(got == std::multiset<Integer>{8, 4, 2, 2, 1});
  for (int g = 1; g <= 5; ++g) {
    CHECK(pi0_count({g, 1}, g) == 1);
    CHECK(pi0_count({0, 1}, g) == pow2(g));
    for (const auto& [t, m] : types_list(g)) {
      const Integer c = pi0_count(t, g);
      CHECK(c == pow2(decompose(f_infty(t, g)).b));
      CHECK(c <= pow2(g));
      CHECK((c & (c - 1)) == 0);
    }
  }
}

TEST_CASE("Hochschild-Serre rows") {
  // Sign-twisted trivial module: H⁰(Z(1)) = Z₋, so H²(G, Z₋) = 0 and H¹ = Z/2.
  const auto row = hs_E2_row({0, 1}, 1, 1, 2);
  REQUIRE(row.size() == 3);
  CHECK(row[2] == FinAb{});
  CHECK(group_cohomology({zmat({{1}}), 1}, 1) == FinAb{0, {2}});

  // Type (3,1): H¹(A(C), Z) ≅ Z[G]³, so every q ≥ 1 entry of the row
  // p + q = 4 vanishes for p > 0; E₂^{4,0} = H⁴(G, Z) = Z/2 does not.
  const auto r4 = hs_E2_row({3, 1}, 3, 2, 4);
  REQUIRE(r4.size() == 5);
  for (int p = 1; p <= 3; ++p) CHECK(r4[p] == FinAb{});
  CHECK(r4[4] == FinAb{0, {2}});

  for (int g = 1; g <= 3; ++g)
    for (const auto& [t, m] : types_list(g))
      for (int k = 0; k <= 1; ++k)
        for (int n = 0; n <= 2 * g; ++n) {
          const auto r = hs_E2_row(t, g, k, n);
          const ZMat ext = exterior_power(f_infty(t, g).transpose(), n);
          const ZMat a = k ? ZMat(-ext) : ext;
          CHECK(r[0].free_rank == static_cast<int>(ext.rows() - rank(to_q(a - ZMat::identity(ext.rows())))));
          for (std::size_t p = 1; p < r.size(); ++p)
            for (const auto& d : r[p].torsion) CHECK(d == 2);
        }
  CHECK_THROWS_AS(hs_E2_row({0, 1}, 1, 0, 3), std::invalid_argument);
}

TEST_CASE("Silhol normal form") {
  // Already normal: identity basis.
  for (int g = 1; g <= 4; ++g)
    for (const auto& [t, m] : types_list(g)) {
      const auto nf = silhol_normal_form(standard_symplectic(g), f_infty(t, g));
      CHECK(nf.type == t);
      CHECK(nf.P == ZMat::identity(2 * g));
    }
  const auto g1 = silhol_normal_form(standard_symplectic(1), zmat({{1, 0}, {0, -1}}));
  CHECK(g1.type == SilholType{0, 1});

  gen::Rng rng(13);
  for (int g = 1; g <= 4; ++g)
    for (const auto& [t, m] : types_list(g))
      for (int it = 0; it < 100; ++it) {
        const ZMat x = gen::unimodular(rng, 2 * g, 16);
        const ZMat e = x.transpose() * standard_symplectic(g) * x;
        const ZMat s = conjugate(f_infty(t, g), x);
        const auto nf = silhol_normal_form(e, s);
        CHECK(nf.type == t);
        CHECK(nf.P.transpose() * e * nf.P == standard_symplectic(g));
        CHECK(conjugate(s, nf.P) == f_infty(t, g));
      }

  CHECK_THROWS_AS(silhol_normal_form(zmat({{0, 2}, {-2, 0}}), zmat({{1, 0}, {0, -1}})), MathError);
  CHECK_THROWS_AS(silhol_normal_form(standard_symplectic(1), ZMat::identity(2)), MathError);
}

TEST_CASE("principalization examples") {
  const auto same = principalize(standard_symplectic(2), f_infty({1, 1}, 2));
  CHECK(same.index == 1);
  CHECK(same.basis == QMat::identity(4));

  const auto p3 = principalize(zmat({{0, 3}, {-3, 0}}), zmat({{1, 0}, {0, -1}}));
  CHECK(p3.index == 3);
  CHECK(abs(det(p3.E)) == 1);

  ZMat e15(4, 4);
  e15(0, 2) = 1;
  e15(2, 0) = -1;
  e15(1, 3) = 5;
  e15(3, 1) = -5;
  const auto p5 = principalize(e15, f_infty({0, 1}, 2));
  CHECK(p5.index == 5);
  CHECK(abs(det(p5.E)) == 1);
}

TEST_CASE("principalization on random polarized lattices") {
  gen::Rng rng(14);
  for (int it = 0; it < 100; ++it) {
    const int g = static_cast<int>(gen::int_in(rng, 1, 3));
    const auto types = types_list(g);
    const SilholType t = types[gen::int_in(rng, 0, types.size() - 1)].type;
    const auto [e, s] = random_polarized(rng, g, t, 100);
    const Integer d = det(e);
    REQUIRE(d <= 10000);
    const auto out = principalize(e, s);
    CHECK(abs(det(out.E)) == 1);
    CHECK(out.index * out.index == d);
    // Containment: the old basis has integer coordinates in the new one.
    CHECK_NOTHROW(to_z(inverse(out.basis)));
    // Stability and the restricted data.
    CHECK(out.E == to_z(out.basis.transpose() * to_q(e) * out.basis));
    CHECK(to_q(out.S) == inverse(out.basis) * to_q(s) * out.basis);
    CHECK(out.S * out.S == ZMat::identity(2 * g));
    CHECK(out.S.transpose() * out.E * out.S == -out.E);
    // The result is principal, so it has a Silhol type.
    CHECK_NOTHROW(silhol_normal_form(out.E, out.S));
  }
}

TEST_CASE("f_tau embedding") {
  gen::Rng rng(15);
  for (int g = 1; g <= 4; ++g) {
    const QMat j = to_q(standard_symplectic(g));
    for (const auto& [t, m] : types_list(g)) {
      CHECK(f_tau_embed(QMat::identity(g), t) == QMat::identity(2 * g));
      for (int it = 0; it < 10; ++it) {
        QMat t1(g, g), t2(g, g);
        for (int a = 0; a < g; ++a)
          for (int b = 0; b < g; ++b) {
            t1(a, b) = gen::rational(rng, 4);
            t2(a, b) = gen::rational(rng, 4);
          }
        if (det(t1) == 0 || det(t2) == 0) continue;
        const QMat x1 = f_tau_embed(t1, t), x2 = f_tau_embed(t2, t);
        CHECK(x1.transpose() * j * x1 == j);
        // Order-reversing: the top-left block is a transpose.
        CHECK(f_tau_embed(t1 * t2, t) == x2 * x1);
      }
    }
  }
  CHECK_THROWS_AS(f_tau_embed(QMat(2, 2), {0, 1}), MathError);
  // Integral on GL_g^τ.
  const ZMat t = zmat({{1, 1}, {0, 1}});
  CHECK(in_gl_tau(t, {0, 1}));
  CHECK(in_gl_tau(t, {2, 2}));
  CHECK_FALSE(in_gl_tau(t, {1, 1}));
  CHECK_NOTHROW(to_z(f_tau_embed(to_q(t), {2, 2})));
  CHECK_THROWS_AS(to_z(f_tau_embed(to_q(t), {1, 1})), MathError);
}

TEST_CASE("Sp delta membership") {
  const std::vector<Integer> d{1, 3};
  CHECK(in_sp_delta(QMat::identity(4), d));
  // [[I, X], [0, I]] lies in the group iff X·D is symmetric.
  QMat m = QMat::identity(4);
  m(0, 2) = 3;  // X = [[3, 1], [3, 0]]: XD = [[3, 3], [3, 0]]
  m(0, 3) = 1;
  m(1, 2) = 3;
  CHECK(in_sp_delta(m, d));
  m(1, 2) = 1;
  CHECK_FALSE(in_sp_delta(m, d));
  CHECK_FALSE(in_sp_delta(QMat::identity(3), d));
}

TEST_CASE("Hecke log approximation") {
  const auto a = hecke_log_approx(3, 3, 5, 1e-6);
  CHECK(a.n == 1);
  CHECK(a.m == 0);
  const auto b = hecke_log_approx(45, 3, 5, 1e-9);
  CHECK(b.n == 2);
  CHECK(b.m == 1);
  const auto c = hecke_log_approx(2, 3, 5, 0.01);
  CHECK(c.residual_upper < 0.01);

  gen::Rng rng(16);
  for (int it = 0; it < 20; ++it) {
    const double x = std::exp(gen::int_in(rng, -4000, 4000) / 1000.0);
    const auto r = hecke_log_approx(x, 3, 5, 1e-3);
    const long double res = std::fabs(r.n * std::log(3.0L) + r.m * std::log(5.0L) - std::log(static_cast<long double>(x)));
    CHECK(res < 1e-3L);
    CHECK(r.residual_upper < 1e-3);
    CHECK(std::fabs(static_cast<long double>(r.residual_upper) - res) < 1e-12L);
  }
  CHECK_THROWS_AS(hecke_log_approx(2, 3, 9, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(hecke_log_approx(2, 2, 3, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(hecke_log_approx(-1, 3, 5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(hecke_log_approx(2, 3, 5, 1e-12, 10), MathError);
}

TEST_CASE("fixed Grassmannian components") {
  const auto a = grassmann_fixed_components({2, 1}, 1);
  CHECK(a == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(grassmann_fixed_components({5}, 3).size() == 1);
  CHECK(grassmann_fixed_components({1, 1, 1}, 2).size() == 3);
  // Count = coefficient of z^k in Π (1 + z + … + z^{dᵢ}).
  gen::Rng rng(17);
  for (int it = 0; it < 30; ++it) {
    std::vector<int> d(gen::int_in(rng, 1, 4));
    int total = 0;
    for (auto& x : d) total += (x = static_cast<int>(gen::int_in(rng, 0, 4)));
    const int k = static_cast<int>(gen::int_in(rng, 0, total));
    std::vector<long> poly{1};
    for (int x : d) {
      std::vector<long> next(poly.size() + x, 0);
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (int j = 0; j <= x; ++j) next[i + j] += poly[i];
      poly = next;
    }
    const auto comps = grassmann_fixed_components(d, k);
    CHECK(static_cast<long>(comps.size()) == poly[k]);
    for (const auto& v : comps) {
      int s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i] <= d[i]);
        s += v[i];
      }
      CHECK(s == k);
    }
  }
  CHECK_THROWS_AS(grassmann_fixed_components({1}, 2), std::invalid_argument);
}
