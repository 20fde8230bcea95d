#include <set>

#include "arithver/hermitian_lattice.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace arithver;

namespace {

const HermLattice L = HermLattice::thesis();

RootVec unit(std::size_t i, const CycInt& s = CycInt(1)) {
  RootVec v(3);
  v[i] = s;
  return v;
}

CycVec mul(const CycMat& M, const CycVec& x) { return M.apply(x); }

CycMat power(const CycMat& M, int k) {
  CycMat P = CycMat::identity(M.rows());
  for (int i = 0; i < k; ++i) P = P * M;
  return P;
}

// Independent exhaustive oracle over the full box, no norm tables.
std::size_t brute_force_count(int bound) {
  std::vector<CycInt> vals;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) vals.emplace_back(a, b, c, d);
  std::size_t count = 0;
  const CycInt one(1);
  for (const auto& x : vals)
    for (const auto& y : vals)
      for (const auto& z : vals)
        if (herm_eval(L, CycVec{x, y, z}, CycVec{x, y, z}) == one) ++count;
  return count;
}

}  // namespace

TEST_CASE("form evaluation on the reference lattice") {
  CycRatVec e0 = to_rat(unit(0)), e1 = to_rat(unit(1)), e2 = to_rat(unit(2));
  CHECK(herm_eval(L, e0, e0) == CycRat(1));
  CHECK(herm_eval(L, e2, e2) == (-GoldRat::alpha()).to_cyc());
  CHECK(herm_eval(L, e0, e1) == CycRat(0));
  CHECK_THROWS_AS(herm_eval(L, CycRatVec{CycRat(1)}, e0), std::invalid_argument);
}

TEST_CASE("sesquilinearity") {
  gen::Rng rng(21);
  for (int n = 0; n < 100; ++n) {
    CycVec x = {gen::cyc_int(rng), gen::cyc_int(rng), gen::cyc_int(rng)};
    CycVec y = {gen::cyc_int(rng), gen::cyc_int(rng), gen::cyc_int(rng)};
    CycInt a = gen::cyc_int(rng);
    CycVec ax = x, ay = y;
    for (auto& v : ax) v = a * v;
    for (auto& v : ay) v = a * v;
    CHECK(herm_eval(L, ax, y) == a * herm_eval(L, x, y));
    CHECK(herm_eval(L, x, ay) == conj_sigma(a) * herm_eval(L, x, y));
    CHECK(herm_eval(L, y, x) == conj_sigma(herm_eval(L, x, y)));
  }
}

TEST_CASE("signatures") {
  CHECK(signature_at(L, Embedding::plus) == std::pair{2, 1});
  CHECK(signature_at(L, Embedding::minus) == std::pair{3, 0});
  CHECK(hyperbolic_embedding(L) == Embedding::plus);
  HermLattice I(CycMat::identity(3));
  CHECK(signature_at(I, Embedding::plus) == std::pair{3, 0});
  CHECK(signature_at(I, Embedding::minus) == std::pair{3, 0});
  // hyperbolic plane with zero diagonal
  CycMat H(2, 2);
  H(0, 1) = CycInt(1);
  H(1, 0) = CycInt(1);
  CHECK(signature_at(HermLattice(H), Embedding::plus) == std::pair{1, 1});
  CHECK_THROWS_AS(signature_at(HermLattice(CycMat(2, 2)), Embedding::plus), MathError);
}

TEST_CASE("signature is invariant under unitary change of basis") {
  gen::Rng rng(22);
  for (int n = 0; n < 30; ++n) {
    CycMat P = CycMat::identity(3);
    for (int k = 0; k < 4; ++k) {
      CycMat E = CycMat::identity(3);
      std::size_t i = gen::int_in(rng, 0, 2), j = (i + gen::int_in(rng, 1, 2)) % 3;
      E(i, j) = gen::cyc_int(rng, 2);
      P = P * E;
    }
    HermLattice L2(P.transpose() * L.gram() * conj_sigma(P));
    CHECK(signature_at(L2, Embedding::plus) == std::pair{2, 1});
    CHECK(signature_at(L2, Embedding::minus) == std::pair{3, 0});
  }
}

TEST_CASE("hermitian validation") {
  CycMat bad(2, 2);
  bad(0, 0) = CycInt::zeta();
  CHECK_THROWS_AS(HermLattice{bad}, std::invalid_argument);
}

TEST_CASE("short roots at bound 1") {
  auto roots = enumerate_short_roots(L, 1);
  std::set<RootVec> s(roots.begin(), roots.end());
  CHECK(s.size() == roots.size());
  CHECK(std::is_sorted(roots.begin(), roots.end()));
  CHECK(s.count(unit(0)));
  CHECK(s.count(unit(1)));
  CycInt z(1);
  for (int k = 0; k < 5; ++k, z = z * CycInt::zeta()) CHECK(s.count(unit(0, z)));
  CHECK_FALSE(s.count(unit(2)));
  CHECK(roots.size() == brute_force_count(1));
  for (const auto& r : roots) CHECK(herm_eval(L, r, r) == CycInt(1));
  CHECK(roots == enumerate_short_roots(L, 1, Exec::serial));
  CHECK_THROWS_AS(enumerate_short_roots(L, 0), std::invalid_argument);
}

TEST_CASE("root set is closed under tenth roots of unity inside the box") {
  auto roots = enumerate_short_roots(L, 1);
  std::set<RootVec> s(roots.begin(), roots.end());
  for (const auto& r : roots)
    for (int i = 0; i < 10; ++i) {
      RootVec u = r;
      bool inside = true;
      for (auto& x : u) {
        x = zeta10_power(i) * x;
        for (auto c : x.c) inside = inside && c >= -1 && c <= 1;
      }
      if (inside) CHECK(s.count(u));
    }
}

TEST_CASE("non-diagonal enumeration agrees with a change of basis") {
  // G = Pᵗ·P for P = [[1,0],[1,1]], so r is a root of G iff P·r is a root of I.
  CycMat P = CycMat::identity(2);
  P(1, 0) = CycInt(1);
  HermLattice I(CycMat::identity(2));
  HermLattice G(P.transpose() * P);
  CHECK_FALSE(G.is_diagonal());
  auto roots = enumerate_short_roots(G, 1);
  std::set<RootVec> mapped;
  for (const auto& r : roots) mapped.insert(P.apply(r));
  auto base = enumerate_short_roots(I, 2);
  std::size_t expected = 0;
  for (const auto& y : base) {
    // P⁻¹·y = (y0, y1 − y0)
    RootVec x = {y[0], y[1] - y[0]};
    bool inside = true;
    for (const auto& v : x)
      for (auto c : v.c) inside = inside && c >= -1 && c <= 1;
    if (inside) {
      ++expected;
      CHECK(mapped.count(y));
    }
  }
  CHECK(roots.size() == expected);
  CHECK(expected > 0);
}

TEST_CASE("hyperplane equality") {
  CHECK(hyperplane_equal(unit(0), unit(0, CycInt::zeta())));
  CHECK_FALSE(hyperplane_equal(unit(0), unit(1)));
  RootVec r = {CycInt(1), CycInt(0, 1, 0, 0), CycInt(0)};
  RootVec mr = r;
  for (auto& x : mr) x = -x;
  CHECK(hyperplane_equal(r, mr));
}

TEST_CASE("hyperplane equality is an equivalence relation on roots") {
  auto roots = enumerate_short_roots(L, 1);
  gen::Rng rng(23);
  for (int n = 0; n < 3000; ++n) {
    const auto& a = roots[gen::int_in(rng, 0, roots.size() - 1)];
    const auto& b = roots[gen::int_in(rng, 0, roots.size() - 1)];
    const auto& c = roots[gen::int_in(rng, 0, roots.size() - 1)];
    CHECK(hyperplane_equal(a, a));
    CHECK(hyperplane_equal(a, b) == hyperplane_equal(b, a));
    if (hyperplane_equal(a, b) && hyperplane_equal(b, c)) CHECK(hyperplane_equal(a, c));
  }
}

TEST_CASE("hyperplane intersection") {
  CHECK(hyperplanes_intersect(L, unit(0), unit(1), Embedding::plus));
  CHECK_THROWS_AS(hyperplanes_intersect(L, unit(0), unit(0, CycInt::zeta()), Embedding::plus), MathError);
  // agrees with positivity of the 2x2 Gram of span(r, t): 1 − N(h(r,t)) > 0
  auto roots = enumerate_short_roots(L, 1);
  std::size_t nonorth = 0;
  for (std::size_t i = 0; i < roots.size(); i += 7)
    for (std::size_t j = i + 1; j < roots.size(); j += 5) {
      if (hyperplane_equal(roots[i], roots[j])) continue;
      CycInt h = herm_eval(L, roots[i], roots[j]);
      GoldInt d = GoldInt(1) - gold_from_cyc(h * conj_sigma(h));
      CHECK(hyperplanes_intersect(L, roots[i], roots[j], Embedding::plus) == (embed_sign(d, Embedding::plus) > 0));
      if (!h.is_zero()) {
        ++nonorth;
        CHECK_FALSE(hyperplanes_intersect(L, roots[i], roots[j], Embedding::plus));
      }
    }
  CHECK(nonorth > 0);
}

TEST_CASE("orthogonal arrangement at bound 1") {
  auto roots = enumerate_short_roots(L, 1);
  auto rep = verify_orthogonal_arrangement(L, roots);
  CHECK(rep.violations.empty());
  CHECK(rep.pairs == roots.size() * (roots.size() - 1) / 2);
  CHECK(rep.intersecting_pairs == rep.orthogonal_pairs);
  CHECK(rep.intersecting_pairs > 0);
  auto ser = verify_orthogonal_arrangement(L, roots, Exec::serial);
  CHECK(ser.intersecting_pairs == rep.intersecting_pairs);
  CHECK(ser.equal_pairs == rep.equal_pairs);
  CHECK(verify_orthogonal_arrangement(L, {unit(0)}).pairs == 0);
}

TEST_CASE("reflections") {
  CHECK(reflection(L, unit(0), 0) == CycMat::identity(3));
  CycMat phi = reflection(L, unit(0), 1);
  CHECK(mul(phi, unit(0)) == unit(0, zeta10_power(1)));
  CHECK(power(phi, 10) == CycMat::identity(3));
  CHECK(power(phi, 3) == reflection(L, unit(0), 3));
  auto roots = enumerate_short_roots(L, 1);
  for (std::size_t n = 0; n < roots.size(); n += 13) {
    CycMat R = reflection(L, roots[n], 1);
    CHECK(is_unitary(L, R));
    CHECK(power(R, 10) == CycMat::identity(3));
    for (int i = 0; i < 10; ++i) CHECK(power(R, i) == reflection(L, roots[n], i));
  }
}

TEST_CASE("orthogonal reflections commute") {
  auto roots = enumerate_short_roots(L, 1);
  gen::Rng rng(24);
  int tested = 0;
  for (std::size_t i = 0; i < roots.size() && tested < 200; i += 3)
    for (std::size_t j = i + 1; j < roots.size() && tested < 200; j += 11) {
      if (!herm_eval(L, roots[i], roots[j]).is_zero()) continue;
      int a = gen::int_in(rng, 1, 9), b = gen::int_in(rng, 1, 9);
      CycMat P = reflection(L, roots[i], a), Q = reflection(L, roots[j], b);
      CHECK(P * Q == Q * P);
      ++tested;
    }
  CHECK(tested > 50);
}

TEST_CASE("alternating form correspondence") {
  auto A = alternating_from_herm(L);
  CHECK(A.E.transpose() == -A.E);
  CHECK(herm_from_alternating(A) == L);
  // unimodular: the form is integral and h is O_K-valued with different (η)
  CHECK(abs(det(A.E)) >= 1);
  gen::Rng rng(25);
  for (int n = 0; n < 20; ++n) {
    CycMat G(2, 2);
    G(0, 0) = GoldInt(gen::int_in(rng, -3, 3), gen::int_in(rng, -3, 3)).to_cyc();
    G(1, 1) = GoldInt(gen::int_in(rng, -3, 3), gen::int_in(rng, -3, 3)).to_cyc();
    G(0, 1) = gen::cyc_int(rng, 3);
    G(1, 0) = conj_sigma(G(0, 1));
    HermLattice M(G);
    CHECK(herm_from_alternating(alternating_from_herm(M)) == M);
  }
  // E(x,y) = Tr(η⁻¹ h(x,y)) on random vectors
  for (int n = 0; n < 20; ++n) {
    CycVec x = {gen::cyc_int(rng), gen::cyc_int(rng), gen::cyc_int(rng)};
    CycVec y = {gen::cyc_int(rng), gen::cyc_int(rng), gen::cyc_int(rng)};
    auto zx = to_z_coords(x), zy = to_z_coords(y);
    Integer e = 0;
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) e += zx[i] * A.E(i, j) * zy[j];
    CHECK(Rational(e) == trace_KQ(inverse(eta()) * to_rat(herm_eval(L, x, y))));
  }
  // E with odd entries cannot come from an integral h
  AlternatingLattice bad = A;
  bad.E(0, 1) += 1;
  bad.E(1, 0) -= 1;
  CHECK_THROWS_AS(herm_from_alternating(bad), MathError);
}

TEST_CASE("Z-matrices") {
  gen::Rng rng(26);
  for (int n = 0; n < 20; ++n) {
    CycMat A(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) A(i, j) = gen::cyc_int(rng, 3);
    CycVec x = {gen::cyc_int(rng), gen::cyc_int(rng), gen::cyc_int(rng)};
    ZMat Z = z_matrix(A), S = z_matrix_semilinear(A);
    auto zx = to_z_coords(x);
    CHECK(from_z_coords(Z.apply(zx)) == A.apply(x));
    CHECK(from_z_coords(S.apply(zx)) == A.apply(conj_sigma(x)));
  }
}
