#include <algorithm>
#include <numeric>
#include <set>

#include "arithver/involution_classifier.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace arithver;

namespace {

const HermLattice L = HermLattice::thesis();

CycMat diag(const CycInt& a, const CycInt& b, const CycInt& c) {
  CycMat m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

const AntiUnitary& ref(const std::string& label) {
  for (const auto& r : reference_involutions())
    if (r.label == label) return r.involution;
  throw std::logic_error("no reference " + label);
}

CycVec e(std::size_t i, const CycInt& s = CycInt(1)) {
  CycVec v(3);
  v[i] = s;
  return v;
}

const GoldInt t2(3, 1);  // θ·σ(θ)
const GoldInt minus_alpha(0, -1);

GoldMat gdiag(GoldInt a, GoldInt b, GoldInt c) {
  GoldMat m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

// Random word in reflections on bound-1 roots together with its inverse.
std::pair<CycMat, CycMat> random_unitary(gen::Rng& rng, const std::vector<RootVec>& roots, int len) {
  CycMat g = CycMat::identity(3), gi = CycMat::identity(3);
  for (int k = 0; k < len; ++k) {
    const auto& r = roots[gen::int_in(rng, 0, roots.size() - 1)];
    int i = gen::int_in(rng, 1, 9);
    g = g * reflection(L, r, i);
    gi = reflection(L, r, -i) * gi;
  }
  return {g, gi};
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate_involution(L, CycMat::identity(3)));
  CHECK_NOTHROW(validate_involution(L, diag(-1, 1, 1)));
  CHECK_THROWS_AS(validate_involution(L, diag(2, 1, 1)), MathError);
  // ζ·σ(ζ) = 1 so this is an involution, and it is anti-isometric too
  CHECK_NOTHROW(validate_involution(L, diag(CycInt::zeta(), 1, 1)));
  // swapping a unit-norm and a (−α)-norm coordinate breaks the anti-isometry
  CycMat swap(3, 3);
  swap(0, 2) = CycInt(1);
  swap(2, 0) = CycInt(1);
  swap(1, 1) = CycInt(1);
  CHECK_THROWS_WITH_AS(validate_involution(L, swap), doctest::Contains("anti-isometry"), MathError);
}

TEST_CASE("fixed lattices match the expected modules") {
  const CycInt th = theta();
  auto expect = [&](const std::string& label, std::vector<CycVec> basis) {
    FixedLattice F = fixed_lattice(L, ref(label));
    CHECK(F.basis.size() == 3);
    CHECK(F.z_basis.cols() == 6);
    CHECK(F.z_basis == z_span_over_gold(basis));
    CHECK(z_span_over_gold(F.basis) == F.z_basis);
    for (const auto& v : F.basis) CHECK(act(ref(label), v) == v);
  };
  expect("alpha0", {e(0), e(1), e(2)});
  expect("alpha1", {e(0, th), e(1), e(2)});
  expect("alpha2", {e(0, th), e(1, th), e(2)});
}

TEST_CASE("restricted forms are congruent to the reference diagonal forms") {
  const CycInt th = theta();
  struct Case {
    std::string label;
    std::vector<CycVec> basis;
    GoldMat target;
  };
  std::vector<Case> cases = {
      {"alpha0", {e(0), e(1), e(2)}, gdiag(1, 1, minus_alpha)},
      {"alpha1", {e(0, th), e(1), e(2)}, gdiag(t2, 1, minus_alpha)},
      {"alpha2", {e(0, th), e(1, th), e(2)}, gdiag(t2, t2, minus_alpha)},
  };
  for (const auto& c : cases) {
    FixedLattice F = fixed_lattice(L, ref(c.label));
    GoldMat G = restricted_form(L, ref(c.label));
    CHECK(G == F.gram);
    auto P = basis_change(F, c.basis);
    REQUIRE(P.has_value());
    CHECK(P->transpose() * G * *P == c.target);
  }
  // −α₀ fixes the anti-invariant vectors θ·Z[α]³
  FixedLattice F = fixed_lattice(L, ref("-alpha0"));
  CHECK(F.z_basis == z_span_over_gold({e(0, th), e(1, th), e(2, th)}));
  auto P = basis_change(F, {e(0, th), e(1, th), e(2, th)});
  REQUIRE(P.has_value());
  CHECK(P->transpose() * F.gram * *P == gdiag(t2, t2, t2 * minus_alpha));
}

TEST_CASE("theta norm identity") { CHECK(gold_from_cyc(theta() * conj_sigma(theta())) == t2); }

TEST_CASE("invariant pairs") {
  auto p = [&](const std::string& l) { return invariant_pair(L, ref(l)); };
  CHECK(p("alpha0") == InvarPair{3, DetClass::nonsquare});
  CHECK(p("-alpha0") == InvarPair{0, DetClass::void_});
  CHECK(p("alpha1") == InvarPair{2, DetClass::nonsquare});
  CHECK(p("-alpha1") == InvarPair{1, DetClass::square});
  CHECK(p("alpha2") == InvarPair{1, DetClass::nonsquare});
  CHECK(p("-alpha2") == InvarPair{2, DetClass::square});
  std::set<InvarPair> s;
  for (const auto& r : reference_involutions()) s.insert(r.invariants);
  CHECK(s.size() == 6);
}

TEST_CASE("classification is stable under unitary conjugation") {
  for (const auto& r : reference_involutions()) CHECK(classify(L, r.involution) == r.label);
  auto roots = enumerate_short_roots(L, 1);
  // the worked case: conjugate α₁ by φ_{e₀}²
  CycMat g = reflection(L, e(0), 2), gi = reflection(L, e(0), -2);
  AntiUnitary c = conjugate(ref("alpha1"), g, gi);
  CHECK_NOTHROW(validate_involution(L, c.M));
  CHECK(classify(L, c) == "alpha1");
  gen::Rng rng(31);
  for (int n = 0; n < 60; ++n) {
    auto [h, hi] = random_unitary(rng, roots, 1 + n % 4);
    CHECK(h * hi == CycMat::identity(3));
    const auto& r = reference_involutions()[n % 6];
    AntiUnitary a = conjugate(r.involution, h, hi);
    CHECK_NOTHROW(validate_involution(L, a.M));
    CHECK(invariant_pair(L, a) == r.invariants);
    CHECK(classify(L, a) == r.label);
  }
}

TEST_CASE("involutions twist reflections") {
  auto roots = enumerate_short_roots(L, 1);
  for (const auto& r : reference_involutions())
    for (std::size_t k = 0; k < roots.size(); k += 17)
      for (int i = 0; i < 10; i += 3) CHECK(reflection_twist_holds(L, r.involution, roots[k], i));
}

TEST_CASE("involutions map root hyperplanes to root hyperplanes") {
  auto roots = enumerate_short_roots(L, 1);
  for (const auto& r : reference_involutions())
    for (std::size_t i = 0; i < roots.size(); i += 29)
      for (std::size_t j = 0; j < roots.size(); j += 31) {
        auto ai = act(r.involution, roots[i]), aj = act(r.involution, roots[j]);
        CHECK(herm_eval(L, ai, ai) == CycInt(1));
        CHECK(hyperplane_equal(roots[i], roots[j]) == hyperplane_equal(ai, aj));
      }
}

TEST_CASE("orthogonal group of the reduced form") {
  auto data = orthogonal_group_F5({Fp5(1), Fp5(1), Fp5(3)});
  CHECK(data.order == 240);
  CHECK(data.projective_order == 120);
  // S₅ histogram from permutations
  std::map<int, long> s5;
  std::array<int, 5> p = {0, 1, 2, 3, 4};
  do {
    std::array<int, 5> q = p;
    int k = 1;
    auto id = [](const std::array<int, 5>& x) {
      for (int i = 0; i < 5; ++i)
        if (x[i] != i) return false;
      return true;
    };
    while (!id(q)) {
      std::array<int, 5> nq{};
      for (int i = 0; i < 5; ++i) nq[i] = p[q[i]];
      q = nq;
      ++k;
    }
    ++s5[k];
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(data.histogram == s5);
  CHECK(s5 == std::map<int, long>{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}});
  CHECK_THROWS_AS(orthogonal_group_F5({Fp5(1), Fp5(0), Fp5(3)}), MathError);
}

TEST_CASE("serial and parallel brute force agree") {
  auto a = orthogonal_group_F5({Fp5(1), Fp5(2), Fp5(3)}, Exec::serial);
  auto b = orthogonal_group_F5({Fp5(1), Fp5(2), Fp5(3)}, Exec::parallel);
  CHECK(a.order == b.order);
  CHECK(a.histogram == b.histogram);
  CHECK(a.order == 240);  // all nondegenerate ternary forms over F₅ have |O| = 2·|SO₃| = 2·120
}
