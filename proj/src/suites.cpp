#include "arithver/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "arithver/abelian_cohomology.hpp"
#include "arithver/equivariant_gmod.hpp"
#include "arithver/glue_combinatorics.hpp"
#include "arithver/hermitian_lattice.hpp"
#include "arithver/hyperbolic_triangle.hpp"
#include "arithver/involution_classifier.hpp"
#include "arithver/quintic_moduli.hpp"

namespace arithver {

namespace {

using Rng = std::mt19937_64;
using Outcome = std::pair<bool, std::string>;

long int_in(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}
  void add(const std::string& name, bool ok, std::string details = "") {
    out_.push_back({suite_ + "." + name, ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
  }
  void skip(const std::string& name, std::string details) {
    out_.push_back({suite_ + "." + name, CheckStatus::skip, std::move(details)});
  }
  // Runs f, turning an exception into a failed check.
  void run(const std::string& name, const std::function<Outcome()>& f) {
    try {
      auto [ok, details] = f();
      add(name, ok, std::move(details));
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<CheckRecord> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckRecord> out_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

CycInt random_cyc(Rng& rng) {
  return {int_in(rng, -9, 9), int_in(rng, -9, 9), int_in(rng, -9, 9), int_in(rng, -9, 9)};
}

// ---- rings

void suite_rings(Recorder& rec, const SuiteOptions& opt) {
  rec.run("zeta10_order", [] {
    bool ok = zeta10_power(10) == CycInt(1) && zeta10_power(5) == CycInt(-1);
    for (int i = 1; i < 10; ++i) ok = ok && zeta10_power(i) != CycInt(1);
    return Outcome{ok, std::string()};
  });
  Rng rng(opt.seed);
  rec.run("ring_axioms", [&] {
    for (int n = 0; n < opt.samples; ++n) {
      const CycInt a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
      if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a)
        return Outcome{false, "counterexample at sample " + std::to_string(n)};
    }
    return Outcome{true, std::to_string(opt.samples) + " triples"};
  });
  rec.run("trace_is_sum_of_conjugates", [&] {
    for (int n = 0; n < opt.samples; ++n) {
      const CycInt a = random_cyc(rng);
      CycInt s;
      for (int k = 1; k <= 4; ++k) s += a.galois(k);
      if (s != CycInt(trace_KQ(a))) return Outcome{false, to_string(a)};
    }
    return Outcome{true, std::string()};
  });
  rec.run("norm_multiplicative", [&] {
    for (int n = 0; n < opt.samples; ++n) {
      const CycInt a = random_cyc(rng), b = random_cyc(rng);
      if (norm_KQ(to_rat(a * b)) != norm_KQ(to_rat(a)) * norm_KQ(to_rat(b))) return Outcome{false, to_string(a)};
    }
    return Outcome{true, std::string()};
  });
  rec.run("inverse", [&] {
    for (int n = 0; n < opt.samples; ++n) {
      const CycInt a = random_cyc(rng);
      if (a.is_zero()) continue;
      if (to_rat(a) * inverse(to_rat(a)) != CycRat(Rational(1))) return Outcome{false, to_string(a)};
    }
    return Outcome{true, std::string()};
  });
  rec.run("golden_subring", [&] {
    for (int n = 0; n < opt.samples; ++n) {
      const GoldInt g(int_in(rng, -20, 20), int_in(rng, -20, 20));
      if (gold_from_cyc(g.to_cyc()) != g || conj_sigma(g.to_cyc()) != g.to_cyc()) return Outcome{false, to_string(g)};
    }
    return Outcome{true, std::string()};
  });
  rec.run("fp5_inverse", [] {
    bool ok = true;
    for (int v = 1; v < 5; ++v) ok = ok && Fp5(v) * Fp5(v).inverse() == Fp5(1);
    return Outcome{ok, std::string()};
  });
}

// ---- lattice / arrangement

void suite_lattice(Recorder& rec, const SuiteOptions& opt) {
  const HermLattice L = HermLattice::thesis();
  rec.run("signatures", [&] {
    const auto p = signature_at(L, Embedding::plus), m = signature_at(L, Embedding::minus);
    std::multiset<std::pair<int, int>> got{p, m};
    const bool ok = got == std::multiset<std::pair<int, int>>{{2, 1}, {3, 0}};
    return Outcome{ok, "plus (" + std::to_string(p.first) + "," + std::to_string(p.second) + "), minus (" +
                             std::to_string(m.first) + "," + std::to_string(m.second) + ")"};
  });
  rec.run("alternating_roundtrip", [&] {
    return Outcome{herm_from_alternating(alternating_from_herm(L)) == L, std::string()};
  });
  rec.run("reflection_algebra", [&] {
    const auto roots = enumerate_short_roots(L, opt.bound);
    const std::size_t n = std::min<std::size_t>(roots.size(), static_cast<std::size_t>(opt.samples));
    const CycMat id = CycMat::identity(L.rank());
    for (std::size_t k = 0; k < n; ++k) {
      const CycMat r = reflection(L, roots[k], 1);
      CycMat p = id;
      for (int i = 0; i < 10; ++i) p = p * r;
      if (p != id || !is_unitary(L, r)) return Outcome{false, "root " + std::to_string(k)};
    }
    return Outcome{n > 0, std::to_string(n) + " roots"};
  });
}

void suite_arrangement(Recorder& rec, const SuiteOptions& opt) {
  const HermLattice L = HermLattice::thesis();
  const auto roots = enumerate_short_roots(L, opt.bound, Exec::parallel);
  ArrangementReport rep;
  rec.run("orthogonality", [&] {
    rep = verify_orthogonal_arrangement(L, roots, Exec::parallel);
    std::ostringstream os;
    os << rep.roots << " roots, " << rep.intersecting_pairs << " intersecting pairs, " << rep.violations.size()
       << " violations";
    return Outcome{rep.violations.empty() && rep.roots > 0, os.str()};
  });
  rec.run("serial_reference_agrees", [&] {
    const auto sr = enumerate_short_roots(L, opt.bound, Exec::serial);
    const auto s = verify_orthogonal_arrangement(L, sr, Exec::serial);
    const bool ok = sr == roots && s.pairs == rep.pairs && s.intersecting_pairs == rep.intersecting_pairs &&
                    s.orthogonal_pairs == rep.orthogonal_pairs && s.violations.size() == rep.violations.size();
    return Outcome{ok, std::string()};
  });
}

// ---- involutions

std::map<int, long> s5_histogram() {
  std::map<int, long> h;
  std::array<int, 5> p = {0, 1, 2, 3, 4};
  do {
    std::array<bool, 5> seen{};
    int order = 1;
    for (int i = 0; i < 5; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
      order = std::lcm(order, len);
    }
    ++h[order];
  } while (std::next_permutation(p.begin(), p.end()));
  return h;
}

void suite_involutions(Recorder& rec, const SuiteOptions& opt) {
  const HermLattice L = HermLattice::thesis();
  const auto& refs = reference_involutions();
  rec.run("reference_classification", [&] {
    for (const auto& r : refs)
      if (classify(L, r.involution) != r.label) return Outcome{false, r.label};
    return Outcome{true, std::to_string(refs.size()) + " references"};
  });
  rec.run("invariant_pairs_distinct", [&] {
    std::set<InvarPair> s;
    for (const auto& r : refs) s.insert(r.invariants);
    return Outcome{s.size() == refs.size(), std::string()};
  });
  const auto roots = enumerate_short_roots(L, 1);
  rec.run("reflection_twist", [&] {
    for (const auto& r : refs)
      for (std::size_t k = 0; k < roots.size(); k += 7)
        for (int i = 0; i < 10; ++i)
          if (!reflection_twist_holds(L, r.involution, roots[k], i)) return Outcome{false, r.label};
    return Outcome{true, std::string()};
  });
  rec.run("conjugates_classify_stably", [&] {
    Rng rng(opt.seed + 1);
    for (int n = 0; n < opt.samples; ++n) {
      const auto& r = refs[n % refs.size()];
      CycMat g = CycMat::identity(3), gi = CycMat::identity(3);
      for (int k = 0; k < 3; ++k) {
        const auto& root = roots[int_in(rng, 0, static_cast<long>(roots.size()) - 1)];
        const int i = static_cast<int>(int_in(rng, 1, 9));
        g = g * reflection(L, root, i);
        gi = reflection(L, root, -i) * gi;
      }
      if (classify(L, conjugate(r.involution, g, gi)) != r.label) return Outcome{false, r.label};
    }
    return Outcome{true, std::string()};
  });
  rec.run("orthogonal_group_F5", [&] {
    const auto d = orthogonal_group_F5({Fp5(1), Fp5(1), Fp5(3)});
    const bool ok = d.order == 240 && d.projective_order == 120 && d.histogram == s5_histogram();
    return Outcome{ok, "|O| = " + std::to_string(d.order) + ", |PO| = " + std::to_string(d.projective_order)};
  });
}

// ---- glue

// Symbolic squaring of g∘α for the monomial model, independent of the library.
bool squares_to_identity(int m, int a, const std::vector<int>& i) {
  const int k = static_cast<int>(i.size());
  for (int v = 0; v < k; ++v) {
    const int u = v < 2 * a ? (v ^ 1) : v;
    // (gα)²: t_v ↦ ζ^{i_v}·conj(ζ^{i_u}·conj(t_v)) = ζ^{i_v − i_u} t_v
    if (((i[v] - i[u]) % m + m) % m != 0) return false;
  }
  return true;
}

void suite_glue(Recorder& rec, const SuiteOptions&) {
  const int m = 10;
  rec.run("involution_counts", [&] {
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) {
        const int k = 2 * a + b;
        std::vector<int> i(k, 0);
        long yes = 0;
        for (;;) {
          const bool c = involution_criterion({m, a, i});
          if (c != squares_to_identity(m, a, i)) return Outcome{false, "criterion mismatch"};
          yes += c;
          int p = k;
          while (p > 0 && ++i[p - 1] == m) i[--p] = 0;
          if (p == 0) break;
        }
        Integer want = 1;
        for (int e = 0; e < a + b; ++e) want *= m;
        if (Integer(yes) != want || count_equivalent_involutions({m, a, b, k}) != want)
          return Outcome{false, "count mismatch at a=" + std::to_string(a) + ", b=" + std::to_string(b)};
      }
    return Outcome{true, std::string()};
  });
  rec.run("intersection_dimensions", [&] {
    for (const NodeDatum d : {NodeDatum{m, 1, 0, 2}, NodeDatum{m, 2, 0, 4}, NodeDatum{m, 1, 1, 4}}) {
      const auto r = copies_and_intersections(d);
      for (std::size_t x = 0; x < r.labels.size(); ++x)
        for (std::size_t y = 0; y < r.labels.size(); ++y) {
          int agree = 0;
          for (int c = 0; c < d.a; ++c) agree += r.labels[x][c] == r.labels[y][c];
          if (r.dimensions[x][y] != 2 * agree + (d.n - 2 * d.a)) return Outcome{false, std::string("dimension")};
        }
    }
    return Outcome{true, std::string()};
  });
}

// ---- triangle

void suite_triangle(Recorder& rec, const SuiteOptions& opt) {
  const TriangleSig sig{3, 5, 10};
  rec.run("rotation_orders", [&] {
    const auto n = triangle_from_angles(sig);
    auto rot = [&](int i, int j) { return mat_mul(reflection_matrix(n[i]), reflection_matrix(n[j])); };
    const auto a = rotation_order(rot(0, 1), 50, opt.tol), b = rotation_order(rot(0, 2), 50, opt.tol),
               c = rotation_order(rot(1, 2), 50, opt.tol);
    const bool ok = a == 3 && b == 5 && c == 10;
    return Outcome{ok, std::string()};
  });
  rec.run("area", [&] {
    const double err = std::abs(area_gauss_bonnet(sig) - 11 * M_PI / 30);
    return Outcome{err < 1e-12, "error " + fmt(err)};
  });
  rec.run("arithmeticity", [&] {
    return Outcome{!is_arithmetic(sig) && is_arithmetic({2, 3, 7}), std::string()};
  });
  rec.run("form_preserved", [&] {
    const auto n = triangle_from_angles(sig);
    double worst = 0;
    for (const auto& v : n) worst = std::max(worst, form_defect(reflection_matrix(v)));
    return Outcome{worst < opt.tol, "max defect " + fmt(worst)};
  });
}

// ---- fourier

CohClass parity_flip(const CohClass& u) {
  CohClass out(u.model());
  for (const auto& [k, c] : u.terms()) out.add(k, std::popcount(k) % 2 ? -c : c);
  return out;
}

void suite_fourier(Recorder& rec, const SuiteOptions& opt) {
  const int gp = std::min(opt.max_g, 2);
  for (int g = 1; g <= opt.max_g; ++g) {
    const std::string sfx = ".g" + std::to_string(g);
    const AbvarModel a = abvar(g);
    const Rational sign = g % 2 ? -1 : 1;
    rec.run("integrality_and_inversion" + sfx, [&] {
      for (std::uint32_t k = 0; k <= a.full_mask(); ++k) {
        const CohClass u = CohClass::monomial(a, k);
        const CohClass f = fourier(u);
        if (!f.is_integral() || fourier(f) != sign * parity_flip(u)) return Outcome{false, std::to_string(k)};
      }
      return Outcome{true, std::to_string(a.full_mask() + 1) + " monomials"};
    });
    rec.run("exp_theta" + sfx, [&] {
      return Outcome{fourier(exp_nilpotent(theta(a))) == exp_nilpotent(-theta(a)), std::string()};
    });
    for (const auto& c : check_minimal_class_kernel(g)) rec.add(c.name + sfx, c.holds);
    for (const auto& c : check_product_identities(g, opt.seed + 1)) rec.add(c.name + sfx, c.holds);
  }
  for (int g = 1; g <= opt.max_g + 1; ++g)
    rec.run("beauville_divided_powers.g" + std::to_string(g), [&] {
      const AbvarModel a = abvar(g);
      const CohClass gamma = minimal_class(a);
      CohClass p = point_class(a);
      for (int j = 1; j <= g; ++j) {
        p = Rational(1, j) * pontryagin(p, gamma);
        if (p != theta_power(a, g - j)) return Outcome{false, "j = " + std::to_string(j)};
      }
      return Outcome{true, std::string()};
    });
  for (int g = 1; g <= gp; ++g)
    for (const auto& c : check_poincare_exponential(g)) rec.add(c.name + ".g" + std::to_string(g), c.holds);
}

// ---- equivariant

ZMat unimodular(Rng& rng, std::size_t n) {
  ZMat u = ZMat::identity(n);
  for (int s = 0; s < 16; ++s) {
    const auto i = static_cast<std::size_t>(int_in(rng, 0, n - 1));
    auto j = static_cast<std::size_t>(int_in(rng, 0, n - 2));
    if (j >= i) ++j;
    const long c = int_in(rng, -2, 2);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += c * u(r, i);
  }
  return u;
}

ZMat conjugate_by(const ZMat& s, const ZMat& x) { return to_z(inverse(to_q(x))) * s * x; }

void suite_equivariant(Recorder& rec, const SuiteOptions& opt) {
  Rng rng(opt.seed + 2);
  rec.run("type_count_g3", [] { return Outcome{types_list(3).size() == 5, std::string()}; });
  rec.run("f_infty_anti_symplectic", [&] {
    for (int g = 1; g <= std::max(opt.max_g, 4); ++g)
      for (const auto& e : types_list(g)) {
        const ZMat s = f_infty(e.type, g), j = standard_symplectic(g);
        if (s * s != ZMat::identity(2 * g) || s.transpose() * j * s != -j) return Outcome{false, to_string(e.type)};
      }
    return Outcome{true, std::string()};
  });
  rec.run("pi0_multiset_g3", [] {
    std::multiset<Integer> got;
    std::string d;
    for (const auto& e : types_list(3)) {
      got.insert(pi0_count(e.type, 3));
      d += (d.empty() ? "" : " ") + to_string(e.type) + "->" + pi0_count(e.type, 3).get_str();
    }
    return Outcome{got == std::multiset<Integer>{1, 2, 2, 4, 8}, d};
  });
  rec.run("e2_row_q_positive_vanishes", [] {
    for (const auto& e : types_list(3)) {
      const auto row = hs_E2_row(e.type, 3, 2, 4);
      bool ok = true;
      for (int p = 1; p <= 3; ++p) ok = ok && row[p] == FinAb{};
      if (ok) return Outcome{true, "type " + to_string(e.type)};
    }
    return Outcome{false, std::string("no type")};
  });
  rec.run("e2_row_all_p_positive_vanishes", [] {
    std::string d;
    for (const auto& e : types_list(3)) {
      const auto row = hs_E2_row(e.type, 3, 2, 4);
      bool ok = true;
      for (int p = 1; p <= 4; ++p) ok = ok && row[p] == FinAb{};
      if (ok) return Outcome{true, "type " + to_string(e.type)};
      d = "E2^{4,0} = " + to_string(row[4]) + " for every type";
    }
    return Outcome{false, d};
  });
  rec.run("silhol_roundtrip", [&] {
    long n = 0;
    for (int g = 1; g <= std::max(opt.max_g, 4); ++g)
      for (const auto& e : types_list(g))
        for (int it = 0; it < opt.samples; ++it, ++n) {
          const ZMat x = unimodular(rng, 2 * g);
          const ZMat E = x.transpose() * standard_symplectic(g) * x;
          const ZMat S = conjugate_by(f_infty(e.type, g), x);
          const auto nf = silhol_normal_form(E, S);
          if (nf.type != e.type || nf.P.transpose() * E * nf.P != standard_symplectic(g) ||
              conjugate_by(S, nf.P) != f_infty(e.type, g))
            return Outcome{false, to_string(e.type)};
        }
    return Outcome{true, std::to_string(n) + " conjugates"};
  });
  rec.run("principalize", [&] {
    for (int it = 0; it < opt.samples; ++it) {
      const int g = static_cast<int>(int_in(rng, 1, std::min(opt.max_g, 3)));
      const auto types = types_list(g);
      const SilholType t = types[int_in(rng, 0, static_cast<long>(types.size()) - 1)].type;
      std::vector<long> d(g);
      for (int i = 0; i < g; ++i) d[i] = int_in(rng, 1, 6);
      if (t.a == 2)
        for (int i = 0; i < t.r; ++i) d[t.r - 1 - i] = d[i];
      ZMat E(2 * g, 2 * g);
      for (int i = 0; i < g; ++i) E(i, g + i) = d[i], E(g + i, i) = -d[i];
      const ZMat x = unimodular(rng, 2 * g);
      const ZMat Ex = x.transpose() * E * x, Sx = conjugate_by(f_infty(t, g), x);
      if (det(Ex) > 10000) continue;
      const auto out = principalize(Ex, Sx);
      const bool ok = abs(det(out.E)) == 1 && out.index * out.index == det(Ex) &&
                      out.S.transpose() * out.E * out.S == -out.E &&
                      to_q(out.S) == inverse(out.basis) * to_q(Sx) * out.basis;
      to_z(inverse(out.basis));  // containment; throws if not integral
      if (!ok) return Outcome{false, "sample " + std::to_string(it)};
    }
    return Outcome{true, std::string()};
  });
  rec.run("hecke_approximation", [&] {
    std::uniform_real_distribution<double> u(-4, 4);
    for (int it = 0; it < 20; ++it) {
      const double x = std::exp(u(rng));
      const auto h = hecke_log_approx(x, 3, 5, 1e-3);
      if (!(h.residual_upper < 1e-3)) return Outcome{false, "target " + std::to_string(it)};
    }
    return Outcome{true, "20 targets"};
  });
}

// ---- quintics

void suite_quintics(Recorder& rec, const SuiteOptions& opt) {
  rec.run("lambda_gate", [] {
    const Real l = golden_lambda();
    return Outcome{abs(l * (l + 1) - 1) < default_tol(), std::string()};
  });
  rec.run("reference_stabilizers", [] {
    const auto a = stabilizer(d3_normal_form()), b = stabilizer(d5_normal_form()), c = stabilizer(z2_nodal_example());
    const bool ok = a.label == StabLabel::d3 && a.order() == 6 && b.label == StabLabel::d5 && b.order() == 10 &&
                    c.label == StabLabel::z2 && c.order() == 2;
    return Outcome{ok, to_string(a.label) + ", " + to_string(b.label) + ", " + to_string(c.label)};
  });
  rec.run("random_stabilizers", [&] {
    Rng rng(opt.seed + 3);
    std::vector<QuinticConfig> samples;
    for (int i = 0; i < opt.samples; ++i) samples.push_back(random_configuration(rng, static_cast<int>(rng() % 3)));
    const auto r = order4_absence_check(samples);
    std::size_t listed = 0;
    for (std::size_t o : {1, 2, 6, 10}) listed += r.order_counts[o];
    std::ostringstream os;
    os << "orders 1:" << r.order_counts[1] << " 2:" << r.order_counts[2] << " 6:" << r.order_counts[6]
       << " 10:" << r.order_counts[10];
    return Outcome{listed == r.samples && r.order4_elements == 0, os.str()};
  });
  rec.run("generators_permute_normal_forms", [] {
    auto fixed = [](const RealMoebius& g, const QuinticConfig& c) {
      const auto s = stabilizer(c, default_tol(), Exec::serial);
      return std::any_of(s.elements.begin(), s.elements.end(), [&](const RealMoebius& h) { return same_moebius(g, h); });
    };
    const bool ok = fixed(gen_rho(), d3_normal_form()) && fixed(gen_nu(), d3_normal_form()) &&
                    fixed(gen_gamma(), d5_normal_form()) && fixed(gen_nu(), d5_normal_form());
    return Outcome{ok, std::string()};
  });
}

using SuiteFn = void (*)(Recorder&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"rings", suite_rings},         {"lattice", suite_lattice},     {"arrangement", suite_arrangement},
      {"involutions", suite_involutions}, {"glue", suite_glue},       {"triangle", suite_triangle},
      {"fourier", suite_fourier},     {"equivariant", suite_equivariant}, {"quintics", suite_quintics},
  };
  return r;
}

}  // namespace

void SuiteOptions::validate() const {
  if (bound < 1 || bound > 3) throw std::invalid_argument("--bound must be in [1, 3]");
  if (max_g < 1 || max_g > 4) throw std::invalid_argument("--max-g must be in [1, 4]");
  if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("--tol must be positive");
  if (samples < 1) throw std::invalid_argument("--samples must be positive");
  if (jobs < 1) throw std::invalid_argument("--jobs must be positive");
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

bool SuiteReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  opt.validate();
  std::vector<std::pair<std::string, SuiteFn>> todo;
  for (const auto& entry : registry())
    if (name == "all" || entry.first == name) todo.push_back(entry);
  if (todo.empty()) throw std::invalid_argument("unknown suite: " + name);

  SuiteReport report;
  report.suite = name;
  std::mutex mu;
  auto run_one = [&](std::size_t i) {
    Recorder rec(todo[i].first);
    const auto t0 = std::chrono::steady_clock::now();
    todo[i].second(rec, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto checks = rec.take();
    std::lock_guard<std::mutex> lock(mu);
    report.timings[todo[i].first] = secs;
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  };

  const int workers = std::min<int>(opt.jobs, static_cast<int>(todo.size()));
  if (workers <= 1) {
    set_thread_count(opt.jobs);
    for (std::size_t i = 0; i < todo.size(); ++i) run_one(i);
  } else {
    set_thread_count(1);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return report;
}

nlohmann::ordered_json to_json(const SuiteReport& r, const SuiteOptions& opt, bool with_timings) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["tool"] = "arithver";
  j["version"] = ARITHVER_VERSION;
  j["suite"] = r.suite;
  j["config"] = {{"bound", opt.bound}, {"max_g", opt.max_g},     {"tol", opt.tol},
                 {"samples", opt.samples}, {"seed", opt.seed}, {"jobs", opt.jobs}};
  std::size_t pass = 0, fail = 0, skip = 0;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    (c.status == CheckStatus::pass ? pass : c.status == CheckStatus::fail ? fail : skip)++;
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
  if (with_timings) {
    auto& t = j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.timings) t[k] = v;
  }
  return j;
}

}  // namespace arithver
