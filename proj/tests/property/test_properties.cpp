// Randomized checks of algebraic invariants. Seeds are fixed so failures
// reproduce; each test reports the seed and case that broke.

#include <gtest/gtest.h>

#include <random>

#include "eqrr/equivariant.hpp"
#include "eqrr/families.hpp"
#include "oracles.hpp"

using eqrr::Cyclotomic;
using eqrr::Element;
using eqrr::Rational;
using eqrr::Site;

namespace {

constexpr std::uint64_t kSeed = 20240917;

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4), terms(0, 4), exp(0, n - 1);
  std::vector<std::pair<std::int64_t, Rational>> t;
  for (int i = terms(rng); i > 0; --i) {
    Rational q(coeff(rng), den(rng));
    q.canonicalize();
    t.emplace_back(exp(rng), q);
  }
  return Cyclotomic::from_terms(n, t);
}

int random_conductor(std::mt19937_64& rng) {
  static const int conductors[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 20, 21, 24, 30};
  return conductors[std::uniform_int_distribution<std::size_t>(0, std::size(conductors) - 1)(rng)];
}

std::vector<eqrr::GroupAction> builtin_actions() {
  return {eqrr::family_klein(), eqrr::family_fermat(5), eqrr::family_fermat(7), eqrr::family_cyclic(12, {1, 4, 7})};
}

/// Random effective divisor with coefficients in [0, 3 m_P] over the branch
/// sites and up to two free orbits.
std::vector<eqrr::TermInput> random_terms(std::mt19937_64& rng, const eqrr::GroupAction& action) {
  std::vector<eqrr::TermInput> terms;
  for (std::size_t j = 0; j < action.branch_count(); ++j) {
    const int m = action.branch_points()[j].order;
    const auto r = std::uniform_int_distribution<std::int64_t>(0, 3 * m)(rng);
    if (r > 0) terms.push_back({Site::branch(j), r});
  }
  for (std::size_t f = 0, n = std::uniform_int_distribution<std::size_t>(0, 2)(rng); f < n; ++f) {
    terms.push_back({Site::free_orbit(f), std::uniform_int_distribution<std::int64_t>(0, 3)(rng)});
  }
  return terms;
}

}  // namespace

TEST(ExactProperties, FieldAxioms) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 300; ++i) {
    const Cyclotomic a = random_cyclotomic(rng, random_conductor(rng));
    const Cyclotomic b = random_cyclotomic(rng, random_conductor(rng));
    const Cyclotomic c = random_cyclotomic(rng, random_conductor(rng));
    ASSERT_EQ((a + b) + c, a + (b + c)) << "case " << i;
    ASSERT_EQ((a * b) * c, a * (b * c)) << "case " << i;
    ASSERT_EQ(a * (b + c), a * b + a * c) << "case " << i;
    ASSERT_EQ(a + b, b + a) << "case " << i;
    ASSERT_EQ(a * b, b * a) << "case " << i;
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_TRUE(oracle::numerically_equal(a * b, Cyclotomic::from_terms(1, {}) + a * b));
    const auto x = oracle::complex_value(a) * oracle::complex_value(b);
    ASSERT_LT(std::abs(oracle::complex_value(a * b) - x), 1e-9L) << "case " << i;
  }
}

TEST(ExactProperties, AbsoluteSquare) {
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < 200; ++i) {
    const Cyclotomic a = random_cyclotomic(rng, random_conductor(rng));
    // |a|^2 is always real; it is rational for scaled roots of unity.
    const Cyclotomic n = a * a.conjugate();
    ASSERT_EQ(n, n.conjugate()) << "case " << i;
    const auto q = Rational(std::uniform_int_distribution<int>(-9, 9)(rng));
    const Cyclotomic r = eqrr::root_of_unity(random_conductor(rng), std::uniform_int_distribution<int>(0, 40)(rng)) * q;
    ASSERT_EQ((r * r.conjugate()).to_rational(), q * q) << "case " << i;
  }
}

TEST(ExactProperties, ConjugationIsInvolutiveAndMultiplicative) {
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 300; ++i) {
    const Cyclotomic a = random_cyclotomic(rng, random_conductor(rng));
    const Cyclotomic b = random_cyclotomic(rng, random_conductor(rng));
    ASSERT_EQ(a.conjugate().conjugate(), a);
    ASSERT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    ASSERT_LT(std::abs(oracle::complex_value(a.conjugate()) - std::conj(oracle::complex_value(a))), 1e-9L);
  }
}

TEST(ExactProperties, CanonicalFormIsIdempotent) {
  std::mt19937_64 rng(kSeed + 3);
  for (int i = 0; i < 300; ++i) {
    const int n = random_conductor(rng);
    const Cyclotomic a = random_cyclotomic(rng, n);
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto& [e, q] : a.coefficient_map()) terms.emplace_back(e, q);
    const Cyclotomic again = Cyclotomic::from_terms(a.conductor(), terms);
    ASSERT_EQ(again.coefficients(), a.coefficients());
    ASSERT_EQ(again.conductor(), a.conductor());
    for (const auto& [e, q] : a.coefficient_map()) {
      ASSERT_LT(e, eqrr::totient(a.conductor()));
      ASSERT_NE(q, 0);
    }
  }
}

TEST(ExactProperties, EmbeddingCoherence) {
  std::mt19937_64 rng(kSeed + 4);
  for (int i = 0; i < 200; ++i) {
    const Cyclotomic a = random_cyclotomic(rng, random_conductor(rng));
    const Cyclotomic b = random_cyclotomic(rng, random_conductor(rng));
    const int l = std::lcm(a.conductor(), b.conductor());
    const int big = l * std::uniform_int_distribution<int>(1, 3)(rng);
    ASSERT_EQ(a + b, a.embed(big) + b.embed(big));
    ASSERT_EQ(a * b, a.embed(l) * b.embed(l));
    ASSERT_EQ((a.embed(big) + b.embed(big)).embed(2 * big), a + b);
  }
}

TEST(GroupProperties, InversesAndOrders) {
  for (const auto& p : oracle::supported_metacyclic()) {
    const auto g = eqrr::metacyclic_group(p.m, p.k, p.t);
    for (Element x = 0; x < g.order(); ++x) {
      ASSERT_EQ(g.mul(x, g.inverse(x)), 0u);
      ASSERT_EQ(g.mul(g.inverse(x), x), 0u);
      ASSERT_EQ(g.element_order(x), g.element_order(g.inverse(x)));
      ASSERT_EQ(g.order() % g.element_order(x), 0u);
    }
  }
}

TEST(GroupProperties, ClassesStableUnderConjugation) {
  for (const auto& p : oracle::supported_metacyclic()) {
    const auto g = eqrr::metacyclic_group(p.m, p.k, p.t);
    const auto part = eqrr::conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& c : part.classes) total += c.size();
    ASSERT_EQ(total, g.order());
    ASSERT_EQ(part.classes[0], std::vector<Element>{0});
    for (Element x = 0; x < g.order(); ++x)
      for (Element h = 0; h < g.order(); ++h) ASSERT_EQ(part.class_of[g.conjugate(x, h)], part.class_of[x]);
  }
}

TEST(GroupProperties, TransversalFactorization) {
  for (const auto& p : oracle::supported_metacyclic()) {
    const auto g = eqrr::metacyclic_group(p.m, p.k, p.t);
    for (Element c = 0; c < g.order(); ++c) {
      const auto h = eqrr::cyclic_subgroup(g, c);
      ASSERT_EQ(h.coset_representatives.size() * h.order, g.order());
      std::vector<int> hits(g.order(), 0);
      for (Element rep : h.coset_representatives)
        for (Element y : h.elements) ++hits[g.mul(rep, y)];
      for (int n : hits) ASSERT_EQ(n, 1) << "c = " << c;
    }
  }
}

TEST(CharacterProperties, OrthogonalityOnEveryConstructedTable) {
  for (const auto& p : oracle::supported_metacyclic()) {
    const auto t = eqrr::build_metacyclic_table(p.m, p.k, p.t);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        ASSERT_EQ(eqrr::inner_product(t, t.irreducible(i), t.irreducible(j)), Cyclotomic(i == j ? 1 : 0));
    // Columns: sum_v chi_v(x) conj(chi_v(y)) = |C_G(x)| delta.
    const auto& part = t.classes();
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = 0; b < part.size(); ++b) {
        Cyclotomic s;
        for (std::size_t v = 0; v < t.size(); ++v) s += t.irreducible(v)[a] * t.irreducible(v)[b].conjugate();
        const long centralizer = static_cast<long>(t.group().order() / part.class_size(a));
        ASSERT_EQ(s, Cyclotomic(a == b ? centralizer : 0));
      }
  }
}

TEST(CharacterProperties, FrobeniusReciprocity) {
  std::mt19937_64 rng(kSeed + 5);
  const auto& params = oracle::supported_metacyclic();
  for (int i = 0; i < 100; ++i) {
    const auto p = params[std::uniform_int_distribution<std::size_t>(0, params.size() - 1)(rng)];
    const auto t = eqrr::build_metacyclic_table(p.m, p.k, p.t);
    const auto c = std::uniform_int_distribution<Element>(0, static_cast<Element>(t.group().order() - 1))(rng);
    const auto h = eqrr::cyclic_subgroup(t.group(), c);
    std::vector<std::int64_t> theta(h.order);
    for (auto& x : theta) x = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
    ASSERT_EQ(eqrr::induce_from_cyclic(t, h, theta).coeffs, oracle::brute_induced_coefficients(t, c, theta))
        << "case " << i << " group " << p.m << "," << p.k << "," << p.t << " c=" << c;
  }
}

TEST(CharacterProperties, DftInversionAndRegularInduction) {
  for (const auto& p : oracle::supported_metacyclic()) {
    const auto t = eqrr::build_metacyclic_table(p.m, p.k, p.t);
    for (Element c = 0; c < t.group().order(); ++c) {
      const auto h = eqrr::cyclic_subgroup(t.group(), c);
      const int m = static_cast<int>(h.order);
      for (std::size_t v = 0; v < t.size(); ++v) {
        const auto n = eqrr::eigenvalue_multiplicities(t, v, h);
        std::int64_t total = 0;
        for (auto x : n) {
          ASSERT_GE(x, 0);
          total += x;
        }
        ASSERT_EQ(total, t.degree(v));
        for (int j = 0; j < m; ++j) {
          Cyclotomic s;
          for (int k = 0; k < m; ++k) s += eqrr::root_of_unity(m, k * j) * Rational(n[k]);
          ASSERT_EQ(s, t.value(v, h.elements[j]));
        }
      }
      ASSERT_EQ(eqrr::induce_from_cyclic(t, h, std::vector<std::int64_t>(m, 1)).coeffs, t.degrees());
    }
  }
}

TEST(CoverProperties, RiemannHurwitzOnRandomActions) {
  std::mt19937_64 rng(kSeed + 6);
  for (int i = 0; i < 40; ++i) {
    const auto a = oracle::random_metacyclic_action(rng);
    Rational rhs(2 * (a.gamma() - 1));
    for (const auto& bp : a.branch_points()) rhs += Rational(bp.order - 1, bp.order);
    rhs *= static_cast<long>(a.group().order());
    ASSERT_EQ(Rational(2 * (a.genus() - 1)), rhs);
    std::vector<Element> gens(a.a().begin(), a.a().end());
    gens.insert(gens.end(), a.b().begin(), a.b().end());
    for (const auto& bp : a.branch_points()) gens.push_back(bp.element);
    ASSERT_TRUE(eqrr::verify_generation(a.group(), gens));
  }
}

TEST(EquivariantProperties, MultiplicityIdentitiesOnRandomActions) {
  std::mt19937_64 rng(kSeed + 7);
  for (int i = 0; i < 40; ++i) {
    const auto conv = i % 2 ? eqrr::Convention::conjugate : eqrr::Convention::standard;
    const eqrr::EquivariantAnalysis an(oracle::random_metacyclic_action(rng, conv));
    const auto& t = an.table();
    const auto a = an.chevalley_weil(), d = an.analytic_dual(), r = an.broughton();
    std::int64_t sa = 0, sd = 0;
    for (std::size_t v = 0; v < t.size(); ++v) {
      ASSERT_GE(a[v], 0);
      ASSERT_EQ(a[v] + d[v], r[v]);
      sa += a[v] * t.degree(v);
      sd += d[v] * t.degree(v);
    }
    ASSERT_EQ(sa, an.action().genus());
    ASSERT_EQ(sd, an.action().genus());
    ASSERT_TRUE(an.verify_analytic_identity().holds()) << "case " << i;

    const auto mod = an.ramification_module();
    ASSERT_EQ(mod.reduced[0], 0);
    for (std::size_t v = 0; v < t.size(); ++v) {
      ASSERT_EQ(mod.raw[v] % static_cast<std::int64_t>(t.group().order()), 0);
      if (v) ASSERT_EQ(mod.reduced[v], d[v] + (1 - an.action().gamma()) * t.degree(v));
    }
    const auto other = an.action().with_convention(conv == eqrr::Convention::standard ? eqrr::Convention::conjugate
                                                                                   : eqrr::Convention::standard);
    ASSERT_EQ(eqrr::EquivariantAnalysis(other).chevalley_weil().values, d.values) << "case " << i;
  }
}

TEST(EquivariantProperties, TwoPathsAndDimensionOnRandomDivisors) {
  std::mt19937_64 rng(kSeed + 8);
  std::vector<eqrr::GroupAction> actions = builtin_actions();
  for (int i = 0; i < 10; ++i) actions.push_back(oracle::random_metacyclic_action(rng));
  int checked = 0;
  for (const auto& action : actions) {
    const eqrr::EquivariantAnalysis an(action);
    for (int i = 0; i < 40; ++i) {
      const auto d = eqrr::build_divisor(action, random_terms(rng, action));
      const auto closed = an.degree_closed_form(d);
      ASSERT_EQ(closed.values, an.equivariant_degree(d).coeffs);
      if (eqrr::check_nonspecial_degree(action, d) != eqrr::NonSpecialty::certified) continue;
      const auto m = an.decompose(d);
      ASSERT_EQ(m.multiplicities, an.crosscheck_lemma(d));
      ASSERT_EQ(m.dimension_sum, d.degree() - action.genus() + 1);
      ASSERT_FALSE(m.hypothesis_violated());
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(EquivariantProperties, DegreeSignCoherence) {
  for (const auto& action : builtin_actions()) {
    const eqrr::EquivariantAnalysis an(action);
    for (std::size_t j = 0; j < action.branch_count(); ++j) {
      const int m = action.branch_points()[j].order;
      for (int r = 1; r <= 3 * m; ++r) {
        const auto pos = an.equivariant_degree(eqrr::build_divisor(action, {{Site::branch(j), r}}));
        const auto neg = an.equivariant_degree(eqrr::build_divisor(action, {{Site::branch(j), -r}}));
        const auto sum = pos + neg;
        if (r % m == 0) {
          // both sides are (r/m) chi_reg, so they cancel
          for (std::size_t v = 0; v < sum.size(); ++v) ASSERT_EQ(sum[v], 0) << "branch " << j << " r " << r;
          continue;
        }
        // Direct induction of sum_{k=1}^r omega^-k minus sum_{k=0}^{r-1} omega^k.
        const auto s = eqrr::stabilizer_info(action, j);
        std::vector<std::int64_t> neg_theta(m, 0);
        for (int k = 0; k < r; ++k) neg_theta[k % m] += 1;
        const auto ip = oracle::brute_induced_coefficients(an.table(), s.distinguished, oracle::negative_power_sum(m, r));
        const auto im = oracle::brute_induced_coefficients(an.table(), s.distinguished, neg_theta);
        std::vector<std::int64_t> expected(sum.size());
        for (std::size_t v = 0; v < expected.size(); ++v) expected[v] = ip[v] - im[v];
        ASSERT_EQ(sum.coeffs, expected) << "branch " << j << " r " << r;
      }
    }
  }
}

TEST(DivisorProperties, DerivedQuantities) {
  std::mt19937_64 rng(kSeed + 9);
  for (const auto& action : builtin_actions()) {
    for (int i = 0; i < 50; ++i) {
      const auto terms = random_terms(rng, action);
      const auto d = eqrr::build_divisor(action, terms);
      std::int64_t degree = 0;
      for (const auto& t : d.terms()) {
        ASSERT_EQ(t.coefficient, t.residue() + t.quotient() * t.stabilizer_order);
        ASSERT_GE(t.residue(), 0);
        ASSERT_LT(t.residue(), t.stabilizer_order);
        ASSERT_EQ(t.partial() == 0, t.coefficient % t.stabilizer_order == 0);
        degree += t.coefficient * static_cast<std::int64_t>(action.group().order()) / t.stabilizer_order;
      }
      ASSERT_EQ(d.degree(), degree);

      std::vector<eqrr::TermInput> base;
      std::int64_t base_degree = 0;
      for (const auto& t : terms) {
        base.push_back({t.site, t.coefficient % 3});
        base_degree += t.coefficient % 3;
      }
      ASSERT_EQ(eqrr::pullback_divisor(action, base).degree(),
                base_degree * static_cast<std::int64_t>(action.group().order()));
    }
  }
}
