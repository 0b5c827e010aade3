#include "eqrr/equivariant.hpp"

#include <algorithm>
#include <string>

#include "eqrr/error.hpp"

namespace eqrr {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Number of k in [lo, hi] with k = residue (mod m).
std::int64_t count_congruent(std::int64_t lo, std::int64_t hi, std::int64_t residue, std::int64_t m) {
  if (hi < lo) return 0;
  return floor_div(hi - residue, m) - floor_div(lo - 1 - residue, m);
}

std::int64_t integral(const Rational& q, const std::string& what) {
  const auto n = to_int64(q);
  if (!n) throw ConsistencyError(what + " = " + to_string(q) + " is not an integer (bad convention or table?)");
  return *n;
}

std::string vname(std::size_t v) { return "V_" + std::to_string(v); }

}  // namespace

std::string label(MultiplicityKind kind) {
  switch (kind) {
    case MultiplicityKind::a:
      return "a";
    case MultiplicityKind::a_dual:
      return "a*";
    case MultiplicityKind::r:
      return "r";
    case MultiplicityKind::d:
      return "d";
    case MultiplicityKind::m:
      return "m";
    case MultiplicityKind::gamma_tilde:
      return "gamma_tilde";
  }
  return "?";
}

bool AnalyticIdentityReport::holds() const {
  return std::all_of(class_agrees.begin(), class_agrees.end(), [](bool b) { return b; });
}

EquivariantAnalysis::EquivariantAnalysis(GroupAction action) : action_(std::move(action)) {
  const CharacterTable& tab = action_.table();
  const std::size_t k = tab.size();

  for (std::size_t j = 0; j < action_.branch_count(); ++j) {
    stabilizers_.push_back(stabilizer_info(action_, j));
    std::vector<std::vector<std::int64_t>> per_v;
    per_v.reserve(k);
    for (std::size_t v = 0; v < k; ++v) per_v.push_back(eigenvalue_multiplicities(tab, v, stabilizers_[j].subgroup));
    branch_n_.push_back(std::move(per_v));
  }
  for (std::size_t v = 0; v < k; ++v) free_n_.push_back({tab.degree(v)});

  dual_.assign(k, k);
  for (std::size_t v = 0; v < k; ++v) {
    ClassFunction conj;
    for (const auto& x : tab.irreducible(v)) conj.push_back(x.conjugate());
    for (std::size_t w = 0; w < k; ++w) {
      if (tab.irreducible(w) == conj) {
        dual_[v] = w;
        break;
      }
    }
    if (dual_[v] == k) throw ConsistencyError("table is not closed under complex conjugation at " + vname(v));
  }

  // Chevalley-Weil, with <-k/m> = (m - k)/m for 1 <= k <= m - 1.
  const int gamma = action_.gamma();
  a_.assign(k, 0);
  a_[0] = gamma;
  for (std::size_t v = 1; v < k; ++v) {
    Rational sum(tab.degree(v) * (gamma - 1));
    for (std::size_t j = 0; j < branch_n_.size(); ++j) {
      const auto& n = branch_n_[j][v];
      const auto m = static_cast<long>(n.size());
      for (long kk = 1; kk < m; ++kk) {
        if (n[kk] == 0) continue;
        Rational term(n[kk] * (m - kk), m);
        term.canonicalize();
        sum += term;
      }
    }
    a_[v] = integral(sum, "a(" + vname(v) + ")");
    if (a_[v] < 0) throw ConsistencyError("a(" + vname(v) + ") is negative");
  }
}

const std::vector<std::int64_t>& EquivariantAnalysis::branch_multiplicities(std::size_t j, std::size_t v) const {
  if (j >= branch_n_.size()) throw ValidationError("branch index " + std::to_string(j) + " out of range");
  return branch_n_[j].at(v);
}

const std::vector<std::vector<std::int64_t>>& EquivariantAnalysis::site_multiplicities(const OrbitTerm& term) const {
  if (term.site.kind == Site::Kind::free) return free_n_;
  const std::size_t j = term.site.index;
  if (j >= branch_n_.size()) throw ValidationError("unknown divisor site " + to_string(term.site));
  if (term.stabilizer_order != stabilizers_[j].order ||
      term.stabilizer_generator != stabilizers_[j].distinguished) {
    throw ValidationError("divisor site " + to_string(term.site) + " was built for a different action or convention");
  }
  return branch_n_[j];
}

MultiplicityVector EquivariantAnalysis::analytic_dual() const {
  MultiplicityVector out{MultiplicityKind::a_dual, std::vector<std::int64_t>(a_.size())};
  for (std::size_t v = 0; v < a_.size(); ++v) out.values[v] = a_[dual_[v]];
  return out;
}

MultiplicityVector EquivariantAnalysis::broughton() const {
  const CharacterTable& tab = table();
  const std::int64_t gamma = action_.gamma();
  MultiplicityVector out{MultiplicityKind::r, std::vector<std::int64_t>(tab.size())};
  out.values[0] = 2 * gamma;
  for (std::size_t v = 1; v < tab.size(); ++v) {
    const std::int64_t dim = tab.degree(v);
    std::int64_t r = 2 * (gamma - 1) * dim;
    for (const auto& per_v : branch_n_) r += dim - per_v[v][0];
    out.values[v] = r;
  }
  return out;
}

std::optional<std::int64_t> EquivariantAnalysis::absolutely_irreducible_check(std::size_t v) const {
  if (v == 0 || v >= table().size() || !is_absolutely_irreducible(table(), v)) return std::nullopt;
  const std::int64_t dim = table().degree(v);
  std::int64_t moved = 0;
  for (const auto& per_v : branch_n_) moved += dim - per_v[v][0];
  if (moved % 2 != 0) {
    throw ConsistencyError("absolutely irreducible " + vname(v) + " gives a half-integer multiplicity");
  }
  const std::int64_t value = (action_.gamma() - 1) * dim + moved / 2;
  if (value != a_[v] || value != a_[dual_[v]]) {
    throw ConsistencyError("absolutely irreducible " + vname(v) + ": closed form " + std::to_string(value) +
                           " disagrees with a = " + std::to_string(a_[v]) + ", a* = " + std::to_string(a_[dual_[v]]));
  }
  return value;
}

RamificationModule EquivariantAnalysis::ramification_module() const {
  const CharacterTable& tab = table();
  const auto order = static_cast<std::int64_t>(action_.group().order());
  RamificationModule out;
  out.raw = VirtualCharacter(tab.size());
  for (std::size_t j = 0; j < branch_n_.size(); ++j) {
    const int m = stabilizers_[j].order;
    std::vector<std::int64_t> theta(m);
    for (int alpha = 0; alpha < m; ++alpha) theta[alpha] = alpha;
    // The branch point Q_j has |G|/m_j preimages, each inducing the same character.
    out.raw += (order / m) * induce_from_multiplicities(branch_n_[j], theta);
  }
  out.reduced = {MultiplicityKind::gamma_tilde, std::vector<std::int64_t>(tab.size())};
  for (std::size_t v = 0; v < tab.size(); ++v) {
    if (out.raw[v] % order != 0) {
      throw ConsistencyError("ramification module coefficient " + std::to_string(out.raw[v]) + " at " + vname(v) +
                             " is not divisible by |G| = " + std::to_string(order));
    }
    out.reduced.values[v] = out.raw[v] / order;
  }
  if (out.reduced.values[0] != 0) {
    throw ConsistencyError("reduced ramification module contains the trivial representation");
  }
  return out;
}

VirtualCharacter EquivariantAnalysis::equivariant_degree(const InvariantDivisor& divisor) const {
  VirtualCharacter out(table().size());
  for (const auto& term : divisor.terms()) {
    const auto& n = site_multiplicities(term);
    const std::int64_t m = term.stabilizer_order;
    const std::int64_t r = term.coefficient;
    if (r == 0) continue;
    std::vector<std::int64_t> theta(m, 0);
    if (r > 0) {
      // sum_{k=1}^{r} omega^-k: omega^alpha appears once per k = -alpha (mod m).
      for (std::int64_t alpha = 0; alpha < m; ++alpha) theta[alpha] = count_congruent(1, r, (m - alpha) % m, m);
      out += induce_from_multiplicities(n, theta);
    } else {
      // -sum_{k=0}^{-(r+1)} omega^k.
      for (std::int64_t alpha = 0; alpha < m; ++alpha) theta[alpha] = count_congruent(0, -(r + 1), alpha, m);
      out -= induce_from_multiplicities(n, theta);
    }
  }
  return out;
}

MultiplicityVector EquivariantAnalysis::degree_closed_form(const InvariantDivisor& divisor) const {
  const CharacterTable& tab = table();
  MultiplicityVector out{MultiplicityKind::d, std::vector<std::int64_t>(tab.size(), 0)};
  for (const auto& term : divisor.terms()) {
    if (term.coefficient < 0) {
      throw ValidationError("closed-form equivariant degree needs r_P >= 0 at " + to_string(term.site));
    }
    if (term.coefficient == 0) continue;
    const auto& n = site_multiplicities(term);
    const std::int64_t s = term.quotient();
    const std::int64_t l = term.residue();
    const std::int64_t m = term.stabilizer_order;
    for (std::size_t v = 0; v < tab.size(); ++v) {
      const std::int64_t dim = tab.degree(v);
      std::int64_t d = s * dim;
      if (l != 0) {
        std::int64_t partial = 0;
        for (std::int64_t k = 0; k <= m - (l + 1); ++k) partial += n[v][k];
        d += dim - partial;
      }
      out.values[v] += d;
    }
  }
  return out;
}

NonSpecialty EquivariantAnalysis::require_nonspecial(const InvariantDivisor& divisor, bool assert_nonspecial) const {
  if (!divisor.is_effective()) throw ValidationError("decomposition needs an effective divisor");
  if (check_nonspecial_degree(action_, divisor) == NonSpecialty::certified) return NonSpecialty::certified;
  if (assert_nonspecial) return NonSpecialty::asserted;
  throw ValidationError("deg D = " + std::to_string(divisor.degree()) + " <= 2g - 2 = " +
                        std::to_string(2 * (action_.genus() - 1)) +
                        ": non-specialty is not certified; assert it explicitly to proceed");
}

Decomposition EquivariantAnalysis::finish(const InvariantDivisor& divisor, MultiplicityVector m,
                                          NonSpecialty nonspecial) const {
  Decomposition out;
  out.nonspecial = nonspecial;
  out.expected_dimension = divisor.degree() - action_.genus() + 1;
  for (std::size_t v = 0; v < m.size(); ++v) {
    out.dimension_sum += m[v] * table().degree(v);
    if (m[v] < 0) out.negative.push_back(v);
  }
  out.multiplicities = std::move(m);
  return out;
}

Decomposition EquivariantAnalysis::decompose(const InvariantDivisor& divisor, bool assert_nonspecial) const {
  const NonSpecialty nonspecial = require_nonspecial(divisor, assert_nonspecial);
  const CharacterTable& tab = table();
  const MultiplicityVector dual = analytic_dual();

  std::int64_t s_total = 0;
  for (const auto& term : divisor.terms()) s_total += term.quotient();

  MultiplicityVector m{MultiplicityKind::m, std::vector<std::int64_t>(tab.size(), 0)};
  m.values[0] = 1 - action_.gamma() + s_total;
  for (std::size_t v = 1; v < tab.size(); ++v) {
    const std::int64_t dim = tab.degree(v);
    std::int64_t value = s_total * dim - dual[v];
    for (const auto& term : divisor.terms()) {
      if (term.partial() == 0) continue;
      const auto& n = site_multiplicities(term);
      const std::int64_t bound = term.stabilizer_order - (term.residue() + 1);
      std::int64_t partial = 0;
      for (std::int64_t k = 0; k <= bound; ++k) partial += n[v][k];
      value += dim - partial;
    }
    m.values[v] = value;
  }
  return finish(divisor, std::move(m), nonspecial);
}

Decomposition EquivariantAnalysis::decompose_pullback(const std::vector<TermInput>& base_terms,
                                                      bool assert_nonspecial) const {
  const InvariantDivisor divisor = pullback_divisor(action_, base_terms);
  const NonSpecialty nonspecial = require_nonspecial(divisor, assert_nonspecial);
  std::int64_t base_degree = 0;
  for (const auto& t : base_terms) base_degree += t.coefficient;
  const MultiplicityVector dual = analytic_dual();
  MultiplicityVector m{MultiplicityKind::m, std::vector<std::int64_t>(table().size(), 0)};
  m.values[0] = base_degree + 1 - action_.gamma();
  for (std::size_t v = 1; v < table().size(); ++v) m.values[v] = base_degree * table().degree(v) - dual[v];
  return finish(divisor, std::move(m), nonspecial);
}

MultiplicityVector EquivariantAnalysis::crosscheck_lemma(const InvariantDivisor& divisor) const {
  const CharacterTable& tab = table();
  ClassFunction chi = tab.regular();
  const Rational scale(1 - action_.gamma());
  for (auto& x : chi) x *= scale;
  const ClassFunction degree = tab.combine(equivariant_degree(divisor));
  const ClassFunction gamma_tilde = tab.combine(VirtualCharacter(ramification_module().reduced.values));
  for (std::size_t c = 0; c < chi.size(); ++c) chi[c] += degree[c] - gamma_tilde[c];
  return {MultiplicityKind::m, tab.decompose(chi).coeffs};
}

AnalyticIdentityReport EquivariantAnalysis::verify_analytic_identity() const {
  const CharacterTable& tab = table();
  AnalyticIdentityReport report;
  report.lhs = tab.combine(VirtualCharacter(a_));
  const ClassFunction gamma_tilde = tab.combine(VirtualCharacter(ramification_module().reduced.values));
  const ClassFunction regular = tab.regular();
  const Rational scale(action_.gamma() - 1);
  report.rhs.reserve(gamma_tilde.size());
  for (std::size_t c = 0; c < gamma_tilde.size(); ++c) {
    report.rhs.push_back(Cyclotomic(1) + regular[c] * scale + gamma_tilde[c].conjugate());
  }
  for (std::size_t c = 0; c < report.lhs.size(); ++c) report.class_agrees.push_back(report.lhs[c] == report.rhs[c]);
  return report;
}

}  // namespace eqrr
