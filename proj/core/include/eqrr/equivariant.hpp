#pragma once

// Multiplicity formulas for a G-action on a compact Riemann surface:
// Chevalley-Weil (holomorphic differentials), its conjugate, Broughton
// (first homology), the ramification module, the equivariant degree of an
// invariant divisor, and the decomposition of the Riemann-Roch space L(D)
// of an effective non-special invariant divisor.
//
// decompose() uses the closed form in terms of l_P, s_P, epsilon_P,
// eigenvalue counts and a*(V). crosscheck_lemma() reaches the same numbers
// through characters: (1 - gamma) chi_reg + Deg_Eq(D) - chi_{reduced Gamma}.
//
// All multiplicities of a non-trivial V use the omega_j(c_j) = zeta_{m_j}
// identification fixed by the action's Convention.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqrr/chartab.hpp"
#include "eqrr/cover.hpp"
#include "eqrr/divisor.hpp"

namespace eqrr {

enum class MultiplicityKind { a, a_dual, r, d, m, gamma_tilde };

/// "a", "a*", "r", "d", "m", "gamma_tilde".
std::string label(MultiplicityKind kind);

struct MultiplicityVector {
  MultiplicityKind kind = MultiplicityKind::m;
  std::vector<std::int64_t> values;

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t v) const { return values[v]; }
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

struct RamificationModule {
  VirtualCharacter raw;        // Gamma_G, summed over every ramified point
  MultiplicityVector reduced;  // Gamma_G / |G|
};

struct Decomposition {
  MultiplicityVector multiplicities;
  NonSpecialty nonspecial = NonSpecialty::certified;
  std::int64_t dimension_sum = 0;       // sum_V m(V) dim V
  std::int64_t expected_dimension = 0;  // deg D - g + 1
  std::vector<std::size_t> negative;    // V with m(V) < 0

  /// A negative multiplicity means the divisor is special despite the
  /// caller's assertion (or the action data is wrong).
  bool hypothesis_violated() const { return !negative.empty(); }
};

struct AnalyticIdentityReport {
  ClassFunction lhs;  // sum_V a(V) chi_V
  ClassFunction rhs;  // chi_0 + (gamma - 1) chi_reg + conj(chi_{reduced Gamma})
  std::vector<bool> class_agrees;

  bool holds() const;
};

class EquivariantAnalysis {
 public:
  explicit EquivariantAnalysis(GroupAction action);

  const GroupAction& action() const { return action_; }
  const CharacterTable& table() const { return action_.table(); }

  /// N_{j,k}^V for k = 0..m_j-1.
  const std::vector<std::int64_t>& branch_multiplicities(std::size_t j, std::size_t v) const;
  /// Index of the irreducible with character conj(chi_v).
  std::size_t dual(std::size_t v) const { return dual_[v]; }

  MultiplicityVector chevalley_weil() const { return {MultiplicityKind::a, a_}; }
  MultiplicityVector analytic_dual() const;
  MultiplicityVector broughton() const;

  /// (gamma - 1) dim V + (1/2) sum_j (dim V - dim V^{G_j}) for a non-trivial
  /// absolutely irreducible V, after asserting it equals a(V) and a*(V).
  /// nullopt when V is trivial or not absolutely irreducible.
  std::optional<std::int64_t> absolutely_irreducible_check(std::size_t v) const;

  RamificationModule ramification_module() const;

  /// Deg_Eq(D), by inducing the root-of-unity sums from each stabilizer.
  VirtualCharacter equivariant_degree(const InvariantDivisor& divisor) const;

  /// Closed form d(V) = sum_P s_P dim V + epsilon_P (dim V - sum_{k=0}^{m_P-l_P-1} N_{P,k}^V)
  /// for divisors with non-negative coefficients.
  MultiplicityVector degree_closed_form(const InvariantDivisor& divisor) const;

  /// Multiplicities of L_G(D). Throws ValidationError for non-effective D,
  /// or when non-specialty is neither certified by degree nor asserted.
  Decomposition decompose(const InvariantDivisor& divisor, bool assert_nonspecial = false) const;

  /// Same for the pullback of sum alpha_Q Q, via m(V) = Deg(D_0) dim V - a*(V).
  Decomposition decompose_pullback(const std::vector<TermInput>& base_terms, bool assert_nonspecial = false) const;

  /// Multiplicities of (1 - gamma) chi_reg + Deg_Eq(D) - chi_{reduced Gamma}.
  MultiplicityVector crosscheck_lemma(const InvariantDivisor& divisor) const;

  AnalyticIdentityReport verify_analytic_identity() const;

 private:
  const std::vector<std::vector<std::int64_t>>& site_multiplicities(const OrbitTerm& term) const;
  Decomposition finish(const InvariantDivisor& divisor, MultiplicityVector m, NonSpecialty nonspecial) const;
  NonSpecialty require_nonspecial(const InvariantDivisor& divisor, bool assert_nonspecial) const;

  GroupAction action_;
  std::vector<StabilizerInfo> stabilizers_;
  std::vector<std::vector<std::vector<std::int64_t>>> branch_n_;  // [j][v][k]
  std::vector<std::vector<std::int64_t>> free_n_;                 // [v] = {dim V}
  std::vector<std::size_t> dual_;
  std::vector<std::int64_t> a_;
};

}  // namespace eqrr
