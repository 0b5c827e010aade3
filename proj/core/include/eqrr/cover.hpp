#pragma once

// Combinatorial model of a G-action on a compact Riemann surface: genus of
// the quotient, hyperbolic generators, and branch points with their
// distinguished stabilizer generators.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "eqrr/chartab.hpp"
#include "eqrr/group.hpp"

namespace eqrr {

/// How the supplied c_j relates to the rotation on the cotangent line at
/// the fixed point P_j.
///  * standard: c_j acts by zeta_{m_j}, so omega_j(c_j) = zeta_{m_j};
///  * conjugate: c_j acts by zeta_{m_j}^-1, so the distinguished generator
///    is c_j^-1. This swaps the analytic representation with its conjugate.
enum class Convention { standard, conjugate };

struct BranchInput {
  Element element = 0;
  int order = 0;
};

struct ActionDescription {
  std::shared_ptr<const FiniteGroup> group;
  std::optional<CharacterTable> table;  // built automatically for abelian groups
  int gamma = 0;
  std::vector<Element> a;
  std::vector<Element> b;
  std::vector<BranchInput> c;
  Convention convention = Convention::standard;
};

struct BranchPoint {
  std::size_t index = 0;
  int order = 0;      // m_j
  Element element = 0;  // c_j as supplied
};

class GroupAction {
 public:
  const FiniteGroup& group() const { return table_->group(); }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return table_->group_ptr(); }
  const CharacterTable& table() const { return *table_; }
  int gamma() const { return gamma_; }
  std::span<const Element> a() const { return a_; }
  std::span<const Element> b() const { return b_; }
  const std::vector<BranchPoint>& branch_points() const { return branches_; }
  std::size_t branch_count() const { return branches_.size(); }
  std::int64_t genus() const { return genus_; }
  Convention convention() const { return convention_; }

  /// The same action with the other orientation convention.
  GroupAction with_convention(Convention convention) const;

 private:
  friend GroupAction validate_action(ActionDescription description);
  GroupAction() = default;

  std::shared_ptr<const CharacterTable> table_;
  int gamma_ = 0;
  std::vector<Element> a_;
  std::vector<Element> b_;
  std::vector<BranchPoint> branches_;
  std::int64_t genus_ = 0;
  Convention convention_ = Convention::standard;
};

/// Checks the long relation prod [a_i, b_i] prod c_j = 1, the branch orders,
/// generation, and integrality of the genus. Failures throw ValidationError;
/// nothing is reordered or repaired.
GroupAction validate_action(ActionDescription description);

/// Riemann-Hurwitz: 2(g-1)/|G| = 2(gamma-1) + sum (1 - 1/m_j).
/// Throws ValidationError if g is not a non-negative integer.
std::int64_t genus_from_rh(std::size_t group_order, int gamma, std::span<const int> orders);
std::int64_t genus_from_rh(const GroupAction& action);

struct StabilizerInfo {
  CyclicSubgroup subgroup;  // generated by the distinguished generator
  int order = 1;            // m_j
  Element distinguished = 0;  // omega_j(distinguished) = zeta_{m_j}
};

StabilizerInfo stabilizer_info(const GroupAction& action, std::size_t j);

}  // namespace eqrr
