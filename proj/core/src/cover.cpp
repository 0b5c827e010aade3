#include "eqrr/cover.hpp"

#include <string>

#include "eqrr/error.hpp"
#include "eqrr/exact.hpp"

namespace eqrr {

std::int64_t genus_from_rh(std::size_t group_order, int gamma, std::span<const int> orders) {
  if (gamma < 0) throw ValidationError("quotient genus must be non-negative");
  const Rational n(static_cast<long>(group_order));
  Rational branch_sum = 0;
  for (int m : orders) {
    if (m < 1) throw ValidationError("branch order must be positive");
    branch_sum += Rational(1) - Rational(1, static_cast<unsigned long>(m));
  }
  const Rational g = Rational(1) + n * (gamma - 1) + n * branch_sum / 2;
  const auto value = to_int64(g);
  if (!value || *value < 0) {
    throw ValidationError("Riemann-Hurwitz gives genus " + to_string(g) + ", not a non-negative integer");
  }
  return *value;
}

std::int64_t genus_from_rh(const GroupAction& action) {
  std::vector<int> orders;
  for (const auto& bp : action.branch_points()) orders.push_back(bp.order);
  return genus_from_rh(action.group().order(), action.gamma(), orders);
}

GroupAction validate_action(ActionDescription description) {
  if (!description.group) throw ValidationError("action has no group");
  const FiniteGroup& group = *description.group;
  if (description.gamma < 0) throw ValidationError("quotient genus must be non-negative");
  const auto gamma = static_cast<std::size_t>(description.gamma);
  if (description.a.size() != gamma || description.b.size() != gamma) {
    throw ValidationError("expected " + std::to_string(gamma) + " hyperbolic pairs, got " +
                          std::to_string(description.a.size()) + " a's and " + std::to_string(description.b.size()) +
                          " b's");
  }
  auto check_element = [&group](Element e, const std::string& what) {
    if (e >= group.order()) throw ValidationError(what + " = " + std::to_string(e) + " is not a group element");
  };
  for (std::size_t i = 0; i < gamma; ++i) {
    check_element(description.a[i], "a_" + std::to_string(i));
    check_element(description.b[i], "b_" + std::to_string(i));
  }
  for (std::size_t j = 0; j < description.c.size(); ++j) {
    const auto& c = description.c[j];
    check_element(c.element, "c_" + std::to_string(j));
    if (c.order <= 1) {
      throw ValidationError("branch " + std::to_string(j) + " has order " + std::to_string(c.order) +
                            "; branch orders must exceed 1");
    }
    if (group.element_order(c.element) != static_cast<std::size_t>(c.order)) {
      throw ValidationError("order mismatch at branch " + std::to_string(j) + ": element " +
                            std::to_string(c.element) + " has order " +
                            std::to_string(group.element_order(c.element)) + ", declared " +
                            std::to_string(c.order));
    }
  }

  Element product = FiniteGroup::identity();
  for (std::size_t i = 0; i < gamma; ++i) product = group.mul(product, group.commutator(description.a[i], description.b[i]));
  for (const auto& c : description.c) product = group.mul(product, c.element);
  if (product != FiniteGroup::identity()) {
    throw ValidationError("long relation fails: prod [a_i, b_i] prod c_j = element " + std::to_string(product) +
                          ", not the identity");
  }

  std::vector<Element> all;
  all.insert(all.end(), description.a.begin(), description.a.end());
  all.insert(all.end(), description.b.begin(), description.b.end());
  for (const auto& c : description.c) all.push_back(c.element);
  if (!verify_generation(group, all)) throw ValidationError("generating vector does not generate the group");

  std::vector<int> orders;
  for (const auto& c : description.c) orders.push_back(c.order);
  const std::int64_t genus = genus_from_rh(group.order(), description.gamma, orders);

  GroupAction action;
  if (description.table) {
    if (description.table->group_ptr() != description.group) {
      throw ValidationError("character table belongs to a different group");
    }
    action.table_ = std::make_shared<const CharacterTable>(std::move(*description.table));
  } else if (group.is_abelian()) {
    action.table_ = std::make_shared<const CharacterTable>(build_abelian_table(description.group));
  } else {
    throw ValidationError("non-abelian group needs an explicit character table");
  }
  action.gamma_ = description.gamma;
  action.a_ = std::move(description.a);
  action.b_ = std::move(description.b);
  for (std::size_t j = 0; j < description.c.size(); ++j) {
    action.branches_.push_back(BranchPoint{j, description.c[j].order, description.c[j].element});
  }
  action.genus_ = genus;
  action.convention_ = description.convention;
  return action;
}

GroupAction GroupAction::with_convention(Convention convention) const {
  GroupAction out = *this;
  out.convention_ = convention;
  return out;
}

StabilizerInfo stabilizer_info(const GroupAction& action, std::size_t j) {
  if (j >= action.branch_count()) {
    throw ValidationError("branch index " + std::to_string(j) + " out of range (action has " +
                          std::to_string(action.branch_count()) + " branch points)");
  }
  const BranchPoint& bp = action.branch_points()[j];
  StabilizerInfo info;
  info.order = bp.order;
  info.distinguished =
      action.convention() == Convention::standard ? bp.element : action.group().inverse(bp.element);
  info.subgroup = cyclic_subgroup(action.group(), info.distinguished);
  return info;
}

}  // namespace eqrr
