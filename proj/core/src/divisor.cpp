#include "eqrr/divisor.hpp"

#include <algorithm>
#include <set>

#include "eqrr/error.hpp"

namespace eqrr {

std::string to_string(const Site& site) {
  return (site.kind == Site::Kind::branch ? "branch:" : "free:") + std::to_string(site.index);
}

std::string to_string(NonSpecialty n) {
  switch (n) {
    case NonSpecialty::certified:
      return "certified";
    case NonSpecialty::asserted:
      return "asserted";
    case NonSpecialty::unknown:
      return "unknown";
  }
  return "unknown";
}

std::int64_t OrbitTerm::residue() const {
  const std::int64_t m = stabilizer_order;
  const std::int64_t r = coefficient % m;
  return r < 0 ? r + m : r;
}

std::int64_t OrbitTerm::quotient() const { return (coefficient - residue()) / stabilizer_order; }

bool InvariantDivisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const OrbitTerm& t) { return t.coefficient >= 0; });
}

InvariantDivisor build_divisor(const GroupAction& action, const std::vector<TermInput>& terms) {
  InvariantDivisor divisor;
  std::set<Site> seen;
  const auto order = static_cast<std::int64_t>(action.group().order());
  for (const auto& input : terms) {
    if (!seen.insert(input.site).second) throw ValidationError("duplicate divisor site " + to_string(input.site));
    OrbitTerm term;
    term.site = input.site;
    term.coefficient = input.coefficient;
    if (input.site.kind == Site::Kind::branch) {
      if (input.site.index >= action.branch_count()) {
        throw ValidationError("unknown branch index in divisor site " + to_string(input.site));
      }
      const StabilizerInfo info = stabilizer_info(action, input.site.index);
      term.stabilizer_order = info.order;
      term.stabilizer_generator = info.distinguished;
    } else {
      term.stabilizer_order = 1;
      term.stabilizer_generator = FiniteGroup::identity();
    }
    std::int64_t orbit_degree = 0;
    std::int64_t sum = 0;
    if (__builtin_mul_overflow(input.coefficient, order / term.stabilizer_order, &orbit_degree) ||
        __builtin_add_overflow(divisor.degree_, orbit_degree, &sum)) {
      throw ValidationError("divisor degree overflows");
    }
    divisor.degree_ = sum;
    divisor.terms_.push_back(term);
  }
  return divisor;
}

InvariantDivisor pullback_divisor(const GroupAction& action, const std::vector<TermInput>& base_terms) {
  std::vector<TermInput> lifted;
  lifted.reserve(base_terms.size());
  for (const auto& base : base_terms) {
    if (base.coefficient < 0) {
      throw ValidationError("pullback needs an effective base divisor; site " + to_string(base.site) + " has " +
                            std::to_string(base.coefficient));
    }
    std::int64_t m = 1;
    if (base.site.kind == Site::Kind::branch) {
      if (base.site.index >= action.branch_count()) {
        throw ValidationError("unknown branch index in divisor site " + to_string(base.site));
      }
      m = action.branch_points()[base.site.index].order;
    }
    lifted.push_back(TermInput{base.site, base.coefficient * m});
  }
  return build_divisor(action, lifted);
}

NonSpecialty check_nonspecial_degree(const GroupAction& action, const InvariantDivisor& divisor) {
  return divisor.degree() > 2 * (action.genus() - 1) ? NonSpecialty::certified : NonSpecialty::unknown;
}

}  // namespace eqrr
