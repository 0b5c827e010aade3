#pragma once

// Built-in actions.
//
//  klein      Z_7 x| Z_3 (order 21) on the Klein quartic, branching (0; 3, 3, 7).
//  fermat:p   Z_p on the Fermat curve x^p + y^p + z^p = 0, branching
//             (0; p, ..., p) with every c_j = sigma; p prime, p >= 5.
//  cyclic:n:e1,...,er   Z_n with c_j = sigma^{e_j} and gamma = 0.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqrr/cover.hpp"

namespace eqrr {

struct FamilySpec {
  enum class Name { klein, fermat, cyclic_custom };
  Name name = Name::klein;
  int parameter = 0;               // p for fermat, n for cyclic
  std::vector<std::int64_t> exponents;  // cyclic only

  std::string to_string() const;
};

/// Parses "klein", "fermat:<p>" or "cyclic:<n>:<e1>,<e2>,...".
FamilySpec parse_family(std::string_view text);

GroupAction make_family(const FamilySpec& spec, Convention convention = Convention::standard);

GroupAction family_klein(Convention convention = Convention::standard);
GroupAction family_fermat(int p, Convention convention = Convention::standard);
GroupAction family_cyclic(int n, const std::vector<std::int64_t>& exponents,
                          Convention convention = Convention::standard);

/// First (c_0, c_1, c_2) of type (0; m_0, m_1, m_2) with c_0 c_1 c_2 = 1
/// generating the group, in colexicographic order: least c_2 first, then
/// least c_0; c_1 is forced by the relation.
std::optional<std::array<Element, 3>> first_generating_triple(const FiniteGroup& group,
                                                              const std::array<int, 3>& orders);

bool is_prime(std::int64_t n);

}  // namespace eqrr
