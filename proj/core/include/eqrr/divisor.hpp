#pragma once

// G-invariant divisors, keyed by orbit. A divisor is a finite sum
// r_P * D_b(P) of basic divisors, one term per orbit ("site"). Sites are
// either the orbit over branch point j or a free orbit (trivial stabilizer).

#include <cstdint>
#include <string>
#include <vector>

#include "eqrr/cover.hpp"

namespace eqrr {

struct Site {
  enum class Kind { branch, free };
  Kind kind = Kind::free;
  std::size_t index = 0;  // branch index j, or an identifier for free orbits

  static Site branch(std::size_t j) { return {Kind::branch, j}; }
  static Site free_orbit(std::size_t id) { return {Kind::free, id}; }

  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

/// "branch:2" or "free:0".
std::string to_string(const Site& site);

struct TermInput {
  Site site;
  std::int64_t coefficient = 0;
};

struct OrbitTerm {
  Site site;
  int stabilizer_order = 1;       // m_P
  Element stabilizer_generator = 0;  // distinguished c_P; identity on free orbits
  std::int64_t coefficient = 0;   // r_P

  /// l_P = r_P mod m_P, in [0, m_P).
  std::int64_t residue() const;
  /// s_P = (r_P - l_P) / m_P.
  std::int64_t quotient() const;
  /// epsilon_P: 0 if l_P = 0, else 1.
  int partial() const { return residue() == 0 ? 0 : 1; }
};

class InvariantDivisor {
 public:
  const std::vector<OrbitTerm>& terms() const { return terms_; }
  std::int64_t degree() const { return degree_; }
  bool is_effective() const;

 private:
  friend InvariantDivisor build_divisor(const GroupAction&, const std::vector<TermInput>&);
  std::vector<OrbitTerm> terms_;
  std::int64_t degree_ = 0;
};

/// deg(r_P D_b(P)) = r_P |G| / m_P. Throws ValidationError on duplicate
/// sites or unknown branch indices. Negative coefficients are stored.
InvariantDivisor build_divisor(const GroupAction& action, const std::vector<TermInput>& terms);

/// Pullback of sum alpha_Q Q from the quotient: r_P = alpha_Q m_P.
InvariantDivisor pullback_divisor(const GroupAction& action, const std::vector<TermInput>& base_terms);

enum class NonSpecialty { certified, asserted, unknown };

std::string to_string(NonSpecialty n);

/// certified iff deg D > 2(g - 1); unknown otherwise.
NonSpecialty check_nonspecial_degree(const GroupAction& action, const InvariantDivisor& divisor);

}  // namespace eqrr
