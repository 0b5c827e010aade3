#pragma once

// Exact arithmetic: GMP rationals and elements of cyclotomic fields Q(zeta_n).
//
// A Cyclotomic is stored in the power basis 1, x, ..., x^(phi(n)-1) of
// Q[x]/Phi_n(x), always fully reduced. The stored conductor n is the field
// the element was computed in, not necessarily the smallest one; equality
// compares after embedding both sides into Q(zeta_lcm).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqrr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Integer value of q, or nullopt if q is not an integer or exceeds int64.
std::optional<std::int64_t> to_int64(const Rational& q);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// Euler's totient, i.e. deg Phi_n.
int totient(int n);

class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(Rational value);

  /// zeta_n^k, with k taken mod n. Throws ValidationError for n < 1.
  static Cyclotomic root_of_unity(int n, std::int64_t k);

  /// Sum of q * zeta_n^e over the given terms; exponents may be any integer.
  static Cyclotomic from_terms(int n, const std::vector<std::pair<std::int64_t, Rational>>& terms);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Nonzero power-basis coefficients keyed by exponent.
  std::map<int, Rational> coefficient_map() const;

  bool is_zero() const;
  std::optional<Rational> to_rational() const;
  bool is_rational() const { return to_rational().has_value(); }

  /// Image under zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;

  /// Image under the Galois automorphism zeta_n -> zeta_n^u, gcd(u, n) = 1.
  Cyclotomic galois(std::int64_t u) const;

  /// Same value re-expressed at conductor n, which must be a multiple of
  /// conductor().
  Cyclotomic embed(int n) const;

  /// True iff the value lies in Q(zeta_d).
  bool lies_in(int d) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form, e.g. "z7^1 + z7^2 + z7^4" or "-3/2".
  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  // Reduces a length-n vector indexed by exponent mod n into the power basis.
  static Cyclotomic reduce(int n, const std::vector<Rational>& by_exponent);
  void shrink_if_rational();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic root_of_unity(int n, std::int64_t k) {
  return Cyclotomic::root_of_unity(n, k);
}

}  // namespace eqrr
