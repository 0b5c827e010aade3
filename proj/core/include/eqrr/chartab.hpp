#pragma once

// Character tables as validated data, plus the character arithmetic the
// multiplicity formulas consume.
//
// Conventions used throughout the library:
//  * irreducible 0 is the trivial character;
//  * characters are stored per conjugacy class, in ConjugacyPartition order;
//  * for a cyclic subgroup H = <c> of order m, the character omega of H is
//    fixed by omega(c) = zeta_m, and a character theta of H is an integer
//    vector theta[alpha] over the basis omega^0, ..., omega^(m-1).

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "eqrr/exact.hpp"
#include "eqrr/group.hpp"

namespace eqrr {

using ClassFunction = std::vector<Cyclotomic>;

/// Integer combination of irreducibles (an element of the representation ring).
struct VirtualCharacter {
  std::vector<std::int64_t> coeffs;

  VirtualCharacter() = default;
  explicit VirtualCharacter(std::size_t n) : coeffs(n, 0) {}
  explicit VirtualCharacter(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}

  std::size_t size() const { return coeffs.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs[i]; }

  VirtualCharacter& operator+=(const VirtualCharacter& other);
  VirtualCharacter& operator-=(const VirtualCharacter& other);
  VirtualCharacter& operator*=(std::int64_t k);
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(std::int64_t k, VirtualCharacter a) { return a *= k; }
  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;
};

class CharacterTable {
 public:
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  const ConjugacyPartition& classes() const { return partition_; }

  std::size_t size() const { return irreducibles_.size(); }
  const ClassFunction& irreducible(std::size_t v) const { return irreducibles_[v]; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  std::int64_t degree(std::size_t v) const { return degrees_[v]; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  /// chi_v(g), looked up through the class of g.
  const Cyclotomic& value(std::size_t v, Element g) const {
    return irreducibles_[v][partition_.class_of[g]];
  }

  ClassFunction trivial() const;
  ClassFunction regular() const;
  ClassFunction zero() const;

  /// Sum of coeffs[v] * chi_v.
  ClassFunction combine(const VirtualCharacter& character) const;

  /// Inner products against every irreducible. Throws ConsistencyError if a
  /// coefficient is not a rational integer.
  VirtualCharacter decompose(const ClassFunction& f) const;

 private:
  friend CharacterTable validate_table(std::shared_ptr<const FiniteGroup>, ConjugacyPartition,
                                       std::vector<ClassFunction>);
  CharacterTable() = default;

  std::shared_ptr<const FiniteGroup> group_;
  ConjugacyPartition partition_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::int64_t> degrees_;
};

/// Checks a raw table: square shape, trivial row first, positive integer
/// degrees, sum of squared degrees, exact row and column orthogonality, and
/// that the values at g lie in Q(zeta_order(g)). Throws ValidationError
/// naming the first failure.
CharacterTable validate_table(std::shared_ptr<const FiniteGroup> group, ConjugacyPartition partition,
                              std::vector<ClassFunction> rows);

/// All linear characters of an abelian group. For a cyclic group the order
/// is chi_i(sigma) = zeta_n^i, sigma the least-index generator.
CharacterTable build_abelian_table(std::shared_ptr<const FiniteGroup> group);

/// Group Z_m x|_t Z_k with element tau^i sigma^j at index i + m*j and
/// sigma tau sigma^-1 = tau^t.
FiniteGroup metacyclic_group(int m, int k, int t);

/// Character table of Z_m x|_t Z_k when Z_k acts freely on the non-trivial
/// characters of Z_m: k lifted linear characters, then one induced
/// character of degree k per orbit, orbits ordered by least member.
/// Throws ValidationError for unsupported parameters.
CharacterTable build_metacyclic_table(int m, int k, int t);

/// (1/|G|) sum_g phi(g) conj(psi(g)).
Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& phi, const ClassFunction& psi);

/// N[k] = multiplicity of zeta_m^k as an eigenvalue of V(c).
std::vector<std::int64_t> eigenvalue_multiplicities(const CharacterTable& table, std::size_t v,
                                                    const CyclicSubgroup& h);

std::int64_t fixed_subspace_dim(const CharacterTable& table, std::size_t v, const CyclicSubgroup& h);

/// Ind_H^G(theta) over the irreducibles, by Frobenius reciprocity.
VirtualCharacter induce_from_cyclic(const CharacterTable& table, const CyclicSubgroup& h,
                                    std::span<const std::int64_t> theta);

/// Same, reusing eigenvalue multiplicities already computed for H
/// (multiplicities[v] as returned by eigenvalue_multiplicities).
VirtualCharacter induce_from_multiplicities(const std::vector<std::vector<std::int64_t>>& multiplicities,
                                            std::span<const std::int64_t> theta);

/// (1/|G|) sum_g chi_v(g^2).
Rational frobenius_schur_indicator(const CharacterTable& table, std::size_t v);

/// Rational-valued with Frobenius-Schur indicator 1. This does not exclude
/// Schur index > 1 in general; callers use it only as a cross-check.
bool is_absolutely_irreducible(const CharacterTable& table, std::size_t v);

}  // namespace eqrr
