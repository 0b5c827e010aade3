#pragma once

// Finite groups on element indices 0..n-1, with 0 the identity.
//
// Groups come either from a full multiplication table or from permutation
// generators (closed by breadth-first search). Small groups always carry a
// materialized table; permutation groups above kTableLimit multiply by
// composing permutations and looking the result up in a hash index.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

namespace eqrr {

using Element = std::uint32_t;

/// Permutation of {0, ..., d-1} as an image list.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultClosureBound = 10'000;
inline constexpr std::size_t kTableLimit = 4096;
inline constexpr std::size_t kFullAssociativityLimit = 128;

struct TableDescription {
  std::vector<std::vector<Element>> table;
};

struct PermutationDescription {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::size_t closure_bound = kDefaultClosureBound;
};

using GroupDescription = std::variant<TableDescription, PermutationDescription>;

class FiniteGroup {
 public:
  /// Validates a Cayley table. Element 0 must be the identity; tables that
  /// put the identity elsewhere are rejected, not relabelled.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table);

  /// Enumerates the closure of the generators. Products compose left to
  /// right: (a*b)(x) = b(a(x)).
  static FiniteGroup from_permutations(std::size_t degree, std::vector<Permutation> generators,
                                       std::size_t closure_bound = kDefaultClosureBound);

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, std::int64_t k) const;
  Element conjugate(Element g, Element by) const;  // by * g * by^-1
  Element commutator(Element a, Element b) const;  // a b a^-1 b^-1
  std::size_t element_order(Element a) const { return element_order_[a]; }

  /// A small generating set, chosen greedily in index order.
  const std::vector<Element>& generators() const { return generators_; }

  bool is_abelian() const;
  std::size_t exponent() const;
  bool contains(std::int64_t index) const { return index >= 0 && static_cast<std::size_t>(index) < order_; }

  bool has_table() const { return !table_.empty(); }
  /// Row-major Cayley table; empty for large permutation groups.
  std::span<const Element> table() const { return table_; }
  /// Permutation images of each element, when built from permutations.
  const std::vector<Permutation>& permutations() const { return perms_; }

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::uint64_t, std::vector<Element>> perm_index_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<Element> generators_;

  Element lookup(const Permutation& p) const;
};

FiniteGroup build_group(const GroupDescription& description);

/// Cyclic group of order n with element k = sigma^k.
FiniteGroup cyclic_group(std::size_t n);

struct ConjugacyPartition {
  std::vector<std::vector<Element>> classes;  // each sorted; ordered by least element
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
  Element representative(std::size_t c) const { return classes[c].front(); }
  std::size_t class_size(std::size_t c) const { return classes[c].size(); }
};

ConjugacyPartition conjugacy_classes(const FiniteGroup& group);

/// Class of rep(c)^k, i.e. the k-th power map.
std::size_t power_class(const FiniteGroup& group, const ConjugacyPartition& partition,
                        std::size_t c, std::int64_t k);

struct CyclicSubgroup {
  Element generator = 0;
  std::size_t order = 1;
  std::vector<Element> elements;         // generator^0, ..., generator^(order-1)
  std::vector<Element> coset_representatives;  // left transversal, ascending
};

CyclicSubgroup cyclic_subgroup(const FiniteGroup& group, Element c);

/// True iff the closure of gens is the whole group.
bool verify_generation(const FiniteGroup& group, std::span<const Element> gens);

}  // namespace eqrr
