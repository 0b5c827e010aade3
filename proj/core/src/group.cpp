#include "eqrr/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "eqrr/error.hpp"

namespace eqrr {

namespace {

std::uint64_t hash_permutation(const Permutation& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Permutation invert(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
  return out;
}

std::vector<bool> closure(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<bool> seen(group.order(), false);
  std::vector<Element> stack{FiniteGroup::identity()};
  seen[0] = true;
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (Element s : gens) {
      const Element y = group.mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

Element FiniteGroup::lookup(const Permutation& p) const {
  auto it = perm_index_.find(hash_permutation(p));
  if (it != perm_index_.end()) {
    for (Element e : it->second) {
      if (perms_[e] == p) return e;
    }
  }
  throw ConsistencyError("permutation product left the enumerated group");
}

Element FiniteGroup::mul(Element a, Element b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return lookup(compose(perms_[a], perms_[b]));
}

Element FiniteGroup::power(Element a, std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(element_order_[a]);
  std::int64_t e = k % m;
  if (e < 0) e += m;
  Element result = identity();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::conjugate(Element g, Element by) const {
  return mul(mul(by, g), inverse_[by]);
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (mul(generators_[i], generators_[j]) != mul(generators_[j], generators_[i])) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : element_order_) e = std::lcm(e, o);
  return e;
}

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  if (!table_.empty()) {
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t x = 0; x < order_; ++x) {
        if (table_[a * order_ + x] == 0) {
          inverse_[a] = static_cast<Element>(x);
          break;
        }
      }
    }
  } else {
    for (std::size_t a = 0; a < order_; ++a) inverse_[a] = lookup(invert(perms_[a]));
  }

  element_order_.assign(order_, 1);
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != identity()) {
      x = mul(x, static_cast<Element>(a));
      ++k;
      if (k > order_) throw ValidationError("element " + std::to_string(a) + " has no finite order");
    }
    element_order_[a] = k;
  }

  if (generators_.empty()) {
    std::vector<bool> covered(order_, false);
    covered[0] = true;
    for (std::size_t g = 1; g < order_; ++g) {
      if (covered[g]) continue;
      generators_.push_back(static_cast<Element>(g));
      covered = closure(*this, generators_);
    }
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("multiplication table is empty");
  FiniteGroup group;
  group.order_ = n;
  group.table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw ValidationError("multiplication table row " + std::to_string(a) + " has length " +
                            std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (Element x : table[a]) {
      if (x >= n) throw ValidationError("multiplication table entry out of range in row " + std::to_string(a));
      group.table_.push_back(x);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[0][x] != x || table[x][0] != x) {
      throw ValidationError("element 0 is not the identity (row/column " + std::to_string(x) + ")");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      const Element r = table[a][x];
      const Element c = table[x][a];
      if (row_seen[r]) throw ValidationError("row " + std::to_string(a) + " is not a bijection");
      if (col_seen[c]) throw ValidationError("column " + std::to_string(a) + " is not a bijection");
      row_seen[r] = true;
      col_seen[c] = true;
    }
  }
  group.finish();

  auto at = [&](std::size_t a, std::size_t b) { return group.table_[a * n + b]; };
  auto fail = [](std::size_t x, std::size_t y, std::size_t z) {
    throw ValidationError("table is not associative at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ", " + std::to_string(z) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) fail(x, y, z);
  } else {
    // Light's test: associativity on a generating set implies it everywhere.
    for (Element g : group.generators_)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (at(at(x, g), y) != at(x, at(g, y))) fail(x, g, y);
  }
  return group;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, std::vector<Permutation> generators,
                                           std::size_t closure_bound) {
  if (degree == 0) throw ValidationError("permutation degree must be positive");
  if (closure_bound == 0) throw ValidationError("closure bound must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Permutation& p = generators[i];
    if (p.size() != degree) {
      throw ValidationError("generator " + std::to_string(i) + " has length " + std::to_string(p.size()) +
                            ", expected degree " + std::to_string(degree));
    }
    std::vector<bool> seen(degree, false);
    for (auto v : p) {
      if (v >= degree || seen[v]) throw ValidationError("generator " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
  }

  FiniteGroup group;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  group.perms_.push_back(id);
  group.perm_index_[hash_permutation(id)].push_back(0);
  auto find = [&group](const Permutation& p) -> std::int64_t {
    auto it = group.perm_index_.find(hash_permutation(p));
    if (it == group.perm_index_.end()) return -1;
    for (Element e : it->second)
      if (group.perms_[e] == p) return e;
    return -1;
  };

  for (std::size_t head = 0; head < group.perms_.size(); ++head) {
    for (const Permutation& s : generators) {
      Permutation p = compose(group.perms_[head], s);
      if (find(p) >= 0) continue;
      if (group.perms_.size() >= closure_bound) {
        throw ValidationError("permutation closure exceeds the size bound of " + std::to_string(closure_bound));
      }
      const auto idx = static_cast<Element>(group.perms_.size());
      group.perm_index_[hash_permutation(p)].push_back(idx);
      group.perms_.push_back(std::move(p));
    }
  }
  group.order_ = group.perms_.size();

  for (const Permutation& s : generators) {
    const auto idx = static_cast<Element>(find(s));
    if (idx != 0 && std::find(group.generators_.begin(), group.generators_.end(), idx) == group.generators_.end()) {
      group.generators_.push_back(idx);
    }
  }

  if (group.order_ <= kTableLimit) {
    const std::size_t n = group.order_;
    group.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        group.table_[a * n + b] = static_cast<Element>(find(compose(group.perms_[a], group.perms_[b])));
  }
  group.finish();
  return group;
}

FiniteGroup build_group(const GroupDescription& description) {
  return std::visit(
      [](const auto& d) -> FiniteGroup {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TableDescription>) {
          return FiniteGroup::from_table(d.table);
        } else {
          return FiniteGroup::from_permutations(d.degree, d.generators, d.closure_bound);
        }
      },
      description);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(std::move(table));
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& group) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  ConjugacyPartition out;
  out.class_of.assign(group.order(), unassigned);
  const auto& gens = group.generators();
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (out.class_of[g] != unassigned) continue;
    const std::size_t c = out.classes.size();
    std::vector<Element> members{static_cast<Element>(g)};
    out.class_of[g] = c;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Element s : gens) {
        const Element y = group.conjugate(members[head], s);
        if (out.class_of[y] == unassigned) {
          out.class_of[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  return out;
}

std::size_t power_class(const FiniteGroup& group, const ConjugacyPartition& partition, std::size_t c,
                        std::int64_t k) {
  return partition.class_of[group.power(partition.representative(c), k)];
}

CyclicSubgroup cyclic_subgroup(const FiniteGroup& group, Element c) {
  if (c >= group.order()) throw ValidationError("element " + std::to_string(c) + " is not in the group");
  CyclicSubgroup h;
  h.generator = c;
  h.order = group.element_order(c);
  h.elements.reserve(h.order);
  Element x = FiniteGroup::identity();
  for (std::size_t i = 0; i < h.order; ++i) {
    h.elements.push_back(x);
    x = group.mul(x, c);
  }
  std::vector<bool> covered(group.order(), false);
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (covered[g]) continue;
    h.coset_representatives.push_back(static_cast<Element>(g));
    for (Element e : h.elements) covered[group.mul(static_cast<Element>(g), e)] = true;
  }
  return h;
}

bool verify_generation(const FiniteGroup& group, std::span<const Element> gens) {
  for (Element g : gens)
    if (g >= group.order()) return false;
  const auto seen = closure(group, gens);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace eqrr
