#include "eqrr/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eqrr/error.hpp"

namespace eqrr {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ConsistencyError("virtual character coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ConsistencyError("virtual character coefficient overflow");
  return out;
}

void require_same_shape(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.size() != b.size()) throw ValidationError("virtual characters over different tables");
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = checked_add(coeffs[i], other.coeffs[i]);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = checked_add(coeffs[i], -other.coeffs[i]);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(std::int64_t k) {
  for (auto& c : coeffs) c = checked_mul(c, k);
  return *this;
}

ClassFunction CharacterTable::trivial() const { return ClassFunction(partition_.size(), Cyclotomic(1)); }

ClassFunction CharacterTable::zero() const { return ClassFunction(partition_.size(), Cyclotomic(0)); }

ClassFunction CharacterTable::regular() const {
  ClassFunction f = zero();
  f[0] = Cyclotomic(static_cast<long>(group_->order()));
  return f;
}

ClassFunction CharacterTable::combine(const VirtualCharacter& character) const {
  if (character.size() != size()) throw ValidationError("virtual character has the wrong length");
  ClassFunction f = zero();
  for (std::size_t v = 0; v < size(); ++v) {
    if (character[v] == 0) continue;
    const Rational k(static_cast<long>(character[v]));
    for (std::size_t c = 0; c < f.size(); ++c) f[c] += irreducibles_[v][c] * k;
  }
  return f;
}

VirtualCharacter CharacterTable::decompose(const ClassFunction& f) const {
  VirtualCharacter out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    const Cyclotomic ip = inner_product(*this, f, irreducibles_[v]);
    const auto q = ip.to_rational();
    const auto n = q ? to_int64(*q) : std::nullopt;
    if (!n) {
      throw ConsistencyError("class function has non-integral multiplicity " + ip.to_string() + " at V_" +
                             std::to_string(v));
    }
    out[v] = *n;
  }
  return out;
}

CharacterTable validate_table(std::shared_ptr<const FiniteGroup> group, ConjugacyPartition partition,
                              std::vector<ClassFunction> rows) {
  if (!group) throw ValidationError("character table has no group");
  const std::size_t k = partition.size();
  std::size_t covered = 0;
  for (const auto& cls : partition.classes) covered += cls.size();
  if (covered != group->order() || partition.class_of.size() != group->order()) {
    throw ValidationError("conjugacy partition does not cover the group");
  }
  if (rows.size() != k) {
    throw ValidationError("table has " + std::to_string(rows.size()) + " rows for " + std::to_string(k) +
                          " classes");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) {
      throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries for " + std::to_string(k) + " classes");
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (!(rows[0][c] == Cyclotomic(1))) throw ValidationError("row 0 is not the trivial character");
  }

  CharacterTable table;
  table.degrees_.reserve(k);
  std::int64_t degree_square_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto q = rows[i][0].to_rational();
    const auto d = q ? to_int64(*q) : std::nullopt;
    if (!d || *d <= 0) {
      throw ValidationError("row " + std::to_string(i) + " has degree " + rows[i][0].to_string() +
                            ", not a positive integer");
    }
    table.degrees_.push_back(*d);
    degree_square_sum += *d * *d;
  }
  if (degree_square_sum != static_cast<std::int64_t>(group->order())) {
    throw ValidationError("sum of squared degrees is " + std::to_string(degree_square_sum) + ", group order is " +
                          std::to_string(group->order()));
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto ord = static_cast<int>(group->element_order(partition.representative(c)));
    for (std::size_t i = 0; i < k; ++i) {
      if (!rows[i][c].lies_in(ord)) {
        throw ValidationError("value of row " + std::to_string(i) + " at class " + std::to_string(c) +
                              " is not in Q(zeta_" + std::to_string(ord) + ")");
      }
    }
  }

  std::vector<ClassFunction> conj(k);
  for (std::size_t i = 0; i < k; ++i) {
    conj[i].reserve(k);
    for (const auto& x : rows[i]) conj[i].push_back(x.conjugate());
  }
  const Rational inv_order(1, static_cast<unsigned long>(group->order()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < k; ++c) {
        sum += rows[i][c] * conj[j][c] * Rational(static_cast<long>(partition.class_size(c)));
      }
      sum *= inv_order;
      if (!(sum == Cyclotomic(i == j ? 1 : 0))) {
        throw ValidationError("row orthogonality fails for pair " + pair_name(i, j) + ": inner product " +
                              sum.to_string());
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < k; ++i) sum += rows[i][a] * conj[i][b];
      const long expected = a == b ? static_cast<long>(group->order() / partition.class_size(a)) : 0;
      if (!(sum == Cyclotomic(expected))) {
        throw ValidationError("column orthogonality fails for classes " + pair_name(a, b) + ": got " +
                              sum.to_string() + ", expected " + std::to_string(expected));
      }
    }
  }

  table.group_ = std::move(group);
  table.partition_ = std::move(partition);
  table.irreducibles_ = std::move(rows);
  return table;
}

CharacterTable build_abelian_table(std::shared_ptr<const FiniteGroup> group) {
  if (!group) throw ValidationError("no group");
  if (!group->is_abelian()) throw ValidationError("build_abelian_table: group is not abelian");
  const std::size_t n = group->order();
  const auto e = static_cast<std::int64_t>(group->exponent());

  // Characters as exponent vectors x with chi(g) = zeta_e^x[g], extended one
  // cyclic step at a time from the subgroup generated so far.
  std::vector<bool> in_h(n, false);
  in_h[0] = true;
  std::vector<Element> h_elements{0};
  std::vector<std::vector<std::int64_t>> chars{std::vector<std::int64_t>(n, 0)};
  std::vector<Element> basis;

  while (h_elements.size() < n) {
    Element g = 0;
    std::size_t best = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_h[x] && group->element_order(static_cast<Element>(x)) > best) {
        best = group->element_order(static_cast<Element>(x));
        g = static_cast<Element>(x);
      }
    }
    basis.push_back(g);
    std::int64_t d = 1;
    Element gd = g;
    while (!in_h[gd]) {
      gd = group->mul(gd, g);
      ++d;
    }
    std::vector<Element> new_elements;
    new_elements.reserve(h_elements.size() * d);
    std::vector<std::pair<Element, std::int64_t>> decomposition;  // (h, i) with element = h * g^i
    for (std::int64_t i = 0; i < d; ++i) {
      const Element gi = group->power(g, i);
      for (Element hh : h_elements) {
        const Element x = group->mul(hh, gi);
        new_elements.push_back(x);
        decomposition.emplace_back(hh, i);
      }
    }
    std::vector<std::vector<std::int64_t>> extended;
    extended.reserve(chars.size() * d);
    for (const auto& chi : chars) {
      const std::int64_t a = chi[gd];
      if (a % d != 0) throw ConsistencyError("abelian character extension failed");
      for (std::int64_t s = 0; s < d; ++s) {
        const std::int64_t y = mod(a / d + s * (e / d), e);
        std::vector<std::int64_t> next(n, 0);
        for (std::size_t idx = 0; idx < new_elements.size(); ++idx) {
          const auto [hh, i] = decomposition[idx];
          next[new_elements[idx]] = mod(chi[hh] + i * y, e);
        }
        extended.push_back(std::move(next));
      }
    }
    chars = std::move(extended);
    h_elements = std::move(new_elements);
    std::fill(in_h.begin(), in_h.end(), false);
    for (Element x : h_elements) in_h[x] = true;
  }

  std::sort(chars.begin(), chars.end(), [&basis](const auto& lhs, const auto& rhs) {
    for (Element b : basis) {
      if (lhs[b] != rhs[b]) return lhs[b] < rhs[b];
    }
    return false;
  });

  ConjugacyPartition partition = conjugacy_classes(*group);
  std::vector<ClassFunction> rows;
  rows.reserve(n);
  for (const auto& chi : chars) {
    ClassFunction row;
    row.reserve(n);
    for (std::size_t c = 0; c < partition.size(); ++c) {
      row.push_back(Cyclotomic::root_of_unity(static_cast<int>(e), chi[partition.representative(c)]));
    }
    rows.push_back(std::move(row));
  }
  return validate_table(std::move(group), std::move(partition), std::move(rows));
}

FiniteGroup metacyclic_group(int m, int k, int t) {
  if (m < 1 || k < 1) throw ValidationError("metacyclic parameters must be positive");
  if (std::gcd(mod(t, m), static_cast<std::int64_t>(m)) != 1 && m > 1) {
    throw ValidationError("metacyclic twist t must be a unit mod m");
  }
  std::vector<std::int64_t> tpow(k + 1, 1 % m);
  for (int j = 1; j <= k; ++j) tpow[j] = mod(tpow[j - 1] * t, m);
  if (tpow[k] != 1 % m) throw ValidationError("metacyclic twist must satisfy t^k = 1 mod m");

  const int n = m * k;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a) {
    const int i1 = a % m;
    const int j1 = a / m;
    for (int b = 0; b < n; ++b) {
      const int i2 = b % m;
      const int j2 = b / m;
      const auto i = static_cast<int>(mod(i1 + tpow[j1] * i2, m));
      const int j = (j1 + j2) % k;
      table[a][b] = static_cast<Element>(i + m * j);
    }
  }
  return FiniteGroup::from_table(std::move(table));
}

CharacterTable build_metacyclic_table(int m, int k, int t) {
  auto group = std::make_shared<const FiniteGroup>(metacyclic_group(m, k, t));
  std::int64_t ts = 1;
  for (int s = 1; s < k; ++s) {
    ts = mod(ts * t, m);
    if (m > 1 && std::gcd(mod(ts - 1, m), static_cast<std::int64_t>(m)) != 1) {
      throw ValidationError("unsupported metacyclic group (" + std::to_string(m) + ", " + std::to_string(k) + ", " +
                            std::to_string(t) + "): Z_" + std::to_string(k) +
                            " does not act freely on the characters of Z_" + std::to_string(m) +
                            "; supply the character table through the ingestion path");
    }
  }

  std::vector<std::vector<std::int64_t>> orbits;
  std::vector<bool> seen(m, false);
  for (int u = 1; u < m; ++u) {
    if (seen[u]) continue;
    std::vector<std::int64_t> orbit;
    std::int64_t x = u;
    for (int s = 0; s < k; ++s) {
      orbit.push_back(x);
      seen[x] = true;
      x = mod(x * t, m);
    }
    orbits.push_back(std::move(orbit));
  }

  ConjugacyPartition partition = conjugacy_classes(*group);
  std::vector<ClassFunction> rows;
  for (int a = 0; a < k; ++a) {
    ClassFunction row;
    for (std::size_t c = 0; c < partition.size(); ++c) {
      const int j = static_cast<int>(partition.representative(c)) / m;
      row.push_back(Cyclotomic::root_of_unity(k, static_cast<std::int64_t>(a) * j));
    }
    rows.push_back(std::move(row));
  }
  for (const auto& orbit : orbits) {
    ClassFunction row;
    for (std::size_t c = 0; c < partition.size(); ++c) {
      const int rep = static_cast<int>(partition.representative(c));
      const int i = rep % m;
      const int j = rep / m;
      if (j != 0) {
        row.emplace_back(0);
        continue;
      }
      std::vector<std::pair<std::int64_t, Rational>> terms;
      for (std::int64_t u : orbit) terms.emplace_back(u * i, Rational(1));
      row.push_back(Cyclotomic::from_terms(m, terms));
    }
    rows.push_back(std::move(row));
  }
  return validate_table(std::move(group), std::move(partition), std::move(rows));
}

Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& phi, const ClassFunction& psi) {
  const auto& partition = table.classes();
  if (phi.size() != partition.size() || psi.size() != partition.size()) {
    throw ValidationError("class functions do not match the table's conjugacy partition");
  }
  Cyclotomic sum;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (phi[c].is_zero() || psi[c].is_zero()) continue;
    sum += phi[c] * psi[c].conjugate() * Rational(static_cast<long>(partition.class_size(c)));
  }
  sum *= Rational(1, static_cast<unsigned long>(table.group().order()));
  return sum;
}

std::vector<std::int64_t> eigenvalue_multiplicities(const CharacterTable& table, std::size_t v,
                                                    const CyclicSubgroup& h) {
  const auto m = static_cast<int>(h.order);
  std::vector<const Cyclotomic*> values;
  values.reserve(m);
  for (Element x : h.elements) values.push_back(&table.value(v, x));
  std::vector<std::int64_t> out(m, 0);
  std::int64_t total = 0;
  for (int k = 0; k < m; ++k) {
    Cyclotomic sum;
    for (int j = 0; j < m; ++j) {
      sum += *values[j] * Cyclotomic::root_of_unity(m, -static_cast<std::int64_t>(k) * j);
    }
    sum *= Rational(1, static_cast<unsigned long>(m));
    const auto q = sum.to_rational();
    const auto n = q ? to_int64(*q) : std::nullopt;
    if (!n || *n < 0) {
      throw ConsistencyError("eigenvalue multiplicity of zeta_" + std::to_string(m) + "^" + std::to_string(k) +
                             " in V_" + std::to_string(v) + " is " + sum.to_string() +
                             ", not a non-negative integer (bad table?)");
    }
    out[k] = *n;
    total += *n;
  }
  if (total != table.degree(v)) {
    throw ConsistencyError("eigenvalue multiplicities of V_" + std::to_string(v) + " do not sum to its degree");
  }
  return out;
}

std::int64_t fixed_subspace_dim(const CharacterTable& table, std::size_t v, const CyclicSubgroup& h) {
  Cyclotomic sum;
  for (Element x : h.elements) sum += table.value(v, x);
  sum *= Rational(1, static_cast<unsigned long>(h.order));
  const auto q = sum.to_rational();
  const auto n = q ? to_int64(*q) : std::nullopt;
  if (!n || *n < 0) {
    throw ConsistencyError("fixed subspace dimension of V_" + std::to_string(v) + " is " + sum.to_string());
  }
  return *n;
}

VirtualCharacter induce_from_multiplicities(const std::vector<std::vector<std::int64_t>>& multiplicities,
                                            std::span<const std::int64_t> theta) {
  VirtualCharacter out(multiplicities.size());
  for (std::size_t v = 0; v < multiplicities.size(); ++v) {
    const auto& n = multiplicities[v];
    if (n.size() != theta.size()) {
      throw ValidationError("character of H has " + std::to_string(theta.size()) + " coefficients, H has order " +
                            std::to_string(n.size()));
    }
    std::int64_t c = 0;
    for (std::size_t alpha = 0; alpha < theta.size(); ++alpha) c = checked_add(c, checked_mul(theta[alpha], n[alpha]));
    out[v] = c;
  }
  return out;
}

VirtualCharacter induce_from_cyclic(const CharacterTable& table, const CyclicSubgroup& h,
                                    std::span<const std::int64_t> theta) {
  if (h.generator >= table.group().order()) throw ValidationError("subgroup generator is not in the group");
  if (theta.size() != h.order) {
    throw ValidationError("character of H has " + std::to_string(theta.size()) + " coefficients, H has order " +
                          std::to_string(h.order));
  }
  std::vector<std::vector<std::int64_t>> multiplicities;
  multiplicities.reserve(table.size());
  for (std::size_t v = 0; v < table.size(); ++v) multiplicities.push_back(eigenvalue_multiplicities(table, v, h));
  return induce_from_multiplicities(multiplicities, theta);
}

Rational frobenius_schur_indicator(const CharacterTable& table, std::size_t v) {
  const auto& group = table.group();
  const auto& partition = table.classes();
  Cyclotomic sum;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const Element g = partition.representative(c);
    sum += table.value(v, group.mul(g, g)) * Rational(static_cast<long>(partition.class_size(c)));
  }
  sum *= Rational(1, static_cast<unsigned long>(group.order()));
  const auto q = sum.to_rational();
  if (!q) throw ConsistencyError("Frobenius-Schur indicator of V_" + std::to_string(v) + " is not rational");
  return *q;
}

bool is_absolutely_irreducible(const CharacterTable& table, std::size_t v) {
  const auto& row = table.irreducible(v);
  const bool rational = std::all_of(row.begin(), row.end(), [](const Cyclotomic& x) { return x.is_rational(); });
  return rational && frobenius_schur_indicator(table, v) == 1;
}

}  // namespace eqrr
