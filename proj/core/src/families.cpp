#include "eqrr/families.hpp"

#include <charconv>
#include <memory>
#include <numeric>

#include "eqrr/chartab.hpp"
#include "eqrr/error.hpp"

namespace eqrr {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string FamilySpec::to_string() const {
  switch (name) {
    case Name::klein:
      return "klein";
    case Name::fermat:
      return "fermat:" + std::to_string(parameter);
    case Name::cyclic_custom: {
      std::string out = "cyclic:" + std::to_string(parameter) + ":";
      for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exponents[i]);
      }
      return out;
    }
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  if (text == "klein") {
    spec.name = FamilySpec::Name::klein;
    return spec;
  }
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  if (colon == std::string_view::npos) throw UsageError("unknown family '" + std::string(text) + "'");
  std::string_view rest = text.substr(colon + 1);
  if (head == "fermat") {
    spec.name = FamilySpec::Name::fermat;
    spec.parameter = static_cast<int>(parse_int(rest, "fermat prime"));
    return spec;
  }
  if (head == "cyclic") {
    spec.name = FamilySpec::Name::cyclic_custom;
    const auto second = rest.find(':');
    if (second == std::string_view::npos) throw UsageError("cyclic family needs cyclic:<n>:<e1>,<e2>,...");
    spec.parameter = static_cast<int>(parse_int(rest.substr(0, second), "cyclic order"));
    std::string_view list = rest.substr(second + 1);
    while (!list.empty()) {
      const auto comma = list.find(',');
      spec.exponents.push_back(parse_int(list.substr(0, comma), "cyclic exponent"));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    return spec;
  }
  throw UsageError("unknown family '" + std::string(text) + "'");
}

std::optional<std::array<Element, 3>> first_generating_triple(const FiniteGroup& group,
                                                              const std::array<int, 3>& orders) {
  const auto n = static_cast<Element>(group.order());
  for (Element c2 = 0; c2 < n; ++c2) {
    if (group.element_order(c2) != static_cast<std::size_t>(orders[2])) continue;
    for (Element c0 = 0; c0 < n; ++c0) {
      if (group.element_order(c0) != static_cast<std::size_t>(orders[0])) continue;
      const Element c1 = group.mul(group.inverse(c0), group.inverse(c2));
      if (group.element_order(c1) != static_cast<std::size_t>(orders[1])) continue;
      const std::array<Element, 3> triple{c0, c1, c2};
      if (verify_generation(group, triple)) return triple;
    }
  }
  return std::nullopt;
}

GroupAction family_klein(Convention convention) {
  CharacterTable table = build_metacyclic_table(7, 3, 2);
  auto group = table.group_ptr();
  const auto triple = first_generating_triple(*group, {3, 3, 7});
  if (!triple) throw ConsistencyError("no generating vector of type (0; 3, 3, 7) in the order-21 group");
  ActionDescription d;
  d.group = group;
  d.table = std::move(table);
  d.gamma = 0;
  d.c = {{(*triple)[0], 3}, {(*triple)[1], 3}, {(*triple)[2], 7}};
  d.convention = convention;
  return validate_action(std::move(d));
}

GroupAction family_fermat(int p, Convention convention) {
  if (p < 5 || !is_prime(p)) {
    throw ValidationError("fermat family needs a prime p >= 5, got " + std::to_string(p));
  }
  ActionDescription d;
  d.group = std::make_shared<const FiniteGroup>(cyclic_group(static_cast<std::size_t>(p)));
  d.gamma = 0;
  d.c.assign(static_cast<std::size_t>(p), BranchInput{1, p});
  d.convention = convention;
  return validate_action(std::move(d));
}

GroupAction family_cyclic(int n, const std::vector<std::int64_t>& exponents, Convention convention) {
  if (n < 1) throw ValidationError("cyclic family needs n >= 1");
  ActionDescription d;
  d.group = std::make_shared<const FiniteGroup>(cyclic_group(static_cast<std::size_t>(n)));
  d.gamma = 0;
  for (std::int64_t e : exponents) {
    std::int64_t r = e % n;
    if (r < 0) r += n;
    const auto order = static_cast<int>(n / std::gcd<std::int64_t>(r, n));
    d.c.push_back(BranchInput{static_cast<Element>(r), order});
  }
  d.convention = convention;
  return validate_action(std::move(d));
}

GroupAction make_family(const FamilySpec& spec, Convention convention) {
  switch (spec.name) {
    case FamilySpec::Name::klein:
      return family_klein(convention);
    case FamilySpec::Name::fermat:
      return family_fermat(spec.parameter, convention);
    case FamilySpec::Name::cyclic_custom:
      return family_cyclic(spec.parameter, spec.exponents, convention);
  }
  throw UsageError("unknown family");
}

}  // namespace eqrr
