#include "eqrr/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include "eqrr/error.hpp"

namespace eqrr {

namespace {

template <typename F>
auto schema_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("schema violation in ") + what + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ValidationError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("rational must be an integer or a \"p/q\" string");
}

Element element_from_json(const Json& j, const FiniteGroup& group, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + " must be an element index");
  const auto e = j.get<std::int64_t>();
  if (!group.contains(e)) throw ValidationError(what + " = " + std::to_string(e) + " is not a group element");
  return static_cast<Element>(e);
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  return schema_guard("cyclotomic literal", [&] {
    const auto n = require(j, "conductor", "cyclotomic literal").get<std::int64_t>();
    if (n < 1) throw ValidationError("invalid conductor " + std::to_string(n));
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto& entry : require(j, "coeffs", "cyclotomic literal")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ValidationError("cyclotomic coefficient must be [exponent, rational]");
      }
      const auto e = entry[0].get<std::int64_t>();
      if (e < 0 || e >= n) {
        throw ValidationError("cyclotomic exponent " + std::to_string(e) + " outside [0, " + std::to_string(n) + ")");
      }
      terms.emplace_back(e, rational_from_json(entry[1]));
    }
    return Cyclotomic::from_terms(static_cast<int>(n), terms);
  });
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& [e, q] : x.coefficient_map()) coeffs.push_back(Json::array({e, to_string(q)}));
  Json out;
  out["conductor"] = x.conductor();
  out["coeffs"] = std::move(coeffs);
  return out;
}

FiniteGroup group_from_json(const Json& j) {
  return schema_guard("group", [&] {
    if (!j.is_object()) throw ValidationError("group must be a JSON object");
    if (j.contains("table")) {
      TableDescription d;
      d.table = j["table"].get<std::vector<std::vector<Element>>>();
      if (j.contains("order") && j["order"].get<std::size_t>() != d.table.size()) {
        throw ValidationError("group \"order\" does not match the table size");
      }
      return build_group(d);
    }
    if (j.contains("generators")) {
      PermutationDescription d;
      d.degree = require(j, "degree", "group").get<std::size_t>();
      if (j.contains("closure_bound")) d.closure_bound = j["closure_bound"].get<std::size_t>();
      for (const auto& g : j["generators"]) {
        auto images = g.get<std::vector<std::int64_t>>();
        const bool one_based = std::find(images.begin(), images.end(), 0) == images.end() &&
                               std::find(images.begin(), images.end(), static_cast<std::int64_t>(d.degree)) !=
                                   images.end();
        Permutation p;
        for (auto v : images) {
          const auto x = one_based ? v - 1 : v;
          if (x < 0 || x >= static_cast<std::int64_t>(d.degree)) {
            throw ValidationError("permutation image " + std::to_string(v) + " out of range");
          }
          p.push_back(static_cast<std::uint32_t>(x));
        }
        d.generators.push_back(std::move(p));
      }
      return build_group(d);
    }
    throw ValidationError("group needs either \"table\" or \"degree\" + \"generators\"");
  });
}

Json to_json(const FiniteGroup& group) {
  Json out;
  if (group.has_table()) {
    out["order"] = group.order();
    Json rows = Json::array();
    const auto t = group.table();
    for (std::size_t a = 0; a < group.order(); ++a) {
      rows.push_back(std::vector<Element>(t.begin() + a * group.order(), t.begin() + (a + 1) * group.order()));
    }
    out["table"] = std::move(rows);
    return out;
  }
  out["degree"] = group.permutations().front().size();
  Json gens = Json::array();
  for (Element g : group.generators()) gens.push_back(group.permutations()[g]);
  out["generators"] = std::move(gens);
  return out;
}

CharacterTable table_from_json(const Json& j, std::shared_ptr<const FiniteGroup> group) {
  if (!group) throw ValidationError("character table needs a group");
  return schema_guard("character table", [&] {
    ConjugacyPartition partition = conjugacy_classes(*group);
    const auto& classes = require(j, "classes", "character table");
    const auto& irreducibles = require(j, "irreducibles", "character table");
    if (classes.size() != partition.size()) {
      throw ValidationError("table lists " + std::to_string(classes.size()) + " classes, the group has " +
                            std::to_string(partition.size()));
    }
    // column_for[c] = position in the file of the column for partition class c
    std::vector<std::size_t> column_for(partition.size(), partition.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& entry = classes[i];
      if (!entry.is_array() || entry.size() != 2) throw ValidationError("class entry must be [representative, size]");
      const Element rep = element_from_json(entry[0], *group, "class representative");
      const auto size = entry[1].get<std::size_t>();
      const std::size_t c = partition.class_of[rep];
      if (partition.class_size(c) != size) {
        throw ValidationError("class of element " + std::to_string(rep) + " has size " +
                              std::to_string(partition.class_size(c)) + ", table says " + std::to_string(size));
      }
      if (column_for[c] != partition.size()) {
        throw ValidationError("two table columns name the class of element " + std::to_string(rep));
      }
      column_for[c] = i;
    }
    std::vector<ClassFunction> rows;
    for (const auto& row_json : irreducibles) {
      if (!row_json.is_array() || row_json.size() != partition.size()) {
        throw ValidationError("every irreducible needs one value per class");
      }
      ClassFunction row;
      for (std::size_t c = 0; c < partition.size(); ++c) row.push_back(cyclotomic_from_json(row_json[column_for[c]]));
      rows.push_back(std::move(row));
    }
    return validate_table(group, std::move(partition), std::move(rows));
  });
}

Json to_json(const CharacterTable& table) {
  Json classes = Json::array();
  const auto& partition = table.classes();
  for (std::size_t c = 0; c < partition.size(); ++c) {
    classes.push_back(Json::array({partition.representative(c), partition.class_size(c)}));
  }
  Json irreducibles = Json::array();
  for (const auto& row : table.irreducibles()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    irreducibles.push_back(std::move(r));
  }
  Json out;
  out["classes"] = std::move(classes);
  out["irreducibles"] = std::move(irreducibles);
  return out;
}

Convention parse_convention(std::string_view text) {
  if (text == "standard") return Convention::standard;
  if (text == "conjugate") return Convention::conjugate;
  throw ValidationError("convention must be \"standard\" or \"conjugate\", got '" + std::string(text) + "'");
}

std::string to_string(Convention convention) {
  return convention == Convention::standard ? "standard" : "conjugate";
}

GroupAction action_from_json(const Json& j, std::optional<Convention> convention) {
  return schema_guard("action", [&] {
    ActionDescription d;
    d.group = std::make_shared<const FiniteGroup>(group_from_json(require(j, "group", "action")));
    if (j.contains("character_table") && !j["character_table"].is_null()) {
      d.table = table_from_json(j["character_table"], d.group);
    }
    d.gamma = require(j, "gamma", "action").get<int>();
    const auto& vec = require(j, "vector", "action");
    if (vec.contains("a")) {
      for (const auto& x : vec["a"]) d.a.push_back(element_from_json(x, *d.group, "a_i"));
    }
    if (vec.contains("b")) {
      for (const auto& x : vec["b"]) d.b.push_back(element_from_json(x, *d.group, "b_i"));
    }
    if (vec.contains("c")) {
      for (const auto& x : vec["c"]) {
        BranchInput c;
        c.element = element_from_json(require(x, "element", "branch entry"), *d.group, "c_j");
        c.order = require(x, "order", "branch entry").get<int>();
        d.c.push_back(c);
      }
    }
    if (convention) {
      d.convention = *convention;
    } else if (j.contains("convention")) {
      d.convention = parse_convention(j["convention"].get<std::string>());
    }
    return validate_action(std::move(d));
  });
}

Json to_json(const GroupAction& action) {
  Json out;
  out["group"] = to_json(action.group());
  out["character_table"] = to_json(action.table());
  out["gamma"] = action.gamma();
  Json vec;
  vec["a"] = std::vector<Element>(action.a().begin(), action.a().end());
  vec["b"] = std::vector<Element>(action.b().begin(), action.b().end());
  Json c = Json::array();
  for (const auto& bp : action.branch_points()) {
    Json entry;
    entry["element"] = bp.element;
    entry["order"] = bp.order;
    c.push_back(std::move(entry));
  }
  vec["c"] = std::move(c);
  out["vector"] = std::move(vec);
  out["convention"] = to_string(action.convention());
  return out;
}

Site parse_site(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ValidationError("bad divisor site '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto index = parse_int(text.substr(colon + 1), "site index");
  if (index < 0) throw ValidationError("negative divisor site index");
  if (kind == "branch") return Site::branch(static_cast<std::size_t>(index));
  if (kind == "free") return Site::free_orbit(static_cast<std::size_t>(index));
  throw ValidationError("bad divisor site '" + std::string(text) + "'");
}

DivisorInput divisor_from_json(const Json& j) {
  return schema_guard("divisor", [&] {
    DivisorInput out;
    for (const auto& t : require(j, "terms", "divisor")) {
      TermInput term;
      term.site = parse_site(require(t, "site", "divisor term").get<std::string>());
      term.coefficient = require(t, "r", "divisor term").get<std::int64_t>();
      out.terms.push_back(term);
    }
    if (j.contains("assert_nonspecial")) out.assert_nonspecial = j["assert_nonspecial"].get<bool>();
    return out;
  });
}

Json to_json(const DivisorInput& divisor) {
  Json terms = Json::array();
  for (const auto& t : divisor.terms) {
    Json entry;
    entry["site"] = to_string(t.site);
    entry["r"] = t.coefficient;
    terms.push_back(std::move(entry));
  }
  Json out;
  out["terms"] = std::move(terms);
  out["assert_nonspecial"] = divisor.assert_nonspecial;
  return out;
}

DivisorInput parse_divisor_spec(std::string_view spec) {
  DivisorInput out;
  std::size_t next_free = 0;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw UsageError("bad divisor term '" + std::string(item) + "'");
    const std::string_view head = item.substr(0, colon);
    TermInput term;
    try {
      term.coefficient = parse_int(item.substr(colon + 1), "divisor coefficient");
      if (head == "free") {
        term.site = Site::free_orbit(next_free++);
      } else if (head.starts_with("branch") && head.size() > 6) {
        const auto j = parse_int(head.substr(6), "branch index");
        if (j < 0) throw ValidationError("negative branch index");
        term.site = Site::branch(static_cast<std::size_t>(j));
      } else {
        throw ValidationError("unknown site");
      }
    } catch (const ValidationError& e) {
      throw UsageError("bad divisor term '" + std::string(item) + "': " + e.what());
    }
    out.terms.push_back(term);
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
    if (spec.empty()) throw UsageError("trailing comma in divisor specification");
  }
  if (out.terms.empty()) throw UsageError("empty divisor specification");
  return out;
}

Json multiplicities_to_json(const MultiplicityVector& m) {
  Json out = Json::object();
  for (std::size_t v = 0; v < m.size(); ++v) out["V_" + std::to_string(v)] = m[v];
  return out;
}

Json decomposition_to_json(const Decomposition& d, bool paths_agree) {
  Json out;
  out["multiplicities"] = multiplicities_to_json(d.multiplicities);
  Json dim;
  dim["lhs"] = d.dimension_sum;
  dim["rhs"] = d.expected_dimension;
  out["dim_check"] = std::move(dim);
  out["nonspecial"] = to_string(d.nonspecial);
  out["paths_agree"] = paths_agree;
  if (d.hypothesis_violated()) {
    Json bad = Json::array();
    for (auto v : d.negative) bad.push_back("V_" + std::to_string(v));
    out["hypothesis_violation"] = std::move(bad);
  }
  return out;
}

}  // namespace eqrr
