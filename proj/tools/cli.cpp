#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "eqrr/error.hpp"
#include "eqrr/families.hpp"
#include "eqrr/io.hpp"

namespace eqrr::cli {

namespace {

const char* const kCommands[] = {"validate", "chartab", "cw", "ramification", "degeq", "decompose", "selftest"};

std::string vname(std::size_t v) { return "V_" + std::to_string(v); }

std::string tuple(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string branching(const GroupAction& action) {
  std::vector<std::int64_t> orders;
  for (const auto& bp : action.branch_points()) orders.push_back(bp.order);
  std::string out = "(" + std::to_string(action.gamma()) + ";";
  for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? ", " : " ") + std::to_string(orders[i]);
  return out + ")";
}

/// "V_0 + 2 V_3 - V_4", or "0" when empty.
std::string module_expression(const MultiplicityVector& m) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    const std::int64_t mag = m[v] < 0 ? -m[v] : m[v];
    const std::string term = mag == 1 ? vname(v) : std::to_string(mag) + " " + vname(v);
    if (out.empty()) {
      out = (m[v] < 0 ? "-" : "") + term;
    } else {
      out += (m[v] < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

void print_columns(std::ostream& out, const CharacterTable& table,
                   const std::vector<std::pair<std::string, std::vector<std::int64_t>>>& columns) {
  out << std::left << std::setw(6) << "V" << std::right << std::setw(5) << "dim";
  for (const auto& [name, _] : columns) out << std::setw(std::max<int>(6, static_cast<int>(name.size()) + 2)) << name;
  out << '\n';
  for (std::size_t v = 0; v < table.size(); ++v) {
    out << std::left << std::setw(6) << vname(v) << std::right << std::setw(5) << table.degree(v);
    for (const auto& [name, values] : columns) {
      out << std::setw(std::max<int>(6, static_cast<int>(name.size()) + 2)) << values[v];
    }
    out << '\n';
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

GroupAction load_action(const RunConfig& config) {
  if (!config.family.empty() && !config.action_path.empty()) {
    throw UsageError("give either --family or --action, not both");
  }
  if (!config.family.empty()) {
    return make_family(parse_family(config.family), config.convention.value_or(Convention::standard));
  }
  if (!config.action_path.empty()) return action_from_json(load_json_file(config.action_path), config.convention);
  throw UsageError("command '" + config.command + "' needs --family or --action");
}

DivisorInput load_divisor(const RunConfig& config) {
  if (config.divisor.empty()) throw UsageError("command '" + config.command + "' needs --divisor");
  DivisorInput d = config.divisor.front() == '@' ? divisor_from_json(load_json_file(config.divisor.substr(1)))
                                                 : parse_divisor_spec(config.divisor);
  d.assert_nonspecial = d.assert_nonspecial || config.assert_nonspecial;
  return d;
}

std::string divisor_text(const DivisorInput& d) {
  std::string out;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(d.terms[i].coefficient) + "*" + to_string(d.terms[i].site);
  }
  return out;
}

Json action_summary(const GroupAction& action) {
  Json j;
  j["order"] = action.group().order();
  j["gamma"] = action.gamma();
  Json orders = Json::array();
  for (const auto& bp : action.branch_points()) orders.push_back(bp.order);
  j["branching"] = std::move(orders);
  j["genus"] = action.genus();
  j["convention"] = to_string(action.convention());
  return j;
}

void print_header(std::ostream& out, const GroupAction& action) {
  out << "group order " << action.group().order() << ", branching " << branching(action) << ", genus "
      << action.genus() << ", convention " << to_string(action.convention()) << '\n';
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const GroupAction action = load_action(config);
  if (config.format == Format::json) {
    Json j = action_summary(action);
    j["valid"] = true;
    emit(out, j);
  } else {
    print_header(out, action);
    out << "valid\n";
  }
  return 0;
}

int cmd_chartab(const RunConfig& config, std::ostream& out) {
  const GroupAction action = load_action(config);
  const CharacterTable& table = action.table();
  if (config.format == Format::json) {
    emit(out, to_json(table));
    return 0;
  }
  const auto& classes = table.classes();
  out << "classes:";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << " [" << classes.representative(c) << "]x" << classes.class_size(c);
  }
  out << '\n';
  for (std::size_t v = 0; v < table.size(); ++v) {
    out << vname(v) << ':';
    for (const auto& x : table.irreducible(v)) out << "  " << x.to_string();
    out << '\n';
  }
  out << "orthogonality: ok\n";
  return 0;
}

int cmd_cw(const RunConfig& config, std::ostream& out) {
  const EquivariantAnalysis analysis(load_action(config));
  const auto a = analysis.chevalley_weil();
  const auto dual = analysis.analytic_dual();
  const auto r = analysis.broughton();
  for (std::size_t v = 0; v < analysis.table().size(); ++v) {
    if (r[v] != a[v] + dual[v]) {
      throw ConsistencyError("r(" + vname(v) + ") = " + std::to_string(r[v]) + " but a + a* = " +
                             std::to_string(a[v] + dual[v]));
    }
    analysis.absolutely_irreducible_check(v);
  }
  if (config.format == Format::json) {
    Json j = action_summary(analysis.action());
    j["a"] = multiplicities_to_json(a);
    j["a*"] = multiplicities_to_json(dual);
    j["r"] = multiplicities_to_json(r);
    emit(out, j);
    return 0;
  }
  print_header(out, analysis.action());
  print_columns(out, analysis.table(), {{"a", a.values}, {"a*", dual.values}, {"r", r.values}});
  out << "a = " << tuple(a.values) << '\n';
  out << "a* = " << tuple(dual.values) << '\n';
  out << "r = " << tuple(r.values) << '\n';
  return 0;
}

int cmd_ramification(const RunConfig& config, std::ostream& out) {
  const EquivariantAnalysis analysis(load_action(config));
  const auto module = analysis.ramification_module();
  const auto dual = analysis.analytic_dual();
  const auto& table = analysis.table();
  const std::int64_t gamma = analysis.action().gamma();
  for (std::size_t v = 0; v < table.size(); ++v) {
    const std::int64_t expected = dual[v] + (1 - gamma) * table.degree(v);
    if (v > 0 && module.reduced[v] != expected) {
      throw ConsistencyError("<Gamma~, " + vname(v) + "> = " + std::to_string(module.reduced[v]) +
                             " but a* + (1 - gamma) dim = " + std::to_string(expected));
    }
  }
  if (config.format == Format::json) {
    Json j = action_summary(analysis.action());
    Json raw = Json::object();
    for (std::size_t v = 0; v < module.raw.size(); ++v) raw[vname(v)] = module.raw[v];
    j["gamma_G"] = std::move(raw);
    j["gamma_tilde"] = multiplicities_to_json(module.reduced);
    emit(out, j);
    return 0;
  }
  print_header(out, analysis.action());
  print_columns(out, table, {{"Gamma_G", module.raw.coeffs}, {"Gamma~", module.reduced.values}});
  out << "Gamma~ = " << module_expression(module.reduced) << '\n';
  return 0;
}

int cmd_degeq(const RunConfig& config, std::ostream& out) {
  const EquivariantAnalysis analysis(load_action(config));
  const DivisorInput input = load_divisor(config);
  const InvariantDivisor divisor = config.pullback ? pullback_divisor(analysis.action(), input.terms)
                                                   : build_divisor(analysis.action(), input.terms);
  const VirtualCharacter d = analysis.equivariant_degree(divisor);
  std::int64_t total = 0;
  for (std::size_t v = 0; v < d.size(); ++v) total += d[v] * analysis.table().degree(v);
  if (total != divisor.degree()) {
    throw ConsistencyError("dim Deg_Eq(D) = " + std::to_string(total) + " but deg D = " +
                           std::to_string(divisor.degree()));
  }
  if (divisor.is_effective()) {
    const auto closed = analysis.degree_closed_form(divisor);
    if (closed.values != d.coeffs) {
      throw ConsistencyError("closed-form degree " + tuple(closed.values) + " differs from induced " + tuple(d.coeffs));
    }
  }
  const MultiplicityVector dv{MultiplicityKind::d, d.coeffs};
  if (config.format == Format::json) {
    Json j = action_summary(analysis.action());
    j["divisor"] = to_json(input);
    j["degree"] = divisor.degree();
    j["deg_eq"] = multiplicities_to_json(dv);
    emit(out, j);
    return 0;
  }
  print_header(out, analysis.action());
  out << "D = " << divisor_text(input) << (config.pullback ? " (pulled back)" : "") << ", degree "
      << divisor.degree() << '\n';
  print_columns(out, analysis.table(), {{"d", d.coeffs}});
  out << "Deg_Eq(D) = " << module_expression(dv) << '\n';
  return 0;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  const EquivariantAnalysis analysis(load_action(config));
  const DivisorInput input = load_divisor(config);
  const InvariantDivisor divisor = config.pullback ? pullback_divisor(analysis.action(), input.terms)
                                                   : build_divisor(analysis.action(), input.terms);
  const Decomposition result = config.pullback ? analysis.decompose_pullback(input.terms, input.assert_nonspecial)
                                               : analysis.decompose(divisor, input.assert_nonspecial);
  const MultiplicityVector other = analysis.crosscheck_lemma(divisor);
  const bool agree = other.values == result.multiplicities.values;

  if (config.format == Format::json) {
    Json j = action_summary(analysis.action());
    j["divisor"] = to_json(input);
    j["degree"] = divisor.degree();
    j["result"] = decomposition_to_json(result, agree);
    emit(out, j);
  } else {
    print_header(out, analysis.action());
    out << "D = " << divisor_text(input) << (config.pullback ? " (pulled back)" : "") << ", degree "
        << divisor.degree() << ", non-special: " << to_string(result.nonspecial) << '\n';
    print_columns(out, analysis.table(), {{"m", result.multiplicities.values}, {"check", other.values}});
    out << "dimension: sum m(V) dim V = " << result.dimension_sum << ", deg D - g + 1 = " << result.expected_dimension
        << '\n';
    out << "character path: " << (agree ? "agrees" : "DISAGREES") << '\n';
    out << "L_G(D) = " << module_expression(result.multiplicities) << '\n';
  }
  if (!agree) {
    throw ConsistencyError("closed form " + tuple(result.multiplicities.values) + " and character path " +
                           tuple(other.values) + " disagree");
  }
  if (result.dimension_sum != result.expected_dimension) {
    throw ConsistencyError("sum m(V) dim V = " + std::to_string(result.dimension_sum) +
                           " but deg D - g + 1 = " + std::to_string(result.expected_dimension));
  }
  if (result.hypothesis_violated()) {
    throw ConsistencyError("negative multiplicity: D is special, so the non-specialty assertion was wrong");
  }
  return 0;
}

// Checks every identity the library knows on one action. Returns failures.
int selftest_action(const std::string& name, const GroupAction& action, std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& what, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << ": " << what << '\n';
    if (!ok) ++failures;
  };
  auto guarded = [&](const std::string& what, auto&& body) {
    try {
      check(what, body());
    } catch (const Error& e) {
      out << "FAIL " << name << ": " << what << " (" << e.what() << ")\n";
      ++failures;
    }
  };

  const EquivariantAnalysis analysis(action);
  const auto& table = analysis.table();
  const std::size_t k = table.size();

  guarded("genus matches Riemann-Hurwitz", [&] { return genus_from_rh(action) == action.genus(); });
  guarded("sum of a(V) dim V is the genus", [&] {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < k; ++v) s += analysis.chevalley_weil()[v] * table.degree(v);
    return s == action.genus();
  });
  guarded("r = a + a*", [&] {
    const auto a = analysis.chevalley_weil(), d = analysis.analytic_dual(), r = analysis.broughton();
    for (std::size_t v = 0; v < k; ++v)
      if (r[v] != a[v] + d[v]) return false;
    return true;
  });
  guarded("reduced ramification module identity", [&] {
    const auto module = analysis.ramification_module();
    const auto d = analysis.analytic_dual();
    for (std::size_t v = 1; v < k; ++v)
      if (module.reduced[v] != d[v] + (1 - action.gamma()) * table.degree(v)) return false;
    return true;
  });
  guarded("analytic identity class-wise", [&] { return analysis.verify_analytic_identity().holds(); });

  // Every single-site divisor with 0 < r < 4 m, plus one pulled-back divisor.
  guarded("closed form and character path agree on basic multiples", [&] {
    for (std::size_t j = 0; j < action.branch_count(); ++j) {
      const int m = action.branch_points()[j].order;
      for (int r = 1; r < 4 * m; ++r) {
        const auto divisor = build_divisor(action, {{Site::branch(j), r}});
        if (analysis.degree_closed_form(divisor).values != analysis.equivariant_degree(divisor).coeffs) return false;
        if (check_nonspecial_degree(action, divisor) != NonSpecialty::certified) continue;
        const auto result = analysis.decompose(divisor);
        if (result.multiplicities != analysis.crosscheck_lemma(divisor)) return false;
        if (result.dimension_sum != result.expected_dimension) return false;
      }
    }
    return true;
  });
  guarded("pullback matches direct decomposition", [&] {
    const std::int64_t alpha = 2 * action.genus() + 1;
    const std::vector<TermInput> base{{Site::free_orbit(0), alpha}};
    return analysis.decompose_pullback(base).multiplicities ==
           analysis.decompose(pullback_divisor(action, base)).multiplicities;
  });
  return failures;
}

int cmd_selftest(const RunConfig& config, std::ostream& out) {
  std::vector<std::pair<std::string, GroupAction>> actions;
  if (!config.family.empty() || !config.action_path.empty()) {
    actions.emplace_back(config.family.empty() ? config.action_path : config.family, load_action(config));
  } else {
    const Convention conv = config.convention.value_or(Convention::standard);
    actions.emplace_back("klein", family_klein(conv));
    for (int p : {5, 7, 11}) actions.emplace_back("fermat:" + std::to_string(p), family_fermat(p, conv));
    actions.emplace_back("cyclic:12:1,4,7", family_cyclic(12, {1, 4, 7}, conv));
  }
  int failures = 0;
  for (const auto& [name, action] : actions) failures += selftest_action(name, action, out);
  out << (failures == 0 ? "selftest passed\n" : "selftest FAILED: " + std::to_string(failures) + " check(s)\n");
  return failures == 0 ? 0 : 3;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
      return 1;
    case ErrorKind::validation:
      return 2;
    case ErrorKind::consistency:
      return 3;
  }
  return 3;
}

std::string describe(std::string_view name) {
  if (name == "validate") return "check the generating vector and report branching and genus";
  if (name == "chartab") return "print the character table";
  if (name == "cw") return "multiplicities of holomorphic differentials (a, a*, r)";
  if (name == "ramification") return "raw and reduced ramification module";
  if (name == "degeq") return "equivariant degree of an invariant divisor";
  if (name == "decompose") return "irreducible decomposition of L(D)";
  return "run internal consistency checks on built-in or given actions";
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Riemann-Roch: decompose G-invariant divisor spaces into irreducibles", "eqrr"};
  RunConfig config;
  std::string format = "table";
  std::string convention;

  app.require_subcommand(1);
  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--family", config.family, "klein | fermat:<p> | cyclic:<n>:<e1>,<e2>,...");
    sub->add_option("--action", config.action_path, "action JSON file");
    sub->add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--convention", convention, "standard | conjugate")
        ->check(CLI::IsMember({"standard", "conjugate"}));
    if (std::string_view(name) == "degeq" || std::string_view(name) == "decompose") {
      sub->add_option("--divisor", config.divisor, "branch<j>:<r>,free:<r>,...  or @file.json");
      sub->add_flag("--pullback", config.pullback, "read the divisor as sum alpha_Q Q on the quotient");
    }
    if (std::string_view(name) == "decompose") {
      sub->add_flag("--assert-nonspecial", config.assert_nonspecial, "accept D as non-special without a degree bound");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::json : Format::table;
  if (!convention.empty()) config.convention = parse_convention(convention);
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "validate") return cmd_validate(config, out);
    if (config.command == "chartab") return cmd_chartab(config, out);
    if (config.command == "cw") return cmd_cw(config, out);
    if (config.command == "ramification") return cmd_ramification(config, out);
    if (config.command == "degeq") return cmd_degeq(config, out);
    if (config.command == "decompose") return cmd_decompose(config, out);
    if (config.command == "selftest") return cmd_selftest(config, out);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace eqrr::cli
