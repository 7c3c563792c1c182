#include "mmalign/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "mmalign/dsl.hpp"
#include "mmalign/genfunc.hpp"

namespace mmalign::cli {

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> all = {"count",  "parts",   "enumerate", "sample", "diagonal", "formula",
                                               "approx", "verify",  "table4",    "table5", "gf"};
  return all;
}

namespace {

// Raw flag values shared by every subcommand; only one subcommand parses.
struct RawOptions {
  std::string steps, lengths, id;
  std::optional<unsigned> k, max, bound_m;
  std::uint64_t seed = 0;
  unsigned samples = 1;
  std::size_t dims = 3;
  unsigned long cap = kDefaultEnumerationCap;
  bool json = false;
  bool list = false;
};

struct VerbSpec {
  const char* name;
  const char* help;
  // which flags the verb accepts
  bool steps, lengths, k, max, seed, n, id, m, cap, list, dims;
};

const std::vector<VerbSpec>& verb_specs() {
  static const std::vector<VerbSpec> specs = {
      {"count", "number of S-alignments of --lengths", true, true, false, false, false, false, false, false, false,
       false, false},
      {"parts", "alignments with exactly --k columns (all k without --k)", true, true, true, false, false, false,
       false, false, false, false, false},
      {"enumerate", "list every alignment, one matrix per line", true, true, false, false, false, false, false, false,
       true, false, false},
      {"sample", "--n uniform samples for --seed", true, true, false, false, true, true, false, false, false, false,
       false},
      {"diagonal", "a(l,...,l) for l = 1..--max", true, false, false, true, false, false, false, false, false, false,
       false},
      {"formula", "evaluate an exact catalog formula (--list for the catalog)", false, true, false, false, false,
       false, true, false, false, true, false},
      {"approx", "evaluate an asymptotic catalog formula", false, true, false, false, false, false, true, true, false,
       false, false},
      {"verify", "cross-check closed forms, generating function and multinomial sums against the DP", true, true,
       false, true, false, false, false, false, false, false, true},
      {"table4", "diagonal counts for box(1..2,3) and unit(3)", false, false, false, true, false, false, false, false,
       false, false, false},
      {"table5", "exact vs asymptotic diagonal counts for box(1..2,3)", false, false, false, true, false, false, false,
       false, false, false, false},
      {"gf", "generating-function coefficients over the box 0..--lengths (of P^k with --k)", true, true, true, false,
       false, false, false, false, false, false, false},
  };
  return specs;
}

[[noreturn]] void usage(const std::string& message) { throw UsageError(message); }

void require(bool present, const std::string& verb, const std::string& flag) {
  if (!present) usage(verb + " requires " + flag);
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  CLI::App app{"Count, enumerate and sample multiple sequence alignments over a step set"};
  app.name("mmalign");
  app.require_subcommand(1);
  RawOptions raw;
  std::map<std::string, CLI::App*> subs;
  for (const auto& v : verb_specs()) {
    auto* sub = app.add_subcommand(v.name, v.help);
    subs[v.name] = sub;
    if (v.steps) sub->add_option("--steps", raw.steps, "step-set expression, e.g. \"box(1..2,3)\"");
    if (v.lengths) sub->add_option("--lengths", raw.lengths, "comma-separated sequence lengths, e.g. 4,5");
    if (v.k) sub->add_option("--k", raw.k, "number of columns");
    if (v.max) sub->add_option("--max", raw.max, "largest diagonal length");
    if (v.seed) sub->add_option("--seed", raw.seed, "random seed");
    if (v.n) sub->add_option("--n", raw.samples, "number of samples")->check(CLI::PositiveNumber);
    if (v.id) sub->add_option("--id", raw.id, "formula id (see formula --list)");
    if (v.m) sub->add_option("--M", raw.bound_m, "part bound for comp_boundedM_asym");
    if (v.cap) sub->add_option("--cap", raw.cap, "refuse to enumerate more alignments than this");
    if (v.list) sub->add_flag("--list", raw.list, "list the formula catalog");
    if (v.dims) sub->add_option("--dims", raw.dims, "largest N for a catalog verify")->check(CLI::PositiveNumber);
    sub->add_flag("--json", raw.json, "emit one JSON object");
  }

  if (!args.empty() && !args[0].starts_with("-") && !subs.count(args[0])) {
    std::string known;
    for (const auto& v : verbs()) known += (known.empty() ? "" : ", ") + v;
    usage("unknown verb '" + args[0] + "' (expected one of " + known + ")");
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) throw HelpRequested{sub->help()};
    }
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  Command cmd;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cmd.verb = name;
  }
  const auto& verb = cmd.verb;
  cmd.k = raw.k;
  cmd.max = raw.max;
  cmd.seed = raw.seed;
  cmd.samples = raw.samples;
  cmd.max_dimension = raw.dims;
  cmd.cap = raw.cap;
  cmd.json = raw.json;
  cmd.list = raw.list;
  if (raw.bound_m) cmd.bound_m = *raw.bound_m;

  if (!raw.lengths.empty()) {
    try {
      cmd.lengths = parse_lengths(raw.lengths);
    } catch (const Error& e) {
      usage(std::string("--lengths: ") + e.what());
    }
  }
  if (!raw.steps.empty()) {
    try {
      std::optional<std::size_t> hint;
      if (cmd.lengths) hint = cmd.lengths->dimension();
      cmd.steps = parse_step_set(raw.steps, hint);
    } catch (const Error& e) {
      usage(std::string("--steps: ") + e.what());
    }
    if (cmd.lengths && cmd.lengths->dimension() != cmd.steps->dimension()) {
      usage("--lengths has " + std::to_string(cmd.lengths->dimension()) + " entries but --steps has dimension " +
            std::to_string(cmd.steps->dimension()));
    }
  }
  if (!raw.id.empty()) {
    try {
      cmd.formula = formula_from_name(raw.id);
    } catch (const UnknownFormula& e) {
      usage(std::string("--id: ") + e.what());
    }
  }

  if (verb == "count" || verb == "parts" || verb == "enumerate" || verb == "sample" || verb == "gf") {
    require(cmd.steps.has_value(), verb, "--steps");
    require(cmd.lengths.has_value(), verb, "--lengths");
  } else if (verb == "diagonal") {
    require(cmd.steps.has_value(), verb, "--steps");
    require(cmd.max.has_value(), verb, "--max");
  } else if (verb == "formula") {
    if (!cmd.list) {
      require(cmd.formula.has_value(), verb, "--id (or --list)");
      require(cmd.lengths.has_value(), verb, "--lengths");
    }
  } else if (verb == "approx") {
    require(cmd.formula.has_value(), verb, "--id");
    if (cmd.formula != FormulaId::unitcube3_growth) require(cmd.lengths.has_value(), verb, "--lengths");
    if (cmd.formula == FormulaId::comp_boundedM_asym) require(raw.bound_m.has_value(), verb, "--M");
  } else if (verb == "verify") {
    if (cmd.steps) {
      require(cmd.lengths.has_value() || cmd.max.has_value(), verb, "--lengths or --max with --steps");
    } else if (cmd.lengths) {
      usage("verify --lengths needs --steps");
    }
  }
  return cmd;
}

namespace {

Cell lengths_cell(const LengthTuple& l) { return Cell::text(l.to_string()); }

Report make_report(const Command& cmd, std::vector<Column> columns) {
  Report r;
  r.command = cmd.verb;
  if (cmd.steps) r.inputs["steps"] = cmd.steps->to_string();
  if (cmd.lengths) r.inputs["lengths"] = cmd.lengths->to_string();
  r.columns = std::move(columns);
  return r;
}

Report count_report(const Command& cmd) {
  auto r = make_report(cmd, {{"lengths", "input"}, {"count", "count table"}});
  r.text_skip = 1;
  r.rows.push_back({lengths_cell(*cmd.lengths), Cell::exact(count(*cmd.steps, *cmd.lengths))});
  return r;
}

Report parts_report(const Command& cmd) {
  const auto& s = *cmd.steps;
  const auto& l = *cmd.lengths;
  auto r = make_report(cmd, {{"lengths", "input"}, {"k", "input"}, {"count", "parts table"}});
  if (cmd.k) {
    r.inputs["k"] = *cmd.k;
    r.text_skip = 2;
    r.rows.push_back({lengths_cell(l), Cell::integer(*cmd.k), Cell::exact(count_with_parts(s, l, *cmd.k))});
  } else {
    r.text_skip = 1;
    r.text_header = true;
    const auto dist = parts_distribution(s, l);
    for (std::size_t k = 0; k < dist.size(); ++k) {
      r.rows.push_back({lengths_cell(l), Cell::integer(static_cast<long long>(k)), Cell::exact(dist[k])});
    }
  }
  return r;
}

Report enumerate_report(const Command& cmd) {
  auto r = make_report(cmd, {{"lengths", "input"}, {"matrix", "enumeration"}});
  r.inputs["cap"] = cmd.cap;
  r.text_skip = 1;
  for (const auto& m : enumerate(*cmd.steps, *cmd.lengths, cmd.cap)) {
    r.rows.push_back({lengths_cell(*cmd.lengths), Cell::text(m.to_string())});
  }
  return r;
}

Report sample_report(const Command& cmd) {
  auto r = make_report(cmd, {{"lengths", "input"}, {"seed", "input"}, {"matrix", "uniform sampler"}});
  r.inputs["seed"] = cmd.seed;
  r.inputs["n"] = cmd.samples;
  r.text_skip = 2;
  Sampler sampler(*cmd.steps, *cmd.lengths, cmd.seed);
  for (unsigned i = 0; i < cmd.samples; ++i) {
    r.rows.push_back({lengths_cell(*cmd.lengths), Cell::integer(static_cast<long long>(cmd.seed)),
                      Cell::text(sampler.next().to_string())});
  }
  return r;
}

Report formula_list_report(const Command& cmd) {
  auto r = make_report(cmd, {{"id", "catalog"},
                             {"step_set", "catalog"},
                             {"arity", "catalog"},
                             {"kind", "catalog"},
                             {"diagonal", "catalog"},
                             {"label", "catalog"}});
  r.text_header = true;
  for (const auto& f : formula_catalog()) {
    std::string arity = std::to_string(f.min_dimension);
    if (f.max_dimension == 0) {
      arity += "+";
    } else if (f.max_dimension != f.min_dimension) {
      arity += ".." + std::to_string(f.max_dimension);
    }
    std::string label(f.label);
    std::replace(label.begin(), label.end(), ' ', '_');
    r.rows.push_back({Cell::text(std::string(f.name)), Cell::text(std::string(f.step_set)), Cell::text(arity),
                      Cell::text(f.exact ? "exact" : "approx"), Cell::text(f.diagonal_only ? "yes" : "no"),
                      Cell::text(label)});
  }
  return r;
}

Report formula_report(const Command& cmd) {
  if (cmd.list) return formula_list_report(cmd);
  const auto id = *cmd.formula;
  auto r = make_report(cmd, {{"lengths", "input"}, {"id", "input"}, {"value", std::string(formula_name(id))}});
  r.inputs["id"] = std::string(formula_name(id));
  r.text_skip = 2;
  r.rows.push_back({lengths_cell(*cmd.lengths), Cell::text(std::string(formula_name(id))),
                    Cell::exact(evaluate_exact(id, *cmd.lengths))});
  return r;
}

Report approx_report(const Command& cmd) {
  const auto id = *cmd.formula;
  const auto lengths = cmd.lengths.value_or(LengthTuple::zero(3));
  auto r = make_report(cmd, {{"lengths", "input"},
                             {"id", "input"},
                             {"value", std::string(formula_name(id))},
                             {"log_value", std::string(formula_name(id))}});
  r.inputs["id"] = std::string(formula_name(id));
  if (id == FormulaId::comp_boundedM_asym) r.inputs["M"] = cmd.bound_m;
  r.text_skip = 2;
  const auto v = evaluate_approx(id, lengths, cmd.bound_m);
  Cell value = Cell::real(v.value, -1);
  if (!std::isfinite(v.value)) {
    // beyond double range: mantissa and decimal exponent from the logarithm
    const auto [mantissa, exponent] = v.mantissa_exponent();
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12ge%+ld", mantissa, exponent);
    value = Cell::text(buffer);
  }
  r.rows.push_back({lengths_cell(lengths), Cell::text(std::string(formula_name(id))), value,
                    Cell::real(v.log_value, -1)});
  return r;
}

Report gf_report(const Command& cmd) {
  const auto& box = *cmd.lengths;
  auto r = make_report(cmd, {{"m", "input"}, {"coefficient", cmd.k ? "P(z)^k" : "1/(1 - P(z))"}});
  r.text_header = true;
  if (cmd.k) r.inputs["k"] = *cmd.k;
  const SeriesBox series = cmd.k ? fixed_k_coefficients(*cmd.steps, box, *cmd.k) : series_coefficients(*cmd.steps, box);
  const auto& index = series.index();
  for (std::size_t f = 0; f < index.size(); ++f) {
    r.rows.push_back({Cell::text(LengthTuple(index.unflatten(f)).to_string()), Cell::exact(series.coeff_flat(f))});
  }
  return r;
}

}  // namespace

std::pair<Report, int> execute(const Command& cmd) {
  const auto& verb = cmd.verb;
  if (verb == "count") return {count_report(cmd), kExitOk};
  if (verb == "parts") return {parts_report(cmd), kExitOk};
  if (verb == "enumerate") return {enumerate_report(cmd), kExitOk};
  if (verb == "sample") return {sample_report(cmd), kExitOk};
  if (verb == "diagonal") return {diagonal_report(*cmd.steps, *cmd.max), kExitOk};
  if (verb == "formula") return {formula_report(cmd), kExitOk};
  if (verb == "approx") return {approx_report(cmd), kExitOk};
  if (verb == "table4") return {table4_report(cmd.max.value_or(10)), kExitOk};
  if (verb == "table5") return {table5_report(cmd.max.value_or(20)), kExitOk};
  if (verb == "gf") return {gf_report(cmd), kExitOk};
  if (verb == "verify") {
    VerifyResult result;
    if (cmd.steps) {
      const auto box = cmd.lengths ? *cmd.lengths : LengthTuple::diagonal(cmd.steps->dimension(), *cmd.max);
      result = verify_step_set(*cmd.steps, box);
    } else {
      result = verify_catalog(cmd.max.value_or(8), cmd.max_dimension);
    }
    return {std::move(result.report), result.passed ? kExitOk : kExitMismatch};
  }
  throw UsageError("unknown verb '" + verb + "'");
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    const auto [report, code] = execute(cmd);
    if (cmd.json) {
      out << report.to_json().dump(2) << '\n';
    } else {
      out << report.to_text();
    }
    return code;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(cmd, out, err);
}

}  // namespace mmalign::cli
