#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <json.hpp>

#include "boolift/acceptance.hpp"
#include "boolift/boolean_function.hpp"
#include "boolift/combinatorics.hpp"
#include "boolift/comm.hpp"
#include "boolift/error.hpp"
#include "boolift/families.hpp"
#include "boolift/function_spec.hpp"
#include "boolift/patterns.hpp"
#include "boolift/query_models.hpp"
#include "boolift/transforms.hpp"

namespace boolift::cli {

using nlohmann::json;

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

json subsets(const SetFamily& family) {
  json out = json::array();
  for (auto m : family.sets) out.push_back(mask_to_subset(m));
  return out;
}

template <class Coeffs>
json spectrum_json(const Coeffs& coeffs) {
  json out = json::array();
  for (const auto& [mask, c] : coeffs) out.push_back({hex(mask), c});
  return out;
}

std::string big(const BigInt& v) { return v.str(); }

struct Common {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t cap_cells = Limits{}.max_cells;
  std::size_t cap_rank = Limits{}.max_rank_dim;
  std::uint64_t cap_search = Limits{}.max_search;
  double eps = 1.0 / 3.0;

  Limits limits() const {
    Limits l;
    l.max_cells = cap_cells;
    l.max_rank_dim = cap_rank;
    l.max_search = cap_search;
    return l;
  }
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json warnings = json::array();
};

void write_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j = {{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"warnings", r.warnings}};
    out << j.dump(2) << '\n';
    return;
  }
  const json flat = json{{"results", r.results}}.flatten();
  const bool csv = format == "csv";
  if (csv) out << "key,value\n";
  for (const auto& [pointer, value] : flat.items()) {
    std::string key = pointer.substr(std::string("/results/").size());
    std::replace(key.begin(), key.end(), '/', '.');
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (csv) {
      const bool quote = text.find_first_of(",\"\n") != std::string::npos;
      std::string escaped;
      for (char c : text) escaped += c == '"' ? std::string("\"\"") : std::string(1, c);
      out << key << ',' << (quote ? "\"" + escaped + "\"" : text) << '\n';
    } else {
      out << key << ": " << text << '\n';
    }
  }
  if (!csv)
    for (const auto& w : r.warnings) out << "warning: " << w.get<std::string>() << '\n';
}

std::vector<std::string> measures_or(const std::string& given, std::vector<std::string> fallback) {
  return given.empty() ? fallback : split(given);
}

[[noreturn]] void unknown_measure(const std::string& m) { throw CLI::ValidationError("--measures", "unknown measure '" + m + "'"); }

int cmd_eval(const Common& c, const std::string& spec_text, const std::vector<std::string>& xs, Report& r) {
  const auto spec = parse_spec(spec_text);
  const auto f = build(spec, c.limits());
  r.inputs["spec"] = render_spec(spec);
  r.results["arity"] = f.arity();
  r.results["total"] = f.is_total();
  if (xs.empty()) {
    r.results["serialized"] = serialize_function(f);
    return Ok;
  }
  json values = json::object();
  for (const auto& text : xs) {
    std::size_t used = 0;
    std::uint64_t x = 0;
    try {
      x = std::stoull(text, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || x >= f.input_count())
      throw CLI::ValidationError("--x", "input '" + text + "' is not an integer below 2^n");
    if (f.defined(x)) {
      values[text] = f(x) ? 1 : 0;
    } else {
      values[text] = nullptr;
      r.warnings.push_back("input " + text + " is outside the domain");
    }
  }
  r.results["values"] = values;
  return Ok;
}

int cmd_analyze(const Common& c, const std::string& spec_text, const std::string& measures, Report& r) {
  const auto spec = parse_spec(spec_text);
  const auto limits = c.limits();
  const auto f = build(spec, limits);
  r.inputs["spec"] = render_spec(spec);
  r.results["arity"] = f.arity();
  const auto wanted = measures_or(measures, {"spar", "fourier", "pat", "switch", "alt"});
  for (const auto& m : wanted) {
    if (m == "spar") {
      r.results["spar"] = mobius_sparsity(f);
    } else if (m == "fourier") {
      r.results["fourier01"] = fourier_sparsity(f, FourierConvention::ZeroOne);
      r.results["fourierpm"] = fourier_sparsity(f, FourierConvention::PlusMinus);
    } else if (m == "pat") {
      r.results["pat"] = pattern_complexity(f, limits);
    } else if (m == "switch") {
      if (is_symmetric(f))
        r.results["switch"] = switch_value(f);
      else
        r.warnings.push_back("switch skipped: function is not symmetric");
    } else if (m == "alt") {
      r.results["alt"] = alternating_number(f, limits);
    } else if (m == "spectrum") {
      r.results["spectrum"] = spectrum_json(mobius_spectrum(f).coeffs);
    } else if (m == "fourier-spectrum") {
      r.results["fourier_spectrum"] = spectrum_json(fourier_spectrum(f, FourierConvention::ZeroOne).coeffs);
    } else if (m == "titsworth") {
      const auto t = titsworth_check(f, limits);
      r.results["titsworth"]["ok"] = t.ok;
      if (t.violating) r.results["titsworth"]["violating"] = hex(*t.violating);
    } else if (m == "trace") {
      const auto t = pattern_growth_trace(f, limits);
      json steps = json::array();
      for (const auto& s : t.steps)
        steps.push_back({{"iteration", s.iteration},
                         {"tracked", s.tracked.size()},
                         {"partial_patterns", s.partial_pattern_count},
                         {"max_extensions", s.max_extensions},
                         {"bound_ok", s.bound_ok},
                         {"extension_ok", s.extension_ok}});
      r.results["trace"] = {{"iterations", t.iterations}, {"final_ok", t.final_ok}, {"steps", steps}};
    } else if (m == "depends") {
      r.results["irrelevant"] = depends_on_all(f).missing();
    } else {
      unknown_measure(m);
    }
  }
  return Ok;
}

int cmd_compose(const Common& c, const std::string& spec_text, const std::string& gadget_text,
                const std::string& measures, int vc_cap, Report& r) {
  const auto spec = parse_spec(spec_text);
  const auto limits = c.limits();
  const auto f = build(spec, limits);
  const auto g = parse_gadget(gadget_text);
  r.inputs["spec"] = render_spec(spec);
  r.inputs["gadget"] = gadget_text;
  const auto wanted = measures_or(measures, {"oneway", "rank"});
  const bool ip_gadget = gadget_text.rfind("ip:", 0) == 0;
  std::optional<CommMatrix> matrix;
  auto m = [&]() -> const CommMatrix& {
    if (!matrix) matrix = comm_matrix(compose(f, g, limits), limits);
    return *matrix;
  };
  std::optional<int> vc;
  bool vc_warned = false;
  auto vc_value = [&]() -> std::optional<int> {
    if (!m().is_total()) {
      if (!vc_warned) r.warnings.push_back("vc skipped: matrix is partial");
      vc_warned = true;
      return std::nullopt;
    }
    if (!vc) {
      const auto v = vc_dim_bruteforce(m(), vc_cap, limits);
      vc = v.vc;
      r.results["vc"] = v.vc;
      r.results["vc_capped"] = v.capped;
      if (v.capped) r.warnings.push_back("vc reached the cap " + std::to_string(vc_cap) + "; value is a lower bound");
    }
    return vc;
  };
  for (const auto& name : wanted) {
    if (name == "oneway") {
      if (m().is_total()) {
        r.results["oneway"] = one_way_cc(m());
      } else {
        const auto p = one_way_cc_partial(m(), limits);
        r.results["oneway"] = p.cc;
        r.results["chromatic"] = p.chromatic;
        r.results["row_classes"] = p.row_classes;
      }
    } else if (name == "rank") {
      if (!m().is_total()) {
        r.warnings.push_back("rank skipped: matrix is partial");
        continue;
      }
      r.results["rank"] = matrix_rank(m(), limits);
    } else if (name == "vc") {
      vc_value();
    } else if (name == "klauck") {
      const auto d = vc_value();
      if (!d) continue;
      r.results["klauck"] = {{"eps", c.eps},
                             {"classical", klauck_bound(*d, c.eps, false)},
                             {"entangled", klauck_bound(*d, c.eps, true)}};
    } else if (name == "witness") {
      if (!ip_gadget) throw PreconditionError("witness needs an ip:B gadget");
      if (!f.is_total()) {
        r.warnings.push_back("witness skipped: function is partial");
        continue;
      }
      const int b = g.bob_bits();
      const auto w = ip_shattering_witness(f, b, limits);
      json cols = json::array(), rows = json::array();
      for (auto y : w.columns) cols.push_back(hex(y));
      for (auto x : w.rows) rows.push_back(hex(x));
      r.results["witness"] = {{"columns", cols},
                              {"rows", rows},
                              {"shattered", shattering_check(m(), w.columns)},
                              {"realizes", witness_realizes_patterns(f, w)}};
    } else if (name == "gadget") {
      const auto gc = gadget_property_check(g, limits);
      json wit = json::array();
      for (auto a : gc.witness) wit.push_back(hex(a));
      r.results["gadget"] = {{"ok", gc.ok}, {"witness", wit}};
    } else if (name == "audit") {
      if (!ip_gadget) throw PreconditionError("audit needs an ip:B gadget");
      const auto a = lift_audit(f, g.bob_bits(), limits);
      r.results["audit"] = {{"cc", a.cc},
                            {"c", a.c_messages},
                            {"colors", a.colors},
                            {"heavy_color", a.heavy_color},
                            {"heavy_part_size", a.heavy_part_size},
                            {"x1", hex(a.x1)},
                            {"x2", hex(a.x2)},
                            {"agreement", mask_to_subset(a.agreement)},
                            {"determined", a.determined},
                            {"small_agreement", a.small_agreement},
                            {"precondition", a.precondition}};
    } else if (name == "rows") {
      r.results["rows"] = rows_hex(m());
    } else if (name == "pbm") {
      r.results["pbm"] = to_pbm(m());
    } else {
      unknown_measure(name);
    }
  }
  return Ok;
}

int cmd_query(const Common& c, const std::string& spec_text, const std::string& model, bool unrestricted, Report& r) {
  const auto spec = parse_spec(spec_text);
  const auto limits = c.limits();
  const auto f = build(spec, limits);
  r.inputs["spec"] = render_spec(spec);
  r.inputs["model"] = model;
  if (model == "ddt") {
    const auto d = nonadaptive_dt(f, limits);
    r.results["k"] = d.k;
    r.results["variables"] = mask_to_subset(d.variables);
    return Ok;
  }
  QueryOptions o;
  o.unrestricted = unrestricted;
  const auto q = model == "naadt" ? naadt_exact(f, o, limits) : napdt_exact(f, o, limits);
  r.results["k"] = q.k;
  r.results["basis"] = subsets(q.basis);
  r.results["candidates"] = q.candidates;
  r.results["nodes"] = q.nodes;
  return Ok;
}

int cmd_symmetric(const Common& c, const std::string& spec_text, bool check, bool show_family, Report& r) {
  const auto spec = parse_spec(spec_text);
  const auto limits = c.limits();
  const auto f = build(spec, limits);
  r.inputs["spec"] = render_spec(spec);
  r.inputs["seed"] = c.seed;
  if (!is_symmetric(f)) throw PreconditionError("symmetric-naadt needs a symmetric function");
  SymmetricNaadtPlan plan;
  try {
    plan = symmetric_naadt(f, c.seed, limits);
  } catch (const NoSmallPlan& e) {
    r.warnings.push_back(e.what());
    r.results["switch"] = switch_value(f);
    r.results["queries"] = f.arity();
    r.results["fallback"] = true;
    return Ok;
  }
  r.results["switch"] = plan.k;
  r.results["queries"] = plan.family.size();
  r.results["attempts"] = plan.attempts;
  r.results["default_value"] = plan.default_value;
  if (plan.k > 0) r.results["bound"] = default_separating_size(f.arity(), plan.k);
  if (show_family) r.results["family"] = subsets(plan.family);
  if (check) {
    std::uint64_t bad = 0;
    for (std::uint64_t x = 0; x < f.input_count(); ++x) bad += symmetric_naadt_eval(plan, x) != f(x);
    r.results["agrees"] = bad == 0;
    if (bad) return VerifyFailed;
  }
  return Ok;
}

int cmd_families(const Common& c, int q, int n, int d, std::optional<int> radius, const std::string& measures,
                 Report& r) {
  const auto limits = c.limits();
  r.inputs = {{"q", q}, {"n", n}, {"d", d}};
  const int rr = radius ? *radius : agr_radius(q, d);
  r.inputs["r"] = rr;
  const auto wanted = measures_or(measures, {"size", "inter", "agr"});
  for (const auto& m : wanted) {
    if (m == "size") {
      r.results["size"] = big(br_size(q, n, d, rr));
    } else if (m == "inter") {
      r.results["inter_bound"] = big(br_inter_bound(q, n, d, rr));
    } else if (m == "agr") {
      r.results["agr"] = big(agr(q, n, d));
    } else if (m == "intersecting") {
      const auto fam = br_enumerate(q, n, d, rr, limits);
      const auto ic = intersecting_check(fam, d, limits);
      r.results["enumerated"] = fam.size();
      r.results["intersecting"] = ic.ok;
      if (!ic.ok) r.results["violating_pair"] = {ic.first, ic.second};
    } else if (m == "list") {
      r.results["members"] = render_family(br_enumerate(q, n, d, rr, limits));
    } else if (m == "packing") {
      r.results["packing"] = packing_check(q, n, d);
    } else if (m == "largeq") {
      const bool applies = largeq_applies(q, n, d);
      r.results["largeq_applies"] = applies;
      if (applies) r.results["largeq"] = largeq_check(q, n, d);
    } else {
      unknown_measure(m);
    }
  }
  return Ok;
}

int cmd_verify(const Common& c, const std::string& suite, const std::string& level, Report& r, std::ostream& out) {
  if (suite != "paper") throw CLI::ValidationError("--suite", "only the 'paper' suite exists");
  acceptance::Options o;
  o.level = level == "full" ? acceptance::Level::Full : acceptance::Level::Fast;
  o.seed = c.seed;
  o.limits = c.limits();
  r.inputs = {{"suite", suite}, {"level", level}, {"seed", c.seed}};
  int failed = 0;
  for (const auto& crit : acceptance::criteria()) {
    const auto res = acceptance::run_criterion(crit, o);
    failed += !res.passed;
    std::ostringstream id;
    id << std::setw(2) << std::setfill('0') << res.id;
    r.results["c" + id.str()] = {{"name", res.name},
                                 {"passed", res.passed},
                                 {"seconds", std::round(res.seconds * 1000) / 1000},
                                 {"target_seconds", res.target_seconds},
                                 {"detail", res.detail}};
    if (res.seconds > res.target_seconds)
      r.warnings.push_back("criterion " + std::to_string(res.id) + " exceeded its runtime target");
    if (c.format == "text") out << acceptance::format_line(res) << std::endl;
  }
  r.results["failed"] = failed;
  return failed ? VerifyFailed : Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Boolean function and lifting computations", "boolift"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", common.seed, "Seed for randomized constructions");
  app.add_option("--cap-cells", common.cap_cells, "Maximum materialized matrix cells");
  app.add_option("--cap-rank", common.cap_rank, "Maximum matrix dimension for rank");
  app.add_option("--cap-search", common.cap_search, "Maximum enumeration work");
  app.add_option("--eps", common.eps, "Error for the Klauck bound")->check(CLI::Range(0.0, 0.5));

  std::string spec, gadget = "and", measures, model, suite = "paper", level = "fast";
  std::vector<std::string> xs;
  int vc_cap = 4, q = 3, n = 0, d = 1;
  std::optional<int> radius;
  bool unrestricted = false, check = false, show_family = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a function or print its serialized table");
  eval->add_option("--spec", spec, "Function spec")->required();
  eval->add_option("--x", xs, "Inputs (integers, x_1 is the low bit)");

  auto* analyze = app.add_subcommand("analyze", "Spectral and pattern measures");
  analyze->add_option("--spec", spec, "Function spec")->required();
  analyze->add_option("--measures", measures,
                      "spar,fourier,pat,switch,alt,spectrum,fourier-spectrum,titsworth,trace,depends");

  auto* comp = app.add_subcommand("compose", "Measures of the composed communication matrix");
  comp->add_option("--spec", spec, "Outer function spec")->required();
  comp->add_option("--gadget", gadget, "and | xor | ip:B | addr:B | table:HEX:B1:B2");
  comp->add_option("--measures", measures, "oneway,rank,vc,klauck,witness,gadget,audit,rows,pbm");
  comp->add_option("--vc-cap", vc_cap, "Largest VC dimension searched")->check(CLI::Range(0, 64));

  auto* query = app.add_subcommand("query", "Non-adaptive query complexities");
  query->add_option("--spec", spec, "Function spec")->required();
  query->add_option("--model", model, "Query model")->required()->check(CLI::IsMember({"ddt", "naadt", "napdt"}));
  query->add_flag("--unrestricted", unrestricted, "Search every nonempty mask");

  auto* sym = app.add_subcommand("symmetric-naadt", "AND-query plan for a symmetric function");
  sym->add_option("--spec", spec, "Symmetric function spec")->required();
  sym->add_flag("--check", check, "Evaluate the plan on every input");
  sym->add_flag("--family", show_family, "Print the query sets");

  auto* fam = app.add_subcommand("families", "Intersecting-family sizes and bounds");
  fam->add_option("--q", q, "Alphabet size")->check(CLI::Range(2, 1 << 20));
  fam->add_option("--n", n, "String length")->required()->check(CLI::Range(0, 100000));
  fam->add_option("--d", d, "Agreement threshold")->check(CLI::Range(0, 100000));
  fam->add_option("--r", radius, "Radius (default floor((d-1)/(q-2)))")->check(CLI::Range(0, 100000));
  fam->add_option("--measures", measures, "size,inter,agr,intersecting,list,packing,largeq");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--suite", suite, "Suite name");
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "boolift: " << e.what() << '\n';
    return Usage;
  }

  Report report;
  report.command = app.get_subcommands().front()->get_name();
  int code = Ok;
  try {
    if (*eval) code = cmd_eval(common, spec, xs, report);
    else if (*analyze) code = cmd_analyze(common, spec, measures, report);
    else if (*comp) code = cmd_compose(common, spec, gadget, measures, vc_cap, report);
    else if (*query) code = cmd_query(common, spec, model, unrestricted, report);
    else if (*sym) code = cmd_symmetric(common, spec, check, show_family, report);
    else if (*fam) code = cmd_families(common, q, n, d, radius, measures, report);
    else if (*verify) code = cmd_verify(common, suite, level, report, out);
  } catch (const CapExceeded& e) {
    err << "boolift: cap exceeded: " << e.what() << '\n';
    return Cap;
  } catch (const CLI::ParseError& e) {
    err << "boolift: " << e.what() << '\n';
    return Usage;
  } catch (const Error& e) {
    err << "boolift: " << e.what() << '\n';
    return Usage;
  }
  if (report.command == "verify" && common.format == "text")
    out << (code == Ok ? "verify: all criteria passed" : "verify: failures") << '\n';
  else
    write_report(report, common.format, out);
  return code;
}

}  // namespace boolift::cli
