#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mergesplit/engine.hpp"
#include "mergesplit/error.hpp"
#include "mergesplit/game_spec.hpp"
#include "mergesplit/properties.hpp"
#include "mergesplit/stability.hpp"

namespace mergesplit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string game_path;
  std::string order;
  std::string basis = "v";
  std::string schedule = "first";
  std::uint64_t seed = 0;
  std::string start;
  std::string mode = "dc-lemma";
  std::string partition;
  bool scan = false;
  std::string grid = "0,1/2,1,2,3";
  int max_size = 3;
  bool timing = false;
};

struct Loaded {
  GameInstance instance;
  std::string digest;
};

// FNV-1a, 64 bit, over the raw file bytes.
std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Loaded load(const Options& opt, std::ostream& err) {
  std::ifstream in(opt.game_path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open game file '" + opt.game_path + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Loaded loaded{load_game_spec(bytes), fnv1a_hex(bytes)};
  for (const auto& w : loaded.instance.warnings) err << "note: " << w << '\n';
  return loaded;
}

std::optional<OrderKind> order_flag(const Options& opt) {
  if (opt.order.empty()) return std::nullopt;
  auto kind = parse_order_kind(opt.order);
  if (!kind) throw Error(Errc::parse_error, "unknown order '" + opt.order + "'");
  return kind;
}

ValueBasis basis_flag(const Options& opt) { return opt.basis == "phi" ? ValueBasis::phi : ValueBasis::v; }

ComparisonRelation relation(const Options& opt, const Loaded& loaded) {
  return relation_for(loaded.instance, order_flag(opt), basis_flag(opt));
}

Partition start_partition(const Options& opt, int n) {
  if (opt.start.empty()) return all_partitions(PlayerSet::grand(n)).back();
  return parse_partition_literal(opt.start, n);
}

Json instance_json(const Options& opt, const Loaded& loaded) {
  Json j;
  j["file"] = opt.game_path;
  j["kind"] = to_string(loaded.instance.kind);
  j["n"] = loaded.instance.n;
  j["digest"] = loaded.digest;
  if (loaded.instance.target) j["target"] = loaded.instance.target->literal();
  return j;
}

Json header(const char* command, const Options& opt, const Loaded& loaded, const ComparisonRelation& rel) {
  Json j;
  j["command"] = command;
  j["instance"] = instance_json(opt, loaded);
  j["relation"] = rel.info().describe();
  return j;
}

Json witness_json(const std::vector<WitnessItem>& witness) {
  Json arr = Json::array();
  for (const auto& item : witness) arr.push_back(item);
  return arr;
}

Json verdict_json(const Partition& p, const StabilityVerdict& v) {
  Json j;
  j["partition"] = p.literal();
  j["method"] = to_string(v.method);
  j["stable"] = v.stable;
  if (v.witness) j["witness"] = v.witness->literal();
  if (!v.detail.empty()) j["condition"] = v.detail;
  return j;
}

StabilityVerdict check_with(const std::string& mode, const Partition& p, const ComparisonRelation& rel) {
  if (mode == "dp") return is_dp_stable(p, rel);
  if (mode == "dc-direct") return is_dc_stable_direct(p, rel);
  return is_dc_stable_lemma(p, rel);
}

int cmd_iterate(const Options& opt, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(opt, err);
  const ComparisonRelation rel = relation(opt, loaded);
  const Partition start = start_partition(opt, loaded.instance.n);
  const Schedule schedule = opt.schedule == "random" ? Schedule::random(opt.seed) : Schedule::first_applicable();
  const MoveTrace trace = iterate(start, rel, schedule);
  Json head = header("iterate", opt, loaded, rel);
  head["schedule"] = opt.schedule;
  head["seed"] = opt.seed;
  out << head.dump() << '\n';
  write_trace_jsonl(out, trace);
  return kSuccess;
}

int cmd_outcomes(const Options& opt, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(opt, err);
  const ComparisonRelation rel = relation(opt, loaded);
  const Partition start = start_partition(opt, loaded.instance.n);
  Json j = header("outcomes", opt, loaded, rel);
  j["start"] = start.literal();
  Json outcomes = Json::array();
  for (const Partition& p : all_terminal_outcomes(start, rel)) outcomes.push_back(p.literal());
  j["outcomes"] = std::move(outcomes);
  out << j.dump() << '\n';
  return kSuccess;
}

int cmd_stable(const Options& opt, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(opt, err);
  const ComparisonRelation rel = relation(opt, loaded);
  const int n = loaded.instance.n;
  Json j = header("stable", opt, loaded, rel);
  j["mode"] = opt.mode;
  if (opt.scan) {
    std::optional<Partition> found;
    if (opt.mode == "dc-lemma") {
      found = find_dc_stable(rel, n);
    } else {
      for (const Partition& p : all_partitions(PlayerSet::grand(n))) {
        if (!check_with(opt.mode, p, rel).stable) continue;
        if (found) {
          throw Error(Errc::multiple_stable, "both " + found->literal() + " and " + p.literal() + " are " +
                                                 opt.mode + "-stable");
        }
        found = p;
      }
    }
    j["stable_partition"] = found ? found->literal() : "none";
  } else {
    if (opt.partition.empty()) throw Error(Errc::parse_error, "stable needs --partition or --scan");
    const Partition p = parse_partition_literal(opt.partition, n);
    j["verdict"] = verdict_json(p, check_with(opt.mode, p, rel));
  }
  out << j.dump() << '\n';
  return kSuccess;
}

int cmd_scan(const Options& opt, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(opt, err);
  const ComparisonRelation rel = relation(opt, loaded);
  const int n = loaded.instance.n;
  Json j = header("scan", opt, loaded, rel);
  Json rows = Json::array();
  std::vector<std::string> dc_stable;
  bool agree = true;
  for (const Partition& p : all_partitions(PlayerSet::grand(n))) {
    const bool direct = is_dc_stable_direct(p, rel).stable;
    const bool lemma = is_dc_stable_lemma(p, rel).stable;
    agree = agree && direct == lemma;
    if (lemma) dc_stable.push_back(p.literal());
    Json row;
    row["partition"] = p.literal();
    row["dp"] = is_dp_stable(p, rel).stable;
    row["dc_direct"] = direct;
    row["dc_lemma"] = lemma;
    row["terminal"] = applicable_moves(p, rel).empty();
    Json outcomes = Json::array();
    for (const Partition& t : all_terminal_outcomes(p, rel)) outcomes.push_back(t.literal());
    row["outcomes"] = std::move(outcomes);
    rows.push_back(std::move(row));
  }
  j["partitions"] = std::move(rows);
  j["dc_stable"] = dc_stable;
  out << j.dump() << '\n';
  if (!agree) {
    err << "error: direct and lemma D_c checks disagree\n";
    return kInvariantBreach;
  }
  if (dc_stable.size() > 1) {
    err << "error: more than one D_c-stable partition\n";
    return kInvariantBreach;
  }
  return kSuccess;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(Rational::parse(item));
  if (grid.empty()) throw Error(Errc::parse_error, "empty grid");
  return grid;
}

int cmd_properties(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::optional<OrderKind> kind = order_flag(opt);
  if (!kind) throw Error(Errc::parse_error, "properties needs --order");
  if (opt.max_size < 1 || opt.max_size > 4) throw Error(Errc::parse_error, "--max-size must be 1..4");
  const std::vector<Rational> grid = parse_grid(opt.grid);
  const PropertyReport report = check_order_properties(*kind, grid, opt.max_size);
  const std::vector<Axiom> expected = expected_axioms(*kind);

  Json j;
  j["command"] = "properties";
  j["order"] = to_string(*kind);
  j["basis"] = opt.basis;
  Json g = Json::array();
  for (const Rational& r : grid) g.push_back(r.str());
  j["grid"] = std::move(g);
  j["max_size"] = opt.max_size;
  Json exp = Json::array();
  for (Axiom a : expected) exp.push_back(to_string(a));
  j["expected"] = std::move(exp);
  Json axioms = Json::array();
  bool ok = true;
  for (const AxiomResult& r : report.results) {
    Json a;
    a["axiom"] = to_string(r.axiom);
    a["holds"] = r.holds;
    a["violations"] = r.violations;
    a["witness"] = witness_json(r.witness);
    axioms.push_back(std::move(a));
    if (!r.holds && std::find(expected.begin(), expected.end(), r.axiom) != expected.end()) {
      ok = false;
      err << "note: expected axiom " << to_string(r.axiom) << " fails\n";
    }
  }
  j["axioms"] = std::move(axioms);
  j["semi_linear"] = Json{{"ties", report.semi_linear_ties}, {"other", report.semi_linear_other}};
  j["expected_hold"] = ok;
  out << j.dump() << '\n';
  return ok ? kSuccess : kPropertyFailure;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::inadmissible_order: return kInadmissibleOrder;
    case Errc::multiple_stable:
    case Errc::cap_exceeded: return kInvariantBreach;
    default: return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Coalition formation by merge and split rules"};
  app.name("mergesplit");
  app.require_subcommand(1);

  const auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", opt.game_path, "Game instance file (JSON)")->required();
    sub->add_option("--order", opt.order, "utilitarian|nash|leximin|pareto|...");
    sub->add_option("--basis", opt.basis, "Compare coalition values (v) or payoffs (phi)")
        ->check(CLI::IsMember({"v", "phi"}));
    sub->add_flag("--timing", opt.timing, "Add wall-clock time to the report (stderr)");
  };

  CLI::App* it = app.add_subcommand("iterate", "Apply merge and split rules until none applies");
  add_game(it);
  it->add_option("--start", opt.start, "Start partition literal, default all singletons");
  it->add_option("--schedule", opt.schedule, "first|random")->check(CLI::IsMember({"first", "random"}));
  it->add_option("--seed", opt.seed, "Seed for the random schedule");

  CLI::App* oc = app.add_subcommand("outcomes", "Every terminal partition reachable from a start");
  add_game(oc);
  oc->add_option("--start", opt.start, "Start partition literal, default all singletons");

  CLI::App* st = app.add_subcommand("stable", "Stability verdict for one partition, or a scan");
  add_game(st);
  st->add_option("--mode", opt.mode, "dp|dc-direct|dc-lemma")->check(CLI::IsMember({"dp", "dc-direct", "dc-lemma"}));
  auto* part = st->add_option("--partition", opt.partition, "Partition literal, e.g. 1,2|3");
  st->add_flag("--scan", opt.scan, "Report the unique stable partition or none")->excludes(part);

  CLI::App* pr = app.add_subcommand("properties", "Axiom harness for an order on a value grid");
  pr->add_option("--order", opt.order, "Order kind")->required();
  pr->add_option("--basis", opt.basis, "v|phi")->check(CLI::IsMember({"v", "phi"}));
  pr->add_option("--grid", opt.grid, "Comma-separated rationals");
  pr->add_option("--max-size", opt.max_size, "Largest multiset or vector size (at most 4)");
  pr->add_flag("--timing", opt.timing, "Add wall-clock time to the report (stderr)");

  CLI::App* sc = app.add_subcommand("scan", "Stability and outcomes of every partition");
  add_game(sc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kSuccess;
  try {
    if (it->parsed()) code = cmd_iterate(opt, out, err);
    if (oc->parsed()) code = cmd_outcomes(opt, out, err);
    if (st->parsed()) code = cmd_stable(opt, out, err);
    if (pr->parsed()) code = cmd_properties(opt, out, err);
    if (sc->parsed()) code = cmd_scan(opt, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  if (opt.timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    err << "timing: " << ms << " ms\n";
  }
  return code;
}

}  // namespace mergesplit::cli
