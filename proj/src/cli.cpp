#include "kmcells/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kmcells/flag.hpp"

namespace kmcells::cli {

using ojson = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ResolvedDiagram {
  Gcm gcm;
  NodeSubset J;
};

ResolvedDiagram resolve(const DiagramArg& d, bool default_sub_is_all_but_last) {
  if (d.named.empty() == d.file.empty())
    throw UsageError("give exactly one of a named type or --file for each diagram");
  Gcm g = d.named.empty() ? parse_gcm_text(read_file(d.file)) : build_named(d.named);
  NodeSubset J;
  if (d.has_sub) {
    J = NodeSubset::parse(d.sub);
  } else if (default_sub_is_all_but_last && g.rank() > 0) {
    J = NodeSubset::range(0, g.rank() - 2);
  }
  for (int v : J.nodes())
    if (v >= g.rank())
      throw UsageError("--sub index " + std::to_string(v + 1) + " exceeds rank " + std::to_string(g.rank()));
  return {std::move(g), std::move(J)};
}

std::string display_name(const DiagramArg& d, const Gcm& g) {
  if (!g.name().empty()) return g.name();
  return d.file;
}

ojson subset_json(const NodeSubset& J) {
  ojson a = ojson::array();
  for (int v : J.nodes()) a.push_back(v + 1);
  return a;
}

ojson word_json(const std::vector<int>& word) {
  ojson a = ojson::array();
  for (int i : word) a.push_back(i + 1);
  return a;
}

ojson descriptor_json(const GroupDescriptor& g) {
  ojson j;
  j["group"] = g.str();
  j["known"] = !g.is_unknown();
  j["free_rank"] = g.free_rank();
  j["torsion"] = g.torsion();
  j["countable"] = to_string(g.countable());
  return j;
}

ojson trace_json(const std::vector<TraceLine>& trace) {
  ojson a = ojson::array();
  for (const auto& t : trace) {
    ojson j;
    j["degree"] = t.degree ? ojson(*t.degree) : ojson(nullptr);
    j["result"] = t.result;
    j["rule"] = t.rule;
    j["citation"] = t.citation;
    j["line"] = t.str();
    a.push_back(std::move(j));
  }
  return a;
}

ojson table_json(const CellTable& t) {
  ojson j;
  j["type"] = t.source.gcm_name;
  j["subset"] = subset_json(t.source.J);
  j["max_dim"] = t.source.max_dim;
  j["sheets"] = t.sheets;
  j["counts"] = t.counts;
  ojson support = ojson::array();
  for (int v : t.support.nodes) support.push_back(v + 1);
  j["support"] = std::move(support);
  return j;
}

ojson comparison_json(const CellTable& a, const CellTable& b, const ComparisonResult& r) {
  ojson j;
  j["left"] = table_json(a);
  j["right"] = table_json(b);
  j["verdict"] = r.verdict == Verdict::MatchThrough ? "MatchThrough" : "DivergeAt";
  j["dimension"] = r.dimension;
  j["supports_isomorphic"] = r.supports_isomorphic;
  ojson detail = ojson::array();
  for (const auto& [x, y] : r.detail) detail.push_back({x, y});
  j["detail"] = std::move(detail);
  return j;
}

int require_limit(const CommandRequest& r, const char* flag) {
  if (r.limit < 0) throw UsageError(std::string(flag) + " is required and must be nonnegative");
  return r.limit;
}

const DiagramArg& single_diagram(const CommandRequest& r) {
  if (r.diagrams.size() != 1) throw UsageError("expected exactly one diagram");
  return r.diagrams.front();
}

ojson run_growth(const CommandRequest& r) {
  const auto& d = single_diagram(r);
  auto [g, J] = resolve(d, false);
  const int L = require_limit(r, "--max-len");
  ojson p;
  p["type"] = display_name(d, g);
  p["max_len"] = L;
  p["coefficients"] = growth_series(g, L, r.limits);
  return p;
}

ojson run_cosets(const CommandRequest& r) {
  const auto& d = single_diagram(r);
  auto [g, J] = resolve(d, false);
  const int L = require_limit(r, "--max-len");
  const auto levels = minimal_coset_reps(g, J, L, r.limits);
  ojson p;
  p["type"] = display_name(d, g);
  p["subset"] = subset_json(J);
  p["max_len"] = L;
  p["sizes"] = levels.sizes();
  ojson lv = ojson::array();
  for (const auto& level : levels.by_length) {
    ojson words = ojson::array();
    for (const auto& w : level) words.push_back(word_json(w.word()));
    lv.push_back(std::move(words));
  }
  p["levels"] = std::move(lv);
  return p;
}

ojson run_cells(const CommandRequest& r) {
  const auto& d = single_diagram(r);
  auto [g, J] = resolve(d, false);
  const int D = require_limit(r, "--max-dim");
  auto t = cell_table(g, J, D, r.limits);
  t.source.gcm_name = display_name(d, g);
  if (r.sheets != 1) t = cover_cell_table(t, r.sheets);
  return table_json(t);
}

ojson run_compare(const CommandRequest& r) {
  if (r.diagrams.size() != 2) throw UsageError("compare needs two diagrams");
  const int D = require_limit(r, "--max-dim");
  std::vector<CellTable> tables;
  for (const auto& d : r.diagrams) {
    auto [g, J] = resolve(d, true);
    auto t = cell_table(g, J, D, r.limits);
    t.source.gcm_name = display_name(d, g);
    if (r.sheets != 1) t = cover_cell_table(t, r.sheets);
    tables.push_back(std::move(t));
  }
  return comparison_json(tables[0], tables[1], compare_tables(tables[0], tables[1]));
}

ojson run_homotopy_en(const CommandRequest& r, ojson& trace) {
  if (r.n < 0) throw UsageError("--n is required");
  EnOptions options;
  options.kmax = r.limit < 0 ? kEnMaxDegree : r.limit;
  options.limits = r.limits;
  const auto result = en_profile(r.n, options);
  ojson p;
  p["n"] = r.n;
  p["max_k"] = options.kmax;
  p["profile"] = profile_to_json(result.profile);
  ojson steps = ojson::array();
  for (const auto& s : result.steps) {
    ojson j = comparison_json(s.exceptional, s.classical, s.comparison);
    j["from_rank"] = s.from_rank;
    steps.push_back(std::move(j));
  }
  p["steps"] = std::move(steps);
  trace = trace_json(result.trace);
  return p;
}

HomotopyProfile named_space_profile(const std::string& space, int kmax) {
  auto rest_int = [&](std::size_t prefix) {
    try {
      std::size_t used = 0;
      int v = std::stoi(space.substr(prefix), &used);
      if (used != space.size() - prefix) throw UsageError("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("unrecognised space '" + space + "'");
    }
  };
  if (space.rfind("SO", 0) == 0) return special_orthogonal_profile(rest_int(2), kmax);
  if (space.rfind("O", 0) == 0) return orthogonal_profile(rest_int(1), kmax);
  if (space.rfind("KE", 0) == 0 || space.rfind("E", 0) == 0) {
    EnOptions options;
    options.kmax = kmax;
    return en_profile(rest_int(space[0] == 'K' ? 2 : 1), options).profile;
  }
  throw UsageError("unrecognised space '" + space + "' (expected O<n>, SO<n> or KE<n>)");
}

ojson run_tower(const CommandRequest& r) {
  if (r.space.empty() == r.profile_file.empty())
    throw UsageError("give exactly one of --space or --profile-file");
  HomotopyProfile p;
  if (!r.space.empty()) {
    p = named_space_profile(r.space, r.limit < 0 ? kEnMaxDegree : r.limit);
  } else {
    try {
      p = profile_from_json(nlohmann::json::parse(read_file(r.profile_file)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid profile file: ") + e.what());
    }
    if (r.limit >= 0 && r.limit < p.kmax()) p.groups.resize(r.limit + 1);
  }
  const auto tower = whitehead_tower(p);
  ojson j;
  j["space"] = p.space_name;
  j["max_k"] = p.kmax();
  j["input_profile"] = profile_to_json(p);
  ojson stages = ojson::array();
  for (const auto& s : tower.stages) {
    ojson st;
    st["name"] = s.stage_name;
    st["killed_degree"] = s.killed_degree;
    st["killed_group"] = descriptor_json(s.killed_group);
    st["resulting_profile"] = profile_to_json(s.resulting_profile);
    stages.push_back(std::move(st));
  }
  j["stages"] = std::move(stages);
  j["truncated_at"] = tower.truncated_at;
  return j;
}

ojson run_bott(const CommandRequest& r) {
  const int kmax = require_limit(r, "--max-k");
  ojson j;
  j["max_k"] = kmax;
  if (r.n >= 0) j["n"] = r.n;
  ojson rows = ojson::array();
  for (int k = 0; k <= kmax; ++k) {
    ojson row;
    row["k"] = k;
    row["pi_O"] = descriptor_json(bott_pi_O(k));
    if (r.n >= 0) {
      try {
        row["pi_SO_n"] = descriptor_json(stable_pi_SO(r.n, k));
        row["stable"] = true;
      } catch (const OutOfStableRange& e) {
        row["pi_SO_n"] = e.exception() ? descriptor_json(*e.exception()) : ojson(nullptr);
        row["stable"] = false;
      }
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ojson error_json(const Error& e) {
  ojson j;
  j["kind"] = e.kind();
  j["message"] = e.what();
  if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e)) {
    j["depth_reached"] = b->depth_reached();
    j["elements"] = b->elements();
  } else if (const auto* c = dynamic_cast<const ComparisonFailed*>(&e)) {
    j["comparison"] =
        comparison_json(c->step().exceptional, c->step().classical, c->step().comparison);
  } else if (const auto* v = dynamic_cast<const GcmValidationError*>(&e)) {
    ojson list = ojson::array();
    for (const auto& x : v->violations())
      list.push_back({{"kind", to_string(x.kind)}, {"row", x.row + 1}, {"col", x.col + 1}});
    j["violations"] = std::move(list);
  } else if (const auto* u = dynamic_cast<const UnknownEntry*>(&e)) {
    j["degree"] = u->degree();
  }
  return j;
}

}  // namespace

ojson profile_to_json(const HomotopyProfile& p) {
  ojson j;
  j["space"] = p.space_name;
  ojson groups = ojson::array();
  for (int k = 0; k <= p.kmax(); ++k) {
    ojson g = descriptor_json(p.groups[k]);
    g["degree"] = k;
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  return j;
}

HomotopyProfile profile_from_json(const nlohmann::json& j) {
  HomotopyProfile p;
  p.space_name = j.value("space", std::string("profile"));
  const auto& groups = j.at("groups");
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const auto& g = groups[k];
    if (g.contains("degree") && g.at("degree").get<std::size_t>() != k)
      throw ParseError("profile degrees must be listed in order from 0");
    auto d = GroupDescriptor::parse(g.at("group").get<std::string>());
    if (d.is_unknown() && g.value("countable", std::string("unknown")) == "yes")
      d = d.with_countable(Countable::Yes);
    p.groups.push_back(std::move(d));
  }
  if (p.groups.empty()) throw ParseError("profile has no degrees");
  return p;
}

Report run(const CommandRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  auto& j = report.json;
  j["schema"] = kSchemaVersion;
  j["command"] = request.command;
  j["input"] = request.args;
  j["provenance"] = {{"tool", kToolName}, {"version", kToolVersion}};
  try {
    ojson trace;
    ojson payload;
    if (request.command == "growth") payload = run_growth(request);
    else if (request.command == "cosets") payload = run_cosets(request);
    else if (request.command == "cells") payload = run_cells(request);
    else if (request.command == "compare") payload = run_compare(request);
    else if (request.command == "homotopy-en") payload = run_homotopy_en(request, trace);
    else if (request.command == "tower") payload = run_tower(request);
    else if (request.command == "bott") payload = run_bott(request);
    else throw UsageError("unknown command '" + request.command + "'");
    j["payload"] = std::move(payload);
    if (!trace.is_null()) j["trace"] = std::move(trace);
    report.exit_status = 0;
  } catch (const UsageError& e) {
    j["error"] = {{"kind", "Usage"}, {"message", e.what()}};
    report.exit_status = 2;
  } catch (const ComparisonFailed& e) {
    j["error"] = error_json(e);
    j["trace"] = trace_json(e.trace());
    report.exit_status = 1;
  } catch (const Error& e) {
    j["error"] = error_json(e);
    report.exit_status = 1;
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// --- rendering --------------------------------------------------------------

namespace {

std::string join(const ojson& arr, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) out += sep;
    out += arr[k].is_string() ? arr[k].get<std::string>() : arr[k].dump();
  }
  return out;
}

std::string word_text(const ojson& word) {
  if (word.empty()) return "e";
  std::string s;
  for (const auto& i : word) s += "s" + i.dump();
  return s;
}

std::string group_csv(const ojson& g) {
  std::string s = std::string(g["known"].get<bool>() ? "1" : "0") + "," + g["free_rank"].dump();
  for (const auto& t : g["torsion"]) s += "," + t.dump();
  return s;
}

void render_table(const ojson& j, std::ostream& out) {
  const auto& cmd = j["command"].get_ref<const std::string&>();
  const auto& p = j["payload"];
  if (cmd == "growth") {
    out << "growth series of W(" << p["type"].get<std::string>() << ") through length " << p["max_len"] << "\n";
    out << std::setw(6) << "length" << "  " << "elements\n";
    for (std::size_t l = 0; l < p["coefficients"].size(); ++l)
      out << std::setw(6) << l << "  " << p["coefficients"][l] << "\n";
  } else if (cmd == "cosets") {
    out << "minimal coset representatives W^J, W = W(" << p["type"].get<std::string>() << "), J = {"
        << join(p["subset"], ",") << "}\n";
    for (std::size_t l = 0; l < p["levels"].size(); ++l) {
      out << std::setw(6) << l << "  " << std::setw(6) << p["sizes"][l].dump() << " ";
      for (const auto& w : p["levels"][l]) out << " " << word_text(w);
      out << "\n";
    }
  } else if (cmd == "cells") {
    out << "Bruhat cells of G/P_J, G = " << p["type"].get<std::string>() << ", J = {" << join(p["subset"], ",")
        << "}, sheets = " << p["sheets"] << "\n";
    out << std::setw(4) << "dim" << "  cells\n";
    for (std::size_t d = 0; d < p["counts"].size(); ++d)
      out << std::setw(4) << d << "  " << p["counts"][d] << "\n";
  } else if (cmd == "compare") {
    out << std::setw(4) << "dim" << "  " << std::setw(10) << p["left"]["type"].get<std::string>() << "  "
        << std::setw(10) << p["right"]["type"].get<std::string>() << "\n";
    for (std::size_t d = 0; d < p["detail"].size(); ++d)
      out << std::setw(4) << d << "  " << std::setw(10) << p["detail"][d][0].dump() << "  " << std::setw(10)
          << p["detail"][d][1].dump() << (p["detail"][d][0] != p["detail"][d][1] ? "  *" : "") << "\n";
    out << p["verdict"].get<std::string>() << "(" << p["dimension"] << "), supports "
        << (p["supports_isomorphic"].get<bool>() ? "isomorphic" : "not isomorphic") << "\n";
  } else if (cmd == "homotopy-en") {
    out << "homotopy of " << p["profile"]["space"].get<std::string>() << "\n";
    for (const auto& g : p["profile"]["groups"])
      out << "  pi_" << g["degree"] << " = " << g["group"].get<std::string>() << "\n";
    out << "trace:\n";
    for (const auto& t : j["trace"]) out << "  " << t["line"].get<std::string>() << "\n";
  } else if (cmd == "tower") {
    out << "Whitehead tower of " << p["space"].get<std::string>() << " through degree " << p["max_k"] << "\n";
    for (const auto& s : p["stages"])
      out << "  " << s["name"].get<std::string>() << ": kills pi_" << s["killed_degree"] << " = "
          << s["killed_group"]["group"].get<std::string>() << "\n";
    out << "  (truncated above degree " << p["truncated_at"] << ")\n";
  } else if (cmd == "bott") {
    out << std::setw(4) << "k" << "  " << std::setw(8) << "pi_k(O)";
    if (p.contains("n")) out << "  pi_k(SO(" << p["n"] << "))";
    out << "\n";
    for (const auto& row : p["rows"]) {
      out << std::setw(4) << row["k"].dump() << "  " << std::setw(8) << row["pi_O"]["group"].get<std::string>();
      if (row.contains("pi_SO_n")) {
        out << "  ";
        if (row["pi_SO_n"].is_null()) out << "unstable";
        else out << row["pi_SO_n"]["group"].get<std::string>() << (row["stable"].get<bool>() ? "" : " (unstable)");
      }
      out << "\n";
    }
  }
}

void render_csv(const ojson& j, std::ostream& out) {
  const auto& cmd = j["command"].get_ref<const std::string&>();
  const auto& p = j["payload"];
  if (cmd == "growth") {
    out << join(p["coefficients"], ",") << "\n";
  } else if (cmd == "cosets") {
    for (std::size_t l = 0; l < p["levels"].size(); ++l)
      for (const auto& w : p["levels"][l]) out << l << (w.empty() ? "" : ",") << join(w, ",") << "\n";
  } else if (cmd == "cells") {
    out << join(p["counts"], ",") << "\n";
  } else if (cmd == "compare") {
    for (std::size_t d = 0; d < p["detail"].size(); ++d)
      out << d << "," << p["detail"][d][0] << "," << p["detail"][d][1] << "\n";
  } else if (cmd == "homotopy-en") {
    for (const auto& g : p["profile"]["groups"]) out << g["degree"] << "," << group_csv(g) << "\n";
  } else if (cmd == "tower") {
    for (const auto& s : p["stages"]) out << s["killed_degree"] << "," << group_csv(s["killed_group"]) << "\n";
  } else if (cmd == "bott") {
    for (const auto& row : p["rows"]) out << row["k"] << "," << group_csv(row["pi_O"]) << "\n";
  }
}

}  // namespace

std::string render(const Report& report, Format format) {
  std::ostringstream out;
  if (format == Format::Json) {
    out << report.json.dump(2) << "\n";
  } else if (report.json.contains("error")) {
    // Errors have no tabular projection; callers print them to stderr.
  } else if (format == Format::Csv) {
    render_csv(report.json, out);
  } else {
    render_table(report.json, out);
  }
  return out.str();
}

// --- argument parsing -------------------------------------------------------

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat cell tables of Kac-Moody flag manifolds and homotopy bookkeeping", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  CommandRequest req;
  std::string format = "table";
  std::size_t budget = EnumerationLimits{}.max_elements;
  bool timing = false;
  std::vector<std::string> positional, files, subs;
  std::string left_file, right_file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--budget", budget, "Element budget for enumerations")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "Print wall-clock time to stderr");
  };
  auto one_diagram = [&](CLI::App* sub, const char* limit_flag, const char* limit_help) {
    sub->add_option("type", positional, "Named diagram such as A3, D4, E10")->expected(0, 1);
    sub->add_option("--file", files, "Generalized Cartan matrix file")->expected(0, 1);
    sub->add_option("--sub", subs, "Parabolic subset J, 1-based (e.g. 1-8,10)")->expected(0, 1);
    sub->add_option(limit_flag, req.limit, limit_help)->required()->check(CLI::NonNegativeNumber);
    common(sub);
  };

  auto* growth = app.add_subcommand("growth", "Growth series of W by length");
  one_diagram(growth, "--max-len", "Maximum length");
  auto* cosets = app.add_subcommand("cosets", "Minimal coset representatives of W/W_J by length");
  one_diagram(cosets, "--max-len", "Maximum length");
  auto* cells = app.add_subcommand("cells", "Bruhat cell counts of G/P_J per dimension");
  one_diagram(cells, "--max-dim", "Maximum cell dimension");
  cells->add_option("--sheets", req.sheets, "Covering multiplicity")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Compare the cell tables of two flag manifolds");
  compare->add_option("types", positional, "Two named diagrams")->expected(0, 2);
  compare->add_option("--left-file", left_file, "GCM file for the left diagram");
  compare->add_option("--right-file", right_file, "GCM file for the right diagram");
  compare->add_option("--sub", subs, "Parabolic subsets, given once per diagram in order")
      ->allow_extra_args(false)
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  compare->add_option("--max-dim", req.limit, "Maximum cell dimension")->required()->check(CLI::NonNegativeNumber);
  compare->add_option("--sheets", req.sheets, "Covering multiplicity")->check(CLI::PositiveNumber);
  common(compare);

  auto* hom = app.add_subcommand("homotopy-en", "Homotopy groups of K(E_n) by induction from K(E_8)");
  hom->add_option("--n", req.n, "Rank n >= 8")->required();
  hom->add_option("--max-k", req.limit, "Highest degree (at most 6)")->check(CLI::Range(0, kEnMaxDegree));
  common(hom);

  auto* tower = app.add_subcommand("tower", "Whitehead tower of a homotopy profile");
  tower->add_option("--space", req.space, "O<n>, SO<n> or KE<n>");
  tower->add_option("--profile-file", req.profile_file, "Profile JSON file");
  tower->add_option("--max-k", req.limit, "Highest degree")->check(CLI::NonNegativeNumber);
  common(tower);

  auto* bott = app.add_subcommand("bott", "Homotopy of the stable orthogonal group");
  bott->add_option("--max-k", req.limit, "Highest degree")->required()->check(CLI::NonNegativeNumber);
  bott->add_option("--n", req.n, "Also report pi_k(SO(n))")->check(CLI::PositiveNumber);
  common(bott);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << "run with --help for usage\n";
    return 2;
  }

  auto* chosen = app.get_subcommands().front();
  req.command = chosen->get_name();
  req.args = args;
  req.limits.max_elements = budget;
  req.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;

  if (req.command == "compare") {
    std::vector<std::string> side_files{left_file, right_file};
    std::size_t next_named = 0;
    for (int side = 0; side < 2; ++side) {
      DiagramArg d;
      if (!side_files[side].empty()) {
        d.file = side_files[side];
      } else if (next_named < positional.size()) {
        d.named = positional[next_named++];
      }
      req.diagrams.push_back(d);
    }
    if (next_named != positional.size() || req.diagrams[0].named.empty() == req.diagrams[0].file.empty() ||
        req.diagrams[1].named.empty() == req.diagrams[1].file.empty()) {
      err << "usage error: compare needs two diagrams (named types or --left-file/--right-file)\n";
      return 2;
    }
    if (subs.size() == 1 || subs.size() > 2) {
      err << "usage error: --sub must be given for both diagrams or for neither\n";
      return 2;
    }
    for (std::size_t k = 0; k < subs.size(); ++k) {
      req.diagrams[k].sub = subs[k];
      req.diagrams[k].has_sub = true;
    }
  } else if (req.command == "growth" || req.command == "cosets" || req.command == "cells") {
    DiagramArg d;
    if (!positional.empty()) d.named = positional.front();
    if (!files.empty()) d.file = files.front();
    if (!subs.empty()) {
      d.sub = subs.front();
      d.has_sub = true;
    }
    if (d.named.empty() == d.file.empty()) {
      err << "usage error: give exactly one of a named type or --file\n";
      return 2;
    }
    req.diagrams.push_back(d);
  }

  const Report report = run(req);
  if (timing) err << "wall-clock: " << std::fixed << std::setprecision(1) << report.wall_ms << " ms\n";
  if (report.exit_status != 0) {
    const auto& e = report.json["error"];
    err << (report.exit_status == 2 ? "usage error: " : "error: ") << e["kind"].get<std::string>() << ": "
        << e["message"].get<std::string>() << "\n";
  }
  out << render(report, req.format);
  return report.exit_status;
}

}  // namespace kmcells::cli
