#include "licterm/cli.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "licterm/conflict.hpp"
#include "licterm/dataset.hpp"
#include "licterm/errors.hpp"
#include "licterm/matrix.hpp"
#include "licterm/miner.hpp"
#include "licterm/normalize.hpp"
#include "licterm/registry.hpp"
#include "licterm/scan.hpp"

namespace licterm {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Table, Records };

struct Config {
  std::string dataset_path;
  std::string alias_path;
  bool strict = false;
  Format format = Format::Table;
};

struct Env {
  Dataset ds;
  AliasTable aliases;
  KnownLicenses known;
};

Env load_env(const Config& cfg) {
  Env env;
  std::string path = cfg.dataset_path;
  if (path.empty()) {
    if (const char* from_env = std::getenv("LICTERM_DATASET"); from_env && *from_env) path = from_env;
  }
  env.ds = path.empty() ? seed_dataset() : load_dataset(path);
  env.aliases = cfg.alias_path.empty() ? seed_aliases() : load_alias_table(cfg.alias_path);
  env.known = seed_known_licenses();
  env.known.merge(env.ds);
  validate_aliases(env.aliases, env.ds, env.known);
  return env;
}

/// Left-aligned columns separated by two spaces; the last column is not padded.
class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) line += "  ";
        line += r[i];
        if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void emit(std::ostream& out, const ojson& j) { out << j.dump() << '\n'; }

ojson refs_json(const std::vector<LicenseRef>& refs) {
  ojson a = ojson::array();
  for (const auto& r : refs) a.push_back(render(r));
  return a;
}

// normalize ------------------------------------------------------------------

int cmd_normalize(const Config& cfg, const std::vector<std::string>& inputs, std::ostream& out) {
  const auto env = load_env(cfg);
  int code = kExitOk;
  Table t;
  for (const auto& raw : inputs) {
    const auto o = normalize(raw, env.aliases, env.known);
    const auto* res = std::get_if<Resolved>(&o);
    if (res == nullptr) code = kExitUnresolvable;
    if (cfg.format == Format::Records) {
      ojson j;
      j["record"] = "normalization";
      j["raw"] = raw;
      if (res != nullptr) {
        j["status"] = "resolved";
        j["expression"] = render(res->expr);
      } else {
        j["status"] = "unresolvable";
        j["reason"] = to_string(std::get<Unresolvable>(o).reason);
      }
      emit(out, j);
    } else {
      t.row({raw, "->", outcome_key(o)});
    }
  }
  t.print(out);
  return code;
}

// parse-expr -----------------------------------------------------------------

int cmd_parse_expr(const Config& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    const auto e = parse_expression(text);
    const auto alts = alternatives(e);
    if (cfg.format == Format::Records) {
      ojson j;
      j["record"] = "expression";
      j["input"] = text;
      j["canonical"] = render(e);
      ojson a = ojson::array();
      for (const auto& alt : alts) a.push_back(refs_json(alt));
      j["alternatives"] = std::move(a);
      emit(out, j);
    } else {
      out << render(e) << '\n';
      for (const auto& alt : alts) {
        std::string line = "  alternative:";
        for (const auto& r : alt) line += " " + render(r);
        out << line << '\n';
      }
    }
    return kExitOk;
  } catch (const SyntaxError& e) {
    err << e.what() << '\n';
    err << "  " << text << '\n' << "  " << std::string(e.offset(), ' ') << "^\n";
    return kExitUnresolvable;
  }
}

// check ----------------------------------------------------------------------

std::optional<LicenseExpression> resolve_or_report(const std::string& raw, const Env& env,
                                                   std::ostream& err) {
  const auto o = normalize(raw, env.aliases, env.known);
  if (const auto* r = std::get_if<Resolved>(&o)) return r->expr;
  err << "cannot resolve license '" << raw << "': "
      << to_string(std::get<Unresolvable>(o).reason) << '\n';
  return std::nullopt;
}

RuleOptions rules_of(const Config& cfg) {
  RuleOptions r;
  r.strict_not_mentioned = cfg.strict;
  return r;
}

int cmd_check(const Config& cfg, const std::string& parent_raw, const std::string& dep_raw,
              std::ostream& out, std::ostream& err) {
  const auto env = load_env(cfg);
  const auto parent = resolve_or_report(parent_raw, env, err);
  const auto dep = resolve_or_report(dep_raw, env, err);
  if (!parent || !dep) return kExitUnresolvable;

  const auto v = check_expressions(*parent, *dep, env.ds, rules_of(cfg));
  if (cfg.format == Format::Records) {
    for (const auto& f : v.findings) {
      ojson j;
      j["record"] = "finding";
      j["type"] = to_string(f.ctype);
      j["term"] = to_string(f.term);
      j["parent"] = f.parent_id;
      j["dependency"] = f.dep_id;
      j["parent_attitude"] = to_string(f.parent_attitude);
      j["dependency_attitude"] = to_string(f.dep_attitude);
      j["explanation"] = explain(f);
      emit(out, j);
    }
    ojson j;
    j["record"] = "verdict";
    j["parent"] = render(*parent);
    j["dependency"] = render(*dep);
    j["conflict_free"] = v.conflict_free;
    j["findings"] = v.findings.size();
    j["parent_choice"] = refs_json(v.parent_choice);
    j["dependency_choice"] = refs_json(v.dep_choice);
    j["warnings"] = v.warnings;
    emit(out, j);
  } else {
    out << "parent: " << render(*parent) << "\ndependency: " << render(*dep) << '\n';
    for (const auto& w : v.warnings) out << "warning: " << w << '\n';
    if (v.conflict_free) {
      out << "no conflicts\n";
    } else {
      Table t;
      t.row({"TYPE", "TERM", "PARENT", "DEPENDENCY"});
      for (const auto& f : v.findings) {
        t.row({std::string(to_string(f.ctype)), std::string(to_string(f.term)),
               f.parent_id + "=" + std::string(to_string(f.parent_attitude)),
               f.dep_id + "=" + std::string(to_string(f.dep_attitude))});
      }
      t.print(out);
      for (const auto& f : v.findings) out << explain(f) << '\n';
      out << v.findings.size() << (v.findings.size() == 1 ? " finding\n" : " findings\n");
    }
  }
  return v.conflict_free ? kExitOk : kExitConflicts;
}

// matrix ---------------------------------------------------------------------

int cmd_matrix(const Config& cfg, std::ostream& out) {
  const auto env = load_env(cfg);
  const auto m = build_matrix(env.ds, rules_of(cfg));
  const char* names[] = {"C1", "C2", "C3"};
  if (cfg.format == Format::Records) {
    ojson j;
    j["record"] = "totals";
    j["licenses"] = env.ds.size();
    for (std::size_t t = 0; t < kConflictTypeCount; ++t) j[names[t]] = m.pair_counts[t];
    emit(out, j);
    for (const auto& [id, d] : m.degrees) {
      ojson r;
      r["record"] = "degree";
      r["license"] = id;
      for (std::size_t t = 0; t < kConflictTypeCount; ++t) r[names[t]] = d[t];
      emit(out, r);
    }
    return kExitOk;
  }
  out << "licenses: " << env.ds.size() << '\n';
  out << "conflicting ordered pairs: C1 " << m.pair_counts[0] << ", C2 " << m.pair_counts[1]
      << ", C3 " << m.pair_counts[2] << '\n';
  Table t;
  t.row({"LICENSE", "C1", "C2", "C3"});
  for (const auto& [id, d] : m.degrees) {
    t.row({id, std::to_string(d[0]), std::to_string(d[1]), std::to_string(d[2])});
  }
  t.print(out);
  return kExitOk;
}

// mine -----------------------------------------------------------------------

struct MineArgs {
  std::int64_t min_support = 100;
  std::size_t min_size = 1;
  double jaccard = 0.9;
  bool no_dedup = false;
};

std::string items_text(const std::vector<TermItem>& items) {
  std::string s;
  for (const auto& it : items) {
    if (!s.empty()) s += ' ';
    s += std::string(to_string(it.term)) + ":" + std::string(to_string(it.attitude));
  }
  return s;
}

int cmd_mine(const Config& cfg, const MineArgs& a, std::ostream& out, std::ostream& err) {
  const auto env = load_env(cfg);
  std::vector<FrequentPattern> patterns;
  try {
    patterns = mine(env.ds, a.min_support);
    if (!a.no_dedup) patterns = dedup_similar(patterns, a.jaccard);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  std::erase_if(patterns, [&](const FrequentPattern& p) { return p.items.size() < a.min_size; });

  if (cfg.format == Format::Records) {
    for (const auto& p : patterns) {
      ojson j;
      j["record"] = "pattern";
      j["support"] = p.support_count;
      ojson items = ojson::array();
      for (const auto& it : p.items) {
        items.push_back({{"term", to_string(it.term)}, {"attitude", to_string(it.attitude)}});
      }
      j["items"] = std::move(items);
      j["licenses"] = p.supporting_ids;
      emit(out, j);
    }
    return kExitOk;
  }
  out << patterns.size() << " patterns (min support " << a.min_support << ", " << env.ds.size()
      << " licenses)\n";
  if (patterns.empty()) return kExitOk;
  Table t;
  t.row({"SUPPORT", "SIZE", "ITEMS", "EXAMPLES"});
  for (const auto& p : patterns) {
    std::string ex;
    const std::size_t shown = std::min<std::size_t>(3, p.supporting_ids.size());
    for (std::size_t i = 0; i < shown; ++i) ex += (i ? ", " : "") + p.supporting_ids[i];
    if (p.supporting_ids.size() > shown) ex += ", +" + std::to_string(p.supporting_ids.size() - shown);
    t.row({std::to_string(p.support_count), std::to_string(p.items.size()), items_text(p.items), ex});
  }
  t.print(out);
  return kExitOk;
}

// ingest / changes -----------------------------------------------------------

int cmd_ingest(const Config& cfg, const std::string& snapshot, const std::string& output,
               std::ostream& out) {
  const auto records = load_snapshot(snapshot);
  const auto g = build_graph(records);
  save_graph(g, output);
  if (cfg.format == Format::Records) {
    ojson j;
    j["record"] = "ingest";
    j["records"] = records.size();
    j["nodes"] = g.nodes.size();
    j["edges"] = g.edges.size();
    j["unresolved"] = g.unresolved.size();
    j["output"] = output;
    emit(out, j);
  } else {
    out << "records: " << records.size() << "\nnodes: " << g.nodes.size()
        << "\nedges: " << g.edges.size() << "\nunresolved: " << g.unresolved.size() << '\n';
    std::map<std::string, std::size_t> by_reason;
    for (const auto& u : g.unresolved) ++by_reason[std::string(to_string(u.reason))];
    for (const auto& [reason, n] : by_reason) out << "  " << reason << ": " << n << '\n';
    out << "graph written to " << output << '\n';
  }
  return kExitOk;
}

int cmd_changes(const Config& cfg, const std::string& snapshot, std::ostream& out) {
  const auto env = load_env(cfg);
  const auto records = load_snapshot(snapshot);
  const auto changes = license_changes(records, env.aliases, env.known, env.ds);
  if (cfg.format == Format::Records) {
    for (const auto& c : changes) {
      ojson j;
      j["record"] = "change";
      j["package"] = c.package;
      j["version"] = c.at_version;
      j["from"] = c.from;
      j["to"] = c.to;
      j["class"] = to_string(c.classification);
      emit(out, j);
    }
    return kExitOk;
  }
  std::set<std::string> packages;
  for (const auto& r : records) packages.insert(r.package);
  std::set<std::string> changed;
  for (const auto& c : changes) changed.insert(c.package);
  out << changes.size() << " license changes in " << changed.size() << " of " << packages.size()
      << " packages\n";
  if (changes.empty()) return kExitOk;
  Table t;
  t.row({"PACKAGE", "VERSION", "FROM", "TO", "CLASS"});
  for (const auto& c : changes) {
    t.row({c.package, c.at_version, c.from, c.to, std::string(to_string(c.classification))});
  }
  t.print(out);
  return kExitOk;
}

// scan -----------------------------------------------------------------------

int cmd_scan(const Config& cfg, const std::string& graph_path, std::size_t top, std::ostream& out) {
  const auto env = load_env(cfg);
  const auto g = load_graph(graph_path);
  const ScanContext ctx{env.ds, env.aliases, env.known, rules_of(cfg)};
  const auto rep = scan(g, ctx);
  const auto ranked = rank_pairs(rep, top);
  const char* names[] = {"C1", "C2", "C3"};

  if (cfg.format == Format::Records) {
    ojson s;
    s["record"] = "summary";
    s["edges"] = rep.total_edges;
    for (std::size_t t = 0; t < kConflictTypeCount; ++t) s[names[t]] = rep.edges_with_findings[t];
    s["any"] = rep.edges_with_any_finding;
    s["unknown_license"] = rep.unknown_license_edges;
    s["unprofiled"] = rep.edges_with_unprofiled_ids;
    emit(out, s);
    for (std::size_t t = 0; t < kConflictTypeCount; ++t) {
      for (std::size_t i = 0; i < ranked.top[t].size(); ++i) {
        const auto& r = ranked.top[t][i];
        ojson j;
        j["record"] = "pair";
        j["type"] = names[t];
        j["rank"] = i + 1;
        j["parent"] = r.pair.first;
        j["dependency"] = r.pair.second;
        j["edges"] = r.edges;
        emit(out, j);
      }
      ojson tot;
      tot["record"] = "pair-total";
      tot["type"] = names[t];
      tot["listed"] = ranked.listed_total[t];
      tot["edges"] = ranked.type_total[t];
      emit(out, tot);
    }
    for (const auto& [key, n] : rep.usage) {
      ojson j;
      j["record"] = "usage";
      j["year"] = key.first;
      j["license"] = key.second;
      j["packages"] = n;
      emit(out, j);
    }
  } else {
    out << "edges: " << rep.total_edges << '\n';
    out << "edges with findings: C1 " << rep.edges_with_findings[0] << ", C2 "
        << rep.edges_with_findings[1] << ", C3 " << rep.edges_with_findings[2] << ", any "
        << rep.edges_with_any_finding << '\n';
    out << "edges with unresolvable license: " << rep.unknown_license_edges << '\n';
    out << "edges with unprofiled licenses: " << rep.edges_with_unprofiled_ids << '\n';
    for (std::size_t t = 0; t < kConflictTypeCount; ++t) {
      out << '\n' << names[t] << " top pairs\n";
      Table tab;
      tab.row({"RANK", "PARENT", "DEPENDENCY", "EDGES"});
      for (std::size_t i = 0; i < ranked.top[t].size(); ++i) {
        const auto& r = ranked.top[t][i];
        tab.row({std::to_string(i + 1), r.pair.first, r.pair.second, std::to_string(r.edges)});
      }
      tab.row({"", "listed", "", std::to_string(ranked.listed_total[t])});
      tab.row({"", "total", "", std::to_string(ranked.type_total[t])});
      tab.print(out);
    }
    out << "\nlicense usage (latest version per package per year)\n";
    Table u;
    u.row({"YEAR", "LICENSE", "PACKAGES"});
    for (const auto& [key, n] : rep.usage) u.row({std::to_string(key.first), key.second, std::to_string(n)});
    u.print(out);
  }
  return rep.edges_with_any_finding > 0 ? kExitConflicts : kExitOk;
}

// explain --------------------------------------------------------------------

int cmd_explain(const Config& cfg, const std::string& raw, std::ostream& out, std::ostream& err) {
  const auto env = load_env(cfg);
  const LicenseProfile* p = lookup(env.ds, raw);
  if (p == nullptr) {
    if (const auto id = env.known.resolve_license(raw)) p = lookup(env.ds, *id);
  }
  if (p == nullptr) {
    if (const auto* alias = env.aliases.find(raw)) p = lookup(env.ds, *alias);
  }
  if (p == nullptr) {
    err << "no profile for license '" << raw << "' in the dataset\n";
    return kExitUnresolvable;
  }
  if (cfg.format == Format::Records) {
    ojson j;
    j["record"] = "profile";
    j["license"] = p->spdx_id;
    j["name"] = p->full_name;
    j["copyleft"] = to_string(p->copyleft);
    ojson terms = ojson::object();
    for (const auto& info : term_catalog()) terms[std::string(info.id)] = to_string(p->terms.at(info.term));
    j["terms"] = std::move(terms);
    emit(out, j);
    return kExitOk;
  }
  out << p->spdx_id << " (" << p->full_name << "), copyleft: " << to_string(p->copyleft) << '\n';
  for (const auto& info : term_catalog()) {
    out << info.id << ": " << to_string(p->terms.at(info.term)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"License term extraction, conflict checking and dependency scanning", "licterm"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "table";
  app.add_option("--dataset", cfg.dataset_path, "License profile dataset (default: bundled seed)");
  app.add_option("--aliases", cfg.alias_path, "Alias table (default: bundled)");
  app.add_flag("--strict-not-mentioned", cfg.strict, "C1 also fires on dependency not-mentioned rights");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));

  std::vector<std::string> norm_inputs;
  auto* normalize_cmd = app.add_subcommand("normalize", "Map raw license strings to SPDX expressions");
  normalize_cmd->add_option("raw", norm_inputs, "Raw license strings")->required();

  std::string expr_text;
  auto* parse_cmd = app.add_subcommand("parse-expr", "Parse and render an SPDX expression");
  parse_cmd->add_option("expression", expr_text)->required();

  std::string parent_raw, dep_raw;
  auto* check_cmd = app.add_subcommand("check", "Check a project license against a dependency license");
  check_cmd->add_option("parent", parent_raw, "Project license expression")->required();
  check_cmd->add_option("dependency", dep_raw, "Dependency license expression")->required();

  auto* matrix_cmd = app.add_subcommand("matrix", "All-pairs conflict totals and per-license degrees");

  MineArgs mine_args;
  auto* mine_cmd = app.add_subcommand("mine", "Frequent term patterns across licenses");
  mine_cmd->add_option("--min-support", mine_args.min_support, "Minimum supporting licenses")
      ->capture_default_str();
  mine_cmd->add_option("--min-size", mine_args.min_size, "Minimum items per pattern")->capture_default_str();
  mine_cmd->add_option("--jaccard", mine_args.jaccard, "Near-duplicate threshold")->capture_default_str();
  mine_cmd->add_flag("--no-dedup", mine_args.no_dedup, "Keep near-duplicate patterns");

  std::string snapshot, graph_out;
  auto* ingest_cmd = app.add_subcommand("ingest", "Resolve a registry snapshot into a dependency graph");
  ingest_cmd->add_option("snapshot", snapshot)->required();
  ingest_cmd->add_option("-o,--output", graph_out, "Graph file to write")->required();

  std::string changes_snapshot;
  auto* changes_cmd = app.add_subcommand("changes", "License changes across package versions");
  changes_cmd->add_option("snapshot", changes_snapshot)->required();

  std::string graph_in;
  std::size_t top = 10;
  auto* scan_cmd = app.add_subcommand("scan", "Check every dependency edge of a graph");
  scan_cmd->add_option("graph", graph_in)->required();
  scan_cmd->add_option("--top", top, "Pairs listed per conflict type")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string explain_id;
  auto* explain_cmd = app.add_subcommand("explain", "Show the 22 term attitudes of a license");
  explain_cmd->add_option("license", explain_id)->required();

  int code = kExitOk;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err);
    out.flush();
    err.flush();
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = format == "records" ? Format::Records : Format::Table;

  try {
    if (normalize_cmd->parsed()) {
      code = cmd_normalize(cfg, norm_inputs, out);
    } else if (parse_cmd->parsed()) {
      code = cmd_parse_expr(cfg, expr_text, out, err);
    } else if (check_cmd->parsed()) {
      code = cmd_check(cfg, parent_raw, dep_raw, out, err);
    } else if (matrix_cmd->parsed()) {
      code = cmd_matrix(cfg, out);
    } else if (mine_cmd->parsed()) {
      code = cmd_mine(cfg, mine_args, out, err);
    } else if (ingest_cmd->parsed()) {
      code = cmd_ingest(cfg, snapshot, graph_out, out);
    } else if (changes_cmd->parsed()) {
      code = cmd_changes(cfg, changes_snapshot, out);
    } else if (scan_cmd->parsed()) {
      code = cmd_scan(cfg, graph_in, top, out);
    } else if (explain_cmd->parsed()) {
      code = cmd_explain(cfg, explain_id, out, err);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitDataError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitDataError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitDataError;
  }
  out.flush();
  err.flush();
  return code;
}

}  // namespace licterm
