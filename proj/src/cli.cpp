/*
   Copyright 2026 The skein-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skein/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "skein/bounds.hpp"
#include "skein/census.hpp"
#include "skein/checks.hpp"
#include "skein/codes.hpp"
#include "skein/families.hpp"
#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "skein/seifert.hpp"

namespace skein::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramFlags {
  std::string pd, dt, gauss, braid;

  void attach(CLI::App* app) {
    app->add_option("--pd", pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    app->add_option("--dt", dt, "DT code, e.g. \"4 6 8 2\"");
    app->add_option("--gauss", gauss, "Gauss code, e.g. \"1 -2 3 -1 2 -3\"");
    app->add_option("--braid", braid, "braid word, e.g. \"1 1 1\"");
  }

  Diagram diagram() const {
    int given = !pd.empty() + !dt.empty() + !gauss.empty() + !braid.empty();
    if (given != 1) throw UsageError("give exactly one of --pd, --dt, --gauss, --braid");
    if (!pd.empty()) return parse_pd(pd);
    if (!dt.empty()) return parse_dt(dt);
    if (!gauss.empty()) return parse_gauss(gauss);
    return parse_braid(braid);
  }
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SKEIN_LAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("SKEIN_LAB_BUDGET must be a positive integer");
    return v;
  }
  return SkeinOptions{}.budget;
}

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Seed file for `twist`: either
//   P1: <canonical polynomial>
//   Pinf: <canonical polynomial>
// or a diagram line (pd:/dt:/gauss:/braid:) and `crossing: <id>` naming a
// positive crossing of it.
std::pair<Laurent2, Laurent2> read_twist_seed(const std::string& path, const SkeinOptions& opts) {
  std::optional<Laurent2> p1, pinf;
  std::optional<Diagram> diagram;
  std::optional<int> crossing;
  std::istringstream in(read_file(path));
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto colon = line.find(':');
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    if (key.empty() || key[0] == '#') continue;
    if (colon == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key: value");
    std::string value = line.substr(colon + 1);
    if (key == "P1")
      p1 = Laurent2::parse(value);
    else if (key == "Pinf")
      pinf = Laurent2::parse(value);
    else if (key == "crossing")
      crossing = std::stoi(value);
    else
      diagram = parse_diagram(line);
  }
  if (p1 && pinf) return {*p1, *pinf};
  if (diagram && crossing) {
    if (*crossing < 0 || *crossing >= diagram->crossing_count()) throw UsageError("seed crossing id out of range");
    if (diagram->sign(*crossing) < 0) throw UsageError("seed crossing must be positive");
    return {homfly(*diagram, opts), homfly(diagram->smoothed(*crossing), opts)};
  }
  throw UsageError(path + ": seed needs P1 and Pinf lines, or a diagram and a crossing line");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

Json seifert_json(const SeifertData& s) {
  Json j;
  j["c"] = s.c;
  j["s"] = s.s;
  j["genus"] = s.genus;
  j["homogeneous"] = s.homogeneous;
  j["positive"] = s.positive;
  j["negative"] = s.negative;
  j["writhe"] = s.writhe;
  j["circles"] = s.circles;
  Json edges = Json::array();
  for (const auto& e : s.graph) edges.push_back({{"u", e.u}, {"v", e.v}, {"sign", e.sign}, {"crossing", e.crossing}});
  j["graph"] = edges;
  j["blocks"] = s.blocks;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"skein-lab: HOMFLY and Kauffman polynomials, diagram genus and Legendrian bounds", "skein-lab"};
  app.require_subcommand(1);

  std::string format = "text", out_path;
  std::optional<std::uint64_t> budget_flag;
  bool no_kauffman = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write output to this path");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_flag, "skein node budget (default 10000000 or $SKEIN_LAB_BUDGET)")
        ->check(CLI::PositiveNumber);
  };

  DiagramFlags dflags;
  auto* poly = app.add_subcommand("poly", "HOMFLY polynomial P(l, m)");
  auto* kauf = app.add_subcommand("kauffman", "Kauffman polynomial F(a, z)");
  auto* seif = app.add_subcommand("seifert", "Seifert circles, graph, blocks and genus");
  auto* bnds = app.add_subcommand("bounds", "degree bounds report");
  auto* chk = app.add_subcommand("check", "run the invariant suite on a diagram");
  for (auto* sub : {poly, kauf, seif, bnds, chk}) {
    dflags.attach(sub);
    add_common(sub);
  }
  for (auto* sub : {poly, kauf, bnds, chk}) add_budget(sub);
  bnds->add_flag("--no-kauffman", no_kauffman, "skip F and the PF check");
  chk->add_flag("--no-kauffman", no_kauffman, "skip the Kauffman checks");
  std::optional<int> tb, mu, slice_genus;
  bool transverse = false;
  bnds->add_option("--tb", tb, "Thurston-Bennequin number of a Legendrian representative");
  bnds->add_option("--mu", mu, "its rotation number");
  bnds->add_option("--slice-genus", slice_genus, "externally known slice genus");
  bnds->add_flag("--transverse", transverse, "drop the |mu| term");

  auto* twist = app.add_subcommand("twist", "P after n antiparallel full twists at a positive crossing");
  std::string seed_path;
  int n = -1;
  twist->add_option("--seed", seed_path, "seed file")->required();
  twist->add_option("--n", n, "number of full twists")->required()->check(CLI::NonNegativeNumber);
  add_common(twist);
  add_budget(twist);

  auto* fam = app.add_subcommand("family", "coefficient growth experiment on a diagram family");
  std::string kind = "pretzel", base = "-3,-5,-1";
  int from = 1, to = 5, k = 3;
  fam->add_option("--kind", kind, "pretzel | torus2 | twist")->check(CLI::IsMember({"pretzel", "torus2", "twist"}));
  fam->add_option("--base", base, "pretzel columns; the last one is twisted to sign*(2j+1)");
  fam->add_option("--from", from, "first member index j");
  fam->add_option("--to", to, "last member index j");
  fam->add_option("--k", k, "exponent of (l^2+1)")->check(CLI::NonNegativeNumber);
  add_common(fam);

  auto* scn = app.add_subcommand("scan", "census scan over a knot table");
  std::string table, results;
  int max_crossings = -1, threads = 1;
  bool shared_cache = false;
  scn->add_option("--table", table, "table of name<TAB>dt:<code> lines")->required();
  scn->add_option("--out", results, "results JSONL path")->required();
  scn->add_option("--max-crossings", max_crossings, "skip knots with more crossings");
  scn->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  scn->add_flag("--no-kauffman", no_kauffman, "skip F and the PF check");
  scn->add_flag("--shared-cache", shared_cache, "share memo tables across knots");
  add_budget(scn);

  auto* rsm = app.add_subcommand("resume", "continue an interrupted census scan");
  std::optional<int> resume_threads;
  rsm->add_option("--results", results, "results JSONL path")->required();
  rsm->add_option("--table", table, "the table the results were started from")->required();
  rsm->add_option("--threads", resume_threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    SkeinOptions opts;
    opts.budget = budget_flag ? *budget_flag : default_budget();
    const bool json = format == "json";

    if (poly->parsed() || kauf->parsed()) {
      Diagram d = dflags.diagram();
      Laurent2 value = poly->parsed() ? homfly(d, opts) : kauffman(d, opts);
      Sink sink(out_path, out);
      if (json)
        sink.stream() << Json{{poly->parsed() ? "P" : "F", value.to_string()}}.dump() << '\n';
      else
        sink.stream() << value.to_string() << '\n';
      return kExitOk;
    }

    if (seif->parsed()) {
      Diagram d = dflags.diagram();
      SeifertData s = seifert(d);
      Sink sink(out_path, out);
      if (json) {
        sink.stream() << seifert_json(s).dump() << '\n';
      } else {
        sink.stream() << "c=" << s.c << "\ns=" << s.s << "\ngenus=" << s.genus
                      << "\nhomogeneous=" << (s.homogeneous ? "true" : "false")
                      << "\npositive=" << (s.positive ? "true" : "false")
                      << "\nnegative=" << (s.negative ? "true" : "false") << "\nwrithe=" << s.writhe
                      << "\nblocks=" << s.blocks.size() << '\n';
      }
      return kExitOk;
    }

    if (bnds->parsed()) {
      Diagram d = dflags.diagram();
      if (!d.is_knot()) throw DiagramError("bounds need a knot diagram");
      Laurent2 p = homfly(d, opts);
      std::optional<Laurent2> f;
      if (!no_kauffman) f = kauffman(d, opts);
      GenusVerdict g = certified_genus(d);
      BoundsReport r = bounds_report(p, f, g.certified ? std::optional<int>(g.genus) : std::nullopt);
      if (tb.has_value() != mu.has_value()) throw UsageError("--tb and --mu go together");
      std::optional<BennequinCheck> bc;
      if (tb) bc = bennequin_check({*tb, *mu}, g.genus, p, transverse);
      std::optional<int> slice_slack;
      if (slice_genus) {
        if (!tb) throw UsageError("--slice-genus needs --tb and --mu");
        slice_slack = slice_bennequin_slack({*tb, *mu}, *slice_genus);
      }
      Sink sink(out_path, out);
      if (json) {
        Json j = to_json(r);
        if (bc) j["bennequin"] = {{"bi_slack", bc->bi_slack}, {"tbm_slack", bc->tbm_slack}, {"consistent", bc->consistent}};
        if (slice_slack) j["slice_bennequin_slack"] = *slice_slack;
        sink.stream() << j.dump() << '\n';
      } else {
        sink.stream() << to_text(r);
        if (bc) sink.stream() << "bi_slack=" << bc->bi_slack << "\ntbm_slack=" << bc->tbm_slack << '\n';
        if (slice_slack) sink.stream() << "slice_bennequin_slack=" << *slice_slack << '\n';
      }
      if (bc && !bc->consistent) err << "warning: negative slack; the supplied (tb, mu) is inconsistent with the bounds\n";
      return kExitOk;
    }

    if (chk->parsed()) {
      Diagram d = dflags.diagram();
      auto results_list = invariant_suite(d, !no_kauffman, opts);
      bool all = std::all_of(results_list.begin(), results_list.end(), [](const CheckResult& c) { return c.passed; });
      Sink sink(out_path, out);
      if (json) {
        Json arr = Json::array();
        for (const auto& c : results_list) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        sink.stream() << Json{{"passed", all}, {"checks", arr}}.dump() << '\n';
      } else {
        for (const auto& c : results_list) sink.stream() << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
      }
      return all ? kExitOk : kExitError;
    }

    if (twist->parsed()) {
      auto [p1, pinf] = read_twist_seed(seed_path, opts);
      Laurent2 p = twist_extend(p1, pinf, n);
      Sink sink(out_path, out);
      if (json)
        sink.stream() << Json{{"n", n}, {"P", p.to_string()}}.dump() << '\n';
      else
        sink.stream() << p.to_string() << '\n';
      return kExitOk;
    }

    if (fam->parsed()) {
      if (from > to) throw UsageError("--from must not exceed --to");
      std::vector<Diagram> members;
      std::vector<int> cols = parse_int_list(base);
      for (int j = from; j <= to; ++j) {
        if (kind == "torus2") {
          members.push_back(torus2(2 * j + 1));
        } else if (kind == "twist") {
          members.push_back(twist_knot(j));
        } else {
          std::vector<int> c = cols;
          c.back() = (c.back() < 0 ? -1 : 1) * (2 * j + 1);
          members.push_back(pretzel(c));
        }
      }
      auto rows = finiteness_experiment(members, k);
      Sink sink(out_path, out);
      if (json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back({{"j", from + r.member},
                         {"crossings", members[static_cast<std::size_t>(r.member)].crossing_count()},
                         {"max_abs_coeff", r.max_abs_coeff},
                         {"span_l", r.span_l},
                         {"mindeg_l", r.mindeg_l},
                         {"genus", r.genus},
                         {"genus_certified", r.genus_certified},
                         {"bennequin_slack", r.bennequin_slack ? Json(*r.bennequin_slack) : Json(nullptr)}});
        }
        sink.stream() << arr.dump() << '\n';
      } else {
        sink.stream() << "j,crossings,max_abs_coeff,span_l,mindeg_l,genus,genus_certified,bennequin_slack\n";
        for (const auto& r : rows) {
          sink.stream() << from + r.member << ',' << members[static_cast<std::size_t>(r.member)].crossing_count() << ','
                        << r.max_abs_coeff << ',' << r.span_l << ',' << r.mindeg_l << ',' << r.genus << ','
                        << (r.genus_certified ? "true" : "false") << ','
                        << (r.bennequin_slack ? std::to_string(*r.bennequin_slack) : "none") << '\n';
        }
      }
      return kExitOk;
    }

    CensusSummary summary;
    if (scn->parsed()) {
      CensusOptions copts;
      copts.max_crossings = max_crossings;
      copts.budget = opts.budget;
      copts.kauffman = !no_kauffman;
      copts.threads = threads;
      copts.shared_cache = shared_cache;
      summary = scan(table, results, copts);
    } else {
      summary = resume(results, table, resume_threads);
    }
    out << summary.to_csv();
    for (const auto& name : summary.pf_failures) err << "pf_fails: " << name << '\n';
    if (summary.skipped > 0) err << summary.skipped << " knot(s) skipped (budget)\n";
    return summary.partial() ? kExitPartial : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace skein::cli
