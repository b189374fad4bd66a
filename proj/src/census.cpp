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

#include "skein/census.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "skein/codes.hpp"
#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "skein/seifert.hpp"

namespace skein {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int count_entries(const std::string& code) {
  int n = 0;
  bool in_token = false;
  for (char ch : code) {
    bool sep = ch == ',' || ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch));
    if (!sep && !in_token) ++n;
    in_token = !sep;
  }
  return n;
}

const char* status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::computed: return "computed";
    case RecordStatus::skipped: return "skipped";
    case RecordStatus::parse_error: return "parse_error";
  }
  return "";
}

RecordStatus parse_status(const std::string& s) {
  if (s == "computed") return RecordStatus::computed;
  if (s == "skipped") return RecordStatus::skipped;
  if (s == "parse_error") return RecordStatus::parse_error;
  throw CensusError("unknown record status '" + s + "'");
}

}  // namespace

nlohmann::ordered_json CensusOptions::to_json() const {
  nlohmann::ordered_json j;
  j["max_crossings"] = max_crossings;
  j["budget"] = budget;
  j["kauffman"] = kauffman;
  return j;
}

CensusOptions CensusOptions::from_json(const nlohmann::json& j) {
  CensusOptions o;
  o.max_crossings = j.at("max_crossings").get<int>();
  o.budget = j.at("budget").get<std::uint64_t>();
  o.kauffman = j.at("kauffman").get<bool>();
  return o;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

std::vector<TableEntry> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CensusError("cannot read table '" + path + "'");
  std::vector<TableEntry> entries;
  std::set<std::string> names;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto tab = t.find('\t');
    if (tab == std::string::npos) throw CensusError(path + ":" + std::to_string(lineno) + ": expected name<TAB>dt:<code>");
    std::string name = trim(t.substr(0, tab)), code = trim(t.substr(tab + 1));
    if (code.rfind("dt:", 0) != 0) throw CensusError(path + ":" + std::to_string(lineno) + ": expected a dt: code");
    code = trim(code.substr(3));
    if (!names.insert(name).second) throw CensusError(path + ":" + std::to_string(lineno) + ": duplicate name '" + name + "'");
    entries.push_back({name, code, count_entries(code)});
  }
  return entries;
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CensusError("cannot read '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buf[1 << 15];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

nlohmann::ordered_json CensusRecord::to_json() const {
  using J = nlohmann::ordered_json;
  J j;
  j["name"] = name;
  j["dt_code"] = dt_code;
  j["crossings"] = crossings;
  j["status"] = status_name(status);
  j["P"] = p ? J(p->to_string()) : J(nullptr);
  j["F"] = f ? J(f->to_string()) : J(nullptr);
  j["bounds"] = bounds ? skein::to_json(*bounds) : J(nullptr);
  j["pf_fails"] = pf_fails ? J(*pf_fails) : J(nullptr);
  j["error"] = error.empty() ? J(nullptr) : J(error);
  return j;
}

CensusRecord CensusRecord::from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.name = j.at("name").get<std::string>();
  r.dt_code = j.at("dt_code").get<std::string>();
  r.crossings = j.at("crossings").get<int>();
  r.status = parse_status(j.at("status").get<std::string>());
  if (!j.at("P").is_null()) r.p = Laurent2::parse(j.at("P").get<std::string>(), kHomflyVars);
  if (!j.at("F").is_null()) r.f = Laurent2::parse(j.at("F").get<std::string>(), kKauffmanVars);
  if (!j.at("bounds").is_null()) r.bounds = bounds_from_json(j.at("bounds"));
  if (!j.at("pf_fails").is_null()) r.pf_fails = j.at("pf_fails").get<bool>();
  if (j.contains("error") && !j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  return r;
}

CensusRecord compute_record(const TableEntry& entry, const CensusOptions& options, SkeinCache* homfly_cache,
                            SkeinCache* kauffman_cache) {
  CensusRecord r;
  r.name = entry.name;
  r.dt_code = entry.dt_code;
  r.crossings = entry.crossings;
  Diagram d;
  try {
    d = parse_dt(entry.dt_code);
  } catch (const std::exception& e) {
    r.status = RecordStatus::parse_error;
    r.error = e.what();
    return r;
  }
  try {
    SkeinOptions hopts{options.budget, homfly_cache, nullptr};
    Laurent2 p = homfly(d, hopts);
    std::optional<Laurent2> f;
    if (options.kauffman) {
      SkeinOptions kopts{options.budget, kauffman_cache, nullptr};
      f = kauffman(d, kopts);
    }
    GenusVerdict g = certified_genus(d);
    r.bounds = bounds_report(p, f, g.certified ? std::optional<int>(g.genus) : std::nullopt);
    if (f) r.pf_fails = pf_fails(p, *f);
    r.p = std::move(p);
    r.f = std::move(f);
  } catch (const std::exception& e) {
    r = CensusRecord{entry.name, entry.dt_code, entry.crossings, RecordStatus::skipped, {}, {}, {}, {}, e.what()};
  }
  return r;
}

void CensusSummary::add(const CensusRecord& r) {
  ++records;
  SummaryRow& row = by_crossings[r.crossings];
  ++row.count;
  if (r.status == RecordStatus::skipped) ++skipped;
  if (r.status == RecordStatus::parse_error) ++parse_errors;
  if (r.pf_fails.value_or(false)) {
    ++row.pf_violations;
    pf_failures.push_back(r.name);
  }
}

std::string CensusSummary::to_csv() const {
  std::ostringstream os;
  os << "crossings,count,pf_violations\n";
  for (const auto& [c, row] : by_crossings) os << c << ',' << row.count << ',' << row.pf_violations << '\n';
  return os.str();
}

std::string summary_path(const std::string& results_path) {
  std::string base = results_path;
  const std::string ext = ".jsonl";
  if (base.size() > ext.size() && base.compare(base.size() - ext.size(), ext.size(), ext) == 0)
    base.resize(base.size() - ext.size());
  return base + ".summary.csv";
}

namespace {

std::vector<TableEntry> selected_entries(const std::string& table_path, const CensusOptions& options) {
  std::vector<TableEntry> all = read_table(table_path), out;
  for (auto& e : all)
    if (options.max_crossings < 0 || e.crossings <= options.max_crossings) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [](const TableEntry& a, const TableEntry& b) { return natural_less(a.name, b.name); });
  return out;
}

std::string header_line(const std::string& table_hash, const CensusOptions& options) {
  nlohmann::ordered_json h;
  h["type"] = "header";
  h["table_sha256"] = table_hash;
  h["options"] = options.to_json();
  h["version"] = kVersion;
  return h.dump();
}

// Computes entries[start..] on a worker pool and appends them to `out` in
// order, flushing after each line so an interrupted run can resume.
void execute(const std::vector<TableEntry>& entries, std::size_t start, const CensusOptions& options,
             std::ostream& out, CensusSummary& summary) {
  const std::size_t n = entries.size();
  if (start >= n) return;
  std::unique_ptr<SkeinCache> hcache, kcache;
  if (options.shared_cache) {
    hcache = std::make_unique<SkeinCache>();
    kcache = std::make_unique<SkeinCache>();
  }
  std::vector<std::optional<CensusRecord>> done(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{start};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      CensusRecord r = compute_record(entries[i], options, hcache.get(), kcache.get());
      std::lock_guard lock(mu);
      done[i] = std::move(r);
      ready.notify_all();
    }
  };
  const int threads = std::max(1, options.threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (std::size_t i = start; i < n; ++i) {
    CensusRecord r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i].has_value(); });
      r = std::move(*done[i]);
      done[i].reset();
    }
    out << r.to_json().dump() << '\n';
    out.flush();
    summary.add(r);
  }
  for (auto& t : pool) t.join();
}

void write_summary(const std::string& results_path, const CensusSummary& summary) {
  std::ofstream out(summary_path(results_path), std::ios::binary | std::ios::trunc);
  if (!out) throw CensusError("cannot write '" + summary_path(results_path) + "'");
  out << summary.to_csv();
}

}  // namespace

CensusSummary scan(const std::string& table_path, const std::string& results_path, const CensusOptions& options) {
  std::vector<TableEntry> entries = selected_entries(table_path, options);
  const std::string hash = sha256_file(table_path);
  std::ofstream out(results_path, std::ios::binary | std::ios::trunc);
  if (!out) throw CensusError("cannot write '" + results_path + "'");
  out << header_line(hash, options) << '\n';
  out.flush();
  CensusSummary summary;
  execute(entries, 0, options, out, summary);
  write_summary(results_path, summary);
  return summary;
}

CensusSummary resume(const std::string& results_path, const std::string& table_path, std::optional<int> threads) {
  std::string content;
  {
    std::ifstream in(results_path, std::ios::binary);
    if (!in) throw CensusError("cannot read results '" + results_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  // Only newline-terminated lines are complete; a trailing fragment is an
  // interrupted write and is discarded.
  std::vector<std::string> lines;
  for (std::size_t pos = 0, nl; (nl = content.find('\n', pos)) != std::string::npos; pos = nl + 1)
    lines.push_back(content.substr(pos, nl - pos));

  if (lines.empty()) {
    CensusOptions options;
    if (threads) options.threads = *threads;
    return scan(table_path, results_path, options);
  }

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(lines[0]);
  } catch (const std::exception&) {
    throw CensusError(results_path + ":1: corrupt header line");
  }
  if (!header.is_object() || header.value("type", "") != "header")
    throw CensusError(results_path + ":1: missing results header");
  CensusOptions options;
  try {
    options = CensusOptions::from_json(header.at("options"));
  } catch (const std::exception&) {
    throw CensusError(results_path + ":1: header has malformed options");
  }
  if (threads) options.threads = *threads;
  const std::string hash = sha256_file(table_path);
  if (header.value("table_sha256", "") != hash)
    throw CensusError("table '" + table_path + "' does not match the hash recorded in '" + results_path + "'");

  std::vector<TableEntry> entries = selected_entries(table_path, options);
  CensusSummary summary;
  std::size_t kept_bytes = lines[0].size() + 1;
  std::size_t kept = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = results_path + ":" + std::to_string(i + 1) + ": ";
    CensusRecord r;
    try {
      r = CensusRecord::from_json(nlohmann::json::parse(lines[i]));
    } catch (const std::exception& e) {
      throw CensusError(where + "corrupt record (" + e.what() + ")");
    }
    if (kept >= entries.size() || r.name != entries[kept].name)
      throw CensusError(where + "record '" + r.name + "' is not the next table entry");
    summary.add(r);
    ++kept;
    kept_bytes += lines[i].size() + 1;
  }

  std::filesystem::resize_file(results_path, kept_bytes);
  std::ofstream out(results_path, std::ios::binary | std::ios::app);
  if (!out) throw CensusError("cannot append to '" + results_path + "'");
  execute(entries, kept, options, out, summary);
  write_summary(results_path, summary);
  return summary;
}

}  // namespace skein
