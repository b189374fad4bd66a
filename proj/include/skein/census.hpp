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

// Batch computation over a knot table with JSON-lines persistence.
//
// Results file: a header line
//   {"type":"header","table_sha256":...,"options":{...},"version":...}
// followed by one record per knot in natural name order. Output bytes depend
// only on the table contents and the options in the header.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "skein/bounds.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

inline constexpr const char* kVersion = "0.1.0";

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  /// Knots with more crossings are left out; negative means no limit.
  int max_crossings = -1;
  std::uint64_t budget = 10'000'000;
  bool kauffman = true;
  /// Execution only; never affects output.
  int threads = 1;
  /// Share memo tables across knots (uses more memory).
  bool shared_cache = false;

  nlohmann::ordered_json to_json() const;
  static CensusOptions from_json(const nlohmann::json& j);
};

struct TableEntry {
  std::string name;
  std::string dt_code;
  int crossings;
};

/// Reads `name<TAB>dt:<code>` lines; blank lines and `#` comments are
/// skipped. Throws CensusError for unreadable files, bad lines or duplicate
/// names.
std::vector<TableEntry> read_table(const std::string& path);

/// SHA-256 of the file bytes, lowercase hex.
std::string sha256_file(const std::string& path);

/// Name order with digit runs compared numerically ("9_1" < "10_1").
bool natural_less(const std::string& a, const std::string& b);

enum class RecordStatus { computed, skipped, parse_error };

struct CensusRecord {
  std::string name;
  std::string dt_code;
  int crossings = 0;
  RecordStatus status = RecordStatus::computed;
  std::optional<Laurent2> p;
  std::optional<Laurent2> f;
  std::optional<BoundsReport> bounds;
  std::optional<bool> pf_fails;
  /// Reason for a skip or parse error.
  std::string error;

  nlohmann::ordered_json to_json() const;
  static CensusRecord from_json(const nlohmann::json& j);
};

CensusRecord compute_record(const TableEntry& entry, const CensusOptions& options, SkeinCache* homfly_cache = nullptr,
                            SkeinCache* kauffman_cache = nullptr);

struct SummaryRow {
  int count = 0;
  int pf_violations = 0;
};

struct CensusSummary {
  std::map<int, SummaryRow> by_crossings;
  int records = 0;
  int skipped = 0;
  int parse_errors = 0;
  std::vector<std::string> pf_failures;

  bool partial() const { return skipped > 0; }
  /// `crossings,count,pf_violations` with a header row.
  std::string to_csv() const;
  void add(const CensusRecord& r);
};

/// Scans the table, writing results_path and, next to it, the summary CSV
/// (see summary_path).
CensusSummary scan(const std::string& table_path, const std::string& results_path, const CensusOptions& options);

/// Continues an interrupted scan. Options come from the results header;
/// only `threads` may be overridden. Throws CensusError if the table does
/// not match the recorded hash or a complete results line is corrupt.
CensusSummary resume(const std::string& results_path, const std::string& table_path,
                     std::optional<int> threads = std::nullopt);

/// results.jsonl -> results.summary.csv
std::string summary_path(const std::string& results_path);

}  // namespace skein
