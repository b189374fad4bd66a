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

// Degree bounds derived from P and F, the twist-box formula and the
// coefficient growth experiment.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

using Ratio = boost::rational<long long>;

std::string to_string(const Ratio& r);
/// Smallest integer >= r.
long long ceil(const Ratio& r);

struct BoundsReport {
  int mindeg_l = 0;
  int maxdeg_l = 0;
  int span_l = 0;
  int maxdeg_m = 0;
  std::optional<int> maxdeg_a;
  /// Braid index lower bound span_l/2 + 1.
  Ratio mfw_lower;
  /// Weak genus lower bound maxdeg_m/2.
  Ratio morton_genus_lower;
  /// Upper bound for max(tb + |mu|) over Legendrian representatives.
  int tau_prime_upper = 0;
  /// The same bound for the mirror image.
  int tau_prime_upper_mirror = 0;
  /// 2g - mindeg_l P, present when a certified genus is supplied.
  std::optional<int> bennequin_slack;
  /// -maxdeg_a F <= mindeg_l P, present when F is supplied.
  std::optional<bool> pf_holds;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Throws ZeroPolynomial for P = 0 and std::invalid_argument if P has
/// negative m-degrees (a link polynomial).
BoundsReport bounds_report(const Laurent2& p, const std::optional<Laurent2>& f = std::nullopt,
                           std::optional<int> certified_genus = std::nullopt);

/// Flat `key=value` lines in field order; absent values print as `none`.
std::string to_text(const BoundsReport& r);
nlohmann::ordered_json to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const nlohmann::json& j);

/// Invariants of a Legendrian representative, supplied from outside.
struct LegendrianDatum {
  int tb = 0;
  int mu = 0;
};

struct BennequinCheck {
  /// (2g - 1) - (tb + |mu|).
  int bi_slack;
  /// (mindeg_l P - 1) - (tb + |mu|).
  int tbm_slack;
  /// Negative slacks mean the supplied data are inconsistent.
  bool consistent;
};

/// With `transverse`, the |mu| term is dropped from both slacks.
BennequinCheck bennequin_check(const LegendrianDatum& datum, int genus, const Laurent2& p, bool transverse = false);

/// (2 g_s - 1) - (tb + |mu|) for an externally supplied slice genus.
int slice_bennequin_slack(const LegendrianDatum& datum, int slice_genus);

/// P of the diagram with n antiparallel full twists inserted at a positive
/// crossing, from P1 (the seed) and Pinf (its oriented smoothing):
///   P_{2n+1} = (-l^2)^n P1 + m Pinf ((-l^2)^n - 1)/(l + 1/l).
Laurent2 twist_extend(const Laurent2& p1, const Laurent2& pinf, int n);

bool pf_check(const Laurent2& p, const Laurent2& f);
/// True if the knot or its mirror violates the PF inequality.
bool pf_fails(const Laurent2& p, const Laurent2& f);

struct FinitenessRow {
  int member;
  Laurent2::Coeff max_abs_coeff;
  int span_l;
  int mindeg_l;
  int genus;
  bool genus_certified;
  /// 2g - mindeg_l P when the genus is certified.
  std::optional<int> bennequin_slack;
};

/// For each member: max |coefficient| of (l^2+1)^k P and span_l P.
std::vector<FinitenessRow> finiteness_experiment(const std::vector<Diagram>& family, int k);

}  // namespace skein
