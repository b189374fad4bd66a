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

#include "skein/bounds.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "skein/seifert.hpp"

namespace skein {

std::string to_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

long long ceil(const Ratio& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

namespace {

Ratio parse_ratio(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Ratio(std::stoll(s));
  return Ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

BoundsReport bounds_report(const Laurent2& p, const std::optional<Laurent2>& f, std::optional<int> certified_genus) {
  Degrees dl = p.degrees(0), dm = p.degrees(1);
  if (dm.mindeg < 0) throw std::invalid_argument("bounds need a knot polynomial (negative m-degree found)");
  BoundsReport r;
  r.mindeg_l = dl.mindeg;
  r.maxdeg_l = dl.maxdeg;
  r.span_l = dl.span;
  r.maxdeg_m = dm.maxdeg;
  r.mfw_lower = Ratio(dl.span, 2) + 1;
  r.morton_genus_lower = Ratio(dm.maxdeg, 2);
  r.tau_prime_upper = dl.mindeg - 1;
  r.tau_prime_upper_mirror = -dl.maxdeg - 1;
  if (certified_genus) r.bennequin_slack = 2 * *certified_genus - dl.mindeg;
  if (f) {
    r.maxdeg_a = maxdeg_a(*f);
    r.pf_holds = pf_check(p, *f);
  }
  return r;
}

std::string to_text(const BoundsReport& r) {
  std::ostringstream os;
  auto opt = [](const auto& v) -> std::string {
    if (!v) return "none";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, bool>)
      return *v ? "true" : "false";
    else
      return std::to_string(*v);
  };
  os << "mindeg_l=" << r.mindeg_l << '\n'
     << "maxdeg_l=" << r.maxdeg_l << '\n'
     << "span_l=" << r.span_l << '\n'
     << "maxdeg_m=" << r.maxdeg_m << '\n'
     << "maxdeg_a=" << opt(r.maxdeg_a) << '\n'
     << "mfw_lower=" << to_string(r.mfw_lower) << '\n'
     << "morton_genus_lower=" << to_string(r.morton_genus_lower) << '\n'
     << "tau_prime_upper=" << r.tau_prime_upper << '\n'
     << "tau_prime_upper_mirror=" << r.tau_prime_upper_mirror << '\n'
     << "bennequin_slack=" << opt(r.bennequin_slack) << '\n'
     << "pf_holds=" << opt(r.pf_holds) << '\n';
  return os.str();
}

nlohmann::ordered_json to_json(const BoundsReport& r) {
  nlohmann::ordered_json j;
  j["mindeg_l"] = r.mindeg_l;
  j["maxdeg_l"] = r.maxdeg_l;
  j["span_l"] = r.span_l;
  j["maxdeg_m"] = r.maxdeg_m;
  j["maxdeg_a"] = r.maxdeg_a ? nlohmann::ordered_json(*r.maxdeg_a) : nlohmann::ordered_json(nullptr);
  j["mfw_lower"] = to_string(r.mfw_lower);
  j["morton_genus_lower"] = to_string(r.morton_genus_lower);
  j["tau_prime_upper"] = r.tau_prime_upper;
  j["tau_prime_upper_mirror"] = r.tau_prime_upper_mirror;
  j["bennequin_slack"] = r.bennequin_slack ? nlohmann::ordered_json(*r.bennequin_slack) : nlohmann::ordered_json(nullptr);
  j["pf_holds"] = r.pf_holds ? nlohmann::ordered_json(*r.pf_holds) : nlohmann::ordered_json(nullptr);
  return j;
}

BoundsReport bounds_from_json(const nlohmann::json& j) {
  BoundsReport r;
  r.mindeg_l = j.at("mindeg_l").get<int>();
  r.maxdeg_l = j.at("maxdeg_l").get<int>();
  r.span_l = j.at("span_l").get<int>();
  r.maxdeg_m = j.at("maxdeg_m").get<int>();
  if (!j.at("maxdeg_a").is_null()) r.maxdeg_a = j.at("maxdeg_a").get<int>();
  r.mfw_lower = parse_ratio(j.at("mfw_lower").get<std::string>());
  r.morton_genus_lower = parse_ratio(j.at("morton_genus_lower").get<std::string>());
  r.tau_prime_upper = j.at("tau_prime_upper").get<int>();
  r.tau_prime_upper_mirror = j.at("tau_prime_upper_mirror").get<int>();
  if (!j.at("bennequin_slack").is_null()) r.bennequin_slack = j.at("bennequin_slack").get<int>();
  if (!j.at("pf_holds").is_null()) r.pf_holds = j.at("pf_holds").get<bool>();
  return r;
}

BennequinCheck bennequin_check(const LegendrianDatum& datum, int genus, const Laurent2& p, bool transverse) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  const int lhs = datum.tb + (transverse ? 0 : std::abs(datum.mu));
  BennequinCheck c{};
  c.bi_slack = (2 * genus - 1) - lhs;
  c.tbm_slack = (p.degrees(0).mindeg - 1) - lhs;
  c.consistent = c.bi_slack >= 0 && c.tbm_slack >= 0;
  return c;
}

int slice_bennequin_slack(const LegendrianDatum& datum, int slice_genus) {
  if (slice_genus < 0) throw std::invalid_argument("slice genus must be nonnegative");
  return (2 * slice_genus - 1) - (datum.tb + std::abs(datum.mu));
}

Laurent2 twist_extend(const Laurent2& p1, const Laurent2& pinf, int n) {
  if (n < 0) throw std::invalid_argument("twist count must be nonnegative");
  const Vars v = p1.vars();
  Laurent2 power = Laurent2::monomial(n % 2 == 0 ? 1 : -1, 2 * n, 0, v);
  Laurent2 l_plus_inv = Laurent2::from_terms({{1, 0, 1}, {-1, 0, 1}}, v);
  Laurent2 prefactor;
  try {
    prefactor = (power - Laurent2::constant(1, v)).exact_div(l_plus_inv);
  } catch (const NonExactDivision& e) {
    throw std::logic_error(std::string("twist prefactor division failed: ") + e.what());
  }
  return power * p1 + prefactor * pinf.shifted(0, 1);
}

bool pf_check(const Laurent2& p, const Laurent2& f) { return -maxdeg_a(f) <= p.degrees(0).mindeg; }

bool pf_fails(const Laurent2& p, const Laurent2& f) {
  return !pf_check(p, f) || !pf_check(conjugate_l(p), f.conjugate(0));
}

std::vector<FinitenessRow> finiteness_experiment(const std::vector<Diagram>& family, int k) {
  if (k < 0) throw std::invalid_argument("twist-region count must be nonnegative");
  const Laurent2 clear = Laurent2::from_terms({{2, 0, 1}, {0, 0, 1}}).pow(static_cast<unsigned>(k));
  std::vector<FinitenessRow> rows;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Laurent2 p = homfly(family[i]);
    GenusVerdict g = certified_genus(family[i]);
    Degrees dl = p.degrees(0);
    FinitenessRow row{static_cast<int>(i), (clear * p).max_abs_coeff(), dl.span, dl.mindeg, g.genus, g.certified,
                      std::nullopt};
    if (g.certified) row.bennequin_slack = 2 * g.genus - dl.mindeg;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace skein
