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

#include "skein/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace skein {

namespace {

using Coeff = Laurent2::Coeff;
using Term = Laurent2::Term;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in multiplication");
  return r;
}

Coeff checked_neg(Coeff a) {
  if (a == INT64_MIN) throw CoefficientOverflow("coefficient overflow in negation");
  return -a;
}

bool lex_less(const Term& a, const Term& b) {
  return a.e1 != b.e1 ? a.e1 < b.e1 : a.e2 < b.e2;
}

// Sorts and merges equal exponents, dropping zeros.
void normalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), lex_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Term acc = ts[i++];
    while (i < ts.size() && ts[i].e1 == acc.e1 && ts[i].e2 == acc.e2) acc.c = checked_add(acc.c, ts[i++].c);
    if (acc.c != 0) ts[out++] = acc;
  }
  ts.resize(out);
}

Rational rational_pow(const Rational& x, int e) {
  Rational base = e < 0 ? Rational(1) / x : x;
  unsigned n = static_cast<unsigned>(e < 0 ? -static_cast<long>(e) : e);
  Rational r = 1;
  while (n) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1u;
  }
  return r;
}

}  // namespace

Laurent2 Laurent2::constant(Coeff c, Vars vars) { return monomial(c, 0, 0, vars); }

Laurent2 Laurent2::monomial(Coeff c, int e1, int e2, Vars vars) {
  Laurent2 p(vars);
  if (c != 0) p.terms_.push_back({e1, e2, c});
  return p;
}

Laurent2 Laurent2::from_terms(std::vector<Term> terms, Vars vars) {
  Laurent2 p(vars);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

void Laurent2::require_same_vars(const Laurent2& q) const {
  if (!(vars_ == q.vars_)) {
    throw VariableMismatch(std::string("variable mismatch: (") + vars_.first + "," + vars_.second +
                           ") vs (" + q.vars_.first + "," + q.vars_.second + ")");
  }
}

Laurent2::Coeff Laurent2::coeff(int e1, int e2) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e1, e2, 0}, lex_less);
  return (it != terms_.end() && it->e1 == e1 && it->e2 == e2) ? it->c : 0;
}

Laurent2 Laurent2::coeff_in_var(int var_index, int k) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (var_index == 0 && t.e1 == k) out.push_back({0, t.e2, t.c});
    if (var_index == 1 && t.e2 == k) out.push_back({t.e1, 0, t.c});
  }
  return from_terms(std::move(out), vars_);
}

Degrees Laurent2::degrees(int var_index) const {
  if (terms_.empty()) throw ZeroPolynomial("degrees of the zero polynomial are undefined");
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const Term& t : terms_) {
    int e = var_index == 0 ? t.e1 : t.e2;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi, hi - lo};
}

Laurent2::Coeff Laurent2::max_abs_coeff() const {
  Coeff m = 0;
  for (const Term& t : terms_) m = std::max(m, t.c < 0 ? checked_neg(t.c) : t.c);
  return m;
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r(*this);
  for (Term& t : r.terms_) t.c = checked_neg(t.c);
  return r;
}

Laurent2& Laurent2::operator+=(const Laurent2& q) {
  require_same_vars(q);
  if (q.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.cbegin();
  auto b = q.terms_.cbegin();
  while (a != terms_.cend() || b != q.terms_.cend()) {
    if (b == q.terms_.cend() || (a != terms_.cend() && lex_less(*a, *b))) {
      merged.push_back(*a++);
    } else if (a == terms_.cend() || lex_less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Coeff c = checked_add(a->c, b->c);
      if (c != 0) merged.push_back({a->e1, a->e2, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& q) { return *this += -q; }

Laurent2& Laurent2::operator*=(const Laurent2& q) { return *this = *this * q; }

Laurent2 operator*(const Laurent2& p, const Laurent2& q) {
  p.require_same_vars(q);
  std::vector<Term> out;
  out.reserve(p.terms_.size() * q.terms_.size());
  for (const Term& s : p.terms_)
    for (const Term& t : q.terms_) out.push_back({s.e1 + t.e1, s.e2 + t.e2, checked_mul(s.c, t.c)});
  return Laurent2::from_terms(std::move(out), p.vars_);
}

Laurent2 Laurent2::scaled(Coeff c) const {
  if (c == 0) return Laurent2(vars_);
  Laurent2 r(*this);
  for (Term& t : r.terms_) t.c = checked_mul(t.c, c);
  return r;
}

Laurent2 Laurent2::shifted(int d1, int d2) const {
  Laurent2 r(*this);
  for (Term& t : r.terms_) {
    t.e1 += d1;
    t.e2 += d2;
  }
  return r;
}

Laurent2 Laurent2::pow(unsigned n) const {
  Laurent2 result = constant(1, vars_);
  Laurent2 base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

Laurent2 Laurent2::exact_div(const Laurent2& d) const {
  require_same_vars(d);
  if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (is_zero()) return Laurent2(vars_);
  // Lex order is a monomial order on Z^2, so lexmin(q) = lexmin(p) - lexmin(d)
  // bounds every quotient term from below when the division is exact.
  const Term& dlead = d.terms_.back();
  const int floor1 = terms_.front().e1 - d.terms_.front().e1;
  const int floor2 = terms_.front().e2 - d.terms_.front().e2;
  Laurent2 rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lead = rem.terms_.back();
    Term qt{lead.e1 - dlead.e1, lead.e2 - dlead.e2, 0};
    bool below_floor = qt.e1 < floor1 || (qt.e1 == floor1 && qt.e2 < floor2);
    if (below_floor || lead.c % dlead.c != 0) {
      throw NonExactDivision("non-exact division of " + to_string() + " by " + d.to_string(), rem.to_string());
    }
    qt.c = lead.c / dlead.c;
    quotient.push_back(qt);
    rem -= d.shifted(qt.e1, qt.e2).scaled(qt.c);
  }
  return from_terms(std::move(quotient), vars_);
}

Rational Laurent2::eval(const Rational& x1, const Rational& x2) const {
  if (x1 == 0 || x2 == 0) throw std::domain_error("evaluation point has a zero coordinate");
  Rational sum = 0;
  for (const Term& t : terms_) sum += Rational(t.c) * rational_pow(x1, t.e1) * rational_pow(x2, t.e2);
  return sum;
}

Laurent2 Laurent2::conjugate(int var_index) const {
  std::vector<Term> out(terms_);
  for (Term& t : out) (var_index == 0 ? t.e1 : t.e2) *= -1;
  return from_terms(std::move(out), vars_);
}

std::string Laurent2::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c);
    s += '*';
    s += vars_.first;
    s += '^';
    s += std::to_string(t.e1);
    s += '*';
    s += vars_.second;
    s += '^';
    s += std::to_string(t.e2);
  }
  return s;
}

Laurent2 Laurent2::parse(std::string_view text, Vars vars) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  auto fail = [&](const std::string& why) -> Laurent2 {
    throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](std::string_view v, auto& out) {
    v = trim(v);
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) fail("bad integer '" + std::string(v) + "'");
  };

  std::string_view body = trim(text);
  if (body == "0") return Laurent2(vars);
  if (body.empty()) return fail("empty input");
  std::vector<Term> terms;
  while (!body.empty()) {
    std::size_t sep = body.find(" + ");
    std::string_view piece = trim(body.substr(0, sep));
    body = sep == std::string_view::npos ? std::string_view{} : body.substr(sep + 3);

    // c*X^a*Y^b
    std::size_t star1 = piece.find('*');
    std::size_t star2 = star1 == std::string_view::npos ? star1 : piece.find('*', star1 + 1);
    if (star2 == std::string_view::npos) return fail("expected c*" + std::string(1, vars.first) + "^a*" + vars.second + "^b");
    std::string_view f1 = trim(piece.substr(star1 + 1, star2 - star1 - 1));
    std::string_view f2 = trim(piece.substr(star2 + 1));
    if (f1.size() < 3 || f1[0] != vars.first || f1[1] != '^') return fail("bad first factor");
    if (f2.size() < 3 || f2[0] != vars.second || f2[1] != '^') return fail("bad second factor");
    Term t{};
    read_int(piece.substr(0, star1), t.c);
    read_int(f1.substr(2), t.e1);
    read_int(f2.substr(2), t.e2);
    terms.push_back(t);
  }
  return from_terms(std::move(terms), vars);
}

std::ostream& operator<<(std::ostream& os, const Laurent2& p) { return os << p.to_string(); }

}  // namespace skein
