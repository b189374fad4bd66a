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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

using Rational = boost::multiprecision::cpp_rational;

/// Ordered pair of single-letter variable labels, e.g. (l, m) or (a, z).
struct Vars {
  char first = 'l';
  char second = 'm';

  friend bool operator==(const Vars&, const Vars&) = default;
};

inline constexpr Vars kHomflyVars{'l', 'm'};
inline constexpr Vars kKauffmanVars{'a', 'z'};

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ZeroPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Laurent2;

/// Thrown by exact_div when the divisor does not divide; carries the
/// remainder left after removing every quotient term that could be peeled.
class NonExactDivision : public std::domain_error {
 public:
  NonExactDivision(const std::string& what, std::string remainder)
      : std::domain_error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

struct Degrees {
  int mindeg;
  int maxdeg;
  int span;

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

/// Sparse bivariate Laurent polynomial with int64 coefficients.
///
/// Terms are kept sorted by (e1, e2) and never carry a zero coefficient, so
/// structural equality is polynomial equality. Every coefficient operation is
/// overflow-checked and throws CoefficientOverflow rather than wrapping.
class Laurent2 {
 public:
  using Coeff = std::int64_t;

  struct Term {
    int e1;
    int e2;
    Coeff c;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Laurent2(Vars vars = kHomflyVars) : vars_(vars) {}

  static Laurent2 constant(Coeff c, Vars vars = kHomflyVars);
  static Laurent2 monomial(Coeff c, int e1, int e2, Vars vars = kHomflyVars);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Laurent2 from_terms(std::vector<Term> terms, Vars vars = kHomflyVars);

  /// Parses the canonical text form produced by to_string().
  static Laurent2 parse(std::string_view text, Vars vars = kHomflyVars);

  Vars vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coeff(int e1, int e2) const;
  /// Coefficient of x_var^k as a polynomial in the other variable; the
  /// returned terms have exponent 0 in position var_index.
  Laurent2 coeff_in_var(int var_index, int k) const;

  Degrees degrees(int var_index) const;
  Coeff max_abs_coeff() const;

  Laurent2 operator-() const;
  Laurent2& operator+=(const Laurent2& q);
  Laurent2& operator-=(const Laurent2& q);
  Laurent2& operator*=(const Laurent2& q);

  friend Laurent2 operator+(Laurent2 p, const Laurent2& q) { return p += q; }
  friend Laurent2 operator-(Laurent2 p, const Laurent2& q) { return p -= q; }
  friend Laurent2 operator*(const Laurent2& p, const Laurent2& q);

  Laurent2 scaled(Coeff c) const;
  /// Multiplies by x1^d1 x2^d2.
  Laurent2 shifted(int d1, int d2) const;
  Laurent2 pow(unsigned n) const;

  /// q with q * d == *this; throws NonExactDivision otherwise.
  Laurent2 exact_div(const Laurent2& d) const;

  Rational eval(const Rational& x1, const Rational& x2) const;

  /// Negates the exponents of the given variable (l <-> 1/l for var 0).
  Laurent2 conjugate(int var_index = 0) const;

  /// Canonical form: terms in (e1, e2) order as `c*l^a*m^b` joined by " + ".
  std::string to_string() const;

  friend bool operator==(const Laurent2&, const Laurent2&) = default;

 private:
  void require_same_vars(const Laurent2& q) const;

  Vars vars_;
  std::vector<Term> terms_;
};

inline Laurent2 conjugate_l(const Laurent2& p) { return p.conjugate(0); }

std::ostream& operator<<(std::ostream& os, const Laurent2& p);

}  // namespace skein
