#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballcomp/lorentz.hpp"

namespace ballcomp {

using Rational = boost::multiprecision::cpp_rational;

// One monomial term alpha * x^a * y^b * d/dx_c (component n means d/dy).
struct PolyTerm {
  int component = 1;   // 1-based; n is the height direction
  Rational coeff = 0;
  std::vector<int> a;  // exponents of x_1..x_{n-1}, all >= 0
  Rational b = 0;      // y-exponent; may turn negative or stay rational
};

// Finite sum of monomial terms on the half-space, kept normalized: terms
// sorted by (component, a, b), duplicate keys merged, zero coefficients
// dropped.  All arithmetic is exact.
class PolyVectorField {
 public:
  explicit PolyVectorField(int n);
  static PolyVectorField from_terms(int n, std::vector<PolyTerm> terms);

  int n() const { return n_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  PolyVectorField operator+(const PolyVectorField& o) const;
  PolyVectorField operator-(const PolyVectorField& o) const;
  PolyVectorField scaled(const Rational& c) const;
  bool operator==(const PolyVectorField& o) const;
  bool operator!=(const PolyVectorField& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<PolyTerm> terms_;
};

// Syntax error with byte position and what the parser wanted there.
class FieldParseError : public std::runtime_error {
 public:
  FieldParseError(std::size_t position, const std::string& expected);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Grammar (see docs/field_grammar.ebnf): sum of terms, each a product of
// numeric and variable factors ending in d/dx<i> or d/dy; '*' optional.
PolyVectorField parse_field(const std::string& text, int n);

// Canonical form: terms in normalized order, signs separating terms,
// exponent 1 and coefficient 1 omitted, fractional or negative y-exponents
// parenthesized.  parse_field(print_field(X), X.n()) == X.
std::string print_field(const PolyVectorField& x);

// Exact pullback under (x, y) -> (x, y^p): x-component terms map to
// exponent p*b; y-component terms pick up coefficient 1/p (chain rule) and
// exponent p*b + 1 - p.  Integer b required (negative allowed so that
// pullbacks compose); p >= 1.
PolyVectorField pullback_monomial(const PolyVectorField& x, int p);

// True iff every y-component term has b >= 1.
bool is_boundary_tangent(const PolyVectorField& x);

// True iff every term has integral b >= 0.
bool is_analytic(const PolyVectorField& x);

// Evaluate at a point (x_1..x_{n-1}, y).  Throws when y = 0 meets a
// negative or fractional y-exponent.
Vec evaluate_poly(const PolyVectorField& x, const Vec& point);

// The chart fields of the tagged generators as exact polynomial fields.
PolyVectorField poly_proj_field(const GeneratorTag& tag, int n);

}  // namespace ballcomp
