#include "ballcomp/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ballcomp {

namespace {

constexpr long long kMaxExponent = 1000000;

int compare_terms(const PolyTerm& s, const PolyTerm& t) {
  if (s.component != t.component) return s.component < t.component ? -1 : 1;
  if (s.a != t.a) return s.a < t.a ? -1 : 1;
  if (s.b != t.b) return s.b < t.b ? -1 : 1;
  return 0;
}

}  // namespace

PolyVectorField::PolyVectorField(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("PolyVectorField: n >= 2 required");
}

PolyVectorField PolyVectorField::from_terms(int n, std::vector<PolyTerm> terms) {
  PolyVectorField x(n);
  for (PolyTerm& t : terms) {
    if (t.component < 1 || t.component > n)
      throw std::invalid_argument("PolyVectorField: component out of range");
    if ((int)t.a.size() != n - 1) t.a.resize(n - 1, 0);
    for (int e : t.a)
      if (e < 0) throw std::invalid_argument("PolyVectorField: negative x-exponent");
  }
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& s, const PolyTerm& t) { return compare_terms(s, t) < 0; });
  for (const PolyTerm& t : terms) {
    if (!x.terms_.empty() && compare_terms(x.terms_.back(), t) == 0)
      x.terms_.back().coeff += t.coeff;
    else
      x.terms_.push_back(t);
  }
  x.terms_.erase(std::remove_if(x.terms_.begin(), x.terms_.end(),
                                [](const PolyTerm& t) { return t.coeff == 0; }),
                 x.terms_.end());
  return x;
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& o) const {
  if (n_ != o.n_) throw std::invalid_argument("field sum: dimension mismatch");
  std::vector<PolyTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(n_, std::move(all));
}

PolyVectorField PolyVectorField::operator-(const PolyVectorField& o) const {
  return *this + o.scaled(-1);
}

PolyVectorField PolyVectorField::scaled(const Rational& c) const {
  std::vector<PolyTerm> all = terms_;
  for (PolyTerm& t : all) t.coeff *= c;
  return from_terms(n_, std::move(all));
}

bool PolyVectorField::operator==(const PolyVectorField& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const PolyTerm &s = terms_[i], &t = o.terms_[i];
    if (compare_terms(s, t) != 0 || s.coeff != t.coeff) return false;
  }
  return true;
}

FieldParseError::FieldParseError(std::size_t position, const std::string& expected)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": expected " + expected),
      position_(position),
      expected_(expected) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  PolyVectorField run() {
    std::vector<PolyTerm> terms;
    skip_ws();
    if (eof()) fail("a term");
    int sign = eat_sign(true);
    for (;;) {
      terms.push_back(parse_term(sign));
      skip_ws();
      if (eof()) break;
      sign = eat_sign(false);
    }
    return PolyVectorField::from_terms(n_, std::move(terms));
  }

 private:
  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (!eof() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw FieldParseError(pos_, expected);
  }

  // '-' or the UTF-8 minus sign; returns +1/-1.  Optional at the start.
  int eat_sign(bool optional) {
    skip_ws();
    if (peek() == '+') { ++pos_; return 1; }
    if (peek() == '-') { ++pos_; return -1; }
    if (pos_ + 2 < s_.size() && (unsigned char)s_[pos_] == 0xE2 &&
        (unsigned char)s_[pos_ + 1] == 0x88 && (unsigned char)s_[pos_ + 2] == 0x92) {
      pos_ += 3;
      return -1;
    }
    if (!optional) fail("'+' or '-' between terms");
    return 1;
  }

  long long parse_digits(const char* what) {
    skip_ws();
    if (!std::isdigit((unsigned char)peek())) fail(what);
    long long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      if (v > kMaxExponent * 1000000LL) fail("a smaller number");
      ++pos_;
    }
    return v;
  }

  // Integer or decimal literal, exact: 1.5 -> 3/2.
  Rational parse_number() {
    std::string whole;
    while (std::isdigit((unsigned char)peek())) whole.push_back(s_[pos_++]);
    if (whole.empty()) fail("a number");
    Rational v{boost::multiprecision::cpp_int(whole)};
    if (peek() == '.') {
      ++pos_;
      std::string frac;
      while (std::isdigit((unsigned char)peek())) frac.push_back(s_[pos_++]);
      if (frac.empty()) fail("digits after the decimal point");
      boost::multiprecision::cpp_int den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      v += Rational(boost::multiprecision::cpp_int(frac), den);
    }
    return v;
  }

  // number, optionally followed by /den.
  Rational parse_rational() {
    Rational v = parse_number();
    if (peek() == '/' && pos_ + 1 < s_.size() &&
        std::isdigit((unsigned char)s_[pos_ + 1])) {
      ++pos_;
      Rational den = parse_number();
      if (den == 0) fail("a nonzero denominator");
      v /= den;
    }
    return v;
  }

  // Exponent after '^': integer, or (possibly signed, possibly rational)
  // inside parentheses.
  Rational parse_exponent() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      int sign = eat_sign(true);
      Rational v = parse_rational();
      skip_ws();
      if (peek() != ')') fail("')'");
      ++pos_;
      return sign * v;
    }
    int sign = eat_sign(true);
    return sign * Rational(parse_digits("an exponent"));
  }

  PolyTerm parse_term(int sign) {
    PolyTerm t;
    t.component = 0;
    t.coeff = sign;
    t.a.assign(n_ - 1, 0);
    for (;;) {
      skip_ws();
      if (eof()) fail("'d/dx<i>' or 'd/dy' to end the term");
      char c = peek();
      if (c == '*') { ++pos_; continue; }
      if (c == 'd') {
        parse_derivative(t);
        return t;
      }
      if (std::isdigit((unsigned char)c)) {
        t.coeff *= parse_rational();
        continue;
      }
      if (c == '(') {
        ++pos_;
        int s = eat_sign(true);
        Rational v = parse_rational();
        skip_ws();
        if (peek() != ')') fail("')'");
        ++pos_;
        t.coeff *= s * v;
        continue;
      }
      if (c == 'x') {
        ++pos_;
        long long k = parse_digits("a variable index");
        if (k < 1 || k > n_ - 1)
          fail("a variable index between 1 and " + std::to_string(n_ - 1));
        Rational e = 1;
        if (peek() == '^') { ++pos_; e = parse_exponent(); }
        if (boost::multiprecision::denominator(e) != 1 || e < 0)
          fail("a non-negative integer exponent on x" + std::to_string(k));
        long long ei = (long long)boost::multiprecision::numerator(e);
        if (t.a[k - 1] + ei > kMaxExponent) fail("a smaller exponent");
        t.a[k - 1] += (int)ei;
        continue;
      }
      if (c == 'y') {
        ++pos_;
        Rational e = 1;
        if (peek() == '^') { ++pos_; e = parse_exponent(); }
        t.b += e;
        continue;
      }
      fail("a coefficient, variable, or 'd/d...'");
    }
  }

  void parse_derivative(PolyTerm& t) {
    if (s_.compare(pos_, 4, "d/dy") == 0) {
      pos_ += 4;
      t.component = n_;
      return;
    }
    if (s_.compare(pos_, 4, "d/dx") == 0) {
      pos_ += 4;
      long long k = parse_digits("a component index after 'd/dx'");
      if (k < 1 || k > n_ - 1)
        fail("a component index between 1 and " + std::to_string(n_ - 1));
      t.component = (int)k;
      return;
    }
    fail("'d/dx<i>' or 'd/dy'");
  }
};

std::string print_rational(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string print_y_exponent(const Rational& b) {
  if (boost::multiprecision::denominator(b) == 1 && b >= 0)
    return print_rational(b);
  return "(" + print_rational(b) + ")";
}

}  // namespace

PolyVectorField parse_field(const std::string& text, int n) {
  if (n < 2) throw std::invalid_argument("parse_field: n >= 2 required");
  return Parser(text, n).run();
}

std::string print_field(const PolyVectorField& x) {
  if (x.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const PolyTerm& t : x.terms()) {
    const bool neg = t.coeff < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (mag != 1) os << print_rational(mag) << " ";
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i] == 0) continue;
      os << "x" << (i + 1);
      if (t.a[i] != 1) os << "^" << t.a[i];
      os << " ";
    }
    if (t.b != 0) {
      os << "y";
      if (t.b != 1) os << "^" << print_y_exponent(t.b);
      os << " ";
    }
    if (t.component == x.n())
      os << "d/dy";
    else
      os << "d/dx" << t.component;
  }
  return os.str();
}

PolyVectorField pullback_monomial(const PolyVectorField& x, int p) {
  if (p <= 0) throw std::invalid_argument("pullback_monomial: p >= 1 required");
  if (p == 1) return x;
  std::vector<PolyTerm> out = x.terms();
  for (PolyTerm& t : out) {
    if (boost::multiprecision::denominator(t.b) != 1)
      throw std::invalid_argument(
          "pullback_monomial: integer y-exponents required");
    if (t.component == x.n()) {
      t.coeff /= p;
      t.b = p * t.b + 1 - p;
    } else {
      t.b = p * t.b;
    }
  }
  return PolyVectorField::from_terms(x.n(), std::move(out));
}

bool is_boundary_tangent(const PolyVectorField& x) {
  for (const PolyTerm& t : x.terms())
    if (t.component == x.n() && t.b < 1) return false;
  return true;
}

bool is_analytic(const PolyVectorField& x) {
  for (const PolyTerm& t : x.terms())
    if (t.b < 0 || boost::multiprecision::denominator(t.b) != 1) return false;
  return true;
}

Vec evaluate_poly(const PolyVectorField& x, const Vec& point) {
  const int n = x.n();
  if (point.size() != n)
    throw std::invalid_argument("evaluate_poly: dimension mismatch");
  const double y = point[n - 1];
  Vec out = Vec::Zero(n);
  for (const PolyTerm& t : x.terms()) {
    double m = static_cast<double>(t.coeff);
    for (int i = 0; i < n - 1; ++i)
      for (int e = 0; e < t.a[i]; ++e) m *= point[i];
    if (t.b != 0) {
      if (y == 0.0) {
        if (t.b < 0)
          throw std::domain_error("evaluate_poly: negative y-exponent at y = 0");
        m = 0.0;
      } else if (boost::multiprecision::denominator(t.b) == 1) {
        long long e = (long long)boost::multiprecision::numerator(t.b);
        const double base = e < 0 ? 1.0 / y : y;
        for (long long i = 0; i < std::llabs(e); ++i) m *= base;
      } else {
        m *= std::pow(y, static_cast<double>(t.b));
      }
    }
    out[t.component - 1] += m;
  }
  return out;
}

PolyVectorField poly_proj_field(const GeneratorTag& tag, int n) {
  std::vector<PolyTerm> terms;
  auto mono = [&](int comp, Rational c, std::vector<int> a, Rational b) {
    PolyTerm t;
    t.component = comp;
    t.coeff = std::move(c);
    t.a = std::move(a);
    t.a.resize(n - 1, 0);
    t.b = std::move(b);
    terms.push_back(std::move(t));
  };
  auto unit = [&](int i) {
    std::vector<int> a(n - 1, 0);
    a[i - 1] = 1;
    return a;
  };
  switch (tag.kind) {
    case GeneratorTag::Kind::X:
      mono(tag.i, 1, {}, 0);
      break;
    case GeneratorTag::Kind::H:
      for (int i = 1; i <= n - 1; ++i) mono(i, 2, unit(i), 0);
      mono(n, 4, {}, 1);
      break;
    case GeneratorTag::Kind::Y: {
      const int i = tag.i;
      mono(i, 1, {}, 1);
      for (int j = 1; j <= n - 1; ++j) {
        std::vector<int> sq(n - 1, 0);
        sq[j - 1] = 2;
        mono(i, j == i ? -1 : 1, sq, 0);
      }
      for (int j = 1; j <= n - 1; ++j) {
        if (j == i) continue;
        std::vector<int> ab(n - 1, 0);
        ab[i - 1] = 1;
        ab[j - 1] = 1;
        mono(j, -2, ab, 0);
      }
      mono(n, -4, unit(i), 1);
      break;
    }
    case GeneratorTag::Kind::R:
      mono(tag.i, -1, unit(tag.j), 0);
      mono(tag.j, 1, unit(tag.i), 0);
      break;
  }
  return PolyVectorField::from_terms(n, std::move(terms));
}

}  // namespace ballcomp
