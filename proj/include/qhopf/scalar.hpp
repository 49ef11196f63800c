#pragma once

// Exact coefficient fields: rationals, cyclotomic fields Q(z) with z a
// primitive n-th root of unity, and rational functions in one indeterminate.
// Every value is kept in a canonical form so that equality of values is
// equality of representations.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qhopf {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch(const std::string& a, const std::string& b)
      : Error("field mismatch: " + a + " vs " + b) {}
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Dense univariate polynomial over Q. Coefficients run from degree 0
// upwards; there are never trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const;
  const Rational& lead() const { return c_.back(); }

  // Number of vanishing low-order coefficients (0 for the zero polynomial).
  std::size_t low_zeros() const;
  Poly shifted_down(std::size_t k) const;

  Poly operator-() const;
  Poly scaled(const Rational& s) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// The n-th cyclotomic polynomial.
Poly cyclotomic_polynomial(int n);

enum class FieldKind { rationals, cyclotomic, rational_functions };

class Scalar;

namespace detail {
struct FieldData;
}

// Lightweight handle to an interned field descriptor. Two handles compare
// equal exactly when they describe the same field.
class Field {
 public:
  static Field rationals();
  static Field cyclotomic(int order);
  static Field rational_functions(const std::string& indeterminate);
  // Accepts "rationals", "cyclotomic(N)" and "rational-functions(NAME)".
  static Field parse(std::string_view text);

  FieldKind kind() const;
  int order() const;
  const std::string& indeterminate() const;
  // Cyclotomic polynomial for cyclotomic fields.
  const Poly& modulus() const;
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_rational(const Rational& r) const;
  // z for cyclotomic fields, the indeterminate for rational functions.
  Scalar generator() const;

  friend bool operator==(Field a, Field b) { return a.d_ == b.d_; }
  friend bool operator!=(Field a, Field b) { return a.d_ != b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

// q^shift * num / den with num(0) != 0, den(0) != 0, den monic and
// gcd(num, den) = 1. Zero is shift 0, num 0, den 1.
struct LaurentFraction {
  long shift = 0;
  Poly num;
  Poly den = Poly::constant(1);
};

class Scalar {
 public:
  Field field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y) { return *this *= y.inv(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  // Values in different fields are never equal.
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar pow(long k) const;

  // Rendering in the scalar grammar; parse(to_string()) == *this.
  std::string to_string() const;
  static Scalar parse(std::string_view text, Field field);

  // Rational value, or nullptr for non-rational fields.
  const Rational* as_rational() const { return std::get_if<Rational>(&v_); }
  const Poly* as_cyclotomic() const { return std::get_if<Poly>(&v_); }
  const LaurentFraction* as_fraction() const { return std::get_if<LaurentFraction>(&v_); }

 private:
  friend class Field;
  using Value = std::variant<Rational, Poly, LaurentFraction>;

  Scalar(Field f, Value v) : field_(f), v_(std::move(v)) {}
  void check_same(const Scalar& y) const;
  void normalize();

  Field field_;
  Value v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qhopf
