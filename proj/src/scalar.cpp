#include "qhopf/scalar.hpp"

#include <cctype>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <tuple>

namespace qhopf {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

std::size_t Poly::low_zeros() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k == c_.size() ? 0 : k;
}

Poly Poly::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return Poly();
  return Poly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lead());
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw NotInvertible("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  if (r.size() <= db) return {Poly(), a};
  std::vector<Rational> q(r.size() - db);
  const Rational inv_lead = 1 / b.lead();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational f = r[k] * inv_lead;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic order must be positive");
  // x^n - 1 = prod_{d | n} Phi_d(x)
  Poly p = Poly::monomial(1, static_cast<std::size_t>(n)) - Poly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = Poly::divmod(p, cyclotomic_polynomial(d)).first;
  }
  return p;
}

// ---------------------------------------------------------------- Field

namespace detail {
struct FieldData {
  FieldKind kind;
  int order;
  std::string var;
  Poly modulus;
};
}  // namespace detail

namespace {

const detail::FieldData* intern(FieldKind kind, int order, const std::string& var) {
  static std::mutex mu;
  static std::deque<std::unique_ptr<detail::FieldData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& d : registry) {
    if (d->kind == kind && d->order == order && d->var == var) return d.get();
  }
  auto d = std::make_unique<detail::FieldData>();
  d->kind = kind;
  d->order = order;
  d->var = var;
  if (kind == FieldKind::cyclotomic) d->modulus = cyclotomic_polynomial(order);
  registry.push_back(std::move(d));
  return registry.back().get();
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Field Field::rationals() { return Field(intern(FieldKind::rationals, 0, "")); }

Field Field::cyclotomic(int order) {
  if (order < 1) throw Error("cyclotomic order must be a positive integer");
  return Field(intern(FieldKind::cyclotomic, order, "z"));
}

Field Field::rational_functions(const std::string& indeterminate) {
  if (!is_identifier(indeterminate)) {
    throw Error("indeterminate must be a nonempty identifier, got '" + indeterminate + "'");
  }
  return Field(intern(FieldKind::rational_functions, 0, indeterminate));
}

Field Field::parse(std::string_view text) {
  text = strip(text);
  if (text == "rationals") return rationals();
  auto inside = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.substr(0, prefix.size()) != prefix || text.back() != ')') return std::nullopt;
    return strip(text.substr(prefix.size(), text.size() - prefix.size() - 1));
  };
  if (auto arg = inside("cyclotomic(")) {
    int n = 0;
    for (char c : *arg) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || n > 100000) {
        throw Error("bad cyclotomic order in '" + std::string(text) + "'");
      }
      n = n * 10 + (c - '0');
    }
    if (arg->empty()) throw Error("missing cyclotomic order");
    return cyclotomic(n);
  }
  if (auto arg = inside("rational-functions(")) return rational_functions(std::string(*arg));
  throw Error("unknown field '" + std::string(text) + "'");
}

FieldKind Field::kind() const { return d_->kind; }
int Field::order() const { return d_->order; }
const std::string& Field::indeterminate() const { return d_->var; }
const Poly& Field::modulus() const { return d_->modulus; }

std::string Field::to_string() const {
  switch (d_->kind) {
    case FieldKind::rationals:
      return "rationals";
    case FieldKind::cyclotomic:
      return "cyclotomic(" + std::to_string(d_->order) + ")";
    case FieldKind::rational_functions:
      return "rational-functions(" + d_->var + ")";
  }
  return "?";
}

Scalar Field::zero() const { return from_rational(0); }
Scalar Field::one() const { return from_rational(1); }
Scalar Field::from_int(long n) const { return from_rational(Rational(n)); }

Scalar Field::from_rational(const Rational& value) const {
  Rational r = value;
  r.canonicalize();
  switch (d_->kind) {
    case FieldKind::rationals:
      return Scalar(*this, r);
    case FieldKind::cyclotomic: {
      Scalar s(*this, Poly::constant(r));
      s.normalize();
      return s;
    }
    case FieldKind::rational_functions: {
      LaurentFraction f;
      f.num = Poly::constant(r);
      return Scalar(*this, std::move(f));
    }
  }
  throw Error("bad field");
}

Scalar Field::generator() const {
  switch (d_->kind) {
    case FieldKind::rationals:
      throw Error("the rationals have no generator");
    case FieldKind::cyclotomic: {
      Scalar s(*this, Poly::monomial(1, 1));
      s.normalize();
      return s;
    }
    case FieldKind::rational_functions: {
      LaurentFraction f;
      f.shift = 1;
      f.num = Poly::constant(1);
      return Scalar(*this, std::move(f));
    }
  }
  throw Error("bad field");
}

// ---------------------------------------------------------------- Scalar

namespace {

// Inverse of a modulo m, where gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = Poly::divmod(a, m).second;
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw NotInvertible("not invertible: element shares a factor with the modulus");
  return Poly::divmod(s0.scaled(1 / r0.lead()), m).second;
}

void canonicalize(LaurentFraction& f) {
  if (f.den.is_zero()) throw NotInvertible("not invertible: zero denominator");
  if (f.num.is_zero()) {
    f = LaurentFraction{};
    return;
  }
  std::size_t k = f.num.low_zeros();
  if (k) {
    f.num = f.num.shifted_down(k);
    f.shift += static_cast<long>(k);
  }
  k = f.den.low_zeros();
  if (k) {
    f.den = f.den.shifted_down(k);
    f.shift -= static_cast<long>(k);
  }
  if (f.den.degree() > 0) {
    Poly g = Poly::gcd(f.num, f.den);
    if (g.degree() > 0) {
      f.num = Poly::divmod(f.num, g).first;
      f.den = Poly::divmod(f.den, g).first;
    }
  }
  Rational lead = f.den.lead();
  if (lead != 1) {
    f.num = f.num.scaled(1 / lead);
    f.den = f.den.scaled(1 / lead);
  }
}

std::string render_term(const Rational& c, long e, const std::string& var) {
  if (e == 0) return c.get_str();
  std::string mono = e == 1 ? var : var + "^" + std::to_string(e);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + "*" + mono;
}

std::string render_laurent(const Poly& p, long shift, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    std::string t = render_term(c[k], static_cast<long>(k) + shift, var);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

class ScalarParser {
 public:
  ScalarParser(std::string_view text, Field field) : s_(text), field_(field) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        Scalar d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar base = atom();
    if (!eat('^')) return base;
    std::size_t at = pos_;
    long e = exponent();
    if (e < 0 && base.is_zero()) throw ParseError("zero raised to a negative power", at);
    return base.pow(e);
  }

  long exponent() {
    bool paren = eat('(');
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)));
      return field_.from_rational(Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      bool ok = (field_.kind() == FieldKind::cyclotomic && name == "z") ||
                (field_.kind() == FieldKind::rational_functions && name == field_.indeterminate());
      if (!ok) {
        throw ParseError("symbol '" + name + "' is not in field " + field_.to_string(), start);
      }
      return field_.generator();
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

void Scalar::check_same(const Scalar& y) const {
  if (field_ != y.field_) throw FieldMismatch(field_.to_string(), y.field_.to_string());
}

void Scalar::normalize() {
  if (auto* p = std::get_if<Poly>(&v_)) {
    if (p->degree() >= field_.modulus().degree()) *p = Poly::divmod(*p, field_.modulus()).second;
  } else if (auto* f = std::get_if<LaurentFraction>(&v_)) {
    canonicalize(*f);
  }
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == 0;
    case 1:
      return std::get<1>(v_).is_zero();
    default:
      return std::get<2>(v_).num.is_zero();
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == 1;
    case 1: {
      const auto& p = std::get<1>(v_);
      return p.degree() == 0 && p.lead() == 1;
    }
    default: {
      const auto& f = std::get<2>(v_);
      return f.shift == 0 && f.num.degree() == 0 && f.num.lead() == 1 && f.den.degree() == 0;
    }
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (r.v_.index()) {
    case 0:
      std::get<0>(r.v_) = -std::get<0>(r.v_);
      break;
    case 1:
      std::get<1>(r.v_) = -std::get<1>(r.v_);
      break;
    default:
      std::get<2>(r.v_).num = -std::get<2>(r.v_).num;
  }
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw NotInvertible("not invertible: division by zero");
  switch (v_.index()) {
    case 0:
      return Scalar(field_, Rational(1 / std::get<0>(v_)));
    case 1:
      return Scalar(field_, inverse_mod(std::get<1>(v_), field_.modulus()));
    default: {
      const auto& f = std::get<2>(v_);
      LaurentFraction g{-f.shift, f.den, f.num};
      canonicalize(g);
      return Scalar(field_, std::move(g));
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& y) {
  check_same(y);
  switch (v_.index()) {
    case 0:
      std::get<0>(v_) += std::get<0>(y.v_);
      break;
    case 1:
      std::get<1>(v_) = std::get<1>(v_) + std::get<1>(y.v_);
      break;
    default: {
      auto& a = std::get<2>(v_);
      const auto& b = std::get<2>(y.v_);
      if (b.num.is_zero()) break;
      if (a.num.is_zero()) {
        a = b;
        break;
      }
      long m = std::min(a.shift, b.shift);
      Poly left = Poly::monomial(1, static_cast<std::size_t>(a.shift - m)) * a.num * b.den;
      Poly right = Poly::monomial(1, static_cast<std::size_t>(b.shift - m)) * b.num * a.den;
      LaurentFraction r{m, left + right, a.den * b.den};
      canonicalize(r);
      a = std::move(r);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) { return *this += -y; }

Scalar& Scalar::operator*=(const Scalar& y) {
  check_same(y);
  switch (v_.index()) {
    case 0:
      std::get<0>(v_) *= std::get<0>(y.v_);
      break;
    case 1:
      std::get<1>(v_) = std::get<1>(v_) * std::get<1>(y.v_);
      normalize();
      break;
    default: {
      auto& a = std::get<2>(v_);
      const auto& b = std::get<2>(y.v_);
      LaurentFraction r{a.shift + b.shift, a.num * b.num, a.den * b.den};
      canonicalize(r);
      a = std::move(r);
    }
  }
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.field_ != y.field_) return false;
  switch (x.v_.index()) {
    case 0:
      return std::get<0>(x.v_) == std::get<0>(y.v_);
    case 1:
      return std::get<1>(x.v_) == std::get<1>(y.v_);
    default: {
      const auto& a = std::get<2>(x.v_);
      const auto& b = std::get<2>(y.v_);
      return a.shift == b.shift && a.num == b.num && a.den == b.den;
    }
  }
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar result = field_.one();
  Scalar base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_).get_str();
    case 1:
      return render_laurent(std::get<1>(v_), 0, "z");
    default: {
      const auto& f = std::get<2>(v_);
      const auto& var = field_.indeterminate();
      if (f.den.degree() == 0) return render_laurent(f.num, f.shift, var);
      return "(" + render_laurent(f.num, f.shift, var) + ")/(" + render_laurent(f.den, 0, var) + ")";
    }
  }
}

Scalar Scalar::parse(std::string_view text, Field field) { return ScalarParser(text, field).run(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qhopf
