#include "ridgecalc/knumber.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

KNumber::KNumber(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw UsageError("KNumber requires a radical basis");
}

KNumber::KNumber(BasisPtr basis, const Rational& q) : KNumber(std::move(basis)) {
  if (q != 0) coords_.emplace(0, q);
}

KNumber::KNumber(BasisPtr basis, long q) : KNumber(std::move(basis), Rational(q)) {}

KNumber KNumber::basis_element(BasisPtr basis, BasisKey key, const Rational& c) {
  KNumber r(std::move(basis));
  if (key >= r.basis_->dimension()) throw UsageError("basis key out of range");
  r.set_coord(key, c);
  return r;
}

Rational KNumber::coord(BasisKey key) const {
  auto it = coords_.find(key);
  return it == coords_.end() ? Rational(0) : it->second;
}

void KNumber::set_coord(BasisKey key, const Rational& value) {
  if (value == 0) {
    coords_.erase(key);
  } else {
    coords_[key] = value;
  }
}

bool KNumber::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 0);
}

void KNumber::require_same_basis(const KNumber& other) const {
  if (!same_basis(basis_, other.basis_)) throw UsageError("KNumber operands use different radical bases");
}

KNumber& KNumber::add_scaled(const KNumber& b, const Rational& q) {
  require_same_basis(b);
  if (q == 0) return *this;
  for (const auto& [key, c] : b.coords_) {
    auto [it, inserted] = coords_.try_emplace(key, 0);
    it->second += q * c;
    if (it->second == 0) coords_.erase(it);
  }
  return *this;
}

KNumber& KNumber::operator+=(const KNumber& rhs) { return add_scaled(rhs, 1); }

KNumber& KNumber::operator-=(const KNumber& rhs) { return add_scaled(rhs, -1); }

KNumber& KNumber::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [key, c] : coords_) c *= rhs;
  return *this;
}

KNumber& KNumber::operator*=(const KNumber& rhs) {
  require_same_basis(rhs);
  Coords out;
  for (const auto& [ka, qa] : coords_) {
    for (const auto& [kb, qb] : rhs.coords_) {
      const BasisKey key = RadicalBasis::product_key(ka, kb);
      Rational term = qa * qb;
      if (BasisKey common = ka & kb) term *= basis_->square_factor(common);
      auto [it, inserted] = out.try_emplace(key, 0);
      it->second += term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  coords_ = std::move(out);
  return *this;
}

KNumber& KNumber::operator/=(const KNumber& rhs) { return *this *= inv(rhs); }

KNumber KNumber::operator-() const {
  KNumber r(*this);
  for (auto& [key, c] : r.coords_) c = -c;
  return r;
}

bool operator==(const KNumber& a, const KNumber& b) {
  return same_basis(a.basis_, b.basis_) && a.coords_ == b.coords_;
}

std::string KNumber::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coords_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (key == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << basis_->key_label(key);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const KNumber& a) { return os << a.to_string(); }

KNumber inv(const KNumber& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  const BasisPtr& basis = a.basis();
  const std::size_t dim = basis->dimension();
  if (a.is_rational()) return KNumber(basis, Rational(1) / a.rational_value());

  // Column j of M holds the coordinates of a * e_j; solve M c = e_0.
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim + 1, 0));
  for (BasisKey j = 0; j < dim; ++j) {
    KNumber col = a * KNumber::basis_element(basis, j);
    for (const auto& [key, c] : col.coords()) m[key][j] = c;
  }
  m[0][dim] = 1;

  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && m[pivot][col] == 0) ++pivot;
    if (pivot == dim) throw DivisionByZero("singular multiplication matrix");
    std::swap(m[col], m[pivot]);
    const Rational p = m[col][col];
    for (std::size_t c = col; c <= dim; ++c) m[col][c] /= p;
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t c = col; c <= dim; ++c) m[row][c] -= f * m[col][c];
    }
  }
  KNumber r(basis);
  for (BasisKey key = 0; key < dim; ++key) r.set_coord(key, m[key][dim]);
  return r;
}

namespace {

// [floor(sqrt(d) 2^p), floor(sqrt(d) 2^p) + 1] / 2^p
Interval sqrt_enclosure(long d, unsigned frac_bits) {
  Integer scaled = Integer(d) << (2 * frac_bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer one = Integer(1) << frac_bits;
  return {make_rational(root, one), make_rational(root + 1, one)};
}

}  // namespace

Interval enclose(const KNumber& a, unsigned frac_bits) {
  const BasisPtr& basis = a.basis();
  const auto& rad = basis->radicands();
  std::vector<Interval> roots;
  roots.reserve(rad.size());
  for (long d : rad) roots.push_back(sqrt_enclosure(d, frac_bits));

  Interval sum{0, 0};
  for (const auto& [key, c] : a.coords()) {
    // All root bounds are positive, so products of lower/upper bounds are the bounds.
    Rational lo = 1, hi = 1;
    for (std::size_t i = 0; i < rad.size(); ++i) {
      if (key & (BasisKey{1} << i)) {
        lo *= roots[i].lo;
        hi *= roots[i].hi;
      }
    }
    if (c > 0) {
      sum.lo += c * lo;
      sum.hi += c * hi;
    } else {
      sum.lo += c * hi;
      sum.hi += c * lo;
    }
  }
  return sum;
}

int sign(const KNumber& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.rational_value());
  for (unsigned bits = 64;; bits *= 2) {
    Interval iv = enclose(a, bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
}

int compare(const KNumber& a, const KNumber& b) { return sign(a - b); }

Integer floor(const KNumber& a) {
  if (a.is_rational()) return floor_rational(a.rational_value());
  Interval iv = enclose(a, 64);
  Integer n = floor_rational(iv.lo);
  const BasisPtr& basis = a.basis();
  while (sign(a - KNumber(basis, Rational(n))) < 0) --n;
  while (sign(a - KNumber(basis, Rational(n + 1))) >= 0) ++n;
  return n;
}

namespace {

class KNumberParser {
 public:
  KNumberParser(const BasisPtr& basis, std::string_view text) : basis_(basis), text_(text) {}

  KNumber parse() {
    KNumber result(basis_);
    skip_ws();
    if (at_end()) fail("empty number");
    bool first = true;
    while (!at_end()) {
      Rational sgn = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sgn = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result.add_scaled(term(), sgn);
      skip_ws();
    }
    return result;
  }

 private:
  KNumber term() {
    Rational coef = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational_literal();
      have_coef = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      bool paren = !at_end() && peek() == '(';
      if (paren) ++pos_;
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected radicand after sqrt");
      Integer product(std::string(text_.substr(start, pos_ - start)), 10);
      if (paren) {
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos_;
      }
      auto key = basis_->key_for_product(product);
      if (!key) fail("sqrt" + product.get_str() + " is not a basis element of this field");
      return KNumber::basis_element(basis_, *key, coef);
    }
    if (!have_coef) fail("expected a rational or sqrt term");
    return KNumber(basis_, coef);
  }

  Rational rational_literal() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse number '" + std::string(text_) + "': " + why);
  }

  const BasisPtr& basis_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KNumber parse_knumber(const BasisPtr& basis, std::string_view text) {
  return KNumberParser(basis, text).parse();
}

}  // namespace ridgecalc
