#include "pmsp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pmsp/errors.hpp"

namespace pmsp {

namespace {
const Integer kZero = 0;
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::one() { return Polynomial({Integer(1)}); }

Polynomial Polynomial::z() { return Polynomial({Integer(0), Integer(1)}); }

Polynomial Polynomial::monomial(Integer c, int k) {
  std::vector<Integer> v(k + 1, Integer(0));
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<Integer> v(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero()) return zero();
  std::vector<Integer> v(coeffs_.size() + k, Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::substituted_scaled(const Integer& c) const {
  std::vector<Integer> v = coeffs_;
  Integer pow = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    pow *= c;
    v[i] *= pow;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::divided_exact(const Integer& d) const {
  if (d == 0) throw ConsistencyError("polynomial division by zero");
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) {
    if (c % d != 0)
      throw ConsistencyError("polynomial division is not exact");
    c /= d;
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer abs = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << abs.str();
    } else {
      if (abs != 1) out << abs.str();
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::vector<std::string> Polynomial::to_decimal_strings() const {
  std::vector<std::string> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.str());
  return v;
}

Polynomial Polynomial::from_decimal_strings(const std::vector<std::string>& v) {
  std::vector<Integer> c;
  c.reserve(v.size());
  for (const auto& s : v) {
    try {
      c.emplace_back(s);
    } catch (const std::exception&) {
      throw ParseError("bad integer literal in coefficient list: '" + s + "'");
    }
  }
  return Polynomial(std::move(c));
}

}  // namespace pmsp
