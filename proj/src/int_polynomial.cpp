// Copyright 2026 The izeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "izeta/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "izeta/errors.hpp"

namespace izeta {

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::invalid_argument("exact_div: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw ConsistencyError("exact_div: inexact integer division");
  return q;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t k) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, BigInt(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  static const BigInt zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * s;
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  *this = *this + rhs;
  return *this;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (k == 0) return *this;
  if (is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial out = constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + BigRational(coeffs_[i]);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ' ';
    out << coeffs_[i];
  }
  return out.str();
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero())
    throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw ConsistencyError("exact_divide: degree of dividend below divisor");

  std::vector<BigInt> rem = a.coeffs();
  const std::vector<BigInt>& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> quot(rem.size() - db, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    quot[i] = exact_div(rem[i + db], bc[db]);
    if (quot[i] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= quot[i] * bc[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) throw ConsistencyError("exact_divide: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

} // namespace izeta
