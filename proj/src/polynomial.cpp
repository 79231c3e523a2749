#include "tlt/polynomial.hpp"

#include <sstream>

#include "tlt/errors.hpp"

namespace tlt {

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int IntPolynomial::eval(const Int& x) const {
  Int v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

IntPolynomial IntPolynomial::derivative() const {
  IntPolynomial d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(Int(i) * coeffs[i]);
  d.trim();
  return d;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.trim();
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  r.trim();
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial r;
  r.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

IntPolynomial operator*(const Int& k, const IntPolynomial& a) {
  IntPolynomial r = a;
  for (Int& c : r.coeffs) c *= k;
  r.trim();
  return r;
}

IntPolynomial integrate(const IntPolynomial& a) {
  IntPolynomial r;
  r.coeffs.assign(a.coeffs.size() + 1, Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] % Int(i + 1) != 0)
      throw NonIntegerCoefficient("coefficient of x^" + std::to_string(i) +
                                  " not divisible by " + std::to_string(i + 1));
    r.coeffs[i + 1] = a.coeffs[i] / Int(i + 1);
  }
  r.trim();
  return r;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeffs[i];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (i == 0 || a != 1) os << a.str();
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace tlt
