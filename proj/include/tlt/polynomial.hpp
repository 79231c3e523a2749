#pragma once

#include <string>
#include <vector>

#include "tlt/numeric.hpp"

namespace tlt {

// Dense big-integer polynomial; coeffs[i] multiplies x^i, trailing
// coefficient nonzero unless the polynomial is zero.
struct IntPolynomial {
  std::vector<Int> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

  void trim();
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : Int(0);
  }

  bool operator==(const IntPolynomial&) const = default;

  Int eval(const Int& x) const;
  IntPolynomial derivative() const;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const Int& k, const IntPolynomial& a);

// Termwise antiderivative with zero constant; throws NonIntegerCoefficient
// if any coefficient division is inexact.
IntPolynomial integrate(const IntPolynomial& a);

// Human form, high power first: "2x^3 + 30x^2 + 54x + 34".
std::string to_string(const IntPolynomial& p);

}  // namespace tlt
