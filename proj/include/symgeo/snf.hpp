#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace symgeo {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix over arbitrary-precision integers. Naive reduction
// can blow intermediate entries well past 64 bits even for small inputs.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}

  BigInt& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return data[std::size_t(r) * cols + c];
  }

  static IntMatrix identity(int n);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(const IntMatrix& a);

// Smith normal form with transformation certificate: d = u * a * v with u, v
// unimodular and d diagonal with a non-negative divisibility chain
// d1 | d2 | ...
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::vector<BigInt> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

}  // namespace symgeo
