#pragma once

#include <cstddef>
#include <vector>

#include "rgd/exactmath/polynomial.hpp"

namespace rgd {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

/// det(xI - m), computed with Berkowitz's division-free algorithm. Monic of degree n.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace rgd
