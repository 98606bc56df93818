#include "rgd/exactmath/matrix.hpp"

#include <algorithm>

#include "rgd/error.hpp"

namespace rgd {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("IntMatrix: rows must form a square matrix");
    std::size_t j = 0;
    for (long x : row) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);

  // Berkowitz: grow the trailing principal submatrix A_k = m[k.., k..] one row at a time.
  // poly holds det(xI - A_{k+1}) with the highest-degree coefficient first.
  std::vector<BigInt> poly{BigInt(1), BigInt(-m(n - 1, n - 1))};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t sub = n - k - 1;  // size of A_{k+1}
    // Toeplitz column t: 1, -a, -R C, -R B C, ..., -R B^(sub-1) C
    std::vector<BigInt> t(sub + 2);
    t[0] = 1;
    t[1] = -m(k, k);
    std::vector<BigInt> vec(sub), next(sub);
    for (std::size_t i = 0; i < sub; ++i) vec[i] = m(k + 1 + i, k);
    for (std::size_t p = 0; p < sub; ++p) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < sub; ++i) mpz_addmul(dot.get_mpz_t(), m(k, k + 1 + i).get_mpz_t(), vec[i].get_mpz_t());
      t[p + 2] = -dot;
      if (p + 1 == sub) break;
      for (std::size_t i = 0; i < sub; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < sub; ++j) {
          mpz_addmul(acc.get_mpz_t(), m(k + 1 + i, k + 1 + j).get_mpz_t(), vec[j].get_mpz_t());
        }
        next[i] = std::move(acc);
      }
      std::swap(vec, next);
    }
    std::vector<BigInt> out(sub + 2);
    for (std::size_t i = 0; i < sub + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, sub); ++j) {
        mpz_addmul(out[i].get_mpz_t(), t[i - j].get_mpz_t(), poly[j].get_mpz_t());
      }
    }
    poly = std::move(out);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

}  // namespace rgd
