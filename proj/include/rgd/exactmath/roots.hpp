#pragma once

#include <optional>
#include <vector>

#include "rgd/exactmath/polynomial.hpp"

namespace rgd {

/// Half-open interval (lower, upper] with rational endpoints containing one real root.
struct RootInterval {
  BigRational lower;
  BigRational upper;

  BigRational width() const { return upper - lower; }
  bool contains(const BigRational& x) const { return lower < x && x <= upper; }
};

/// Sturm chain of a square-free polynomial.
class SturmChain {
 public:
  /// p is replaced by its square-free part; p must be nonzero.
  explicit SturmChain(const IntPolynomial& p);

  const IntPolynomial& base() const { return chain_.front(); }
  /// Number of sign variations of the chain at x.
  int variations_at(const BigRational& x) const;
  /// Number of sign variations at +infinity / -infinity.
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;
  /// Number of distinct real roots in (lower, upper].
  int count_roots(const BigRational& lower, const BigRational& upper) const;
  /// Number of distinct real roots in (lower, +infinity).
  int count_roots_above(const BigRational& lower) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// An integer B with every real root of p in (-B, B]. p must be nonzero.
BigInt root_bound(const IntPolynomial& p);

/// Disjoint intervals, sorted ascending, isolating every distinct real root of p.
/// Throws InvalidArgument("indeterminate roots") for the zero polynomial.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisects an isolating interval of p until its width is at most max_width.
RootInterval refine_root(const IntPolynomial& p, RootInterval interval,
                         const BigRational& max_width);

/// Smallest integer m >= 0 with p(x) >= 0 for all real x >= m, or nullopt when the
/// leading coefficient is negative. Roots of even multiplicity do not violate the bound.
/// Throws InvalidArgument for the zero polynomial.
std::optional<BigInt> min_int_nonneg_on_ray(const IntPolynomial& p);

}  // namespace rgd
