#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rgd/error.hpp"
#include "rgd/exactmath/matrix.hpp"
#include "rgd/exactmath/roots.hpp"

using namespace rgd;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(std::move(c));
}

// (x - r) for integer r.
IntPolynomial linear(long root) { return IntPolynomial{-root, 1}; }

}  // namespace

TEST_CASE("bigint helpers") {
  CHECK(ceil(BigRational(7, 2)) == 4);
  CHECK(ceil(BigRational(-7, 2)) == -3);
  CHECK(floor(BigRational(-7, 2)) == -4);
  CHECK(to_decimal(BigRational(2, 3)) == "0.6666667");
  CHECK(to_decimal(BigRational(-2, 3)) == "-0.6666667");
  CHECK(to_decimal(BigRational(5), 2) == "5.00");
  CHECK(to_decimal(BigRational(1, 8), 2) == "0.13");
  CHECK(to_grouped(BigInt("1627920000")) == "1,627,920,000");
  CHECK(to_grouped(BigInt(-999)) == "-999");
  CHECK(to_grouped(BigInt(-1000)) == "-1,000");
}

TEST_CASE("polynomial normalization and arithmetic") {
  IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p * IntPolynomial{-1, 1} == IntPolynomial{-1, -1, 2});
  CHECK(IntPolynomial{3, 2, 1}.derivative() == IntPolynomial{2, 2});
  CHECK(IntPolynomial{6, 4, 2}.content() == 2);
  CHECK(IntPolynomial{-6, -4, -2}.primitive_part() == IntPolynomial{3, 2, 1});
  CHECK(IntPolynomial{1, 0, 1}.evaluate(BigRational(1, 2)) == BigRational(5, 4));
}

TEST_CASE("evaluation agrees with expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial a = random_poly(rng, 6, 20), b = random_poly(rng, 6, 20);
    const BigInt x = static_cast<long>(rng() % 11) - 5;
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
  }
}

TEST_CASE("exact quotient and gcd") {
  const IntPolynomial a = linear(1) * linear(2) * linear(-3);
  const IntPolynomial b = linear(2) * linear(5);
  CHECK(exact_quotient(a, linear(2)) == linear(1) * linear(-3));
  CHECK_THROWS_AS(exact_quotient(a, linear(7)), InternalError);
  CHECK(gcd(a, b) == linear(2));
  CHECK(gcd(a * BigInt(6), b * BigInt(4)) == linear(2));
}

TEST_CASE("square-free factorization recovers multiplicities") {
  const IntPolynomial p = linear(1) * linear(2) * linear(2) * linear(3) * linear(3) * linear(3);
  const auto factors = square_free_factorization(p);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == linear(1));
  CHECK(factors[1] == linear(2));
  CHECK(factors[2] == linear(3));
  CHECK(square_free_part(p) == linear(1) * linear(2) * linear(3));
  CHECK(odd_multiplicity_part(p) == linear(1) * linear(3));
}

TEST_CASE("square-free factorization property") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < 4; ++i) p = p * random_poly(rng, 2, 4);
    if (p.is_zero() || p.degree() < 1) continue;
    const auto factors = square_free_factorization(p);
    IntPolynomial rebuilt = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t m = 0; m <= i; ++m) rebuilt = rebuilt * factors[i];
    }
    // Equal up to a constant factor.
    CHECK(rebuilt.primitive_part() == p.primitive_part());
  }
}

TEST_CASE("root isolation of x^2 - 2") {
  const IntPolynomial p{-2, 0, 1};
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  auto lo = refine_root(p, roots[0], BigRational(1));
  auto hi = refine_root(p, roots[1], BigRational(1));
  const auto brackets = [&](const RootInterval& r) {
    return sign(p.evaluate(r.lower)) * sign(p.evaluate(r.upper)) <= 0;
  };
  CHECK(lo.width() <= 1);
  CHECK(hi.width() <= 1);
  CHECK(lo.upper < 0);
  CHECK(hi.lower >= 0);
  CHECK(brackets(lo));
  CHECK(brackets(hi));
  auto tight = refine_root(p, roots[1], BigRational(1, 1000000));
  CHECK(tight.width() <= BigRational(1, 1000000));
  CHECK(brackets(tight));
  CHECK(tight.lower < BigRational(14142136, 10000000));
  CHECK(tight.upper > BigRational(14142135, 10000000));
  CHECK_THROWS_AS(isolate_real_roots(IntPolynomial{}), InvalidArgument);
}

TEST_CASE("root counts match constructed roots") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<long> roots;
    IntPolynomial p = IntPolynomial::constant(static_cast<long>(rng() % 3) + 1);
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      const long r = static_cast<long>(rng() % 21) - 10;
      roots.push_back(r);
      p = p * linear(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto found = isolate_real_roots(p);
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(found[i].contains(BigRational(roots[i])));
    const SturmChain chain(p);
    CHECK(chain.count_roots(BigRational(-100), BigRational(100)) == static_cast<int>(roots.size()));
    CHECK(root_bound(p) > roots.back());
  }
}

TEST_CASE("min_int_nonneg_on_ray") {
  CHECK(min_int_nonneg_on_ray(linear(3)) == BigInt(3));
  CHECK(min_int_nonneg_on_ray(linear(1) * linear(1)) == BigInt(0));
  CHECK(min_int_nonneg_on_ray(IntPolynomial{8, -6, 1}) == BigInt(4));
  CHECK(min_int_nonneg_on_ray(IntPolynomial{-1, 0, 0, 1}) == BigInt(1));
  CHECK(min_int_nonneg_on_ray(IntPolynomial{5}) == BigInt(0));
  CHECK_FALSE(min_int_nonneg_on_ray(IntPolynomial{0, -1}).has_value());
  CHECK_THROWS_AS(min_int_nonneg_on_ray(IntPolynomial{}), InvalidArgument);
  // Root at 5/2: the first safe integer is 3. Double root at 7 does not count.
  CHECK(min_int_nonneg_on_ray(IntPolynomial{-5, 2} * linear(7) * linear(7)) == BigInt(3));
  // Negative roots never matter.
  CHECK(min_int_nonneg_on_ray(linear(-4) * linear(-9)) == BigInt(0));
}

TEST_CASE("min_int_nonneg_on_ray against a scan") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    IntPolynomial p = random_poly(rng, 5, 30);
    if (p.is_zero()) continue;
    if (sign(p.leading()) < 0) p = -p;
    const auto m = min_int_nonneg_on_ray(p);
    REQUIRE(m.has_value());
    // Nonnegative at every sampled rational point beyond m.
    for (int step = 0; step < 40; ++step) CHECK(p.sign_at(BigRational(*m) + BigRational(step, 3)) >= 0);
    // Minimality: just below m, somewhere in [m-1, m), p is negative.
    if (*m > 0) {
      const IntPolynomial odd = odd_multiplicity_part(p);
      const SturmChain chain(odd);
      CHECK(chain.count_roots(BigRational(*m - 1), BigRational(*m)) > 0);
    }
  }
}

TEST_CASE("characteristic polynomial") {
  IntMatrix k4{{3, -1, -1, -1}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}};
  // Laplacian of K4: x (x - 4)^3.
  CHECK(char_poly(k4) == IntPolynomial{0, -64, 48, -12, 1});
  CHECK(char_poly(IntMatrix::identity(3)) == IntPolynomial{-1, 3, -3, 1});
}

TEST_CASE("characteristic polynomial against Bareiss determinants") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 19) - 9;
    }
    const IntPolynomial chi = char_poly(m);
    CHECK(chi.degree() == n);
    for (long t = -3; t <= n + 3; ++t) CHECK(chi.evaluate(BigInt(t)) == oracle::char_poly_at(m, BigInt(t)));
  }
}
