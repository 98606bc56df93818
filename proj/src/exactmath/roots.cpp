#include "rgd/exactmath/roots.hpp"

#include "rgd/error.hpp"

namespace rgd {

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("indeterminate roots");
  IntPolynomial p0 = square_free_part(p);
  chain_.push_back(p0);
  if (p0.degree() <= 0) return;
  chain_.push_back(p0.derivative().primitive_part());
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    IntPolynomial r = -signed_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    BigInt c = r.content();
    std::vector<BigInt> scaled(r.coeffs().begin(), r.coeffs().end());
    for (auto& x : scaled) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain_.emplace_back(std::move(scaled));
  }
}

int SturmChain::variations_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.degree() % 2 == 0 ? sgn(q.leading()) : -sgn(q.leading()));
  return variations(signs);
}

int SturmChain::count_roots(const BigRational& lower, const BigRational& upper) const {
  if (!(lower < upper)) return 0;
  return variations_at(lower) - variations_at(upper);
}

int SturmChain::count_roots_above(const BigRational& lower) const {
  return variations_at(lower) - variations_at_pos_infinity();
}

BigInt root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("indeterminate roots");
  BigInt max_abs = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt a = abs(p.coeffs()[i]);
    if (a > max_abs) max_abs = a;
  }
  return 1 + ceil(BigRational(max_abs, abs(p.leading())));
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("indeterminate roots");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  SturmChain chain(p);
  BigInt bound = root_bound(chain.base());

  struct Pending {
    RootInterval iv;
    int count;
  };
  // Depth-first bisection, right half pushed first so output comes out ascending.
  std::vector<Pending> stack;
  RootInterval all{BigRational(-bound), BigRational(bound)};
  int total = chain.count_roots(all.lower, all.upper);
  if (total > 0) stack.push_back({all, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back(cur.iv);
      continue;
    }
    BigRational mid = (cur.iv.lower + cur.iv.upper) / 2;
    int left = chain.count_roots(cur.iv.lower, mid);
    int right = cur.count - left;
    if (right > 0) stack.push_back({{mid, cur.iv.upper}, right});
    if (left > 0) stack.push_back({{cur.iv.lower, mid}, left});
  }
  return out;
}

RootInterval refine_root(const IntPolynomial& p, RootInterval interval, const BigRational& max_width) {
  SturmChain chain(p);
  if (chain.count_roots(interval.lower, interval.upper) != 1) {
    throw InvalidArgument("refine_root: interval does not isolate exactly one root");
  }
  while (interval.width() > max_width) {
    BigRational mid = (interval.lower + interval.upper) / 2;
    if (chain.count_roots(interval.lower, mid) == 1) {
      interval.upper = mid;
    } else {
      interval.lower = mid;
    }
  }
  return interval;
}

std::optional<BigInt> min_int_nonneg_on_ray(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("min_int_nonneg_on_ray: zero polynomial");
  if (sgn(p.leading()) < 0) return std::nullopt;
  IntPolynomial sign_changes = odd_multiplicity_part(p);
  if (sign_changes.degree() <= 0) return BigInt(0);
  SturmChain chain(sign_changes);
  if (chain.count_roots_above(BigRational(0)) == 0) return BigInt(0);
  // count_roots_above(lo) > 0 and count_roots_above(hi) == 0.
  BigInt lo = 0;
  BigInt hi = root_bound(chain.base());
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (chain.count_roots_above(BigRational(mid)) == 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace rgd
