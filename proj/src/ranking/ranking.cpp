#include "rgd/ranking/ranking.hpp"

#include <algorithm>
#include <atomic>
#include <boost/crc.hpp>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "rgd/error.hpp"
#include "rgd/exactmath/roots.hpp"

namespace rgd {

namespace {

// Runs body(i) for i in [0, n) on up to `workers` threads; rethrows the first failure.
template <class Body>
void parallel_for(std::size_t n, int workers, Body body) {
  const auto threads_wanted = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  if (threads_wanted <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads_wanted; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void check_common_order(const std::vector<Candidate>& candidates) {
  for (const auto& c : candidates) {
    if (c.sym.v != candidates.front().sym.v) throw InvalidArgument("candidates have mixed v");
  }
}

void sort_by_certificate(std::vector<Candidate>& candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.certificate < b.certificate; });
}

// Assigns competition ranks and dense tie classes; `same` tells whether entry i ties entry i-1.
template <class Same>
void assign_ranks(std::vector<RankedEntry>& entries, Same same) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && same(i)) {
      entries[i].rank = entries[i - 1].rank;
      entries[i].tie_class = entries[i - 1].tie_class;
    } else {
      entries[i].rank = static_cast<int>(i) + 1;
      entries[i].tie_class = i == 0 ? 1 : entries[i - 1].tie_class + 1;
    }
  }
}

std::vector<RankedEntry> to_entries(std::vector<Candidate>&& candidates) {
  std::vector<RankedEntry> entries;
  entries.reserve(candidates.size());
  for (auto& c : candidates) entries.push_back({0, 0, std::move(c.certificate), std::move(c.sym)});
  return entries;
}

int degree_from(const SymVector& s) {
  // S_1 = v * delta.
  if (s.s.size() < 2) return 0;
  return static_cast<int>(BigInt(s.s[1] / s.v).get_si());
}

std::uint32_t crc32_of(const std::string& text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  return crc.checksum();
}

}  // namespace

std::vector<Candidate> make_candidates(const std::vector<RegularGraph>& graphs, const RankingOptions& options) {
  std::vector<Candidate> out(graphs.size());
  parallel_for(graphs.size(), options.workers, [&](std::size_t i) {
    out[i] = {graphs[i].certificate(), sym_vector(graphs[i])};
  });
  return out;
}

RankedFamily order_at_infinity(std::vector<Candidate> candidates, Criterion criterion) {
  RankedFamily family;
  family.criterion = criterion;
  if (candidates.empty()) return family;
  check_common_order(candidates);
  sort_by_certificate(candidates);
  if (criterion == Criterion::D) {
    // Sign at infinity of D_a - D_b is the first nonzero difference of (S_1, S_2, ...).
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return std::lexicographical_compare(b.sym.s.begin(), b.sym.s.end(), a.sym.s.begin(), a.sym.s.end());
    });
  } else {
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.sym == b.sym) return false;
      return sign(a_comparison_poly(a.sym, b.sym).leading()) > 0;
    });
  }
  family.v = candidates.front().sym.v;
  family.delta = degree_from(candidates.front().sym);
  family.entries = to_entries(std::move(candidates));
  assign_ranks(family.entries, [&](std::size_t i) { return family.entries[i].sym == family.entries[i - 1].sym; });
  return family;
}

void certify_stabilization(RankedFamily& family, const RankingOptions& options) {
  const auto& entries = family.entries;
  const std::size_t pairs = entries.empty() ? 0 : entries.size() - 1;
  std::vector<std::optional<BigInt>> witnesses(pairs);
  parallel_for(pairs, options.workers, [&](std::size_t i) {
    const auto& hi = entries[i];
    const auto& lo = entries[i + 1];
    if (hi.sym == lo.sym) return;
    const IntPolynomial p = comparison_poly(family.criterion, hi.sym, lo.sym);
    if (p.is_zero() || sign(p.leading()) < 0) {
      throw InternalError("comparison polynomial negative at infinity for " + hi.certificate + " > " +
                          lo.certificate);
    }
    witnesses[i] = min_int_nonneg_on_ray(p);
    if (!witnesses[i]) throw InternalError("no nonnegative ray for " + hi.certificate);
  });
  BigInt x0 = 0;
  for (const auto& w : witnesses) {
    if (w && *w > x0) x0 = *w;
  }
  family.x0 = x0;
  family.pair_witnesses = std::move(witnesses);
  family.evaluated_at.reset();
}

RankedFamily rank_family(int v, int delta, std::vector<Candidate> candidates, Criterion criterion,
                         const RankingOptions& options) {
  RankedFamily family = order_at_infinity(std::move(candidates), criterion);
  family.v = v;
  family.delta = delta;
  certify_stabilization(family, options);
  return family;
}

RankedFamily order_at_point(std::vector<Candidate> candidates, Criterion criterion, const BigInt& x) {
  RankedFamily family;
  family.criterion = criterion;
  family.evaluated_at = x;
  if (candidates.empty()) return family;
  check_common_order(candidates);
  sort_by_certificate(candidates);
  std::vector<std::pair<BigRational, Candidate>> keyed;
  keyed.reserve(candidates.size());
  for (auto& c : candidates) {
    BigRational value = criterion == Criterion::A ? a_value(c.sym, x) : BigRational(d_value(c.sym, x));
    keyed.emplace_back(std::move(value), std::move(c));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  candidates.clear();
  for (auto& [value, c] : keyed) candidates.push_back(std::move(c));
  family.v = candidates.front().sym.v;
  family.delta = degree_from(candidates.front().sym);
  family.entries = to_entries(std::move(candidates));
  assign_ranks(family.entries, [&](std::size_t i) { return keyed[i].first == keyed[i - 1].first; });
  return family;
}

std::pair<int, int> rank_of(const std::string& certificate, const RankedFamily& family) {
  for (const auto& e : family.entries) {
    if (e.certificate == certificate) return {e.rank, e.tie_class};
  }
  throw InvalidArgument("certificate not in family: " + certificate);
}

std::string format_ranking(const RankedFamily& family) {
  std::ostringstream out;
  out << family.v << ' ' << family.delta << ' ' << to_char(family.criterion) << ' ' << family.x0.get_str() << ' '
      << family.entries.size() << '\n';
  for (const auto& e : family.entries) {
    out << e.rank << ' ' << e.tie_class << ' ' << e.certificate;
    for (std::size_t j = 1; j < e.sym.s.size(); ++j) out << ' ' << e.sym.s[j].get_str();
    out << '\n';
  }
  std::string body = out.str();
  char trailer[32];
  std::snprintf(trailer, sizeof trailer, "# crc32 %08x\n", static_cast<unsigned>(crc32_of(body)));
  return body + trailer;
}

void write_ranking(const std::filesystem::path& path, const RankedFamily& family) {
  if (family.evaluated_at) throw InvalidArgument("point orders are not cached");
  // Write-then-rename so a crash never leaves a half-written file under the final name.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << format_ranking(family);
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<RankedFamily> parse_ranking(const std::string& text) {
  const auto trailer_at = text.rfind("# crc32 ");
  if (trailer_at == std::string::npos) return std::nullopt;
  const std::string body = text.substr(0, trailer_at);
  unsigned stored = 0;
  if (std::sscanf(text.c_str() + trailer_at, "# crc32 %8x", &stored) != 1) return std::nullopt;
  if (stored != crc32_of(body)) return std::nullopt;

  std::istringstream in(body);
  RankedFamily family;
  std::string criterion, x0;
  std::size_t count = 0;
  if (!(in >> family.v >> family.delta >> criterion >> x0 >> count) || criterion.size() != 1) return std::nullopt;
  family.criterion = criterion_from_char(criterion[0]);
  family.x0 = BigInt(x0);
  for (std::size_t i = 0; i < count; ++i) {
    RankedEntry e;
    if (!(in >> e.rank >> e.tie_class >> e.certificate)) return std::nullopt;
    e.sym.v = family.v;
    e.sym.s.assign(1, BigInt(1));
    for (int j = 1; j < family.v; ++j) {
      std::string value;
      if (!(in >> value)) return std::nullopt;
      e.sym.s.emplace_back(value);
    }
    family.entries.push_back(std::move(e));
  }
  std::string extra;
  if (in >> extra) return std::nullopt;
  return family;
}

std::optional<RankedFamily> read_ranking(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_ranking(text.str());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace rgd
