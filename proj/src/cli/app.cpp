#include "rgd/cli/app.hpp"

#include <CLI11.hpp>

#include <climits>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "rgd/cli/cache.hpp"
#include "rgd/designs/best.hpp"
#include "rgd/error.hpp"
#include "rgd/graphgen/graph6.hpp"

namespace rgd::cli {

namespace {

enum class Format { Text, Tsv };

struct RunConfig {
  std::string cache_dir;
  int workers = 1;
  std::uint64_t node_budget = 0;
  std::string format = "text";
  std::string criterion = "both";

  Format output() const { return format == "tsv" ? Format::Tsv : Format::Text; }
  SearchBudget budget() const { return {node_budget}; }
  Cache cache() const {
    return Cache(cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache_dir), workers);
  }
  std::vector<Criterion> criteria() const {
    if (criterion == "a") return {Criterion::A};
    if (criterion == "d") return {Criterion::D};
    return {Criterion::A, Criterion::D};
  }
};

char upper(Criterion c) { return c == Criterion::A ? 'A' : 'D'; }

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string value_line(const SymVector& sym, const BigInt& x, Format format) {
  std::ostringstream line;
  const BigInt d = d_value(sym, x);
  std::optional<BigRational> a;
  try {
    a = a_value(sym, x);
  } catch (const InvalidArgument&) {
  }
  const std::optional<BigRational> scaled = a ? std::optional<BigRational>(*a * sym.v) : std::nullopt;
  if (format == Format::Tsv) {
    line << x.get_str() << '\t' << (a ? a->get_str() : "undefined") << '\t' << (a ? to_decimal(*a) : "undefined")
         << '\t' << (scaled ? to_decimal(*scaled) : "undefined") << '\t' << d.get_str();
  } else {
    line << "x=" << x.get_str() << "  A=" << (a ? a->get_str() + " ~ " + to_decimal(*a) : "undefined")
         << "  vA~" << (scaled ? to_decimal(*scaled) : "undefined") << "  D=" << to_grouped(d);
  }
  return line.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out || !(out << text).flush()) throw Error("cannot write " + path);
}

// lambda-tilde for (v, k): 1 for pairs, otherwise a search that may stay undecided.
std::optional<int> lambda_tilde_for(int v, int k, SearchBudget budget) {
  if (k == 2) return 1;
  auto result = min_lambda_tilde(v, k, kDefaultLambdaCap, budget);
  if (result.status == SearchStatus::Found) return result.lambda;
  return std::nullopt;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int v = 0;
  int delta = 0;
  std::string out_file;
};

int cmd_enumerate(const EnumerateArgs& args, const RunConfig& config, std::ostream& out) {
  auto cache = config.cache();
  const auto& graphs = cache.graphs(args.v, args.delta);
  if (!args.out_file.empty()) {
    std::string text;
    for (const auto& g : graphs) text += g.certificate() + "\n";
    write_text(args.out_file, text);
  }
  if (config.output() == Format::Tsv) {
    out << "v\tdelta\tgraphs\n" << args.v << '\t' << args.delta << '\t' << graphs.size() << '\n';
  } else {
    out << plural(graphs.size(), "graph") << '\n';
  }
  return kExitOk;
}

// --- rank ------------------------------------------------------------------

struct RankArgs {
  int v = 0;
  int delta = 0;
  bool list = false;
};

int cmd_rank(const RankArgs& args, const RunConfig& config, std::ostream& out) {
  auto cache = config.cache();
  if (cache.graphs(args.v, args.delta).empty()) {
    out << "no connected " << args.delta << "-regular graphs on " << args.v << " vertices\n";
    return kExitNone;
  }
  const Format format = config.output();
  if (format == Format::Tsv) out << "v\tdelta\tcriterion\tx0\tgraphs\ttie_classes\n";
  for (Criterion c : config.criteria()) {
    const RankedFamily family = cache.ranking(args.v, args.delta, c);
    const int classes = family.entries.back().tie_class;
    if (format == Format::Tsv) {
      out << args.v << '\t' << args.delta << '\t' << upper(c) << '\t' << family.x0.get_str() << '\t'
          << family.entries.size() << '\t' << classes << '\n';
    } else {
      out << "x0^" << upper(c) << " = " << family.x0.get_str() << "  (v=" << args.v << " delta=" << args.delta << ", "
          << plural(family.entries.size(), "graph") << ", " << classes << (classes == 1 ? " tie class" : " tie classes")
          << ")\n";
    }
    if (args.list) {
      for (const auto& e : family.entries) {
        out << e.rank << '\t' << e.tie_class << '\t' << e.certificate << '\n';
      }
    }
  }
  return kExitOk;
}

// --- best ------------------------------------------------------------------

struct BestArgs {
  int v = 0;
  int k = 0;
  int r = 0;
  int max_rank = INT_MAX;
  std::optional<int> at_y;
  std::string graphs_file;
  std::string out_file;
};

std::vector<Candidate> candidates_from_file(const std::string& path, const DesignParams& params, int workers) {
  std::map<std::string, RegularGraph> unique;
  for (auto& g : graph6::read_file(path)) {
    RegularGraph rg(std::move(g));
    if (rg.order() != params.v || rg.delta() != params.delta) {
      throw InvalidArgument(path + ": graph " + rg.certificate() + " is not in M(" + std::to_string(params.v) + "," +
                            std::to_string(params.delta) + ")");
    }
    unique.emplace(rg.certificate(), std::move(rg));
  }
  std::vector<RegularGraph> graphs;
  for (auto& [cert, g] : unique) graphs.push_back(std::move(g));
  return make_candidates(graphs, RankingOptions{workers});
}

int cmd_best(const BestArgs& args, const RunConfig& config, std::ostream& out) {
  const DesignParams params = params_for(args.v, args.k, args.r);
  if (params.delta == 0) {
    out << "delta = 0: every such RGD is a 2-design; use min-lambda\n";
    return kExitNone;
  }
  const std::optional<int> lambda_tilde = lambda_tilde_for(args.v, args.k, config.budget());
  std::optional<BigInt> fixed_x;
  if (args.at_y) {
    if (*args.at_y > 0 && !lambda_tilde) throw Error("--at-y needs lambda-tilde, which is undecided for this (v, k)");
    fixed_x = BigInt(params.lambda) + BigInt(*args.at_y) * lambda_tilde.value_or(0);
  }

  auto cache = config.cache();
  std::vector<Candidate> restricted;
  if (!args.graphs_file.empty()) restricted = candidates_from_file(args.graphs_file, params, config.workers);

  const Format format = config.output();
  int exit_code = kExitOk;
  std::string design_text;
  for (Criterion c : config.criteria()) {
    RankedFamily family;
    if (fixed_x) {
      auto candidates = args.graphs_file.empty() ? make_candidates(cache.graphs(params.v, params.delta),
                                                                   RankingOptions{config.workers})
                                                 : restricted;
      family = order_at_point(std::move(candidates), c, *fixed_x);
      family.v = params.v;
      family.delta = params.delta;
    } else if (!args.graphs_file.empty()) {
      family = rank_family(params.v, params.delta, restricted, c, RankingOptions{config.workers});
    } else {
      family = cache.ranking(params.v, params.delta, c);
    }

    const BestRgdResult best = best_rgd(params, family, args.max_rank, config.budget());
    const std::string order = fixed_x ? "x=" + fixed_x->get_str() : "x0=" + family.x0.get_str();
    if (format == Format::Tsv) {
      if (c == config.criteria().front()) {
        out << "v\tk\tr\tb\tlambda\tdelta\tlambda_tilde\tcriterion\torder\tstatus\trank\ttie_class\t"
               "undecided_before\tgraph\n";
      }
      out << params.v << '\t' << params.k << '\t' << params.r << '\t' << params.b << '\t' << params.lambda << '\t'
          << params.delta << '\t' << (lambda_tilde ? std::to_string(*lambda_tilde) : "?") << '\t' << upper(c) << '\t'
          << order << '\t' << to_string(best.status) << '\t' << best.rank << '\t' << best.tie_class << '\t'
          << best.undecided_before << '\t' << best.certificate << '\n';
    } else {
      out << "v=" << params.v << " k=" << params.k << " r=" << params.r << " b=" << params.b
          << " lambda=" << params.lambda << " delta=" << params.delta
          << " lambda_tilde=" << (lambda_tilde ? std::to_string(*lambda_tilde) : "undecided") << '\n'
          << "criterion=" << upper(c) << " order at " << order << " (" << plural(family.entries.size(), "graph")
          << ")\n";
    }
    if (!best.design) {
      if (format == Format::Text) {
        const std::string limit = args.max_rank == INT_MAX ? "" : " up to rank " + std::to_string(args.max_rank);
        out << (best.status == SearchStatus::Undecided ? "undecided" : "none") << limit << " ("
            << best.undecided_before << " searches hit the node budget)\n";
      }
      exit_code = kExitNone;
      continue;
    }
    if (best.status != SearchStatus::Found) exit_code = kExitNone;

    const Graph t = graph6::decode(best.certificate);
    const SymVector sym = sym_vector(t);
    if (format == Format::Text) {
      out << "rank=" << best.rank << " tie_class=" << best.tie_class << " rank_one=" << (best.rank == 1 ? "yes" : "no")
          << " graph=" << best.certificate << '\n';
      if (best.undecided_before > 0) {
        out << "warning: " << best.undecided_before << " better-ranked graphs were undecided within the node budget\n";
      }
      std::vector<BigInt> xs;
      if (fixed_x) {
        xs.push_back(*fixed_x);
      } else {
        xs.emplace_back(params.lambda);
        if (lambda_tilde) xs.emplace_back(params.lambda + *lambda_tilde);
      }
      for (const auto& x : xs) out << value_line(sym, x, format) << '\n';
    }
    const std::string comment = "v=" + std::to_string(params.v) + " k=" + std::to_string(params.k) +
                                " r=" + std::to_string(params.r) + " criterion=" + upper(c) + " rank=" +
                                std::to_string(best.rank) + " graph=" + best.certificate;
    const std::string blocks = format_blocks(*best.design, comment);
    if (args.out_file.empty()) {
      if (format == Format::Text) out << blocks;
    } else {
      design_text += blocks;
    }
  }
  if (!args.out_file.empty() && !design_text.empty()) write_text(args.out_file, design_text);
  return exit_code;
}

// --- verify / values -------------------------------------------------------

struct DesignFileArgs {
  std::string file;
  int v = 0;
  int k = 0;
  std::vector<long> offsets;
};

int cmd_verify(const DesignFileArgs& args, const RunConfig& config, std::ostream& out) {
  const BlockDesign design = read_blocks(args.file, args.v, args.k);
  const RgdReport report = verify_rgd(design);
  if (config.output() == Format::Tsv) {
    out << "v\tk\tb\tr\tlambda\tdelta\tbinary\tconnected\trgd\tfailure\n"
        << design.v << '\t' << design.k << '\t' << design.block_count() << '\t' << report.replication << '\t'
        << report.lambda << '\t' << report.delta << '\t' << report.is_binary << '\t' << report.is_connected << '\t'
        << report.is_rgd << '\t' << report.failure << '\n';
  } else if (report.is_rgd) {
    out << "RGD: v=" << design.v << " k=" << design.k << " r=" << report.replication << " lambda=" << report.lambda
        << " delta=" << report.delta << ", connected\n";
  } else {
    out << "not an RGD: " << report.failure << '\n';
  }
  return report.is_rgd ? kExitOk : kExitNone;
}

int cmd_values(const DesignFileArgs& args, const RunConfig& config, std::ostream& out) {
  const BlockDesign design = read_blocks(args.file, args.v, args.k);
  const RgdReport report = verify_rgd(design);
  if (!report.is_binary || report.replication < 0 || (!report.is_rgd && report.failure.rfind("not connected", 0) != 0)) {
    out << "not an RGD: " << report.failure << '\n';
    return kExitNone;
  }
  // Offsets add complete-design structure on top of the design's own lambda.
  const SymVector sym = laplacian_sym_vector(report.t);
  const Format format = config.output();
  if (format == Format::Tsv) {
    out << "offset\tx\tA\tA_decimal\tvA_decimal\tD\n";
  } else {
    out << "v=" << design.v << " k=" << design.k << " r=" << report.replication << " lambda=" << report.lambda
        << " delta=" << report.delta << '\n';
  }
  for (long offset : args.offsets) {
    if (offset < 0) throw InvalidArgument("offset must be nonnegative");
    const BigInt x = BigInt(report.lambda) + offset;
    if (format == Format::Tsv) out << offset << '\t';
    out << value_line(sym, x, format) << '\n';
  }
  return kExitOk;
}

// --- develop-cyclic / min-lambda -------------------------------------------

struct CyclicArgs {
  int v = 0;
  std::vector<std::string> initial;
  bool verify = false;
};

Block parse_initial_block(const std::string& text) {
  Block block;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      block.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InvalidArgument("bad initial block '" + text + "' (expected e.g. 1,2,4)");
    }
  }
  return block;
}

int cmd_develop_cyclic(const CyclicArgs& args, const RunConfig&, std::ostream& out) {
  std::vector<Block> initial;
  std::string label;
  for (const auto& text : args.initial) {
    initial.push_back(parse_initial_block(text));
    label += "(" + text + ")";
  }
  const BlockDesign design = develop_cyclic(args.v, initial);
  out << format_blocks(design, "v=" + std::to_string(args.v) + " k=" + std::to_string(design.k) + " b=" +
                                   std::to_string(design.block_count()) + " developed from " + label);
  if (!args.verify) return kExitOk;
  const RgdReport report = verify_rgd(design);
  if (report.is_rgd) {
    out << "# RGD: v=" << design.v << " k=" << design.k << " r=" << report.replication << " lambda=" << report.lambda
        << " delta=" << report.delta << ", connected\n";
    return kExitOk;
  }
  out << "# not an RGD: " << report.failure << '\n';
  return kExitNone;
}

struct MinLambdaArgs {
  int v = 0;
  int k = 0;
  int cap = kDefaultLambdaCap;
  std::string out_file;
};

int cmd_min_lambda(const MinLambdaArgs& args, const RunConfig& config, std::ostream& out) {
  const auto result = min_lambda_tilde(args.v, args.k, args.cap, config.budget());
  if (result.status == SearchStatus::Found) {
    const auto& w = *result.witness;
    out << "lambda_tilde=" << result.lambda << " (b=" << w.block_count() << " r=" << w.replication().front() << ")\n";
    if (!args.out_file.empty()) {
      write_text(args.out_file,
                 format_blocks(w, "2-(" + std::to_string(args.v) + "," + std::to_string(args.k) + "," +
                                      std::to_string(result.lambda) + ") design"));
    }
    return kExitOk;
  }
  if (result.status == SearchStatus::Undecided) {
    out << "undecided at lambda=" << result.lambda << " (node budget exhausted)\n";
  } else {
    out << "unknown above cap " << args.cap << ": no 2-(" << args.v << "," << args.k << ",lambda) design for lambda <= "
        << args.cap << "\n";
  }
  return kExitNone;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  int v_min = 5;
  int v_max = 10;
  int delta_min = 3;
  int delta_max = -1;  // v - 2
  bool designs = false;
  int k_max = 4;
  int r_max = 10;
};

int cmd_table(const TableArgs& args, const RunConfig& config, std::ostream& out) {
  auto cache = config.cache();
  std::map<std::pair<int, int>, std::pair<BigInt, BigInt>> x0s;
  auto x0_of = [&](int v, int delta) -> const std::pair<BigInt, BigInt>& {
    auto it = x0s.find({v, delta});
    if (it == x0s.end()) {
      it = x0s.emplace(std::pair{v, delta}, std::pair{cache.ranking(v, delta, Criterion::A).x0,
                                                      cache.ranking(v, delta, Criterion::D).x0})
               .first;
    }
    return it->second;
  };
  auto wanted = [&](int v, int delta) {
    const int hi = args.delta_max < 0 ? v - 2 : args.delta_max;
    return delta >= std::max(args.delta_min, 1) && delta <= std::min(hi, v - 1) && (v * delta) % 2 == 0;
  };
  const std::string sep = config.output() == Format::Tsv ? "\t" : "  ";

  if (!args.designs) {
    out << "v" << sep << "delta" << sep << "graphs" << sep << "x0_A" << sep << "x0_D\n";
    for (int v = args.v_min; v <= args.v_max; ++v) {
      for (int delta = 1; delta < v; ++delta) {
        if (!wanted(v, delta)) continue;
        const auto& [xa, xd] = x0_of(v, delta);
        out << v << sep << delta << sep << cache.graphs(v, delta).size() << sep << xa.get_str() << sep << xd.get_str()
            << '\n';
      }
    }
    return kExitOk;
  }

  out << "v" << sep << "k" << sep << "r" << sep << "lambda" << sep << "lambda_tilde" << sep << "delta" << sep << "x0_A"
      << sep << "x0_D\n";
  for (int v = args.v_min; v <= args.v_max; ++v) {
    for (int k = 2; k <= std::min(args.k_max, v - 1); ++k) {
      std::optional<std::optional<int>> lambda_tilde;
      for (int r = k; r <= args.r_max; ++r) {
        if ((v * r) % k != 0) continue;
        const DesignParams p = params_for(v, k, r);
        if (!wanted(v, p.delta)) continue;
        if (!lambda_tilde) lambda_tilde = lambda_tilde_for(v, k, config.budget());
        const auto& [xa, xd] = x0_of(v, p.delta);
        out << v << sep << k << sep << r << sep << p.lambda << sep
            << (*lambda_tilde ? std::to_string(**lambda_tilde) : "?") << sep << p.delta << sep << xa.get_str() << sep
            << xd.get_str() << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular graph designs: enumerate, rank and realize A- and D-best RGDs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Expand all help");

  RunConfig config;
  app.add_option("--cache", config.cache_dir, "Directory for graph and ranking caches");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", config.node_budget, "Search node limit per design search (0 = unlimited)");
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  auto add_criterion = [&](CLI::App* sub) {
    sub->add_option("--criterion", config.criterion, "Optimality criterion")->check(CLI::IsMember({"a", "d", "both"}));
  };

  int code = kExitOk;

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "Connected delta-regular graphs on v vertices");
  enumerate->add_option("v", enumerate_args.v)->required();
  enumerate->add_option("delta", enumerate_args.delta)->required();
  enumerate->add_option("--out", enumerate_args.out_file, "Write graphs as graph6");
  enumerate->callback([&] { code = cmd_enumerate(enumerate_args, config, out); });

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Order M(v, delta) at infinity and certify x0");
  rank->add_option("v", rank_args.v)->required();
  rank->add_option("delta", rank_args.delta)->required();
  rank->add_flag("--list", rank_args.list, "Print every ranked graph");
  add_criterion(rank);
  rank->callback([&] { code = cmd_rank(rank_args, config, out); });

  BestArgs best_args;
  auto* best = app.add_subcommand("best", "First graph in the order that a design realizes");
  best->add_option("v", best_args.v)->required();
  best->add_option("k", best_args.k)->required();
  best->add_option("r", best_args.r)->required();
  best->add_option("--max-rank", best_args.max_rank, "Stop after this rank")->check(CLI::PositiveNumber);
  best->add_option("--at-y", best_args.at_y, "Rank by exact value at x = lambda + y * lambda_tilde")
      ->check(CLI::NonNegativeNumber);
  best->add_option("--graphs", best_args.graphs_file, "Restrict candidates to graphs in a graph6 file")
      ->check(CLI::ExistingFile);
  best->add_option("--out", best_args.out_file, "Write the design's blocks here");
  add_criterion(best);
  best->callback([&] { code = cmd_best(best_args, config, out); });

  DesignFileArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a blocks file is a connected RGD");
  verify->add_option("file", verify_args.file)->required()->check(CLI::ExistingFile);
  verify->add_option("v", verify_args.v)->required();
  verify->add_option("k", verify_args.k)->required();
  verify->callback([&] { code = cmd_verify(verify_args, config, out); });

  DesignFileArgs values_args;
  auto* values = app.add_subcommand("values", "Exact A- and D-values of a design at added offsets");
  values->add_option("file", values_args.file)->required()->check(CLI::ExistingFile);
  values->add_option("v", values_args.v)->required();
  values->add_option("k", values_args.k)->required();
  values->add_option("--x", values_args.offsets, "Offsets added to the design's lambda (repeatable)")
      ->default_val(std::vector<long>{0});
  values->callback([&] { code = cmd_values(values_args, config, out); });

  CyclicArgs cyclic_args;
  auto* cyclic = app.add_subcommand("develop-cyclic", "Develop initial blocks modulo v");
  cyclic->add_option("v", cyclic_args.v)->required()->check(CLI::PositiveNumber);
  cyclic->add_option("blocks", cyclic_args.initial, "Initial blocks, 1-based, e.g. 1,2,4 1,3,5")->required();
  cyclic->add_flag("--verify", cyclic_args.verify, "Append a verification line");
  cyclic->callback([&] { code = cmd_develop_cyclic(cyclic_args, config, out); });

  MinLambdaArgs min_lambda_args;
  auto* min_lambda = app.add_subcommand("min-lambda", "Smallest lambda with a 2-(v,k,lambda) design");
  min_lambda->add_option("v", min_lambda_args.v)->required();
  min_lambda->add_option("k", min_lambda_args.k)->required();
  min_lambda->add_option("--cap", min_lambda_args.cap, "Largest lambda tried")->check(CLI::PositiveNumber);
  min_lambda->add_option("--out", min_lambda_args.out_file, "Write the witness design here");
  min_lambda->callback([&] { code = cmd_min_lambda(min_lambda_args, config, out); });

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "x0 table, or with --designs one row per (v, k, r) with k <= r <= r-max");
  table->add_option("--v-min", table_args.v_min)->check(CLI::Range(3, 64));
  table->add_option("--v-max", table_args.v_max)->check(CLI::Range(3, 64));
  table->add_option("--delta-min", table_args.delta_min);
  table->add_option("--delta-max", table_args.delta_max, "Default v-2");
  table->add_flag("--designs", table_args.designs, "One row per feasible (v, k, r)");
  table->add_option("--k-max", table_args.k_max);
  table->add_option("--r-max", table_args.r_max);
  table->callback([&] { code = cmd_table(table_args, config, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else CLI11 rejects is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNone;
  }
  return code;
}

}  // namespace rgd::cli
