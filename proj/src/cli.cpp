#include "mbc/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "mbc/error.hpp"
#include "mbc/factorizer.hpp"
#include "mbc/prime_engine.hpp"
#include "mbc/report_format.hpp"

namespace mbc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

u64 parse_u64(const std::string& flag, const std::string& text) {
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError(flag + ": expected a decimal integer, got '" + text + "'");
  return value;
}

unsigned parse_positive(const std::string& flag, const std::string& text) {
  const u64 v = parse_u64(flag, text);
  if (v == 0 || v > 64) throw UsageError(flag + ": expected an integer in 1..64, got '" + text + "'");
  return static_cast<unsigned>(v);
}

std::vector<unsigned> parse_layer_list(const std::string& flag, const std::string& text) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_positive(flag, text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Which user-facing argument a module error is blamed on.
using Blame = std::function<std::string(ErrorCode)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime factorization of middle binomial coefficients C(2n, n)", "mbc"};
  app.require_subcommand(1);

  std::string lo_text, hi_text, n_text, j_text, k_max_text, layers_text, cutoff_text, j_max_text;
  bool count_only = false, records = false, factor_summary = false, layers_summary = false;

  auto* primes = app.add_subcommand("primes", "List primes in [lo, hi)");
  primes->add_option("lo", lo_text, "Inclusive lower bound")->required();
  primes->add_option("hi", hi_text, "Exclusive upper bound")->required();
  primes->add_flag("--count", count_only, "Print only the number of primes");

  auto* factor = app.add_subcommand("factor", "Interval factorization of B(n)");
  factor->add_option("n", n_text, "Index n")->required();
  factor->add_option("--k-max", k_max_text, "Interval limit per interval layer");
  factor->add_option("--layers-via-intervals", layers_text, "Comma-separated layers selected from intervals");
  factor->add_option("--direct-cutoff", cutoff_text, "Odd primes up to this bound are valued directly");
  factor->add_flag("--records", records, "One machine-readable line per factor");
  factor->add_flag("--summary", factor_summary, "Print counters to stderr");

  auto* layers = app.add_subcommand("layers", "Split the factorization of B(n) into Legendre layers");
  layers->add_option("n", n_text, "Index n")->required();
  layers->add_option("--j-max", j_max_text, "Highest layer to report");
  layers->add_flag("--summary", layers_summary, "Print only per-layer counts");

  auto* layer = app.add_subcommand("layer", "Primes of a single Legendre layer of B(n)");
  layer->add_option("n", n_text, "Index n")->required();
  layer->add_option("j", j_text, "Layer index")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mbc: " << e.what() << '\n';
    return kExitUsage;
  }

  FactorizerLimits limits;
  Blame blame = [](ErrorCode) { return std::string("mbc"); };
  std::function<void()> action;

  try {
    if (const char* env = std::getenv("MBC_RANGE_CEILING"))
      limits.sieve.range_ceiling = parse_u64("MBC_RANGE_CEILING", env);

    if (primes->parsed()) {
      const u64 lo = parse_u64("lo", lo_text);
      const u64 hi = parse_u64("hi", hi_text);
      blame = [](ErrorCode c) { return std::string(c == ErrorCode::range_too_large ? "hi" : "lo/hi"); };
      action = [&, lo, hi] {
        if (count_only) {
          out << count_primes_in_range(lo, hi, limits.sieve) << '\n';
          return;
        }
        for (u64 p : primes_in_range(PrimeRangeQuery{lo, hi, kDefaultSegmentBytes}, limits.sieve)) out << p << '\n';
      };
    } else if (factor->parsed()) {
      const u64 n = parse_u64("n", n_text);
      StrategyConfig strategy;
      if (!layers_text.empty()) strategy.layers_via_intervals = parse_layer_list("--layers-via-intervals", layers_text);
      if (!k_max_text.empty()) {
        const u64 k = parse_u64("--k-max", k_max_text);
        if (k == 0) throw UsageError("--k-max: must be positive");
        for (unsigned j : strategy.layers_via_intervals) strategy.k_max[j] = k;
      }
      if (!cutoff_text.empty()) strategy.direct_cutoff = parse_u64("--direct-cutoff", cutoff_text);
      blame = [](ErrorCode c) {
        switch (c) {
          case ErrorCode::invalid_k: return std::string("--k-max");
          case ErrorCode::layer_out_of_range: return std::string("--layers-via-intervals");
          default: return std::string("n");
        }
      };
      action = [&, n, strategy] {
        const FactorizationReport r = factor_mbc(n, strategy, limits);
        out << format_report(r, records ? OutputMode::records : OutputMode::human);
        if (factor_summary) err << format_summary(r);
      };
    } else if (layers->parsed()) {
      const u64 n = parse_u64("n", n_text);
      std::optional<unsigned> j_max;
      if (!j_max_text.empty()) j_max = parse_positive("--j-max", j_max_text);
      blame = [](ErrorCode) { return std::string("n"); };
      action = [&, n, j_max] {
        const LayerSplit split = layer_split(n, j_max, limits);
        out << (layers_summary ? format_layer_summary(split) : format_layer_split(split));
      };
    } else if (layer->parsed()) {
      const u64 n = parse_u64("n", n_text);
      const unsigned j = parse_positive("j", j_text);
      blame = [](ErrorCode c) { return std::string(c == ErrorCode::layer_out_of_range ? "j" : "n"); };
      action = [&, n, j] {
        for (u64 p : single_layer(n, j, limits)) out << p << '\n';
      };
    }
  } catch (const UsageError& e) {
    err << "mbc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    action();
  } catch (const Error& e) {
    err << "mbc: " << blame(e.code()) << ": " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "mbc: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace mbc::cli
