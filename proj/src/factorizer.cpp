#include "mbc/factorizer.hpp"

#include <algorithm>
#include <string>

#include "mbc/error.hpp"
#include "mbc/valuation.hpp"

namespace mbc {

namespace {

void check_full_ceiling(u64 n, const FactorizerLimits& limits) {
  if (n > limits.full_ceiling)
    throw Error(ErrorCode::index_too_large, "index " + std::to_string(n) + " exceeds full-factorization ceiling " +
                                                std::to_string(limits.full_ceiling));
}

std::vector<unsigned> layers_of(u64 n, u64 p, unsigned top) {
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= top; ++j)
    if (kummer_term(n, p, j)) out.push_back(j);
  return out;
}

u64 k_max_for(const StrategyConfig& strategy, unsigned j) {
  auto it = strategy.k_max.find(j);
  return it == strategy.k_max.end() ? kExhaust : it->second;
}

// Layer j is fully reached by interval selection above the cutoff.
bool layer_covered(u64 n, const StrategyConfig& strategy, unsigned j) {
  if (std::find(strategy.layers_via_intervals.begin(), strategy.layers_via_intervals.end(), j) ==
      strategy.layers_via_intervals.end())
    return false;
  const u64 limit = layer_k_limit(n, j);
  if (j == 1 && limit == 0) return false;  // n <= 2: (2, 4) has no admissible k
  const u64 k = k_max_for(strategy, j);
  return k == kExhaust || k >= limit;
}

}  // namespace

std::string Provenance::to_string() const {
  switch (kind) {
    case ProvenanceKind::interval:
      return "interval(" + std::to_string(layer) + "," + std::to_string(k) + ")";
    case ProvenanceKind::even_prime:
      return "even_prime";
    case ProvenanceKind::direct:
      break;
  }
  return "direct";
}

FactorizationReport factor_mbc(u64 n, const StrategyConfig& strategy, const FactorizerLimits& limits) {
  check_full_ceiling(n, limits);
  FactorizationReport report;
  report.n = n;
  if (n == 0) return report;

  for (unsigned j : strategy.layers_via_intervals)
    if (j == 0) throw Error(ErrorCode::layer_out_of_range, "layer index must be positive");
  if (auto k = k_max_for(strategy, 1); k != kExhaust && k > layer_k_limit(n, 1) &&
      std::count(strategy.layers_via_intervals.begin(), strategy.layers_via_intervals.end(), 1u))
    throw Error(ErrorCode::invalid_k, "k_max " + std::to_string(k) + " violates k < n/2 for n = " + std::to_string(n));

  const u64 twice_n = 2 * n;
  const unsigned top = max_layers(n);
  const u64 cutoff = std::max<u64>(3, strategy.direct_cutoff.value_or(isqrt(twice_n)));

  const PrimeTable table(twice_n, limits.sieve);

  std::vector<unsigned> interval_layers = strategy.layers_via_intervals;
  std::sort(interval_layers.begin(), interval_layers.end());
  interval_layers.erase(std::unique(interval_layers.begin(), interval_layers.end()), interval_layers.end());

  std::vector<std::pair<u64, Provenance>> selected;
  IntervalStats stats;
  for (unsigned j : interval_layers) {
    for (const auto& s : select_layer_primes(n, j, k_max_for(strategy, j), table, cutoff, &stats))
      selected.emplace_back(s.prime, Provenance::interval(j, s.k));
  }
  // Lowest layer wins the provenance tag.
  std::stable_sort(selected.begin(), selected.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  selected.erase(std::unique(selected.begin(), selected.end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 selected.end());

  // Primes living only in layers above the covered prefix 1..J satisfy
  // p^(J+1) < 2n, so direct valuation must reach that far.
  unsigned covered = 0;
  while (covered < 64 && layer_covered(n, strategy, covered + 1)) ++covered;
  const u64 direct_bound = std::max(cutoff, covered == 0 ? twice_n - 1 : iroot(twice_n - 1, covered + 1));

  report.factors.push_back({2, static_cast<unsigned>(v2_of_B(n)), {}, Provenance::even_prime()});

  auto emit = [&](u64 p, Provenance prov) {
    std::vector<unsigned> layers = layers_of(n, p, top);
    if (layers.empty()) return;
    const auto e = static_cast<unsigned>(layers.size());
    report.factors.push_back({p, e, std::move(layers), prov});
  };

  auto sel = selected.begin();
  for (u64 p : table.range(3, direct_bound + 1)) {
    if (sel != selected.end() && sel->first == p) {
      emit(p, sel->second);
      ++sel;
    } else {
      emit(p, Provenance::direct());
    }
  }
  for (; sel != selected.end(); ++sel) emit(sel->first, sel->second);

  ReportCounts& c = report.counts;
  c.layer_sizes.assign(top, 0);
  c.intervals_visited = stats.emitted;
  c.intervals_skipped_empty = stats.skipped_empty;
  for (const auto& f : report.factors) {
    ++c.distinct_primes;
    c.prime_power_multiset += f.exponent;
    if (f.prime > n && f.prime < twice_n) ++c.main_interval_size;
    if (f.prime == 2) continue;
    for (unsigned j : f.layers) ++c.layer_sizes[j - 1];
    if (f.provenance.kind == ProvenanceKind::interval)
      ++c.interval_selected;
    else
      ++c.direct_fallback;
  }
  for (u64 s : c.layer_sizes) c.layer_population += s;
  c.distinct_layer_size = c.layer_sizes.empty() ? 0 : c.layer_sizes[0];
  return report;
}

LayerSplit layer_split(u64 n, std::optional<unsigned> j_max, const FactorizerLimits& limits) {
  check_full_ceiling(n, limits);
  LayerSplit split;
  split.n = n;
  split.v2 = static_cast<unsigned>(v2_of_B(n));
  const unsigned top = max_layers(n);
  const unsigned count = j_max.value_or(top);
  split.layers.resize(count);
  if (n >= 2) {
    const PrimeTable table(2 * n, limits.sieve);
    for (unsigned j = 1; j <= std::min(count, top); ++j)
      for (const auto& s : collect_layer(n, j, table)) split.layers[j - 1].push_back(s.prime);
  }
  for (unsigned j = 1; j <= count; ++j)
    if (split.layers[j - 1].empty()) split.empty_layer_indices.push_back(j);
  return split;
}

std::vector<u64> single_layer(u64 n, unsigned j, const PrimeSource& source, const FactorizerLimits& limits) {
  if (j == 0 || n < 2 || saturating_pow(3, j, static_cast<u128>(n) * 2) > static_cast<u128>(n) * 2 - 1)
    throw Error(ErrorCode::layer_out_of_range,
                "layer " + std::to_string(j) + " is out of range for n = " + std::to_string(n));
  if (j == 1) check_full_ceiling(n, limits);
  std::vector<u64> out;
  for (const auto& s : collect_layer(n, j, source)) out.push_back(s.prime);
  return out;
}

std::vector<u64> single_layer(u64 n, unsigned j, const FactorizerLimits& limits) {
  if (j == 0 || n < 2 || saturating_pow(3, j, static_cast<u128>(n) * 2) > static_cast<u128>(n) * 2 - 1)
    throw Error(ErrorCode::layer_out_of_range,
                "layer " + std::to_string(j) + " is out of range for n = " + std::to_string(n));
  if (j == 1) check_full_ceiling(n, limits);
  // Layer-j primes satisfy p^j < 2n.
  const PrimeTable table(iroot(static_cast<u128>(n) * 2 - 1, j) + 1, limits.sieve);
  return single_layer(n, j, table, limits);
}

BigNat mbc_value(u64 n) {
  BigNat num, den;
  mpz_fac_ui(num.get_mpz_t(), 2 * n);
  mpz_fac_ui(den.get_mpz_t(), n);
  den *= den;
  BigNat out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigNat product_of(const FactorizationReport& r) {
  BigNat acc = 1;
  BigNat term;
  for (const auto& f : r.factors) {
    mpz_ui_pow_ui(term.get_mpz_t(), f.prime, f.exponent);
    acc *= term;
  }
  return acc;
}

VerifyOutcome verify_report(const FactorizationReport& r, const FactorizerLimits& limits) {
  if (r.n > limits.verification_cutoff)
    throw Error(ErrorCode::index_too_large, "index " + std::to_string(r.n) + " exceeds verification cutoff " +
                                                std::to_string(limits.verification_cutoff));
  VerifyOutcome out;
  for (const auto& f : r.factors) {
    const unsigned expected = vp_of_B(r.n, f.prime);
    if (expected != f.exponent) {
      out.ok = false;
      out.first_mismatch = f.prime;
      out.detail = "exponent of " + std::to_string(f.prime) + " is " + std::to_string(f.exponent) + ", expected " +
                   std::to_string(expected);
      return out;
    }
  }
  if (product_of(r) == mbc_value(r.n)) return out;

  // Exponents agree, so a prime is missing, duplicated, or out of order.
  out.ok = false;
  u64 prev = 0;
  for (const auto& f : r.factors) {
    if (f.prime <= prev) {
      out.first_mismatch = f.prime;
      out.detail = "factor " + std::to_string(f.prime) + " out of order or repeated";
      return out;
    }
    prev = f.prime;
  }
  const auto listed = [&](u64 p) {
    return std::binary_search(r.factors.begin(), r.factors.end(), p,
                              [](const auto& a, const auto& b) {
                                if constexpr (std::is_same_v<std::decay_t<decltype(a)>, PrimePower>)
                                  return a.prime < b;
                                else
                                  return a < b.prime;
                              });
  };
  if (r.n > 0) {
    for (u64 p : primes_in_range(PrimeRangeQuery{2, 2 * r.n, kDefaultSegmentBytes})) {
      if (vp_of_B(r.n, p) > 0 && !listed(p)) {
        out.first_mismatch = p;
        out.detail = "prime " + std::to_string(p) + " divides B(n) but is missing";
        return out;
      }
    }
  }
  out.detail = "product differs from (2n)!/(n!)^2";
  return out;
}

void check_report(const FactorizationReport& r, const FactorizerLimits& limits) {
  VerifyOutcome v = verify_report(r, limits);
  if (!v) throw Error(ErrorCode::verification_failed, v.detail, v.first_mismatch);
}

}  // namespace mbc
