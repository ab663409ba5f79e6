#include "mbc/report_format.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mbc/interval_engine.hpp"

namespace mbc {

namespace {

constexpr std::size_t kPerLine = 10;

std::string join_layers(const std::vector<unsigned>& layers) {
  if (layers.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(layers[i]);
  }
  return s;
}

void write_wrapped(std::ostringstream& os, const std::vector<u64>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    os << (i % kPerLine == 0 ? "  " : " ") << primes[i];
    if (i % kPerLine == kPerLine - 1 || i + 1 == primes.size()) os << '\n';
  }
}

template <class T>
T parse_number(std::string_view s, std::string_view line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed record: " + std::string(line));
  return value;
}

}  // namespace

std::string format_report(const FactorizationReport& r, OutputMode mode) {
  std::ostringstream os;
  if (mode == OutputMode::records) {
    for (const auto& f : r.factors)
      os << f.prime << ' ' << f.exponent << " layers=" << join_layers(f.layers) << ' ' << f.provenance.to_string()
         << '\n';
    return os.str();
  }

  os << "B(" << r.n << ") = C(" << 2 * r.n << ", " << r.n << "): " << r.counts.distinct_primes
     << " distinct primes, " << r.counts.prime_power_multiset << " with multiplicity\n";

  // Primes above sqrt(2n) all sit in the distinct layer; group them by the
  // layer-1 interval holding them, lowest interval first.
  const u64 power_border = isqrt(static_cast<u128>(r.n) * 2);
  std::map<u64, std::vector<u64>, std::greater<>> groups;
  for (const auto& f : r.factors) {
    if (f.prime > power_border && f.prime != 2) {
      groups[distinct_layer_membership(r.n, f.prime).value_or(0)].push_back(f.prime);
      continue;
    }
    os << f.prime;
    if (f.exponent > 1) os << '^' << f.exponent;
    if (!f.layers.empty()) os << " (" << join_layers(f.layers) << ')';
    os << '\n';
  }
  for (const auto& [k, primes] : groups) {
    os << "S_" << k << ' ' << ChebyshevInterval(r.n, 1, k).describe() << ": " << primes.size() << " primes\n";
    write_wrapped(os, primes);
  }
  return os.str();
}

std::string format_summary(const FactorizationReport& r) {
  const ReportCounts& c = r.counts;
  std::ostringstream os;
  os << "n=" << r.n << '\n'
     << "distinct_primes=" << c.distinct_primes << '\n'
     << "prime_power_multiset=" << c.prime_power_multiset << '\n'
     << "layer_population=" << c.layer_population << '\n'
     << "distinct_layer_size=" << c.distinct_layer_size << '\n'
     << "main_interval_size=" << c.main_interval_size << '\n';
  for (std::size_t j = 0; j < c.layer_sizes.size(); ++j) os << "layer" << j + 1 << '=' << c.layer_sizes[j] << '\n';
  os << "interval_selected=" << c.interval_selected << '\n'
     << "direct_fallback=" << c.direct_fallback << '\n'
     << "intervals_visited=" << c.intervals_visited << '\n'
     << "intervals_skipped_empty=" << c.intervals_skipped_empty << '\n';
  return os.str();
}

std::string format_layer_split(const LayerSplit& split) {
  std::ostringstream os;
  os << "B(" << split.n << "): 2^" << split.v2 << " outside the layers\n";
  for (std::size_t j = split.layers.size(); j-- > 0;) {
    const auto& layer = split.layers[j];
    os << "layer " << j + 1 << " (" << layer.size() << ")";
    if (layer.empty()) {
      os << ": empty\n";
      continue;
    }
    os << ":\n";
    write_wrapped(os, layer);
  }
  os << "empty layers: " << join_layers(split.empty_layer_indices) << '\n';
  return os.str();
}

std::string format_layer_summary(const LayerSplit& split) {
  std::ostringstream os;
  u64 population = 0;
  os << "n=" << split.n << '\n' << "layers=" << split.layers.size() << '\n';
  for (std::size_t j = split.layers.size(); j-- > 0;) {
    os << "layer" << j + 1 << '=' << split.layers[j].size() << '\n';
    population += split.layers[j].size();
  }
  os << "empty_layers=" << join_layers(split.empty_layer_indices) << '\n'
     << "layer_population=" << population << '\n'
     << "v2=" << split.v2 << '\n';
  return os.str();
}

std::vector<RecordLine> parse_records(std::string_view text) {
  std::vector<RecordLine> out;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const auto sp = line.find(' ', pos);
      fields.push_back(line.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos));
      if (sp == std::string_view::npos) break;
      pos = sp + 1;
    }
    if (fields.size() != 4 || fields[2].substr(0, 7) != "layers=")
      throw std::invalid_argument("malformed record: " + std::string(line));

    RecordLine rec;
    rec.prime = parse_number<u64>(fields[0], line);
    rec.exponent = parse_number<unsigned>(fields[1], line);
    std::string_view layers = fields[2].substr(7);
    if (layers != "-") {
      while (!layers.empty()) {
        const auto comma = layers.find(',');
        rec.layers.push_back(parse_number<unsigned>(layers.substr(0, comma), line));
        layers = comma == std::string_view::npos ? std::string_view{} : layers.substr(comma + 1);
      }
    }
    rec.provenance = std::string(fields[3]);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace mbc
