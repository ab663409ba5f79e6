#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "mbc/cli.hpp"
#include "mbc/factorizer.hpp"
#include "mbc/report_format.hpp"

using namespace mbc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("factor records for n = 5") {
  auto r = run({"factor", "5", "--records"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 2 layers=- even_prime\n3 2 layers=1,2 direct\n7 1 layers=1 interval(1,1)\n");
}

TEST_CASE("primes command") {
  auto c = run({"primes", "1000", "2000", "--count"});
  CHECK(c.code == 0);
  CHECK(c.out == "135\n");
  CHECK(run({"primes", "2", "11"}).out == "2\n3\n5\n7\n");
}

TEST_CASE("layers summary") {
  auto r = run({"layers", "1000000", "--summary"});
  CHECK(r.code == 0);
  CHECK(r.out.find("layer1=101384\n") != std::string::npos);
  CHECK(r.out.find("layer_population=101538\n") != std::string::npos);
  auto top_down = lines(run({"layers", "5"}).out);
  REQUIRE(top_down.size() >= 5);
  CHECK(top_down[1] == "layer 2 (1):");
  CHECK(top_down[3] == "layer 1 (2):");
  auto with_empty = run({"layers", "1000", "--j-max", "8"}).out;
  CHECK(with_empty.find("layer 7 (0): empty\n") != std::string::npos);
  CHECK(with_empty.find("empty layers: 5,6,7,8\n") != std::string::npos);
}

TEST_CASE("layer command") {
  auto r = run({"layer", "1000000", "6"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"3", "11"});
}

TEST_CASE("format_report human mode") {
  auto one = format_report(factor_mbc(1), OutputMode::records);
  CHECK(one == "2 1 layers=- even_prime\n");

  auto human = lines(format_report(factor_mbc(1000), OutputMode::human));
  std::string last_header;
  for (const auto& l : human)
    if (l.rfind("S_", 0) == 0) last_header = l;
  CHECK(last_header == "S_1 (1000, 2000): 135 primes");
  CHECK(human[1] == "2^6");
  // small primes always carry their layers; large ones are grouped without "(1)"
  CHECK(std::find(human.begin(), human.end(), "5 (1)") == human.end());  // 5 does not divide B(1000)
  for (const auto& l : human)
    if (l.rfind("  ", 0) == 0) CHECK(l.find('(') == std::string::npos);
}

TEST_CASE("records line count and round trip") {
  auto text = format_report(factor_mbc(1000), OutputMode::records);
  auto recs = parse_records(text);
  CHECK(recs.size() == 208);
  unsigned total = 0;
  for (const auto& r : recs) total += r.exponent;
  CHECK(total == 217);

  for (u64 n = 0; n <= 2000; n += (n < 100 ? 1 : 53)) {
    auto parsed = parse_records(run({"factor", std::to_string(n), "--records"}).out);
    mpz_class product = 1, term;
    for (const auto& r : parsed) {
      mpz_ui_pow_ui(term.get_mpz_t(), r.prime, r.exponent);
      product *= term;
    }
    REQUIRE(product == mbc_value(n));
  }
  CHECK_THROWS_AS(parse_records("3 two layers=1 direct\n"), std::invalid_argument);
}

TEST_CASE("human and records modes carry the same factors") {
  for (u64 n : {1, 5, 77, 1000, 4096}) {
    auto rec = parse_records(run({"factor", std::to_string(n), "--records"}).out);
    std::multiset<std::pair<u64, unsigned>> from_records;
    for (const auto& r : rec) from_records.emplace(r.prime, r.exponent);

    std::multiset<std::pair<u64, unsigned>> from_human;
    auto human = lines(run({"factor", std::to_string(n)}).out);
    for (std::size_t i = 1; i < human.size(); ++i) {
      const auto& l = human[i];
      if (l.rfind("S_", 0) == 0) continue;
      std::istringstream is(l);
      if (l.rfind("  ", 0) == 0) {
        for (u64 p; is >> p;) from_human.emplace(p, 1);
        continue;
      }
      std::string head;
      is >> head;
      const auto caret = head.find('^');
      const u64 p = std::stoull(head.substr(0, caret));
      const unsigned e = caret == std::string::npos ? 1 : std::stoul(head.substr(caret + 1));
      from_human.emplace(p, e);
    }
    CHECK(from_human == from_records);
  }
}

TEST_CASE("output is deterministic") {
  CHECK(run({"factor", "3000"}).out == run({"factor", "3000"}).out);
  CHECK(run({"factor", "3000", "--records"}).out == run({"factor", "3000", "--records"}).out);
}

TEST_CASE("strategy flags change provenance only") {
  auto a = parse_records(run({"factor", "2500", "--records"}).out);
  auto b = parse_records(run({"factor", "2500", "--records", "--layers-via-intervals", "1,2,3", "--direct-cutoff", "3"}).out);
  auto c = parse_records(run({"factor", "2500", "--records", "--k-max", "3"}).out);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].prime == b[i].prime);
    CHECK(a[i].exponent == b[i].exponent);
    CHECK(a[i].layers == c[i].layers);
  }
  CHECK(a != b);
}

TEST_CASE("summary goes to the diagnostic stream") {
  auto r = run({"factor", "1000", "--records", "--summary"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 208);
  CHECK(r.err.find("prime_power_multiset=217\n") != std::string::npos);
}

TEST_CASE("exit codes and error messages") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"factor"}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  auto bad_n = run({"factor", "12x"});
  CHECK(bad_n.code == cli::kExitUsage);
  CHECK(bad_n.err.find("n:") != std::string::npos);
  CHECK(run({"factor", "-5"}).code == cli::kExitUsage);
  CHECK(run({"factor", "10", "--k-max", "0"}).code == cli::kExitUsage);
  CHECK(run({"layers", "10", "--j-max", "zero"}).code == cli::kExitUsage);

  auto bad_k = run({"factor", "1000", "--k-max", "600"});
  CHECK(bad_k.code == cli::kExitFailure);
  CHECK(bad_k.err.find("--k-max") != std::string::npos);
  CHECK(bad_k.err.find("InvalidK") != std::string::npos);

  auto empty = run({"primes", "10", "5"});
  CHECK(empty.code == cli::kExitFailure);
  CHECK(empty.err.find("EmptyRange") != std::string::npos);

  auto huge = run({"factor", "100000001"});
  CHECK(huge.code == cli::kExitFailure);
  CHECK(huge.err.find("n: IndexTooLarge") != std::string::npos);

  auto layer = run({"layer", "4", "2"});
  CHECK(layer.code == cli::kExitFailure);
  CHECK(layer.err.find("j: LayerOutOfRange") != std::string::npos);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("MBC_RANGE_CEILING") {
  setenv("MBC_RANGE_CEILING", "1000", 1);
  CHECK(run({"primes", "2", "1000", "--count"}).out == "168\n");
  auto over = run({"primes", "2", "1001"});
  CHECK(over.code == cli::kExitFailure);
  CHECK(over.err.find("hi: RangeTooLarge") != std::string::npos);
  setenv("MBC_RANGE_CEILING", "lots", 1);
  CHECK(run({"primes", "2", "10"}).code == cli::kExitUsage);
  unsetenv("MBC_RANGE_CEILING");
  CHECK(run({"primes", "2", "1001", "--count"}).out == "168\n");
}
