#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the `mbc` command line. args excludes the program name.
//   mbc primes <lo> <hi> [--count]
//   mbc factor <n> [--k-max K] [--layers-via-intervals LIST] [--direct-cutoff C] [--records] [--summary]
//   mbc layers <n> [--j-max J] [--summary]
//   mbc layer <n> <j>
// MBC_RANGE_CEILING overrides the prime-range ceiling.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbc::cli
