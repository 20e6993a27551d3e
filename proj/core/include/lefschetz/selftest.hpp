#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lefschetz {

enum class SelftestLevel { Quick, Deep };

// Runs the internal identity and invariant suites (bridge identity, group
// determinant, determinant factorization, L-sum nonvanishing, Jacobi weight,
// split-prime slope oracle), printing one timed line per suite.  Quick keeps
// l <= 13; deep extends to l <= 31 and runs the field oracles.  Returns the
// number of failed suites.  The seed feeds the randomized suites only.
int run_selftest(SelftestLevel level, std::uint64_t seed, std::ostream& out);

}  // namespace lefschetz
