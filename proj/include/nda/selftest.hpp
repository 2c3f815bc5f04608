// Seeded self-verification suite behind the `selftest` CLI subcommand:
// field axioms, calculus identities, boost invariance, beta factorization,
// Friedman identities, and the custom-bijection rejection probe.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nda {

struct SelfTestResult {
    std::string name;
    bool passed;
    std::string detail;  // failure diagnostics or a short pass note
};

// Fixed seed => identical samples => identical results.
std::vector<SelfTestResult> run_selftest(std::uint64_t seed);

// Prints one [PASS]/[FAIL] line per check plus a summary; true iff all passed.
bool report_selftest(std::ostream& out, const std::vector<SelfTestResult>& results);

}  // namespace nda
