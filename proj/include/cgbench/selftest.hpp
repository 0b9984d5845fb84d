#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgbench {

struct SelftestConfig {
    long path_pairs = 1200;       // path enumeration comparisons
    long blocking_cases = 1000;   // per-path blocking comparisons
    long dsep_cases = 5000;       // separation queries
    long adjustment_cases = 1000; // backdoor/frontdoor verdicts
    long identify_samples = 3000; // sampled 5-node identification queries
    bool exhaustive = true;       // every 3/4-node DAG pair, every 4-node ADMG
};

struct SelftestResult {
    std::string name;
    long cases = 0;
    long mismatches = 0;
    std::string detail;  // describes the first mismatch, empty otherwise
    bool pass() const { return mismatches == 0 && cases > 0; }
};

// Replays every oracle against a from-scratch reference implementation
// (path enumeration over explicit edge lists, signature comparison over all
// separation statements, hedge search) on sampled and exhaustively
// enumerated graphs. Deterministic in seed.
std::vector<SelftestResult> run_selftest(std::uint64_t seed, const SelftestConfig& cfg = {});

}  // namespace cgbench
