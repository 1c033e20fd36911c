#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Self-check suite behind the `verify` CLI subcommand: special-function spot
// checks, pairwise evolver agreement, the antiresonance revival, and the
// exact moment identities against simulation.

namespace qkr {

struct VerifyResult {
    std::string name;
    double measured = 0.0;  // the quantity compared against the bound
    double bound = 0.0;
    bool passed = false;
};

std::vector<VerifyResult> run_verification();

// Fixed-format table, one line per check; returns true when all passed.
bool print_verification(std::ostream& os, const std::vector<VerifyResult>& results);

} // namespace qkr
