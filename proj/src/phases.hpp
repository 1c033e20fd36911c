#pragma once

#include <vector>

#include "qkr/core.hpp"

namespace qkr::detail {

// i^{-m} for m >= 0, indexed by m mod 4.
inline constexpr cplx kInvPowI[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};

// Free-evolution phases e^{-i 2pi (p/q) l^2} per lattice site, from the exact
// integer residue p*l^2 mod q. Quarter-turn residues are emitted as exact
// unit values, so p/q = 1 gives exactly 1 and p/q = 1/2 exactly (-1)^l.
std::vector<cplx> free_phases(const Lattice& lattice, const ResonanceParams& params);

} // namespace qkr::detail
