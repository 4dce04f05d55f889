#pragma once

// Brute-force oracles used by the tests only.  These recompute, from explicit
// matrices, results that the library obtains by symbolic rules, and must stay
// independent of the code paths they check.

#include <vector>

#include "asai/localfield.hpp"
#include "asai/weildeligne.hpp"

namespace asai::oracle {

// Jordan type (partition, descending) of N_1 (x) I + I (x) N_2 where N_i are
// nilpotent with the given Jordan block sizes.  Computed from ranks of powers
// of the explicit matrix.
std::vector<int> tensor_jordan_partition(const std::vector<int>& blocks_a,
                                         const std::vector<int>& blocks_b);

// Multiplicative induction of a sum of two characters of a quadratic
// extension, computed from explicit monomial matrices for the generators of
// the tame quotient, then decomposed by orbits.  Returns atoms over the base.
WDRep tensor_induction_quadratic(const MultChar& alpha, const MultChar& beta);

// Same decomposition for chi (x) sp(2) over E (diagonal SL2 action; the swap
// acts by +1 on Sym^2 and -1 on the exterior line).
WDRep tensor_induction_quadratic_steinberg(const MultChar& chi);

} // namespace asai::oracle
