#pragma once

#include <vector>

#include "asai/asai_rep.hpp"

namespace asai {

// Satake parameters of an unramified representation of GL2(E) for the inert
// unramified quadratic E; a.b is the central character value at the
// uniformizer.
struct SatakeData {
    SessionPtr S;
    LocalField E;
    AlgNumber a, b;

    static SatakeData make(SessionPtr S, AlgNumber a, AlgNumber b);
};

// Truncated power series in X = q_F^{-s} with exact coefficients; remembers
// the Satake data it came from.
struct TruncatedSeries {
    SatakeData sd;
    std::vector<AlgNumber> coeffs; // c_0 .. c_M
};

// Spherical Whittaker value at valuation n:
//   w_n = q_E^{-n/2} (a^{n+1} - b^{n+1}) / (a - b),
// with the limit (n+1) a^n q_E^{-n/2} when a = b.
AlgNumber whittaker_value(const SatakeData& sd, long n);

// The unramified zeta integral as a lattice sum over torus valuations
// (Iwasawa decomposition, Phi the unit ball of F^2, volume normalizations
// fixed so that c_0 = 1):
//   Z = sum_{m, n >= 0} q^m w_m (ab)^n X^{m + 2n}.
TruncatedSeries zeta_series(const SatakeData& sd, int M);

struct LFactor {
    std::vector<AlgNumber> denominator; // 1 + d_1 X + ... + d_k X^k (numerator 1)
};

// Padé-type solver: the least-degree monic denominator reproducing all the
// given coefficients with numerator 1, or an empty optional.
std::optional<std::vector<AlgNumber>> pade_denominator(const std::vector<AlgNumber>& coeffs,
                                                       int max_deg);

// Reconstructs the L-factor from the truncated series and verifies that its
// reciprocal roots are exactly the Frobenius eigenvalues of the Asai
// parameter of alpha (+) beta.  Requires M >= 2 max_deg + 2.
LFactor reconstruct_L_factor(const TruncatedSeries& ts, int max_deg);

// det(1 - Frob X | As(alpha (+) beta)) for the same Satake data, through the
// asai module; reconstruction must reproduce it exactly.
std::vector<AlgNumber> asai_charpoly(const SatakeData& sd);

} // namespace asai
