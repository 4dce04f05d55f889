#pragma once

#include "asai/localfield.hpp"
#include "asai/weildeligne.hpp"

namespace asai {

// The session additive character psi has level 0 on the base field (trivial
// on O_F, nontrivial on p^{-1} O_F).  On an extension psi_L = psi o Tr_{L/F}
// has level equal to the valuation of the different: 0 if unramified, e - 1
// if tamely ramified.
int psi_level(const LocalField& L);

// Full Gauss sum over the residue field of L: sum over x in k_L^x of
// chibar(x) psibar(t x), with chibar given by its tame exponent and t by its
// discrete log.  Values are memoized.
AlgNumber gauss_sum(const SessionPtr& S, const LocalField& L, long k, long t_dlog = 0);

// Epsilon factor of a tame character relative to psi_L.  The normalization
// is pinned by the identities eps(chi) eps(chi^{-1}) = chi(-1) and
// eps(chi mu) = eps(chi) mu(pi)^{a(chi) + n(psi)} for unramified mu, with
// eps(unramified, level 0) = 1 and |eps| = 1 for unitary chi.
AlgNumber epsilon_character(const MultChar& chi);

// Inductivity constant lambda(L/F, psi), defined through the expansion of
// Ind(1_L) into characters of the base field.  Quadratic extensions and the
// unramified cubic are supported.
AlgNumber lambda_factor(const SessionPtr& S, const LocalField& L);

// Epsilon of a Weil-Deligne representation: the product over atoms.  A
// chi (x) sp(n) atom contributes the epsilon of its semisimplification times
// det(-q^{-1/2} Frob | V^I / V_N^I); an induced atom contributes through
// lambda and the epsilon over the extension; an opaque atom contributes its
// supplied sign.
AlgNumber epsilon_wd(const WDRep& rho);

// Exact sign extraction; anything other than +-1 is a convention fault.
int epsilon_sign(const AlgNumber& x);

} // namespace asai
