#pragma once

#include <vector>

#include "asai/langlands.hpp"

namespace asai {

// Multiplicative induction to the base field of a non-opaque 2-dimensional
// parameter over a quadratic extension:
//   As(alpha (+) beta)   = alpha|_F (+) beta|_F (+) Ind(alpha beta^c),
//   As(chi (x) sp(2))    = chi|_F . (sp(3) (+) omega_{E/F}).
WDRep asai_quadratic(const WDRep& rho_pi);

// Same for the unramified cubic extension (cyclic, Frobenius phi):
//   As(alpha (+) beta)   = alpha|_F (+) beta|_F (+) Ind(alpha alpha^phi beta^{phi^2})
//                                            (+) Ind(alpha beta^phi beta^{phi^2}),
//   As(chi (x) sp(2))    = chi|_F . (sp(4) (+) chi_3 sp(2) (+) chi_3^2 sp(2)).
// Ramified cubics are not constructed; the decision procedure handles them
// structurally.
WDRep asai_cubic(const WDRep& rho_pi);

// The full Asai parameter of an instance: tensor product over the split
// algebra, As(pi) (x) rho_sigma over E x F, multiplicative induction over a
// cubic field.
WDRep asai_parameter(const EtaleCubicAlgebra& A, const std::vector<WhittakerRep>& components);

} // namespace asai
