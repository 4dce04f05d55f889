#pragma once

#include <string>
#include <vector>

#include "asai/asai_rep.hpp"

namespace asai {

// One period problem: a cubic etale algebra A over the session base and a
// Whittaker-type representation of GL2(A), given through its components.
struct PeriodInput {
    EtaleCubicAlgebra algebra;
    std::vector<WhittakerRep> components;
};

enum class Relevance { FactorsThroughQuotient, CarriedBySubrepresentation, NotApplicable, Unknown };

std::string relevance_str(Relevance r);
Relevance relevance_from_str(const std::string& s);

struct PeriodReport {
    int dim_h = 0;        // dim Hom_{GL2(F)}(Pi, 1)
    int dim_h_prime = 0;  // dim Hom_{D^x}(Pi', 1)
    int eps_sign = 0;     // +1 / -1; 0 when unknown
    bool jl_nonzero = false;
    std::string case_tag;
    std::vector<std::string> citations;
    Relevance relevance = Relevance::Unknown;

    bool operator==(const PeriodReport&) const = default;
};

// Anchors of the rule base.  Reports cite these verbatim so output and
// implementation cannot drift apart.
namespace rules {
inline const char* TRIPLE = "Triple product dichotomy (split case)";
inline const char* TRIPLE_SIGMA = "Split Sigma twist: epsilon is automatically +1";
inline const char* TRIPLE_ALL_SIGMA = "All three components are Sigma twists";
inline const char* THM_A = "Theorem A: irreducible pi x Sigma_F is distinguished";
inline const char* THM_B1 = "Theorem B(i): eps(sigma) eps(sigma x omega) = omega(-1)";
inline const char* THM_B2 = "Theorem B(ii): eps(sigma) eps(sigma x omega) = -omega(-1)";
inline const char* THM_B_ST = "Theorem B: Hom(Sigma_E x St_F, 1) = 0";
inline const char* THM_C = "Theorem C: Sigma_E x Sigma_F against a quadratic eta";
inline const char* EPS_LEMMA = "Epsilon identity: eps(As(St_E) x sigma) = eps(sigma) eps(sigma x omega)";
inline const char* CUBIC_SIGMA = "Cubic Sigma twist: sign is always +1";
inline const char* CUBIC_ST = "Cubic Steinberg twist: sign is -1 iff lambda = 1";
inline const char* MAIN_EPS = "Main dichotomy: dim_H = 1 iff eps(As(Pi)) omega_A(-1) = +1";
inline const char* MACKEY = "Mackey sequence: 0 -> cInd_{E^x}(1) -> Sigma_E -> I(|.|,|.|^{-1}) -> 0";
inline const char* ST_TARGET = "Steinberg target rule: zero iff alpha beta^c = 1";
inline const char* TRIV_TARGET =
    "Trivial target rule: nonzero iff alpha beta^c = 1 or alpha|_F = beta|_F = 1";
inline const char* TEMPERED = "Tempered mirabolic restriction is one-dimensional";
inline const char* EXT_VANISHING = "Ext^1(1, lambda) = 0 extends the Steinberg-side period";
} // namespace rules

// The decision procedure of the main dichotomy.  Structural rules decide the
// dimensions; whenever the constructive epsilon path runs, both signs are
// compared and a mismatch is a hard fault.
PeriodReport decide_period(const PeriodInput& input);

// Validates the central character condition (throws ValidationError).
void check_central_condition(const PeriodInput& input);

// Hom-dimension against one component of Sigma_F for a principal series over
// a quadratic E with trivial central restriction.
enum class SigmaComponent { Steinberg, Trivial };
struct HomDim {
    int dim = 0;
    bool exceptional_tempered = false; // both rules fire; handled by the tempered rule
};
HomDim hom_dim_component(const WhittakerRep& pi, SigmaComponent target);

struct EnumerationBounds {
    bool split3 = true;
    bool quad_unramified = true;
    bool quad_ramified = true;
    bool cubic_unramified = true;
    int max_per_shape = 400;
    int unit_samples = 2; // uniformizer values per tame exponent
};

// Deterministic stream of central-trivial Whittaker-type instances over the
// supported shapes.
std::vector<PeriodInput> enumerate_cases(long p, int f, const EnumerationBounds& bounds);

} // namespace asai
