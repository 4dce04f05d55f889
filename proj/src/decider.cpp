#include "asai/decider.hpp"

#include <algorithm>

#include "asai/epsilon.hpp"

namespace asai {

std::string relevance_str(Relevance r) {
    switch (r) {
        case Relevance::FactorsThroughQuotient: return "factors-through-quotient";
        case Relevance::CarriedBySubrepresentation: return "carried-by-subrepresentation";
        case Relevance::NotApplicable: return "not-applicable";
        case Relevance::Unknown: return "unknown";
    }
    return "unknown";
}

Relevance relevance_from_str(const std::string& s) {
    if (s == "factors-through-quotient") return Relevance::FactorsThroughQuotient;
    if (s == "carried-by-subrepresentation") return Relevance::CarriedBySubrepresentation;
    if (s == "not-applicable") return Relevance::NotApplicable;
    if (s == "unknown") return Relevance::Unknown;
    throw ValidationError("unknown relevance tag: " + s);
}

namespace {

MultChar central_restricted(const WhittakerRep& c) {
    MultChar w = central_character(c);
    return w.field().is_base() ? w : restrict_character(w);
}

// constructive route: sign of eps(As(Pi)) omega_A(-1), when the parameter is
// fully explicit
std::optional<int> constructive_sign(const PeriodInput& in, const MultChar& omega_A) {
    try {
        auto as = asai_parameter(in.algebra, in.components);
        return epsilon_sign(epsilon_wd(as) * omega_A.at_minus_one());
    } catch (const UnsupportedError&) {
        return std::nullopt;
    }
}

void cross_check(const std::optional<int>& constructive, int structural, const char* where) {
    if (constructive && *constructive != structural)
        throw InternalFault(std::string("epsilon paths disagree in case ") + where);
}

PeriodReport finish(PeriodReport r, bool jl) {
    r.jl_nonzero = jl;
    r.dim_h_prime = 1 - r.dim_h;
    if (r.dim_h + r.dim_h_prime != 1) throw InternalFault("dichotomy sum violated");
    if (!jl && r.dim_h_prime != 0)
        throw InternalFault("dichotomy violated: nonzero H'-period without a transfer");
    return r;
}

WhittakerRep twist_by_base_char(const WhittakerRep& sigma, const MultChar& rho) {
    if (rho.is_trivial()) return sigma;
    switch (sigma.kind) {
        case RepKind::PrincipalSeries:
            return WhittakerRep::principal_series(*sigma.alpha * rho, *sigma.beta * rho);
        case RepKind::SigmaTwist: return WhittakerRep::sigma_twist(*sigma.chi * rho);
        case RepKind::SteinbergTwist: return WhittakerRep::steinberg_twist(*sigma.chi * rho);
        case RepKind::Supercuspidal:
            throw UnsupportedError(
                "twisted supercuspidal data is not derivable from the supplied envelope");
    }
    throw InternalFault("unreachable");
}

} // namespace

void check_central_condition(const PeriodInput& input) {
    if (input.components.empty()) throw ValidationError("no components");
    const auto& S = input.components[0].session();
    MultChar prod = MultChar::trivial(S, S->base_field());
    for (const auto& c : input.components) prod = prod * central_restricted(c);
    if (!prod.is_trivial())
        throw ValidationError("central character condition: the product restricted to F^x must be trivial");
}

HomDim hom_dim_component(const WhittakerRep& pi, SigmaComponent target) {
    if (pi.kind != RepKind::PrincipalSeries)
        throw ValidationError("hom_dim_component supports principal series over E only");
    const LocalField& E = pi.field();
    if (E.d != 2) throw ValidationError("hom_dim_component needs a quadratic extension");
    const MultChar& a = *pi.alpha;
    const MultChar& b = *pi.beta;
    if (!restrict_character(a * b).is_trivial())
        throw ValidationError("hom_dim_component needs trivial central restriction");

    bool ab_c_trivial = (a * conjugate_character(b)).is_trivial();
    bool both_res_trivial = restrict_character(a).is_trivial() && restrict_character(b).is_trivial();

    HomDim out;
    out.exceptional_tempered = both_res_trivial && !ab_c_trivial;
    if (out.exceptional_tempered && (!a.is_unitary() || !b.is_unitary()))
        throw InternalFault("exceptional case must be tempered");
    if (target == SigmaComponent::Steinberg)
        out.dim = ab_c_trivial ? 0 : 1;
    else
        out.dim = (ab_c_trivial || both_res_trivial) ? 1 : 0;
    return out;
}

namespace {

PeriodReport decide_split3(const PeriodInput& input, const MultChar& omega_A) {
    const auto& cs = input.components;
    bool jl = std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.is_discrete_series(); });
    PeriodReport r;
    bool any_sigma = std::any_of(cs.begin(), cs.end(),
                                 [](const auto& c) { return c.kind == RepKind::SigmaTwist; });
    if (any_sigma) {
        r.dim_h = 1;
        r.eps_sign = 1;
        r.case_tag = "split3:sigma-twist";
        r.citations = {rules::TRIPLE, rules::TRIPLE_SIGMA};
        bool all_sigma = std::all_of(cs.begin(), cs.end(),
                                     [](const auto& c) { return c.kind == RepKind::SigmaTwist; });
        if (all_sigma) {
            r.citations.push_back(rules::TRIPLE_ALL_SIGMA);
            MultChar eta = *cs[0].chi * *cs[1].chi * *cs[2].chi;
            if (!eta.is_quadratic()) throw InternalFault("all-Sigma case: twist product not quadratic");
            r.relevance = eta.is_trivial() ? Relevance::Unknown : Relevance::CarriedBySubrepresentation;
        }
        cross_check(constructive_sign(input, omega_A), 1, "split3:sigma-twist");
        return finish(std::move(r), jl); // false: a Sigma component kills the transfer
    }
    auto sign = constructive_sign(input, omega_A);
    if (!sign)
        throw UnsupportedError(
            "split triple product with a supercuspidal component: the triple epsilon sign is not "
            "derivable from the supplied data");
    r.eps_sign = *sign;
    r.dim_h = *sign == 1 ? 1 : 0;
    r.case_tag = "split3:irreducible";
    r.citations = {rules::TRIPLE, rules::MAIN_EPS};
    r.relevance = Relevance::NotApplicable;
    return finish(std::move(r), jl);
}

PeriodReport decide_quad(const PeriodInput& input, const MultChar& omega_A) {
    const auto& S = input.components[0].session();
    const LocalField& E = *input.algebra.ext;
    const WhittakerRep& pi = input.components[0];
    const WhittakerRep& sigma = input.components[1];
    MultChar omega = quadratic_class_character(S, E);
    bool jl = sigma.is_discrete_series(); // D^x is split over E
    PeriodReport r;

    bool pi_red = pi.kind == RepKind::SigmaTwist;
    bool sigma_red = sigma.kind == RepKind::SigmaTwist;

    if (!pi_red && sigma_red) {
        // case (a): Theorem A after absorbing the twist of Sigma_F into pi
        r.dim_h = 1;
        r.eps_sign = 1;
        r.case_tag = "quad:a";
        r.citations = {rules::THM_A};
        r.relevance = Relevance::Unknown;
        if (pi.kind == RepKind::PrincipalSeries) {
            if (auto mu = extend_character(*sigma.chi, E)) {
                auto twisted = WhittakerRep::principal_series(*pi.alpha * *mu, *pi.beta * *mu);
                auto st = hom_dim_component(twisted, SigmaComponent::Steinberg);
                auto tv = hom_dim_component(twisted, SigmaComponent::Trivial);
                if (st.exceptional_tempered) {
                    r.citations.push_back(rules::TEMPERED);
                } else if (tv.dim == 1) {
                    r.relevance = Relevance::FactorsThroughQuotient;
                    r.citations.push_back(rules::TRIV_TARGET);
                } else if (st.dim == 1) {
                    r.relevance = Relevance::CarriedBySubrepresentation;
                    r.citations.push_back(rules::ST_TARGET);
                } else {
                    throw InternalFault("case (a): both component rules vanish");
                }
            }
        }
        cross_check(constructive_sign(input, omega_A), 1, "quad:a");
        return finish(std::move(r), jl); // false: sigma is not discrete series here
    }

    if (pi_red && sigma_red) {
        // case (c): Theorem C with eta = the combined quadratic twist
        MultChar eta = *sigma.chi * restrict_character(*pi.chi);
        if (!eta.is_quadratic()) throw InternalFault("case (c): twist is not quadratic");
        r.dim_h = 1;
        r.eps_sign = 1;
        r.case_tag = "quad:c";
        r.citations = {rules::THM_C};
        r.relevance =
            eta.is_trivial() ? Relevance::FactorsThroughQuotient : Relevance::CarriedBySubrepresentation;
        if (eta.is_trivial()) r.citations.push_back(rules::MACKEY);
        cross_check(constructive_sign(input, omega_A), 1, "quad:c");
        return finish(std::move(r), jl);
    }

    if (pi_red && !sigma_red) {
        // case (b): Theorem B for sigma twisted by the restriction of the
        // Sigma_E twist
        MultChar rho = restrict_character(*pi.chi);
        WhittakerRep sigma_t = twist_by_base_char(sigma, rho);
        AlgNumber eps_s = [&] {
            if (sigma_t.kind == RepKind::Supercuspidal) {
                if (!sigma_t.eps_sign)
                    throw UnsupportedError("supercuspidal sigma: supply its epsilon sign");
                return S->integer(*sigma_t.eps_sign);
            }
            return epsilon_wd(langlands_parameter(sigma_t));
        }();
        AlgNumber eps_tw = [&] {
            if (sigma_t.kind == RepKind::Supercuspidal) {
                if (!sigma_t.eps_sign_omega_twist)
                    throw UnsupportedError(
                        "supercuspidal sigma: supply the epsilon sign of its omega_{E/F} twist");
                return S->integer(*sigma_t.eps_sign_omega_twist);
            }
            return epsilon_wd(wd_twist(langlands_parameter(sigma_t), omega));
        }();
        int s_b = epsilon_sign(eps_s * eps_tw * omega.at_minus_one());
        r.eps_sign = s_b;
        r.dim_h = s_b == 1 ? 1 : 0;
        r.case_tag = "quad:b";
        r.citations = {s_b == 1 ? rules::THM_B1 : rules::THM_B2, rules::EPS_LEMMA};
        if (s_b == 1) {
            // the period injects into the Steinberg subrepresentation side
            r.relevance = Relevance::CarriedBySubrepresentation;
        } else if (sigma_t.kind == RepKind::SteinbergTwist && sigma_t.chi->is_trivial()) {
            r.citations.push_back(rules::THM_B_ST);
            r.citations.push_back(rules::MACKEY);
            r.relevance = Relevance::CarriedBySubrepresentation; // the St_E x St_F period
        } else {
            r.relevance = Relevance::Unknown;
        }
        cross_check(constructive_sign(input, omega_A), s_b, "quad:b");
        return finish(std::move(r), jl);
    }

    // both irreducible: the epsilon rule
    auto sign = constructive_sign(input, omega_A);
    if (!sign)
        throw UnsupportedError(
            "irreducible pair over E x F with opaque data: epsilon sign not derivable");
    r.eps_sign = *sign;
    r.dim_h = *sign == 1 ? 1 : 0;
    r.case_tag = "quad:irreducible";
    r.citations = {rules::MAIN_EPS};
    r.relevance = Relevance::NotApplicable;
    return finish(std::move(r), jl);
}

PeriodReport decide_cubic(const PeriodInput& input, const MultChar& omega_A) {
    const WhittakerRep& pi = input.components[0];
    bool jl = pi.is_discrete_series();
    PeriodReport r;
    switch (pi.kind) {
        case RepKind::SigmaTwist: {
            MultChar lambda = restrict_character(*pi.chi);
            if (!lambda.is_quadratic()) throw InternalFault("cubic Sigma twist: lambda not quadratic");
            r.dim_h = 1;
            r.eps_sign = 1;
            r.case_tag = "cubic:sigma-twist";
            r.citations = {rules::CUBIC_SIGMA};
            if (lambda.is_trivial()) {
                r.relevance = Relevance::FactorsThroughQuotient;
            } else {
                r.relevance = Relevance::CarriedBySubrepresentation;
                r.citations.push_back(rules::EXT_VANISHING);
            }
            cross_check(constructive_sign(input, omega_A), 1, "cubic:sigma-twist");
            return finish(std::move(r), jl);
        }
        case RepKind::SteinbergTwist: {
            MultChar lambda = restrict_character(*pi.chi);
            if (!lambda.is_quadratic()) throw InternalFault("cubic Steinberg twist: lambda not quadratic");
            int s = lambda.is_trivial() ? -1 : 1;
            r.eps_sign = s;
            r.dim_h = s == 1 ? 1 : 0;
            r.case_tag = "cubic:steinberg-twist";
            r.citations = {rules::CUBIC_ST};
            r.relevance = Relevance::NotApplicable;
            cross_check(constructive_sign(input, omega_A), s, "cubic:steinberg-twist");
            return finish(std::move(r), jl);
        }
        case RepKind::PrincipalSeries: {
            auto sign = constructive_sign(input, omega_A);
            if (!sign)
                throw UnsupportedError(
                    "principal series over a ramified cubic field: no constructive epsilon path");
            r.eps_sign = *sign;
            r.dim_h = *sign == 1 ? 1 : 0;
            r.case_tag = "cubic:irreducible";
            r.citations = {rules::MAIN_EPS};
            r.relevance = Relevance::NotApplicable;
            return finish(std::move(r), jl);
        }
        case RepKind::Supercuspidal: {
            if (!pi.eps_sign)
                throw UnsupportedError(
                    "supercuspidal over a cubic field: supply the epsilon sign of its Asai parameter");
            int s = epsilon_sign(pi.session()->integer(*pi.eps_sign) * omega_A.at_minus_one());
            r.eps_sign = s;
            r.dim_h = s == 1 ? 1 : 0;
            r.case_tag = "cubic:supercuspidal";
            r.citations = {rules::MAIN_EPS};
            r.relevance = Relevance::NotApplicable;
            return finish(std::move(r), jl);
        }
    }
    throw InternalFault("unreachable");
}

} // namespace

PeriodReport decide_period(const PeriodInput& input) {
    // shape / component compatibility
    switch (input.algebra.shape) {
        case CubicShape::Split3:
            if (input.components.size() != 3) throw ValidationError("split algebra needs three components");
            for (const auto& c : input.components)
                if (!c.field().is_base()) throw ValidationError("split components live on the base field");
            break;
        case CubicShape::QuadTimesF:
            if (input.components.size() != 2) throw ValidationError("E x F needs two components");
            if (!(input.components[0].field() == *input.algebra.ext))
                throw ValidationError("first component must live on E");
            if (!input.components[1].field().is_base())
                throw ValidationError("second component must live on F");
            break;
        case CubicShape::CubicField:
            if (input.components.size() != 1) throw ValidationError("a cubic field carries one component");
            if (!(input.components[0].field() == *input.algebra.ext))
                throw ValidationError("component must live on K");
            break;
    }
    check_central_condition(input);
    const auto& S = input.components[0].session();
    MultChar omega_A = discriminant_character(S, input.algebra);

    switch (input.algebra.shape) {
        case CubicShape::Split3: return decide_split3(input, omega_A);
        case CubicShape::QuadTimesF: return decide_quad(input, omega_A);
        case CubicShape::CubicField: return decide_cubic(input, omega_A);
    }
    throw InternalFault("unreachable");
}

namespace {

std::vector<MultChar> quadratic_chars(const SessionPtr& S, const LocalField& L) {
    long qm = S->residue(L).q - 1;
    std::vector<MultChar> out = {MultChar::trivial(S, L),
                                 MultChar::unramified(S, L, S->integer(-1))};
    out.push_back(MultChar::build(S, L, qm / 2, S->one()));
    out.push_back(MultChar::build(S, L, qm / 2, S->integer(-1)));
    return out;
}

std::vector<MultChar> sample_chars(const SessionPtr& S, const LocalField& L, int unit_samples) {
    std::vector<AlgNumber> us = {S->one(), S->integer(-1), S->zeta_res(L, 1)};
    if (unit_samples < static_cast<int>(us.size())) us.resize(unit_samples);
    long qm = S->residue(L).q - 1;
    std::vector<MultChar> out;
    for (long k = 0; k < qm; ++k)
        for (const auto& u : us) out.push_back(MultChar::build(S, L, k, u));
    return out;
}

// Whittaker-type pool over one field, tagged implicitly by central character.
std::vector<WhittakerRep> component_pool(const SessionPtr& S, const LocalField& L, int unit_samples) {
    std::vector<WhittakerRep> pool;
    for (const auto& eta : sample_chars(S, L, unit_samples)) {
        pool.push_back(WhittakerRep::sigma_twist(eta));
        pool.push_back(WhittakerRep::steinberg_twist(eta));
    }
    for (const auto& chi : sample_chars(S, L, unit_samples)) {
        // central character chi * eta for a quadratic eta
        for (const auto& eta : quadratic_chars(S, L)) {
            auto beta = chi.inverse() * eta;
            try {
                pool.push_back(WhittakerRep::principal_series(chi, beta));
            } catch (const ValidationError&) {
                // reducible combination; skip
            }
        }
    }
    return pool;
}

bool centrally_trivial(const std::vector<WhittakerRep>& comps) {
    const auto& S = comps[0].session();
    MultChar prod = MultChar::trivial(S, S->base_field());
    for (const auto& c : comps) {
        MultChar w = central_character(c);
        prod = prod * (w.field().is_base() ? w : restrict_character(w));
    }
    return prod.is_trivial();
}

} // namespace

std::vector<PeriodInput> enumerate_cases(long p, int f, const EnumerationBounds& bounds) {
    std::vector<PeriodInput> out;

    if (bounds.split3) {
        SessionConfig cfg;
        cfg.p = p;
        cfg.f = f;
        auto S = Session::create(cfg);
        auto pool = component_pool(S, S->base_field(), bounds.unit_samples);
        int count = 0;
        auto push = [&](size_t i, size_t j, size_t k) {
            if (count >= bounds.max_per_shape) return;
            std::vector<WhittakerRep> comps = {pool[i], pool[j], pool[k]};
            if (!centrally_trivial(comps)) return;
            out.push_back(PeriodInput{EtaleCubicAlgebra::split3(), std::move(comps)});
            ++count;
        };
        // symmetric triples first so they survive any cap
        for (size_t i = 0; i < pool.size(); ++i) push(i, i, i);
        for (size_t i = 0; i < pool.size() && count < bounds.max_per_shape; ++i)
            for (size_t j = i; j < pool.size() && count < bounds.max_per_shape; ++j)
                for (size_t k = j; k < pool.size() && count < bounds.max_per_shape; ++k) {
                    if (i == j && j == k) continue;
                    push(i, j, k);
                }
    }

    auto quad_shape = [&](ExtKind kind, int ram_class, bool enabled) {
        if (!enabled) return;
        SessionConfig cfg;
        cfg.p = p;
        cfg.f = f;
        cfg.quadratic_unramified = kind == ExtKind::Unramified;
        cfg.quadratic_ramified = kind == ExtKind::Ramified;
        auto S = Session::create(cfg);
        auto E = S->quadratic(kind, ram_class);
        auto pool_e = component_pool(S, E, bounds.unit_samples);
        auto pool_f = component_pool(S, S->base_field(), bounds.unit_samples);
        int count = 0;
        for (size_t i = 0; i < pool_e.size() && count < bounds.max_per_shape; ++i)
            for (size_t j = 0; j < pool_f.size() && count < bounds.max_per_shape; ++j) {
                std::vector<WhittakerRep> comps = {pool_e[i], pool_f[j]};
                if (!centrally_trivial(comps)) continue;
                out.push_back(PeriodInput{EtaleCubicAlgebra::quad_times_f(E), std::move(comps)});
                ++count;
            }
    };
    quad_shape(ExtKind::Unramified, 0, bounds.quad_unramified);
    quad_shape(ExtKind::Ramified, 0, bounds.quad_ramified);
    quad_shape(ExtKind::Ramified, 1, bounds.quad_ramified);

    if (bounds.cubic_unramified) {
        SessionConfig cfg;
        cfg.p = p;
        cfg.f = f;
        cfg.cubic_unramified = true;
        auto S = Session::create(cfg);
        auto K = S->cubic(ExtKind::Unramified);
        auto pool = component_pool(S, K, bounds.unit_samples);
        int count = 0;
        for (size_t i = 0; i < pool.size() && count < bounds.max_per_shape; ++i) {
            std::vector<WhittakerRep> comps = {pool[i]};
            if (!centrally_trivial(comps)) continue;
            out.push_back(PeriodInput{EtaleCubicAlgebra::cubic_field(K), std::move(comps)});
            ++count;
        }
    }
    return out;
}

} // namespace asai
