#include "asai/langlands.hpp"

#include <sstream>

namespace asai {

WhittakerRep WhittakerRep::principal_series(MultChar a, MultChar b) {
    if (!(a.field() == b.field())) throw ValidationError("principal series characters live on different fields");
    const auto& S = a.session();
    MultChar ratio = a * b.inverse();
    for (long s : {2L, -2L}) {
        if (ratio == MultChar::norm_power_half(S, a.field(), s))
            throw ValidationError(
                "alpha/beta = |.|^{+-1}: this principal series is reducible; use the Sigma-twist form");
    }
    WhittakerRep pi;
    pi.kind = RepKind::PrincipalSeries;
    pi.alpha = std::move(a);
    pi.beta = std::move(b);
    return pi;
}

WhittakerRep WhittakerRep::sigma_twist(MultChar chi) {
    WhittakerRep pi;
    pi.kind = RepKind::SigmaTwist;
    pi.chi = std::move(chi);
    return pi;
}

WhittakerRep WhittakerRep::steinberg_twist(MultChar chi) {
    WhittakerRep pi;
    pi.kind = RepKind::SteinbergTwist;
    pi.chi = std::move(chi);
    return pi;
}

WhittakerRep WhittakerRep::supercuspidal(std::string label, MultChar omega,
                                         std::optional<int> eps_sign,
                                         std::optional<int> eps_sign_omega_twist) {
    for (auto s : {eps_sign, eps_sign_omega_twist})
        if (s && *s != 1 && *s != -1) throw ValidationError("supplied epsilon signs must be +1 or -1");
    WhittakerRep pi;
    pi.kind = RepKind::Supercuspidal;
    pi.label = std::move(label);
    pi.omega = std::move(omega);
    pi.eps_sign = eps_sign;
    pi.eps_sign_omega_twist = eps_sign_omega_twist;
    return pi;
}

const SessionPtr& WhittakerRep::session() const {
    switch (kind) {
        case RepKind::PrincipalSeries: return alpha->session();
        case RepKind::SigmaTwist:
        case RepKind::SteinbergTwist: return chi->session();
        case RepKind::Supercuspidal: return omega->session();
    }
    throw InternalFault("unreachable");
}

const LocalField& WhittakerRep::field() const {
    switch (kind) {
        case RepKind::PrincipalSeries: return alpha->field();
        case RepKind::SigmaTwist:
        case RepKind::SteinbergTwist: return chi->field();
        case RepKind::Supercuspidal: return omega->field();
    }
    throw InternalFault("unreachable");
}

std::string WhittakerRep::str() const {
    std::ostringstream os;
    switch (kind) {
        case RepKind::PrincipalSeries:
            os << "I(" << alpha->str() << ", " << beta->str() << ")";
            break;
        case RepKind::SigmaTwist: os << "Sigma (x) " << chi->str(); break;
        case RepKind::SteinbergTwist: os << "St (x) " << chi->str(); break;
        case RepKind::Supercuspidal: os << "supercuspidal[" << label << "]"; break;
    }
    return os.str();
}

WDRep langlands_parameter(const WhittakerRep& pi) {
    const auto& S = pi.session();
    const LocalField& L = pi.field();
    WDRep rho(S, L);
    switch (pi.kind) {
        case RepKind::PrincipalSeries:
            rho.add(WDAtom::char_sp(*pi.alpha, 1));
            rho.add(WDAtom::char_sp(*pi.beta, 1));
            break;
        case RepKind::SigmaTwist:
            // the parameter of the one-dimensional quotient: no monodromy
            rho.add(WDAtom::char_sp(*pi.chi * MultChar::norm_power_half(S, L, 1), 1));
            rho.add(WDAtom::char_sp(*pi.chi * MultChar::norm_power_half(S, L, -1), 1));
            break;
        case RepKind::SteinbergTwist:
            rho.add(WDAtom::char_sp(*pi.chi, 2));
            break;
        case RepKind::Supercuspidal:
            rho.add(WDAtom::opaque(pi.label, 2, pi.omega, pi.eps_sign));
            break;
    }
    rho.canonicalize();
    return rho;
}

MultChar central_character(const WhittakerRep& pi) {
    MultChar w = [&] {
        switch (pi.kind) {
            case RepKind::PrincipalSeries: return *pi.alpha * *pi.beta;
            case RepKind::SigmaTwist:
            case RepKind::SteinbergTwist: return pi.chi->power(2);
            case RepKind::Supercuspidal:
                if (!pi.omega) throw ValidationError("supercuspidal component without central character");
                return *pi.omega;
        }
        throw InternalFault("unreachable");
    }();
    if (pi.kind != RepKind::Supercuspidal && !(wd_det(langlands_parameter(pi)) == w))
        throw InternalFault("central character disagrees with det of the parameter");
    return w;
}

bool jl_exists(const WhittakerRep& pi) { return pi.is_discrete_series(); }

} // namespace asai
