#include "asai/asai_rep.hpp"

#include "asai/epsilon.hpp"

namespace asai {

namespace {

// the two characters of a 2-dimensional monodromy-free parameter, or nothing
std::optional<std::pair<MultChar, MultChar>> as_char_pair(const WDRep& rho) {
    if (rho.atoms().size() != 2) return std::nullopt;
    for (const auto& a : rho.atoms())
        if (a.kind != AtomKind::CharSp || a.n != 1) return std::nullopt;
    return std::make_pair(rho.atoms()[0].chi, rho.atoms()[1].chi);
}

// chi (x) sp(2)
std::optional<MultChar> as_steinberg_twist(const WDRep& rho) {
    if (rho.atoms().size() != 1) return std::nullopt;
    const auto& a = rho.atoms()[0];
    if (a.kind != AtomKind::CharSp || a.n != 2) return std::nullopt;
    return a.chi;
}

} // namespace

WDRep asai_quadratic(const WDRep& rho_pi) {
    const auto& S = rho_pi.session();
    const LocalField& E = rho_pi.base();
    if (E.d != 2) throw ValidationError("quadratic Asai needs a parameter over a quadratic extension");
    if (rho_pi.has_opaque())
        throw UnsupportedError("Asai of an opaque parameter: structural path required");
    LocalField F = S->base_field();
    WDRep out(S, F);
    if (auto pair = as_char_pair(rho_pi)) {
        const auto& [alpha, beta] = *pair;
        out.add(WDAtom::char_sp(restrict_character(alpha), 1));
        out.add(WDAtom::char_sp(restrict_character(beta), 1));
        out.add(WDAtom::ind_sp(alpha * conjugate_character(beta), 1));
    } else if (auto chi = as_steinberg_twist(rho_pi)) {
        MultChar res = restrict_character(*chi);
        out.add(WDAtom::char_sp(res, 3));
        out.add(WDAtom::char_sp(res * quadratic_class_character(S, E), 1));
    } else {
        throw ValidationError("quadratic Asai needs a 2-dimensional parameter");
    }
    out.canonicalize();
    return out;
}

WDRep asai_cubic(const WDRep& rho_pi) {
    const auto& S = rho_pi.session();
    const LocalField& K = rho_pi.base();
    if (K.d != 3) throw ValidationError("cubic Asai needs a parameter over a cubic extension");
    if (K.kind != ExtKind::Unramified)
        throw UnsupportedError(
            "tensor induction from a ramified cubic field is not constructed; use the structural path");
    if (rho_pi.has_opaque())
        throw UnsupportedError("Asai of an opaque parameter: structural path required");
    LocalField F = S->base_field();
    WDRep out(S, F);
    if (auto pair = as_char_pair(rho_pi)) {
        const auto& [alpha, beta] = *pair;
        MultChar af = frobenius_conjugate(alpha), aff = frobenius_conjugate(af);
        MultChar bf = frobenius_conjugate(beta), bff = frobenius_conjugate(bf);
        out.add(WDAtom::char_sp(restrict_character(alpha), 1));
        out.add(WDAtom::char_sp(restrict_character(beta), 1));
        out.add(WDAtom::ind_sp(alpha * af * bff, 1));
        out.add(WDAtom::ind_sp(alpha * bf * bff, 1));
    } else if (auto chi = as_steinberg_twist(rho_pi)) {
        MultChar res = restrict_character(*chi);
        MultChar chi3 = MultChar::unramified(S, F, AlgNumber::root_of_unity(S->ctx(), 1, 3));
        out.add(WDAtom::char_sp(res, 4));
        out.add(WDAtom::char_sp(res * chi3, 2));
        out.add(WDAtom::char_sp(res * chi3.power(2), 2));
    } else {
        throw ValidationError("cubic Asai needs a 2-dimensional parameter");
    }
    out.canonicalize();
    return out;
}

WDRep asai_parameter(const EtaleCubicAlgebra& A, const std::vector<WhittakerRep>& components) {
    switch (A.shape) {
        case CubicShape::Split3: {
            if (components.size() != 3) throw ValidationError("split algebra needs three components");
            for (const auto& c : components)
                if (!c.field().is_base()) throw ValidationError("split components live on the base field");
            auto t = wd_tensor(langlands_parameter(components[0]), langlands_parameter(components[1]));
            return wd_tensor(t, langlands_parameter(components[2]));
        }
        case CubicShape::QuadTimesF: {
            if (components.size() != 2) throw ValidationError("E x F needs two components");
            if (!(components[0].field() == *A.ext) || !components[1].field().is_base())
                throw ValidationError("components do not match the shape E x F");
            auto as_pi = asai_quadratic(langlands_parameter(components[0]));
            return wd_tensor(as_pi, langlands_parameter(components[1]));
        }
        case CubicShape::CubicField: {
            if (components.size() != 1) throw ValidationError("a cubic field carries one component");
            if (!(components[0].field() == *A.ext))
                throw ValidationError("component does not live on the cubic field");
            return asai_cubic(langlands_parameter(components[0]));
        }
    }
    throw InternalFault("unreachable algebra shape");
}

} // namespace asai
