#pragma once

#include <optional>
#include <string>

#include "asai/weildeligne.hpp"

namespace asai {

// The Whittaker-type taxonomy for GL2(L): irreducible generic representations
// and the reducible principal series Sigma_L (x) chi with one-dimensional
// quotient.  Exactly the representations with a Whittaker model.
enum class RepKind { PrincipalSeries, SigmaTwist, SteinbergTwist, Supercuspidal };

struct WhittakerRep {
    RepKind kind = RepKind::PrincipalSeries;
    std::optional<MultChar> alpha, beta; // PrincipalSeries
    std::optional<MultChar> chi;         // SigmaTwist / SteinbergTwist

    std::string label;                   // Supercuspidal
    std::optional<MultChar> omega;       // Supercuspidal central character
    std::optional<int> eps_sign;         // supplied epsilon data (see decider docs)
    std::optional<int> eps_sign_omega_twist;

    // alpha/beta must avoid |.|^{+-1}; the reducible case is SigmaTwist.
    static WhittakerRep principal_series(MultChar a, MultChar b);
    static WhittakerRep sigma_twist(MultChar chi);
    static WhittakerRep steinberg_twist(MultChar chi);
    static WhittakerRep supercuspidal(std::string label, MultChar omega,
                                      std::optional<int> eps_sign = {},
                                      std::optional<int> eps_sign_omega_twist = {});

    const SessionPtr& session() const;
    const LocalField& field() const;
    bool is_irreducible() const { return kind != RepKind::SigmaTwist; }
    bool is_discrete_series() const {
        return kind == RepKind::SteinbergTwist || kind == RepKind::Supercuspidal;
    }
    std::string str() const;
};

// The generic Langlands correspondence: on irreducible generic
// representations the classical parameter; a Sigma twist maps to the
// parameter of its one-dimensional quotient (no monodromy).
WDRep langlands_parameter(const WhittakerRep& pi);

// Central character; checked against det of the parameter off the
// supercuspidal case.
MultChar central_character(const WhittakerRep& pi);

// Whether the Jacquet-Langlands transfer to the quaternion unit group is
// nonzero (discrete series only).
bool jl_exists(const WhittakerRep& pi);

} // namespace asai
