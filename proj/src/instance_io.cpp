#include "asai/instance_io.hpp"

#include <sstream>

namespace asai {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ValidationError("instance document: " + msg); }

long get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer '") + key + "'");
    return j[key].get<long>();
}

Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        try {
            Rational r(s);
            if (r.get_den() == 0) bad("zero denominator in '" + s + "'");
            r.canonicalize();
            return r;
        } catch (const ValidationError&) {
            throw;
        } catch (...) {
            bad("cannot parse rational '" + s + "'");
        }
    }
    bad("rational values are integers or strings like \"3/4\"");
}

} // namespace

AlgNumber parse_value(const SessionPtr& S, const json& v) {
    if (v.is_number_integer() || v.is_string())
        return AlgNumber::from_rational(S->ctx(), parse_rational(v));
    if (!v.is_object()) bad("character value must be an integer, a string rational, or an object");
    AlgNumber out = S->one();
    bool any = false;
    if (v.contains("rational")) {
        out = out * AlgNumber::from_rational(S->ctx(), parse_rational(v["rational"]));
        any = true;
    }
    if (v.contains("root")) {
        const auto& r = v["root"];
        if (!r.is_array() || r.size() != 2) bad("'root' must be [num, den]");
        out = out * AlgNumber::root_of_unity(S->ctx(), r[0].get<long>(), r[1].get<long>());
        any = true;
    }
    if (v.contains("q_half")) {
        out = out * AlgNumber::q_half_pow(S->ctx(), v["q_half"].get<long>());
        any = true;
    }
    if (!any) bad("character value object needs at least one of rational/root/q_half");
    return out;
}

namespace {

MultChar parse_char(const SessionPtr& S, const LocalField& L, const json& j) {
    if (!j.is_object()) bad("character must be an object {k, u}");
    long k = j.contains("k") ? get_int(j, "k") : 0;
    AlgNumber u = j.contains("u") ? parse_value(S, j["u"]) : S->one();
    return MultChar::build(S, L, k, std::move(u));
}

WhittakerRep parse_component(const SessionPtr& S, const LocalField& L, const json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("component needs a 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "principal_series") {
        if (!j.contains("alpha") || !j.contains("beta")) bad("principal series needs alpha and beta");
        return WhittakerRep::principal_series(parse_char(S, L, j["alpha"]), parse_char(S, L, j["beta"]));
    }
    if (kind == "sigma_twist") {
        if (!j.contains("chi")) bad("sigma_twist needs chi");
        return WhittakerRep::sigma_twist(parse_char(S, L, j["chi"]));
    }
    if (kind == "steinberg_twist") {
        if (!j.contains("chi")) bad("steinberg_twist needs chi");
        return WhittakerRep::steinberg_twist(parse_char(S, L, j["chi"]));
    }
    if (kind == "supercuspidal") {
        if (!j.contains("label") || !j.contains("det")) bad("supercuspidal needs label and det");
        if (j.contains("dim") && j["dim"].get<long>() != 2) bad("supercuspidal components have dim 2");
        std::optional<int> eps, eps_tw;
        if (j.contains("eps_sign")) eps = static_cast<int>(get_int(j, "eps_sign"));
        if (j.contains("twisted_eps_sign")) eps_tw = static_cast<int>(get_int(j, "twisted_eps_sign"));
        return WhittakerRep::supercuspidal(j["label"].get<std::string>(),
                                           parse_char(S, L, j["det"]), eps, eps_tw);
    }
    bad("unknown component kind '" + kind + "'");
}

} // namespace

ParsedInstance parse_instance(const json& doc) {
    if (!doc.is_object()) bad("top level must be an object");
    if (!doc.contains("field") || !doc.contains("algebra") || !doc.contains("components"))
        bad("need 'field', 'algebra', and 'components'");
    if (doc.contains("psi_level") && doc["psi_level"].get<long>() != 0)
        bad("psi_level must be 0 in this release");

    long p = get_int(doc["field"], "p");
    int f = doc["field"].contains("f") ? static_cast<int>(get_int(doc["field"], "f")) : 1;

    const json& alg = doc["algebra"];
    if (!alg.contains("shape")) bad("algebra needs a shape");
    std::string shape = alg["shape"].get<std::string>();

    SessionConfig cfg;
    cfg.p = p;
    cfg.f = f;
    ExtKind kind = ExtKind::None;
    int presentation = 0;
    if (shape != "split3") {
        std::string ext = alg.contains("extension") ? alg["extension"].get<std::string>() : "unramified";
        if (ext == "unramified") kind = ExtKind::Unramified;
        else if (ext == "ramified") kind = ExtKind::Ramified;
        else bad("extension must be 'unramified' or 'ramified'");
        presentation = alg.contains("presentation") ? static_cast<int>(get_int(alg, "presentation")) : 0;
    }
    if (shape == "quad_times_f") {
        cfg.quadratic_unramified = kind == ExtKind::Unramified;
        cfg.quadratic_ramified = kind == ExtKind::Ramified;
    } else if (shape == "cubic_field") {
        cfg.cubic_unramified = kind == ExtKind::Unramified;
        cfg.cubic_ramified = kind == ExtKind::Ramified;
    } else if (shape != "split3") {
        bad("unknown shape '" + shape + "'");
    }
    auto S = Session::create(cfg);

    ParsedInstance out;
    out.session = S;
    const json& comps = doc["components"];
    if (!comps.is_array()) bad("components must be an array");

    if (shape == "split3") {
        out.input.algebra = EtaleCubicAlgebra::split3();
        if (comps.size() != 3) bad("split3 needs exactly three components");
        for (const auto& c : comps) out.input.components.push_back(parse_component(S, S->base_field(), c));
    } else if (shape == "quad_times_f") {
        auto E = S->quadratic(kind, presentation);
        out.input.algebra = EtaleCubicAlgebra::quad_times_f(E);
        if (comps.size() != 2) bad("quad_times_f needs exactly two components [over E, over F]");
        out.input.components.push_back(parse_component(S, E, comps[0]));
        out.input.components.push_back(parse_component(S, S->base_field(), comps[1]));
    } else {
        auto K = S->cubic(kind, presentation);
        std::optional<MultChar> resolvent;
        if (alg.contains("resolvent")) resolvent = parse_char(S, S->base_field(), alg["resolvent"]);
        out.input.algebra = EtaleCubicAlgebra::cubic_field(K, std::move(resolvent));
        if (comps.size() != 1) bad("cubic_field carries exactly one component");
        out.input.components.push_back(parse_component(S, K, comps[0]));
    }
    return out;
}

json report_to_json(const PeriodReport& r) {
    json j;
    j["dim_H"] = r.dim_h;
    j["dim_H_prime"] = r.dim_h_prime;
    j["eps_sign"] = r.eps_sign == 0 ? "unknown" : (r.eps_sign > 0 ? "+1" : "-1");
    j["jl_nonzero"] = r.jl_nonzero;
    j["case_tag"] = r.case_tag;
    j["citations"] = r.citations;
    j["relevance"] = relevance_str(r.relevance);
    return j;
}

PeriodReport report_from_json(const json& j) {
    PeriodReport r;
    r.dim_h = j.at("dim_H").get<int>();
    r.dim_h_prime = j.at("dim_H_prime").get<int>();
    std::string s = j.at("eps_sign").get<std::string>();
    r.eps_sign = s == "unknown" ? 0 : (s == "+1" ? 1 : -1);
    r.jl_nonzero = j.at("jl_nonzero").get<bool>();
    r.case_tag = j.at("case_tag").get<std::string>();
    r.citations = j.at("citations").get<std::vector<std::string>>();
    r.relevance = relevance_from_str(j.at("relevance").get<std::string>());
    return r;
}

std::string format_report_text(const PeriodReport& r) {
    std::ostringstream os;
    os << "dim Hom_H(Pi, 1)       = " << r.dim_h << "\n";
    os << "dim Hom_H'(Pi', 1)     = " << r.dim_h_prime << "\n";
    os << "epsilon sign           = "
       << (r.eps_sign == 0 ? std::string("unknown") : (r.eps_sign > 0 ? "+1" : "-1")) << "\n";
    os << "JL transfer nonzero    = " << (r.jl_nonzero ? "yes" : "no") << "\n";
    os << "case                   = " << r.case_tag << "\n";
    os << "relevance              = " << relevance_str(r.relevance) << "\n";
    os << "citations:\n";
    for (const auto& c : r.citations) os << "  - " << c << "\n";
    return os.str();
}

} // namespace asai
