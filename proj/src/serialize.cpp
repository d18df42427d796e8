#include "pivlab/serialize.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pivlab {

namespace {

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

Json taus_to_json(const families::TauVector& taus) {
    Json arr = Json::array();
    for (const auto& t : taus.taus) arr.push_back(rational_to_string(t));
    return arr;
}

families::TauVector taus_from_json(const Json& j) {
    families::TauVector taus;
    for (const auto& item : j) taus.taus.push_back(rational_from_json(item));
    return taus;
}

}  // namespace

Json to_json(const Rational& q) { return rational_to_string(q); }

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

Json to_json(const RatFunc& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Json to_json(const ExpPoly& e) {
    Json j;
    j["rate"] = rational_to_string(e.rate);
    j["poly"] = to_json(e.poly);
    return j;
}

Json to_json(const chains::DressingChain& chain) {
    Json j;
    j["N"] = chain.fs.size();
    Json fs = Json::array();
    for (const auto& f : chain.fs) fs.push_back(to_json(f));
    j["fs"] = std::move(fs);
    Json alphas = Json::array();
    for (const auto& a : chain.alphas) alphas.push_back(rational_to_string(a));
    j["alphas"] = std::move(alphas);
    return j;
}

Json to_json(const chains::ResidueCycle& cycle) {
    Json j;
    j["values"] = cycle.values;
    std::string word;
    for (auto step : cycle.branch_word) word += step == chains::BranchStep::Neg ? 'N' : 'I';
    j["word"] = word;
    return j;
}

Json to_json(const chains::PIVSolution& sol) {
    Json j;
    j["w"] = to_json(sol.w);
    j["a"] = rational_to_string(sol.a);
    j["b"] = rational_to_string(sol.b);
    return j;
}

Json to_json(const solutions::SolutionSpec& spec) {
    Json j;
    if (const auto* am = std::get_if<solutions::AdlerMoserStep>(&spec)) {
        j["mode"] = "adler_moser";
        j["n"] = am->n;
        j["direction"] = am->direction;
        j["taus"] = taus_to_json(am->taus);
    } else if (const auto* em = std::get_if<solutions::ExpMode>(&spec)) {
        j["mode"] = "exp";
        j["n"] = em->n;
        j["nu"] = rational_to_string(em->nu);
        j["taus"] = taus_to_json(em->taus);
    } else {
        const auto& hm = std::get<solutions::HermiteMode>(spec);
        j["mode"] = "hermite";
        j["ks"] = hm.ks.ks;
        j["k_extra"] = hm.k_extra;
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational string \"p/q\"");
    return rational_from_string(j.get<std::string>());
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(rational_from_json(item));
    return Poly::from_coeffs(coeffs);
}

RatFunc ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("expected {\"num\": [...], \"den\": [...]}");
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

ExpPoly exp_poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rate") || !j.contains("poly"))
        throw std::invalid_argument("expected {\"rate\": \"p/q\", \"poly\": [...]}");
    return ExpPoly{rational_from_json(j.at("rate")), poly_from_json(j.at("poly"))};
}

chains::DressingChain chain_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("fs") || !j.at("fs").is_array())
        throw std::invalid_argument("expected a chain object with \"fs\"");
    chains::DressingChain chain;
    for (const auto& item : j.at("fs")) chain.fs.push_back(ratfunc_from_json(item));
    if (j.contains("alphas"))
        for (const auto& item : j.at("alphas")) chain.alphas.push_back(rational_from_json(item));
    if (j.contains("N") && j.at("N").get<size_t>() != chain.fs.size())
        throw std::invalid_argument("chain length disagrees with N");
    return chain;
}

solutions::SolutionSpec solution_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mode"))
        throw std::invalid_argument("expected a solution spec object with \"mode\"");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "hermite") {
        solutions::HermiteMode hm;
        if (j.contains("ks")) hm.ks.ks = j.at("ks").get<std::vector<unsigned>>();
        hm.k_extra = j.at("k_extra").get<unsigned>();
        return hm;
    }
    if (mode == "adler_moser") {
        solutions::AdlerMoserStep am;
        am.n = j.at("n").get<unsigned>();
        if (j.contains("direction")) am.direction = j.at("direction").get<int>();
        if (j.contains("taus")) am.taus = taus_from_json(j.at("taus"));
        return am;
    }
    if (mode == "exp") {
        solutions::ExpMode em;
        em.n = j.at("n").get<unsigned>();
        em.nu = rational_from_json(j.at("nu"));
        if (j.contains("taus")) em.taus = taus_from_json(j.at("taus"));
        return em;
    }
    throw std::invalid_argument("unknown solution mode: " + mode);
}

chains::PIVSolution piv_solution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("w"))
        throw std::invalid_argument("expected {\"w\": ..., \"a\": \"p/q\", \"b\": \"p/q\"}");
    chains::PIVSolution sol;
    sol.w = ratfunc_from_json(j.at("w"));
    if (j.contains("a")) sol.a = rational_from_json(j.at("a"));
    if (j.contains("b")) sol.b = rational_from_json(j.at("b"));
    return sol;
}

Json to_json(const Real& x, unsigned bits) { return to_decimal(x, bits); }

Json to_json(const Complex& z, unsigned bits) {
    Json j;
    j["re"] = to_decimal(z.re, bits);
    j["im"] = to_decimal(z.im, bits);
    return j;
}

Json to_json(const PoleLocation& loc, unsigned bits) {
    Json j;
    if (const auto* q = std::get_if<Rational>(&loc)) {
        j["type"] = "rational";
        j["value"] = rational_to_string(*q);
    } else {
        const Complex& z = std::get<Complex>(loc);
        j["type"] = "point";
        j["re"] = to_decimal(z.re, bits);
        j["im"] = to_decimal(z.im, bits);
    }
    return j;
}

Json to_json(const relations::RelationReport& report) {
    Json j;
    j["relation"] = report.relation;
    Json res = Json::array();
    for (const auto& r : report.residuals) res.push_back(to_decimal(r, report.precision_bits));
    j["residuals"] = std::move(res);
    j["verdict"] = verdict(report.pass);
    j["precision_bits"] = report.precision_bits;
    if (!report.detail.empty()) j["detail"] = report.detail;
    return j;
}

Json to_json(const monodromy::MonodromyReport& report) {
    const unsigned bits = report.precision_bits;
    Json poles = Json::array();
    for (const auto& p : report.poles) {
        Json e;
        e["location"] = to_json(p.location, bits);
        e["order"] = p.order;
        e["c_minus2"] = to_json(p.c_minus2, bits);
        if (p.m)
            e["m"] = *p.m;
        else
            e["m"] = nullptr;
        e["indicial"] = Json::array({p.indicial.first, p.indicial.second});
        Json odd = Json::array();
        for (const auto& c : p.odd_coeff_magnitudes) odd.push_back(to_decimal(c, bits));
        e["odd_coefficient_magnitudes"] = std::move(odd);
        e["verdict"] = verdict(p.pass);
        if (!p.reason.empty()) e["reason"] = p.reason;
        poles.push_back(std::move(e));
    }
    Json j;
    j["poles"] = std::move(poles);
    j["verdict"] = verdict(report.pass);
    j["precision_bits"] = bits;
    return j;
}

Json to_json(const solutions::PartialFractionData& data) {
    Json poles = Json::array();
    for (const auto& p : data.poles) {
        Json e;
        e["location"] = to_json(p.location, data.precision_bits);
        e["residue"] = p.residue;
        poles.push_back(std::move(e));
    }
    Json j;
    j["poles"] = std::move(poles);
    j["nu"] = rational_to_string(data.nu);
    j["mu"] = rational_to_string(data.mu);
    j["precision_bits"] = data.precision_bits;
    return j;
}

Json to_json(const equilibria::EquilibriumResult& result) {
    const unsigned bits = result.precision_bits;
    Json pts = Json::array();
    for (const auto& z : result.config) pts.push_back(to_json(z, bits));
    Json j;
    j["points"] = std::move(pts);
    j["residual_max"] = to_decimal(result.residual_max, bits);
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    j["seed"] = result.seed;
    j["precision_bits"] = bits;
    if (result.matched_label) j["matched_label"] = *result.matched_label;
    if (result.matched_distance) j["matched_distance"] = to_decimal(*result.matched_distance, bits);
    return j;
}

Json to_json(const chains::ChainVerification& verification) {
    Json j;
    j["verdict"] = verdict(verification.pass);
    Json alphas = Json::array();
    for (const auto& a : verification.alphas) alphas.push_back(rational_to_string(a));
    j["alphas"] = std::move(alphas);
    if (verification.failed_index) j["failed_index"] = *verification.failed_index;
    return j;
}

Json to_json(const chains::ChainToPIV& map) {
    Json j;
    j["w"] = to_json(map.sol.w);
    j["a"] = rational_to_string(map.sol.a);
    j["b"] = rational_to_string(map.sol.b);
    j["a_free"] = map.a_free;
    j["alpha_sum"] = rational_to_string(map.alpha_sum);
    j["normalized"] = map.normalized;
    if (map.stated_map) {
        Json sm;
        sm["a"] = rational_to_string(map.stated_map->first);
        sm["b"] = rational_to_string(map.stated_map->second);
        j["stated_map"] = std::move(sm);
    } else {
        j["stated_map"] = nullptr;
    }
    j["map_matches"] = map.map_matches;
    if (!map.note.empty()) j["note"] = map.note;
    return j;
}

Json to_json(const chains::PoleExpansionReport& report) {
    const unsigned bits = report.precision_bits;
    Json poles = Json::array();
    for (const auto& p : report.poles) {
        Json e;
        e["location"] = to_json(p.location, bits);
        e["order"] = p.order;
        e["residue"] = to_json(p.residue, bits);
        e["constant_term"] = to_json(p.constant_term, bits);
        e["verdict"] = verdict(p.pass);
        if (!p.reason.empty()) e["reason"] = p.reason;
        poles.push_back(std::move(e));
    }
    Json j;
    j["poles"] = std::move(poles);
    j["verdict"] = verdict(report.pass);
    j["precision_bits"] = bits;
    return j;
}

}  // namespace pivlab
