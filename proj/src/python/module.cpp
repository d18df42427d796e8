#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pivlab/acceptance.hpp"
#include "pivlab/chains.hpp"
#include "pivlab/equilibria.hpp"
#include "pivlab/parse.hpp"
#include "pivlab/serialize.hpp"

namespace py = pybind11;
using namespace pivlab;

namespace {

py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_py(const py::object& obj) {
    const std::string dumped =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return Json::parse(dumped);
}

std::vector<std::string> poly_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(rational_to_string(c));
    return out;
}

families::TauVector taus_from_strings(const std::vector<std::string>& taus) {
    families::TauVector tv;
    for (const auto& t : taus) tv.taus.push_back(rational_from_string(t));
    return tv;
}

}  // namespace

PYBIND11_MODULE(pivlab, m) {
    m.doc() = "rational solution laboratory for odd-period dressing chains";

    m.def(
        "hermite",
        [](unsigned n) { return poly_strings(families::hermite(n)); },
        py::arg("n"), "coefficients of H_n, lowest power first");

    m.def(
        "hermite_wronskian",
        [](const std::vector<unsigned>& ks) {
            return poly_strings(families::hermite_wronskian(families::HermiteSequence{ks}));
        },
        py::arg("ks"), "coefficients of W(H_ks)");

    m.def(
        "adler_moser_wronskian",
        [](unsigned n, const std::vector<std::string>& taus) {
            return poly_strings(families::adler_moser_wronskian(n, taus_from_strings(taus)));
        },
        py::arg("n"), py::arg("taus") = std::vector<std::string>{},
        "coefficients of the ladder Wronskian W_n");

    m.def(
        "ratfunc",
        [](const std::string& expr) { return to_py(to_json(parse_ratfunc(expr))); },
        py::arg("expr"), "parse an expression in z to the canonical num/den form");

    m.def(
        "build_solution",
        [](const py::object& spec, unsigned bits) {
            const auto parsed = solution_spec_from_json(from_py(spec));
            const RatFunc f = solutions::build_f(parsed);
            Json out;
            out["spec"] = to_json(parsed);
            out["f"] = to_json(f);
            out["w"] = to_json(solutions::piv_w_from_f(f));
            out["u"] = to_json(solutions::potential_from_f(f));
            try {
                out["partial_fractions"] = to_json(solutions::partial_fractions(f, bits));
            } catch (const solutions::NotInClassError&) {
                out["partial_fractions"] = nullptr;
            }
            return to_py(out);
        },
        py::arg("spec"), py::arg("bits") = 256,
        "build f, w = -(z+f) and u = f' + f^2 from a solution spec dict");

    m.def(
        "verify_stieltjes_hermite",
        [](unsigned n, unsigned bits) {
            PrecisionGuard guard(bits + 64);
            auto cfg = relations::config_from_zeros(families::hermite(n), bits);
            relations::RelationReport report;
            report.relation = "stieltjes";
            for (const auto& r : relations::stieltjes_residual(cfg))
                report.residuals.push_back(abs(r));
            report.precision_bits = bits;
            Real worst{0};
            for (const auto& r : report.residuals) worst = (std::max)(worst, r);
            report.pass = worst < monodromy::pass_tolerance(bits);
            return to_py(to_json(report));
        },
        py::arg("n"), py::arg("bits") = 256, "first-order relations at the zeros of H_n");

    m.def(
        "generalized_stieltjes",
        [](const std::string& expr, unsigned bits) {
            PrecisionGuard guard(bits + 64);
            return to_py(to_json(relations::generalized_stieltjes_check(parse_ratfunc(expr),
                                                                        bits)));
        },
        py::arg("f"), py::arg("bits") = 256, "Res f^{2k} = 0 for k = 1..|m| at every pole");

    m.def(
        "theorem1",
        [](const std::string& expr, unsigned bits) {
            PrecisionGuard guard(bits + 64);
            return to_py(to_json(relations::theorem1_check(parse_ratfunc(expr), bits)));
        },
        py::arg("w"), py::arg("bits") = 256, "Res (z+w)^2 = 0 at every pole of w");

    m.def(
        "trivial_monodromy",
        [](const std::string& expr, unsigned bits) {
            PrecisionGuard guard(bits + 64);
            return to_py(to_json(monodromy::trivial_monodromy_report(parse_ratfunc(expr),
                                                                     bits)));
        },
        py::arg("u"), py::arg("bits") = 256, "pole-by-pole trivial monodromy report");

    m.def(
        "build_chain",
        [](const std::string& flag, const std::string& mu) {
            const auto chain =
                chains::build_chain(parse_flag_sequences(flag), rational_from_string(mu));
            Json out;
            out["chain"] = to_json(chain);
            if (chain.period() == 3) {
                const auto map = chains::chain_to_piv(chain);
                out["piv"] = to_json(map);
            }
            return to_py(out);
        },
        py::arg("flag"), py::arg("mu") = "1",
        "assemble a chain from a nested index tower like \"[]<[1]<[1,2]\"");

    m.def(
        "verify_chain",
        [](const py::object& chain) {
            const auto parsed = chain_from_json(from_py(chain));
            return to_py(to_json(chains::verify_chain(parsed.fs)));
        },
        py::arg("chain"), "verify closure of a chain dict");

    m.def(
        "verify_piv",
        [](const std::string& w, const std::string& a, const std::string& b) {
            return chains::verify_piv(chains::PIVSolution{
                parse_ratfunc(w), rational_from_string(a), rational_from_string(b)});
        },
        py::arg("w"), py::arg("a"), py::arg("b"), "exact second-order identity");

    m.def(
        "solve_piv_params",
        [](const std::string& w) -> std::optional<std::pair<std::string, std::string>> {
            const auto ab = chains::solve_piv_params(parse_ratfunc(w));
            if (!ab) return std::nullopt;
            return std::make_pair(rational_to_string(ab->first),
                                  rational_to_string(ab->second));
        },
        py::arg("w"), "parameters (a, b) for w, or None");

    m.def(
        "pole_expansion",
        [](const std::string& w, unsigned bits) {
            PrecisionGuard guard(bits + 64);
            return to_py(to_json(chains::piv_pole_expansion_check(parse_ratfunc(w), bits)));
        },
        py::arg("w"), py::arg("bits") = 256, "residue and constant-term structure at poles");

    m.def(
        "residue_cycles",
        [](int N, int bound) {
            if (bound < 0) bound = (N - 1) / 2;
            Json arr = Json::array();
            for (const auto& c : chains::enumerate_residue_cycles(N, bound))
                arr.push_back(to_json(c));
            return to_py(arr);
        },
        py::arg("N"), py::arg("bound") = -1, "integer residue cycles of odd period N");

    m.def(
        "solve_equilibrium",
        [](const std::string& system, size_t n, unsigned bits, unsigned starts, uint64_t seed) {
            PrecisionGuard guard(bits + 64);
            equilibria::EquilibriumProblem base;
            base.system = system == "calogero" ? equilibria::SystemKind::Calogero
                                               : equilibria::SystemKind::Stieltjes;
            base.n = n;
            base.precision_bits = bits;
            Json arr = Json::array();
            for (const auto& run : equilibria::solve_multistart(base, starts, seed))
                arr.push_back(to_json(run));
            return to_py(arr);
        },
        py::arg("system"), py::arg("n"), py::arg("bits") = 256, py::arg("starts") = 8,
        py::arg("seed") = 0, "multistart equilibrium search");

    m.def(
        "acceptance",
        [](int only) {
            Json arr = Json::array();
            using Runner = acceptance::CriterionResult (*)();
            const Runner runners[] = {
                acceptance::hermite_ode,
                acceptance::stieltjes_at_hermite_zeros,
                acceptance::exact_divisibility,
                acceptance::residue_square_vanishing,
                acceptance::equivalence_paths,
                acceptance::classified_family_monodromy,
                acceptance::third_order_relations,
                acceptance::equilibrium_recovery,
                acceptance::chain_closure,
                acceptance::cycle_enumeration,
                acceptance::pole_expansion,
            };
            const auto emit = [&arr](const acceptance::CriterionResult& r) {
                Json e;
                e["id"] = r.id;
                e["title"] = r.title;
                e["verdict"] = r.pass ? "pass" : "fail";
                e["detail"] = r.detail;
                arr.push_back(std::move(e));
            };
            if (only == 0)
                for (const auto& r : acceptance::run_all()) emit(r);
            else if (only >= 1 && only <= 11)
                emit(runners[only - 1]());
            else
                throw std::invalid_argument("only must be 0..11");
            return to_py(arr);
        },
        py::arg("only") = 0, "run acceptance criteria (0 = all)");
}
