#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pivlab/acceptance.hpp"
#include "pivlab/chains.hpp"
#include "pivlab/equilibria.hpp"
#include "pivlab/errors.hpp"
#include "pivlab/manifest.hpp"
#include "pivlab/parse.hpp"
#include "pivlab/serialize.hpp"

using namespace pivlab;

namespace {

struct GlobalOpts {
    unsigned bits = 256;
    uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string timestamp;
    std::vector<std::string> argv;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

Json taus_to_config(const std::vector<Rational>& taus) {
    Json arr = Json::array();
    for (const auto& t : taus) arr.push_back(rational_to_string(t));
    return arr;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(rational_from_string(item));
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const long v = std::stol(item);
        if (v < 0) throw std::invalid_argument("negative index in list: " + item);
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

std::vector<Complex> parse_point_list(const std::string& text) {
    std::vector<Complex> out;
    // points separated by ';' or '|' (the latter avoids shell quoting)
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '|', ';');
    std::stringstream ss(normalized);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        if (pair.empty()) continue;
        const auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("point must be \"re,im\": " + pair);
        out.emplace_back(real_from_decimal(pair.substr(0, comma)),
                         real_from_decimal(pair.substr(comma + 1)));
    }
    return out;
}

void write_output(const GlobalOpts& g, const std::string& text) {
    std::cout << text;
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) throw std::invalid_argument("cannot write file: " + g.out);
        f << text;
    }
}

int emit_json(const GlobalOpts& g, const Json& config, const std::string& key, Json payload,
              bool pass) {
    const auto manifest = make_manifest(g.argv, config, g.bits, g.seed, g.timestamp);
    write_output(g, report_envelope(manifest, key, std::move(payload)).dump(2) + "\n");
    return pass ? 0 : 1;
}

int emit_points_csv(const GlobalOpts& g, const Json& config, const std::vector<Complex>& points,
                    const std::vector<Real>& residuals, bool pass) {
    const auto manifest = make_manifest(g.argv, config, g.bits, g.seed, g.timestamp);
    std::ostringstream os;
    os << "# command_line: " << manifest.command_line << "\n";
    os << "# config_hash: " << manifest.config_hash << "\n";
    os << "# precision_bits: " << manifest.precision_bits << "\n";
    os << "# seed: " << manifest.seed << "\n";
    os << "# version: " << manifest.version << "\n";
    os << "# timestamp: " << manifest.timestamp << "\n";
    os << "index,re,im,residual\n";
    for (size_t i = 0; i < points.size(); ++i) {
        os << i << "," << to_decimal(points[i].re, g.bits) << ","
           << to_decimal(points[i].im, g.bits) << ","
           << (i < residuals.size() ? to_decimal(residuals[i], g.bits) : "0") << "\n";
    }
    write_output(g, os.str());
    return pass ? 0 : 1;
}

RatFunc ratfunc_from_sources(const std::string& expr, const std::string& file) {
    if (!expr.empty() && !file.empty())
        throw std::invalid_argument("give either an expression or a file, not both");
    if (!expr.empty()) return parse_ratfunc(expr);
    if (!file.empty()) return ratfunc_from_json(load_json(file));
    throw std::invalid_argument("missing input: no expression or file given");
}

// Sources shared by the zero-configuration verifiers.
struct ConfigSource {
    unsigned hermite = 0;
    std::string wronskian;
    std::string poly_file;

    Poly resolve() const {
        const int given = (hermite > 0) + !wronskian.empty() + !poly_file.empty();
        if (given != 1)
            throw std::invalid_argument(
                "give exactly one of --hermite, --wronskian, --poly");
        if (hermite > 0) return families::hermite(hermite);
        if (!wronskian.empty())
            return families::hermite_wronskian(
                families::HermiteSequence{parse_unsigned_list(wronskian)});
        return poly_from_json(load_json(poly_file));
    }

    Json config() const {
        Json j;
        if (hermite > 0) j["hermite"] = hermite;
        if (!wronskian.empty()) j["wronskian"] = wronskian;
        if (!poly_file.empty()) j["poly"] = poly_file;
        return j;
    }
};

std::vector<Real> magnitudes(const std::vector<Complex>& v) {
    std::vector<Real> out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(abs(z));
    return out;
}

Real max_of(const std::vector<Real>& v) {
    Real worst{0};
    for (const auto& x : v) worst = (std::max)(worst, x);
    return worst;
}

RatFunc piv_defect(const RatFunc& w, const Rational& a, const Rational& b) {
    const RatFunc z = RatFunc::variable();
    const RatFunc d1 = w.derivative();
    const RatFunc d2 = d1.derivative();
    return RatFunc(Rational(2)) * w * d2 - d1 * d1 - RatFunc(Rational(3)) * pow(w, 4) -
           RatFunc(Rational(8)) * z * pow(w, 3) - RatFunc(Rational(4)) * z * z * w * w +
           RatFunc(Rational(4) * a) * w * w - RatFunc(Rational(2) * b);
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    for (int i = 0; i < argc; ++i) g.argv.emplace_back(argv[i]);

    CLI::App app{"rational solution laboratory for odd-period dressing chains"};
    app.require_subcommand(1);
    app.add_option("--bits", g.bits, "working precision in bits")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized starts")->capture_default_str();
    app.add_option("--out", g.out, "also write the report to this file");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--timestamp", g.timestamp,
                   "pin the manifest timestamp (for byte-identical reruns)");

    std::function<int()> action;

    // families gen
    auto* families_cmd = app.add_subcommand("families", "generate family polynomials");
    families_cmd->fallthrough();
    auto* gen = families_cmd->add_subcommand("gen", "emit one family member");
    gen->fallthrough();
    unsigned gen_hermite = 0, gen_am = 0, gen_exp = 0;
    std::string gen_wronskian, gen_taus, gen_nu = "1";
    gen->add_option("--hermite", gen_hermite, "Hermite polynomial H_n");
    gen->add_option("--adler-moser", gen_am, "ladder Wronskian of size n");
    gen->add_option("--hermite-wronskian", gen_wronskian, "comma-separated degrees");
    gen->add_option("--exp", gen_exp, "exponential-augmented ladder Wronskian of size n");
    gen->add_option("--taus", gen_taus, "comma-separated ladder parameters");
    gen->add_option("--nu", gen_nu, "exponential rate");
    gen->callback([&] {
        action = [&]() -> int {
            const int given = (gen_hermite > 0) + (gen_am > 0) + !gen_wronskian.empty() +
                              (gen_exp > 0);
            if (given != 1)
                throw std::invalid_argument(
                    "give exactly one of --hermite, --adler-moser, --hermite-wronskian, --exp");
            Json config, payload;
            if (gen_hermite > 0) {
                config["hermite"] = gen_hermite;
                payload["polynomial"] = to_json(families::hermite(gen_hermite));
            } else if (gen_am > 0) {
                auto taus = parse_rational_list(gen_taus);
                if (taus.empty() && gen_am > 1) taus.assign(gen_am - 1, Rational(0));
                const families::TauVector tv{taus};
                config["adler_moser"] = gen_am;
                config["taus"] = taus_to_config(taus);
                payload["wronskian"] = to_json(families::adler_moser_wronskian(gen_am, tv));
                Json ladder = Json::array();
                for (const auto& p : families::adler_moser_ladder(gen_am, tv))
                    ladder.push_back(to_json(p));
                payload["ladder"] = std::move(ladder);
            } else if (!gen_wronskian.empty()) {
                const families::HermiteSequence seq{parse_unsigned_list(gen_wronskian)};
                config["hermite_wronskian"] = gen_wronskian;
                payload["wronskian"] = to_json(families::hermite_wronskian(seq));
            } else {
                auto taus = parse_rational_list(gen_taus);
                if (taus.empty() && gen_exp > 1) taus.assign(gen_exp - 1, Rational(0));
                const families::TauVector tv{taus};
                config["exp"] = gen_exp;
                config["nu"] = gen_nu;
                config["taus"] = taus_to_config(taus);
                payload["wronskian"] = to_json(families::exp_augmented_wronskian(
                    gen_exp, tv, rational_from_string(gen_nu)));
            }
            return emit_json(g, config, "family", std::move(payload), true);
        };
    });

    // solutions build
    auto* solutions_cmd = app.add_subcommand("solutions", "construct rational solutions");
    solutions_cmd->fallthrough();
    auto* build = solutions_cmd->add_subcommand("build", "build f, w and the potential");
    build->fallthrough();
    std::string build_spec_file, build_hermite_ks, build_taus, build_nu;
    unsigned build_k_extra = 0, build_step_n = 0, build_exp_n = 0;
    int build_direction = 1;
    build->add_option("--spec", build_spec_file, "solution spec JSON file");
    build->add_option("--hermite-ks", build_hermite_ks, "base degrees, comma-separated");
    build->add_option("--k-extra", build_k_extra, "added degree for the weighted family");
    build->add_option("--step-n", build_step_n, "ladder step at size n");
    build->add_option("--direction", build_direction, "+1 or -1")->capture_default_str();
    build->add_option("--exp-n", build_exp_n, "exponential mode at size n");
    build->add_option("--nu", build_nu, "exponential rate");
    build->add_option("--taus", build_taus, "comma-separated ladder parameters");
    build->callback([&] {
        action = [&]() -> int {
            solutions::SolutionSpec spec;
            if (!build_spec_file.empty()) {
                spec = solution_spec_from_json(load_json(build_spec_file));
            } else if (build_k_extra > 0) {
                solutions::HermiteMode hm;
                hm.ks.ks = parse_unsigned_list(build_hermite_ks);
                hm.k_extra = build_k_extra;
                spec = hm;
            } else if (build_step_n > 0) {
                solutions::AdlerMoserStep am;
                am.n = build_step_n;
                am.direction = build_direction;
                am.taus.taus = parse_rational_list(build_taus);
                const size_t need =
                    (std::max)(am.n, static_cast<unsigned>(am.n + am.direction)) - 1;
                if (am.taus.taus.empty()) am.taus.taus.assign(need, Rational(0));
                spec = am;
            } else if (build_exp_n > 0) {
                solutions::ExpMode em;
                em.n = build_exp_n;
                em.nu = rational_from_string(build_nu.empty() ? "1" : build_nu);
                em.taus.taus = parse_rational_list(build_taus);
                if (em.taus.taus.empty() && em.n > 1)
                    em.taus.taus.assign(em.n - 1, Rational(0));
                spec = em;
            } else {
                throw std::invalid_argument(
                    "give --spec, or --hermite-ks/--k-extra, or --step-n, or --exp-n");
            }
            const Json config = to_json(spec);
            const RatFunc f = solutions::build_f(spec);
            Json payload;
            payload["spec"] = config;
            payload["f"] = to_json(f);
            payload["w"] = to_json(solutions::piv_w_from_f(f));
            payload["u"] = to_json(solutions::potential_from_f(f));
            try {
                payload["partial_fractions"] = to_json(solutions::partial_fractions(f, g.bits));
            } catch (const solutions::NotInClassError& e) {
                payload["partial_fractions"] = nullptr;
                payload["note"] = e.what();
            }
            return emit_json(g, config, "solution", std::move(payload), true);
        };
    });

    // verify group
    auto* verify = app.add_subcommand("verify", "run a verification and report pass/fail");
    verify->fallthrough();

    auto* vst = verify->add_subcommand("stieltjes", "first-order relations");
    vst->fallthrough();
    ConfigSource vst_src;
    std::string vst_f, vst_f_file, vst_nu = "0", vst_mu = "1", vst_perturb;
    vst->add_option("--hermite", vst_src.hermite, "use the zeros of H_n");
    vst->add_option("--wronskian", vst_src.wronskian, "use the zeros of W(H_ks)");
    vst->add_option("--poly", vst_src.poly_file, "use the zeros of a polynomial file");
    vst->add_option("--f", vst_f, "check a rational function expression instead");
    vst->add_option("--f-file", vst_f_file, "check a rational function JSON file");
    vst->add_option("--nu", vst_nu, "field parameter nu")->capture_default_str();
    vst->add_option("--mu", vst_mu, "field parameter mu")->capture_default_str();
    vst->add_option("--perturb", vst_perturb, "bump the first point by this rational");
    vst->callback([&] {
        action = [&]() -> int {
            if (!vst_f.empty() || !vst_f_file.empty()) {
                const RatFunc f = ratfunc_from_sources(vst_f, vst_f_file);
                Json config;
                config["f"] = to_json(f);
                const auto report = relations::generalized_stieltjes_check(f, g.bits);
                return emit_json(g, config, "relation", to_json(report), report.pass);
            }
            const Poly p = vst_src.resolve();
            Json config = vst_src.config();
            config["nu"] = vst_nu;
            config["mu"] = vst_mu;
            auto cfg = relations::config_from_zeros(p, g.bits, rational_from_string(vst_nu),
                                                    rational_from_string(vst_mu));
            if (!vst_perturb.empty()) {
                if (cfg.points.empty()) throw std::invalid_argument("nothing to perturb");
                config["perturb"] = vst_perturb;
                cfg.points[0].re += Real(rational_from_string(vst_perturb));
            }
            relations::RelationReport report;
            report.relation = "stieltjes";
            report.residuals = magnitudes(relations::stieltjes_residual(cfg));
            report.precision_bits = g.bits;
            report.pass = max_of(report.residuals) < monodromy::pass_tolerance(g.bits);
            return emit_json(g, config, "relation", to_json(report), report.pass);
        };
    });

    auto* vca = verify->add_subcommand("calogero", "third-order relations");
    vca->fallthrough();
    ConfigSource vca_src;
    std::string vca_perturb;
    vca->add_option("--hermite", vca_src.hermite, "use the zeros of H_n");
    vca->add_option("--wronskian", vca_src.wronskian, "use the zeros of W(H_ks)");
    vca->add_option("--poly", vca_src.poly_file, "use the zeros of a polynomial file");
    vca->add_option("--perturb", vca_perturb, "bump the first point by this rational");
    vca->callback([&] {
        action = [&]() -> int {
            const Poly p = vca_src.resolve();
            Json config = vca_src.config();
            auto cfg = relations::config_from_zeros(p, g.bits);
            if (!vca_perturb.empty()) {
                if (cfg.points.empty()) throw std::invalid_argument("nothing to perturb");
                config["perturb"] = vca_perturb;
                cfg.points[0].re += Real(rational_from_string(vca_perturb));
            }
            relations::RelationReport report;
            report.relation = "calogero";
            report.residuals = magnitudes(relations::calogero_residual(cfg));
            report.precision_bits = g.bits;
            report.pass = max_of(report.residuals) < monodromy::pass_tolerance(g.bits);
            return emit_json(g, config, "relation", to_json(report), report.pass);
        };
    });

    auto* vmo = verify->add_subcommand("monodromy", "trivial-monodromy test of a potential");
    vmo->fallthrough();
    std::string vmo_potential, vmo_u, vmo_spec;
    vmo->add_option("--potential", vmo_potential, "potential JSON file");
    vmo->add_option("--u", vmo_u, "potential expression");
    vmo->add_option("--spec", vmo_spec, "solution spec JSON file (uses u = f' + f^2)");
    vmo->callback([&] {
        action = [&]() -> int {
            RatFunc u;
            Json config;
            if (!vmo_spec.empty()) {
                const auto spec = solution_spec_from_json(load_json(vmo_spec));
                u = solutions::potential_from_f(solutions::build_f(spec));
                config["spec"] = to_json(spec);
            } else {
                u = ratfunc_from_sources(vmo_u, vmo_potential);
                config["u"] = to_json(u);
            }
            const auto report = monodromy::trivial_monodromy_report(u, g.bits);
            return emit_json(g, config, "monodromy", to_json(report), report.pass);
        };
    });

    auto* vth = verify->add_subcommand("theorem1", "Res (z+w)^2 = 0 at every pole of w");
    vth->fallthrough();
    std::string vth_w, vth_w_file;
    vth->add_option("--w", vth_w, "solution expression");
    vth->add_option("--w-file", vth_w_file, "solution JSON file");
    vth->callback([&] {
        action = [&]() -> int {
            const RatFunc w = ratfunc_from_sources(vth_w, vth_w_file);
            Json config;
            config["w"] = to_json(w);
            const auto report = relations::theorem1_check(w, g.bits);
            return emit_json(g, config, "relation", to_json(report), report.pass);
        };
    });

    auto* vch = verify->add_subcommand("chain", "closure of a dressing chain");
    vch->fallthrough();
    std::string vch_file, vch_flag, vch_mu = "1";
    vch->add_option("--file", vch_file, "chain JSON file");
    vch->add_option("--flag", vch_flag, "nested index tower, e.g. \"[]<[1]<[1,2]\"");
    vch->add_option("--mu", vch_mu, "scale of the linear term")->capture_default_str();
    vch->callback([&] {
        action = [&]() -> int {
            chains::DressingChain chain;
            Json config;
            if (!vch_file.empty()) {
                chain = chain_from_json(load_json(vch_file));
                config["file"] = vch_file;
            } else if (!vch_flag.empty()) {
                chain = chains::build_chain(parse_flag_sequences(vch_flag),
                                            rational_from_string(vch_mu));
                config["flag"] = vch_flag;
                config["mu"] = vch_mu;
            } else {
                throw std::invalid_argument("give --file or --flag");
            }
            const auto ver = chains::verify_chain(chain.fs);
            bool pass = ver.pass;
            Json payload = to_json(ver);
            if (pass && !chain.alphas.empty() && chain.alphas != ver.alphas) {
                pass = false;
                payload["verdict"] = "fail";
                payload["detail"] = "stored alphas disagree with the verified ones";
            }
            chain.alphas = ver.alphas;
            payload["chain"] = to_json(chain);
            return emit_json(g, config, "chain_verification", std::move(payload), pass);
        };
    });

    auto* vpi = verify->add_subcommand("piv", "exact second-order identity for (w, a, b)");
    vpi->fallthrough();
    std::string vpi_w, vpi_w_file, vpi_a, vpi_b;
    bool vpi_expansion = false;
    vpi->add_option("--w", vpi_w, "solution expression");
    vpi->add_option("--w-file", vpi_w_file, "solution JSON file");
    vpi->add_option("--a", vpi_a, "parameter a");
    vpi->add_option("--b", vpi_b, "parameter b");
    vpi->add_flag("--expansion", vpi_expansion, "also check residue/constant-term structure");
    vpi->callback([&] {
        action = [&]() -> int {
            const RatFunc w = ratfunc_from_sources(vpi_w, vpi_w_file);
            Json config;
            config["w"] = to_json(w);
            Json payload;
            payload["w"] = to_json(w);
            bool pass = true;
            if (!vpi_a.empty() != !vpi_b.empty())
                throw std::invalid_argument("give both --a and --b, or neither");
            if (!vpi_a.empty()) {
                chains::PIVSolution sol{w, rational_from_string(vpi_a),
                                        rational_from_string(vpi_b)};
                config["a"] = vpi_a;
                config["b"] = vpi_b;
                pass = chains::verify_piv(sol);
                payload["a"] = rational_to_string(sol.a);
                payload["b"] = rational_to_string(sol.b);
                payload["defect"] = to_json(piv_defect(w, sol.a, sol.b));
            } else {
                const auto ab = chains::solve_piv_params(w);
                if (ab) {
                    payload["a"] = rational_to_string(ab->first);
                    payload["b"] = rational_to_string(ab->second);
                    payload["defect"] = to_json(piv_defect(w, ab->first, ab->second));
                } else {
                    pass = false;
                    payload["detail"] = "no parameters (a, b) satisfy the identity";
                }
            }
            if (vpi_expansion) {
                const auto rep = chains::piv_pole_expansion_check(w, g.bits);
                payload["pole_expansion"] = to_json(rep);
                pass = pass && rep.pass;
            }
            payload["verdict"] = pass ? "pass" : "fail";
            return emit_json(g, config, "piv", std::move(payload), pass);
        };
    });

    // chains group
    auto* chains_cmd = app.add_subcommand("chains", "dressing-chain construction");
    chains_cmd->fallthrough();

    auto* cbuild = chains_cmd->add_subcommand("build", "assemble a chain from an index tower");
    cbuild->fallthrough();
    std::string cbuild_flag, cbuild_mu = "1", cbuild_rescale;
    cbuild->add_option("--flag", cbuild_flag, "nested index tower, e.g. \"[]<[1]<[1,2]\"")
        ->required();
    cbuild->add_option("--mu", cbuild_mu, "scale of the linear term")->capture_default_str();
    cbuild->add_option("--rescale", cbuild_rescale, "rescale parameter s = beta^2");
    cbuild->callback([&] {
        action = [&]() -> int {
            Json config;
            config["flag"] = cbuild_flag;
            config["mu"] = cbuild_mu;
            auto chain = chains::build_chain(parse_flag_sequences(cbuild_flag),
                                             rational_from_string(cbuild_mu));
            if (!cbuild_rescale.empty()) {
                config["rescale"] = cbuild_rescale;
                chain = chains::rescale_chain(chain, rational_from_string(cbuild_rescale));
            }
            Json payload;
            payload["chain"] = to_json(chain);
            if (chain.period() == 3) payload["piv"] = to_json(chains::chain_to_piv(chain));
            return emit_json(g, config, "build", std::move(payload), true);
        };
    });

    auto* ccycles = chains_cmd->add_subcommand("cycles", "enumerate residue cycles");
    ccycles->fallthrough();
    int cyc_n = 3, cyc_bound = -1;
    ccycles->add_option("--N", cyc_n, "odd period")->required();
    ccycles->add_option("--bound", cyc_bound, "search bound (defaults to (N-1)/2)");
    ccycles->callback([&] {
        action = [&]() -> int {
            const int bound = cyc_bound >= 0 ? cyc_bound : (cyc_n - 1) / 2;
            Json config;
            config["N"] = cyc_n;
            config["bound"] = bound;
            Json payload = Json::array();
            for (const auto& cycle : chains::enumerate_residue_cycles(cyc_n, bound))
                payload.push_back(to_json(cycle));
            return emit_json(g, config, "cycles", std::move(payload), true);
        };
    });

    // solve
    auto* solve = app.add_subcommand("solve", "numerical equilibrium search");
    solve->fallthrough();
    std::string solve_system = "stieltjes", solve_nu = "0", solve_mu = "1", solve_start;
    unsigned solve_n = 0, solve_starts = 32;
    solve->add_option("--system", solve_system, "stieltjes or calogero")
        ->check(CLI::IsMember({"stieltjes", "calogero"}))
        ->capture_default_str();
    solve->add_option("--n", solve_n, "number of points")->required();
    solve->add_option("--starts", solve_starts, "number of random starts")
        ->capture_default_str();
    solve->add_option("--nu", solve_nu, "field parameter nu")->capture_default_str();
    solve->add_option("--mu", solve_mu, "field parameter mu")->capture_default_str();
    solve->add_option("--start", solve_start, "explicit start \"re,im;re,im;...\"");
    solve->callback([&] {
        action = [&]() -> int {
            equilibria::EquilibriumProblem base;
            base.system = solve_system == "calogero" ? equilibria::SystemKind::Calogero
                                                     : equilibria::SystemKind::Stieltjes;
            base.n = solve_n;
            base.nu = rational_from_string(solve_nu);
            base.mu = rational_from_string(solve_mu);
            base.precision_bits = g.bits;
            base.seed = g.seed;

            Json config;
            config["system"] = solve_system;
            config["n"] = solve_n;
            config["nu"] = solve_nu;
            config["mu"] = solve_mu;

            std::vector<equilibria::EquilibriumResult> runs;
            if (!solve_start.empty()) {
                base.initial = parse_point_list(solve_start);
                if (base.initial.size() != solve_n)
                    throw std::invalid_argument("--start size disagrees with --n");
                config["start"] = solve_start;
                runs.push_back(equilibria::solve_equilibrium(base));
            } else {
                config["starts"] = solve_starts;
                runs = equilibria::solve_multistart(base, solve_starts, g.seed);
            }

            // Label converged runs landing on the derived zero sets.
            std::optional<Poly> reference;
            std::string label;
            if (base.system == equilibria::SystemKind::Stieltjes && base.nu == Rational(0) &&
                base.mu == Rational(1)) {
                reference = families::hermite(solve_n);
                label = "hermite-" + std::to_string(solve_n);
            } else if (base.system == equilibria::SystemKind::Calogero && solve_n == 2) {
                reference = families::hermite_wronskian(families::HermiteSequence{{1, 2}});
                label = "wronskian-1,2";
            }
            // the solver stops at 2^-(bits/2); label anything within 2^-(bits/4)
            const Real tol = boost::multiprecision::pow(Real(2), -static_cast<int>(g.bits / 4));
            for (auto& run : runs) {
                if (!run.converged || !reference) continue;
                const auto match =
                    equilibria::match_to_roots(run.config, *reference, tol, g.bits);
                if (match.matched) {
                    run.matched_label = label;
                    run.matched_distance = match.max_distance;
                }
            }

            bool any = false;
            const equilibria::EquilibriumResult* best = nullptr;
            for (const auto& run : runs) {
                if (!run.converged) continue;
                any = true;
                if (!best || run.residual_max < best->residual_max) best = &run;
            }

            if (g.format == "csv") {
                if (!best) best = runs.empty() ? nullptr : &runs.front();
                if (!best) throw std::invalid_argument("no runs to report");
                relations::ChargeConfig cc;
                cc.points = best->config;
                cc.charges.assign(best->config.size(), 1);
                cc.nu = Real(base.nu);
                cc.mu = Real(base.mu);
                const auto residuals =
                    base.system == equilibria::SystemKind::Calogero
                        ? relations::calogero_residual(cc)
                        : relations::stieltjes_residual(cc);
                return emit_points_csv(g, config, best->config, magnitudes(residuals), any);
            }

            Json runs_json = Json::array();
            for (const auto& run : runs) runs_json.push_back(to_json(run));
            Json payload;
            payload["runs"] = std::move(runs_json);
            return emit_json(g, config, "solve", std::move(payload), any);
        };
    });

    // acceptance
    auto* accept = app.add_subcommand("acceptance", "run the acceptance criteria");
    accept->fallthrough();
    int accept_only = 0;
    accept->add_option("--only", accept_only, "run a single criterion by number (1..11)");
    accept->callback([&] {
        action = [&]() -> int {
            Json config;
            config["only"] = accept_only;
            std::vector<acceptance::CriterionResult> results;
            if (accept_only == 0) {
                results = acceptance::run_all();
            } else {
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
                if (accept_only < 1 || accept_only > 11)
                    throw std::invalid_argument("--only must be 1..11");
                results.push_back(runners[accept_only - 1]());
            }
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                Json e;
                e["id"] = r.id;
                e["title"] = r.title;
                e["verdict"] = r.pass ? "pass" : "fail";
                e["detail"] = r.detail;
                arr.push_back(std::move(e));
            }
            Json payload;
            payload["criteria"] = std::move(arr);
            return emit_json(g, config, "acceptance", std::move(payload), all);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        PrecisionGuard guard(g.bits + 64);
        if (!action) {
            std::cerr << "no action selected\n";
            return 2;
        }
        return action();
    } catch (const PrecisionError& e) {
        Json err;
        err["error"] = e.what();
        err["kind"] = "precision";
        return emit_json(g, Json::object(), "error", std::move(err), false);
    } catch (const ConstructionError& e) {
        Json err;
        err["error"] = e.what();
        err["kind"] = "construction";
        return emit_json(g, Json::object(), "error", std::move(err), false);
    } catch (const solutions::NotInClassError& e) {
        Json err;
        err["error"] = e.what();
        err["kind"] = "not_in_class";
        return emit_json(g, Json::object(), "error", std::move(err), false);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
