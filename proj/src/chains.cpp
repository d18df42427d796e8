#include "pivlab/chains.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pivlab/errors.hpp"
#include "pivlab/monodromy.hpp"

namespace pivlab {
namespace chains {

Rational DressingChain::alpha_sum() const {
    Rational s(0);
    for (const auto& a : alphas) s += a;
    return s;
}

ChainVerification verify_chain(const std::vector<RatFunc>& fs) {
    const size_t n = fs.size();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("chain period must be odd and >= 3");
    ChainVerification v;
    v.pass = true;
    for (size_t i = 0; i < n; ++i) {
        const RatFunc& fi = fs[i];
        const RatFunc& fj = fs[(i + 1) % n];
        RatFunc g = (fi + fj).derivative() - fi * fi + fj * fj;
        if (!g.is_constant()) {
            v.pass = false;
            v.failed_index = i;
            v.alphas.clear();
            return v;
        }
        v.alphas.push_back(g.constant_value());
    }
    return v;
}

namespace {

void validate_flag(const std::vector<families::HermiteSequence>& flag) {
    if (flag.size() < 2) throw std::invalid_argument("flag needs at least two levels");
    for (const auto& level : flag) families::validate(level);
    for (size_t i = 0; i + 1 < flag.size(); ++i) {
        const auto& cur = flag[i].ks;
        const auto& next = flag[i + 1].ks;
        if (next.size() != cur.size() + 1 ||
            !std::includes(next.begin(), next.end(), cur.begin(), cur.end()))
            throw std::invalid_argument("flag must add exactly one index per step");
    }
}

}  // namespace

DressingChain build_chain(const std::vector<families::HermiteSequence>& flag,
                          const Rational& mu) {
    validate_flag(flag);
    const size_t h = flag.size() - 1;   // tower height
    const size_t n = 2 * h + 1;         // chain period

    std::vector<RatFunc> up(h);  // (log(W(flag[j+1]) / W(flag[j])))'
    for (size_t j = 0; j < h; ++j) {
        Poly top = families::hermite_wronskian(flag[j + 1]);
        Poly bottom = families::hermite_wronskian(flag[j]);
        if (top.is_zero() || bottom.is_zero())
            throw ConstructionError("vanishing Wronskian in flag");
        up[j] = log_derivative(top) - log_derivative(bottom);
    }

    RatFunc muz(Poly::monomial(mu, 1));
    RatFunc target = up[h - 1] - muz;

    // ladder terms walked down the tower and back up, trivial step at the
    // bottom; the alternative ordering reverses the walk after f_1
    std::vector<RatFunc> walk_a, walk_b;
    walk_a.push_back(up[h - 1]);
    for (size_t j = h; j-- > 0;) walk_a.push_back(-up[j]);
    walk_a.push_back(RatFunc());
    for (size_t j = 0; j + 1 < h; ++j) walk_a.push_back(up[j]);
    walk_b.push_back(up[h - 1]);
    for (size_t j = h - 1; j-- > 0;) walk_b.push_back(up[j]);
    walk_b.push_back(RatFunc());
    for (size_t j = 0; j < h; ++j) walk_b.push_back(-up[j]);

    std::optional<DressingChain> fallback;
    for (const auto& walk : {walk_a, walk_b}) {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            std::vector<RatFunc> fs(n);
            for (size_t i = 0; i < n; ++i) {
                bool negative = (mask >> i) & 1ul;
                fs[i] = walk[i] + (negative ? -muz : muz);
            }
            if (!(fs[0] == target)) continue;
            ChainVerification v = verify_chain(fs);
            if (!v.pass) continue;
            DressingChain chain{std::move(fs), std::move(v.alphas)};
            if (chain.alpha_sum() == -2) return chain;
            if (!fallback) fallback = std::move(chain);
        }
    }
    if (fallback) return *fallback;
    throw ConstructionError("no sign assignment closes the chain for this flag (" +
                            std::to_string(2 * (1ul << n)) + " candidates searched)");
}

namespace {

enum class Parity { Even, Odd, None };

Parity poly_parity(const Poly& p) {
    bool even_ok = true, odd_ok = true;
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i % 2 == 0) odd_ok = false;
        else even_ok = false;
    }
    if (even_ok) return Parity::Even;
    if (odd_ok) return Parity::Odd;
    return Parity::None;
}

// p(beta z) = beta^parity * substitute(p, s) with s = beta^2
Poly substitute_scaled(const Poly& p, const Rational& s, Parity parity) {
    std::vector<Rational> c = p.coeffs();
    int par = parity == Parity::Odd ? 1 : 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        unsigned e = (static_cast<unsigned>(i) - static_cast<unsigned>(par)) / 2;
        Rational f(1);
        for (unsigned k = 0; k < e; ++k) f *= s;
        c[i] *= f;
    }
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

DressingChain rescale_chain(const DressingChain& chain, const Rational& s) {
    if (s == 0) throw std::invalid_argument("scale must be nonzero");
    DressingChain out;
    for (const RatFunc& f : chain.fs) {
        if (f.is_zero()) {
            out.fs.push_back(f);
            continue;
        }
        Parity pn = poly_parity(f.num()), pd = poly_parity(f.den());
        if (pn == Parity::None || pd == Parity::None)
            throw std::domain_error("rescale needs parity-definite chain functions");
        int shift = 1 + (pn == Parity::Odd ? 1 : 0) - (pd == Parity::Odd ? 1 : 0);
        if (shift % 2 != 0)
            throw std::domain_error("rescale needs odd chain functions");
        // beta f(beta z) = s^{shift/2} num_s / den_s
        Rational front(1);
        for (int k = 0; k < shift / 2; ++k) front *= s;
        out.fs.push_back(RatFunc(front * substitute_scaled(f.num(), s, pn),
                                 substitute_scaled(f.den(), s, pd)));
    }
    ChainVerification v = verify_chain(out.fs);
    if (!v.pass) throw std::logic_error("rescaled chain failed verification");
    out.alphas = std::move(v.alphas);
    return out;
}

namespace {

RatFunc piv_defect_fixed(const RatFunc& w) {
    RatFunc z(Poly::variable());
    RatFunc w1 = w.derivative();
    RatFunc w2 = w1.derivative();
    RatFunc w_sq = w * w;
    return RatFunc(Poly(Rational(2))) * w * w2 - w1 * w1 -
           RatFunc(Poly(Rational(3))) * w_sq * w_sq -
           RatFunc(Poly(Rational(8))) * z * w_sq * w -
           RatFunc(Poly(Rational(4))) * z * z * w_sq;
}

}  // namespace

bool verify_piv(const PIVSolution& sol) {
    RatFunc defect = piv_defect_fixed(sol.w) + RatFunc(Rational(4) * sol.a) * sol.w * sol.w -
                     RatFunc(Poly(Rational(2) * sol.b));
    return defect.is_zero();
}

std::optional<std::pair<Rational, Rational>> solve_piv_params(const RatFunc& w) {
    if (w.is_zero()) throw std::invalid_argument("solve_piv_params needs w != 0");
    // defect = E0 + a * 4w^2 - 2b must vanish identically; clear
    // denominators and solve the affine system row by row over powers of z
    RatFunc e0 = piv_defect_fixed(w);
    RatFunc ea = RatFunc(Poly(Rational(4))) * w * w;
    Poly common = e0.den() * divexact(ea.den(), gcd(e0.den(), ea.den()));
    Poly p0 = e0.num() * divexact(common, e0.den());
    Poly pa = ea.num() * divexact(common, ea.den());
    Poly pb = Rational(-2) * common;

    int maxdeg = std::max({p0.degree(), pa.degree(), pb.degree()});
    struct Row {
        Rational ca, cb, rhs;
    };
    std::vector<Row> rows;
    for (int k = 0; k <= maxdeg; ++k) {
        Row r{pa.coeff(static_cast<size_t>(k)), pb.coeff(static_cast<size_t>(k)),
              -p0.coeff(static_cast<size_t>(k))};
        if (r.ca != 0 || r.cb != 0 || r.rhs != 0) rows.push_back(std::move(r));
    }
    // eliminate a
    auto pivot_a = std::find_if(rows.begin(), rows.end(), [](const Row& r) { return r.ca != 0; });
    if (pivot_a == rows.end()) return std::nullopt;  // cannot happen for w != 0
    Row ra = *pivot_a;
    std::vector<Row> reduced;
    for (const Row& r : rows) {
        if (&r == &*pivot_a) continue;
        Rational t = r.ca / ra.ca;
        reduced.push_back({Rational(0), r.cb - t * ra.cb, r.rhs - t * ra.rhs});
    }
    auto pivot_b =
        std::find_if(reduced.begin(), reduced.end(), [](const Row& r) { return r.cb != 0; });
    Rational b(0);
    if (pivot_b != reduced.end()) b = pivot_b->rhs / pivot_b->cb;
    Rational a = (ra.rhs - ra.cb * b) / ra.ca;
    for (const Row& r : rows)
        if (r.ca * a + r.cb * b != r.rhs) return std::nullopt;
    return std::make_pair(a, b);
}

ChainToPIV chain_to_piv(const DressingChain& chain) {
    if (chain.period() != 3) throw std::invalid_argument("chain_to_piv needs period 3");
    ChainVerification v = verify_chain(chain.fs);
    if (!v.pass) throw std::invalid_argument("chain does not close");
    ChainToPIV out;
    out.alpha_sum = Rational(0);
    for (const auto& a : v.alphas) out.alpha_sum += a;
    out.normalized = (out.alpha_sum == -2);
    out.stated_map = std::make_pair((v.alphas[2] - v.alphas[0]) / 2,
                                    -(v.alphas[1] * v.alphas[1]) / 2);

    RatFunc w = -(RatFunc(Poly::variable()) + chain.fs[0]);
    std::ostringstream note;
    if (w.is_zero()) {
        out.sol = {w, Rational(0), Rational(0)};
        out.a_free = true;
        note << "w = 0: b = 0 with a undetermined; ";
    } else {
        auto params = solve_piv_params(w);
        if (!params)
            throw ConstructionError("chain-to-PIV failure: no exact parameters for w");
        out.sol = {w, params->first, params->second};
        out.a_free = false;
    }
    out.map_matches =
        !out.a_free && out.stated_map &&
        *out.stated_map == std::make_pair(out.sol.a, out.sol.b);
    note << "alpha sum " << out.alpha_sum.str() << (out.normalized ? " (normalized)" : "")
         << "; stated map gives (" << out.stated_map->first.str() << ", "
         << out.stated_map->second.str() << ")";
    if (!out.a_free)
        note << "; exact parameters (" << out.sol.a.str() << ", " << out.sol.b.str() << ")"
             << (out.map_matches ? "; map matches" : "; map differs");
    out.note = note.str();
    return out;
}

PoleExpansionReport piv_pole_expansion_check(const RatFunc& w, unsigned bits) {
    PrecisionGuard guard(bits + 64);
    PoleExpansionReport report;
    report.precision_bits = bits;
    report.pass = true;
    Real tol = monodromy::pass_tolerance(bits);
    for (const auto& pole : monodromy::find_poles(w, bits)) {
        PoleExpansionEntry e;
        e.location = pole.location;
        e.order = pole.order;
        if (pole.order != 1) {
            e.pass = false;
            e.reason = "pole order " + std::to_string(pole.order) + " != 1";
            report.pass = false;
            report.poles.push_back(std::move(e));
            continue;
        }
        monodromy::LaurentWindow win = monodromy::laurent_window(w, pole, -1, 0, bits);
        e.residue = win.at(-1);
        e.constant_term = win.at(0);
        e.pass = true;
        if (pole.is_exact()) {
            Rational res = win.exact_at(-1);
            if (res != 1 && res != -1) {
                e.pass = false;
                e.reason = "residue " + res.str() + " not in {+1, -1}";
            } else if (win.exact_at(0) != -std::get<Rational>(pole.location)) {
                e.pass = false;
                e.reason = "constant term differs from -z0";
            }
        } else {
            Complex z0 = location_value(pole.location);
            Real near_plus = abs(e.residue - Complex(Real(1), Real(0)));
            Real near_minus = abs(e.residue - Complex(Real(-1), Real(0)));
            if (std::min(near_plus, near_minus) > tol) {
                e.pass = false;
                e.reason = "residue not within tolerance of +1 or -1";
            } else if (abs(e.constant_term + z0) > tol) {
                e.pass = false;
                e.reason = "constant term differs from -z0";
            }
        }
        if (!e.pass) report.pass = false;
        report.poles.push_back(std::move(e));
    }
    return report;
}

std::vector<ResidueCycle> enumerate_residue_cycles(int N, int bound) {
    if (N < 1 || N % 2 == 0) throw std::domain_error("period must be odd");
    if (bound < (N - 1) / 2) throw std::invalid_argument("bound below (N-1)/2");
    std::map<std::vector<long>, std::vector<BranchStep>> found;
    for (unsigned long word = 0; word < (1ul << N); ++word) {
        // compose the affine maps; NEG flips, INC shifts
        int eps = 1;
        long l = 0;
        int negs = 0;
        for (int i = 0; i < N; ++i) {
            if ((word >> i) & 1ul) {
                eps = -eps;
                l = -l;
                ++negs;
            } else {
                l += 1;
            }
        }
        if (negs % 2 == 0) continue;  // x -> x + l with odd l: no periodic point
        if (l % 2 != 0) throw std::logic_error("odd shift with odd flip count");
        long x0 = l / 2;
        std::vector<long> values(static_cast<size_t>(N));
        std::vector<BranchStep> steps(static_cast<size_t>(N));
        long x = x0;
        for (int i = 0; i < N; ++i) {
            values[static_cast<size_t>(i)] = x;
            if ((word >> i) & 1ul) {
                steps[static_cast<size_t>(i)] = BranchStep::Neg;
                x = -x;
            } else {
                steps[static_cast<size_t>(i)] = BranchStep::Inc;
                x = x + 1;
            }
        }
        // canonical rotation
        size_t best = 0;
        for (size_t r = 1; r < values.size(); ++r) {
            for (size_t i = 0; i < values.size(); ++i) {
                long lhs = values[(r + i) % values.size()];
                long rhs = values[(best + i) % values.size()];
                if (lhs != rhs) {
                    if (lhs < rhs) best = r;
                    break;
                }
            }
        }
        std::vector<long> canon(values.size());
        std::vector<BranchStep> canon_steps(values.size());
        for (size_t i = 0; i < values.size(); ++i) {
            canon[i] = values[(best + i) % values.size()];
            canon_steps[i] = steps[(best + i) % values.size()];
        }
        found.emplace(std::move(canon), std::move(canon_steps));
    }
    std::vector<ResidueCycle> out;
    out.reserve(found.size());
    for (auto& [vals, word] : found) out.push_back({vals, word});
    return out;
}

}  // namespace chains
}  // namespace pivlab
