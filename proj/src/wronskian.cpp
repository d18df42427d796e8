#include "pivlab/wronskian.hpp"

#include <stdexcept>

namespace pivlab {

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly::one();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    int sign = 1;
    Poly prev = Poly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Poly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Poly wronskian(const std::vector<Poly>& fs) {
    size_t n = fs.size();
    if (n == 0) return Poly::one();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t j = 0; j < n; ++j) {
        m[0][j] = fs[j];
        for (size_t i = 1; i < n; ++i) m[i][j] = m[i - 1][j].derivative();
    }
    return bareiss_determinant(std::move(m));
}

ExpPoly wronskian(const std::vector<Poly>& fs, const ExpPoly& tail) {
    size_t n = fs.size() + 1;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t j = 0; j + 1 < n; ++j) {
        m[0][j] = fs[j];
        for (size_t i = 1; i < n; ++i) m[i][j] = m[i - 1][j].derivative();
    }
    // (e^{nu z} p)^(i) = e^{nu z} q_i with q_0 = p, q_{i+1} = q_i' + nu q_i;
    // the common factor e^{nu z} leaves the last column.
    ExpPoly col = tail;
    for (size_t i = 0; i < n; ++i) {
        m[i][n - 1] = col.poly;
        col = col.derivative();
    }
    return {tail.rate, bareiss_determinant(std::move(m))};
}

std::variant<Poly, ExpPoly> wronskian(const std::vector<WronskianEntry>& entries) {
    std::vector<Poly> polys;
    const ExpPoly* exp_entry = nullptr;
    size_t exp_pos = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (std::holds_alternative<Poly>(e)) {
            polys.push_back(std::get<Poly>(e));
        } else {
            const ExpPoly& ep = std::get<ExpPoly>(e);
            if (ep.rate == 0) {
                polys.push_back(ep.poly);
                continue;
            }
            if (exp_entry)
                throw std::invalid_argument("wronskian: more than one exponential entry");
            exp_entry = &ep;
            exp_pos = i;
        }
    }
    if (!exp_entry) return wronskian(polys);
    ExpPoly w = wronskian(polys, *exp_entry);
    // moving the exponential column to the last slot costs one sign flip
    // per transposition
    if ((entries.size() - 1 - exp_pos) % 2 == 1) w.poly = -w.poly;
    return w;
}

}  // namespace pivlab
