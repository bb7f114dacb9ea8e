#pragma once

#include <optional>
#include <vector>

#include "pkahler/form.hpp"

namespace pkahler {

/// Outcome of the simplicity test on a (p,0)-form. When simple, `factors`
/// holds (1,0)-forms whose wedge reproduces the input exactly (empty for the
/// zero form). When not, the violated Plucker relation is reported: the
/// contraction multi-index K and a monomial where contract(e_K, eta) /\ eta
/// is nonzero.
struct SimplicityResult {
    bool simple = false;
    std::vector<ExactForm> factors;
    std::optional<MultiIndex> violating_contraction;
    std::optional<MultiIndex> violating_monomial;
};

/// Left interior product of a (p,0)-form with the dual basis (p-1)-vector
/// e_K: the (1,0)-form m |-> sign(K,m) * coeff(sort(K u m)).
inline ExactForm contract_basis(const ExactForm& eta, const MultiIndex& K) {
    int n = eta.dimension();
    ExactForm out(n);
    MultiIndex merged;
    for (int m = 1; m <= n; ++m) {
        int sign = mi::merge_sign(K, {m}, merged);
        if (sign == 0) continue;
        GaussianRational c = eta.coefficient(merged, {});
        if (c.is_zero()) continue;
        if (sign < 0) c = -c;
        out.add_term({m}, {}, std::move(c));
    }
    return out;
}

namespace detail {

// Row reduction over the Gaussian rationals; returns a basis of the row
// space with mutually reduced rows (zero at each other's lead columns).
inline std::vector<std::vector<GaussianRational>> row_space(
    std::vector<std::vector<GaussianRational>> rows) {
    std::vector<std::vector<GaussianRational>> basis;
    std::vector<size_t> leads;
    for (auto& row : rows) {
        for (size_t r = 0; r < basis.size(); ++r) {
            if (row[leads[r]].is_zero()) continue;
            GaussianRational f = row[leads[r]] / basis[r][leads[r]];
            for (size_t c = 0; c < row.size(); ++c) row[c] -= f * basis[r][c];
        }
        size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        for (size_t r = 0; r < basis.size(); ++r) {
            if (basis[r][lead].is_zero()) continue;
            GaussianRational f = basis[r][lead] / row[lead];
            for (size_t c = 0; c < row.size(); ++c) basis[r][c] -= f * row[c];
        }
        basis.push_back(std::move(row));
        leads.push_back(lead);
    }
    return basis;
}

}  // namespace detail

/// Decides whether a homogeneous (p,0)-form factors as a wedge of p
/// (1,0)-forms, via the Plucker relations contract(e_K, eta) /\ eta = 0; on
/// success an explicit factorization is recovered from the span of the
/// contractions. The zero form counts as simple with an empty factorization.
inline SimplicityResult is_simple(const ExactForm& eta) {
    SimplicityResult res;
    int n = eta.dimension();
    if (eta.is_zero()) {
        res.simple = true;
        return res;
    }
    auto bd = eta.bidegree();  // throws on non-homogeneous input
    if (bd.second != 0) throw std::invalid_argument("is_simple: expects a (p,0)-form");
    int p = bd.first;
    if (p <= 1) {
        res.simple = true;
        if (p == 1) res.factors.push_back(eta);
        return res;
    }

    std::vector<std::vector<GaussianRational>> contractions;
    for (const auto& K : mi::all_subsets(n, p - 1)) {
        ExactForm v = contract_basis(eta, K);
        if (v.is_zero()) continue;
        ExactForm prod = wedge(v, eta);
        if (!prod.is_zero()) {
            res.simple = false;
            res.violating_contraction = K;
            res.violating_monomial = prod.components().begin()->second.begin()->first.first;
            return res;
        }
        std::vector<GaussianRational> coords(n);
        for (int m = 1; m <= n; ++m) coords[m - 1] = v.coefficient({m}, {});
        contractions.push_back(std::move(coords));
    }

    res.simple = true;
    auto basis = detail::row_space(std::move(contractions));
    if (static_cast<int>(basis.size()) != p)
        throw std::logic_error("is_simple: contraction span has unexpected dimension");

    std::vector<ExactForm> factors;
    for (const auto& row : basis) {
        ExactForm f(n);
        for (int m = 1; m <= n; ++m)
            if (!row[m - 1].is_zero()) f.add_term({m}, {}, row[m - 1]);
        factors.push_back(std::move(f));
    }
    ExactForm prod = factors[0];
    for (int a = 1; a < p; ++a) prod = wedge(prod, factors[a]);

    // eta = c * prod for a single scalar c; fold c into the first factor
    const auto& comp = prod.components().begin()->second;
    auto lead = comp.begin();
    GaussianRational c = eta.coefficient(lead->first.first, {}) / lead->second;
    factors[0] = c * factors[0];
    ExactForm scaled = factors[0];
    for (int a = 1; a < p; ++a) scaled = wedge(scaled, factors[a]);
    if (!(scaled == eta)) throw std::logic_error("is_simple: factorization failed verification");
    res.factors = std::move(factors);
    return res;
}

/// Max coefficient magnitude over all Plucker products, for float-level
/// checks of sampled generators.
inline double plucker_residual(const NumericForm& eta) {
    if (eta.is_zero()) return 0.0;
    auto bd = eta.bidegree();
    if (bd.second != 0) throw std::invalid_argument("plucker_residual: expects a (p,0)-form");
    int n = eta.dimension();
    int p = bd.first;
    if (p <= 1) return 0.0;
    double worst = 0.0;
    for (const auto& K : mi::all_subsets(n, p - 1)) {
        NumericForm v(n);
        MultiIndex merged;
        for (int m = 1; m <= n; ++m) {
            int sign = mi::merge_sign(K, {m}, merged);
            if (sign == 0) continue;
            auto c = eta.coefficient(merged, {});
            v.add_term({m}, {}, sign < 0 ? -c : c);
        }
        worst = std::max(worst, sup_norm(wedge(v, eta)));
    }
    double scale = sup_norm(eta);
    return scale > 0 ? worst / (scale * scale) : worst;
}

}  // namespace pkahler
