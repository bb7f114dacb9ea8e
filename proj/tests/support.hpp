#pragma once

// Shared helpers for the unit tests: a tiny independent engine for products
// of anticommuting symbols (used as an expansion oracle against the Form
// algebra) and deterministic random generators for exact data.

#include <map>
#include <random>
#include <vector>

#include "pkahler/form.hpp"

namespace testsupport {

using pkahler::ExactForm;
using pkahler::GaussianRational;
using pkahler::MultiIndex;

/// Sum of coefficient * (product of distinct anticommuting symbols), with
/// symbols kept sorted; the sign bookkeeping is a plain insertion sort, so
/// it shares no code with Form's shuffle logic.
struct SymbolSum {
    std::map<std::vector<int>, GaussianRational> terms;

    static SymbolSum monomial(std::vector<int> symbols, GaussianRational c) {
        int sign = 1;
        for (size_t i = 1; i < symbols.size(); ++i) {
            for (size_t j = i; j > 0 && symbols[j - 1] > symbols[j]; --j) {
                std::swap(symbols[j - 1], symbols[j]);
                sign = -sign;
            }
        }
        for (size_t i = 1; i < symbols.size(); ++i)
            if (symbols[i - 1] == symbols[i]) return {};
        SymbolSum s;
        if (sign < 0) c = -c;
        if (!c.is_zero()) s.terms[symbols] = c;
        return s;
    }

    SymbolSum& operator+=(const SymbolSum& o) {
        for (const auto& [k, c] : o.terms) {
            auto it = terms.find(k);
            if (it == terms.end()) {
                terms[k] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
        return *this;
    }

    friend SymbolSum operator*(const SymbolSum& a, const SymbolSum& b) {
        SymbolSum out;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) {
                std::vector<int> sym = ka;
                sym.insert(sym.end(), kb.begin(), kb.end());
                out += SymbolSum::monomial(std::move(sym), ca * cb);
            }
        return out;
    }
};

/// Encode a Form into the symbol algebra: phi_k -> symbol k, conj(phi_k) ->
/// symbol n + k.
inline SymbolSum to_symbols(const ExactForm& f) {
    int n = f.dimension();
    SymbolSum out;
    for (const auto& [d, comp] : f.components()) {
        for (const auto& [key, c] : comp) {
            std::vector<int> sym;
            for (int i : key.first) sym.push_back(i);
            for (int j : key.second) sym.push_back(n + j);
            out += SymbolSum::monomial(std::move(sym), c);
        }
    }
    return out;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    mpq_class rational(int max_abs = 6, int max_den = 4) {
        std::uniform_int_distribution<int> num(-max_abs, max_abs);
        std::uniform_int_distribution<int> den(1, max_den);
        mpq_class q(num(gen), den(gen));
        q.canonicalize();
        return q;
    }

    GaussianRational gaussian_rational() { return {rational(), rational()}; }

    ExactForm form(int n, int p, int q, int terms = 3) {
        ExactForm f(n);
        auto Is = pkahler::mi::all_subsets(n, p);
        auto Js = pkahler::mi::all_subsets(n, q);
        if (Is.empty() || Js.empty()) return f;
        std::uniform_int_distribution<size_t> pi(0, Is.size() - 1);
        std::uniform_int_distribution<size_t> pj(0, Js.size() - 1);
        for (int t = 0; t < terms; ++t) f.add_term(Is[pi(gen)], Js[pj(gen)], gaussian_rational());
        return f;
    }
};

}  // namespace testsupport
