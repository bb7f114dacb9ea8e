#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pkahler/multi_index.hpp"
#include "pkahler/rational.hpp"

namespace pkahler {

// Scalar trait shims so the same algebra runs over exact Gaussian rationals
// and over std::complex<double>.
inline GaussianRational conj_scalar(const GaussianRational& x) { return x.conj(); }
inline std::complex<double> conj_scalar(const std::complex<double>& x) { return std::conj(x); }
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& x) { return x.real() == 0.0 && x.imag() == 0.0; }
inline GaussianRational scalar_from_int(const GaussianRational*, long v) { return GaussianRational(v); }
inline std::complex<double> scalar_from_int(const std::complex<double>*, long v) {
    return {static_cast<double>(v), 0.0};
}

template <class S>
concept FormScalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { conj_scalar(a) } -> std::convertible_to<S>;
    { scalar_is_zero(a) } -> std::convertible_to<bool>;
};

using Bidegree = std::pair<int, int>;

/// Element of the complexified exterior algebra of an n-dimensional complex
/// vector space, stored per bidegree as a sparse map over pairs of
/// multi-indices (I, J) labelling phi_I /\ conj(phi_J). Absent bidegrees and
/// absent entries are zero. Immutable in spirit: all operations return new
/// values.
template <FormScalar S>
class Form {
  public:
    // (I, J) keyed coefficients for one bidegree
    using Component = std::map<std::pair<MultiIndex, MultiIndex>, S>;

    explicit Form(int n = 0) : n_(n) {}

    static Form zero(int n) { return Form(n); }

    static Form constant(int n, S value) {
        Form f(n);
        f.add_term({}, {}, std::move(value));
        return f;
    }

    /// phi_k as a (1,0)-form, 1-based.
    static Form coframe(int n, int k) {
        Form f(n);
        f.add_term({k}, {}, scalar_from_int(static_cast<const S*>(nullptr), 1));
        return f;
    }

    /// conj(phi_k) as a (0,1)-form, 1-based.
    static Form coframe_bar(int n, int k) {
        Form f(n);
        f.add_term({}, {k}, scalar_from_int(static_cast<const S*>(nullptr), 1));
        return f;
    }

    static Form monomial(int n, MultiIndex I, MultiIndex J, S coeff) {
        Form f(n);
        f.add_term(std::move(I), std::move(J), std::move(coeff));
        return f;
    }

    int dimension() const { return n_; }
    bool is_zero() const { return comps_.empty(); }

    const std::map<Bidegree, Component>& components() const { return comps_; }

    S coefficient(const MultiIndex& I, const MultiIndex& J) const {
        auto it = comps_.find({static_cast<int>(I.size()), static_cast<int>(J.size())});
        if (it == comps_.end()) return S{};
        auto jt = it->second.find({I, J});
        return jt == it->second.end() ? S{} : jt->second;
    }

    void add_term(MultiIndex I, MultiIndex J, S coeff) {
        if (scalar_is_zero(coeff)) return;
        if (!mi::strictly_increasing(I) || !mi::strictly_increasing(J))
            throw std::invalid_argument("Form: multi-index not strictly increasing");
        if ((!I.empty() && I.back() > n_) || (!J.empty() && J.back() > n_))
            throw std::invalid_argument("Form: index exceeds dimension");
        Bidegree d{static_cast<int>(I.size()), static_cast<int>(J.size())};
        auto& comp = comps_[d];
        auto key = std::make_pair(std::move(I), std::move(J));
        auto it = comp.find(key);
        if (it == comp.end()) {
            comp.emplace(std::move(key), std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (scalar_is_zero(it->second)) {
                comp.erase(it);
                if (comp.empty()) comps_.erase(d);
            }
        }
    }

    /// True when concentrated in a single bidegree (or zero).
    bool is_homogeneous() const { return comps_.size() <= 1; }

    /// Bidegree of a nonzero homogeneous form.
    Bidegree bidegree() const {
        if (comps_.size() != 1) throw std::logic_error("Form: bidegree of non-homogeneous form");
        return comps_.begin()->first;
    }

    /// Total degrees present, deduplicated ascending.
    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [d, c] : comps_) {
            int k = d.first + d.second;
            if (out.empty() || out.back() != k) out.push_back(k);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend Form operator+(const Form& a, const Form& b) {
        check_same_dim(a, b);
        Form out = a;
        for (const auto& [d, comp] : b.comps_)
            for (const auto& [key, c] : comp) out.add_term(key.first, key.second, c);
        return out;
    }

    friend Form operator-(const Form& a, const Form& b) {
        check_same_dim(a, b);
        Form out = a;
        for (const auto& [d, comp] : b.comps_)
            for (const auto& [key, c] : comp) out.add_term(key.first, key.second, -c);
        return out;
    }

    friend Form operator*(const S& s, const Form& a) {
        Form out(a.n_);
        if (scalar_is_zero(s)) return out;
        for (const auto& [d, comp] : a.comps_)
            for (const auto& [key, c] : comp) out.add_term(key.first, key.second, s * c);
        return out;
    }

    Form operator-() const { return scalar_from_int(static_cast<const S*>(nullptr), -1) * (*this); }

    friend bool operator==(const Form& a, const Form& b) {
        return a.n_ == b.n_ && a.comps_ == b.comps_;
    }

  private:
    static void check_same_dim(const Form& a, const Form& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Form: dimension mismatch");
    }

    int n_;
    std::map<Bidegree, Component> comps_;

    template <FormScalar T>
    friend Form<T> wedge(const Form<T>&, const Form<T>&);
};

using ExactForm = Form<GaussianRational>;
using NumericForm = Form<std::complex<double>>;

/// Exterior product. Bilinear, associative, graded-anticommutative.
template <FormScalar S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("wedge: dimension mismatch");
    Form<S> out(a.dimension());
    MultiIndex mergedI, mergedJ;
    for (const auto& [da, ca] : a.comps_) {
        for (const auto& [db, cb] : b.comps_) {
            // conj factors of the left operand slide past holomorphic
            // factors of the right operand
            int cross = da.second * db.first;
            for (const auto& [ka, va] : ca) {
                for (const auto& [kb, vb] : cb) {
                    int s1 = mi::merge_sign(ka.first, kb.first, mergedI);
                    if (s1 == 0) continue;
                    int s2 = mi::merge_sign(ka.second, kb.second, mergedJ);
                    if (s2 == 0) continue;
                    int sign = (cross % 2 == 0) ? s1 * s2 : -s1 * s2;
                    S coeff = va * vb;
                    if (sign < 0) coeff = -coeff;
                    out.add_term(mergedI, mergedJ, std::move(coeff));
                }
            }
        }
    }
    return out;
}

template <FormScalar S>
Form<S> wedge(std::initializer_list<Form<S>> factors) {
    auto it = factors.begin();
    if (it == factors.end()) throw std::invalid_argument("wedge: empty product");
    Form<S> acc = *it;
    for (++it; it != factors.end(); ++it) acc = wedge(acc, *it);
    return acc;
}

/// Complex conjugation: antilinear, swaps bidegrees (p,q) <-> (q,p).
template <FormScalar S>
Form<S> conjugate(const Form<S>& a) {
    Form<S> out(a.dimension());
    for (const auto& [d, comp] : a.components()) {
        bool flip = (d.first * d.second) % 2 == 1;
        for (const auto& [key, c] : comp) {
            S v = conj_scalar(c);
            if (flip) v = -v;
            out.add_term(key.second, key.first, std::move(v));
        }
    }
    return out;
}

template <FormScalar S>
bool is_real(const Form<S>& a) {
    return conjugate(a) == a;
}

/// Projection onto bidegree (p,q); summing over all bidegrees reconstructs
/// the input.
template <FormScalar S>
Form<S> bidegree_component(const Form<S>& a, int p, int q) {
    Form<S> out(a.dimension());
    auto it = a.components().find({p, q});
    if (it != a.components().end())
        for (const auto& [key, c] : it->second) out.add_term(key.first, key.second, c);
    return out;
}

template <FormScalar S>
Form<S> degree_component(const Form<S>& a, int k) {
    Form<S> out(a.dimension());
    for (const auto& [d, comp] : a.components())
        if (d.first + d.second == k)
            for (const auto& [key, c] : comp) out.add_term(key.first, key.second, c);
    return out;
}

inline GaussianRational sigma_scalar(const GaussianRational*, int p) { return sigma_factor(p); }
inline std::complex<double> sigma_scalar(const std::complex<double>*, int p) {
    return sigma_factor(p).to_complex();
}

/// dV = sigma_n phi_{1..n} /\ conj(phi_{1..n}), the reference volume form.
template <FormScalar S>
Form<S> volume_form(int n) {
    MultiIndex top = mi::full(n);
    return Form<S>::monomial(n, top, top, sigma_scalar(static_cast<const S*>(nullptr), n));
}

/// Coefficient of wedge(a, b) relative to dV. Requires complementary total
/// degree; for real inputs of complementary bidegree the value is real.
template <FormScalar S>
S pair_top(const Form<S>& a, const Form<S>& b) {
    int n = a.dimension();
    if (n != b.dimension()) throw std::invalid_argument("pair_top: dimension mismatch");
    for (int ka : a.degrees())
        for (int kb : b.degrees())
            if (ka + kb != 2 * n) throw std::invalid_argument("pair_top: degrees do not sum to 2n");
    Form<S> w = wedge(a, b);
    MultiIndex top = mi::full(n);
    S c = w.coefficient(top, top);
    // divide by sigma_n = i^{n^2} 2^{-n}: multiply by 2^n / i^{n^2}
    S inv_sigma;
    if constexpr (std::is_same_v<S, GaussianRational>) {
        GaussianRational s = sigma_factor(n);
        inv_sigma = GaussianRational(1) / s;
    } else {
        inv_sigma = std::complex<double>(1.0, 0.0) / sigma_factor(n).to_complex();
    }
    return c * inv_sigma;
}

inline NumericForm to_numeric(const ExactForm& a) {
    NumericForm out(a.dimension());
    for (const auto& [d, comp] : a.components())
        for (const auto& [key, c] : comp) out.add_term(key.first, key.second, c.to_complex());
    return out;
}

/// Largest coefficient magnitude, for tolerance scaling.
inline double sup_norm(const NumericForm& a) {
    double m = 0;
    for (const auto& [d, comp] : a.components())
        for (const auto& [key, c] : comp) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace pkahler
