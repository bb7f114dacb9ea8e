#include "pkahler/spaces.hpp"

#include <stdexcept>

namespace pkahler {

namespace {

GaussianRational imag_unit() { return GaussianRational::unit_imaginary(); }

}  // namespace

FormSpace FormSpace::complex_bidegrees(int n, std::vector<Bidegree> degrees) {
    FormSpace sp;
    sp.n_ = n;
    sp.description_ = "complex";
    for (auto [p, q] : degrees) {
        if (p < 0 || q < 0 || p > n || q > n) continue;
        for (const auto& I : mi::all_subsets(n, p)) {
            for (const auto& J : mi::all_subsets(n, q)) {
                ExactForm m = ExactForm::monomial(n, I, J, GaussianRational(1));
                sp.basis_.push_back(m);
                sp.slots_.push_back({{p, q}, I, J, GaussianRational(1), false});
                sp.basis_.push_back(imag_unit() * m);
                sp.slots_.push_back({{p, q}, I, J, GaussianRational(1), true});
            }
        }
    }
    return sp;
}

FormSpace FormSpace::complex_degree(int n, int k) {
    std::vector<Bidegree> degs;
    for (int p = 0; p <= k; ++p)
        if (p <= n && k - p <= n && k - p >= 0) degs.push_back({p, k - p});
    FormSpace sp = complex_bidegrees(n, degs);
    sp.description_ = "complex degree " + std::to_string(k);
    return sp;
}

FormSpace FormSpace::real_pp(int n, int k) {
    FormSpace sp;
    sp.n_ = n;
    sp.description_ = "real (" + std::to_string(k) + "," + std::to_string(k) + ")";
    if (k < 0 || k > n) return sp;
    GaussianRational w = imaginary_power(static_cast<long>(k) * k);
    auto subsets = mi::all_subsets(n, k);
    for (size_t a = 0; a < subsets.size(); ++a) {
        const auto& I = subsets[a];
        // w phi_I /\ conj(phi_I) is real
        sp.basis_.push_back(ExactForm::monomial(n, I, I, w));
        sp.slots_.push_back({{k, k}, I, I, w, false});
        for (size_t b = a + 1; b < subsets.size(); ++b) {
            const auto& J = subsets[b];
            ExactForm u1 = ExactForm::monomial(n, I, J, w) + ExactForm::monomial(n, J, I, w);
            ExactForm u2 = ExactForm::monomial(n, I, J, imag_unit() * w) -
                           ExactForm::monomial(n, J, I, imag_unit() * w);
            sp.basis_.push_back(std::move(u1));
            sp.slots_.push_back({{k, k}, I, J, w, false});
            sp.basis_.push_back(std::move(u2));
            sp.slots_.push_back({{k, k}, I, J, w, true});
        }
    }
    return sp;
}

FormSpace FormSpace::real_degree(int n, int k) {
    if (k % 2 != 0) throw std::invalid_argument("real_degree: degree must be even");
    FormSpace sp;
    sp.n_ = n;
    sp.description_ = "real degree " + std::to_string(k);
    for (int a = k; a >= (k + 1) / 2; --a) {
        int b = k - a;
        if (a > n || b < 0 || b > n) continue;
        if (a == b) {
            FormSpace diag = real_pp(n, a);
            for (size_t t = 0; t < diag.basis_.size(); ++t) {
                sp.basis_.push_back(diag.basis_[t]);
                sp.slots_.push_back(diag.slots_[t]);
            }
            continue;
        }
        // monomial m in (a,b) pairs with its conjugate mirror in (b,a)
        bool flip = (a * b) % 2 == 1;
        GaussianRational mirror = flip ? GaussianRational(-1) : GaussianRational(1);
        for (const auto& I : mi::all_subsets(n, a)) {
            for (const auto& J : mi::all_subsets(n, b)) {
                ExactForm m = ExactForm::monomial(n, I, J, GaussianRational(1));
                ExactForm mc = ExactForm::monomial(n, J, I, mirror);
                sp.basis_.push_back(m + mc);
                sp.slots_.push_back({{a, b}, I, J, GaussianRational(1), false});
                sp.basis_.push_back((imag_unit() * m) - (imag_unit() * mc));
                sp.slots_.push_back({{a, b}, I, J, GaussianRational(1), true});
            }
        }
    }
    return sp;
}

FormSpace FormSpace::empty(int n) {
    FormSpace sp;
    sp.n_ = n;
    sp.description_ = "empty";
    return sp;
}

QVec FormSpace::coordinates(const ExactForm& f) const {
    if (f.dimension() != n_) throw std::invalid_argument("coordinates: dimension mismatch");
    QVec x(slots_.size(), mpq_class(0));
    for (size_t t = 0; t < slots_.size(); ++t) {
        const Slot& s = slots_[t];
        GaussianRational c = f.coefficient(s.I, s.J);
        if (c.is_zero()) continue;
        GaussianRational q = c / s.divisor;
        x[t] = s.imag_part ? q.im : q.re;
    }
    // exact verification: the expansion must reproduce f (this rejects forms
    // outside the space, e.g. non-real input to a real space)
    if (!(from_coordinates(x) == f))
        throw std::domain_error("coordinates: form is not in the space (" + description_ + ")");
    return x;
}

ExactForm FormSpace::from_coordinates(const QVec& x) const {
    if (x.size() != basis_.size()) throw std::invalid_argument("from_coordinates: size mismatch");
    ExactForm out(n_);
    for (size_t t = 0; t < basis_.size(); ++t) {
        if (sgn(x[t]) == 0) continue;
        out = out + (GaussianRational(x[t]) * basis_[t]);
    }
    return out;
}

bool FormSpace::contains(const ExactForm& f) const {
    try {
        coordinates(f);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

QMat operator_matrix(const FormSpace& src, const FormSpace& dst,
                     const std::function<ExactForm(const ExactForm&)>& op) {
    std::vector<QVec> cols;
    cols.reserve(src.dim());
    for (const auto& b : src.basis()) cols.push_back(dst.coordinates(op(b)));
    if (cols.empty()) return QMat(dst.dim(), 0);
    return QMat::from_columns(cols);
}

}  // namespace pkahler
