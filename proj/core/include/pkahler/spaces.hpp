#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pkahler/exact_linalg.hpp"
#include "pkahler/form.hpp"

namespace pkahler {

/// A finite-dimensional real vector space of invariant forms with a fixed
/// rational basis and exact coordinate maps. Three constructions cover
/// everything the engine needs:
///   - complex spaces (split re/im coordinates over basis monomials),
///   - real (k,k)-forms (psi = conj(psi)),
///   - real forms of a fixed even total degree (all bidegrees paired).
/// coordinates() verifies the expansion reproduces the input exactly and
/// throws when the form lies outside the space.
class FormSpace {
  public:
    static FormSpace complex_bidegrees(int n, std::vector<Bidegree> degrees);
    static FormSpace complex_degree(int n, int k);
    static FormSpace real_pp(int n, int k);
    static FormSpace real_degree(int n, int k);  // k even; real k-forms
    static FormSpace empty(int n);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<ExactForm>& basis() const { return basis_; }

    QVec coordinates(const ExactForm& f) const;
    ExactForm from_coordinates(const QVec& x) const;
    bool contains(const ExactForm& f) const;

    const std::string& description() const { return description_; }

  private:
    struct Slot {
        Bidegree bd;
        MultiIndex I, J;
        GaussianRational divisor;  // coordinate = part of coeff(I,J)/divisor
        bool imag_part;
    };

    int n_ = 0;
    std::string description_;
    std::vector<ExactForm> basis_;
    std::vector<Slot> slots_;
};

/// Matrix of a real-linear operation between spaces: column t is
/// dst.coordinates(op(src.basis()[t])).
QMat operator_matrix(const FormSpace& src, const FormSpace& dst,
                     const std::function<ExactForm(const ExactForm&)>& op);

}  // namespace pkahler
