#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pkahler/form.hpp"
#include "pkahler/form_io.hpp"

namespace pkahler {

/// Invariant-form calculus on a complexified Lie algebra: structure
/// constants give d on a (1,0)-coframe phi_1..phi_n, and d extends to all
/// invariant forms as a graded derivation with d(conj phi_k) = conj(d phi_k).
/// Immutable after construction.
class LieModel {
  public:
    /// `dphi[k-1]` is d(phi_k), a degree-2 exact form. Holomorphically
    /// parallelizable models have pure (2,0) differentials; (1,1) and (0,2)
    /// terms are accepted and checked for d^2 = 0 like everything else.
    LieModel(std::string name, int n, std::vector<ExactForm> dphi);

    const std::string& name() const { return name_; }
    int dimension() const { return n_; }
    const ExactForm& coframe_differential(int k) const { return dphi_.at(k - 1); }

    /// True when every d(phi_k) is purely (2,0).
    bool holomorphically_parallelizable() const;

    /// Graded-derivation extension of the structure equations; linear,
    /// satisfies the Leibniz rule, and d o d = 0 whenever verify() passes.
    ExactForm differential(const ExactForm& a) const;

    /// (del, delbar) = bidegree components (p+1,q) and (p,q+1) of d(a) for
    /// homogeneous a. Throws if d(a) has components outside those two
    /// bidegrees (non-integrable structure data).
    std::pair<ExactForm, ExactForm> split_d(const ExactForm& a) const;

    ExactForm del(const ExactForm& a) const;
    ExactForm delbar(const ExactForm& a) const;
    /// del(delbar(a)) summed over the homogeneous components of a.
    ExactForm del_delbar(const ExactForm& a) const;

    /// The coframe metric form sigma_1 * sum_k phi_k /\ conj(phi_k).
    ExactForm metric_form() const;

    struct VerifyReport {
        bool passed = true;
        struct Violation {
            int k;                 // coframe index with d^2 phi_k != 0
            ExactForm residual;
        };
        std::vector<Violation> violations;
    };

    /// Checks d^2 phi_k = 0 for every coframe element, in exact arithmetic.
    /// Reports violations instead of aborting.
    VerifyReport verify() const;

  private:
    std::string name_;
    int n_;
    std::vector<ExactForm> dphi_;
    std::vector<ExactForm> dphi_bar_;  // conj(dphi), precomputed
};

/// Built-in models:
///  - "iwasawa" (= "etabeta3"): the Iwasawa threefold,
///  - "etabeta{2n+1}" for n >= 1: d phi_{2n+1} = phi_1^phi_2 + ... +
///    phi_{2n-1}^phi_{2n}, all other coframe elements closed,
///  - "sl2": the SL(2,C) quotient with d alpha = -2 eta^alpha,
///    d beta = 2 eta^beta, d eta = alpha^beta (coframe order alpha, beta,
///    eta).
namespace catalog {

LieModel etabeta(int odd_dim);
LieModel sl2_quotient();

/// Looks up a model by catalog name or alias; nullopt when unknown.
std::optional<LieModel> by_name(const std::string& name);

struct Entry {
    std::string name;
    std::vector<std::string> aliases;
    int dimension;
};
std::vector<Entry> list();

}  // namespace catalog

/// Model file record {name, n, d:[{k, terms:[{coeff:{re,im}, i, j, type?}]}]}
/// where type is "20" (default), "11" or "02" selecting phi_i^phi_j,
/// phi_i^conj(phi_j) or conj(phi_i)^conj(phi_j).
json model_to_json(const LieModel& m);
LieModel model_from_json(const json& j);
LieModel load_model_file(const std::string& path);

}  // namespace pkahler
