#include "pkahler/cohomology.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace pkahler {

std::string flavor_name(CohomologyFlavor f) {
    switch (f) {
        case CohomologyFlavor::DeRham: return "derham";
        case CohomologyFlavor::BottChern: return "bottchern";
        default: return "aeppli";
    }
}

std::optional<CohomologyFlavor> flavor_from_name(const std::string& s) {
    if (s == "derham" || s == "dr") return CohomologyFlavor::DeRham;
    if (s == "bottchern" || s == "bc") return CohomologyFlavor::BottChern;
    if (s == "aeppli" || s == "a") return CohomologyFlavor::Aeppli;
    return std::nullopt;
}

std::string exactness_flavor_name(ExactnessFlavor f) {
    switch (f) {
        case ExactnessFlavor::DExact: return "d-exact";
        case ExactnessFlavor::IDDbarExact: return "iddbar-exact";
        default: return "aeppli-type";
    }
}

namespace {

ExactForm i_del_delbar(const LieModel& model, const ExactForm& f) {
    return GaussianRational::unit_imaginary() * model.del_delbar(f);
}

ExactForm aeppli_boundary(const LieModel& model, const ExactForm& eta) {
    return model.del(conjugate(eta)) + model.delbar(eta);
}

struct NumeratorDenominator {
    FormSpace space;                       // ambient coordinates
    std::vector<QVec> kernel;              // numerator vectors
    std::vector<QVec> image;               // independent denominator vectors
    std::vector<ExactForm> image_boundaries;
    std::vector<ExactForm> image_primitives;
};

CohomologyGroup assemble(const LieModel& model, CohomologyFlavor flavor, int degree,
                         NumeratorDenominator nd, bool complex_dimension) {
    CohomologyGroup g;
    g.flavor = flavor;
    g.degree = degree;

    // denominator must sit inside the numerator span
    {
        std::vector<int> extra = extend_basis(nd.kernel, nd.image);
        if (!extra.empty())
            throw std::logic_error("cohomology: exactness subspace escapes the kernel");
    }

    std::vector<int> reps = extend_basis(nd.image, nd.kernel);
    int dim = static_cast<int>(reps.size());
    g.dimension = complex_dimension ? dim / 2 : dim;
    int keep = complex_dimension ? g.dimension : dim;  // one representative per class
    for (int t = 0; t < keep && t < static_cast<int>(reps.size()); ++t)
        g.representatives.push_back(nd.space.from_coordinates(nd.kernel[reps[t]]));
    for (size_t t = 0; t < nd.image_boundaries.size(); ++t)
        g.exactness.emplace_back(nd.image_boundaries[t], nd.image_primitives[t]);
    return g;
}

CohomologyGroup compute_group_uncached(const LieModel& model, CohomologyFlavor flavor,
                                       int degree) {
    const int n = model.dimension();
    auto d_op = [&](const ExactForm& f) { return model.differential(f); };

    NumeratorDenominator nd;
    bool complex_dim = false;

    if (flavor == CohomologyFlavor::DeRham) {
        if (degree < 0 || degree > 2 * n)
            throw std::invalid_argument("compute_group: degree out of range for de Rham");
        complex_dim = true;
        nd.space = FormSpace::complex_degree(n, degree);
        FormSpace below = degree > 0 ? FormSpace::complex_degree(n, degree - 1) : FormSpace::empty(n);
        FormSpace above = degree < 2 * n ? FormSpace::complex_degree(n, degree + 1) : FormSpace::empty(n);
        nd.kernel = kernel_basis(operator_matrix(nd.space, above, d_op));

        std::vector<QVec> img_cols;
        for (const auto& b : below.basis()) img_cols.push_back(nd.space.coordinates(d_op(b)));
        std::vector<int> keep = independent_subset(img_cols);
        for (int i : keep) {
            nd.image.push_back(img_cols[i]);
            nd.image_boundaries.push_back(nd.space.from_coordinates(img_cols[i]));
            nd.image_primitives.push_back(below.basis()[i]);
        }
    } else {
        if (degree < 0 || degree > n)
            throw std::invalid_argument("compute_group: degree out of range for (k,k) cohomology");
        nd.space = FormSpace::real_pp(n, degree);
        if (flavor == CohomologyFlavor::BottChern) {
            FormSpace above = FormSpace::complex_degree(n, 2 * degree + 1);
            nd.kernel = kernel_basis(operator_matrix(nd.space, above, d_op));
            FormSpace below = FormSpace::real_pp(n, degree - 1);
            std::vector<QVec> img_cols;
            for (const auto& b : below.basis())
                img_cols.push_back(nd.space.coordinates(i_del_delbar(model, b)));
            std::vector<int> keep = independent_subset(img_cols);
            for (int i : keep) {
                nd.image.push_back(img_cols[i]);
                nd.image_boundaries.push_back(nd.space.from_coordinates(img_cols[i]));
                nd.image_primitives.push_back(below.basis()[i]);
            }
        } else {
            FormSpace above = FormSpace::real_pp(n, degree + 1);
            nd.kernel = kernel_basis(
                operator_matrix(nd.space, above, [&](const ExactForm& f) { return i_del_delbar(model, f); }));
            FormSpace eta_space = FormSpace::complex_bidegrees(n, {{degree, degree - 1}});
            std::vector<QVec> img_cols;
            for (const auto& b : eta_space.basis())
                img_cols.push_back(nd.space.coordinates(aeppli_boundary(model, b)));
            std::vector<int> keep = independent_subset(img_cols);
            for (int i : keep) {
                nd.image.push_back(img_cols[i]);
                nd.image_boundaries.push_back(nd.space.from_coordinates(img_cols[i]));
                nd.image_primitives.push_back(eta_space.basis()[i]);
            }
        }
    }
    return assemble(model, flavor, degree, std::move(nd), complex_dim);
}

std::string model_fingerprint(const LieModel& model) { return model_to_json(model).dump(); }

}  // namespace

CohomologyGroup compute_group(const LieModel& model, CohomologyFlavor flavor, int degree) {
    static std::mutex mu;
    static std::map<std::tuple<std::string, int, int>, CohomologyGroup> cache;
    std::tuple<std::string, int, int> key{model_fingerprint(model), static_cast<int>(flavor), degree};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CohomologyGroup g = compute_group_uncached(model, flavor, degree);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), g);
    return g;
}

ExactnessCertificate exactness_certificate(const LieModel& model, const ExactForm& a,
                                           ExactnessFlavor flavor) {
    const int n = model.dimension();
    ExactnessCertificate cert;

    auto degs = a.degrees();
    if (degs.size() > 1) throw std::invalid_argument("exactness_certificate: mixed total degree");
    int deg = degs.empty() ? 0 : degs[0];

    // precondition per flavor
    if (flavor == ExactnessFlavor::AeppliType) {
        ExactForm r = i_del_delbar(model, a);
        cert.precondition_ok = r.is_zero();
        if (!cert.precondition_ok) cert.precondition_message = "i del delbar of input is nonzero";
    } else {
        ExactForm r = model.differential(a);
        cert.precondition_ok = r.is_zero();
        if (!cert.precondition_ok) cert.precondition_message = "d of input is nonzero";
    }
    if (!cert.precondition_ok) return cert;

    FormSpace ambient;
    FormSpace source = FormSpace::empty(n);
    std::function<ExactForm(const ExactForm&)> op;

    if (flavor == ExactnessFlavor::DExact) {
        ambient = FormSpace::complex_degree(n, deg);
        if (deg > 0) source = FormSpace::complex_degree(n, deg - 1);
        op = [&model](const ExactForm& f) { return model.differential(f); };
    } else {
        if (deg % 2 != 0) throw std::invalid_argument("exactness_certificate: expects a (k,k)-form");
        int k = deg / 2;
        ambient = FormSpace::real_pp(n, k);
        if (flavor == ExactnessFlavor::IDDbarExact) {
            source = FormSpace::real_pp(n, k - 1);
            op = [&model](const ExactForm& f) { return i_del_delbar(model, f); };
        } else {
            source = FormSpace::complex_bidegrees(n, {{k, k - 1}});
            op = [&model](const ExactForm& f) { return aeppli_boundary(model, f); };
        }
    }

    QMat M = operator_matrix(source, ambient, op);
    QVec b = ambient.coordinates(a);
    SolveResult sr = solve(M, b);
    cert.ambient = ambient;
    if (sr.solvable) {
        cert.exact = true;
        cert.primitive = source.from_coordinates(sr.x);
        if (!(op(*cert.primitive) == a))
            throw std::logic_error("exactness_certificate: primitive failed re-derivation");
    } else {
        cert.exact = false;
        cert.functional = sr.certificate;
        // sanity: the witness must pair nonzero with the input
        if (sgn(dot(sr.certificate, b)) == 0)
            throw std::logic_error("exactness_certificate: degenerate witness");
    }
    return cert;
}

json cohomology_group_to_json(const CohomologyGroup& g, const LieModel& model) {
    json out;
    out["model"] = model.name();
    out["flavor"] = flavor_name(g.flavor);
    out["degree"] = g.degree;
    out["dimension"] = g.dimension;
    out["dimension_kind"] =
        g.flavor == CohomologyFlavor::DeRham ? "complex" : "real";
    json reps = json::array();
    for (const auto& r : g.representatives) reps.push_back(form_to_json(r));
    out["representatives"] = std::move(reps);
    out["exactness_dimension"] = g.exactness.size();
    out["invariant_level"] = true;
    return out;
}

json exactness_to_json(const ExactnessCertificate& c) {
    json out;
    out["precondition_ok"] = c.precondition_ok;
    if (!c.precondition_ok) {
        out["error"] = c.precondition_message;
        return out;
    }
    out["exact"] = c.exact;
    if (c.primitive) out["primitive"] = form_to_json(*c.primitive);
    if (c.functional) {
        json w = json::array();
        for (const auto& q : *c.functional) w.push_back(to_fraction_string(q));
        out["witness_functional"] = std::move(w);
    }
    return out;
}

}  // namespace pkahler
