#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pkahler/lie_model.hpp"
#include "pkahler/spaces.hpp"

namespace pkahler {

enum class CohomologyFlavor { DeRham, BottChern, Aeppli };

std::string flavor_name(CohomologyFlavor f);
std::optional<CohomologyFlavor> flavor_from_name(const std::string& s);

/// Cohomology of the invariant complex, over exact rationals.
///  - DeRham(k): complex-valued invariant k-forms, ker d / im d; dimension
///    is the complex dimension.
///  - BottChern(k): real (k,k)-forms, ker d / im i del delbar; real
///    dimension.
///  - Aeppli(k): real (k,k)-forms, ker i del delbar / (im del + im delbar);
///    real dimension.
struct CohomologyGroup {
    CohomologyFlavor flavor;
    int degree;
    int dimension;
    std::vector<ExactForm> representatives;
    /// Spanning set of the exactness subspace together with primitives:
    /// each boundary is the appropriate derivative of its stored primitive
    /// (d psi, i del delbar psi, or del conj(eta) + delbar eta).
    std::vector<std::pair<ExactForm, ExactForm>> exactness;
};

/// Exact kernels and images by rank computation; deterministic. Results are
/// cached per (model, flavor, degree).
CohomologyGroup compute_group(const LieModel& model, CohomologyFlavor flavor, int degree);

enum class ExactnessFlavor { DExact, IDDbarExact, AeppliType };

std::string exactness_flavor_name(ExactnessFlavor f);

struct ExactnessCertificate {
    bool precondition_ok = false;
    std::string precondition_message;
    bool exact = false;
    /// When exact: derivative(primitive) == input, verified exactly. For
    /// AeppliType the primitive is eta with del(conj eta) + delbar(eta) ==
    /// input.
    std::optional<ExactForm> primitive;
    /// When not exact: a linear functional on the ambient coordinate space
    /// vanishing on every boundary but not on the input.
    std::optional<QVec> functional;
    FormSpace ambient = FormSpace::empty(0);
};

/// Decides flavor-exactness of an invariant form and returns a verified
/// primitive or a dual witness of the nonzero class.
ExactnessCertificate exactness_certificate(const LieModel& model, const ExactForm& a,
                                           ExactnessFlavor flavor);

json cohomology_group_to_json(const CohomologyGroup& g, const LieModel& model);
json exactness_to_json(const ExactnessCertificate& c);

}  // namespace pkahler
