#include "pkahler/lie_model.hpp"

#include <fstream>
#include <sstream>

namespace pkahler {

LieModel::LieModel(std::string name, int n, std::vector<ExactForm> dphi)
    : name_(std::move(name)), n_(n), dphi_(std::move(dphi)) {
    if (n_ < 1) throw std::invalid_argument("LieModel: dimension must be positive");
    if (static_cast<int>(dphi_.size()) != n_)
        throw std::invalid_argument("LieModel: need d(phi_k) for every coframe element");
    for (const auto& f : dphi_) {
        if (f.dimension() != n_) throw std::invalid_argument("LieModel: structure form dimension mismatch");
        for (int k : f.degrees())
            if (k != 2) throw std::invalid_argument("LieModel: d(phi_k) must be a 2-form");
    }
    dphi_bar_.reserve(n_);
    for (const auto& f : dphi_) dphi_bar_.push_back(conjugate(f));
}

bool LieModel::holomorphically_parallelizable() const {
    for (const auto& f : dphi_)
        for (const auto& [d, comp] : f.components())
            if (d != Bidegree{2, 0}) return false;
    return true;
}

ExactForm LieModel::differential(const ExactForm& a) const {
    if (a.dimension() != n_) throw std::invalid_argument("differential: dimension mismatch");
    ExactForm out(n_);
    for (const auto& [d, comp] : a.components()) {
        for (const auto& [key, c] : comp) {
            const MultiIndex& I = key.first;
            const MultiIndex& J = key.second;
            // d(phi_I /\ conj(phi_J)) via the graded Leibniz rule, one
            // generator at a time; generators are ordered holomorphic first.
            int total = static_cast<int>(I.size() + J.size());
            for (int t = 0; t < total; ++t) {
                bool hol = t < static_cast<int>(I.size());
                int gen = hol ? I[t] : J[t - I.size()];
                const ExactForm& dgen = hol ? dphi_[gen - 1] : dphi_bar_[gen - 1];
                if (dgen.is_zero()) continue;

                MultiIndex preI, preJ, postI, postJ;
                if (hol) {
                    preI.assign(I.begin(), I.begin() + t);
                    postI.assign(I.begin() + t + 1, I.end());
                    postJ = J;
                } else {
                    preI = I;
                    preJ.assign(J.begin(), J.begin() + (t - I.size()));
                    postJ.assign(J.begin() + (t - I.size()) + 1, J.end());
                }
                GaussianRational sgn_c = (t % 2 == 0) ? c : -c;
                ExactForm pre = ExactForm::monomial(n_, preI, preJ, sgn_c);
                ExactForm post = ExactForm::monomial(
                    n_, postI, postJ, GaussianRational(1));
                out = out + wedge(wedge(pre, dgen), post);
            }
        }
    }
    return out;
}

std::pair<ExactForm, ExactForm> LieModel::split_d(const ExactForm& a) const {
    if (!a.is_homogeneous())
        throw std::invalid_argument("split_d: expects a homogeneous form");
    ExactForm da = differential(a);
    if (a.is_zero()) return {da, da};
    auto [p, q] = a.bidegree();
    ExactForm d10 = bidegree_component(da, p + 1, q);
    ExactForm d01 = bidegree_component(da, p, q + 1);
    if (!(d10 + d01 == da))
        throw std::domain_error("split_d: differential has components outside (p+1,q)+(p,q+1)");
    return {d10, d01};
}

ExactForm LieModel::del(const ExactForm& a) const {
    ExactForm out(n_);
    for (const auto& [d, comp] : a.components()) {
        ExactForm part(n_);
        for (const auto& [key, c] : comp) part.add_term(key.first, key.second, c);
        out = out + split_d(part).first;
    }
    return out;
}

ExactForm LieModel::delbar(const ExactForm& a) const {
    ExactForm out(n_);
    for (const auto& [d, comp] : a.components()) {
        ExactForm part(n_);
        for (const auto& [key, c] : comp) part.add_term(key.first, key.second, c);
        out = out + split_d(part).second;
    }
    return out;
}

ExactForm LieModel::del_delbar(const ExactForm& a) const { return del(delbar(a)); }

ExactForm LieModel::metric_form() const {
    ExactForm sum(n_);
    for (int k = 1; k <= n_; ++k)
        sum.add_term({k}, {k}, GaussianRational(1));
    return sigma_factor(1) * sum;
}

LieModel::VerifyReport LieModel::verify() const {
    VerifyReport report;
    for (int k = 1; k <= n_; ++k) {
        ExactForm dd = differential(dphi_[k - 1]);
        if (!dd.is_zero()) {
            report.passed = false;
            report.violations.push_back({k, std::move(dd)});
        }
    }
    return report;
}

namespace catalog {

LieModel etabeta(int odd_dim) {
    if (odd_dim < 3 || odd_dim % 2 == 0)
        throw std::invalid_argument("etabeta: dimension must be odd and >= 3");
    int n = odd_dim;
    std::vector<ExactForm> dphi(n, ExactForm(n));
    ExactForm last(n);
    for (int j = 1; j <= n - 1; j += 2)
        last.add_term({j, j + 1}, {}, GaussianRational(1));
    dphi[n - 1] = std::move(last);
    std::string name = (n == 3) ? "iwasawa" : "etabeta" + std::to_string(n);
    return LieModel(name, n, std::move(dphi));
}

LieModel sl2_quotient() {
    // coframe (alpha, beta, eta) = (phi_1, phi_2, phi_3)
    int n = 3;
    std::vector<ExactForm> dphi(n, ExactForm(n));
    dphi[0] = ExactForm::monomial(n, {1, 3}, {}, GaussianRational(2));   // d alpha = -2 eta^alpha = 2 alpha^eta
    dphi[1] = ExactForm::monomial(n, {2, 3}, {}, GaussianRational(-2));  // d beta = 2 eta^beta = -2 beta^eta
    dphi[2] = ExactForm::monomial(n, {1, 2}, {}, GaussianRational(1));   // d eta = alpha^beta
    return LieModel("sl2", n, std::move(dphi));
}

std::optional<LieModel> by_name(const std::string& name) {
    if (name == "iwasawa" || name == "etabeta3") return etabeta(3);
    if (name == "sl2" || name == "sl2_quotient") return sl2_quotient();
    if (name.rfind("etabeta", 0) == 0) {
        const std::string tail = name.substr(7);
        if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
            int d = std::stoi(tail);
            if (d >= 3 && d % 2 == 1) return etabeta(d);
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Entry> list() {
    return {
        {"iwasawa", {"etabeta3"}, 3},
        {"etabeta5", {}, 5},
        {"etabeta7", {}, 7},
        {"sl2", {"sl2_quotient"}, 3},
    };
}

}  // namespace catalog

json model_to_json(const LieModel& m) {
    json d = json::array();
    for (int k = 1; k <= m.dimension(); ++k) {
        const ExactForm& f = m.coframe_differential(k);
        if (f.is_zero()) continue;
        json terms = json::array();
        for (const auto& [bd, comp] : f.components()) {
            for (const auto& [key, c] : comp) {
                json t;
                t["coeff"] = {{"re", to_fraction_string(c.re)}, {"im", to_fraction_string(c.im)}};
                if (bd == Bidegree{2, 0}) {
                    t["i"] = key.first[0];
                    t["j"] = key.first[1];
                    t["type"] = "20";
                } else if (bd == Bidegree{1, 1}) {
                    t["i"] = key.first[0];
                    t["j"] = key.second[0];
                    t["type"] = "11";
                } else {
                    t["i"] = key.second[0];
                    t["j"] = key.second[1];
                    t["type"] = "02";
                }
                terms.push_back(std::move(t));
            }
        }
        json entry;
        entry["k"] = k;
        entry["terms"] = std::move(terms);
        d.push_back(std::move(entry));
    }
    json out;
    out["name"] = m.name();
    out["n"] = m.dimension();
    out["d"] = std::move(d);
    return out;
}

LieModel model_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<ExactForm> dphi(n, ExactForm(n));
    for (const auto& entry : j.at("d")) {
        int k = entry.at("k").get<int>();
        if (k < 1 || k > n) throw std::invalid_argument("model_from_json: coframe index out of range");
        ExactForm f(n);
        for (const auto& t : entry.at("terms")) {
            GaussianRational c(parse_fraction(t.at("coeff").at("re").get<std::string>()),
                               parse_fraction(t.at("coeff").at("im").get<std::string>()));
            int i = t.at("i").get<int>();
            int jj = t.at("j").get<int>();
            std::string type = t.contains("type") ? t.at("type").get<std::string>() : "20";
            MultiIndex merged;
            if (type == "20") {
                int sign = mi::merge_sign({i}, {jj}, merged);
                if (sign == 0) continue;
                f.add_term(merged, {}, sign < 0 ? -c : c);
            } else if (type == "11") {
                f.add_term({i}, {jj}, c);
            } else if (type == "02") {
                int sign = mi::merge_sign({i}, {jj}, merged);
                if (sign == 0) continue;
                f.add_term({}, merged, sign < 0 ? -c : c);
            } else {
                throw std::invalid_argument("model_from_json: unknown term type " + type);
            }
        }
        dphi[k - 1] = std::move(f);
    }
    return LieModel(j.at("name").get<std::string>(), n, std::move(dphi));
}

LieModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    json j = json::parse(in);
    return model_from_json(j);
}

}  // namespace pkahler
