#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace pkahler {

using QVec = std::vector<mpq_class>;

/// Dense rational matrix, row-major. All elimination is exact; pivots are
/// chosen deterministically (first nonzero row in lexicographic column
/// order), so every derived object is reproducible bit for bit.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<mpq_class> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, mpq_class(0)) {}

    mpq_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static QMat from_columns(const std::vector<QVec>& columns);
    QVec column(int c) const;
    QVec multiply(const QVec& x) const;        // A x
    QVec multiply_left(const QVec& y) const;   // y^T A
};

int rank(QMat m);

/// Basis of {x : A x = 0}.
std::vector<QVec> kernel_basis(const QMat& m);

/// Either a particular solution of A x = b, or an inconsistency certificate
/// w with w^T A = 0 and w^T b != 0.
struct SolveResult {
    bool solvable = false;
    QVec x;
    QVec certificate;
};
SolveResult solve(const QMat& A, const QVec& b);

/// Indices of a maximal independent subset of the given vectors, scanned in
/// order (greedy, deterministic).
std::vector<int> independent_subset(const std::vector<QVec>& vecs);

/// Indices into `candidates` of vectors extending span(base) to
/// span(base + candidates); used to pick cohomology representatives.
std::vector<int> extend_basis(const std::vector<QVec>& base, const std::vector<QVec>& candidates);

/// Rows spanning the annihilator {w : w^T v = 0 for all v in span(vecs)}
/// inside the ambient dual space.
std::vector<QVec> annihilator(const std::vector<QVec>& vecs, int ambient_dim);

inline bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline mpq_class dot(const QVec& a, const QVec& b) {
    mpq_class s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace pkahler
