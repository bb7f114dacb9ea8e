#include "pkahler/exact_linalg.hpp"

#include <stdexcept>

namespace pkahler {

QMat QMat::from_columns(const std::vector<QVec>& columns) {
    if (columns.empty()) return QMat(0, 0);
    QMat m(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols; ++c) {
        if (static_cast<int>(columns[c].size()) != m.rows)
            throw std::invalid_argument("from_columns: ragged columns");
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
}

QVec QMat::column(int c) const {
    QVec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

QVec QMat::multiply(const QVec& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("multiply: size mismatch");
    QVec y(rows, mpq_class(0));
    for (int r = 0; r < rows; ++r) {
        mpq_class s(0);
        for (int c = 0; c < cols; ++c)
            if (sgn(at(r, c)) != 0) s += at(r, c) * x[c];
        y[r] = std::move(s);
    }
    return y;
}

QVec QMat::multiply_left(const QVec& y) const {
    if (static_cast<int>(y.size()) != rows) throw std::invalid_argument("multiply_left: size mismatch");
    QVec out(cols, mpq_class(0));
    for (int r = 0; r < rows; ++r) {
        if (sgn(y[r]) == 0) continue;
        for (int c = 0; c < cols; ++c)
            if (sgn(at(r, c)) != 0) out[c] += y[r] * at(r, c);
    }
    return out;
}

namespace {

struct Echelon {
    QMat R;                       // reduced rows
    std::vector<int> pivot_col;   // pivot column of each reduced row
    QMat E;                       // row operations: E * A = R (optional)
    bool track_ops = false;
};

Echelon reduce(QMat m, bool track_ops) {
    Echelon e;
    e.track_ops = track_ops;
    if (track_ops) {
        e.E = QMat(m.rows, m.rows);
        for (int r = 0; r < m.rows; ++r) e.E.at(r, r) = 1;
    }
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < m.rows; ++r)
            if (sgn(m.at(r, col)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(lead, c));
            if (track_ops)
                for (int c = 0; c < e.E.cols; ++c) std::swap(e.E.at(pivot, c), e.E.at(lead, c));
        }
        mpq_class inv = 1 / m.at(lead, col);
        for (int c = col; c < m.cols; ++c) m.at(lead, c) *= inv;
        if (track_ops)
            for (int c = 0; c < e.E.cols; ++c) e.E.at(lead, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead) continue;
            mpq_class f = m.at(r, col);
            if (sgn(f) == 0) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(lead, c);
            if (track_ops)
                for (int c = 0; c < e.E.cols; ++c) e.E.at(r, c) -= f * e.E.at(lead, c);
        }
        e.pivot_col.push_back(col);
        ++lead;
    }
    e.R = std::move(m);
    return e;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(reduce(std::move(m), false).pivot_col.size()); }

std::vector<QVec> kernel_basis(const QMat& m) {
    Echelon e = reduce(m, false);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(m.cols, mpq_class(0));
        v[free_col] = 1;
        for (size_t r = 0; r < e.pivot_col.size(); ++r)
            v[e.pivot_col[r]] = -e.R.at(static_cast<int>(r), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const QMat& A, const QVec& b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: size mismatch");
    Echelon e = reduce(A, true);
    QVec tb = e.E.multiply(b);
    SolveResult res;
    int r0 = static_cast<int>(e.pivot_col.size());
    for (int r = r0; r < A.rows; ++r) {
        if (sgn(tb[r]) != 0) {
            res.solvable = false;
            res.certificate = e.E.column(0);  // placeholder, replaced below
            QVec w(A.rows);
            for (int c = 0; c < A.rows; ++c) w[c] = e.E.at(r, c);
            res.certificate = std::move(w);
            return res;
        }
    }
    res.solvable = true;
    res.x.assign(A.cols, mpq_class(0));
    for (int r = 0; r < r0; ++r) res.x[e.pivot_col[r]] = tb[r];
    return res;
}

std::vector<int> independent_subset(const std::vector<QVec>& vecs) {
    // Incremental reduced echelon: kept rows are zero at each other's lead
    // columns, so reducing a candidate against them in any order is exact.
    std::vector<int> picked;
    std::vector<QVec> rows;
    std::vector<int> leads;
    for (int i = 0; i < static_cast<int>(vecs.size()); ++i) {
        QVec v = vecs[i];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (sgn(v[leads[r]]) == 0) continue;
            mpq_class f = v[leads[r]] / rows[r][leads[r]];
            for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
        }
        int lead = -1;
        for (size_t c = 0; c < v.size(); ++c)
            if (sgn(v[c]) != 0) {
                lead = static_cast<int>(c);
                break;
            }
        if (lead < 0) continue;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (sgn(rows[r][lead]) == 0) continue;
            mpq_class f = rows[r][lead] / v[lead];
            for (size_t c = 0; c < v.size(); ++c) rows[r][c] -= f * v[c];
        }
        picked.push_back(i);
        rows.push_back(std::move(v));
        leads.push_back(lead);
    }
    return picked;
}

std::vector<int> extend_basis(const std::vector<QVec>& base, const std::vector<QVec>& candidates) {
    std::vector<QVec> all = base;
    all.insert(all.end(), candidates.begin(), candidates.end());
    std::vector<int> idx = independent_subset(all);
    std::vector<int> out;
    for (int i : idx)
        if (i >= static_cast<int>(base.size())) out.push_back(i - static_cast<int>(base.size()));
    return out;
}

std::vector<QVec> annihilator(const std::vector<QVec>& vecs, int ambient_dim) {
    // w^T v = 0 for all v  <=>  M w = 0 where rows of M are the vectors
    QMat m(static_cast<int>(vecs.size()), ambient_dim);
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(vecs[r].size()) != ambient_dim)
            throw std::invalid_argument("annihilator: dimension mismatch");
        for (int c = 0; c < ambient_dim; ++c) m.at(r, c) = vecs[r][c];
    }
    return kernel_basis(m);
}

}  // namespace pkahler
