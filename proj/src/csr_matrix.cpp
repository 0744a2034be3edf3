#include "wcso/csr_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcso/errors.hpp"

namespace wcso {

CsrMatrix CsrMatrix::from_pattern(const std::vector<std::vector<std::size_t>>& neighbors) {
    CsrMatrix m;
    std::size_t n = neighbors.size();
    m.row_ptr_.assign(n + 1, 0);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::size_t> cols = neighbors[r];
        cols.push_back(r);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        m.row_ptr_[r + 1] = m.row_ptr_[r] + cols.size();
        m.cols_.insert(m.cols_.end(), cols.begin(), cols.end());
    }
    m.values_.assign(m.cols_.size(), 0.0);
    return m;
}

CsrMatrix CsrMatrix::from_triplets(std::size_t n, std::vector<Triplet> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    CsrMatrix m;
    m.row_ptr_.assign(n + 1, 0);
    for (std::size_t k = 0; k < triplets.size();) {
        std::size_t r = triplets[k].row;
        std::size_t c = triplets[k].col;
        double v = 0.0;
        while (k < triplets.size() && triplets[k].row == r && triplets[k].col == c) {
            v += triplets[k].value;
            ++k;
        }
        m.cols_.push_back(c);
        m.values_.push_back(v);
        m.row_ptr_[r + 1] = m.cols_.size();
    }
    for (std::size_t r = 0; r < n; ++r) {
        m.row_ptr_[r + 1] = std::max(m.row_ptr_[r + 1], m.row_ptr_[r]);
    }
    return m;
}

void CsrMatrix::add(std::size_t r, std::size_t c, double v) {
    auto begin = cols_.begin() + row_ptr_[r];
    auto end = cols_.begin() + row_ptr_[r + 1];
    auto it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) {
        throw Error("CsrMatrix::add: entry (" + std::to_string(r) + "," + std::to_string(c) +
                    ") is outside the pattern");
    }
    values_[it - cols_.begin()] += v;
}

double CsrMatrix::coeff(std::size_t r, std::size_t c) const {
    auto begin = cols_.begin() + row_ptr_[r];
    auto end = cols_.begin() + row_ptr_[r + 1];
    auto it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) {
        return 0.0;
    }
    return values_[it - cols_.begin()];
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    std::size_t n = size();
    for (std::size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            acc += values_[k] * x[cols_[k]];
        }
        y[r] = acc;
    }
}

std::vector<double> CsrMatrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y(size());
    multiply(x, y);
    return y;
}

std::vector<double> CsrMatrix::diagonal() const {
    std::size_t n = size();
    std::vector<double> d(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        d[r] = coeff(r, r);
    }
    return d;
}

void CsrMatrix::add_to_diagonal(std::span<const double> d) {
    for (std::size_t r = 0; r < size(); ++r) {
        add(r, r, d[r]);
    }
}

double CsrMatrix::symmetry_defect() const {
    double max_abs = 0.0;
    double max_diff = 0.0;
    for (std::size_t r = 0; r < size(); ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            max_abs = std::max(max_abs, std::abs(values_[k]));
            max_diff = std::max(max_diff, std::abs(values_[k] - coeff(cols_[k], r)));
        }
    }
    return max_abs == 0.0 ? 0.0 : max_diff / max_abs;
}

void CsrMatrix::eliminate_rows_cols(const std::vector<bool>& mask) {
    for (std::size_t r = 0; r < size(); ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            std::size_t c = cols_[k];
            if (mask[r] || mask[c]) {
                values_[k] = (r == c) ? 1.0 : 0.0;
            }
        }
    }
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

CgStats cg_solve(const CsrMatrix& A, std::span<const double> b, std::span<double> x,
                 const CgOptions& opts) {
    std::size_t n = A.size();
    if (opts.tol <= 0.0) {
        throw ValidationError("cg.tol", "tolerance must be positive");
    }
    std::size_t max_iter = opts.max_iter != 0 ? opts.max_iter : 10 * n;

    double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return {0, 0.0};
    }

    std::vector<double> inv_diag = A.diagonal();
    for (double& d : inv_diag) {
        if (d <= 0.0) {
            throw IllConditioned("cg_solve: nonpositive diagonal entry", 1.0);
        }
        d = 1.0 / d;
    }

    std::vector<double> r(n), z(n), p(n), Ap(n);
    A.multiply(x, Ap);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = b[i] - Ap[i];
        z[i] = inv_diag[i] * r[i];
        p[i] = z[i];
    }
    double rz = dot(r, z);
    double res = std::sqrt(dot(r, r)) / bnorm;
    double best_res = res;
    std::size_t best_iter = 0;

    std::size_t it = 0;
    while (res > opts.tol) {
        if (it >= max_iter) {
            throw NonConvergence("cg_solve: iteration budget exhausted after " +
                                     std::to_string(it) + " iterations",
                                 res);
        }
        if (it - best_iter > opts.stall_window) {
            throw IllConditioned("cg_solve: residual stagnated at " + std::to_string(res), res);
        }
        A.multiply(p, Ap);
        double pAp = dot(p, Ap);
        if (pAp <= 0.0) {
            throw IllConditioned("cg_solve: matrix is not positive definite", res);
        }
        double alpha = rz / pAp;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
            z[i] = inv_diag[i] * r[i];
        }
        double rz_next = dot(r, z);
        double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = z[i] + beta * p[i];
        }
        ++it;
        res = std::sqrt(dot(r, r)) / bnorm;
        if (res < best_res) {
            best_res = res;
            best_iter = it;
        }
    }
    return {it, res};
}

} // namespace wcso
