#ifndef WCSO_CSR_MATRIX_HPP
#define WCSO_CSR_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace wcso {

// Symmetric sparse matrix in compressed sparse row form. Column indices are
// sorted within each row and the pattern always contains the diagonal.
class CsrMatrix {
public:
    CsrMatrix() = default;

    // Builds the matrix from an adjacency pattern: row k gets columns
    // neighbors[k] (self is added if missing). Values start at zero.
    static CsrMatrix from_pattern(const std::vector<std::vector<std::size_t>>& neighbors);

    // Builds from (row, col, value) triplets; duplicates are summed.
    struct Triplet {
        std::size_t row;
        std::size_t col;
        double value;
    };
    static CsrMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets);

    std::size_t size() const { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
    std::size_t nnz() const { return cols_.size(); }

    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::size_t>& cols() const { return cols_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    // Accumulates v into entry (r, c); the entry must exist in the pattern.
    void add(std::size_t r, std::size_t c, double v);
    double coeff(std::size_t r, std::size_t c) const;

    void multiply(std::span<const double> x, std::span<double> y) const;
    std::vector<double> multiply(const std::vector<double>& x) const;

    std::vector<double> diagonal() const;
    void add_to_diagonal(std::span<const double> d);

    // max_{ij} |a_ij - a_ji| relative to max |a_ij|; 0 for the empty matrix.
    double symmetry_defect() const;

    // Zeroes rows and columns flagged in `mask` and puts 1 on their diagonal.
    void eliminate_rows_cols(const std::vector<bool>& mask);

private:
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> cols_;
    std::vector<double> values_;
};

struct CgOptions {
    double tol = 1e-10;      // relative residual target |Ax-b|/|b|
    std::size_t max_iter = 0; // 0 means 10*n
    std::size_t stall_window = 250;
};

struct CgStats {
    std::size_t iterations = 0;
    double relative_residual = 0.0;
};

// Jacobi-preconditioned conjugate gradients for SPD systems. `x` carries the
// initial guess on entry. Throws NonConvergence when the budget runs out and
// IllConditioned when the residual stalls for `stall_window` iterations.
CgStats cg_solve(const CsrMatrix& A, std::span<const double> b, std::span<double> x,
                 const CgOptions& opts = {});

} // namespace wcso

#endif
