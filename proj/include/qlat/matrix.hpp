#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qlat/rational.hpp"

namespace qlat {

// Dense rational matrix, row-major. Small sizes only (n <= 16 or so);
// everything is exact.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMat identity(size_t n);
    static RatMat from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const;
    void set_row(size_t i, const Vec& v);

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat scaled(const Rat& c) const;
    RatMat transpose() const;

    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    bool is_symmetric() const;
    bool is_zero() const;

    Rat det() const;       // square only
    RatMat inverse() const;  // square nonsingular only

    RatMat vstack(const RatMat& below) const;

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

Vec mul_vec_mat(const Vec& v, const RatMat& m);
Rat dot(const Vec& a, const Vec& b);

// Canonical basis of the Z-module generated by the rows: clear the common
// denominator, take the integer row Hermite normal form (positive pivots,
// entries above a pivot reduced into [0, pivot)), drop zero rows, divide
// the denominator back out. Idempotent.
RatMat hnf_basis(const RatMat& gens);

// Basis (canonical, saturated) of {u in Z^rows : u*m = 0}.
RatMat integer_row_kernel(const RatMat& m);

// Basis of the rational left null space {u : u*m = 0}, returned as the
// canonical basis of its saturated integer lattice.
inline RatMat rational_row_kernel(const RatMat& m) { return integer_row_kernel(m); }

// Solves y*basis = x for each row x of rhs; basis must have full row rank.
// Throws InvalidInput when some row is outside the row span.
RatMat solve_left(const RatMat& basis, const RatMat& rhs);

size_t rank(const RatMat& m);

}  // namespace qlat
