#include "qlat/matrix.hpp"

#include <algorithm>

#include "qlat/errors.hpp"

namespace qlat {

RatMat RatMat::identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return RatMat(0, 0);
    RatMat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InvalidInput("ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec RatMat::row(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void RatMat::set_row(size_t i, const Vec& v) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum shape mismatch");
    RatMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix diff shape mismatch");
    RatMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Rat RatMat::det() const {
    if (rows_ != cols_) throw InvalidInput("det of non-square matrix");
    RatMat m = *this;
    Rat d(1);
    for (size_t c = 0; c < cols_; ++c) {
        size_t piv = c;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) return Rat(0);
        if (piv != c) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
    size_t n = rows_;
    RatMat m = *this;
    RatMat inv = identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) throw InvalidInput("singular matrix");
        if (piv != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Rat f = m.at(c, c);
        for (size_t j = 0; j < n; ++j) {
            m.at(c, j) /= f;
            inv.at(c, j) /= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m.at(i, c) == 0) continue;
            Rat g = m.at(i, c);
            for (size_t j = 0; j < n; ++j) {
                m.at(i, j) -= g * m.at(c, j);
                inv.at(i, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

RatMat RatMat::vstack(const RatMat& below) const {
    if (rows_ == 0) return below;
    if (below.rows() == 0) return *this;
    if (cols_ != below.cols()) throw InvalidInput("vstack shape mismatch");
    RatMat r(rows_ + below.rows(), cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < below.rows(); ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
    return r;
}

std::string RatMat::str() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += rat_str(at(i, j));
        }
    }
    out += "]";
    return out;
}

Vec mul_vec_mat(const Vec& v, const RatMat& m) {
    if (v.size() != m.rows()) throw InvalidInput("vector-matrix shape mismatch");
    Vec r(m.cols(), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("dot shape mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

using IntMat = std::vector<std::vector<Int>>;

// Row Hermite normal form by Euclidean reduction, column by column.
// If transform != nullptr it receives a unimodular U with U*A_in = H.
void hnf_in_place(IntMat& a, IntMat* transform) {
    size_t m = a.size();
    if (m == 0) return;
    size_t n = a[0].size();
    IntMat u;
    if (transform) {
        u.assign(m, std::vector<Int>(m, 0));
        for (size_t i = 0; i < m; ++i) u[i][i] = 1;
    }
    auto row_sub = [&](size_t i, size_t r, const Int& q) {
        if (q == 0) return;
        for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        if (transform)
            for (size_t j = 0; j < m; ++j) u[i][j] -= q * u[r][j];
    };
    auto row_swap = [&](size_t i, size_t r) {
        if (i == r) return;
        std::swap(a[i], a[r]);
        if (transform) std::swap(u[i], u[r]);
    };
    auto row_negate = [&](size_t i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
        if (transform)
            for (size_t j = 0; j < m; ++j) u[i][j] = -u[i][j];
    };

    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        // Euclidean elimination below row r in column c.
        bool have_pivot = false;
        while (true) {
            size_t best = m;
            for (size_t i = r; i < m; ++i) {
                if (a[i][c] == 0) continue;
                if (best == m || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == m) break;  // column has no pivot
            have_pivot = true;
            row_swap(r, best);
            if (a[r][c] < 0) row_negate(r);
            bool clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                // round-to-nearest quotient keeps entries small
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a[i][c].get_mpz_t(),
                            a[r][c].get_mpz_t());
                if (2 * rem > a[r][c]) q += 1;
                row_sub(i, r, q);
                if (a[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (have_pivot) {
            // reduce the entries above the pivot into [0, pivot)
            for (size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                row_sub(i, r, q);
            }
            ++r;
        }
    }
    if (transform) *transform = u;
}

Int lcm_of_denominators(const RatMat& m) {
    Int d(1);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    return d;
}

IntMat cleared(const RatMat& m, const Int& d) {
    IntMat a(m.rows(), std::vector<Int>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            Rat x = m.at(i, j) * Rat(d);
            a[i][j] = x.get_num();  // denominator is 1 by construction
        }
    return a;
}

}  // namespace

RatMat hnf_basis(const RatMat& gens) {
    if (gens.rows() == 0) return RatMat(0, gens.cols());
    Int d = lcm_of_denominators(gens);
    IntMat a = cleared(gens, d);
    hnf_in_place(a, nullptr);
    std::vector<Vec> rows;
    Rat dr(d);
    for (const auto& r : a) {
        bool zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
        if (zero) continue;
        Vec v(r.size());
        for (size_t j = 0; j < r.size(); ++j) v[j] = Rat(r[j]) / dr;
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return RatMat(0, gens.cols());
    return RatMat::from_rows(rows);
}

RatMat integer_row_kernel(const RatMat& m) {
    if (m.rows() == 0) return RatMat(0, 0);
    Int d = lcm_of_denominators(m);
    IntMat a = cleared(m, d);
    IntMat u;
    hnf_in_place(a, &u);
    std::vector<Vec> rows;
    for (size_t i = 0; i < a.size(); ++i) {
        bool zero = std::all_of(a[i].begin(), a[i].end(), [](const Int& x) { return x == 0; });
        if (!zero) continue;
        Vec v(u[i].size());
        for (size_t j = 0; j < v.size(); ++j) v[j] = Rat(u[i][j]);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return RatMat(0, m.rows());
    return hnf_basis(RatMat::from_rows(rows));
}

RatMat solve_left(const RatMat& basis, const RatMat& rhs) {
    if (basis.cols() != rhs.cols()) throw InvalidInput("solve_left shape mismatch");
    size_t r = basis.rows(), n = basis.cols();
    // Row-reduce [basis | I] to find pivot columns and the reduction map.
    RatMat work = basis;
    RatMat ops = RatMat::identity(r);
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < n && row < r; ++c) {
        size_t piv = row;
        while (piv < r && work.at(piv, c) == 0) ++piv;
        if (piv == r) continue;
        for (size_t j = 0; j < n; ++j) std::swap(work.at(piv, j), work.at(row, j));
        for (size_t j = 0; j < r; ++j) std::swap(ops.at(piv, j), ops.at(row, j));
        Rat f = work.at(row, c);
        for (size_t j = 0; j < n; ++j) work.at(row, j) /= f;
        for (size_t j = 0; j < r; ++j) ops.at(row, j) /= f;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || work.at(i, c) == 0) continue;
            Rat g = work.at(i, c);
            for (size_t j = 0; j < n; ++j) work.at(i, j) -= g * work.at(row, j);
            for (size_t j = 0; j < r; ++j) ops.at(i, j) -= g * ops.at(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    if (row != r) throw InvalidInput("solve_left: basis rows are dependent");
    // work = ops * basis is reduced row echelon; y = x_pivots * ops solves
    // y*basis = x when x lies in the row span.
    RatMat xp(rhs.rows(), r);
    for (size_t i = 0; i < rhs.rows(); ++i)
        for (size_t k = 0; k < r; ++k) xp.at(i, k) = rhs.at(i, pivots[k]);
    RatMat y = xp * ops;
    if (y * basis != rhs) throw InvalidInput("solve_left: row outside span");
    return y;
}

size_t rank(const RatMat& m) {
    RatMat work = m;
    size_t r = 0;
    for (size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        size_t piv = r;
        while (piv < work.rows() && work.at(piv, c) == 0) ++piv;
        if (piv == work.rows()) continue;
        for (size_t j = 0; j < work.cols(); ++j) std::swap(work.at(piv, j), work.at(r, j));
        for (size_t i = r + 1; i < work.rows(); ++i) {
            if (work.at(i, c) == 0) continue;
            Rat f = work.at(i, c) / work.at(r, c);
            for (size_t j = c; j < work.cols(); ++j) work.at(i, j) -= f * work.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace qlat
