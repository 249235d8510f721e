#include "qlat/lattice.hpp"

#include "qlat/errors.hpp"

namespace qlat {

bool Lattice::contains(const Vec& x) const {
    RatMat rhs(1, dim());
    rhs.set_row(0, x);
    try {
        RatMat y = solve_left(basis_, rhs);
        for (size_t j = 0; j < y.cols(); ++j)
            if (!is_integer(y.at(0, j))) return false;
        return true;
    } catch (const InvalidInput&) {
        return false;  // outside the rational span
    }
}

bool Lattice::contains(const Lattice& other) const {
    try {
        RatMat y = solve_left(basis_, other.basis());
        for (size_t i = 0; i < y.rows(); ++i)
            for (size_t j = 0; j < y.cols(); ++j)
                if (!is_integer(y.at(i, j))) return false;
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

Rat Lattice::det_abs() const {
    if (!full_rank()) throw InvalidInput("det of non-full-rank lattice");
    return abs(basis_.det());
}

Lattice dual(const Lattice& l, const QuadSpace& s) {
    if (!l.full_rank()) throw InvalidInput("dual of non-full-rank lattice");
    if (l.dim() != s.dim()) throw InvalidInput("lattice/space dimension mismatch");
    const RatMat& b = l.basis();
    RatMat pairing = (b * s.gram() * b.transpose()).scaled(Rat(2));
    return Lattice::span(pairing.inverse() * b);
}

bool is_integral(const Lattice& l, const QuadSpace& s) {
    const RatMat& b = l.basis();
    RatMat gl = b * s.gram() * b.transpose();
    for (size_t i = 0; i < gl.rows(); ++i) {
        if (!is_integer(gl.at(i, i))) return false;
        for (size_t j = i + 1; j < gl.cols(); ++j)
            if (!is_integer(gl.at(i, j) * 2)) return false;
    }
    return true;
}

FracIdeal index_ideal(const Lattice& l, const Lattice& m, long bound) {
    if (!l.full_rank() || !m.full_rank() || l.dim() != m.dim())
        throw InvalidInput("index ideal needs full-rank lattices in one space");
    return FracIdeal(m.det_abs() / l.det_abs(), bound);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw InvalidInput("intersect dimension mismatch");
    // (u, w) with u*Ba + w*Bb = 0 gives the point u*Ba = -(w*Bb).
    RatMat stacked = a.basis().vstack(b.basis());
    RatMat ker = integer_row_kernel(stacked);
    RatMat pts(ker.rows(), a.dim());
    for (size_t i = 0; i < ker.rows(); ++i) {
        Vec u(a.rank());
        for (size_t j = 0; j < a.rank(); ++j) u[j] = ker.at(i, j);
        pts.set_row(i, mul_vec_mat(u, a.basis()));
    }
    return Lattice::span(pts);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw InvalidInput("sum dimension mismatch");
    return Lattice::span(a.basis().vstack(b.basis()));
}

Lattice scale(const Rat& c, const Lattice& l) {
    if (c == 0) throw InvalidInput("scaling a lattice by zero");
    return Lattice::span(l.basis().scaled(c));
}

Lattice intersect_with_subspace(const Lattice& l, const RatMat& wbasis) {
    if (wbasis.cols() != l.dim()) throw InvalidInput("subspace dimension mismatch");
    // x in span(W) iff x*C = 0 where the columns of C span the annihilator.
    RatMat c = rational_row_kernel(wbasis.transpose()).transpose();
    RatMat cond = l.basis() * c;
    RatMat ker = integer_row_kernel(cond);
    if (ker.rows() == 0) return Lattice::span(RatMat(0, wbasis.rows()));
    RatMat pts(ker.rows(), l.dim());
    for (size_t i = 0; i < ker.rows(); ++i)
        pts.set_row(i, mul_vec_mat(ker.row(i), l.basis()));
    return Lattice::span(solve_left(wbasis, pts));
}

FracIdeal pairing_ideal(const Vec& h, const Lattice& l, const QuadSpace& s, long bound) {
    Rat g(0);
    for (size_t i = 0; i < l.rank(); ++i) {
        Rat v = s.pair(h, l.basis().row(i)) * 2;
        if (v == 0) continue;
        if (g == 0) {
            g = abs(v);
        } else {
            // gcd over the rationals, valuation-wise minimum
            Int lhs = g.get_num() * v.get_den();
            Int rhs = v.get_num() * g.get_den();
            Int num;
            mpz_gcd(num.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
            Rat next(num, g.get_den() * v.get_den());
            next.canonicalize();
            g = abs(next);
        }
    }
    if (g == 0) throw ZeroPairing("vector pairs to zero with the whole lattice");
    return FracIdeal(g, bound);
}

}  // namespace qlat
