#include "qlat/qspace.hpp"

#include "qlat/errors.hpp"

namespace qlat {

QuadSpace::QuadSpace(RatMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw InvalidInput("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw InvalidInput("Gram matrix must be symmetric");
    if (gram_.det() == 0) throw InvalidInput("degenerate form");
}

Rat QuadSpace::pair(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw InvalidInput("vector dimension mismatch");
    return dot(mul_vec_mat(x, gram_), y);
}

std::pair<RatMat, QuadSpace> complement_basis(const QuadSpace& s, const Vec& h) {
    if (s.form(h) == 0) throw IsotropicVector("complement of an isotropic vector");
    // x is orthogonal to h iff x * (G h^T) = 0.
    RatMat col(s.dim(), 1);
    Vec gh = mul_vec_mat(h, s.gram());
    for (size_t i = 0; i < s.dim(); ++i) col.at(i, 0) = gh[i];
    RatMat w = rational_row_kernel(col);
    RatMat psi = w * s.gram() * w.transpose();
    return {w, QuadSpace(psi)};
}

std::pair<RatMat, Vec> orthogonalize(const QuadSpace& s) {
    size_t n = s.dim();
    RatMat t = RatMat::identity(n);
    const RatMat& g = s.gram();
    auto pairing = [&](size_t i, size_t j) { return dot(mul_vec_mat(t.row(i), g), t.row(j)); };
    for (size_t i = 0; i < n; ++i) {
        if (pairing(i, i) == 0) {
            bool fixed = false;
            for (size_t j = i + 1; j < n && !fixed; ++j)
                if (pairing(j, j) != 0) {
                    for (size_t c = 0; c < n; ++c) std::swap(t.at(i, c), t.at(j, c));
                    fixed = true;
                }
            if (!fixed) {
                // all remaining diagonal values vanish; there is a nonzero
                // pairing by nondegeneracy, and adding that row makes the
                // diagonal value 2*pair != 0
                for (size_t j = i + 1; j < n && !fixed; ++j)
                    if (pairing(i, j) != 0) {
                        for (size_t c = 0; c < n; ++c) t.at(i, c) += t.at(j, c);
                        fixed = true;
                    }
            }
            if (!fixed) throw InvalidInput("degenerate form in orthogonalize");
        }
        Rat d = pairing(i, i);
        for (size_t j = i + 1; j < n; ++j) {
            Rat f = pairing(j, i) / d;
            if (f == 0) continue;
            for (size_t c = 0; c < n; ++c) t.at(j, c) -= f * t.at(i, c);
        }
    }
    Vec diag(n);
    for (size_t i = 0; i < n; ++i) diag[i] = pairing(i, i);
    return {t, diag};
}

}  // namespace qlat
