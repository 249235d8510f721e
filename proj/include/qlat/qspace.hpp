#pragma once

#include <utility>
#include <vector>

#include "qlat/matrix.hpp"
#include "qlat/rational.hpp"

namespace qlat {

// Nondegenerate quadratic space over the rationals: the Gram matrix of a
// symmetric bilinear form against a fixed basis, row vectors acting on the
// right. form(x) is the quadratic value, pair(x, y) the bilinear one.
class QuadSpace {
public:
    explicit QuadSpace(RatMat gram);

    size_t dim() const { return gram_.rows(); }
    const RatMat& gram() const { return gram_; }

    Rat pair(const Vec& x, const Vec& y) const;
    Rat form(const Vec& x) const { return pair(x, x); }

private:
    RatMat gram_;
};

// Basis of the orthogonal complement of h together with the restricted
// Gram matrix. Throws IsotropicVector when form(h) = 0 (the restriction
// would be degenerate).
std::pair<RatMat, QuadSpace> complement_basis(const QuadSpace& s, const Vec& h);

// Congruence diagonalization: returns (T, d) with T*G*T^T = diag(d),
// every d[i] nonzero. Rows of T are an orthogonal basis.
std::pair<RatMat, Vec> orthogonalize(const QuadSpace& s);

}  // namespace qlat
