#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qlat/ideal.hpp"
#include "qlat/lattice.hpp"
#include "qlat/matrix.hpp"
#include "qlat/qspace.hpp"

namespace qlat {

class CliffordAlgebra;

// Element of a Clifford algebra: dense coefficient vector over the 2^n
// basis words e_S, S a subset of the generators in increasing order.
struct CliffordElt {
    const CliffordAlgebra* alg = nullptr;
    Vec c;

    bool is_zero() const;
    Rat scalar_part() const { return c.at(0); }
    bool operator==(const CliffordElt& o) const { return c == o.c; }
    bool operator!=(const CliffordElt& o) const { return c != o.c; }

    CliffordElt operator+(const CliffordElt& o) const;
    CliffordElt operator-(const CliffordElt& o) const;
    CliffordElt operator*(const CliffordElt& o) const;  // algebra product
    CliffordElt scaled(const Rat& f) const;

    std::string str() const;
};

// 2^n-dimensional Clifford algebra of a (possibly non-orthogonal) Gram
// matrix: x*x = form(x) for vectors x. Product and reversal tables are
// precomputed; the object is immutable afterwards.
class CliffordAlgebra {
public:
    explicit CliffordAlgebra(RatMat gram);

    size_t gens() const { return n_; }
    size_t dim() const { return size_t(1) << n_; }
    const RatMat& gram() const { return gram_; }
    const QuadSpace& space() const { return space_; }

    CliffordElt zero() const;
    CliffordElt unit() const;
    CliffordElt generator(size_t i) const;
    CliffordElt from_vector(const Vec& x) const;  // degree-1 element
    CliffordElt from_coeffs(Vec coeffs) const;

    CliffordElt mul(const CliffordElt& x, const CliffordElt& y) const;
    // canonical involution: reversal of basis words
    CliffordElt involute(const CliffordElt& x) const;

    std::vector<unsigned> even_masks() const;

private:
    using Sparse = std::vector<std::pair<unsigned, Rat>>;
    Sparse mul_word_gen(unsigned mask, size_t j) const;

    size_t n_;
    RatMat gram_;
    QuadSpace space_;
    std::vector<std::vector<Sparse>> table_;  // [S][T] -> product of words
    std::vector<Sparse> reversal_;            // [S] -> reversed word
};

using AlgPtr = std::shared_ptr<const CliffordAlgebra>;

// Z-module of Clifford elements (coefficient vectors in full 2^n
// coordinates), closed under multiplication when built by the closures
// below.
struct CliffordOrder {
    AlgPtr alg;
    Lattice module;  // canonical basis in 2^n coordinates
    bool contains_one = false;

    bool operator==(const CliffordOrder& o) const { return module == o.module; }
};

// Subring generated by the integers and an integral lattice N: module
// closure of {1} and N under products. Throws NotIntegral; the fixpoint
// is capped and raises ClosureDiverged if it fails to stabilize.
CliffordOrder generated_order(const Lattice& n, const AlgPtr& alg);

// Even part of generated_order: intersection with the even-degree
// coordinate subspace.
CliffordOrder even_order(const Lattice& n, const AlgPtr& alg);

// Quaternion data of the even Clifford algebra of a ternary space: the
// volume element xi of an orthogonal basis, its norm, the trace-zero part
// of the even algebra, and the norm-form Gram on even coordinates.
struct QuatStructure {
    AlgPtr alg;                       // 3 generators
    std::vector<unsigned> even_masks;  // the 4 even-degree words
    CliffordElt vol;                  // k1*k2*k3
    Rat vol_norm;                     // vol * vol^* (a scalar)
    RatMat trace_zero_basis;          // 3x4, in even coordinates
    RatMat nu_gram;                   // 4x4 Gram of the norm form

    // even coordinates <-> full coordinates
    Vec to_even(const CliffordElt& x) const;
    CliffordElt from_even(const Vec& v) const;
};

QuatStructure quaternionize(const QuadSpace& psi);

// x (in the ternary space's coordinates) -> x * vol, an element of the
// trace-zero part of the even algebra.
CliffordElt embed_trace_zero(const Vec& x, const QuatStructure& qs);

// Inverse of embed_trace_zero; the argument must be even with
// involute(y) = -y, else NotInOddPart.
Vec extract_vector(const CliffordElt& y, const QuatStructure& qs);

// Norm of an even element: y * y^* read off the scalar coordinate.
Rat quat_norm(const CliffordElt& y);

// Dual of a rank-4 order with respect to twice the norm form; returned in
// even coordinates.
Lattice order_dual(const CliffordOrder& o, const QuatStructure& qs);

// Positive square root ideal of [dual o / o]; throws NotASquare.
FracIdeal order_discriminant(const CliffordOrder& o, const QuatStructure& qs);

// alpha^{-1} x alpha for invertible even alpha (nonzero norm); throws
// NotInvertible.
CliffordElt conjugate_by(const CliffordElt& alpha, const CliffordElt& x);

}  // namespace qlat
