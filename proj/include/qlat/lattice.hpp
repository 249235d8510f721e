#pragma once

#include <string>

#include "qlat/ideal.hpp"
#include "qlat/matrix.hpp"
#include "qlat/qspace.hpp"

namespace qlat {

// Finitely generated Z-module in Q^n, held as a canonical Hermite-form
// basis matrix (rows are basis vectors). Equality of lattices is equality
// of canonical forms.
class Lattice {
public:
    Lattice() = default;

    // Z-module generated by the rows (dependent generators welcome).
    static Lattice span(const RatMat& gens) { return Lattice(hnf_basis(gens)); }
    static Lattice standard(size_t n) { return Lattice(RatMat::identity(n)); }

    const RatMat& basis() const { return basis_; }
    size_t rank() const { return basis_.rows(); }
    size_t dim() const { return basis_.cols(); }
    bool full_rank() const { return rank() == dim(); }

    bool contains(const Vec& x) const;
    bool contains(const Lattice& other) const;

    Rat det_abs() const;  // |det| of the basis, full-rank only

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return basis_ != o.basis_; }

    std::string str() const { return basis_.str(); }

private:
    explicit Lattice(RatMat basis) : basis_(std::move(basis)) {}
    RatMat basis_;
};

// {x : 2*phi(x, L) integral}; an involution on full-rank lattices.
Lattice dual(const Lattice& l, const QuadSpace& s);

// phi[x] integral for all x in L.
bool is_integral(const Lattice& l, const QuadSpace& s);

// |det(basis_M) / det(basis_L)| * Z, the determinant ideal of maps
// carrying L into M.
FracIdeal index_ideal(const Lattice& l, const Lattice& m, long bound = kDefaultFactorBound);

Lattice intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice scale(const Rat& c, const Lattice& l);
inline Lattice scale(const FracIdeal& a, const Lattice& l) { return scale(a.generator(), l); }

// {x in L : x in span(W)} written in W-coordinates; rows of wbasis span
// the subspace.
Lattice intersect_with_subspace(const Lattice& l, const RatMat& wbasis);

// Ideal generated by the values 2*phi(h, x), x in L. Throws ZeroPairing
// when h is orthogonal to all of L.
FracIdeal pairing_ideal(const Vec& h, const Lattice& l, const QuadSpace& s,
                        long bound = kDefaultFactorBound);

}  // namespace qlat
