#include "qlat/clifford.hpp"

#include <algorithm>

#include "qlat/errors.hpp"

namespace qlat {

namespace {

int popcount(unsigned m) { return __builtin_popcount(m); }

int top_bit(unsigned m) { return 31 - __builtin_clz(m); }

}  // namespace

bool CliffordElt::is_zero() const {
    for (const Rat& x : c)
        if (x != 0) return false;
    return true;
}

CliffordElt CliffordElt::operator+(const CliffordElt& o) const {
    CliffordElt r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

CliffordElt CliffordElt::operator-(const CliffordElt& o) const {
    CliffordElt r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

CliffordElt CliffordElt::operator*(const CliffordElt& o) const { return alg->mul(*this, o); }

CliffordElt CliffordElt::scaled(const Rat& f) const {
    CliffordElt r = *this;
    for (auto& x : r.c) x *= f;
    return r;
}

std::string CliffordElt::str() const { return vec_str(c); }

// e_mask * e_j as a sparse combination of basis words, via
// e_i e_j + e_j e_i = 2 phi(e_i, e_j) and e_j e_j = phi[e_j].
CliffordAlgebra::Sparse CliffordAlgebra::mul_word_gen(unsigned mask, size_t j) const {
    if (mask == 0) return {{1u << j, Rat(1)}};
    int last = top_bit(mask);
    unsigned rest = mask ^ (1u << last);
    if (static_cast<size_t>(last) < j) return {{mask | (1u << j), Rat(1)}};
    if (static_cast<size_t>(last) == j) {
        Rat f = gram_.at(j, j);
        if (f == 0) return {};
        return {{rest, f}};
    }
    // last > j: e_rest (e_last e_j) = 2 phi(last, j) e_rest - (e_rest e_j) e_last
    Sparse out;
    Rat twice = gram_.at(last, j) * 2;
    if (twice != 0) out.push_back({rest, twice});
    for (const auto& [m, coeff] : mul_word_gen(rest, j)) {
        // every word in e_rest e_j has top bit < last, so appending e_last
        // is plain concatenation
        out.push_back({m | (1u << last), -coeff});
    }
    return out;
}

CliffordAlgebra::CliffordAlgebra(RatMat gram)
    : n_(gram.rows()), gram_(gram), space_(std::move(gram)) {
    if (n_ > 5) throw UnsupportedDimension("Clifford algebra limited to 5 generators");
    size_t dim = size_t(1) << n_;

    auto fold_gen = [this](const Sparse& acc, size_t j) {
        Sparse next;
        for (const auto& [m, coeff] : acc)
            for (const auto& [m2, c2] : mul_word_gen(m, j)) {
                bool merged = false;
                for (auto& [mm, cc] : next)
                    if (mm == m2) {
                        cc += coeff * c2;
                        merged = true;
                        break;
                    }
                if (!merged) next.push_back({m2, coeff * c2});
            }
        Sparse clean;
        for (auto& [m, coeff] : next)
            if (coeff != 0) clean.push_back({m, coeff});
        return clean;
    };

    table_.assign(dim, std::vector<Sparse>(dim));
    for (unsigned s = 0; s < dim; ++s)
        for (unsigned t = 0; t < dim; ++t) {
            Sparse acc = {{s, Rat(1)}};
            for (size_t j = 0; j < n_; ++j)
                if (t & (1u << j)) acc = fold_gen(acc, j);
            table_[s][t] = std::move(acc);
        }

    reversal_.assign(dim, Sparse{});
    for (unsigned s = 0; s < dim; ++s) {
        Sparse acc = {{0u, Rat(1)}};
        for (int j = int(n_) - 1; j >= 0; --j)
            if (s & (1u << j)) acc = fold_gen(acc, size_t(j));
        reversal_[s] = std::move(acc);
    }
}

CliffordElt CliffordAlgebra::zero() const { return CliffordElt{this, Vec(dim(), Rat(0))}; }

CliffordElt CliffordAlgebra::unit() const {
    CliffordElt e = zero();
    e.c[0] = 1;
    return e;
}

CliffordElt CliffordAlgebra::generator(size_t i) const {
    CliffordElt e = zero();
    e.c[1u << i] = 1;
    return e;
}

CliffordElt CliffordAlgebra::from_vector(const Vec& x) const {
    if (x.size() != n_) throw InvalidInput("vector length mismatch");
    CliffordElt e = zero();
    for (size_t i = 0; i < n_; ++i) e.c[1u << i] = x[i];
    return e;
}

CliffordElt CliffordAlgebra::from_coeffs(Vec coeffs) const {
    if (coeffs.size() != dim()) throw InvalidInput("coefficient length mismatch");
    return CliffordElt{this, std::move(coeffs)};
}

CliffordElt CliffordAlgebra::mul(const CliffordElt& x, const CliffordElt& y) const {
    if (x.alg != this || y.alg != this) throw InvalidInput("elements of a different algebra");
    CliffordElt r = zero();
    size_t d = dim();
    for (unsigned s = 0; s < d; ++s) {
        if (x.c[s] == 0) continue;
        for (unsigned t = 0; t < d; ++t) {
            if (y.c[t] == 0) continue;
            Rat f = x.c[s] * y.c[t];
            for (const auto& [m, coeff] : table_[s][t]) r.c[m] += f * coeff;
        }
    }
    return r;
}

CliffordElt CliffordAlgebra::involute(const CliffordElt& x) const {
    if (x.alg != this) throw InvalidInput("element of a different algebra");
    CliffordElt r = zero();
    for (unsigned s = 0; s < dim(); ++s) {
        if (x.c[s] == 0) continue;
        for (const auto& [m, coeff] : reversal_[s]) r.c[m] += x.c[s] * coeff;
    }
    return r;
}

std::vector<unsigned> CliffordAlgebra::even_masks() const {
    std::vector<unsigned> out;
    for (unsigned m = 0; m < dim(); ++m)
        if (popcount(m) % 2 == 0) out.push_back(m);
    return out;
}

namespace {

constexpr int kClosureCap = 16;

Lattice closure_under_products(const RatMat& gens, const AlgPtr& alg) {
    Lattice cur = Lattice::span(gens);
    for (int round = 0; round < kClosureCap; ++round) {
        const RatMat& b = cur.basis();
        std::vector<Vec> rows;
        for (size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
        size_t base = rows.size();
        for (size_t i = 0; i < base; ++i) {
            CliffordElt x = alg->from_coeffs(rows[i]);
            for (size_t j = 0; j < base; ++j) {
                CliffordElt p = alg->mul(x, alg->from_coeffs(rows[j]));
                rows.push_back(p.c);
            }
        }
        Lattice next = Lattice::span(RatMat::from_rows(rows));
        if (next == cur) return cur;
        cur = next;
    }
    throw ClosureDiverged("order closure did not stabilize");
}

}  // namespace

CliffordOrder generated_order(const Lattice& n, const AlgPtr& alg) {
    if (n.dim() != alg->gens()) throw InvalidInput("lattice/algebra dimension mismatch");
    if (!is_integral(n, alg->space())) throw NotIntegral("order of a non-integral lattice");
    std::vector<Vec> gens;
    gens.push_back(alg->unit().c);
    for (size_t i = 0; i < n.rank(); ++i) gens.push_back(alg->from_vector(n.basis().row(i)).c);
    Lattice module = closure_under_products(RatMat::from_rows(gens), alg);
    return CliffordOrder{alg, module, true};
}

CliffordOrder even_order(const Lattice& n, const AlgPtr& alg) {
    CliffordOrder full = generated_order(n, alg);
    auto evens = alg->even_masks();
    RatMat sub(evens.size(), alg->dim());
    for (size_t i = 0; i < evens.size(); ++i) sub.at(i, evens[i]) = 1;
    Lattice inter = intersect_with_subspace(full.module, sub);
    // back to full coordinates
    Lattice module = Lattice::span(inter.basis() * sub);
    CliffordOrder out{alg, module, module.contains(alg->unit().c)};
    return out;
}

Vec QuatStructure::to_even(const CliffordElt& x) const {
    Vec v(even_masks.size());
    Vec rest = x.c;
    for (size_t i = 0; i < even_masks.size(); ++i) {
        v[i] = x.c[even_masks[i]];
        rest[even_masks[i]] = 0;
    }
    for (const Rat& r : rest)
        if (r != 0) throw InvalidInput("element has odd-degree support");
    return v;
}

CliffordElt QuatStructure::from_even(const Vec& v) const {
    if (v.size() != even_masks.size()) throw InvalidInput("even coordinate length mismatch");
    CliffordElt x = alg->zero();
    for (size_t i = 0; i < even_masks.size(); ++i) x.c[even_masks[i]] = v[i];
    return x;
}

QuatStructure quaternionize(const QuadSpace& psi) {
    if (psi.dim() != 3) throw UnsupportedDimension("quaternion structure needs dimension 3");
    auto alg = std::make_shared<const CliffordAlgebra>(psi.gram());
    QuatStructure qs;
    qs.alg = alg;
    qs.even_masks = alg->even_masks();

    auto [t, diag] = orthogonalize(psi);
    CliffordElt k1 = alg->from_vector(t.row(0));
    CliffordElt k2 = alg->from_vector(t.row(1));
    CliffordElt k3 = alg->from_vector(t.row(2));
    qs.vol = alg->mul(alg->mul(k1, k2), k3);
    qs.vol_norm = diag[0] * diag[1] * diag[2];

    // sanity: vol * vol^* is the expected scalar
    CliffordElt nn = alg->mul(qs.vol, alg->involute(qs.vol));
    CliffordElt expect = alg->unit().scaled(qs.vol_norm);
    if (nn != expect) throw Error("volume element norm mismatch");

    // trace-zero part of the even algebra: kernel of x + x^* on even
    // coordinates
    size_t e = qs.even_masks.size();
    RatMat sym(e, e);
    for (size_t i = 0; i < e; ++i) {
        CliffordElt basis_elt = qs.from_even([&] {
            Vec v(e, Rat(0));
            v[i] = 1;
            return v;
        }());
        CliffordElt s = basis_elt + alg->involute(basis_elt);
        Vec row = qs.to_even(s);
        sym.set_row(i, row);
    }
    qs.trace_zero_basis = rational_row_kernel(sym);
    if (qs.trace_zero_basis.rows() != 3) throw Error("trace-zero part is not 3-dimensional");

    // Gram of the norm form nu(x, y) = (x y^* + y x^*)/2 on even units
    qs.nu_gram = RatMat(e, e);
    std::vector<CliffordElt> units;
    for (size_t i = 0; i < e; ++i) {
        Vec v(e, Rat(0));
        v[i] = 1;
        units.push_back(qs.from_even(v));
    }
    for (size_t i = 0; i < e; ++i)
        for (size_t j = 0; j < e; ++j) {
            CliffordElt prod = alg->mul(units[i], alg->involute(units[j])) +
                               alg->mul(units[j], alg->involute(units[i]));
            // the product of even elements is even; nu is the scalar part
            qs.nu_gram.at(i, j) = prod.scalar_part() / 2;
        }
    return qs;
}

CliffordElt embed_trace_zero(const Vec& x, const QuatStructure& qs) {
    return qs.alg->mul(qs.alg->from_vector(x), qs.vol);
}

Vec extract_vector(const CliffordElt& y, const QuatStructure& qs) {
    const auto& alg = *qs.alg;
    CliffordElt inv = alg.involute(y);
    for (size_t i = 0; i < y.c.size(); ++i)
        if (inv.c[i] != -y.c[i]) throw NotInOddPart("involute is not the negation");
    // y * vol^{-1} with vol^{-1} = vol^* / (vol vol^*)
    CliffordElt x = alg.mul(y, alg.involute(qs.vol)).scaled(Rat(1) / qs.vol_norm);
    Vec out(alg.gens());
    Vec rest = x.c;
    for (size_t i = 0; i < alg.gens(); ++i) {
        out[i] = x.c[1u << i];
        rest[1u << i] = 0;
    }
    for (const Rat& r : rest)
        if (r != 0) throw NotInOddPart("image is not a vector");
    return out;
}

Rat quat_norm(const CliffordElt& y) {
    const auto& alg = *y.alg;
    CliffordElt prod = alg.mul(y, alg.involute(y));
    Vec rest = prod.c;
    rest[0] = 0;
    for (const Rat& r : rest)
        if (r != 0) throw InvalidInput("norm is not scalar; element not in the even part");
    return prod.scalar_part();
}

Lattice order_dual(const CliffordOrder& o, const QuatStructure& qs) {
    // module in even coordinates
    RatMat rows(o.module.rank(), qs.even_masks.size());
    for (size_t i = 0; i < o.module.rank(); ++i)
        rows.set_row(i, qs.to_even(qs.alg->from_coeffs(o.module.basis().row(i))));
    Lattice even = Lattice::span(rows);
    if (even.rank() != 4) throw InvalidInput("order must have rank 4");
    return dual(even, QuadSpace(qs.nu_gram));
}

FracIdeal order_discriminant(const CliffordOrder& o, const QuatStructure& qs) {
    RatMat rows(o.module.rank(), qs.even_masks.size());
    for (size_t i = 0; i < o.module.rank(); ++i)
        rows.set_row(i, qs.to_even(qs.alg->from_coeffs(o.module.basis().row(i))));
    Lattice even = Lattice::span(rows);
    Lattice dl = order_dual(o, qs);
    return index_ideal(dl, even).sqrt();
}

CliffordElt conjugate_by(const CliffordElt& alpha, const CliffordElt& x) {
    const auto& alg = *alpha.alg;
    Rat nrm = quat_norm(alpha);
    if (nrm == 0) throw NotInvertible("conjugation by a norm-zero element");
    CliffordElt inv = alg.involute(alpha).scaled(Rat(1) / nrm);
    return alg.mul(alg.mul(inv, x), alpha);
}

}  // namespace qlat
