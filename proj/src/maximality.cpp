#include "qlat/maximality.hpp"

#include <algorithm>
#include <vector>

#include "qlat/errors.hpp"

namespace qlat {

namespace {

// Basis of the kernel of the mod-p symmetric pairing 2*phi on L/pL,
// as integer coefficient vectors with entries in [0, p).
std::vector<std::vector<long>> mod_p_radical(const RatMat& pairing, long p) {
    size_t n = pairing.rows();
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat x = pairing.at(i, j);
            Int num = x.get_num() % p;
            Int den = x.get_den() % p;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t()) == 0)
                throw Error("pairing entry with p in the denominator");
            Int r = (num * inv) % p;
            if (r < 0) r += p;
            m[i][j] = r.get_si();
        }
    // Gaussian elimination over F_p on columns of the symmetric matrix;
    // kernel vectors v with v*m = 0.
    auto inv_mod = [&](long a) {
        Int r;
        mpz_invert(r.get_mpz_t(), Int(a).get_mpz_t(), Int(p).get_mpz_t());
        long v = r.get_si();
        return v < 0 ? v + p : v;
    };
    std::vector<std::vector<long>> rows(n, std::vector<long>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) rows[i][j] = m[i][j];
        rows[i][n + i] = 1;
    }
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        while (piv < n && rows[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        long f = inv_mod(rows[rank][c]);
        for (size_t j = 0; j < 2 * n; ++j) rows[rank][j] = (rows[rank][j] * f) % p;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            long g = rows[i][c];
            for (size_t j = 0; j < 2 * n; ++j)
                rows[i][j] = ((rows[i][j] - g * rows[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    std::vector<std::vector<long>> kernel;
    for (size_t i = rank; i < n; ++i)
        kernel.emplace_back(rows[i].begin() + n, rows[i].end());
    return kernel;
}

}  // namespace

std::optional<Lattice> enlarge_at(const Lattice& l, const QuadSpace& s, long p) {
    if (!is_integral(l, s)) throw NotIntegral("enlarge_at needs an integral lattice");
    const RatMat& b = l.basis();
    RatMat gl = b * s.gram() * b.transpose();
    auto kernel = mod_p_radical(gl.scaled(Rat(2)), p);
    if (kernel.empty()) return std::nullopt;
    size_t n = l.rank();
    size_t d = kernel.size();

    // Integer data for the quadratic value: form(v) = sum v_i^2 diag_i +
    // sum_{i<j} v_i v_j cross_ij with diag and cross integral.
    Int p2 = Int(p) * p;
    std::vector<Int> diag(n);
    std::vector<std::vector<Int>> cross(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        diag[i] = gl.at(i, i).get_num() % p2;
        for (size_t j = i + 1; j < n; ++j) {
            Rat c = gl.at(i, j) * 2;
            cross[i][j] = c.get_num() % p2;
        }
    }

    auto try_point = [&](const std::vector<long>& cf) -> std::optional<Lattice> {
        std::vector<Int> v(n, 0);
        for (size_t k = 0; k < d; ++k) {
            if (cf[k] == 0) continue;
            for (size_t j = 0; j < n; ++j) v[j] += Int(cf[k]) * kernel[k][j];
        }
        Int val = 0;
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            val += v[i] * v[i] * diag[i];
            for (size_t j = i + 1; j < n; ++j)
                if (v[j] != 0) val += v[i] * v[j] * cross[i][j];
        }
        if (val % p2 != 0) return std::nullopt;
        Vec amb(l.dim(), Rat(0));
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            for (size_t j = 0; j < l.dim(); ++j) amb[j] += Rat(v[i]) * b.at(i, j);
        }
        for (auto& x : amb) x /= p;
        RatMat one(1, l.dim());
        one.set_row(0, amb);
        return Lattice::span(b.vstack(one));
    };

    // Projective points of the radical: leading coordinate 1, the tail
    // running over all residues.
    for (size_t lead = 0; lead < d; ++lead) {
        size_t tail = d - lead - 1;
        std::vector<long> t(tail, 0);
        for (;;) {
            std::vector<long> cf(d, 0);
            cf[lead] = 1;
            for (size_t k = 0; k < tail; ++k) cf[lead + 1 + k] = t[k];
            if (auto grown = try_point(cf)) return grown;
            size_t k = 0;
            while (k < tail && ++t[k] == p) t[k++] = 0;
            if (k == tail) break;
        }
    }
    return std::nullopt;
}

bool is_maximal(const Lattice& l, const QuadSpace& s) {
    if (!is_integral(l, s)) throw NotIntegral("maximality test needs an integral lattice");
    FracIdeal disc = index_ideal(dual(l, s), l);
    for (long p : disc.primes()) {
        if (disc.valuation(p) < 2) continue;
        if (enlarge_at(l, s, p)) return false;
    }
    return true;
}

Lattice maximalize(const Lattice& l, const QuadSpace& s) {
    if (!is_integral(l, s)) throw NotIntegral("maximalize needs an integral lattice");
    Lattice cur = l;
    for (;;) {
        FracIdeal disc = index_ideal(dual(cur, s), cur);
        bool grew = false;
        for (long p : disc.primes()) {
            if (disc.valuation(p) < 2) continue;
            if (auto bigger = enlarge_at(cur, s, p)) {
                cur = *bigger;
                grew = true;
                break;
            }
        }
        if (!grew) return cur;
    }
}

Lattice maximal_lattice(const QuadSpace& s) {
    // Minimal positive rational c with c^2 * (all form data) integral:
    // at each prime, v(c) = ceil(-e_min/2) with e_min the least valuation
    // over the data (including the zero valuations of data p does not
    // divide).
    std::vector<Rat> data;
    for (size_t i = 0; i < s.dim(); ++i) {
        data.push_back(s.gram().at(i, i));
        for (size_t j = i + 1; j < s.dim(); ++j) data.push_back(s.gram().at(i, j) * 2);
    }
    std::vector<long> primes;
    for (const Rat& x : data) {
        if (x == 0) continue;
        for (const auto& [p, e] : factor(x))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    Factorization cf;
    for (long p : primes) {
        int emin = 0;
        bool first = true;
        for (const Rat& x : data) {
            if (x == 0) continue;
            int e = valuation(x, p);
            emin = first ? e : std::min(emin, e);
            first = false;
        }
        int need = -emin;
        int half = (need + ((need % 2 + 2) % 2)) / 2;  // ceil(need / 2)
        if (half != 0) cf[p] = half;
    }
    Rat c = FracIdeal::from_factorization(cf).generator();
    return maximalize(scale(c, Lattice::standard(s.dim())), s);
}

}  // namespace qlat
