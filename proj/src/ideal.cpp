#include "qlat/ideal.hpp"

#include "qlat/errors.hpp"

namespace qlat {

namespace {

// Trial division of a positive integer; exponents are added into `out`
// with the given sign.
void factor_int(const Int& value, long bound, int sign, Factorization& out) {
    Int n = value;
    if (n <= 0) throw InvalidInput("factor_int expects a positive integer");
    auto strip = [&](long p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out[p] += sign * e;
    };
    strip(2);
    strip(3);
    for (long p = 5; p <= bound && n > 1; p += 6) {
        if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        // All factors <= bound are gone. If n <= bound^2 the residual must
        // be prime; beyond that we refuse rather than guess.
        Int limit = Int(bound) * Int(bound);
        if (n > limit)
            throw FactorBoundExceeded("residual cofactor " + n.get_str() + " exceeds bound^2");
        if (!n.fits_slong_p())
            throw FactorBoundExceeded("residual prime does not fit a machine word");
        out[n.get_si()] += sign;
    }
}

Rat from_fact(const Factorization& f) {
    Rat g(1);
    for (const auto& [p, e] : f) {
        Int pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e > 0 ? e : -e));
        if (e > 0)
            g *= Rat(pe);
        else
            g /= Rat(pe);
    }
    return g;
}

void drop_zeros(Factorization& f) {
    for (auto it = f.begin(); it != f.end();) {
        if (it->second == 0)
            it = f.erase(it);
        else
            ++it;
    }
}

}  // namespace

Factorization factor(const Rat& x, long bound) {
    if (x == 0) throw InvalidInput("factor(0)");
    Factorization out;
    Int num = abs(x.get_num());
    if (num != 1) factor_int(num, bound, +1, out);
    if (x.get_den() != 1) factor_int(x.get_den(), bound, -1, out);
    drop_zeros(out);
    return out;
}

FracIdeal::FracIdeal(const Rat& g, long bound) {
    if (g == 0) throw InvalidInput("zero ideal");
    fact_ = factor(g, bound);
    gen_ = abs(g);
}

FracIdeal FracIdeal::from_factorization(const Factorization& f) {
    Factorization c = f;
    drop_zeros(c);
    return FracIdeal(from_fact(c), c);
}

bool FracIdeal::is_integral() const {
    for (const auto& [p, e] : fact_)
        if (e < 0) return false;
    return true;
}

int FracIdeal::valuation(long p) const {
    auto it = fact_.find(p);
    return it == fact_.end() ? 0 : it->second;
}

std::vector<long> FracIdeal::primes() const {
    std::vector<long> out;
    out.reserve(fact_.size());
    for (const auto& [p, e] : fact_) out.push_back(p);
    return out;
}

FracIdeal FracIdeal::operator*(const FracIdeal& o) const {
    Factorization f = fact_;
    for (const auto& [p, e] : o.fact_) f[p] += e;
    drop_zeros(f);
    return FracIdeal(gen_ * o.gen_, f);
}

FracIdeal FracIdeal::operator/(const FracIdeal& o) const {
    Factorization f = fact_;
    for (const auto& [p, e] : o.fact_) f[p] -= e;
    drop_zeros(f);
    return FracIdeal(gen_ / o.gen_, f);
}

FracIdeal FracIdeal::pow(int e) const {
    Factorization f;
    for (const auto& [p, k] : fact_)
        if (k * e != 0) f[p] = k * e;
    return from_factorization(f);
}

FracIdeal FracIdeal::sum(const FracIdeal& o) const {
    Factorization f;
    for (const auto& [p, e] : fact_) f[p] = std::min(e, o.valuation(p));
    for (const auto& [p, e] : o.fact_) f[p] = std::min(e, valuation(p));
    drop_zeros(f);
    return from_factorization(f);
}

FracIdeal FracIdeal::intersect(const FracIdeal& o) const {
    Factorization f;
    for (const auto& [p, e] : fact_) f[p] = std::max(e, o.valuation(p));
    for (const auto& [p, e] : o.fact_) f[p] = std::max(e, valuation(p));
    drop_zeros(f);
    return from_factorization(f);
}

FracIdeal FracIdeal::sqrt() const {
    Factorization f;
    for (const auto& [p, e] : fact_) {
        if (e % 2 != 0)
            throw NotASquare("ideal " + str() + " has odd valuation at " + std::to_string(p));
        f[p] = e / 2;
    }
    return from_factorization(f);
}

std::pair<FracIdeal, FracIdeal> squarefree_split(const Rat& x, long bound) {
    Factorization f = factor(x, bound);
    Factorization sf, rt;
    for (const auto& [p, e] : f) {
        int odd = ((e % 2) + 2) % 2;
        if (odd) sf[p] = 1;
        int half = (e - odd) / 2;
        if (half) rt[p] = half;
    }
    return {FracIdeal::from_factorization(sf), FracIdeal::from_factorization(rt)};
}

SquareClass square_class(const Rat& x, long bound) {
    if (x == 0) throw InvalidInput("square class of zero");
    Factorization f = factor(x, bound);
    Int rep = sgn(x) > 0 ? 1 : -1;
    for (const auto& [p, e] : f)
        if (((e % 2) + 2) % 2) rep *= p;
    return SquareClass{rep};
}

}  // namespace qlat
