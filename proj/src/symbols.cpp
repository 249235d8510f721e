#include "qlat/symbols.hpp"

#include <algorithm>
#include <set>

#include "qlat/errors.hpp"

namespace qlat {

namespace {

// Unit part of x at p reduced modulo m (a power of p): num * den^{-1} mod m.
long unit_mod(const Rat& x, long p, long m) {
    Rat u = x;
    int v = valuation(x, p);
    Rat pp(p);
    for (int i = 0; i < v; ++i) u /= pp;
    for (int i = 0; i < -v; ++i) u *= pp;
    Int num = u.get_num() % m;
    if (num < 0) num += m;
    Int den = u.get_den() % m;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Int(m).get_mpz_t()) == 0)
        throw InvalidInput("unit_mod: denominator not invertible");
    Int r = (num * inv) % m;
    return r.get_si();
}

}  // namespace

int legendre(const Rat& a, long p) {
    if (p == 2 || !is_prime(p)) throw InvalidInput("legendre needs an odd prime");
    if (valuation(a, p) != 0) throw InvalidInput("legendre argument not a unit");
    long u = unit_mod(a, p, p);
    Int n(u), q(p);
    return mpz_legendre(n.get_mpz_t(), q.get_mpz_t());
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw InvalidInput("hilbert symbol of zero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : +1;
    long p = v.p();
    int alpha = valuation(a, p);
    int beta = valuation(b, p);
    if (p == 2) {
        // (a,b)_2 = (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}
        // with u, w the odd parts, eps(u) = (u-1)/2, omega(u) = (u^2-1)/8 mod 2.
        long u = unit_mod(a, 2, 8);
        long w = unit_mod(b, 2, 8);
        auto eps = [](long x) { return ((x - 1) / 2) % 2; };
        auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
        long e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return (e % 2 == 0) ? +1 : -1;
    }
    // Odd p: (a,b)_p = (-1)^{alpha*beta*eps(p)} (u|p)^beta (w|p)^alpha.
    int s = 1;
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2) s = -s;
    Rat u = a, w = b;
    Rat pp(p);
    for (int i = 0; i < alpha; ++i) u /= pp;
    for (int i = 0; i < -alpha; ++i) u *= pp;
    for (int i = 0; i < beta; ++i) w /= pp;
    for (int i = 0; i < -beta; ++i) w *= pp;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

bool is_local_square(const Rat& a, const Place& v) {
    if (a == 0) throw InvalidInput("local square test of zero");
    if (v.is_infinite()) return a > 0;
    long p = v.p();
    if (valuation(a, p) % 2 != 0) return false;
    if (p == 2) return unit_mod(a, 2, 8) == 1;
    Rat u = a;
    Rat pp(p);
    int val = valuation(a, p);
    for (int i = 0; i < val; ++i) u /= pp;
    for (int i = 0; i < -val; ++i) u *= pp;
    return legendre(u, p) == 1;
}

bool is_local_norm(const Rat& q, const Rat& delta, const Place& v) {
    if (q == 0 || delta == 0) throw InvalidInput("local norm test of zero");
    if (is_local_square(delta, v)) return true;  // split case: every value is a norm
    return hilbert_symbol(q, delta, v) == +1;
}

std::vector<Place> relevant_places(const std::vector<Rat>& values, long bound) {
    std::set<long> primes{2};
    for (const Rat& x : values) {
        if (x == 0) continue;
        for (const auto& [p, e] : factor(x, bound)) primes.insert(p);
    }
    std::vector<Place> out;
    for (long p : primes) out.push_back(Place::prime(p));
    out.push_back(Place::infinite());
    return out;
}

}  // namespace qlat
