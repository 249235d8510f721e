#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qlat {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// p-adic valuation of a nonzero rational.
int valuation(const Rat& x, long p);

// Parses "p", "-p", or "p/q"; throws InvalidInput on anything else.
Rat parse_rat(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

std::string vec_str(const Vec& v);

}  // namespace qlat
