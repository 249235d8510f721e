#pragma once

#include <vector>

#include "qlat/ideal.hpp"
#include "qlat/place.hpp"
#include "qlat/rational.hpp"

namespace qlat {

// Legendre symbol (a|p) for odd prime p and a prime to p.
int legendre(const Rat& a, long p);

// Hilbert symbol (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
// solution over the completion at v.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// a in Q_v^{x2}?
bool is_local_square(const Rat& a, const Place& v);

// q a norm from Q_v(sqrt(delta))? Equivalent to (q, delta)_v = +1.
bool is_local_norm(const Rat& q, const Rat& delta, const Place& v);

// The real place, 2, and every prime appearing in one of the values.
std::vector<Place> relevant_places(const std::vector<Rat>& values,
                                   long bound = kDefaultFactorBound);

}  // namespace qlat
