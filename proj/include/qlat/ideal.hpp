#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlat/rational.hpp"

namespace qlat {

inline constexpr long kDefaultFactorBound = 1000000;

// prime -> nonzero exponent, signed for fractional values
using Factorization = std::map<long, int>;

// Exact signed-exponent factorization of |x| by trial division. A residual
// cofactor r with sqrt(bound^2) < r after removing all primes <= bound
// raises FactorBoundExceeded; a residual in (bound, bound^2] is prime and
// is kept.
Factorization factor(const Rat& x, long bound = kDefaultFactorBound);

// A fractional ideal of the integers: canonically a positive rational
// generator together with its prime factorization.
class FracIdeal {
public:
    FracIdeal() : gen_(1) {}  // the ring itself
    explicit FracIdeal(const Rat& g, long bound = kDefaultFactorBound);
    static FracIdeal from_factorization(const Factorization& f);

    const Rat& generator() const { return gen_; }
    const Factorization& factorization() const { return fact_; }

    bool is_unit() const { return gen_ == 1; }
    bool is_integral() const;
    int valuation(long p) const;
    std::vector<long> primes() const;

    FracIdeal operator*(const FracIdeal& o) const;
    FracIdeal operator/(const FracIdeal& o) const;
    FracIdeal pow(int e) const;
    FracIdeal sum(const FracIdeal& o) const;        // gcd: min of valuations
    FracIdeal intersect(const FracIdeal& o) const;  // lcm: max of valuations
    FracIdeal sqrt() const;                         // throws NotASquare

    bool operator==(const FracIdeal& o) const { return gen_ == o.gen_; }
    bool operator!=(const FracIdeal& o) const { return gen_ != o.gen_; }

    std::string str() const { return rat_str(gen_); }

private:
    FracIdeal(Rat g, Factorization f) : gen_(std::move(g)), fact_(std::move(f)) {}
    Rat gen_;
    Factorization fact_;
};

// x*Z = a*r^2 with a squarefree and integral; returns (a, r).
std::pair<FracIdeal, FracIdeal> squarefree_split(const Rat& x, long bound = kDefaultFactorBound);

// A square class of nonzero rationals, kept as its squarefree integer
// representative (sign matters).
struct SquareClass {
    Int rep;

    bool operator==(const SquareClass& o) const { return rep == o.rep; }
    bool operator!=(const SquareClass& o) const { return rep != o.rep; }
    std::string str() const { return rep.get_str(); }
};

SquareClass square_class(const Rat& x, long bound = kDefaultFactorBound);

}  // namespace qlat
