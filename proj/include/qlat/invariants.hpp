#pragma once

#include <map>
#include <vector>

#include "qlat/ideal.hpp"
#include "qlat/place.hpp"
#include "qlat/qspace.hpp"
#include "qlat/symbols.hpp"

namespace qlat {

// A quaternion algebra over the rationals, presented by a Hilbert pair
// (a, b) plus the set of places where it is division. Classes are equal
// iff the ramification sets are equal; presentations are not canonical.
struct QuatClass {
    Rat a, b;
    std::vector<Place> ram;  // sorted, even cardinality

    bool division_at(const Place& v) const;
    bool is_split() const { return ram.empty(); }
    FracIdeal disc() const;  // product of the finite ramified primes

    bool operator==(const QuatClass& o) const { return ram == o.ram; }
    bool operator!=(const QuatClass& o) const { return ram != o.ram; }
};

// Ramification set of (a, b): all places where the Hilbert symbol is -1.
QuatClass quat_class(const Rat& a, const Rat& b);

// Searches for a Hilbert pair with the given ramification set (which must
// be sorted with even cardinality).
QuatClass quat_class_from_ram(const std::vector<Place>& ram);

// delta = (-1)^{n(n-1)/2} det(gram), up to squares.
SquareClass discriminant_class(const QuadSpace& s);

// Signature difference #positive - #negative, computed exactly.
int real_index(const QuadSpace& s);

// division iff s = +-3, 4, 6 mod 8
enum class RealClass { split, division };
RealClass real_char_class(int s);

// Quaternion class of the even Clifford algebra of a ternary space.
QuatClass ternary_class(const QuadSpace& psi);

// Characteristic quaternion class of a quaternary space, assembled from a
// complement and the Brauer product relation; independent of the internal
// choice of splitting vector.
QuatClass quaternary_class(const QuadSpace& phi);

// Anisotropic-kernel dimension at p (dims 3 and 4 only).
int core_dimension(const QuadSpace& s, long p);

// Discriminant of Q(sqrt(delta)) over Q as an ideal: |d| if d = 1 mod 4,
// else 4|d|, for the squarefree representative d; the ring itself when
// delta is a square.
FracIdeal quadratic_field_disc(const SquareClass& delta);

// Discriminant ideal of a maximal lattice in dimension 4:
// D_K * e^2 with e the product of finite ramified primes of the class
// that are unramified in the discriminant field.
FracIdeal quaternary_disc_ideal(const SquareClass& delta, const QuatClass& q4);

// Discriminant ideal of a maximal lattice in the complement, from the
// parent's discriminant class and the split value q:
// (2 a^{-1} D_psi^2) intersect (2 a) where delta*q*Z = a*b^2, a squarefree.
FracIdeal ternary_disc_ideal(const SquareClass& delta, const Rat& q, const FracIdeal& dpsi);

// The ideal b(q) defined by 2q*[dual L/L] = b(q)^2 * [dual M/M]; throws
// NotASquare on inconsistent inputs.
FracIdeal b_ideal(const Rat& q, const FracIdeal& disc_l, const FracIdeal& disc_m);

// Classification data of a space in one bundle.
struct SpaceInvariants {
    size_t n;
    SquareClass delta;
    FracIdeal disc_field_disc;
    QuatClass q_class;
    int s_inf;
    std::map<long, int> core_dims;  // for the requested primes
};

SpaceInvariants space_invariants(const QuadSpace& s, const std::vector<long>& primes = {});

// Local classification of the complement's even Clifford algebra from the
// parent data: split iff one of the listed cases holds.
enum class LocalClass { split, division };
LocalClass cha_case(const SquareClass& delta, const Rat& q, const std::vector<Place>& ram_b,
                    const Place& v, int s_phi);

// Signature of the complement: s_phi - sign(q).
int complement_index(int s_phi, const Rat& q);

}  // namespace qlat
