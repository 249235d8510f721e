#include "qlat/invariants.hpp"

#include <algorithm>

#include "qlat/errors.hpp"

namespace qlat {

bool QuatClass::division_at(const Place& v) const {
    return std::find(ram.begin(), ram.end(), v) != ram.end();
}

FracIdeal QuatClass::disc() const {
    Factorization f;
    for (const Place& v : ram)
        if (v.is_finite()) f[v.p()] = 1;
    return FracIdeal::from_factorization(f);
}

QuatClass quat_class(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw InvalidInput("quaternion class of zero");
    QuatClass q;
    q.a = a;
    q.b = b;
    for (const Place& v : relevant_places({a, b}))
        if (hilbert_symbol(a, b, v) == -1) q.ram.push_back(v);
    std::sort(q.ram.begin(), q.ram.end());
    if (q.ram.size() % 2 != 0) throw Error("odd ramification set; symbol bug");
    return q;
}

QuatClass quat_class_from_ram(const std::vector<Place>& ram) {
    if (ram.size() % 2 != 0) throw InvalidInput("ramification set must have even size");
    // Generate-and-test over signed squarefree products of small primes:
    // the primes of the set itself, 2, and a few auxiliaries.
    std::vector<long> support{2, 3, 5, 7, 11, 13};
    for (const Place& v : ram)
        if (v.is_finite() && std::find(support.begin(), support.end(), v.p()) == support.end())
            support.push_back(v.p());
    std::vector<Rat> candidates{Rat(1), Rat(-1)};
    for (long p : support) {
        size_t fixed = candidates.size();
        for (size_t i = 0; i < fixed; ++i) candidates.push_back(candidates[i] * p);
    }
    for (const Rat& a : candidates)
        for (const Rat& b : candidates) {
            QuatClass q = quat_class(a, b);
            if (q.ram == ram) return q;
        }
    throw Error("no Hilbert pair found for ramification set " + places_str(ram));
}

SquareClass discriminant_class(const QuadSpace& s) {
    size_t n = s.dim();
    Rat d = s.gram().det();
    if ((n * (n - 1) / 2) % 2 != 0) d = -d;
    return square_class(d);
}

int real_index(const QuadSpace& s) {
    auto [t, diag] = orthogonalize(s);
    int idx = 0;
    for (const Rat& d : diag) idx += (d > 0) ? 1 : -1;
    return idx;
}

RealClass real_char_class(int s) {
    int r = ((s % 8) + 8) % 8;
    return (r == 3 || r == 4 || r == 5 || r == 6) ? RealClass::division : RealClass::split;
}

QuatClass ternary_class(const QuadSpace& psi) {
    if (psi.dim() != 3) throw UnsupportedDimension("ternary class needs dimension 3");
    auto [t, c] = orthogonalize(psi);
    return quat_class(-c[0] * c[1], -c[0] * c[2]);
}

QuatClass quaternary_class(const QuadSpace& phi) {
    if (phi.dim() != 4) throw UnsupportedDimension("quaternary class needs dimension 4");
    auto [t, c] = orthogonalize(phi);
    Vec h = t.row(3);
    Rat q = c[3];
    auto [wbasis, psi] = complement_basis(phi, h);
    QuatClass tern = ternary_class(psi);
    SquareClass dc = discriminant_class(phi);
    Rat drep(dc.rep);
    // Local class at v of the quaternary algebra is the Brauer product of
    // the complement's class and (delta, q)_v.
    std::vector<Rat> vals{drep, q, tern.a, tern.b};
    std::vector<Place> ram;
    for (const Place& v : relevant_places(vals)) {
        int inv = (tern.division_at(v) ? -1 : +1) * hilbert_symbol(drep, q, v);
        if (inv == -1) ram.push_back(v);
    }
    std::sort(ram.begin(), ram.end());
    return quat_class_from_ram(ram);
}

int core_dimension(const QuadSpace& s, long p) {
    Place v = Place::prime(p);
    if (s.dim() == 4) {
        SquareClass dc = discriminant_class(s);
        QuatClass q4 = quaternary_class(s);
        if (is_local_square(Rat(dc.rep), v)) return q4.division_at(v) ? 4 : 0;
        return 2;
    }
    if (s.dim() == 3) {
        QuatClass q3 = ternary_class(s);
        return q3.division_at(v) ? 3 : 1;
    }
    throw UnsupportedDimension("core dimension implemented for dimensions 3 and 4");
}

FracIdeal quadratic_field_disc(const SquareClass& delta) {
    if (delta.rep == 1) return FracIdeal();
    Int d = delta.rep;
    Int mod4 = ((d % 4) + 4) % 4;
    FracIdeal absd((Rat(abs(d))));
    if (mod4 == 1) return absd;
    return FracIdeal(Rat(4)) * absd;
}

FracIdeal quaternary_disc_ideal(const SquareClass& delta, const QuatClass& q4) {
    FracIdeal dk = quadratic_field_disc(delta);
    Factorization f;
    for (const Place& v : q4.ram)
        if (v.is_finite() && dk.valuation(v.p()) == 0) f[v.p()] = 1;
    FracIdeal e = FracIdeal::from_factorization(f);
    return dk * e.pow(2);
}

FracIdeal ternary_disc_ideal(const SquareClass& delta, const Rat& q, const FracIdeal& dpsi) {
    if (q == 0) throw InvalidInput("ternary disc ideal needs q != 0");
    auto [a, b] = squarefree_split(Rat(delta.rep) * q);
    FracIdeal two((Rat(2)));
    FracIdeal left = two * dpsi.pow(2) / a;
    FracIdeal right = two * a;
    return left.intersect(right);
}

FracIdeal b_ideal(const Rat& q, const FracIdeal& disc_l, const FracIdeal& disc_m) {
    FracIdeal num = FracIdeal(Rat(2) * abs(q)) * disc_l;
    return (num / disc_m).sqrt();
}

SpaceInvariants space_invariants(const QuadSpace& s, const std::vector<long>& primes) {
    if (s.dim() != 3 && s.dim() != 4)
        throw UnsupportedDimension("invariants implemented for dimensions 3 and 4");
    SpaceInvariants out{s.dim(),
                        discriminant_class(s),
                        FracIdeal(),
                        s.dim() == 4 ? quaternary_class(s) : ternary_class(s),
                        real_index(s),
                        {}};
    out.disc_field_disc = quadratic_field_disc(out.delta);
    for (long p : primes) out.core_dims[p] = core_dimension(s, p);
    return out;
}

LocalClass cha_case(const SquareClass& delta, const Rat& q, const std::vector<Place>& ram_b,
                    const Place& v, int s_phi) {
    if (v.is_infinite()) {
        bool split = (q > 0 && (s_phi == 0 || s_phi == 2)) || (q < 0 && (s_phi == 0 || s_phi == -2));
        return split ? LocalClass::split : LocalClass::division;
    }
    Rat drep(delta.rep);
    bool dsq = is_local_square(drep, v);
    bool in_ram = std::find(ram_b.begin(), ram_b.end(), v) != ram_b.end();
    bool norm = is_local_norm(q, drep, v);
    bool split = (dsq && !in_ram) || (!dsq && !in_ram && norm) || (!dsq && in_ram && !norm);
    return split ? LocalClass::split : LocalClass::division;
}

int complement_index(int s_phi, const Rat& q) {
    if (q == 0) throw InvalidInput("complement index needs q != 0");
    return s_phi - (q > 0 ? 1 : -1);
}

}  // namespace qlat
