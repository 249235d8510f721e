#include <doctest.h>

#include <algorithm>

#include "qlat/errors.hpp"
#include "qlat/invariants.hpp"
#include "qlat/lattice.hpp"
#include "qlat/maximality.hpp"
#include "qlat/rng.hpp"

using namespace qlat;

namespace {

RatMat diag(const Vec& d) {
    RatMat m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

std::vector<Place> places(std::initializer_list<long> ps, bool inf) {
    std::vector<Place> out;
    for (long p : ps) out.push_back(Place::prime(p));
    if (inf) out.push_back(Place::infinite());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("discriminant class") {
    CHECK(discriminant_class(QuadSpace(RatMat::identity(4))).rep == 1);
    CHECK(discriminant_class(QuadSpace(RatMat::identity(3))).rep == -1);
    CHECK(discriminant_class(QuadSpace(diag({Rat(1), Rat(1), Rat(2)}))).rep == -2);
}

TEST_CASE("real index") {
    CHECK(real_index(QuadSpace(RatMat::identity(4))) == 4);
    CHECK(real_index(QuadSpace(diag({Rat(1), Rat(1), Rat(-1), Rat(-1)}))) == 0);
    CHECK(real_index(QuadSpace(diag({Rat(1), Rat(1), Rat(1), Rat(-1)}))) == 2);
    // non-diagonal indefinite example
    RatMat g(2, 2);
    g.at(0, 1) = Rat(1, 2);
    g.at(1, 0) = Rat(1, 2);
    CHECK(real_index(QuadSpace(g)) == 0);
}

TEST_CASE("real characteristic class") {
    CHECK(real_char_class(4) == RealClass::division);
    CHECK(real_char_class(0) == RealClass::split);
    CHECK(real_char_class(3) == RealClass::division);
    CHECK(real_char_class(-3) == RealClass::division);
    CHECK(real_char_class(2) == RealClass::split);
    CHECK(real_char_class(-1) == RealClass::split);
    CHECK(real_char_class(6) == RealClass::division);
    CHECK(real_char_class(-4) == RealClass::division);
}

TEST_CASE("ternary classes") {
    QuatClass c1 = ternary_class(QuadSpace(RatMat::identity(3)));
    CHECK(c1.ram == places({2}, true));
    QuatClass c2 = ternary_class(QuadSpace(diag({Rat(1), Rat(1), Rat(-1)})));
    CHECK(c2.is_split());
    QuatClass c3 = ternary_class(QuadSpace(diag({Rat(1), Rat(2), Rat(2)})));
    CHECK(c3.ram == places({2}, true));
}

TEST_CASE("ternary class invariant under congruence") {
    Rng rng(71);
    for (int it = 0; it < 40; ++it) {
        RatMat g(3, 3);
        for (size_t i = 0; i < 3; ++i) {
            g.at(i, i) = Rat(rng.range(-5, 5));
            for (size_t j = i + 1; j < 3; ++j) {
                Rat off(rng.range(-5, 5), 2);
                off.canonicalize();
                g.at(i, j) = off;
                g.at(j, i) = off;
            }
        }
        if (g.det() == 0) continue;
        RatMat p(3, 3);
        do {
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j) p.at(i, j) = Rat(rng.range(-2, 2));
        } while (p.det() == 0);
        QuatClass before = ternary_class(QuadSpace(g));
        QuatClass after = ternary_class(QuadSpace(p * g * p.transpose()));
        CHECK(before == after);
    }
}

TEST_CASE("quaternary classes") {
    QuatClass c1 = quaternary_class(QuadSpace(RatMat::identity(4)));
    CHECK(c1.ram == places({2}, true));
    QuatClass c2 = quaternary_class(QuadSpace(diag({Rat(1), Rat(1), Rat(1), Rat(-1)})));
    CHECK(c2.is_split());
    // two hyperbolic planes: split space
    RatMat hyp(4, 4);
    hyp.at(0, 1) = Rat(1, 2);
    hyp.at(1, 0) = Rat(1, 2);
    hyp.at(2, 3) = Rat(1, 2);
    hyp.at(3, 2) = Rat(1, 2);
    CHECK(quaternary_class(QuadSpace(hyp)).is_split());
}

TEST_CASE("quaternary class is independent of the splitting vector") {
    Rng rng(83);
    int spaces = 0;
    while (spaces < 50) {
        RatMat g(4, 4);
        for (size_t i = 0; i < 4; ++i) {
            g.at(i, i) = Rat(rng.range(-6, 6));
            for (size_t j = i + 1; j < 4; ++j) {
                Rat off(rng.range(-6, 6), 2);
                off.canonicalize();
                g.at(i, j) = off;
                g.at(j, i) = off;
            }
        }
        if (g.det() == 0) continue;
        bool smooth = true;
        try {
            factor(g.det());
        } catch (const FactorBoundExceeded&) {
            smooth = false;
        }
        if (!smooth) continue;
        ++spaces;
        QuadSpace phi(g);
        QuatClass reference = quaternary_class(phi);
        SquareClass delta = discriminant_class(phi);
        int done = 0;
        while (done < 20) {
            Vec h(4);
            for (auto& x : h) x = Rat(rng.range(-6, 6));
            Rat q = phi.form(h);
            if (q == 0) continue;
            ++done;
            // recompute the class through this h
            auto [w, psi] = complement_basis(phi, h);
            QuatClass tern = ternary_class(psi);
            std::vector<Place> ram;
            for (const Place& v :
                 relevant_places({Rat(delta.rep), q, tern.a, tern.b})) {
                int inv = (tern.division_at(v) ? -1 : +1) *
                          hilbert_symbol(Rat(delta.rep), q, v);
                if (inv == -1) ram.push_back(v);
            }
            std::sort(ram.begin(), ram.end());
            CHECK(ram == reference.ram);
        }
    }
}

TEST_CASE("ramification sets have even size") {
    Rng rng(97);
    for (int it = 0; it < 200; ++it) {
        Rat a(rng.range(1, 100) * (rng.below(2) ? 1 : -1));
        Rat b(rng.range(1, 100) * (rng.below(2) ? 1 : -1));
        CHECK(quat_class(a, b).ram.size() % 2 == 0);
    }
}

TEST_CASE("presentation reconstruction from ramification") {
    Rng rng(101);
    for (int it = 0; it < 50; ++it) {
        Rat a(rng.range(1, 60) * (rng.below(2) ? 1 : -1));
        Rat b(rng.range(1, 60) * (rng.below(2) ? 1 : -1));
        QuatClass target = quat_class(a, b);
        QuatClass rebuilt = quat_class_from_ram(target.ram);
        CHECK(rebuilt == target);
    }
}

TEST_CASE("core dimensions") {
    QuadSpace i4(RatMat::identity(4));
    CHECK(core_dimension(i4, 2) == 4);
    CHECK(core_dimension(i4, 3) == 0);
    QuadSpace i3(RatMat::identity(3));
    CHECK(core_dimension(i3, 2) == 3);
    CHECK(core_dimension(i3, 5) == 1);
    CHECK_THROWS_AS(core_dimension(QuadSpace(RatMat::identity(2)), 2), UnsupportedDimension);
}

TEST_CASE("quadratic field discriminant") {
    CHECK(quadratic_field_disc(SquareClass{Int(1)}) == FracIdeal());
    CHECK(quadratic_field_disc(SquareClass{Int(-1)}) == FracIdeal(Rat(4)));
    CHECK(quadratic_field_disc(SquareClass{Int(5)}) == FracIdeal(Rat(5)));
    CHECK(quadratic_field_disc(SquareClass{Int(-3)}) == FracIdeal(Rat(3)));  // -3 = 1 mod 4
    CHECK(quadratic_field_disc(SquareClass{Int(2)}) == FracIdeal(Rat(8)));
}

TEST_CASE("quaternary discriminant ideal formula") {
    QuadSpace i4(RatMat::identity(4));
    CHECK(quaternary_disc_ideal(discriminant_class(i4), quaternary_class(i4)) ==
          FracIdeal(Rat(4)));
    QuadSpace lor(diag({Rat(1), Rat(1), Rat(1), Rat(-1)}));
    CHECK(quaternary_disc_ideal(discriminant_class(lor), quaternary_class(lor)) ==
          FracIdeal(Rat(4)));
    RatMat hyp(4, 4);
    hyp.at(0, 1) = Rat(1, 2);
    hyp.at(1, 0) = Rat(1, 2);
    hyp.at(2, 3) = Rat(1, 2);
    hyp.at(3, 2) = Rat(1, 2);
    QuadSpace h(hyp);
    CHECK(quaternary_disc_ideal(discriminant_class(h), quaternary_class(h)) == FracIdeal());
}

TEST_CASE("ternary discriminant ideal formula") {
    CHECK(ternary_disc_ideal(SquareClass{Int(1)}, Rat(1), FracIdeal(Rat(2))) ==
          FracIdeal(Rat(8)));
    CHECK(ternary_disc_ideal(SquareClass{Int(1)}, Rat(2), FracIdeal(Rat(2))) ==
          FracIdeal(Rat(4)));
    CHECK(ternary_disc_ideal(SquareClass{Int(1)}, Rat(1), FracIdeal()) == FracIdeal(Rat(2)));
}

TEST_CASE("b ideal") {
    CHECK(b_ideal(Rat(1), FracIdeal(Rat(4)), FracIdeal(Rat(8))) == FracIdeal());
    CHECK(b_ideal(Rat(2), FracIdeal(Rat(4)), FracIdeal(Rat(4))) == FracIdeal(Rat(2)));
    CHECK(b_ideal(Rat(1), FracIdeal(), FracIdeal(Rat(2))) == FracIdeal());
    CHECK_THROWS_AS(b_ideal(Rat(2), FracIdeal(), FracIdeal(Rat(2))), NotASquare);
}

TEST_CASE("local case classifier") {
    // split when delta is a local square away from the ramification
    CHECK(cha_case(SquareClass{Int(1)}, Rat(1), {}, Place::prime(5), 4) == LocalClass::split);
    // real place, positive value, index 2
    CHECK(cha_case(SquareClass{Int(1)}, Rat(1), {}, Place::infinite(), 2) == LocalClass::split);
    CHECK(cha_case(SquareClass{Int(1)}, Rat(1), {}, Place::infinite(), 4) == LocalClass::division);
    CHECK(cha_case(SquareClass{Int(1)}, Rat(-1), {}, Place::infinite(), -2) == LocalClass::split);
    // delta nonsquare at 2, unramified, q a norm
    CHECK(cha_case(SquareClass{Int(-1)}, Rat(2), {}, Place::prime(2), 4) == LocalClass::split);
    // same but q not a norm
    CHECK(cha_case(SquareClass{Int(-1)}, Rat(-1), {}, Place::prime(2), 4) ==
          LocalClass::division);
}

TEST_CASE("classifier agrees with the ternary class on complements") {
    Rng rng(113);
    int done = 0;
    while (done < 30) {
        RatMat g(4, 4);
        for (size_t i = 0; i < 4; ++i) {
            g.at(i, i) = Rat(rng.range(-5, 5));
            for (size_t j = i + 1; j < 4; ++j) {
                Rat off(rng.range(-5, 5), 2);
                off.canonicalize();
                g.at(i, j) = off;
                g.at(j, i) = off;
            }
        }
        if (g.det() == 0) continue;
        try {
            factor(g.det());
        } catch (const FactorBoundExceeded&) {
            continue;
        }
        QuadSpace phi(g);
        Vec h(4);
        for (auto& x : h) x = Rat(rng.range(-4, 4));
        if (phi.form(h) == 0) continue;
        ++done;
        auto [w, psi] = complement_basis(phi, h);
        QuatClass qpsi = ternary_class(psi);
        QuatClass qphi = quaternary_class(phi);
        SquareClass delta = discriminant_class(phi);
        Rat q = phi.form(h);
        int s_phi = real_index(phi);
        for (const Place& v : relevant_places({Rat(delta.rep), q, qpsi.a, qpsi.b})) {
            LocalClass cls = cha_case(delta, q, qphi.ram, v, s_phi);
            CHECK((cls == LocalClass::division) == qpsi.division_at(v));
        }
        // the real class of the complement agrees with its signature
        CHECK((real_char_class(real_index(psi)) == RealClass::division) ==
              qpsi.division_at(Place::infinite()));
    }
}

TEST_CASE("complement index") {
    CHECK(complement_index(4, Rat(1)) == 3);
    CHECK(complement_index(0, Rat(-1)) == 1);
    CHECK(complement_index(2, Rat(5)) == 1);
}

TEST_CASE("bundled invariants") {
    SpaceInvariants inv = space_invariants(QuadSpace(RatMat::identity(4)), {2, 3});
    CHECK(inv.n == 4);
    CHECK(inv.delta.rep == 1);
    CHECK(inv.disc_field_disc == FracIdeal());
    CHECK(inv.q_class.ram == places({2}, true));
    CHECK(inv.s_inf == 4);
    CHECK(inv.core_dims.at(2) == 4);
    CHECK(inv.core_dims.at(3) == 0);
    // signature has the parity of the dimension
    CHECK((inv.s_inf - 4) % 2 == 0);

    SpaceInvariants t = space_invariants(QuadSpace(RatMat::identity(3)));
    CHECK(t.delta.rep == -1);
    CHECK(t.disc_field_disc == FracIdeal(Rat(4)));
    CHECK(t.s_inf == 3);
    CHECK_THROWS_AS(space_invariants(QuadSpace(RatMat::identity(2)), {}),
                    UnsupportedDimension);
}
