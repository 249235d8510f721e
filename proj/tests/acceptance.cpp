// Acceptance suite: every identity the library exists to verify, run on
// seeded corpora at full scale with exact arithmetic (no tolerances).
// Prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlat/errors.hpp"
#include "qlat/verify.hpp"

using namespace qlat;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%-34s %s%s%s\n", name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass) ++failures;
}

RatMat diag(const Vec& d) {
    RatMat m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

// 1. The main lattice identity on >= 200 corpus instances, exact lattice
//    equality, under 60 seconds.
void criterion_lattice_identity() {
    auto t0 = std::chrono::steady_clock::now();
    auto corpus = gen_corpus(42, 200);
    int pass = 0, qpos = 0, qneg = 0, hin = 0, hout = 0, indef = 0, def = 0;
    for (const auto& e : corpus) {
        Instance inst = build_instance(e.gram, e.h);
        if (check_lattice_identity(inst).pass) ++pass;
        (inst.q > 0 ? qpos : qneg)++;
        (inst.lat.contains(inst.h) ? hin : hout)++;
        int s = real_index(inst.phi);
        (s == 4 || s == -4 ? def : indef)++;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool mixed = qpos > 0 && qneg > 0 && hin > 0 && hout > 0 && indef > 0 && def > 0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%d/200 in %.1fs (q+:%d q-:%d h-in:%d h-out:%d def:%d indef:%d)", pass, secs,
                  qpos, qneg, hin, hout, def, indef);
    report("1 lattice identity", pass == 200 && secs < 60.0 && mixed, detail);
}

// 2. The three even-order index laws on >= 100 random integral ternary
//    lattices.
void criterion_index_laws() {
    auto corpus = gen_ternary_corpus(271828, 100);
    int pass = 0;
    for (const auto& [gram, rows] : corpus) {
        QuadSpace psi(gram);
        Lattice n = Lattice::span(rows);
        if (check_even_order_index_laws(n, psi).pass) ++pass;
    }
    report("2 even-order index laws", pass == 100,
           std::to_string(pass) + "/100");
}

// 3. Even order of the intersection = intersection of the even orders, on
//    the full corpus.
void criterion_order_intersection() {
    auto corpus = gen_corpus(42, 200);
    int pass = 0;
    for (const auto& e : corpus) {
        Instance inst = build_instance(e.gram, e.h);
        if (check_even_order_intersection(inst).pass) ++pass;
    }
    report("3 even-order intersection", pass == 200, std::to_string(pass) + "/200");
}

// 4. All five discriminant-ideal formulas on the full corpus.
void criterion_discriminants() {
    auto corpus = gen_corpus(42, 200);
    int pass = 0;
    for (const auto& e : corpus) {
        Instance inst = build_instance(e.gram, e.h);
        if (check_discriminant_formulas(inst).pass) ++pass;
    }
    report("4 discriminant formulas", pass == 200, std::to_string(pass) + "/200");
}

// 5. The hand-checkable worked example.
void criterion_worked_demo() {
    Instance inst = build_instance(RatMat::identity(4), {Rat(0), Rat(0), Rat(0), Rat(1)});
    RatMat expect_l(5, 4);
    for (size_t i = 0; i < 4; ++i) expect_l.at(i, i) = 1;
    for (size_t j = 0; j < 4; ++j) expect_l.at(4, j) = Rat(1, 2);
    bool ok = inst.lat == Lattice::span(expect_l);
    ok = ok && inst.disc_l == FracIdeal(Rat(4));
    ok = ok && inst.m == Lattice::standard(3) && inst.disc_m == FracIdeal(Rat(8));
    ok = ok && inst.dpsi == FracIdeal(Rat(2));
    ok = ok && order_discriminant(inst.ord, inst.qs) == FracIdeal(Rat(4));
    // the even order is the integral span of 1 and the three bivectors
    RatMat lip(4, 8);
    lip.at(0, 0) = 1;
    lip.at(1, 3) = 1;
    lip.at(2, 5) = 1;
    lip.at(3, 6) = 1;
    ok = ok && inst.ord.module == Lattice::span(lip);
    auto r = check_lattice_identity(inst);
    ok = ok && r.pass && r.lhs == Lattice::standard(3).str() && r.rhs == r.lhs;
    report("5 worked demo", ok);
}

// 6. Hilbert symbol vs the exhaustive solvability oracle on >= 1000
//    random pairs, plus the product formula on each.
void criterion_hilbert_oracle() {
    Rng rng(1009);
    std::vector<Place> small_places{Place::infinite()};
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
        small_places.push_back(Place::prime(p));
    int pairs = 0, agree = 0, product_ok = 0;
    while (pairs < 1000) {
        // numerators and denominators built from small primes so the
        // oracle's moduli cover every dividing place
        auto draw = [&] {
            long num = rng.range(1, 9999);
            long den = rng.range(1, 60);
            Rat x(rng.below(2) ? num : -num, den);
            x.canonicalize();
            return x;
        };
        Rat a = draw(), b = draw();
        bool smooth = true;
        for (const auto& [p, e] : factor(a))
            if (p > 23) smooth = false;
        for (const auto& [p, e] : factor(b))
            if (p > 23) smooth = false;
        if (!smooth) continue;
        ++pairs;
        bool pair_agrees = true;
        int prod = 1;
        for (const Place& v : small_places) {
            int sym = hilbert_symbol(a, b, v);
            if (sym != oracles::hilbert_solvability(a, b, v)) pair_agrees = false;
        }
        for (const Place& v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
        if (pair_agrees) ++agree;
        if (prod == +1) ++product_ok;
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "oracle %d/1000, product %d/1000", agree, product_ok);
    report("6 hilbert oracle agreement", agree == 1000 && product_ok == 1000, detail);
}

// 7. Invariance suite: independence of the splitting vector, the local
//    Brauer relation, the signature relation, and the case classifier.
void criterion_invariance() {
    Rng rng(31415);
    int spaces = 0, indep_ok = 0;
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
        try {
            factor(g.det());
        } catch (const FactorBoundExceeded&) {
            continue;
        }
        ++spaces;
        QuadSpace phi(g);
        QuatClass reference = quaternary_class(phi);
        SquareClass delta = discriminant_class(phi);
        bool all_same = true;
        int done = 0;
        while (done < 20) {
            Vec h(4);
            for (auto& x : h) x = Rat(rng.range(-6, 6));
            Rat q = phi.form(h);
            if (q == 0) continue;
            ++done;
            auto [w, psi] = complement_basis(phi, h);
            QuatClass tern = ternary_class(psi);
            std::vector<Place> ram;
            for (const Place& v : relevant_places({Rat(delta.rep), q, tern.a, tern.b})) {
                int inv = (tern.division_at(v) ? -1 : +1) * hilbert_symbol(Rat(delta.rep), q, v);
                if (inv == -1) ram.push_back(v);
            }
            std::sort(ram.begin(), ram.end());
            if (ram != reference.ram) all_same = false;
        }
        if (all_same) ++indep_ok;
    }

    auto corpus = gen_corpus(42, 200);
    int local_ok = 0;
    for (const auto& e : corpus) {
        Instance inst = build_instance(e.gram, e.h);
        if (check_local_invariants(inst).pass) ++local_ok;
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "independence %d/50, local relations %d/200", indep_ok,
                  local_ok);
    report("7 invariance suite", indep_ok == 50 && local_ok == 200, detail);
}

// 8. Conjugation equivariance: >= 20 conjugators on >= 50 instances.
void criterion_equivariance() {
    auto corpus = gen_corpus(42, 50);
    Rng rng(2718);
    int pass = 0;
    for (const auto& e : corpus) {
        Instance inst = build_instance(e.gram, e.h);
        if (check_conjugation_equivariance(inst, rng, 20).pass) ++pass;
    }
    report("8 conjugation equivariance", pass == 50, std::to_string(pass) + "/50");
}

}  // namespace

int main() {
    criterion_lattice_identity();
    criterion_index_laws();
    criterion_order_intersection();
    criterion_discriminants();
    criterion_worked_demo();
    criterion_hilbert_oracle();
    criterion_invariance();
    criterion_equivariance();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures ? 1 : 0;
}
