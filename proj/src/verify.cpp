#include "qlat/verify.hpp"

#include <algorithm>

#include "qlat/errors.hpp"
#include "qlat/symbols.hpp"

namespace qlat {

namespace {

// (L cap W) mapped through x -> x*vol, written in trace-zero coordinates.
Lattice lw_image(const Instance& inst) {
    RatMat rows(inst.lw.rank(), 4);
    for (size_t i = 0; i < inst.lw.rank(); ++i) {
        CliffordElt y = embed_trace_zero(inst.lw.basis().row(i), inst.qs);
        rows.set_row(i, inst.qs.to_even(y));
    }
    return Lattice::span(solve_left(inst.qs.trace_zero_basis, rows));
}

}  // namespace

Instance build_instance(const RatMat& gram, const Vec& h,
                        const std::optional<RatMat>& lattice_rows) {
    QuadSpace phi(gram);
    if (phi.dim() != 4) throw InvalidInput("instance needs a quaternary space");
    if (h.size() != 4) throw InvalidInput("splitting vector must have length 4");
    Rat q = phi.form(h);
    if (q == 0) throw IsotropicVector("phi[h] = 0");

    Lattice lat;
    if (lattice_rows) {
        lat = Lattice::span(*lattice_rows);
        if (!lat.full_rank()) throw InvalidInput("supplied lattice is not full rank");
        if (!is_integral(lat, phi)) throw NotIntegral("supplied lattice is not integral");
        if (!is_maximal(lat, phi)) throw InvalidInput("supplied lattice is not maximal");
    } else {
        lat = maximal_lattice(phi);
    }

    auto [wbasis, psi] = complement_basis(phi, h);

    Instance inst{phi,
                  lat,
                  h,
                  q,
                  wbasis,
                  psi,
                  intersect_with_subspace(lat, wbasis),
                  Lattice(),
                  quaternionize(psi),
                  CliffordOrder{},
                  discriminant_class(phi),
                  quaternary_class(phi),
                  ternary_class(psi),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal(),
                  FracIdeal()};

    if (!is_integral(inst.lw, psi)) throw Error("L cap W fails to be integral; bug");
    inst.m = maximalize(inst.lw, psi);
    inst.ord = even_order(inst.lw, inst.qs.alg);

    auto [sf, rt] = squarefree_split(inst.qs.vol_norm);
    inst.sf = sf;
    inst.rt = rt;
    inst.dpsi = inst.class_psi.disc();
    Factorization cf;
    for (long p : inst.sf.primes())
        if (inst.dpsi.valuation(p) == 0) cf[p] = 1;
    inst.cofree = FracIdeal::from_factorization(cf);
    inst.idx_ml = index_ideal(inst.m, inst.lw);
    if (!inst.idx_ml.is_integral()) throw Error("[M / L cap W] not integral; bug");
    inst.pairing = pairing_ideal(h, lat, phi);
    inst.disc_l = index_ideal(dual(lat, phi), lat);
    inst.disc_m = index_ideal(dual(inst.m, psi), inst.m);
    inst.bq = b_ideal(q, inst.disc_l, inst.disc_m);
    return inst;
}

CheckResult check_lattice_identity(const Instance& inst) {
    Lattice lhs = lw_image(inst);
    FracIdeal factor = inst.rt * inst.cofree * inst.dpsi * inst.idx_ml;
    Lattice dual_ord = order_dual(inst.ord, inst.qs);
    Lattice trace_zero = intersect_with_subspace(dual_ord, inst.qs.trace_zero_basis);
    Lattice rhs = scale(factor, trace_zero);
    return {"lattice_identity", lhs == rhs, lhs.str(), rhs.str()};
}

CheckResult check_even_order_index_laws(const Lattice& n, const QuadSpace& psi) {
    QuatStructure qs = quaternionize(psi);
    Lattice m = maximalize(n, psi);
    CliffordOrder on = even_order(n, qs.alg);
    CliffordOrder om = even_order(m, qs.alg);

    auto even_lat = [&](const CliffordOrder& o) {
        RatMat rows(o.module.rank(), 4);
        for (size_t i = 0; i < o.module.rank(); ++i)
            rows.set_row(i, qs.to_even(qs.alg->from_coeffs(o.module.basis().row(i))));
        return Lattice::span(rows);
    };
    Lattice en = even_lat(on), em = even_lat(om);

    FracIdeal idx_mn = index_ideal(m, n);
    FracIdeal idx_orders = index_ideal(em, en);
    bool law1 = idx_orders == idx_mn.pow(2);

    FracIdeal disc_n = index_ideal(dual(n, psi), n);
    FracIdeal half = FracIdeal(Rat(1, 2));
    FracIdeal dual_idx = index_ideal(order_dual(on, qs), en);
    bool law2 = dual_idx == (half * disc_n).pow(2);

    FracIdeal d_on = order_discriminant(on, qs);
    bool law3 = d_on == half * disc_n;

    std::string lhs = idx_orders.str() + "|" + dual_idx.str() + "|" + d_on.str();
    std::string rhs =
        idx_mn.pow(2).str() + "|" + (half * disc_n).pow(2).str() + "|" + (half * disc_n).str();
    return {"even_order_index_laws", law1 && law2 && law3, lhs, rhs};
}

CheckResult check_even_order_intersection(const Instance& inst) {
    auto big = std::make_shared<const CliffordAlgebra>(inst.phi.gram());
    CliffordOrder even_l = even_order(inst.lat, big);

    // centralizer of h inside the even part of the big algebra
    CliffordElt helt = big->from_vector(inst.h);
    auto evens = big->even_masks();
    RatMat comm(evens.size(), big->dim());
    std::vector<CliffordElt> units;
    for (size_t i = 0; i < evens.size(); ++i) {
        CliffordElt u = big->zero();
        u.c[evens[i]] = 1;
        units.push_back(u);
        CliffordElt d = big->mul(u, helt) - big->mul(helt, u);
        comm.set_row(i, d.c);
    }
    RatMat ker = rational_row_kernel(comm);  // coords over even masks
    RatMat ker_amb(ker.rows(), big->dim());
    for (size_t i = 0; i < ker.rows(); ++i) {
        Vec amb(big->dim(), Rat(0));
        for (size_t j = 0; j < evens.size(); ++j) amb[evens[j]] = ker.at(i, j);
        ker_amb.set_row(i, amb);
    }

    Lattice in_w = intersect_with_subspace(even_l.module, ker_amb);
    Lattice lhs = Lattice::span(in_w.basis() * ker_amb);

    // A+(L cap W) built inside the small algebra, embedded via the
    // complement basis.
    CliffordOrder small = even_order(inst.lw, inst.qs.alg);
    RatMat embed(inst.qs.alg->dim(), big->dim());
    for (unsigned s = 0; s < inst.qs.alg->dim(); ++s) {
        CliffordElt acc = big->unit();
        for (size_t j = 0; j < 3; ++j)
            if (s & (1u << j)) acc = big->mul(acc, big->from_vector(inst.wbasis.row(j)));
        embed.set_row(s, acc.c);
    }
    Lattice rhs = Lattice::span(small.module.basis() * embed);

    return {"even_order_intersection", lhs == rhs, lhs.str(), rhs.str()};
}

CheckResult check_discriminant_formulas(const Instance& inst) {
    bool ok = true;
    std::string lhs, rhs;
    auto add = [&](const FracIdeal& measured, const FracIdeal& formula) {
        ok = ok && measured == formula;
        if (!lhs.empty()) lhs += "|", rhs += "|";
        lhs += measured.str();
        rhs += formula.str();
    };
    add(inst.disc_l, quaternary_disc_ideal(inst.delta, inst.class_phi));
    add(inst.disc_m, ternary_disc_ideal(inst.delta, inst.q, inst.dpsi));
    // bq is a genuine square root by construction; recheck the square
    FracIdeal two_q_disc = FracIdeal(Rat(2) * abs(inst.q)) * inst.disc_l;
    add(two_q_disc, inst.bq.pow(2) * inst.disc_m);
    add(inst.idx_ml, inst.bq / inst.pairing);
    add(order_discriminant(inst.ord, inst.qs),
        FracIdeal(abs(inst.q)) * inst.disc_l / inst.pairing.pow(2));
    return {"discriminant_formulas", ok, lhs, rhs};
}

CheckResult check_local_invariants(const Instance& inst) {
    bool ok = true;
    Rat drep(inst.delta.rep);
    std::vector<Rat> vals{drep, inst.q, inst.class_psi.a, inst.class_psi.b,
                          Rat(inst.dpsi.generator())};
    for (const Place& v : inst.class_phi.ram) {
        if (v.is_finite()) vals.push_back(Rat(v.p()));
    }
    std::string detail;
    for (const Place& v : relevant_places(vals)) {
        int inv_phi = inst.class_phi.division_at(v) ? -1 : +1;
        int inv_psi = inst.class_psi.division_at(v) ? -1 : +1;
        int symbol = hilbert_symbol(drep, inst.q, v);
        if (inv_phi != inv_psi * symbol) {
            ok = false;
            detail += "brauer@" + v.str() + " ";
        }
        LocalClass cls =
            cha_case(inst.delta, inst.q, inst.class_phi.ram, v, real_index(inst.phi));
        bool split = (cls == LocalClass::split);
        if (split == inst.class_psi.division_at(v)) {
            ok = false;
            detail += "case@" + v.str() + " ";
        }
    }
    int s_phi = real_index(inst.phi);
    int s_psi = real_index(inst.psi);
    if (s_psi != complement_index(s_phi, inst.q)) {
        ok = false;
        detail += "signature ";
    }
    bool inf_div = real_char_class(s_psi) == RealClass::division;
    if (inf_div != inst.class_psi.division_at(Place::infinite())) {
        ok = false;
        detail += "realclass ";
    }
    if (discriminant_class(inst.psi) != square_class(-drep * inst.q)) {
        ok = false;
        detail += "discfield ";
    }
    return {"local_invariants", ok, ok ? "all places" : detail, "expected"};
}

CheckResult check_conjugation_equivariance(const Instance& inst, Rng& rng, int count) {
    bool ok = true;
    std::string detail;
    for (int it = 0; it < count && ok; ++it) {
        CliffordElt alpha = random_alpha(inst.qs, rng);
        // transport L cap W through conjugation in the even algebra
        RatMat rows(inst.lw.rank(), 3);
        for (size_t i = 0; i < inst.lw.rank(); ++i) {
            CliffordElt y = embed_trace_zero(inst.lw.basis().row(i), inst.qs);
            CliffordElt yc = conjugate_by(alpha, y);
            rows.set_row(i, extract_vector(yc, inst.qs));
        }
        Lattice moved = Lattice::span(rows);
        if (!is_integral(moved, inst.psi)) {
            ok = false;
            detail = "transported lattice not integral";
            break;
        }
        CliffordOrder new_order = even_order(moved, inst.qs.alg);
        // alpha^{-1} (order) alpha
        RatMat conj(inst.ord.module.rank(), inst.qs.alg->dim());
        for (size_t i = 0; i < inst.ord.module.rank(); ++i) {
            CliffordElt x = inst.qs.alg->from_coeffs(inst.ord.module.basis().row(i));
            conj.set_row(i, conjugate_by(alpha, x).c);
        }
        Lattice conj_lat = Lattice::span(conj);
        if (new_order.module != conj_lat) {
            ok = false;
            detail = "orders differ for alpha " + alpha.str();
        }
    }
    return {"conjugation_equivariance", ok, ok ? "orders equal" : detail, "expected"};
}

std::vector<CheckResult> run_all_checks(const Instance& inst, Rng& rng, int alphas) {
    std::vector<CheckResult> out;
    out.push_back(check_lattice_identity(inst));
    out.push_back(check_even_order_index_laws(inst.lw, inst.psi));
    out.push_back(check_even_order_intersection(inst));
    out.push_back(check_discriminant_formulas(inst));
    out.push_back(check_local_invariants(inst));
    out.push_back(check_conjugation_equivariance(inst, rng, alphas));
    return out;
}

namespace {

bool smooth_enough(const Rat& det, long max_prime) {
    try {
        for (const auto& [p, e] : factor(det))
            if (p > max_prime) return false;
        return true;
    } catch (const FactorBoundExceeded&) {
        return false;
    }
}

}  // namespace

std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, size_t count, const CorpusOptions& opts) {
    Rng rng(seed);
    std::vector<CorpusEntry> out;
    while (out.size() < count) {
        RatMat g(4, 4);
        for (size_t i = 0; i < 4; ++i) {
            Rat d(rng.range(-opts.max_entry, opts.max_entry));
            g.at(i, i) = d;
            for (size_t j = i + 1; j < 4; ++j) {
                Rat off = Rat(rng.range(-opts.max_entry, opts.max_entry), 2);
                off.canonicalize();
                g.at(i, j) = off;
                g.at(j, i) = off;
            }
        }
        Rat det = g.det();
        if (det == 0 || !smooth_enough(det, opts.max_prime)) continue;
        Vec h(4);
        bool zero = true;
        for (size_t i = 0; i < 4; ++i) {
            h[i] = Rat(rng.range(-opts.max_entry, opts.max_entry));
            if (h[i] != 0) zero = false;
        }
        if (zero) continue;
        long denom_pick = rng.below(4);
        if (denom_pick == 1)
            for (auto& x : h) x /= 2;
        else if (denom_pick == 2)
            for (auto& x : h) x /= 3;
        QuadSpace phi(g);
        if (phi.form(h) == 0) continue;
        out.push_back(CorpusEntry{g, h});
    }
    return out;
}

std::vector<std::pair<RatMat, RatMat>> gen_ternary_corpus(std::uint64_t seed, size_t count,
                                                          const CorpusOptions& opts) {
    Rng rng(seed);
    std::vector<std::pair<RatMat, RatMat>> out;
    while (out.size() < count) {
        RatMat g(3, 3);
        for (size_t i = 0; i < 3; ++i) {
            g.at(i, i) = Rat(rng.range(-opts.max_entry, opts.max_entry));
            for (size_t j = i + 1; j < 3; ++j) {
                Rat off = Rat(rng.range(-opts.max_entry, opts.max_entry), 2);
                off.canonicalize();
                g.at(i, j) = off;
                g.at(j, i) = off;
            }
        }
        Rat det = g.det();
        if (det == 0 || !smooth_enough(det, opts.max_prime)) continue;
        QuadSpace psi(g);
        Lattice m = maximal_lattice(psi);
        // random integral sublattice: integer row transform with nonzero
        // determinant, occasionally an extra global scale
        RatMat u(3, 3);
        for (size_t i = 0; i < 3; ++i) {
            u.at(i, i) = Rat(rng.range(1, 3));
            for (size_t j = i + 1; j < 3; ++j) u.at(i, j) = Rat(rng.range(0, 2));
        }
        RatMat rows = u * m.basis();
        long sc = rng.below(4);
        if (sc == 1)
            rows = rows.scaled(Rat(2));
        else if (sc == 2)
            rows = rows.scaled(Rat(3));
        out.emplace_back(g, rows);
    }
    return out;
}

CliffordElt random_alpha(const QuatStructure& qs, Rng& rng) {
    for (;;) {
        Vec v(4);
        for (auto& x : v) x = Rat(rng.range(-3, 3));
        CliffordElt alpha = qs.from_even(v);
        if (alpha.is_zero()) continue;
        if (quat_norm(alpha) != 0) return alpha;
    }
}

}  // namespace qlat
