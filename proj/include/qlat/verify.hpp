#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlat/clifford.hpp"
#include "qlat/invariants.hpp"
#include "qlat/lattice.hpp"
#include "qlat/maximality.hpp"
#include "qlat/qspace.hpp"
#include "qlat/rng.hpp"

namespace qlat {

// One verification target: a quaternary space with a maximal lattice, a
// splitting vector, and everything derived from them.
struct Instance {
    QuadSpace phi;
    Lattice lat;  // maximal
    Vec h;
    Rat q;  // phi[h]

    RatMat wbasis;  // 3x4, basis of the complement
    QuadSpace psi;
    Lattice lw;  // lat intersect W, in W coordinates
    Lattice m;   // maximal lattice in W containing lw

    QuatStructure qs;
    CliffordOrder ord;  // even order of lw

    SquareClass delta;    // of phi
    QuatClass class_phi;  // quaternion class of phi
    QuatClass class_psi;  // of psi

    FracIdeal sf, rt;   // |vol_norm| Z = sf * rt^2, sf squarefree
    FracIdeal dpsi;     // discriminant of class_psi
    FracIdeal cofree;   // primes of sf prime to dpsi
    FracIdeal idx_ml;   // [m / lw]
    FracIdeal pairing;  // 2 phi(h, lat)
    FracIdeal disc_l;   // [dual lat / lat]
    FracIdeal disc_m;   // [dual m / m]
    FracIdeal bq;       // from 2q disc_l = bq^2 disc_m
};

Instance build_instance(const RatMat& gram, const Vec& h,
                        const std::optional<RatMat>& lattice_rows = std::nullopt);

struct CheckResult {
    std::string name;
    bool pass;
    std::string lhs, rhs;
};

// (L cap W) xi = r c D [M / L cap W] (dual order cap trace-zero part)
CheckResult check_lattice_identity(const Instance& inst);

// [A+(M)/A+(N)] = [M/N]^2, [dual A+(N)/A+(N)] = (([dual N/N])/2)^2,
// d(A+(N)) = [dual N/N]/2, for an integral ternary lattice.
CheckResult check_even_order_index_laws(const Lattice& n, const QuadSpace& psi);

// A+(L cap W) = A+(L) cap A+(W) inside the full Clifford algebra.
CheckResult check_even_order_intersection(const Instance& inst);

// The four discriminant-ideal formulas plus the square-root consistency
// of bq.
CheckResult check_discriminant_formulas(const Instance& inst);

// Local Brauer product relation, signature relation, case classifier
// agreement, and the complement's discriminant class.
CheckResult check_local_invariants(const Instance& inst);

// A+((L cap W) transported by alpha) = alpha^{-1} A+(L cap W) alpha for
// random invertible even alpha.
CheckResult check_conjugation_equivariance(const Instance& inst, Rng& rng, int count);

std::vector<CheckResult> run_all_checks(const Instance& inst, Rng& rng, int alphas = 3);

struct CorpusOptions {
    long max_entry = 6;
    long max_prime = 97;
};

struct CorpusEntry {
    RatMat gram;
    Vec h;
};

// Deterministic corpus: Gram matrices with integer diagonal and
// half-integer off-diagonals, nondegenerate with smooth determinant;
// splitting vectors with small entries and occasional denominators.
std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, size_t count,
                                    const CorpusOptions& opts = {});

// Random integral lattices in random ternary spaces, for the index-law
// corpus.
std::vector<std::pair<RatMat, RatMat>> gen_ternary_corpus(std::uint64_t seed, size_t count,
                                                          const CorpusOptions& opts = {});

// Random invertible even element with small integer coordinates.
CliffordElt random_alpha(const QuatStructure& qs, Rng& rng);

}  // namespace qlat
