#pragma once

#include <optional>

#include "qlat/lattice.hpp"
#include "qlat/qspace.hpp"

namespace qlat {

// Strictly larger integral overlattice L + Z*(v/p) if one exists at p:
// v runs over the radical of the mod-p pairing on L/pL and must satisfy
// form(v) = 0 mod p^2 (well defined on radical cosets).
std::optional<Lattice> enlarge_at(const Lattice& l, const QuadSpace& s, long p);

// Integral and admitting no enlargement at any prime whose squared power
// divides [dual L / L]. Throws NotIntegral.
bool is_maximal(const Lattice& l, const QuadSpace& s);

// Repeated enlargement until maximal. Throws NotIntegral.
Lattice maximalize(const Lattice& l, const QuadSpace& s);

// A maximal lattice in the space: the standard lattice scaled integral,
// then maximalized.
Lattice maximal_lattice(const QuadSpace& s);

}  // namespace qlat
