#pragma once

#include <vector>

#include "lb/bialg.hpp"

namespace lb {

// Coboundary basis element together with an r realizing it: delta = ad(r).
struct CoboundaryElem {
    Cobracket delta;
    Vec r;  // wedge coordinates
};

struct CohomologyReport {
    int dim_invariants = 0;
    int dim_coboundaries = 0;
    int dim_cocycles = 0;
    int dim_h1 = 0;
    std::vector<Cobracket> cocycle_basis;
};

// Basis of the kernel of the linearized 1-cocycle condition.
std::vector<Cobracket> cocycle_space(const LieAlgebra& g);

// Basis of {ad(r) : r ∈ Λ²g}, each with an explicit witness r. Dim 3 only.
std::vector<CoboundaryElem> coboundary_space(const LieAlgebra& g);

// Assembles (Λ²g)^g, coboundary, cocycle and H¹ dimensions. Dim 3 only.
CohomologyReport h1_report(const LieAlgebra& g);

}  // namespace lb
