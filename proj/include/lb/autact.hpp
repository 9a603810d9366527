#pragma once

#include <cstdint>
#include <vector>

#include "lb/bialg.hpp"

namespace lb {

// Bracket-preserving invertible matrix, checked at construction.
struct Automorphism {
    LieAlgebra g;
    Mat phi;

    Automorphism(LieAlgebra alg, Mat m);
};

bool is_lie_automorphism(const LieAlgebra& g, const Mat& phi);

// Matrix of φ∧φ on Λ² in the fixed wedge basis; 3×3 input, throws "singular".
Mat wedge_square(const Mat& phi);

// δ′ = (φ∧φ)⁻¹ · δ · φ (contravariant pullback). Supports dim 2 and 3.
Cobracket pullback(const Automorphism& phi, const Cobracket& d);

bool is_bialgebra_automorphism(const LieBialgebra& b, const Mat& phi);

// Deterministic seeded draws from the catalog automorphism family of the
// labeled algebra; every sample passes the Automorphism check.
std::vector<Automorphism> sample_aut(const CatalogLabel& spec, std::uint64_t seed, int count);

}  // namespace lb
