#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lb/mat.hpp"

namespace lb {

enum class Family {
    Abelian2,
    Aff2,
    Abelian3,
    H3,
    R3,
    R3Lambda,
    R3PrimeLambda,
    Su2,
    Sl2R,
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Catalog tag: family plus the rational parameter for the two lambda families.
struct CatalogLabel {
    Family family;
    std::optional<Rat> lambda;

    friend bool operator==(const CatalogLabel& a, const CatalogLabel& b) {
        return a.family == b.family && a.lambda == b.lambda;
    }
};

std::string label_str(const CatalogLabel& l);

// Structure constants c[k].at(i,j) with [e_i,e_j] = sum_k c[k](i,j) e_k.
struct LieAlgebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Mat> c;
    std::optional<CatalogLabel> label;

    Rat bracket_coeff(int k, int i, int j) const { return c[k].at(i, j); }
    // [v, w] expressed in the basis.
    Vec bracket(const Vec& v, const Vec& w) const;
};

// Number of wedge coordinates: dim(dim-1)/2.
int wedge_dim(int dim);

// Coordinates of a∧b in the fixed wedge basis: (e1∧e2) for dim 2,
// (e1∧e2, e2∧e3, e3∧e1) for dim 3.
Vec wedge_coords(const Vec& a, const Vec& b, int dim);

// Builds the catalog algebra in its canonical basis. Throws
// std::invalid_argument("parameter out of range") when lambda violates the
// family constraint (|λ|≤1 for R3Lambda, λ≥0 for R3PrimeLambda).
LieAlgebra catalog_build(const CatalogLabel& label);

// Jacobi cyclic sums [[e_i,e_j],e_k] + cyc, one vector per triple i<j<k.
std::vector<Vec> check_jacobi(const LieAlgebra& g);

bool is_lie_algebra(const LieAlgebra& g);

// Matrix of ad_z = [z, -] in the algebra basis.
Mat ad_matrix(const LieAlgebra& g, const Vec& z);

// Matrix of the Leibniz extension of ad_z to Λ²g in the fixed wedge basis
// (e1∧e2, e2∧e3, e3∧e1). Only defined for dim 3.
Mat wedge_action_matrix(const LieAlgebra& g, const Vec& z);

// Basis of the center {z : [z, e_i] = 0 for all i}.
std::vector<Vec> center(const LieAlgebra& g);

// Basis of span{[e_i, e_j]}.
std::vector<Vec> derived_subalgebra(const LieAlgebra& g);

// Basis of {ω ∈ Λ²g : ad_z ω = 0 for all z}; dim 3 only.
std::vector<Vec> invariant_wedge_subspace(const LieAlgebra& g);

// K_ij = trace(ad_{e_i} ad_{e_j}).
Mat killing_form(const LieAlgebra& g);

}  // namespace lb
