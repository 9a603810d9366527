#pragma once

#include <array>
#include <vector>

#include "lb/liealg.hpp"

namespace lb {

// Cobracket stored as an N×dim matrix (N = wedge_dim): column j holds the
// wedge-basis coordinates of δ(e_j). For dim 3 the nine entries are, in the
// conventional naming, [[a1,b1,c1],[a2,b2,c2],[a3,b3,c3]].
struct Cobracket {
    Mat m;

    Cobracket() = default;
    explicit Cobracket(Mat mm) : m(std::move(mm)) {}
    static Cobracket zero(int dim) { return Cobracket(Mat(wedge_dim(dim), dim)); }

    // δ(v) in wedge coordinates.
    Vec apply(const Vec& v) const { return m * v; }

    bool is_zero() const { return m.is_zero(); }

    friend bool operator==(const Cobracket& a, const Cobracket& b) { return a.m == b.m; }
};

// Leibniz extension of ad_z to Λ²g applied to wedge coordinates; works for
// dim 2 and dim 3.
Vec wedge_ad(const LieAlgebra& g, const Vec& z, const Vec& omega);

// residual(i,j) = δ([e_i,e_j]) − ad_{e_i}(δ e_j) + ad_{e_j}(δ e_i), one wedge
// vector per pair i<j; all zero iff d is a 1-cocycle.
std::vector<Vec> cocycle_residual(const LieAlgebra& g, const Cobracket& d);

bool is_cocycle(const LieAlgebra& g, const Cobracket& d);

// The three quadratic co-Jacobi equations in the nine dim-3 coefficients.
// Throws for dim ≠ 3.
std::array<Rat, 3> cojacobi_equations_3d(const Cobracket& d);

// Lie algebra on g* with bracket [f_i,f_j]* read off from d.
LieAlgebra dual_algebra(int dim, const Cobracket& d);

// Jacobi residuals of the dual bracket; zero iff co-Jacobi holds.
std::vector<Vec> dual_jacobi_residual(const LieAlgebra& g, const Cobracket& d);

bool is_cojacobi(const LieAlgebra& g, const Cobracket& d);

// Validated pair (g, δ): construction rejects non-bialgebras.
struct LieBialgebra {
    LieAlgebra g;
    Cobracket delta;

    LieBialgebra(LieAlgebra alg, Cobracket d);
};

// r = α e1∧e2 + β e2∧e3 + γ e3∧e1.
struct RMatrix {
    Rat alpha, beta, gamma;

    Vec coords() const { return {alpha, beta, gamma}; }

    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
};

// Characteristic endomorphism Δ = bracket ∘ δ with its numeric invariants.
// charpoly holds the coefficients of det(tI − D) from t^dim down to t^0.
struct DerivationReport {
    Mat D;
    Rat trace;
    Rat det;
    std::vector<Rat> charpoly;
};

DerivationReport char_derivation(const LieBialgebra& b);

// Endomorphism bracket∘δ without validity bookkeeping.
Mat char_derivation_matrix(const LieAlgebra& g, const Cobracket& d);

// δ(e_j) = ad_{e_j}(r): column j = wedge_action_matrix(g, e_j) · r.
Cobracket coboundary_from_r(const LieAlgebra& g, const RMatrix& r);

// Unique r with coboundary_from_r(g, r) = d; only for Su2/Sl2R.
// Throws "not a coboundary" when unsolvable, "unsupported" otherwise.
RMatrix coboundary_preimage(const LieAlgebra& g, const Cobracket& d);

// Coefficient of [r,r] on e1∧e2∧e3; only for Su2/Sl2R.
// Closed forms: −2(α²+β²+γ²) on su(2), +2(α²−β²−γ²) on sl(2,ℝ).
Rat schouten_self_bracket(const LieAlgebra& g, const RMatrix& r);

// Induced bialgebra on the abelian quotient g/[g,g]; quotient basis = images
// of the original basis vectors whose index is not a pivot of [g,g].
LieBialgebra quotient_bialgebra(const LieBialgebra& b);

// true iff δ(v) ⊆ v∧g for every basis vector of v.
bool is_coideal(const LieBialgebra& b, const std::vector<Vec>& v);

// Basis of ker δ; verifies closure under the bracket.
std::vector<Vec> kernel_subalgebra(const LieBialgebra& b);

}  // namespace lb
