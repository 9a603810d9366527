#include "lb/cohom.hpp"

#include <stdexcept>

namespace lb {

std::vector<Cobracket> cocycle_space(const LieAlgebra& g) {
    int n = g.dim, nw = wedge_dim(n);
    // Unknown u(p,k) = entry m.at(p,k), flattened row-major: index p*n + k.
    int unknowns = nw * n;
    int pairs = n * (n - 1) / 2;
    Mat sys(pairs * nw, unknowns);
    auto basis = [&](int i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        return v;
    };
    int block = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++block) {
            Vec w = g.bracket(basis(i), basis(j));
            // residual(q) = Σ_k w_k m(q,k) − Σ_p Wi(q,p) m(p,j) + Σ_p Wj(q,p) m(p,i)
            Mat Wi(nw, nw), Wj(nw, nw);
            if (n == 3) {
                Wi = wedge_action_matrix(g, basis(i));
                Wj = wedge_action_matrix(g, basis(j));
            } else {
                Vec oi = wedge_ad(g, basis(i), Vec{Rat(1)});
                Vec oj = wedge_ad(g, basis(j), Vec{Rat(1)});
                Wi.at(0, 0) = oi[0];
                Wj.at(0, 0) = oj[0];
            }
            for (int q = 0; q < nw; ++q) {
                int row = block * nw + q;
                for (int k = 0; k < n; ++k) sys.at(row, q * n + k) += w[k];
                for (int p = 0; p < nw; ++p) {
                    sys.at(row, p * n + j) -= Wi.at(q, p);
                    sys.at(row, p * n + i) += Wj.at(q, p);
                }
            }
        }
    std::vector<Cobracket> out;
    for (const Vec& v : nullspace_basis(sys)) {
        Mat m(nw, n);
        for (int p = 0; p < nw; ++p)
            for (int k = 0; k < n; ++k) m.at(p, k) = v[p * n + k];
        out.push_back(Cobracket(m));
    }
    return out;
}

std::vector<CoboundaryElem> coboundary_space(const LieAlgebra& g) {
    if (g.dim != 3) throw std::invalid_argument("coboundary space requires dim 3");
    // Rows: vectorized ad(w_q) for the three wedge basis elements, augmented
    // with the identity so each reduced row keeps its witness r.
    Mat aug(3, 9 + 3);
    RMatrix units[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    for (int q = 0; q < 3; ++q) {
        Cobracket d = coboundary_from_r(g, units[q]);
        for (int p = 0; p < 3; ++p)
            for (int k = 0; k < 3; ++k) aug.at(q, p * 3 + k) = d.m.at(p, k);
        aug.at(q, 9 + q) = 1;
    }
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    std::vector<CoboundaryElem> out;
    for (size_t row = 0; row < piv.size(); ++row) {
        if (piv[row] >= 9) break;  // pure-witness rows span ker ad = (Λ²g)^g
        CoboundaryElem e;
        Mat m(3, 3);
        for (int p = 0; p < 3; ++p)
            for (int k = 0; k < 3; ++k) m.at(p, k) = r.at(static_cast<int>(row), p * 3 + k);
        e.delta = Cobracket(m);
        e.r = {r.at(static_cast<int>(row), 9), r.at(static_cast<int>(row), 10),
               r.at(static_cast<int>(row), 11)};
        out.push_back(std::move(e));
    }
    return out;
}

CohomologyReport h1_report(const LieAlgebra& g) {
    if (g.dim != 3) throw std::invalid_argument("h1 report requires dim 3");
    CohomologyReport rep;
    rep.dim_invariants = static_cast<int>(invariant_wedge_subspace(g).size());
    rep.dim_coboundaries = static_cast<int>(coboundary_space(g).size());
    rep.cocycle_basis = cocycle_space(g);
    rep.dim_cocycles = static_cast<int>(rep.cocycle_basis.size());
    rep.dim_h1 = rep.dim_cocycles - rep.dim_coboundaries;
    return rep;
}

}  // namespace lb
