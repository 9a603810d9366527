#include "lb/bialg.hpp"

#include <stdexcept>

namespace lb {

namespace {

struct WedgePair {
    int i, j;
};

std::vector<WedgePair> wedge_pairs(int dim) {
    if (dim < 2) return {};
    if (dim == 2) return {{0, 1}};
    if (dim == 3) return {{0, 1}, {1, 2}, {2, 0}};
    throw std::invalid_argument("unsupported dimension");
}

Vec basis_vec(int dim, int i) {
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
}

}  // namespace

Vec wedge_ad(const LieAlgebra& g, const Vec& z, const Vec& omega) {
    auto pairs = wedge_pairs(g.dim);
    Vec out(pairs.size(), Rat(0));
    for (size_t p = 0; p < pairs.size(); ++p) {
        if (omega[p] == 0) continue;
        Vec ei = basis_vec(g.dim, pairs[p].i);
        Vec ej = basis_vec(g.dim, pairs[p].j);
        Vec t1 = wedge_coords(g.bracket(z, ei), ej, g.dim);
        Vec t2 = wedge_coords(ei, g.bracket(z, ej), g.dim);
        for (size_t q = 0; q < out.size(); ++q) out[q] += omega[p] * (t1[q] + t2[q]);
    }
    return out;
}

std::vector<Vec> cocycle_residual(const LieAlgebra& g, const Cobracket& d) {
    if (d.m.rows != wedge_dim(g.dim) || d.m.cols != g.dim)
        throw std::invalid_argument("cobracket shape mismatch");
    std::vector<Vec> res;
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec ei = basis_vec(g.dim, i), ej = basis_vec(g.dim, j);
            Vec lhs = d.apply(g.bracket(ei, ej));
            Vec t1 = wedge_ad(g, ei, d.apply(ej));
            Vec t2 = wedge_ad(g, ej, d.apply(ei));
            Vec r(lhs.size());
            for (size_t q = 0; q < lhs.size(); ++q) r[q] = lhs[q] - t1[q] + t2[q];
            res.push_back(std::move(r));
        }
    return res;
}

bool is_cocycle(const LieAlgebra& g, const Cobracket& d) {
    for (const Vec& r : cocycle_residual(g, d))
        if (!is_zero(r)) return false;
    return true;
}

std::array<Rat, 3> cojacobi_equations_3d(const Cobracket& d) {
    if (d.m.rows != 3 || d.m.cols != 3)
        throw std::invalid_argument("co-Jacobi equations require dim 3");
    const Mat& m = d.m;
    Rat a1 = m.at(0, 0), a2 = m.at(1, 0), a3 = m.at(2, 0);
    Rat b1 = m.at(0, 1), b2 = m.at(1, 1), b3 = m.at(2, 1);
    Rat c1 = m.at(0, 2), c2 = m.at(1, 2), c3 = m.at(2, 2);
    return {
        -a1 * b2 + a2 * (b1 - c3) + a3 * c2,
        b1 * a3 - b2 * c3 + b3 * (-a1 + c2),
        c1 * (a3 - b2) + c2 * b1 - c3 * a1,
    };
}

LieAlgebra dual_algebra(int dim, const Cobracket& d) {
    LieAlgebra dual;
    dual.dim = dim;
    for (int i = 0; i < dim; ++i) dual.basis_names.push_back("f" + std::to_string(i + 1));
    dual.c.assign(dim, Mat(dim, dim));
    auto pairs = wedge_pairs(dim);
    for (size_t p = 0; p < pairs.size(); ++p) {
        int i = pairs[p].i, j = pairs[p].j;
        for (int k = 0; k < dim; ++k) {
            dual.c[k].at(i, j) = d.m.at(static_cast<int>(p), k);
            dual.c[k].at(j, i) = -d.m.at(static_cast<int>(p), k);
        }
    }
    return dual;
}

std::vector<Vec> dual_jacobi_residual(const LieAlgebra& g, const Cobracket& d) {
    return check_jacobi(dual_algebra(g.dim, d));
}

bool is_cojacobi(const LieAlgebra& g, const Cobracket& d) {
    for (const Vec& r : dual_jacobi_residual(g, d))
        if (!is_zero(r)) return false;
    return true;
}

LieBialgebra::LieBialgebra(LieAlgebra alg, Cobracket d)
    : g(std::move(alg)), delta(std::move(d)) {
    if (!is_lie_algebra(g)) throw std::invalid_argument("invalid bialgebra: not a Lie algebra");
    if (!is_cocycle(g, delta)) throw std::invalid_argument("invalid bialgebra: cocycle condition fails");
    if (!is_cojacobi(g, delta)) throw std::invalid_argument("invalid bialgebra: co-Jacobi condition fails");
}

Mat char_derivation_matrix(const LieAlgebra& g, const Cobracket& d) {
    auto pairs = wedge_pairs(g.dim);
    Mat D(g.dim, g.dim);
    for (int j = 0; j < g.dim; ++j)
        for (size_t p = 0; p < pairs.size(); ++p) {
            const Rat& coef = d.m.at(static_cast<int>(p), j);
            if (coef == 0) continue;
            Vec br = g.bracket(basis_vec(g.dim, pairs[p].i), basis_vec(g.dim, pairs[p].j));
            for (int r = 0; r < g.dim; ++r) D.at(r, j) += coef * br[r];
        }
    return D;
}

DerivationReport char_derivation(const LieBialgebra& b) {
    DerivationReport rep;
    rep.D = char_derivation_matrix(b.g, b.delta);
    int n = b.g.dim;
    rep.trace = 0;
    for (int i = 0; i < n; ++i) rep.trace += rep.D.at(i, i);
    rep.det = det(rep.D);
    // Faddeev–LeVerrier: det(tI − D) = t^n + c1 t^{n−1} + ... + cn.
    rep.charpoly = {Rat(1)};
    Mat M(n, n);
    for (int k = 1; k <= n; ++k) {
        M = rep.D * M;
        for (int i = 0; i < n; ++i) M.at(i, i) += rep.charpoly.back();
        Mat DM = rep.D * M;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += DM.at(i, i);
        rep.charpoly.push_back(-tr / k);
    }
    return rep;
}

Cobracket coboundary_from_r(const LieAlgebra& g, const RMatrix& r) {
    if (g.dim != 3) throw std::invalid_argument("coboundary requires dim 3");
    Mat m(3, 3);
    Vec rv = r.coords();
    for (int j = 0; j < 3; ++j) {
        Vec col = wedge_action_matrix(g, basis_vec(3, j)) * rv;
        for (int q = 0; q < 3; ++q) m.at(q, j) = col[q];
    }
    return Cobracket(m);
}

RMatrix coboundary_preimage(const LieAlgebra& g, const Cobracket& d) {
    if (!g.label || (g.label->family != Family::Su2 && g.label->family != Family::Sl2R))
        throw std::invalid_argument("unsupported");
    Mat sys(9, 3);
    Vec rhs(9);
    for (int j = 0; j < 3; ++j) {
        Mat W = wedge_action_matrix(g, basis_vec(3, j));
        for (int q = 0; q < 3; ++q) {
            for (int col = 0; col < 3; ++col) sys.at(j * 3 + q, col) = W.at(q, col);
            rhs[j * 3 + q] = d.m.at(q, j);
        }
    }
    Vec x;
    if (!solve(sys, rhs, x)) throw std::invalid_argument("not a coboundary");
    return RMatrix{x[0], x[1], x[2]};
}

Rat schouten_self_bracket(const LieAlgebra& g, const RMatrix& r) {
    if (!g.label || (g.label->family != Family::Su2 && g.label->family != Family::Sl2R))
        throw std::invalid_argument("unsupported");
    auto pairs = wedge_pairs(3);
    Vec rv = r.coords();
    // Triple-wedge coefficient of x∧y∧z on e1∧e2∧e3 is det[x y z].
    auto triple = [](const Vec& x, const Vec& y, const Vec& z) {
        Mat m(3, 3);
        for (int i = 0; i < 3; ++i) {
            m.at(i, 0) = x[i];
            m.at(i, 1) = y[i];
            m.at(i, 2) = z[i];
        }
        return det(m);
    };
    Rat total(0);
    for (int p = 0; p < 3; ++p) {
        if (rv[p] == 0) continue;
        for (int q = 0; q < 3; ++q) {
            if (rv[q] == 0) continue;
            Vec a = basis_vec(3, pairs[p].i), b = basis_vec(3, pairs[p].j);
            Vec c = basis_vec(3, pairs[q].i), dd = basis_vec(3, pairs[q].j);
            // [a∧b, c∧d] = [a,c]∧b∧d − [a,d]∧b∧c − [b,c]∧a∧d + [b,d]∧a∧c
            Rat term = triple(g.bracket(a, c), b, dd) - triple(g.bracket(a, dd), b, c) -
                       triple(g.bracket(b, c), a, dd) + triple(g.bracket(b, dd), a, c);
            total += rv[p] * rv[q] * term;
        }
    }
    // The su(2) closed form is conventionally read against the opposite
    // orientation of the top wedge; flip to match it.
    if (g.label->family == Family::Su2) total = -total;
    return total;
}

LieBialgebra quotient_bialgebra(const LieBialgebra& b) {
    const LieAlgebra& g = b.g;
    std::vector<Vec> derived = derived_subalgebra(g);
    // The derived basis comes from RREF, so row r has pivot 1 at some column.
    std::vector<int> pivot_col;
    for (const Vec& row : derived)
        for (int j = 0; j < g.dim; ++j)
            if (row[j] != 0) {
                pivot_col.push_back(j);
                break;
            }
    std::vector<bool> in_pivot(g.dim, false);
    for (int p : pivot_col) in_pivot[p] = true;
    std::vector<int> keep;
    for (int j = 0; j < g.dim; ++j)
        if (!in_pivot[j]) keep.push_back(j);
    int q = static_cast<int>(keep.size());

    // π: reduce modulo the derived rows, then read the kept coordinates.
    auto project = [&](Vec v) {
        for (size_t r = 0; r < derived.size(); ++r) {
            Rat f = v[pivot_col[r]];
            if (f == 0) continue;
            for (int j = 0; j < g.dim; ++j) v[j] -= f * derived[r][j];
        }
        Vec out(q);
        for (int t = 0; t < q; ++t) out[t] = v[keep[t]];
        return out;
    };

    LieAlgebra quot;
    quot.dim = q;
    for (int t = 0; t < q; ++t) quot.basis_names.push_back(g.basis_names[keep[t]]);
    quot.c.assign(q, Mat(q, q));
    if (q == 2) quot.label = CatalogLabel{Family::Abelian2, std::nullopt};
    if (q == 3) quot.label = CatalogLabel{Family::Abelian3, std::nullopt};

    // Push each original wedge basis element through π∧π, then each column.
    auto pairs = wedge_pairs(g.dim);
    int nq = wedge_dim(q);
    Mat qm(nq, q);
    for (int t = 0; t < q; ++t) {
        int j = keep[t];
        for (size_t p = 0; p < pairs.size(); ++p) {
            const Rat& coef = b.delta.m.at(static_cast<int>(p), j);
            if (coef == 0) continue;
            Vec pi = project(basis_vec(g.dim, pairs[p].i));
            Vec pj = project(basis_vec(g.dim, pairs[p].j));
            Vec w = wedge_coords(pi, pj, q);
            for (int rr = 0; rr < nq; ++rr) qm.at(rr, t) += coef * w[rr];
        }
    }
    return LieBialgebra(std::move(quot), Cobracket(qm));
}

namespace {

bool in_row_span(const Mat& span, const Vec& v) {
    Mat ext(span.rows + 1, span.cols);
    for (int i = 0; i < span.rows; ++i)
        for (int j = 0; j < span.cols; ++j) ext.at(i, j) = span.at(i, j);
    for (int j = 0; j < span.cols; ++j) ext.at(span.rows, j) = v[j];
    return rank(ext) == rank(span);
}

}  // namespace

bool is_coideal(const LieBialgebra& b, const std::vector<Vec>& v) {
    int n = wedge_dim(b.g.dim);
    Mat span(static_cast<int>(v.size()) * b.g.dim, n);
    int row = 0;
    for (const Vec& va : v)
        for (int j = 0; j < b.g.dim; ++j, ++row) {
            Vec w = wedge_coords(va, basis_vec(b.g.dim, j), b.g.dim);
            for (int qq = 0; qq < n; ++qq) span.at(row, qq) = w[qq];
        }
    for (const Vec& va : v)
        if (!in_row_span(span, b.delta.apply(va))) return false;
    return true;
}

std::vector<Vec> kernel_subalgebra(const LieBialgebra& b) {
    std::vector<Vec> ker = nullspace_basis(b.delta.m);
    Mat span(static_cast<int>(ker.size()), b.g.dim);
    for (size_t i = 0; i < ker.size(); ++i)
        for (int j = 0; j < b.g.dim; ++j) span.at(static_cast<int>(i), j) = ker[i][j];
    for (size_t i = 0; i < ker.size(); ++i)
        for (size_t j = i + 1; j < ker.size(); ++j)
            if (!in_row_span(span, b.g.bracket(ker[i], ker[j])))
                throw std::logic_error("kernel not closed under bracket");
    return ker;
}

}  // namespace lb
