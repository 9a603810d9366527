#include "lb/liealg.hpp"

#include <stdexcept>

namespace lb {

std::string family_name(Family f) {
    switch (f) {
        case Family::Abelian2: return "Abelian2";
        case Family::Aff2: return "Aff2";
        case Family::Abelian3: return "Abelian3";
        case Family::H3: return "H3";
        case Family::R3: return "R3";
        case Family::R3Lambda: return "R3Lambda";
        case Family::R3PrimeLambda: return "R3PrimeLambda";
        case Family::Su2: return "Su2";
        case Family::Sl2R: return "Sl2R";
    }
    throw std::logic_error("bad family");
}

Family family_from_name(const std::string& s) {
    if (s == "Abelian2") return Family::Abelian2;
    if (s == "Aff2") return Family::Aff2;
    if (s == "Abelian3") return Family::Abelian3;
    if (s == "H3") return Family::H3;
    if (s == "R3") return Family::R3;
    if (s == "R3Lambda") return Family::R3Lambda;
    if (s == "R3PrimeLambda") return Family::R3PrimeLambda;
    if (s == "Su2") return Family::Su2;
    if (s == "Sl2R") return Family::Sl2R;
    throw std::invalid_argument("unknown family: " + s);
}

std::string label_str(const CatalogLabel& l) {
    std::string s = family_name(l.family);
    if (l.lambda) s += ",lambda=" + rat_str(*l.lambda);
    return s;
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
    Vec out(dim, Rat(0));
    for (int i = 0; i < dim; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (w[j] == 0) continue;
            Rat f = v[i] * w[j];
            for (int k = 0; k < dim; ++k) out[k] += f * c[k].at(i, j);
        }
    }
    return out;
}

int wedge_dim(int dim) { return dim * (dim - 1) / 2; }

namespace {

LieAlgebra make(int dim, std::vector<std::string> names, CatalogLabel label) {
    LieAlgebra g;
    g.dim = dim;
    g.basis_names = std::move(names);
    g.c.assign(dim, Mat(dim, dim));
    g.label = label;
    return g;
}

// Sets [e_i, e_j] = sum coeffs[k] e_k, and the antisymmetric mirror.
void set_bracket(LieAlgebra& g, int i, int j, const Vec& coeffs) {
    for (int k = 0; k < g.dim; ++k) {
        g.c[k].at(i, j) = coeffs[k];
        g.c[k].at(j, i) = -coeffs[k];
    }
}

}  // namespace

LieAlgebra catalog_build(const CatalogLabel& label) {
    switch (label.family) {
        case Family::Abelian2:
            return make(2, {"e1", "e2"}, label);
        case Family::Aff2: {
            // basis (h, x): [h,x] = x
            LieAlgebra g = make(2, {"h", "x"}, label);
            set_bracket(g, 0, 1, {Rat(0), Rat(1)});
            return g;
        }
        case Family::Abelian3:
            return make(3, {"e1", "e2", "e3"}, label);
        case Family::H3: {
            // basis (x, y, h): [x,y] = h
            LieAlgebra g = make(3, {"x", "y", "h"}, label);
            set_bracket(g, 0, 1, {Rat(0), Rat(0), Rat(1)});
            return g;
        }
        case Family::R3: {
            // basis (x, y, h): [h,x] = x, [h,y] = x + y
            LieAlgebra g = make(3, {"x", "y", "h"}, label);
            set_bracket(g, 2, 0, {Rat(1), Rat(0), Rat(0)});
            set_bracket(g, 2, 1, {Rat(1), Rat(1), Rat(0)});
            return g;
        }
        case Family::R3Lambda: {
            if (!label.lambda || *label.lambda < -1 || *label.lambda > 1)
                throw std::invalid_argument("parameter out of range");
            Rat lam = *label.lambda;
            // basis (x, y, h): [h,x] = x, [h,y] = λy
            LieAlgebra g = make(3, {"x", "y", "h"}, label);
            set_bracket(g, 2, 0, {Rat(1), Rat(0), Rat(0)});
            set_bracket(g, 2, 1, {Rat(0), lam, Rat(0)});
            return g;
        }
        case Family::R3PrimeLambda: {
            if (!label.lambda || *label.lambda < 0)
                throw std::invalid_argument("parameter out of range");
            Rat lam = *label.lambda;
            // basis (x, y, h): [h,x] = λx − y, [h,y] = x + λy
            LieAlgebra g = make(3, {"x", "y", "h"}, label);
            set_bracket(g, 2, 0, {lam, Rat(-1), Rat(0)});
            set_bracket(g, 2, 1, {Rat(1), lam, Rat(0)});
            return g;
        }
        case Family::Su2: {
            // basis (u, v, w): [u,v]=w, [v,w]=u, [w,u]=v
            LieAlgebra g = make(3, {"u", "v", "w"}, label);
            set_bracket(g, 0, 1, {Rat(0), Rat(0), Rat(1)});
            set_bracket(g, 1, 2, {Rat(1), Rat(0), Rat(0)});
            set_bracket(g, 2, 0, {Rat(0), Rat(1), Rat(0)});
            return g;
        }
        case Family::Sl2R: {
            // basis (u, v, w): [u,v]=w, [v,w]=−u, [w,u]=−v
            LieAlgebra g = make(3, {"u", "v", "w"}, label);
            set_bracket(g, 0, 1, {Rat(0), Rat(0), Rat(1)});
            set_bracket(g, 1, 2, {Rat(-1), Rat(0), Rat(0)});
            set_bracket(g, 2, 0, {Rat(0), Rat(-1), Rat(0)});
            return g;
        }
    }
    throw std::logic_error("bad family");
}

std::vector<Vec> check_jacobi(const LieAlgebra& g) {
    std::vector<Vec> res;
    Vec e(g.dim, Rat(0));
    auto basis = [&](int i) {
        Vec v(g.dim, Rat(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            for (int k = j + 1; k < g.dim; ++k) {
                Vec ei = basis(i), ej = basis(j), ek = basis(k);
                Vec s = g.bracket(g.bracket(ei, ej), ek);
                Vec t = g.bracket(g.bracket(ej, ek), ei);
                Vec u = g.bracket(g.bracket(ek, ei), ej);
                Vec sum(g.dim, Rat(0));
                for (int m = 0; m < g.dim; ++m) sum[m] = s[m] + t[m] + u[m];
                res.push_back(std::move(sum));
            }
    return res;
}

bool is_lie_algebra(const LieAlgebra& g) {
    for (int k = 0; k < g.dim; ++k)
        for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j)
                if (g.c[k].at(i, j) != -g.c[k].at(j, i)) return false;
    for (const Vec& r : check_jacobi(g))
        if (!is_zero(r)) return false;
    return true;
}

Mat ad_matrix(const LieAlgebra& g, const Vec& z) {
    Mat m(g.dim, g.dim);
    for (int j = 0; j < g.dim; ++j) {
        Vec ej(g.dim, Rat(0));
        ej[j] = 1;
        Vec w = g.bracket(z, ej);
        for (int i = 0; i < g.dim; ++i) m.at(i, j) = w[i];
    }
    return m;
}

namespace {

// Index pairs of the fixed wedge basis, in order.
const int kWedgePairs3[3][2] = {{0, 1}, {1, 2}, {2, 0}};

}  // namespace

Vec wedge_coords(const Vec& a, const Vec& b, int dim) {
    if (dim < 2) return {};
    if (dim == 2) return {a[0] * b[1] - a[1] * b[0]};
    if (dim == 3)
        return {a[0] * b[1] - a[1] * b[0], a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2]};
    throw std::invalid_argument("unsupported dimension");
}

Mat wedge_action_matrix(const LieAlgebra& g, const Vec& z) {
    if (g.dim != 3) throw std::invalid_argument("wedge action requires dim 3");
    Mat m(3, 3);
    for (int col = 0; col < 3; ++col) {
        int i = kWedgePairs3[col][0], j = kWedgePairs3[col][1];
        Vec ei(3, Rat(0)), ej(3, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        Vec zi = g.bracket(z, ei);
        Vec zj = g.bracket(z, ej);
        Vec w1 = wedge_coords(zi, ej, 3);
        Vec w2 = wedge_coords(ei, zj, 3);
        for (int r = 0; r < 3; ++r) m.at(r, col) = w1[r] + w2[r];
    }
    return m;
}

std::vector<Vec> center(const LieAlgebra& g) {
    // Stack the maps z ↦ [z, e_i] for all i; kernel = center.
    Mat sys(g.dim * g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int row = 0; row < g.dim; ++row)
            for (int zc = 0; zc < g.dim; ++zc)
                sys.at(i * g.dim + row, zc) = g.c[row].at(zc, i);
    return nullspace_basis(sys);
}

std::vector<Vec> derived_subalgebra(const LieAlgebra& g) {
    Mat span(wedge_dim(g.dim), g.dim);
    int row = 0;
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j, ++row)
            for (int k = 0; k < g.dim; ++k) span.at(row, k) = g.c[k].at(i, j);
    std::vector<int> piv;
    Mat r = rref(span, &piv);
    std::vector<Vec> basis;
    for (size_t p = 0; p < piv.size(); ++p) {
        Vec v(g.dim, Rat(0));
        for (int k = 0; k < g.dim; ++k) v[k] = r.at(static_cast<int>(p), k);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> invariant_wedge_subspace(const LieAlgebra& g) {
    if (g.dim != 3) throw std::invalid_argument("invariant wedge requires dim 3");
    Mat sys(9, 3);
    for (int i = 0; i < 3; ++i) {
        Vec z(3, Rat(0));
        z[i] = 1;
        Mat w = wedge_action_matrix(g, z);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) sys.at(i * 3 + r, c) = w.at(r, c);
    }
    return nullspace_basis(sys);
}

Mat killing_form(const LieAlgebra& g) {
    std::vector<Mat> ads;
    for (int i = 0; i < g.dim; ++i) {
        Vec z(g.dim, Rat(0));
        z[i] = 1;
        ads.push_back(ad_matrix(g, z));
    }
    Mat k(g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
            Mat p = ads[i] * ads[j];
            Rat t(0);
            for (int d = 0; d < g.dim; ++d) t += p.at(d, d);
            k.at(i, j) = t;
        }
    return k;
}

}  // namespace lb
