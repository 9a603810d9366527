#include "lb/classify.hpp"

#include <optional>
#include <stdexcept>

namespace lb {

namespace {

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    mpz_class n = r.get_num(), d = r.get_den();
    mpz_class sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

Rat entry(const Cobracket& d, int row, int col) { return d.m.at(row, col); }

ClassTag tag(const CatalogLabel& alg, std::string case_id,
             std::map<std::string, Rat> params = {}, std::vector<std::string> flags = {}) {
    return ClassTag{alg, std::move(case_id), std::move(params), std::move(flags)};
}

Mat mat3(std::initializer_list<Rat> vals) {
    Mat m(3, 3);
    int i = 0;
    for (const Rat& v : vals) m.a[i++] = v;
    return m;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, int dim) {
    Mat m(static_cast<int>(basis.size()) + 1, dim);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = basis[i][j];
    for (int j = 0; j < dim; ++j) m.at(static_cast<int>(basis.size()), j) = v[j];
    Mat sub(static_cast<int>(basis.size()), dim);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < dim; ++j) sub.at(static_cast<int>(i), j) = basis[i][j];
    return rank(m) == rank(sub);
}

}  // namespace

std::string tag_str(const ClassTag& t) {
    std::string s = t.case_id;
    if (!t.params.empty()) {
        s += "{";
        bool first = true;
        for (const auto& [k, v] : t.params) {
            if (!first) s += ",";
            first = false;
            s += k + "=" + rat_str(v);
        }
        s += "}";
    }
    for (const std::string& f : t.flags) s += "[" + f + "]";
    return s;
}

CatalogLabel recognize(const LieAlgebra& g) {
    if (!is_lie_algebra(g)) throw std::invalid_argument("not a Lie algebra");
    if (g.label) {
        LieAlgebra canon = catalog_build(*g.label);
        if (canon.c == g.c) return *g.label;
    }
    std::vector<Vec> derived = derived_subalgebra(g);
    if (g.dim == 2) {
        Family f = derived.empty() ? Family::Abelian2 : Family::Aff2;
        return CatalogLabel{f, std::nullopt};
    }
    if (g.dim != 3) throw std::invalid_argument("unsupported dimension");
    int d = static_cast<int>(derived.size());
    if (d == 0) return CatalogLabel{Family::Abelian3, std::nullopt};
    if (d == 3) {
        auto sig = sym_signature(killing_form(g));
        if (sig == std::pair<int, int>(0, 3)) return CatalogLabel{Family::Su2, std::nullopt};
        if (sig == std::pair<int, int>(2, 1)) return CatalogLabel{Family::Sl2R, std::nullopt};
        throw std::invalid_argument("recognition requires canonical basis");
    }
    if (d == 1) {
        // nilpotent (derived central) → h3; otherwise ad acts with eigenvalue
        // pattern (1, 0) on a 2-dim complement → r_{3,0}
        bool central = true;
        for (int i = 0; i < 3 && central; ++i) {
            Vec ei(3, Rat(0));
            ei[i] = 1;
            if (!is_zero(g.bracket(derived[0], ei))) central = false;
        }
        if (central) return CatalogLabel{Family::H3, std::nullopt};
        return CatalogLabel{Family::R3Lambda, Rat(0)};
    }
    // d == 2: the derived ideal is abelian; pick z outside it and inspect
    // ad_z restricted to [g,g].
    int zi = 0;
    for (; zi < 3; ++zi) {
        Vec ei(3, Rat(0));
        ei[zi] = 1;
        if (!in_span(derived, ei, 3)) break;
    }
    Vec z(3, Rat(0));
    z[zi] = 1;
    // Coordinates of [z, derived_k] in the derived basis: solve against the
    // 3×2 matrix whose columns are the derived basis vectors.
    Mat basis_cols(3, 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i) basis_cols.at(i, j) = derived[j][i];
    Mat A(2, 2);
    for (int j = 0; j < 2; ++j) {
        Vec img = g.bracket(z, derived[j]);
        Vec coords;
        if (!solve(basis_cols, img, coords))
            throw std::invalid_argument("recognition requires canonical basis");
        A.at(0, j) = coords[0];
        A.at(1, j) = coords[1];
    }
    Rat t = A.at(0, 0) + A.at(1, 1);
    Rat dt = det(A);
    if (dt == 0) throw std::invalid_argument("recognition requires canonical basis");
    Rat disc = t * t - 4 * dt;
    if (disc == 0) {
        bool scalar = A.at(0, 1) == 0 && A.at(1, 0) == 0 && A.at(0, 0) == A.at(1, 1);
        if (scalar) return CatalogLabel{Family::R3Lambda, Rat(1)};
        return CatalogLabel{Family::R3, std::nullopt};
    }
    if (disc > 0) {
        auto s = rat_sqrt(disc);
        if (!s) throw std::invalid_argument("recognition requires canonical basis");
        Rat e1 = (t + *s) / 2, e2 = (t - *s) / 2;
        if (abs(e2) > abs(e1)) std::swap(e1, e2);
        return CatalogLabel{Family::R3Lambda, e2 / e1};
    }
    // complex eigenvalues a ± bi with a/|b| = λ: λ² = t²/(4 det − t²)
    Rat lam2 = t * t / (4 * dt - t * t);
    auto lam = rat_sqrt(lam2);
    if (!lam) throw std::invalid_argument("recognition requires canonical basis");
    return CatalogLabel{Family::R3PrimeLambda, *lam};
}

ClassTag classify2(const LieBialgebra& b) {
    if (b.g.dim != 2) throw std::invalid_argument("classify2 requires dim 2");
    CatalogLabel alg = recognize(b.g);
    bool coab = b.delta.is_zero();
    if (derived_subalgebra(b.g).empty()) {
        if (coab) return tag(alg, "TRIVIAL");
        return tag(alg, "AB2-NONCOAB");
    }
    if (coab) return tag(alg, "AFF2-COAB");
    Mat D = char_derivation_matrix(b.g, b.delta);
    Rat mu = D.at(0, 0) + D.at(1, 1);
    if (mu == 0) return tag(alg, "AFF2-0");
    return tag(alg, "AFF2-MU", {{"mu", mu}});
}

namespace {

ClassTag classify_h3(const CatalogLabel& alg, const LieAlgebra& g, const Cobracket& d) {
    Rat a1 = entry(d, 0, 0), b1 = entry(d, 0, 1);
    if (a1 != 0 || b1 != 0) {
        // Normalize the quotient cobracket (a1,b1) to (0,1), then read b3.
        Mat phi(3, 3);
        phi.at(0, 0) = b1;
        phi.at(0, 1) = a1;
        phi.at(1, 0) = -a1;
        phi.at(1, 1) = b1;
        phi.at(2, 2) = a1 * a1 + b1 * b1;
        Cobracket dp = pullback(Automorphism(g, phi), d);
        return tag(alg, "H3-I", {{"b3", entry(dp, 2, 1)}});
    }
    Rat a2 = entry(d, 1, 0), b2 = entry(d, 1, 1);
    Rat a3 = entry(d, 2, 0), b3 = entry(d, 2, 1);
    if (a2 == 0 && b2 == 0 && a3 == 0 && b3 == 0) return tag(alg, "TRIVIAL");
    Mat S(2, 2);
    S.at(0, 0) = a2;
    S.at(1, 1) = b3;
    S.at(0, 1) = (b2 + a3) / 2;
    S.at(1, 0) = (b2 + a3) / 2;
    auto sig = sym_signature(S);
    std::vector<std::string> flags;
    if (b2 != a3) flags.push_back("outside_published_list");
    return tag(alg, "H3-II", {{"p", Rat(sig.first)}, {"q", Rat(sig.second)}}, flags);
}

ClassTag classify_r3(const CatalogLabel& alg, const Cobracket& d) {
    Rat b1 = entry(d, 0, 1), c1 = entry(d, 0, 2), b3 = entry(d, 2, 1);
    if (b3 != 0)
        return tag(alg, "R3-A", {{"b3", b3}, {"c1class", Rat(rat_sign(c1 - b1 * b1 / b3))}});
    if (b1 != 0) return tag(alg, "R3-B");
    if (c1 != 0) return tag(alg, "R3-C", {{"c1class", Rat(rat_sign(c1))}});
    return tag(alg, "TRIVIAL");
}

ClassTag classify_r3lambda_generic(const CatalogLabel& alg, const Cobracket& d) {
    Rat a1 = entry(d, 0, 0), a3 = entry(d, 2, 0);
    Rat c1 = entry(d, 0, 2), c3 = entry(d, 2, 2);
    if (a3 != 0) return tag(alg, "R3L-A", {{"a3", a3}});
    if (a1 != 0) return tag(alg, "R3L-B1");
    if (c3 != 0) return tag(alg, "R3L-B2");
    if (c1 != 0) return tag(alg, "R3L-B0");
    return tag(alg, "TRIVIAL");
}

ClassTag classify_r3minus1(const CatalogLabel& alg, const Cobracket& d) {
    Rat a1 = entry(d, 0, 0), b1 = entry(d, 0, 1), c1 = entry(d, 0, 2), a3 = entry(d, 2, 0);
    if (a3 != 0) return tag(alg, "R3M1-A", {{"a3abs", abs(a3)}});
    if (a1 == 0 && b1 == 0) {
        if (c1 != 0) return tag(alg, "R3M1-B00");
        return tag(alg, "TRIVIAL");
    }
    if (a1 == 0 || b1 == 0)
        return tag(alg, "R3M1-B10", {{"c1class", Rat(c1 != 0 ? 1 : 0)}});
    return tag(alg, "R3M1-B11", {{"q", c1 / (a1 * b1)}});
}

ClassTag classify_r3one(const CatalogLabel& alg, const Cobracket& d) {
    Rat a1 = entry(d, 0, 0), b1 = entry(d, 0, 1), c1 = entry(d, 0, 2);
    Rat a2 = entry(d, 1, 0), a3 = entry(d, 2, 0), b3 = entry(d, 2, 1);
    Mat B(2, 2);
    B.at(0, 0) = a2;
    B.at(0, 1) = a3;
    B.at(1, 0) = a3;
    B.at(1, 1) = b3;
    Vec v = {a1, b1};
    Rat dB = det(B);
    if (dB != 0) {
        Mat Bi = inverse(B);
        Vec w = Bi * v;
        Rat c1red = c1 - (v[0] * w[0] + v[1] * w[1]);
        if (dB > 0) {
            int defsign = B.at(0, 0) > 0 ? 1 : -1;
            return tag(alg, "R31-1",
                       {{"a2", dB}, {"c1class", Rat(rat_sign(c1red) * defsign)}});
        }
        return tag(alg, "R31-2",
                   {{"a3sq", -dB}, {"c1class", Rat(c1red != 0 ? 1 : 0)}});
    }
    if (rank(B) == 1) {
        Vec negv = {-v[0], -v[1]};
        Vec w;
        if (solve(B, negv, w)) {
            Rat c1red = c1 + v[0] * w[0] + v[1] * w[1];
            int trsign = (B.at(0, 0) + B.at(1, 1)) > 0 ? 1 : -1;
            return tag(alg, "R31-3", {{"c1class", Rat(rat_sign(c1red) * trsign)}});
        }
        return tag(alg, "R31-4");
    }
    if (v[0] != 0 || v[1] != 0) return tag(alg, "R31-5");
    if (c1 != 0) return tag(alg, "R31-6");
    return tag(alg, "TRIVIAL");
}

ClassTag classify_r3prime(const CatalogLabel& alg, const Cobracket& d) {
    Rat lam = *alg.lambda;
    Rat a1 = entry(d, 0, 0), b1 = entry(d, 0, 1), c1 = entry(d, 0, 2), a3 = entry(d, 2, 0);
    if (a3 != 0) return tag(alg, "R3P-A", {{"a3", a3}});
    if (lam != 0 || (a1 == 0 && b1 == 0)) {
        if (c1 != 0) return tag(alg, "R3P-B", {{"c1class", Rat(rat_sign(c1))}});
        return tag(alg, "TRIVIAL");
    }
    return tag(alg, "R3P-C", {{"q", c1 / (a1 * a1 + b1 * b1)}});
}

ClassTag classify_su2(const CatalogLabel& alg, const LieAlgebra& g, const Cobracket& d) {
    RMatrix r = coboundary_preimage(g, d);
    Rat norm2 = r.alpha * r.alpha + r.beta * r.beta + r.gamma * r.gamma;
    if (norm2 == 0) return tag(alg, "TRIVIAL");
    return tag(alg, "SU2", {{"norm2", norm2}});
}

ClassTag classify_sl2(const CatalogLabel& alg, const LieAlgebra& g, const Cobracket& d) {
    std::vector<std::string> flags = {"inner_automorphisms_only"};
    RMatrix r = coboundary_preimage(g, d);
    if (r.alpha == 0 && r.beta == 0 && r.gamma == 0) return tag(alg, "TRIVIAL", {}, flags);
    Rat Q = r.alpha * r.alpha - r.beta * r.beta - r.gamma * r.gamma;
    if (Q < 0) return tag(alg, "SL2-BETA", {{"beta2", -Q}}, flags);
    if (Q > 0)
        return tag(alg, "SL2-ALPHA", {{"alpha2", Q}, {"sign", Rat(rat_sign(r.alpha))}}, flags);
    return tag(alg, r.alpha > 0 ? "SL2-TRI+" : "SL2-TRI-", {}, flags);
}

ClassTag classify_abelian3(const CatalogLabel& alg, const Cobracket& d) {
    if (d.is_zero()) return tag(alg, "TRIVIAL");
    CatalogLabel dual = recognize(dual_algebra(3, d));
    std::map<std::string, Rat> params;
    if (dual.lambda) params["lambda"] = *dual.lambda;
    return tag(alg, "AB3-DUAL-" + family_name(dual.family), params);
}

}  // namespace

ClassTag classify3(const LieBialgebra& b) {
    if (b.g.dim != 3) throw std::invalid_argument("classify3 requires dim 3");
    CatalogLabel alg = b.g.label ? *b.g.label : recognize(b.g);
    if (catalog_build(alg).c != b.g.c)
        throw std::invalid_argument("algebra not in canonical basis");
    const Cobracket& d = b.delta;
    switch (alg.family) {
        case Family::Abelian3:
            return classify_abelian3(alg, d);
        case Family::H3:
            return classify_h3(alg, b.g, d);
        case Family::R3:
            return classify_r3(alg, d);
        case Family::R3Lambda:
            if (*alg.lambda == 1) return classify_r3one(alg, d);
            if (*alg.lambda == -1) return classify_r3minus1(alg, d);
            return classify_r3lambda_generic(alg, d);
        case Family::R3PrimeLambda:
            return classify_r3prime(alg, d);
        case Family::Su2:
            return classify_su2(alg, b.g, d);
        case Family::Sl2R:
            return classify_sl2(alg, b.g, d);
        default:
            throw std::invalid_argument("classify3 requires a dim-3 catalog algebra");
    }
}

Cobracket representative_cobracket(const ClassTag& t) {
    const Rat z(0), one(1);
    auto P = [&](const std::string& k) { return t.params.at(k); };
    Family f = t.algebra.family;
    Rat lam = t.algebra.lambda ? *t.algebra.lambda : Rat(0);
    const std::string& c = t.case_id;

    if (c == "TRIVIAL") {
        int dim = (f == Family::Abelian2 || f == Family::Aff2) ? 2 : 3;
        return Cobracket::zero(dim);
    }
    if (f == Family::Abelian2 || f == Family::Aff2) {
        Mat m(1, 2);
        if (c == "AB2-NONCOAB") m.at(0, 1) = 1;
        else if (c == "AFF2-COAB") {}
        else if (c == "AFF2-0") m.at(0, 0) = 1;
        else if (c == "AFF2-MU") m.at(0, 1) = P("mu");
        else throw std::invalid_argument("unknown case: " + c);
        return Cobracket(m);
    }
    if (f == Family::H3) {
        if (c == "H3-I")
            return Cobracket(mat3({z, one, z, z, z, z, z, P("b3"), Rat(-1)}));
        if (c == "H3-II") {
            int p = static_cast<int>(P("p").get_num().get_si());
            int q = static_cast<int>(P("q").get_num().get_si());
            Rat a2, b3;
            if (p == 2 && q == 0) { a2 = 1; b3 = 1; }
            else if (p == 0 && q == 2) { a2 = -1; b3 = -1; }
            else if (p == 1 && q == 1) { a2 = 1; b3 = -1; }
            else if (p == 1 && q == 0) { a2 = 1; b3 = 0; }
            else if (p == 0 && q == 1) { a2 = -1; b3 = 0; }
            else throw std::invalid_argument("unknown signature");
            return Cobracket(mat3({z, z, z, a2, z, z, z, b3, z}));
        }
    }
    if (f == Family::R3) {
        if (c == "R3-A")
            return Cobracket(mat3({z, z, P("c1class"), z, z, z, z, P("b3"), z}));
        if (c == "R3-B") return Cobracket(mat3({z, one, z, z, z, z, z, z, one}));
        if (c == "R3-C")
            return Cobracket(mat3({z, z, P("c1class"), z, z, z, z, z, z}));
    }
    if (f == Family::R3Lambda && lam == 1) {
        if (c == "R31-1")
            return Cobracket(mat3({z, z, P("c1class"), P("a2"), z, z, z, one, z}));
        if (c == "R31-2") {
            auto a3 = rat_sqrt(P("a3sq"));
            if (!a3) throw std::invalid_argument("irrational representative parameter");
            return Cobracket(mat3({z, z, P("c1class"), z, *a3, z, *a3, z, z}));
        }
        if (c == "R31-3")
            return Cobracket(mat3({z, z, P("c1class"), z, z, z, z, one, z}));
        if (c == "R31-4") return Cobracket(mat3({one, z, z, z, z, one, z, one, z}));
        if (c == "R31-5") return Cobracket(mat3({one, z, z, z, z, one, z, z, z}));
        if (c == "R31-6") return Cobracket(mat3({z, z, one, z, z, z, z, z, z}));
    }
    if (f == Family::R3Lambda && lam == -1) {
        if (c == "R3M1-A") {
            Rat a3 = P("a3abs");
            return Cobracket(mat3({z, z, z, z, -a3, z, a3, z, z}));
        }
        if (c == "R3M1-B00") return Cobracket(mat3({z, z, one, z, z, z, z, z, z}));
        if (c == "R3M1-B10")
            return Cobracket(mat3({one, z, P("c1class"), z, z, Rat(-1), z, z, z}));
        if (c == "R3M1-B11")
            return Cobracket(mat3({one, one, P("q"), z, z, Rat(-1), z, z, Rat(-1)}));
    }
    if (f == Family::R3Lambda) {
        if (c == "R3L-A") {
            Rat a3 = P("a3");
            return Cobracket(mat3({z, z, z, z, lam * a3, z, a3, z, z}));
        }
        if (c == "R3L-B0") return Cobracket(mat3({z, z, one, z, z, z, z, z, z}));
        if (c == "R3L-B1") return Cobracket(mat3({one, z, z, z, z, lam, z, z, z}));
        if (c == "R3L-B2") return Cobracket(mat3({z, lam, z, z, z, z, z, z, one}));
    }
    if (f == Family::R3PrimeLambda) {
        if (c == "R3P-A") {
            Rat a3 = P("a3");
            return Cobracket(mat3({z, z, z, -lam * a3, -a3, z, a3, -lam * a3, z}));
        }
        if (c == "R3P-B")
            return Cobracket(mat3({z, z, P("c1class"), z, z, z, z, z, z}));
        if (c == "R3P-C")
            return Cobracket(mat3({one, z, P("q"), z, z, Rat(-1), z, z, z}));
    }
    if (f == Family::Su2) {
        if (c == "SU2") {
            auto alpha = rat_sqrt(P("norm2"));
            if (!alpha) throw std::invalid_argument("irrational representative parameter");
            return Cobracket(mat3({z, z, z, z, *alpha, z, -*alpha, z, z}));
        }
    }
    if (f == Family::Sl2R) {
        if (c == "SL2-BETA") {
            auto beta = rat_sqrt(P("beta2"));
            if (!beta) throw std::invalid_argument("irrational representative parameter");
            return Cobracket(mat3({z, *beta, z, z, z, z, z, z, -*beta}));
        }
        if (c == "SL2-ALPHA") {
            auto a = rat_sqrt(P("alpha2"));
            if (!a) throw std::invalid_argument("irrational representative parameter");
            Rat alpha = P("sign") * *a;
            return Cobracket(mat3({z, z, z, z, alpha, z, -alpha, z, z}));
        }
        if (c == "SL2-TRI+")
            return Cobracket(mat3({z, one, z, z, one, z, Rat(-1), z, Rat(-1)}));
        if (c == "SL2-TRI-")
            return Cobracket(mat3({z, Rat(-1), z, z, Rat(-1), z, one, z, one}));
    }
    if (f == Family::Abelian3 && c.rfind("AB3-DUAL-", 0) == 0) {
        std::string fam = c.substr(9);
        CatalogLabel dual{family_from_name(fam), std::nullopt};
        auto it = t.params.find("lambda");
        if (it != t.params.end()) dual.lambda = it->second;
        LieAlgebra dg = catalog_build(dual);
        // cobracket m(p,k) = structure constant of the dual bracket
        Mat m(3, 3);
        const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
        for (int p = 0; p < 3; ++p)
            for (int k = 0; k < 3; ++k) m.at(p, k) = dg.c[k].at(pairs[p][0], pairs[p][1]);
        return Cobracket(m);
    }
    throw std::invalid_argument("unknown case: " + t.case_id);
}

std::vector<NormalForm> normal_form_catalog(const CatalogLabel& label) {
    std::vector<ClassTag> tags;
    Family f = label.family;
    auto add = [&](std::string c, std::map<std::string, Rat> p = {},
                   std::vector<std::string> fl = {}) {
        tags.push_back(tag(label, std::move(c), std::move(p), std::move(fl)));
    };
    switch (f) {
        case Family::Abelian2:
            add("TRIVIAL");
            add("AB2-NONCOAB");
            break;
        case Family::Aff2:
            add("AFF2-COAB");
            add("AFF2-0");
            add("AFF2-MU", {{"mu", Rat(1)}});
            break;
        case Family::Abelian3: {
            add("TRIVIAL");
            add("AB3-DUAL-H3");
            add("AB3-DUAL-R3");
            add("AB3-DUAL-R3Lambda", {{"lambda", rat(1, 2)}});
            add("AB3-DUAL-R3Lambda", {{"lambda", Rat(-1)}});
            add("AB3-DUAL-R3Lambda", {{"lambda", Rat(1)}});
            add("AB3-DUAL-R3PrimeLambda", {{"lambda", Rat(1)}});
            add("AB3-DUAL-Su2");
            add("AB3-DUAL-Sl2R");
            break;
        }
        case Family::H3:
            add("TRIVIAL");
            add("H3-I", {{"b3", Rat(2)}});
            add("H3-II", {{"p", Rat(2)}, {"q", Rat(0)}});
            add("H3-II", {{"p", Rat(0)}, {"q", Rat(2)}});
            add("H3-II", {{"p", Rat(1)}, {"q", Rat(1)}});
            add("H3-II", {{"p", Rat(1)}, {"q", Rat(0)}});
            add("H3-II", {{"p", Rat(0)}, {"q", Rat(1)}});
            break;
        case Family::R3:
            add("TRIVIAL");
            add("R3-B");
            add("R3-A", {{"b3", Rat(2)}, {"c1class", Rat(0)}});
            add("R3-A", {{"b3", Rat(2)}, {"c1class", Rat(1)}});
            add("R3-A", {{"b3", Rat(2)}, {"c1class", Rat(-1)}});
            add("R3-C", {{"c1class", Rat(1)}});
            add("R3-C", {{"c1class", Rat(-1)}});
            break;
        case Family::R3Lambda: {
            Rat lam = label.lambda.value_or(Rat(0));
            add("TRIVIAL");
            if (lam == 1) {
                add("R31-1", {{"a2", Rat(2)}, {"c1class", Rat(0)}});
                add("R31-1", {{"a2", Rat(2)}, {"c1class", Rat(1)}});
                add("R31-1", {{"a2", Rat(2)}, {"c1class", Rat(-1)}});
                add("R31-2", {{"a3sq", Rat(4)}, {"c1class", Rat(0)}});
                add("R31-2", {{"a3sq", Rat(4)}, {"c1class", Rat(1)}});
                add("R31-3", {{"c1class", Rat(0)}});
                add("R31-3", {{"c1class", Rat(1)}});
                add("R31-3", {{"c1class", Rat(-1)}});
                add("R31-4");
                add("R31-5");
                add("R31-6");
            } else if (lam == -1) {
                add("R3M1-A", {{"a3abs", Rat(2)}});
                add("R3M1-B00");
                add("R3M1-B10", {{"c1class", Rat(0)}});
                add("R3M1-B10", {{"c1class", Rat(1)}});
                add("R3M1-B11", {{"q", Rat(2)}});
            } else {
                add("R3L-A", {{"a3", Rat(2)}});
                add("R3L-B0");
                add("R3L-B1");
                add("R3L-B2");
            }
            break;
        }
        case Family::R3PrimeLambda: {
            Rat lam = label.lambda.value_or(Rat(0));
            add("TRIVIAL");
            add("R3P-A", {{"a3", Rat(2)}});
            add("R3P-B", {{"c1class", Rat(1)}});
            add("R3P-B", {{"c1class", Rat(-1)}});
            if (lam == 0) add("R3P-C", {{"q", Rat(2)}});
            break;
        }
        case Family::Su2:
            add("TRIVIAL");
            add("SU2", {{"norm2", Rat(4)}});
            break;
        case Family::Sl2R: {
            std::vector<std::string> fl = {"inner_automorphisms_only"};
            add("TRIVIAL", {}, fl);
            add("SL2-BETA", {{"beta2", Rat(4)}}, fl);
            add("SL2-ALPHA", {{"alpha2", Rat(4)}, {"sign", Rat(1)}}, fl);
            add("SL2-ALPHA", {{"alpha2", Rat(4)}, {"sign", Rat(-1)}}, fl);
            add("SL2-TRI+", {}, fl);
            add("SL2-TRI-", {}, fl);
            break;
        }
    }
    std::vector<NormalForm> out;
    for (const ClassTag& t : tags) out.push_back(NormalForm{t, representative_cobracket(t)});
    return out;
}

OrbitCheckReport orbit_check(const CatalogLabel& label, int samples, std::uint64_t seed) {
    OrbitCheckReport rep;
    LieAlgebra g = catalog_build(label);
    std::vector<NormalForm> forms = normal_form_catalog(label);
    auto classify_any = [&](const Cobracket& d) {
        LieBialgebra b(g, d);
        return g.dim == 2 ? classify2(b) : classify3(b);
    };
    // Pairwise tag distinctness across the representative list.
    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = i + 1; j < forms.size(); ++j)
            if (forms[i].tag == forms[j].tag) {
                ++rep.failures;
                rep.witnesses.push_back("duplicate tag: " + tag_str(forms[i].tag));
            }
    for (size_t i = 0; i < forms.size(); ++i) {
        ClassTag base = classify_any(forms[i].delta);
        if (base != forms[i].tag) {
            ++rep.failures;
            rep.witnesses.push_back("representative " + tag_str(forms[i].tag) +
                                    " classifies as " + tag_str(base));
        }
        std::vector<Automorphism> auts =
            sample_aut(label, seed + static_cast<std::uint64_t>(i), samples);
        for (size_t s = 0; s < auts.size(); ++s) {
            ++rep.samples;
            ClassTag got = classify_any(pullback(auts[s], forms[i].delta));
            if (got != base) {
                ++rep.failures;
                rep.witnesses.push_back("orbit mismatch: " + tag_str(base) + " sample " +
                                        std::to_string(s) + " -> " + tag_str(got));
            }
        }
    }
    return rep;
}

}  // namespace lb
