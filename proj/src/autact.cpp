#include "lb/autact.hpp"

#include <random>
#include <stdexcept>

namespace lb {

Automorphism::Automorphism(LieAlgebra alg, Mat m) : g(std::move(alg)), phi(std::move(m)) {
    if (!is_lie_automorphism(g, phi))
        throw std::invalid_argument("not a Lie algebra automorphism");
}

bool is_lie_automorphism(const LieAlgebra& g, const Mat& phi) {
    if (phi.rows != g.dim || phi.cols != g.dim) return false;
    if (det(phi) == 0) return false;
    auto col = [&](int j) {
        Vec v(g.dim);
        for (int i = 0; i < g.dim; ++i) v[i] = phi.at(i, j);
        return v;
    };
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            Vec ei(g.dim, Rat(0)), ej(g.dim, Rat(0));
            ei[i] = 1;
            ej[j] = 1;
            Vec lhs = phi * g.bracket(ei, ej);
            Vec rhs = g.bracket(col(i), col(j));
            for (int k = 0; k < g.dim; ++k)
                if (lhs[k] != rhs[k]) return false;
        }
    return true;
}

Mat wedge_square(const Mat& phi) {
    if (phi.rows != 3 || phi.cols != 3) throw std::invalid_argument("wedge square requires 3x3");
    if (det(phi) == 0) throw std::invalid_argument("singular");
    auto col = [&](int j) {
        Vec v(3);
        for (int i = 0; i < 3; ++i) v[i] = phi.at(i, j);
        return v;
    };
    const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    Mat w(3, 3);
    for (int c = 0; c < 3; ++c) {
        Vec wc = wedge_coords(col(pairs[c][0]), col(pairs[c][1]), 3);
        for (int r = 0; r < 3; ++r) w.at(r, c) = wc[r];
    }
    return w;
}

Cobracket pullback(const Automorphism& phi, const Cobracket& d) {
    if (phi.g.dim == 3) return Cobracket(inverse(wedge_square(phi.phi)) * d.m * phi.phi);
    if (phi.g.dim == 2) {
        // φ∧φ on the 1-dim wedge space is multiplication by det φ.
        Rat dd = det(phi.phi);
        return Cobracket((1 / dd) * (d.m * phi.phi));
    }
    throw std::invalid_argument("unsupported dimension");
}

bool is_bialgebra_automorphism(const LieBialgebra& b, const Mat& phi) {
    if (!is_lie_automorphism(b.g, phi)) return false;
    Automorphism a(b.g, phi);
    return pullback(a, b.delta) == b.delta;
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    Rat rat_small() {
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        return rat(num(gen), den(gen));
    }
    Rat rat_nonzero() {
        Rat r = rat_small();
        while (r == 0) r = rat_small();
        return r;
    }
    bool coin() {
        std::uniform_int_distribution<int> d(0, 1);
        return d(gen) == 1;
    }
};

Mat upper_unitriangular_family(Rng& rng, bool equal_diag, const Rat& mu, const Rat& nu,
                               const Rat& a, const Rat& b, const Rat& rho) {
    // [[μ, ρ, a], [0, ν, b], [0, 0, 1]]
    Mat m(3, 3);
    m.at(0, 0) = mu;
    m.at(0, 1) = rho;
    m.at(0, 2) = a;
    m.at(1, 1) = equal_diag ? mu : nu;
    m.at(1, 2) = b;
    m.at(2, 2) = 1;
    (void)rng;
    return m;
}

Mat sample_matrix(const CatalogLabel& spec, Rng& rng) {
    switch (spec.family) {
        case Family::Abelian2:
        case Family::Abelian3: {
            int n = spec.family == Family::Abelian2 ? 2 : 3;
            for (;;) {
                Mat m(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m.at(i, j) = rng.rat_small();
                if (det(m) != 0) return m;
            }
        }
        case Family::Aff2: {
            // φ(h) = h + b x, φ(x) = d x, d ≠ 0
            Mat m(2, 2);
            m.at(0, 0) = 1;
            m.at(1, 0) = rng.rat_small();
            m.at(1, 1) = rng.rat_nonzero();
            return m;
        }
        case Family::H3: {
            // [[μ, ρ, 0], [σ, ν, 0], [a, b, μν−ρσ]]
            for (;;) {
                Rat mu = rng.rat_small(), rho = rng.rat_small();
                Rat sg = rng.rat_small(), nu = rng.rat_small();
                Rat dd = mu * nu - rho * sg;
                if (dd == 0) continue;
                Mat m(3, 3);
                m.at(0, 0) = mu;
                m.at(0, 1) = rho;
                m.at(1, 0) = sg;
                m.at(1, 1) = nu;
                m.at(2, 0) = rng.rat_small();
                m.at(2, 1) = rng.rat_small();
                m.at(2, 2) = dd;
                return m;
            }
        }
        case Family::R3: {
            Rat mu = rng.rat_nonzero();
            Rat a = rng.rat_small();
            Rat b = rng.rat_small();
            Rat rho = rng.rat_small();
            return upper_unitriangular_family(rng, true, mu, mu, a, b, rho);
        }
        case Family::R3Lambda: {
            Rat lam = spec.lambda.value_or(Rat(0));
            if (lam == 1) {
                // full invertible block [[μ,ρ],[σ,ν]] plus translations
                for (;;) {
                    Rat mu = rng.rat_small(), rho = rng.rat_small();
                    Rat sg = rng.rat_small(), nu = rng.rat_small();
                    if (mu * nu - rho * sg == 0) continue;
                    Mat m(3, 3);
                    m.at(0, 0) = mu;
                    m.at(0, 1) = rho;
                    m.at(1, 0) = sg;
                    m.at(1, 1) = nu;
                    m.at(0, 2) = rng.rat_small();
                    m.at(1, 2) = rng.rat_small();
                    m.at(2, 2) = 1;
                    return m;
                }
            }
            Rat mu = rng.rat_nonzero();
            Rat nu = rng.rat_nonzero();
            Rat a = rng.rat_small();
            Rat b = rng.rat_small();
            Mat m = upper_unitriangular_family(rng, false, mu, nu, a, b, Rat(0));
            if (lam == -1 && rng.coin()) {
                // compose with the swap generator φ₀: x↔y, h↦−h
                Mat phi0(3, 3);
                phi0.at(0, 1) = 1;
                phi0.at(1, 0) = 1;
                phi0.at(2, 2) = -1;
                m = m * phi0;
            }
            return m;
        }
        case Family::R3PrimeLambda: {
            // rotation-scaling block [[μ,−σ],[σ,μ]] plus translations
            for (;;) {
                Rat mu = rng.rat_small(), sg = rng.rat_small();
                if (mu == 0 && sg == 0) continue;
                Mat m(3, 3);
                m.at(0, 0) = mu;
                m.at(0, 1) = -sg;
                m.at(1, 0) = sg;
                m.at(1, 1) = mu;
                m.at(0, 2) = rng.rat_small();
                m.at(1, 2) = rng.rat_small();
                m.at(2, 2) = 1;
                return m;
            }
        }
        case Family::Su2: {
            // rational point on a²+b²+c²+d²=1 via stereographic projection
            Rat p = rng.rat_small(), q = rng.rat_small(), s = rng.rat_small();
            Rat n = p * p + q * q + s * s;
            Rat a = (1 - n) / (1 + n);
            Rat b = 2 * p / (1 + n), c = 2 * q / (1 + n), d = 2 * s / (1 + n);
            Mat m(3, 3);
            m.at(0, 0) = a * a + b * b - c * c - d * d;
            m.at(1, 0) = 2 * (-a * c + b * d);
            m.at(2, 0) = -2 * (b * c + a * d);
            m.at(0, 1) = 2 * (a * c + b * d);
            m.at(1, 1) = a * a - b * b - c * c + d * d;
            m.at(2, 1) = 2 * (a * b - c * d);
            m.at(0, 2) = -2 * (b * c - a * d);
            m.at(1, 2) = -2 * (a * b + c * d);
            m.at(2, 2) = a * a - b * b + c * c - d * d;
            return m;
        }
        case Family::Sl2R: {
            // unit-determinant 2×2: pick a≠0, b, c and solve d
            Rat a = rng.rat_nonzero(), b = rng.rat_small(), c = rng.rat_small();
            Rat d = (1 + b * c) / a;
            Mat m(3, 3);
            m.at(0, 0) = a * d + b * c;
            m.at(1, 0) = c * d - a * b;
            m.at(2, 0) = -(c * d + a * b);
            m.at(0, 1) = b * d - a * c;
            m.at(1, 1) = (a * a - b * b - c * c + d * d) / 2;
            m.at(2, 1) = (a * a - b * b + c * c - d * d) / 2;
            m.at(0, 2) = -(b * d + a * c);
            m.at(1, 2) = (a * a + b * b - c * c - d * d) / 2;
            m.at(2, 2) = (a * a + b * b + c * c + d * d) / 2;
            return m;
        }
    }
    throw std::logic_error("bad family");
}

}  // namespace

std::vector<Automorphism> sample_aut(const CatalogLabel& spec, std::uint64_t seed, int count) {
    LieAlgebra g = catalog_build(spec);
    Rng rng(seed);
    std::vector<Automorphism> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.emplace_back(g, sample_matrix(spec, rng));
    return out;
}

}  // namespace lb
