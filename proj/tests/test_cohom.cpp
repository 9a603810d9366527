#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lb/cohom.hpp"

using namespace lb;

namespace {

struct Dims {
    int inv, cob, coc, h1;
};

Dims dims_of(const CatalogLabel& l) {
    CohomologyReport r = h1_report(catalog_build(l));
    return {r.dim_invariants, r.dim_coboundaries, r.dim_cocycles, r.dim_h1};
}

bool dims_eq(const Dims& d, int inv, int cob, int coc, int h1) {
    return d.inv == inv && d.cob == cob && d.coc == coc && d.h1 == h1;
}

}  // namespace

TEST_CASE("cocycle space elements are cocycles and span the kernel") {
    std::vector<CatalogLabel> labels = {
        {Family::H3, std::nullopt},      {Family::R3, std::nullopt},
        {Family::R3Lambda, rat(1, 2)},   {Family::R3Lambda, Rat(-1)},
        {Family::R3Lambda, Rat(1)},      {Family::R3PrimeLambda, Rat(0)},
        {Family::R3PrimeLambda, Rat(2)}, {Family::Su2, std::nullopt},
        {Family::Sl2R, std::nullopt},    {Family::Abelian3, std::nullopt},
    };
    for (const CatalogLabel& l : labels) {
        CAPTURE(label_str(l));
        LieAlgebra g = catalog_build(l);
        auto basis = cocycle_space(g);
        for (const Cobracket& d : basis) CHECK(is_cocycle(g, d));
        // rank of the stacked coefficient vectors equals the count: independence
        int n = static_cast<int>(basis.size());
        Mat stack(n, 9);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 9; ++j) stack.at(i, j) = basis[i].m.a[j];
        CHECK(rank(stack) == n);
    }
}

TEST_CASE("cocycle space in dim 2") {
    LieAlgebra aff = catalog_build({Family::Aff2, std::nullopt});
    auto basis = cocycle_space(aff);
    // δh = s h∧x, δx = t h∧x are all cocycles on aff(R)
    CHECK(basis.size() == 2);
    for (const Cobracket& d : basis) CHECK(is_cocycle(aff, d));
    CHECK(cocycle_space(catalog_build({Family::Abelian2, std::nullopt})).size() == 2);
}

TEST_CASE("coboundary witnesses reproduce their cobrackets") {
    for (Family f : {Family::H3, Family::R3, Family::Su2, Family::Sl2R}) {
        LieAlgebra g = catalog_build({f, std::nullopt});
        for (const CoboundaryElem& e : coboundary_space(g)) {
            REQUIRE(e.r.size() == 3);
            RMatrix r{e.r[0], e.r[1], e.r[2]};
            CHECK(coboundary_from_r(g, r) == e.delta);
        }
    }
}

TEST_CASE("first cohomology dimension table") {
    CHECK(dims_eq(dims_of({Family::H3, std::nullopt}), 2, 1, 6, 5));
    CHECK(dims_eq(dims_of({Family::R3, std::nullopt}), 0, 3, 4, 1));
    CHECK(dims_eq(dims_of({Family::R3Lambda, rat(1, 2)}), 0, 3, 4, 1));
    CHECK(dims_eq(dims_of({Family::R3Lambda, rat(-1, 2)}), 0, 3, 4, 1));
    CHECK(dims_eq(dims_of({Family::R3Lambda, Rat(-1)}), 1, 2, 4, 2));
    CHECK(dims_eq(dims_of({Family::R3Lambda, Rat(1)}), 0, 3, 6, 3));
    CHECK(dims_eq(dims_of({Family::R3PrimeLambda, Rat(1)}), 0, 3, 4, 1));
    CHECK(dims_eq(dims_of({Family::R3PrimeLambda, Rat(2)}), 0, 3, 4, 1));
    CHECK(dims_eq(dims_of({Family::R3PrimeLambda, Rat(0)}), 1, 2, 4, 2));
    CHECK(dims_eq(dims_of({Family::Su2, std::nullopt}), 0, 3, 3, 0));
    CHECK(dims_eq(dims_of({Family::Sl2R, std::nullopt}), 0, 3, 3, 0));
}

TEST_CASE("report internal consistency") {
    for (Family f : {Family::H3, Family::R3, Family::Su2, Family::Sl2R, Family::Abelian3}) {
        LieAlgebra g = catalog_build({f, std::nullopt});
        CohomologyReport r = h1_report(g);
        CHECK(r.dim_h1 == r.dim_cocycles - r.dim_coboundaries);
        CHECK(r.dim_cocycles == static_cast<int>(r.cocycle_basis.size()));
        CHECK(r.dim_invariants == static_cast<int>(invariant_wedge_subspace(g).size()));
        CHECK(r.dim_coboundaries == static_cast<int>(coboundary_space(g).size()));
    }
    // abelian: everything is a cocycle, nothing is a coboundary
    CohomologyReport ab = h1_report(catalog_build({Family::Abelian3, std::nullopt}));
    CHECK(dims_eq({ab.dim_invariants, ab.dim_coboundaries, ab.dim_cocycles, ab.dim_h1},
                  3, 0, 9, 9));
}
