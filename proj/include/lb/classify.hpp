#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lb/autact.hpp"
#include "lb/bialg.hpp"

namespace lb {

// Isomorphism-class tag: case identifier plus exact canonical parameters.
struct ClassTag {
    CatalogLabel algebra;
    std::string case_id;
    std::map<std::string, Rat> params;
    std::vector<std::string> flags;

    friend bool operator==(const ClassTag& a, const ClassTag& b) {
        return a.algebra == b.algebra && a.case_id == b.case_id && a.params == b.params &&
               a.flags == b.flags;
    }
    friend bool operator!=(const ClassTag& a, const ClassTag& b) { return !(a == b); }
};

std::string tag_str(const ClassTag& t);

struct OrbitCheckReport {
    int samples = 0;
    int failures = 0;
    std::vector<std::string> witnesses;
};

// Identifies the isomorphism type of a Lie algebra by exact invariants.
// Throws "recognition requires canonical basis" when the eigen-data needed
// for the lambda families is irrational.
CatalogLabel recognize(const LieAlgebra& g);

// Classification of 2-dimensional bialgebras (five classes; μ = tr Δ).
ClassTag classify2(const LieBialgebra& b);

// Classification of 3-dimensional bialgebras on catalog algebras expressed
// in the canonical basis.
ClassTag classify3(const LieBialgebra& b);

// Normal-form list for a catalog algebra; continuous families carry default
// parameter values and can be re-instantiated via make_normal_form.
struct NormalForm {
    ClassTag tag;
    Cobracket delta;
};

std::vector<NormalForm> normal_form_catalog(const CatalogLabel& label);

// Re-instantiates the representative of `tag` at the given parameter values
// (pass the tag's own params for the listed representative).
Cobracket representative_cobracket(const ClassTag& tag);

// Pulls every catalog representative back by `samples` sampled automorphisms
// and checks that the tag is constant; also checks pairwise tag distinctness.
OrbitCheckReport orbit_check(const CatalogLabel& label, int samples, std::uint64_t seed);

}  // namespace lb
