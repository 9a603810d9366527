#pragma once

#include <utility>
#include <vector>

#include "lb/rat.hpp"

namespace lb {

// Small dense exact matrix, row-major.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n);

    Mat transpose() const;
    bool is_zero() const;

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

using Vec = std::vector<Rat>;

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Rat& s, const Mat& x);
Vec operator*(const Mat& x, const Vec& v);

bool is_zero(const Vec& v);

// Reduced row echelon form; pivot column indices appended to *pivots if given.
Mat rref(const Mat& m, std::vector<int>* pivots = nullptr);

int rank(const Mat& m);

Rat det(const Mat& m);

// Throws std::invalid_argument("singular") when not invertible.
Mat inverse(const Mat& m);

// Basis of {v : m v = 0} in reduced echelon parameterization: one vector per
// free column, free columns visited in ascending index order, each vector
// carrying 1 at its own free column.
std::vector<Vec> nullspace_basis(const Mat& m);

// Particular solution of m x = b with all free variables set to 0.
// Returns false when the system is inconsistent.
bool solve(const Mat& m, const Vec& b, Vec& x);

// Sylvester signature (positives, negatives) of a symmetric matrix, by exact
// congruence diagonalization. Throws std::invalid_argument("not symmetric").
std::pair<int, int> sym_signature(const Mat& s);

}  // namespace lb
