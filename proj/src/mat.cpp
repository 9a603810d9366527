#include "lb/mat.hpp"

#include <stdexcept>

namespace lb {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    size_t pos = 0;
    auto take_int = [&]() -> std::string {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument("malformed rational: " + s);
        return s.substr(start, pos - start);
    };
    std::string num = take_int();
    std::string den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw std::invalid_argument("malformed rational: " + s);
        ++pos;
        den = take_int();
        if (pos != s.size()) throw std::invalid_argument("malformed rational: " + s);
    }
    mpz_class nz(num), dz(den);
    if (dz == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat r(nz, dz);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Mat::is_zero() const {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

Mat operator*(const Rat& s, const Mat& x) {
    Mat z = x;
    for (Rat& v : z.a) v *= s;
    return z;
}

Vec operator*(const Mat& x, const Vec& v) {
    if (static_cast<size_t>(x.cols) != v.size()) throw std::invalid_argument("shape mismatch");
    Vec w(x.rows, Rat(0));
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (x.at(i, j) != 0) w[i] += x.at(i, j) * v[j];
    return w;
}

bool is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

Mat rref(const Mat& m, std::vector<int>* pivots) {
    Mat r = m;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = 1 / r.at(lead, col);
        for (int j = 0; j < r.cols; ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead || r.at(i, col) == 0) continue;
            Rat f = r.at(i, col);
            for (int j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return r;
}

int rank(const Mat& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Rat det(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("not square");
    Mat r = m;
    Rat d(1);
    int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            d = -d;
        }
        d *= r.at(col, col);
        Rat inv = 1 / r.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (r.at(i, col) == 0) continue;
            Rat f = r.at(i, col) * inv;
            for (int j = col; j < n; ++j) r.at(i, j) -= f * r.at(col, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("not square");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    if (static_cast<int>(piv.size()) != n || piv.back() >= n)
        throw std::invalid_argument("singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

std::vector<Vec> nullspace_basis(const Mat& m) {
    std::vector<int> piv;
    Mat r = rref(m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_piv[free]) continue;
        Vec v(m.cols, Rat(0));
        v[free] = 1;
        for (size_t row = 0; row < piv.size(); ++row) v[piv[row]] = -r.at(static_cast<int>(row), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const Mat& m, const Vec& b, Vec& x) {
    if (static_cast<size_t>(m.rows) != b.size()) throw std::invalid_argument("shape mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols) return false;  // inconsistent
    x.assign(m.cols, Rat(0));
    for (size_t row = 0; row < piv.size(); ++row) x[piv[row]] = r.at(static_cast<int>(row), m.cols);
    return true;
}

std::pair<int, int> sym_signature(const Mat& s) {
    if (s.rows != s.cols) throw std::invalid_argument("not symmetric");
    int n = s.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.at(i, j) != s.at(j, i)) throw std::invalid_argument("not symmetric");
    Mat m = s;
    int pos = 0, neg = 0;
    // Congruence diagonalization: symmetric row+column elimination. When the
    // diagonal entry is zero but its row is not, fold a nonzero off-diagonal
    // entry onto the diagonal first (row/col addition keeps congruence).
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k) == 0) {
            int j = -1;
            for (int t = k + 1; t < n; ++t)
                if (m.at(k, t) != 0) {
                    j = t;
                    break;
                }
            if (j < 0) continue;
            for (int t = 0; t < n; ++t) m.at(k, t) += m.at(j, t);
            for (int t = 0; t < n; ++t) m.at(t, k) += m.at(t, j);
        }
        Rat d = m.at(k, k);
        if (d == 0) continue;
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / d;
            for (int t = 0; t < n; ++t) m.at(i, t) -= f * m.at(k, t);
            for (int t = 0; t < n; ++t) m.at(t, i) -= f * m.at(t, k);
        }
        if (d > 0)
            ++pos;
        else
            ++neg;
    }
    return {pos, neg};
}

}  // namespace lb
