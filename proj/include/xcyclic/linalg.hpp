#pragma once

// Dense matrices of field elements with Gaussian elimination. When all
// entries lie in a common subfield, elimination stays inside that subfield,
// so rank/nullspace over GF(q) fall out of the ambient arithmetic.

#include <vector>

#include "galois.hpp"

namespace xcyclic {

class Matrix {
public:
    Matrix() : f_(nullptr), r_(0), c_(0) {}
    Matrix(const Field& f, size_t rows, size_t cols)
        : f_(&f), r_(rows), c_(cols), a_(rows * cols, f.zero()) {}

    static Matrix identity(const Field& f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    const Field& field() const { return *f_; }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    FieldElement& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix t(*f_, c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw Error("ShapeMismatch", "matrix product shapes");
        Matrix r(*f_, r_, o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k) {
                FieldElement v = at(i, k);
                if (v.is_zero()) continue;
                for (size_t j = 0; j < o.c_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    // in-place reduced row echelon form; returns pivot column per rank index
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < c_ && row < r_; ++col) {
            size_t sel = row;
            while (sel < r_ && at(sel, col).is_zero()) ++sel;
            if (sel == r_) continue;
            swap_rows(sel, row);
            FieldElement inv = at(row, col).inv();
            for (size_t j = col; j < c_; ++j) at(row, j) *= inv;
            for (size_t i = 0; i < r_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                FieldElement fch = at(i, col);
                for (size_t j = col; j < c_; ++j) at(i, j) -= fch * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // basis of { x : A x = 0 }, each vector length cols()
    std::vector<std::vector<FieldElement>> nullspace() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<char> is_pivot(c_, 0);
        for (size_t p : pivots) is_pivot[p] = 1;
        std::vector<std::vector<FieldElement>> basis;
        for (size_t free_col = 0; free_col < c_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<FieldElement> v(c_, f_->zero());
            v[free_col] = f_->one();
            for (size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = -m.at(k, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Matrix inverse() const {
        if (r_ != c_) throw Error("ShapeMismatch", "inverse of non-square matrix");
        Matrix aug(*f_, r_, 2 * c_);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, c_ + i) = f_->one();
        }
        auto pivots = aug.rref();
        if (pivots.size() < r_ || pivots[r_ - 1] >= c_)
            throw Error("Singular", "matrix not invertible");
        Matrix inv(*f_, r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
        return inv;
    }

    std::vector<FieldElement> apply(const std::vector<FieldElement>& x) const {
        if (x.size() != c_) throw Error("ShapeMismatch", "matrix-vector shapes");
        std::vector<FieldElement> y(r_, f_->zero());
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

private:
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < c_; ++j) std::swap(at(a, j), at(b, j));
    }
    const Field* f_;
    size_t r_, c_;
    std::vector<FieldElement> a_;
};

// Rank of rows as vectors over the subfield GF(Q): each ambient entry is
// expanded into its coordinates over the power basis {1, alpha, ...} of the
// field over GF(Q), then eliminated over GF(Q).
inline size_t rank_over_subfield(const Matrix& m, int Q) {
    const Field& f = m.field();
    int s = f.subfield_degree(Q);
    int deg = f.n() / s;  // extension degree over GF(Q)
    if (deg == 1) return m.rank();
    // coordinates of every ambient element over GF(Q): solve once via the
    // prime-field change matrix of the basis {alpha^i * g^j}
    SubfieldView view(f, Q);
    Matrix change(f, f.n(), f.n());
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j < s; ++j) {
            FieldElement b = f.alpha_pow(i) * view.g.pow(j);
            auto d = f.digits(b.code());
            for (int r = 0; r < f.n(); ++r)
                change.at(r, (size_t)i * s + j) = f.element(d[r]);
        }
    Matrix inv = change.inverse();
    Matrix big(f, m.rows(), m.cols() * deg);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            auto d = f.digits(m.at(i, j).code());
            std::vector<FieldElement> v;
            v.reserve(f.n());
            for (int r = 0; r < f.n(); ++r) v.push_back(f.element(d[r]));
            auto c = inv.apply(v);  // prime coefficients, (i*s + j) layout
            for (int t = 0; t < deg; ++t) {
                FieldElement coord = f.zero();
                for (int u = 0; u < s; ++u)
                    coord += c[(size_t)t * s + u] * view.g.pow(u);
                big.at(i, j * deg + t) = coord;
            }
        }
    return big.rank();
}

}  // namespace xcyclic
