#pragma once

// Dense exact linear algebra over the session field, with tensor-factor
// bookkeeping. Flattening of multi-indices is row-major throughout: the
// leftmost tensor factor is the most significant digit. Every identity the
// verifiers check depends on this one convention.

#include <numeric>
#include <optional>
#include <vector>

#include "hopfcross/error.hpp"
#include "hopfcross/scalar.hpp"

namespace hopfcross {

using Vec = std::vector<Scalar>;

inline Vec basis_vec(size_t dim, size_t i) {
    Vec v(dim);
    v[i] = Scalar(1L);
    return v;
}

inline bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline size_t dims_prod(const std::vector<size_t>& dims) {
    size_t p = 1;
    for (size_t d : dims) p *= d;
    return p;
}

class LinMap {
public:
    LinMap() = default;
    LinMap(std::vector<size_t> domain_dims, std::vector<size_t> codomain_dims)
        : dom_(std::move(domain_dims)), cod_(std::move(codomain_dims)),
          rows_(dims_prod(cod_)), cols_(dims_prod(dom_)), m_(rows_ * cols_) {}

    static LinMap identity(std::vector<size_t> dims) {
        LinMap f(dims, dims);
        for (size_t i = 0; i < f.cols_; ++i) f.at(i, i) = Scalar(1L);
        return f;
    }

    // swap of two tensor factors: V1 (x) V2 -> V2 (x) V1
    static LinMap flip(size_t d1, size_t d2) {
        LinMap f({d1, d2}, {d2, d1});
        for (size_t i = 0; i < d1; ++i)
            for (size_t j = 0; j < d2; ++j) f.at(j * d1 + i, i * d2 + j) = Scalar(1L);
        return f;
    }

    // permutation of tensor factors: factor k of the output is factor perm[k] of the input
    static LinMap permute(const std::vector<size_t>& dims, const std::vector<size_t>& perm) {
        std::vector<size_t> out_dims(perm.size());
        for (size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];
        LinMap f(dims, out_dims);
        std::vector<size_t> idx(dims.size(), 0);
        size_t total = dims_prod(dims);
        for (size_t col = 0; col < total; ++col) {
            size_t rest = col;
            for (size_t k = dims.size(); k-- > 0;) { idx[k] = rest % dims[k]; rest /= dims[k]; }
            size_t row = 0;
            for (size_t k = 0; k < perm.size(); ++k) row = row * out_dims[k] + idx[perm[k]];
            f.at(row, col) = Scalar(1L);
        }
        return f;
    }

    const std::vector<size_t>& domain_dims() const { return dom_; }
    const std::vector<size_t>& codomain_dims() const { return cod_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return m_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return m_[r * cols_ + c]; }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) fail("ShapeMismatch", "apply: vector has wrong dimension");
        Vec out(rows_);
        for (size_t c = 0; c < cols_; ++c) {
            if (v[c].is_zero()) continue;
            for (size_t r = 0; r < rows_; ++r)
                if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        }
        return out;
    }

    Vec column(size_t c) const {
        Vec out(rows_);
        for (size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    // Matrices compare by flattened shape and entries; the factor split is bookkeeping.
    friend bool operator==(const LinMap& a, const LinMap& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.m_.size(); ++i)
            if (a.m_[i] != b.m_[i]) return false;
        return true;
    }
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

    LinMap reshaped(std::vector<size_t> dom, std::vector<size_t> cod) const {
        if (dims_prod(dom) != cols_ || dims_prod(cod) != rows_)
            fail("ShapeMismatch", "reshape changes total dimension");
        LinMap out = *this;
        out.dom_ = std::move(dom);
        out.cod_ = std::move(cod);
        return out;
    }

private:
    std::vector<size_t> dom_, cod_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> m_;
};

inline LinMap compose(const LinMap& g, const LinMap& f) {
    if (g.cols() != f.rows()) fail("ShapeMismatch", "compose: inner dimensions disagree");
    LinMap out(f.domain_dims(), g.codomain_dims());
    for (size_t k = 0; k < f.rows(); ++k)
        for (size_t c = 0; c < f.cols(); ++c) {
            if (f.at(k, c).is_zero()) continue;
            for (size_t r = 0; r < g.rows(); ++r)
                if (!g.at(r, k).is_zero()) out.at(r, c) += g.at(r, k) * f.at(k, c);
        }
    return out;
}

inline LinMap tensor_map(const LinMap& f, const LinMap& g) {
    std::vector<size_t> dom = f.domain_dims();
    dom.insert(dom.end(), g.domain_dims().begin(), g.domain_dims().end());
    std::vector<size_t> cod = f.codomain_dims();
    cod.insert(cod.end(), g.codomain_dims().begin(), g.codomain_dims().end());
    LinMap out(dom, cod);
    for (size_t rf = 0; rf < f.rows(); ++rf)
        for (size_t cf = 0; cf < f.cols(); ++cf) {
            if (f.at(rf, cf).is_zero()) continue;
            for (size_t rg = 0; rg < g.rows(); ++rg)
                for (size_t cg = 0; cg < g.cols(); ++cg) {
                    if (g.at(rg, cg).is_zero()) continue;
                    out.at(rf * g.rows() + rg, cf * g.cols() + cg) = f.at(rf, cf) * g.at(rg, cg);
                }
        }
    return out;
}

inline LinMap linmap_add(const LinMap& a, const LinMap& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail("ShapeMismatch", "add: shapes disagree");
    LinMap out = a;
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

struct SolveResult {
    std::optional<Vec> particular;
    std::vector<Vec> nullspace_basis; // reduced echelon form
};

// Exact Gauss-Jordan. Returns the full affine solution set of M x = b.
inline SolveResult solve(const LinMap& M, const Vec& b) {
    if (b.size() != M.rows()) fail("ShapeMismatch", "solve: rhs has wrong dimension");
    size_t rows = M.rows(), cols = M.cols();
    std::vector<Vec> a(rows, Vec(cols + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) a[r][c] = M.at(r, c);
        a[r][cols] = b[r];
    }
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        Scalar inv = a[rank][c].inverse();
        for (size_t j = c; j <= cols; ++j) a[rank][j] = a[rank][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (size_t j = c; j <= cols; ++j) a[r][j] = a[r][j] - f * a[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    SolveResult res;
    bool consistent = true;
    for (size_t r = rank; r < rows; ++r)
        if (!a[r][cols].is_zero()) { consistent = false; break; }
    if (consistent) {
        Vec x(cols);
        for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = a[i][cols];
        res.particular = std::move(x);
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols);
        v[c] = Scalar(1L);
        for (size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -a[i][c];
        res.nullspace_basis.push_back(std::move(v));
    }
    return res;
}

inline SolveResult solve_homogeneous(const LinMap& M) { return solve(M, Vec(M.rows())); }

inline size_t rank_of(const LinMap& M) {
    return M.cols() - solve_homogeneous(M).nullspace_basis.size();
}

inline LinMap invert(const LinMap& M) {
    if (M.rows() != M.cols()) fail("Singular", "invert: matrix not square");
    size_t n = M.rows();
    std::vector<Vec> a(n, Vec(2 * n));
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) a[r][c] = M.at(r, c);
        a[r][n + r] = Scalar(1L);
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) fail("Singular", "invert: singular matrix");
        std::swap(a[c], a[p]);
        Scalar inv = a[c][c].inverse();
        for (size_t j = 0; j < 2 * n; ++j) a[c][j] = a[c][j] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (size_t j = 0; j < 2 * n; ++j) a[r][j] = a[r][j] - f * a[c][j];
        }
    }
    LinMap out(M.codomain_dims(), M.domain_dims());
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out.at(r, c) = a[r][n + c];
    return out;
}

// Does v lie in the column span of M? If so, return coordinates.
inline std::optional<Vec> membership(const LinMap& M, const Vec& v) {
    SolveResult r = solve(M, v);
    if (!r.particular) return std::nullopt;
    return r.particular;
}

} // namespace hopfcross
