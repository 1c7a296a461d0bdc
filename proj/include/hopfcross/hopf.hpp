#pragma once

// Finite-dimensional (co/bi/Hopf) algebras as structure constants, with full
// axiom verification on basis tuples, the convolution algebra of maps from a
// coalgebra to an algebra, and the stock constructions the rest of the
// library builds on.

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcross/linalg.hpp"
#include "hopfcross/parallel.hpp"
#include "hopfcross/report.hpp"

namespace hopfcross {

struct AlgebraData {
    size_t dim = 0;
    LinMap mult; // [n,n] -> [n]
    Vec unit;

    Vec mul_basis(size_t i, size_t j) const { return mult.column(i * dim + j); }

    Vec mul(const Vec& u, const Vec& v) const {
        Vec out(dim);
        for (size_t i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                Scalar c = u[i] * v[j];
                for (size_t r = 0; r < dim; ++r) {
                    const Scalar& s = mult.at(r, i * dim + j);
                    if (!s.is_zero()) out[r] += c * s;
                }
            }
        }
        return out;
    }
};

struct CoalgebraData {
    size_t dim = 0;
    LinMap comult; // [n] -> [n,n]
    LinMap counit; // [n] -> [1]

    using SparseDelta = std::vector<std::tuple<size_t, size_t, Scalar>>;

    SparseDelta delta_basis(size_t i) const {
        SparseDelta out;
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                const Scalar& c = comult.at(j * dim + k, i);
                if (!c.is_zero()) out.emplace_back(j, k, c);
            }
        return out;
    }

    std::vector<SparseDelta> delta_table() const {
        std::vector<SparseDelta> t(dim);
        for (size_t i = 0; i < dim; ++i) t[i] = delta_basis(i);
        return t;
    }

    Scalar eps_basis(size_t i) const { return counit.at(0, i); }

    Scalar eps(const Vec& v) const {
        Scalar s;
        for (size_t i = 0; i < dim; ++i)
            if (!v[i].is_zero()) s += v[i] * eps_basis(i);
        return s;
    }
};

struct HopfData {
    AlgebraData algebra;
    CoalgebraData coalgebra;
    LinMap antipode; // [n] -> [n]
    std::vector<std::string> basis_labels;
    std::string name;

    size_t dim() const { return algebra.dim; }
    Vec S(const Vec& v) const { return antipode.apply(v); }
    Vec S_basis(size_t i) const { return antipode.column(i); }
};

// ---------------------------------------------------------------- verifiers

inline AxiomReport verify_algebra(const AlgebraData& A) {
    AxiomReport rep;
    size_t n = A.dim;
    // parallel over the first index; the reported witness is the
    // lexicographically first failing triple regardless of scheduling
    std::vector<size_t> first_fail(n, n * n);
    parallel_for(n, [&](size_t i) {
        for (size_t j = 0; j < n; ++j) {
            Vec ij = A.mul_basis(i, j);
            for (size_t l = 0; l < n; ++l) {
                Vec lhs = A.mul(ij, basis_vec(n, l));
                Vec rhs = A.mul(basis_vec(n, i), A.mul_basis(j, l));
                if (!vec_eq(lhs, rhs)) {
                    first_fail[i] = j * n + l;
                    return;
                }
            }
        }
    });
    bool assoc_ok = true;
    std::vector<size_t> assoc_witness;
    for (size_t i = 0; i < n; ++i)
        if (first_fail[i] != n * n) {
            assoc_ok = false;
            assoc_witness = {i, first_fail[i] / n, first_fail[i] % n};
            break;
        }
    rep.record("associativity", assoc_ok, assoc_witness);

    bool lu = true, ru = true;
    std::vector<size_t> luw, ruw;
    for (size_t i = 0; i < n; ++i) {
        if (lu && !vec_eq(A.mul(A.unit, basis_vec(n, i)), basis_vec(n, i))) { lu = false; luw = {i}; }
        if (ru && !vec_eq(A.mul(basis_vec(n, i), A.unit), basis_vec(n, i))) { ru = false; ruw = {i}; }
    }
    rep.record("unit_left", lu, luw);
    rep.record("unit_right", ru, ruw);
    return rep;
}

inline AxiomReport verify_coalgebra(const CoalgebraData& C) {
    AxiomReport rep;
    size_t n = C.dim;
    auto delta = C.delta_table();

    bool co = true;
    std::vector<size_t> cow;
    for (size_t i = 0; i < n && co; ++i) {
        // (Delta (x) id) Delta vs (id (x) Delta) Delta, as dense vectors in V^{(x)3}
        Vec lhs(n * n * n), rhs(n * n * n);
        for (auto& [j, k, c] : delta[i]) {
            for (auto& [a, b, c2] : delta[j]) lhs[(a * n + b) * n + k] += c * c2;
            for (auto& [a, b, c2] : delta[k]) rhs[(j * n + a) * n + b] += c * c2;
        }
        if (!vec_eq(lhs, rhs)) { co = false; cow = {i}; }
    }
    rep.record("coassociativity", co, cow);

    bool cl = true, cr = true;
    std::vector<size_t> clw, crw;
    for (size_t i = 0; i < n; ++i) {
        Vec left(n), right(n);
        for (auto& [j, k, c] : delta[i]) {
            left[k] += c * C.eps_basis(j);
            right[j] += c * C.eps_basis(k);
        }
        if (cl && !vec_eq(left, basis_vec(n, i))) { cl = false; clw = {i}; }
        if (cr && !vec_eq(right, basis_vec(n, i))) { cr = false; crw = {i}; }
    }
    rep.record("counit_left", cl, clw);
    rep.record("counit_right", cr, crw);
    return rep;
}

inline AxiomReport verify_bialgebra_compat(const HopfData& H) {
    AxiomReport rep;
    size_t n = H.dim();
    auto delta = H.coalgebra.delta_table();

    bool dm = true;
    std::vector<size_t> dmw;
    for (size_t i = 0; i < n && dm; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec prod = H.algebra.mul_basis(i, j);
            Vec lhs(n * n);
            for (size_t r = 0; r < n; ++r)
                if (!prod[r].is_zero())
                    for (auto& [a, b, c] : delta[r]) lhs[a * n + b] += prod[r] * c;
            Vec rhs(n * n);
            for (auto& [a, b, c1] : delta[i])
                for (auto& [p, q, c2] : delta[j]) {
                    Vec m1 = H.algebra.mul_basis(a, p);
                    Vec m2 = H.algebra.mul_basis(b, q);
                    Scalar c = c1 * c2;
                    for (size_t r = 0; r < n; ++r) {
                        if (m1[r].is_zero()) continue;
                        for (size_t s = 0; s < n; ++s)
                            if (!m2[s].is_zero()) rhs[r * n + s] += c * m1[r] * m2[s];
                    }
                }
            if (!vec_eq(lhs, rhs)) { dm = false; dmw = {i, j}; break; }
        }
    rep.record("comult_multiplicative", dm, dmw);

    // Delta(1) = 1 (x) 1
    Vec d1(n * n);
    for (size_t i = 0; i < n; ++i)
        if (!H.algebra.unit[i].is_zero())
            for (auto& [a, b, c] : delta[i]) d1[a * n + b] += H.algebra.unit[i] * c;
    Vec unit2(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            unit2[i * n + j] = H.algebra.unit[i] * H.algebra.unit[j];
    rep.record("comult_unit", vec_eq(d1, unit2));

    bool em = true;
    std::vector<size_t> emw;
    for (size_t i = 0; i < n && em; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar lhs = H.coalgebra.eps(H.algebra.mul_basis(i, j));
            if (lhs != H.coalgebra.eps_basis(i) * H.coalgebra.eps_basis(j)) {
                em = false; emw = {i, j}; break;
            }
        }
    rep.record("counit_multiplicative", em, emw);
    rep.record("counit_unit", H.coalgebra.eps(H.algebra.unit) == Scalar(1L));
    return rep;
}

inline AxiomReport verify_hopf(const HopfData& H) {
    AxiomReport rep;
    rep.merge(verify_algebra(H.algebra));
    rep.merge(verify_coalgebra(H.coalgebra));
    rep.merge(verify_bialgebra_compat(H));

    size_t n = H.dim();
    auto delta = H.coalgebra.delta_table();
    bool sl = true, sr = true;
    std::vector<size_t> slw, srw;
    for (size_t i = 0; i < n; ++i) {
        Vec left(n), right(n);
        for (auto& [j, k, c] : delta[i]) {
            Vec l = H.algebra.mul(H.S_basis(j), basis_vec(n, k));
            Vec r = H.algebra.mul(basis_vec(n, j), H.S_basis(k));
            for (size_t t = 0; t < n; ++t) {
                left[t] += c * l[t];
                right[t] += c * r[t];
            }
        }
        Vec target(n);
        Scalar e = H.coalgebra.eps_basis(i);
        for (size_t t = 0; t < n; ++t) target[t] = e * H.algebra.unit[t];
        if (sl && !vec_eq(left, target)) { sl = false; slw = {i}; }
        if (sr && !vec_eq(right, target)) { sr = false; srw = {i}; }
    }
    rep.record("antipode_left", sl, slw);
    rep.record("antipode_right", sr, srw);
    return rep;
}

// --------------------------------------------------------------- convolution

// (f * g)(c) = f(c_(1)) g(c_(2)), for f, g : C -> A.
inline LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraData& C,
                          const AlgebraData& A) {
    if (f.cols() != C.dim || g.cols() != C.dim || f.rows() != A.dim || g.rows() != A.dim)
        fail("ShapeMismatch", "convolution: maps must go from C to A");
    LinMap out({C.dim}, {A.dim});
    for (size_t c = 0; c < C.dim; ++c) {
        Vec col(A.dim);
        for (auto& [j, k, coef] : C.delta_basis(c)) {
            Vec prod = A.mul(f.column(j), g.column(k));
            for (size_t r = 0; r < A.dim; ++r)
                if (!prod[r].is_zero()) col[r] += coef * prod[r];
        }
        for (size_t r = 0; r < A.dim; ++r) out.at(r, c) = col[r];
    }
    return out;
}

inline LinMap unit_counit_map(const CoalgebraData& C, const AlgebraData& A) {
    LinMap out({C.dim}, {A.dim});
    for (size_t c = 0; c < C.dim; ++c) {
        Scalar e = C.eps_basis(c);
        for (size_t r = 0; r < A.dim; ++r) out.at(r, c) = e * A.unit[r];
    }
    return out;
}

// Solve f * g = unit.counit for g, then verify the other side. In a
// finite-dimensional convolution algebra one-sided inverses are two-sided,
// but the verification is cheap and guards against bad input data.
inline LinMap convolution_inverse(const LinMap& f, const CoalgebraData& C, const AlgebraData& A) {
    size_t na = A.dim, nc = C.dim;
    if (f.cols() != nc || f.rows() != na)
        fail("ShapeMismatch", "convolution_inverse: map must go from C to A");
    size_t unknowns = na * nc; // g[q][k] flattened q*nc + k
    LinMap T({unknowns}, {unknowns});
    for (size_t c = 0; c < nc; ++c) {
        auto delta = C.delta_basis(c);
        for (size_t r = 0; r < na; ++r) {
            size_t row = r * nc + c;
            for (auto& [j, k, coef] : delta) {
                for (size_t p = 0; p < na; ++p) {
                    if (f.at(p, j).is_zero()) continue;
                    for (size_t q = 0; q < na; ++q) {
                        const Scalar& m = A.mult.at(r, p * na + q);
                        if (m.is_zero()) continue;
                        T.at(row, q * nc + k) += coef * f.at(p, j) * m;
                    }
                }
            }
        }
    }
    LinMap target = unit_counit_map(C, A);
    Vec b(unknowns);
    for (size_t r = 0; r < na; ++r)
        for (size_t c = 0; c < nc; ++c) b[r * nc + c] = target.at(r, c);
    SolveResult sol = solve(T, b);
    if (!sol.particular) fail("NotConvInvertible", "map has no convolution inverse");
    LinMap g({nc}, {na});
    for (size_t r = 0; r < na; ++r)
        for (size_t c = 0; c < nc; ++c) g.at(r, c) = (*sol.particular)[r * nc + c];
    if (convolution(g, f, C, A) != target)
        fail("NotConvInvertible", "one-sided convolution inverse is not two-sided");
    return g;
}

inline LinMap derive_antipode(const HopfData& H) {
    try {
        return convolution_inverse(LinMap::identity({H.dim()}), H.coalgebra, H.algebra);
    } catch (const Error& e) {
        if (e.code() == "NotConvInvertible") fail("NoAntipode", "identity is not convolution invertible");
        throw;
    }
}

// Delta^{legs-1}(x) as a dense vector in C^{(x) legs}; legs = 1 returns x.
inline Vec sweedler_expand(const CoalgebraData& C, const Vec& x, size_t legs) {
    size_t n = C.dim;
    Vec cur = x;
    size_t cur_legs = 1;
    auto delta = C.delta_table();
    while (cur_legs < legs) {
        size_t len = cur.size();
        Vec next(len * n);
        for (size_t idx = 0; idx < len; ++idx) {
            if (cur[idx].is_zero()) continue;
            size_t last = idx % n, head = idx / n;
            for (auto& [j, k, c] : delta[last])
                next[(head * n + j) * n + k] += cur[idx] * c;
        }
        cur = std::move(next);
        ++cur_legs;
    }
    return cur;
}

// ------------------------------------------------------------------ presets

inline HopfData group_algebra(const std::vector<std::vector<size_t>>& cayley,
                              const std::vector<std::string>& labels = {},
                              const std::string& name = "group algebra") {
    size_t n = cayley.size();
    for (const auto& row : cayley)
        if (row.size() != n) fail("NotAGroup", "cayley table is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (cayley[i][j] >= n) fail("NotAGroup", "cayley entry out of range");
    // identity
    size_t e = n;
    for (size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (size_t j = 0; j < n; ++j)
            if (cayley[i][j] != j || cayley[j][i] != j) { ok = false; break; }
        if (ok) { e = i; break; }
    }
    if (e == n) fail("NotAGroup", "no identity element");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]])
                    fail("NotAGroup", "multiplication table is not associative");
    std::vector<size_t> inverse(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            if (cayley[i][j] == e && cayley[j][i] == e) { inverse[i] = j; break; }
        if (inverse[i] == n) fail("NotAGroup", "element without inverse");
    }

    HopfData H;
    H.name = name;
    H.algebra.dim = n;
    H.algebra.mult = LinMap({n, n}, {n});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) H.algebra.mult.at(cayley[i][j], i * n + j) = Scalar(1L);
    H.algebra.unit = basis_vec(n, e);
    H.coalgebra.dim = n;
    H.coalgebra.comult = LinMap({n}, {n, n});
    H.coalgebra.counit = LinMap({n}, {1});
    for (size_t i = 0; i < n; ++i) {
        H.coalgebra.comult.at(i * n + i, i) = Scalar(1L);
        H.coalgebra.counit.at(0, i) = Scalar(1L);
    }
    H.antipode = LinMap({n}, {n});
    for (size_t i = 0; i < n; ++i) H.antipode.at(inverse[i], i) = Scalar(1L);
    if (!labels.empty())
        H.basis_labels = labels;
    else {
        H.basis_labels.resize(n);
        for (size_t i = 0; i < n; ++i) H.basis_labels[i] = (i == e) ? "1" : "g" + std::to_string(i);
    }
    return H;
}

inline HopfData cyclic_group_algebra(size_t n, const std::string& gen = "a") {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    std::vector<std::string> labels(n);
    for (size_t i = 0; i < n; ++i)
        labels[i] = (i == 0) ? "1" : (i == 1 ? gen : gen + "^" + std::to_string(i));
    return group_algebra(t, labels, "k[C" + std::to_string(n) + "]");
}

inline HopfData klein_four_group_algebra() {
    // elements 1, s, t, st
    std::vector<std::vector<size_t>> t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return group_algebra(t, {"1", "s", "t", "st"}, "k[C2xC2]");
}

inline HopfData symmetric_group_s3_algebra() {
    // permutations of {0,1,2} listed as id, (01), (02), (12), (012), (021)
    auto compose_perm = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
        return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]};
    };
    std::vector<std::array<int, 3>> el = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                          {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    size_t n = el.size();
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto p = compose_perm(el[i], el[j]);
            for (size_t k = 0; k < n; ++k)
                if (el[k] == p) { t[i][j] = k; break; }
        }
    return group_algebra(t, {"e", "(01)", "(02)", "(12)", "(012)", "(021)"}, "k[S3]");
}

// The 4-dimensional algebra on 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
// Delta(g) = g(x)g, Delta(x) = g(x)x + x(x)1, S(g) = g, S(x) = -gx.
inline HopfData sweedler_h4() {
    HopfData H;
    H.name = "H4";
    size_t n = 4;
    H.basis_labels = {"1", "g", "x", "gx"};
    H.algebra.dim = n;
    H.algebra.mult = LinMap({n, n}, {n});
    auto set = [&](size_t i, size_t j, size_t r, long c) { H.algebra.mult.at(r, i * n + j) = Scalar(c); };
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
    set(1, 0, 1, 1); set(1, 1, 0, 1); set(1, 2, 3, 1); set(1, 3, 2, 1);
    set(2, 0, 2, 1); set(2, 1, 3, -1);
    set(3, 0, 3, 1); set(3, 1, 2, -1);
    H.algebra.unit = basis_vec(n, 0);
    H.coalgebra.dim = n;
    H.coalgebra.comult = LinMap({n}, {n, n});
    auto dset = [&](size_t i, size_t j, size_t k, long c) { H.coalgebra.comult.at(j * n + k, i) = Scalar(c); };
    dset(0, 0, 0, 1);
    dset(1, 1, 1, 1);
    dset(2, 1, 2, 1); dset(2, 2, 0, 1);
    dset(3, 0, 3, 1); dset(3, 3, 1, 1);
    H.coalgebra.counit = LinMap({n}, {1});
    H.coalgebra.counit.at(0, 0) = Scalar(1L);
    H.coalgebra.counit.at(0, 1) = Scalar(1L);
    H.antipode = LinMap({n}, {n});
    H.antipode.at(0, 0) = Scalar(1L);
    H.antipode.at(1, 1) = Scalar(1L);
    H.antipode.at(3, 2) = Scalar(-1L); // S(x) = -gx
    H.antipode.at(2, 3) = Scalar(1L);  // S(gx) = x
    return H;
}

inline HopfData trivial_hopf() {
    HopfData H;
    H.name = "k";
    H.basis_labels = {"1"};
    H.algebra.dim = 1;
    H.algebra.mult = LinMap({1, 1}, {1});
    H.algebra.mult.at(0, 0) = Scalar(1L);
    H.algebra.unit = basis_vec(1, 0);
    H.coalgebra.dim = 1;
    H.coalgebra.comult = LinMap({1}, {1, 1});
    H.coalgebra.comult.at(0, 0) = Scalar(1L);
    H.coalgebra.counit = LinMap({1}, {1});
    H.coalgebra.counit.at(0, 0) = Scalar(1L);
    H.antipode = LinMap::identity({1});
    return H;
}

// Componentwise structure with the middle flip; S = S_A (x) S_H.
inline HopfData tensor_hopf(const HopfData& A, const HopfData& H) {
    size_t na = A.dim(), nh = H.dim(), n = na * nh;
    HopfData T;
    T.name = A.name + " (x) " + H.name;
    T.basis_labels.resize(n);
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h)
            T.basis_labels[a * nh + h] = A.basis_labels[a] + "#" + H.basis_labels[h];
    T.algebra.dim = n;
    T.algebra.mult = LinMap({n, n}, {n});
    for (size_t a1 = 0; a1 < na; ++a1)
        for (size_t h1 = 0; h1 < nh; ++h1)
            for (size_t a2 = 0; a2 < na; ++a2)
                for (size_t h2 = 0; h2 < nh; ++h2) {
                    Vec pa = A.algebra.mul_basis(a1, a2);
                    Vec ph = H.algebra.mul_basis(h1, h2);
                    size_t col = (a1 * nh + h1) * n + (a2 * nh + h2);
                    for (size_t r = 0; r < na; ++r) {
                        if (pa[r].is_zero()) continue;
                        for (size_t s = 0; s < nh; ++s)
                            if (!ph[s].is_zero()) T.algebra.mult.at(r * nh + s, col) = pa[r] * ph[s];
                    }
                }
    T.algebra.unit = Vec(n);
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) T.algebra.unit[a * nh + h] = A.algebra.unit[a] * H.algebra.unit[h];
    T.coalgebra.dim = n;
    T.coalgebra.comult = LinMap({n}, {n, n});
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            size_t i = a * nh + h;
            for (auto& [a1, a2, c1] : A.coalgebra.delta_basis(a))
                for (auto& [h1, h2, c2] : H.coalgebra.delta_basis(h))
                    T.coalgebra.comult.at((a1 * nh + h1) * n + (a2 * nh + h2), i) = c1 * c2;
        }
    T.coalgebra.counit = LinMap({n}, {1});
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h)
            T.coalgebra.counit.at(0, a * nh + h) = A.coalgebra.eps_basis(a) * H.coalgebra.eps_basis(h);
    T.antipode = LinMap({n}, {n});
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            Vec sa = A.S_basis(a), sh = H.S_basis(h);
            size_t col = a * nh + h;
            for (size_t r = 0; r < na; ++r) {
                if (sa[r].is_zero()) continue;
                for (size_t s = 0; s < nh; ++s)
                    if (!sh[s].is_zero()) T.antipode.at(r * nh + s, col) = sa[r] * sh[s];
            }
        }
    return T;
}

// -------------------------------------------------------------- predicates

enum class MapKind { Algebra, Coalgebra, Hopf, Iso };

inline AxiomReport map_predicates(const LinMap& phi, const HopfData& A, const HopfData& B,
                                  MapKind kind) {
    if (phi.cols() != A.dim() || phi.rows() != B.dim())
        fail("ShapeMismatch", "map_predicates: map must go from A to B");
    AxiomReport rep;
    size_t na = A.dim();
    bool want_alg = kind == MapKind::Algebra || kind == MapKind::Hopf || kind == MapKind::Iso;
    bool want_coa = kind == MapKind::Coalgebra || kind == MapKind::Hopf || kind == MapKind::Iso;

    if (want_alg) {
        bool mul_ok = true;
        std::vector<size_t> w;
        for (size_t i = 0; i < na && mul_ok; ++i)
            for (size_t j = 0; j < na; ++j) {
                Vec lhs = phi.apply(A.algebra.mul_basis(i, j));
                Vec rhs = B.algebra.mul(phi.column(i), phi.column(j));
                if (!vec_eq(lhs, rhs)) { mul_ok = false; w = {i, j}; break; }
            }
        rep.record("multiplicative", mul_ok, w);
        rep.record("unit_preserving", vec_eq(phi.apply(A.algebra.unit), B.algebra.unit));
    }
    if (want_coa) {
        bool com_ok = true;
        std::vector<size_t> w;
        size_t nb = B.dim();
        for (size_t i = 0; i < na; ++i) {
            Vec lhs(nb * nb);
            Vec img = phi.column(i);
            for (size_t r = 0; r < nb; ++r)
                if (!img[r].is_zero())
                    for (auto& [a, b, c] : B.coalgebra.delta_basis(r)) lhs[a * nb + b] += img[r] * c;
            Vec rhs(nb * nb);
            for (auto& [a, b, c] : A.coalgebra.delta_basis(i)) {
                Vec pa = phi.column(a), pb = phi.column(b);
                for (size_t r = 0; r < nb; ++r) {
                    if (pa[r].is_zero()) continue;
                    for (size_t s = 0; s < nb; ++s)
                        if (!pb[s].is_zero()) rhs[r * nb + s] += c * pa[r] * pb[s];
                }
            }
            if (!vec_eq(lhs, rhs)) { com_ok = false; w = {i}; break; }
        }
        rep.record("comultiplicative", com_ok, w);
        bool eps_ok = true;
        std::vector<size_t> we;
        for (size_t i = 0; i < na; ++i)
            if (B.coalgebra.eps(phi.column(i)) != A.coalgebra.eps_basis(i)) { eps_ok = false; we = {i}; break; }
        rep.record("counit_preserving", eps_ok, we);
    }
    if (kind == MapKind::Hopf || kind == MapKind::Iso) {
        bool s_ok = true;
        std::vector<size_t> w;
        for (size_t i = 0; i < na; ++i)
            if (!vec_eq(phi.apply(A.S_basis(i)), B.S(phi.column(i)))) { s_ok = false; w = {i}; break; }
        rep.record("antipode_commuting", s_ok, w);
    }
    if (kind == MapKind::Iso) {
        bool bij = phi.rows() == phi.cols() && rank_of(phi) == phi.cols();
        rep.record("bijective", bij);
    }
    return rep;
}

inline bool is_grouplike(const HopfData& H, const Vec& z) {
    size_t n = H.dim();
    if (z.size() != n) fail("ShapeMismatch", "is_grouplike: wrong dimension");
    if (H.coalgebra.eps(z) != Scalar(1L)) return false;
    Vec dz(n * n);
    for (size_t i = 0; i < n; ++i)
        if (!z[i].is_zero())
            for (auto& [a, b, c] : H.coalgebra.delta_basis(i)) dz[a * n + b] += z[i] * c;
    Vec zz(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) zz[i * n + j] = z[i] * z[j];
    return vec_eq(dz, zz);
}

} // namespace hopfcross
