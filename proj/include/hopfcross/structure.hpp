#pragma once

// Integrals, Maschke semisimplicity, and the commutativity / involutivity
// criteria for crossed products.

#include "hopfcross/crossed.hpp"

namespace hopfcross {

enum class Side { Left, Right };

struct IntegralSpace {
    Side side;
    std::vector<Vec> basis;
    std::vector<Scalar> epsilon_values;
};

// Right integrals solve t x = eps(x) t for all basis x; left integrals the mirror.
inline IntegralSpace integrals(const HopfData& H, Side side) {
    size_t n = H.dim();
    LinMap M({n}, {n * n});
    for (size_t x = 0; x < n; ++x) {
        Scalar ex = H.coalgebra.eps_basis(x);
        for (size_t i = 0; i < n; ++i) {
            Vec prod = (side == Side::Right) ? H.algebra.mul_basis(i, x) : H.algebra.mul_basis(x, i);
            for (size_t r = 0; r < n; ++r) {
                Scalar c = prod[r];
                if (i == r) c -= ex;
                M.at(x * n + r, i) = c;
            }
        }
    }
    IntegralSpace out{side, solve_homogeneous(M).nullspace_basis, {}};
    for (const auto& t : out.basis) out.epsilon_values.push_back(H.coalgebra.eps(t));
    return out;
}

struct SemisimpleResult {
    bool semisimple = false;
    std::optional<Vec> witness; // an integral with eps != 0
};

inline SemisimpleResult is_semisimple(const HopfData& H) {
    IntegralSpace sp = integrals(H, Side::Right);
    for (size_t i = 0; i < sp.basis.size(); ++i)
        if (!sp.epsilon_values[i].is_zero()) return {true, sp.basis[i]};
    return {false, std::nullopt};
}

inline bool satisfies_integral_identity(const HopfData& H, const Vec& t, Side side) {
    size_t n = H.dim();
    for (size_t x = 0; x < n; ++x) {
        Vec prod = (side == Side::Right) ? H.algebra.mul(t, basis_vec(n, x))
                                         : H.algebra.mul(basis_vec(n, x), t);
        Scalar e = H.coalgebra.eps_basis(x);
        Vec expect(n);
        for (size_t r = 0; r < n; ++r) expect[r] = e * t[r];
        if (!vec_eq(prod, expect)) return false;
    }
    return true;
}

// x_A # x_H is a right integral of the product when both inputs are right integrals.
inline Vec product_integral(const CrossedSystem& S, const HopfData& product, const Vec& x_A,
                            const Vec& x_H) {
    if (!satisfies_integral_identity(S.A, x_A, Side::Right))
        fail("NotAnIntegral", "x_A is not a right integral in A");
    if (!satisfies_integral_identity(S.H, x_H, Side::Right))
        fail("NotAnIntegral", "x_H is not a right integral in H");
    size_t na = S.A.dim(), nh = S.H.dim();
    Vec t(na * nh);
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) t[a * nh + h] = x_A[a] * x_H[h];
    if (!satisfies_integral_identity(product, t, Side::Right))
        fail("NotAnIntegral", "x_A # x_H failed the right-integral identity in the product");
    return t;
}

struct ProjectedIntegral {
    Vec value;
    bool zero = false; // the projection may legitimately vanish
};

// Right integrals project to H by eps (x) id; left integrals project to A by id (x) eps.
inline ProjectedIntegral project_integral(const CrossedSystem& S, const HopfData& product,
                                          const Vec& t, Side side) {
    if (!satisfies_integral_identity(product, t, side))
        fail("NotAnIntegral", "input is not an integral of the stated side");
    size_t na = S.A.dim(), nh = S.H.dim();
    ProjectedIntegral out;
    if (side == Side::Right) {
        Vec z(nh);
        for (size_t a = 0; a < na; ++a)
            for (size_t h = 0; h < nh; ++h) z[h] += S.A.coalgebra.eps_basis(a) * t[a * nh + h];
        out.value = z;
        out.zero = vec_is_zero(z);
        if (!satisfies_integral_identity(S.H, z, Side::Right))
            fail("NotAnIntegral", "projection is not a right integral in H");
    } else {
        Vec z(na);
        for (size_t a = 0; a < na; ++a)
            for (size_t h = 0; h < nh; ++h) z[a] += t[a * nh + h] * S.H.coalgebra.eps_basis(h);
        out.value = z;
        out.zero = vec_is_zero(z);
        if (!satisfies_integral_identity(S.A, z, Side::Left))
            fail("NotAnIntegral", "projection is not a left integral in A");
    }
    return out;
}

inline bool is_commutative(const HopfData& H) {
    size_t n = H.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!vec_eq(H.algebra.mul_basis(i, j), H.algebra.mul_basis(j, i))) return false;
    return true;
}

inline bool is_cocommutative(const HopfData& H) { return is_cocommutative_coalgebra(H.coalgebra); }

inline bool is_involutory(const HopfData& H) {
    return compose(H.antipode, H.antipode) == LinMap::identity({H.dim()});
}

// Prop-style criterion: the product is commutative iff A and H are commutative,
// the action is trivial and the cocycle is symmetric.
inline AxiomReport commutativity_criterion(const CrossedSystem& S) {
    if (!S.certified) fail("SystemNotCertified", "commutativity_criterion requires a certified system");
    AxiomReport rep;
    rep.record("A_commutative", is_commutative(S.A));
    rep.record("H_commutative", is_commutative(S.H));
    bool triv = S.act == trivial_action(S.A, S.H);
    rep.record("action_trivial", triv);
    bool sym = true;
    std::vector<size_t> w;
    size_t nh = S.H.dim();
    for (size_t h = 0; h < nh && sym; ++h)
        for (size_t g = h + 1; g < nh; ++g)
            if (!vec_eq(S.f_basis(h, g), S.f_basis(g, h))) { sym = false; w = {h, g}; break; }
    rep.record("cocycle_symmetric", sym, w);
    return rep;
}

// For cocommutative H: the product is involutory iff A is involutory and
// g1 |> f(S(g2), g3) = f(g1, S(g2)) for all g.
inline AxiomReport involutory_criterion_cocomm(const CrossedSystem& S) {
    if (!S.certified) fail("SystemNotCertified", "involutory_criterion_cocomm requires a certified system");
    if (!is_cocommutative(S.H)) fail("NotCocommutative", "criterion needs cocommutative H");
    AxiomReport rep;
    rep.record("A_involutory", is_involutory(S.A));
    size_t na = S.A.dim(), nh = S.H.dim();
    bool ok = true;
    std::vector<size_t> w;
    for (size_t g = 0; g < nh; ++g) {
        Vec lhs(na), rhs(na);
        for (auto& [t, c] : sweedler_legs(S.H.coalgebra, g, 3)) {
            Vec v = S.act_vec(basis_vec(nh, t[0]), S.f_vec(S.H.S_basis(t[1]), basis_vec(nh, t[2])));
            for (size_t r = 0; r < na; ++r) lhs[r] += c * v[r];
        }
        for (auto& [g1, g2, c] : S.H.coalgebra.delta_basis(g)) {
            Vec v = S.f_vec(basis_vec(nh, g1), S.H.S_basis(g2));
            for (size_t r = 0; r < na; ++r) rhs[r] += c * v[r];
        }
        if (!vec_eq(lhs, rhs)) { ok = false; w = {g}; break; }
    }
    rep.record("twisted_antipode_identity", ok, w);
    return rep;
}

} // namespace hopfcross
