#pragma once

// Coquasitriangular structures on crossed products: braidings, skew pairings,
// the (p,f)-right/left skew pairings and (u,v)-skew braidings, the seven
// compatibility conditions, assembly and decomposition of the braiding sigma
// on A # H, cyclic-group constructions and a finite parameter search.

#include <functional>
#include <map>

#include "hopfcross/structure.hpp"

namespace hopfcross {

struct Pairing {
    size_t left_dim = 0, right_dim = 0;
    std::vector<Scalar> m;

    Pairing() = default;
    Pairing(size_t l, size_t r) : left_dim(l), right_dim(r), m(l * r) {}

    Scalar& at(size_t i, size_t j) { return m[i * right_dim + j]; }
    const Scalar& at(size_t i, size_t j) const { return m[i * right_dim + j]; }

    Scalar eval(const Vec& a, const Vec& b) const {
        Scalar s;
        for (size_t i = 0; i < left_dim; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < right_dim; ++j)
                if (!b[j].is_zero() && !at(i, j).is_zero()) s += a[i] * b[j] * at(i, j);
        }
        return s;
    }
    Scalar eval_lv(size_t i, const Vec& b) const {
        Scalar s;
        for (size_t j = 0; j < right_dim; ++j)
            if (!b[j].is_zero() && !at(i, j).is_zero()) s += b[j] * at(i, j);
        return s;
    }
    Scalar eval_vr(const Vec& a, size_t j) const {
        Scalar s;
        for (size_t i = 0; i < left_dim; ++i)
            if (!a[i].is_zero() && !at(i, j).is_zero()) s += a[i] * at(i, j);
        return s;
    }

    friend bool operator==(const Pairing& x, const Pairing& y) {
        return x.left_dim == y.left_dim && x.right_dim == y.right_dim &&
               std::equal(x.m.begin(), x.m.end(), y.m.begin(),
                          [](const Scalar& a, const Scalar& b) { return a == b; });
    }
};

inline Pairing counit_pairing(const HopfData& L, const HopfData& R) {
    Pairing q(L.dim(), R.dim());
    for (size_t i = 0; i < L.dim(); ++i)
        for (size_t j = 0; j < R.dim(); ++j)
            q.at(i, j) = L.coalgebra.eps_basis(i) * R.coalgebra.eps_basis(j);
    return q;
}

struct BraidingQuadruple {
    Pairing p, tau, u, v;
    bool certified = false;
};

// ----------------------------------------------------------- (BR1)-(BR5)

inline AxiomReport check_braiding(const HopfData& H, const Pairing& p) {
    if (p.left_dim != H.dim() || p.right_dim != H.dim())
        fail("ShapeMismatch", "braiding pairing must be square on H");
    AxiomReport rep;
    size_t n = H.dim();
    auto delta = H.coalgebra.delta_table();

    bool br2 = true, br4 = true;
    std::vector<size_t> w2, w4;
    for (size_t x = 0; x < n; ++x) {
        if (br2 && p.eval(H.algebra.unit, basis_vec(n, x)) != H.coalgebra.eps_basis(x)) { br2 = false; w2 = {x}; }
        if (br4 && p.eval(basis_vec(n, x), H.algebra.unit) != H.coalgebra.eps_basis(x)) { br4 = false; w4 = {x}; }
    }

    bool br1 = true, br3 = true;
    std::vector<size_t> w1, w3;
    for (size_t x = 0; x < n && (br1 || br3); ++x)
        for (size_t y = 0; y < n && (br1 || br3); ++y)
            for (size_t z = 0; z < n; ++z) {
                if (br1) {
                    Scalar lhs;
                    Vec xy = H.algebra.mul_basis(x, y);
                    for (size_t r = 0; r < n; ++r)
                        if (!xy[r].is_zero()) lhs += xy[r] * p.at(r, z);
                    Scalar rhs;
                    for (auto& [z1, z2, c] : delta[z]) rhs += c * p.at(x, z1) * p.at(y, z2);
                    if (lhs != rhs) { br1 = false; w1 = {x, y, z}; }
                }
                if (br3) {
                    Vec yz = H.algebra.mul_basis(y, z);
                    Scalar lhs;
                    for (size_t r = 0; r < n; ++r)
                        if (!yz[r].is_zero()) lhs += yz[r] * p.at(x, r);
                    Scalar rhs;
                    for (auto& [x1, x2, c] : delta[x]) rhs += c * p.at(x1, z) * p.at(x2, y);
                    if (lhs != rhs) { br3 = false; w3 = {x, y, z}; }
                }
            }

    bool br5 = true;
    std::vector<size_t> w5;
    for (size_t x = 0; x < n && br5; ++x)
        for (size_t y = 0; y < n; ++y) {
            Vec lhs(n), rhs(n);
            for (auto& [x1, x2, c1] : delta[x])
                for (auto& [y1, y2, c2] : delta[y]) {
                    Scalar c = c1 * c2;
                    Vec l = H.algebra.mul_basis(x2, y2);
                    Vec r = H.algebra.mul_basis(y1, x1);
                    Scalar pl = p.at(x1, y1), pr = p.at(x2, y2);
                    for (size_t t = 0; t < n; ++t) {
                        if (!l[t].is_zero()) lhs[t] += c * pl * l[t];
                        if (!r[t].is_zero()) rhs[t] += c * pr * r[t];
                    }
                }
            if (!vec_eq(lhs, rhs)) { br5 = false; w5 = {x, y}; break; }
        }

    rep.record("BR1", br1, w1);
    rep.record("BR2", br2, w2);
    rep.record("BR3", br3, w3);
    rep.record("BR4", br4, w4);
    rep.record("BR5", br5, w5);
    return rep;
}

// Skew pairing on (A, B): the (BR1)-(BR4) shape across two Hopf algebras.
inline AxiomReport check_skew_pairing(const HopfData& A, const HopfData& B, const Pairing& q) {
    if (q.left_dim != A.dim() || q.right_dim != B.dim())
        fail("ShapeMismatch", "skew pairing must pair A with B");
    AxiomReport rep;
    size_t na = A.dim(), nb = B.dim();
    auto dB = B.coalgebra.delta_table();
    auto dA = A.coalgebra.delta_table();

    bool br1 = true;
    std::vector<size_t> w1;
    for (size_t x = 0; x < na && br1; ++x)
        for (size_t y = 0; y < na && br1; ++y)
            for (size_t z = 0; z < nb; ++z) {
                Vec xy = A.algebra.mul_basis(x, y);
                Scalar lhs;
                for (size_t r = 0; r < na; ++r)
                    if (!xy[r].is_zero()) lhs += xy[r] * q.at(r, z);
                Scalar rhs;
                for (auto& [z1, z2, c] : dB[z]) rhs += c * q.at(x, z1) * q.at(y, z2);
                if (lhs != rhs) { br1 = false; w1 = {x, y, z}; break; }
            }
    rep.record("BR1", br1, w1);

    bool br2 = true;
    std::vector<size_t> w2;
    for (size_t z = 0; z < nb; ++z)
        if (q.eval(A.algebra.unit, basis_vec(nb, z)) != B.coalgebra.eps_basis(z)) { br2 = false; w2 = {z}; break; }
    rep.record("BR2", br2, w2);

    bool br3 = true;
    std::vector<size_t> w3;
    for (size_t x = 0; x < na && br3; ++x)
        for (size_t y = 0; y < nb && br3; ++y)
            for (size_t z = 0; z < nb; ++z) {
                Vec yz = B.algebra.mul_basis(y, z);
                Scalar lhs;
                for (size_t r = 0; r < nb; ++r)
                    if (!yz[r].is_zero()) lhs += yz[r] * q.at(x, r);
                Scalar rhs;
                for (auto& [x1, x2, c] : dA[x]) rhs += c * q.at(x1, z) * q.at(x2, y);
                if (lhs != rhs) { br3 = false; w3 = {x, y, z}; break; }
            }
    rep.record("BR3", br3, w3);

    bool br4 = true;
    std::vector<size_t> w4;
    for (size_t x = 0; x < na; ++x)
        if (q.eval(basis_vec(na, x), B.algebra.unit) != A.coalgebra.eps_basis(x)) { br4 = false; w4 = {x}; break; }
    rep.record("BR4", br4, w4);
    return rep;
}

// ------------------------------------------------- (RS), (LS), (SBR) families

inline AxiomReport check_pf_right_skew(const CrossedSystem& S, const Pairing& p, const Pairing& u) {
    const HopfData &A = S.A, &H = S.H;
    if (u.left_dim != A.dim() || u.right_dim != H.dim())
        fail("ShapeMismatch", "(p,f)-right skew pairing must pair A with H");
    AxiomReport rep;
    size_t na = A.dim(), nh = H.dim();
    auto dA = A.coalgebra.delta_table();
    auto dH = H.coalgebra.delta_table();

    bool rs1 = true;
    std::vector<size_t> w1;
    for (size_t a = 0; a < na && rs1; ++a)
        for (size_t b = 0; b < na && rs1; ++b)
            for (size_t t = 0; t < nh; ++t) {
                Vec ab = A.algebra.mul_basis(a, b);
                Scalar lhs;
                for (size_t r = 0; r < na; ++r)
                    if (!ab[r].is_zero()) lhs += ab[r] * u.at(r, t);
                Scalar rhs;
                for (auto& [t1, t2, c] : dH[t]) rhs += c * u.at(a, t1) * u.at(b, t2);
                if (lhs != rhs) { rs1 = false; w1 = {a, b, t}; break; }
            }
    rep.record("RS1", rs1, w1);

    bool rs2 = true;
    std::vector<size_t> w2;
    for (size_t h = 0; h < nh; ++h)
        if (u.eval(A.algebra.unit, basis_vec(nh, h)) != H.coalgebra.eps_basis(h)) { rs2 = false; w2 = {h}; break; }
    rep.record("RS2", rs2, w2);

    // RS3: u(a1, g2 t2) p(a2, f(g1, t1)) = u(a1, t) u(a2, g)
    bool rs3 = true;
    std::vector<size_t> w3;
    for (size_t a = 0; a < na && rs3; ++a)
        for (size_t g = 0; g < nh && rs3; ++g)
            for (size_t t = 0; t < nh; ++t) {
                Scalar lhs;
                for (auto& [a1, a2, ca] : dA[a])
                    for (auto& [g1, g2, cg] : dH[g])
                        for (auto& [t1, t2, ct] : dH[t]) {
                            Vec gt = H.algebra.mul_basis(g2, t2);
                            Scalar ugt;
                            for (size_t r = 0; r < nh; ++r)
                                if (!gt[r].is_zero()) ugt += gt[r] * u.at(a1, r);
                            if (ugt.is_zero()) continue;
                            Scalar pf = p.eval_lv(a2, S.f_basis(g1, t1));
                            lhs += ca * cg * ct * ugt * pf;
                        }
                Scalar rhs;
                for (auto& [a1, a2, ca] : dA[a]) rhs += ca * u.at(a1, t) * u.at(a2, g);
                if (lhs != rhs) { rs3 = false; w3 = {a, g, t}; break; }
            }
    rep.record("RS3", rs3, w3);

    bool rs4 = true;
    std::vector<size_t> w4;
    for (size_t a = 0; a < na; ++a)
        if (u.eval(basis_vec(na, a), H.algebra.unit) != A.coalgebra.eps_basis(a)) { rs4 = false; w4 = {a}; break; }
    rep.record("RS4", rs4, w4);
    return rep;
}

inline AxiomReport check_pf_left_skew(const CrossedSystem& S, const Pairing& p, const Pairing& v) {
    const HopfData &A = S.A, &H = S.H;
    if (v.left_dim != H.dim() || v.right_dim != A.dim())
        fail("ShapeMismatch", "(p,f)-left skew pairing must pair H with A");
    AxiomReport rep;
    size_t na = A.dim(), nh = H.dim();
    auto dA = A.coalgebra.delta_table();
    auto dH = H.coalgebra.delta_table();

    // LS1: p(f(h1,g1), c1) v(h2 g2, c2) = v(h, c1) v(g, c2)
    bool ls1 = true;
    std::vector<size_t> w1;
    for (size_t h = 0; h < nh && ls1; ++h)
        for (size_t g = 0; g < nh && ls1; ++g)
            for (size_t c = 0; c < na; ++c) {
                Scalar lhs;
                for (auto& [h1, h2, ch] : dH[h])
                    for (auto& [g1, g2, cg] : dH[g])
                        for (auto& [c1, c2, cc] : dA[c]) {
                            Scalar pf = p.eval_vr(S.f_basis(h1, g1), c1);
                            if (pf.is_zero()) continue;
                            Vec hg = H.algebra.mul_basis(h2, g2);
                            Scalar vv;
                            for (size_t r = 0; r < nh; ++r)
                                if (!hg[r].is_zero()) vv += hg[r] * v.at(r, c2);
                            lhs += ch * cg * cc * pf * vv;
                        }
                Scalar rhs;
                for (auto& [c1, c2, cc] : dA[c]) rhs += cc * v.at(h, c1) * v.at(g, c2);
                if (lhs != rhs) { ls1 = false; w1 = {h, g, c}; break; }
            }
    rep.record("LS1", ls1, w1);

    bool ls2 = true;
    std::vector<size_t> w2;
    for (size_t a = 0; a < na; ++a)
        if (v.eval(H.algebra.unit, basis_vec(na, a)) != A.coalgebra.eps_basis(a)) { ls2 = false; w2 = {a}; break; }
    rep.record("LS2", ls2, w2);

    // LS3: v(h, bc) = v(h1, c) v(h2, b)
    bool ls3 = true;
    std::vector<size_t> w3;
    for (size_t h = 0; h < nh && ls3; ++h)
        for (size_t b = 0; b < na && ls3; ++b)
            for (size_t c = 0; c < na; ++c) {
                Vec bc = A.algebra.mul_basis(b, c);
                Scalar lhs;
                for (size_t r = 0; r < na; ++r)
                    if (!bc[r].is_zero()) lhs += bc[r] * v.at(h, r);
                Scalar rhs;
                for (auto& [h1, h2, ch] : dH[h]) rhs += ch * v.at(h1, c) * v.at(h2, b);
                if (lhs != rhs) { ls3 = false; w3 = {h, b, c}; break; }
            }
    rep.record("LS3", ls3, w3);

    bool ls4 = true;
    std::vector<size_t> w4;
    for (size_t h = 0; h < nh; ++h)
        if (v.eval(basis_vec(nh, h), A.algebra.unit) != H.coalgebra.eps_basis(h)) { ls4 = false; w4 = {h}; break; }
    rep.record("LS4", ls4, w4);
    return rep;
}

inline AxiomReport check_uv_skew_braiding(const CrossedSystem& S, const Pairing& u,
                                          const Pairing& v, const Pairing& tau) {
    const HopfData& H = S.H;
    if (tau.left_dim != H.dim() || tau.right_dim != H.dim())
        fail("ShapeMismatch", "(u,v)-skew braiding must be square on H");
    AxiomReport rep;
    size_t nh = H.dim();
    auto dH = H.coalgebra.delta_table();

    // SBR1: u(f(h1,g1), t1) tau(h2 g2, t2) = tau(h, t1) tau(g, t2)
    bool s1 = true;
    std::vector<size_t> w1;
    for (size_t h = 0; h < nh && s1; ++h)
        for (size_t g = 0; g < nh && s1; ++g)
            for (size_t t = 0; t < nh; ++t) {
                Scalar lhs;
                for (auto& [h1, h2, ch] : dH[h])
                    for (auto& [g1, g2, cg] : dH[g])
                        for (auto& [t1, t2, ct] : dH[t]) {
                            Scalar uf = u.eval_vr(S.f_basis(h1, g1), t1);
                            if (uf.is_zero()) continue;
                            Vec hg = H.algebra.mul_basis(h2, g2);
                            Scalar tv;
                            for (size_t r = 0; r < nh; ++r)
                                if (!hg[r].is_zero()) tv += hg[r] * tau.at(r, t2);
                            lhs += ch * cg * ct * uf * tv;
                        }
                Scalar rhs;
                for (auto& [t1, t2, ct] : dH[t]) rhs += ct * tau.at(h, t1) * tau.at(g, t2);
                if (lhs != rhs) { s1 = false; w1 = {h, g, t}; break; }
            }
    rep.record("SBR1", s1, w1);

    bool s2 = true;
    std::vector<size_t> w2;
    for (size_t h = 0; h < nh; ++h)
        if (tau.eval(H.algebra.unit, basis_vec(nh, h)) != H.coalgebra.eps_basis(h)) { s2 = false; w2 = {h}; break; }
    rep.record("SBR2", s2, w2);

    // SBR3: tau(h1, g2 t2) v(h2, f(g1, t1)) = tau(h1, t) tau(h2, g)
    bool s3 = true;
    std::vector<size_t> w3;
    for (size_t h = 0; h < nh && s3; ++h)
        for (size_t g = 0; g < nh && s3; ++g)
            for (size_t t = 0; t < nh; ++t) {
                Scalar lhs;
                for (auto& [h1, h2, ch] : dH[h])
                    for (auto& [g1, g2, cg] : dH[g])
                        for (auto& [t1, t2, ct] : dH[t]) {
                            Vec gt = H.algebra.mul_basis(g2, t2);
                            Scalar tv;
                            for (size_t r = 0; r < nh; ++r)
                                if (!gt[r].is_zero()) tv += gt[r] * tau.at(h1, r);
                            if (tv.is_zero()) continue;
                            Scalar vf = v.eval_lv(h2, S.f_basis(g1, t1));
                            lhs += ch * cg * ct * tv * vf;
                        }
                Scalar rhs;
                for (auto& [h1, h2, ch] : dH[h]) rhs += ch * tau.at(h1, t) * tau.at(h2, g);
                if (lhs != rhs) { s3 = false; w3 = {h, g, t}; break; }
            }
    rep.record("SBR3", s3, w3);

    bool s4 = true;
    std::vector<size_t> w4;
    for (size_t h = 0; h < nh; ++h)
        if (tau.eval(basis_vec(nh, h), H.algebra.unit) != H.coalgebra.eps_basis(h)) { s4 = false; w4 = {h}; break; }
    rep.record("SBR4", s4, w4);

    // SBR5: tau(h1, g1) h2 g2 = g1 h1 tau(h2, g2), an identity in H
    bool s5 = true;
    std::vector<size_t> w5;
    for (size_t h = 0; h < nh && s5; ++h)
        for (size_t g = 0; g < nh; ++g) {
            Vec lhs(nh), rhs(nh);
            for (auto& [h1, h2, ch] : dH[h])
                for (auto& [g1, g2, cg] : dH[g]) {
                    Scalar c = ch * cg;
                    Vec l = H.algebra.mul_basis(h2, g2);
                    Vec r = H.algebra.mul_basis(g1, h1);
                    Scalar tl = tau.at(h1, g1), tr = tau.at(h2, g2);
                    for (size_t x = 0; x < nh; ++x) {
                        if (!l[x].is_zero()) lhs[x] += c * tl * l[x];
                        if (!r[x].is_zero()) rhs[x] += c * tr * r[x];
                    }
                }
            if (!vec_eq(lhs, rhs)) { s5 = false; w5 = {h, g}; break; }
        }
    rep.record("SBR5", s5, w5);
    return rep;
}

// --------------------------------------------------- the seven compatibilities

inline AxiomReport check_compatibilities(const CrossedSystem& S, const BraidingQuadruple& Q) {
    if (!S.certified) fail("SystemNotCertified", "check_compatibilities requires a certified system");
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim();
    auto dA = A.coalgebra.delta_table();
    auto dH = H.coalgebra.delta_table();
    AxiomReport rep;

    // (4.1): v(h1, b1)(h2 |> b2) (x) h3 = b1 (x) h1 v(h2, b2), in A (x) H
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h) {
            auto hl = sweedler_legs(H.coalgebra, h, 3);
            for (size_t b = 0; b < na; ++b) {
                Vec lhs(na * nh), rhs(na * nh);
                for (auto& [b1, b2, cb] : dA[b]) {
                    for (auto& [ht, ch] : hl) {
                        Scalar c = cb * ch * Q.v.at(ht[0], b1);
                        if (!c.is_zero()) {
                            Vec acted = S.act_basis(ht[1], b2);
                            for (size_t r = 0; r < na; ++r)
                                if (!acted[r].is_zero()) lhs[r * nh + ht[2]] += c * acted[r];
                        }
                    }
                    for (auto& [h1, h2, ch] : dH[h]) {
                        Scalar c = cb * ch * Q.v.at(h2, b2);
                        if (!c.is_zero()) rhs[b1 * nh + h1] += c;
                    }
                }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {h, b}; break; }
            }
        }
        rep.record("4.1", ok, w);
    }
    // (4.2): (g1 |> a1) (x) g2 u(a2, g3) = u(a1, g1) a2 (x) g2, in A (x) H
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t g = 0; g < nh && ok; ++g) {
            auto gl = sweedler_legs(H.coalgebra, g, 3);
            for (size_t a = 0; a < na; ++a) {
                Vec lhs(na * nh), rhs(na * nh);
                for (auto& [a1, a2, ca] : dA[a]) {
                    for (auto& [gt, cg] : gl) {
                        Scalar c = ca * cg * Q.u.at(a2, gt[2]);
                        if (!c.is_zero()) {
                            Vec acted = S.act_basis(gt[0], a1);
                            for (size_t r = 0; r < na; ++r)
                                if (!acted[r].is_zero()) lhs[r * nh + gt[1]] += c * acted[r];
                        }
                    }
                    for (auto& [g1, g2, cg] : dH[g]) {
                        Scalar c = ca * cg * Q.u.at(a1, g1);
                        if (!c.is_zero()) rhs[a2 * nh + g2] += c;
                    }
                }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {g, a}; break; }
            }
        }
        rep.record("4.2", ok, w);
    }
    // (4.3): tau(h1, g1) f(h2, g2) = f(g1, h1) tau(h2, g2), in A
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h)
            for (size_t g = 0; g < nh; ++g) {
                Vec lhs(na), rhs(na);
                for (auto& [h1, h2, ch] : dH[h])
                    for (auto& [g1, g2, cg] : dH[g]) {
                        Scalar c = ch * cg;
                        Vec fl = S.f_basis(h2, g2);
                        Vec fr = S.f_basis(g1, h1);
                        Scalar tl = Q.tau.at(h1, g1), tr = Q.tau.at(h2, g2);
                        for (size_t r = 0; r < na; ++r) {
                            if (!fl[r].is_zero()) lhs[r] += c * tl * fl[r];
                            if (!fr[r].is_zero()) rhs[r] += c * tr * fr[r];
                        }
                    }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {h, g}; break; }
            }
        rep.record("4.3", ok, w);
    }
    // (4.4): u(a1, g2) p(a2, g1 |> c) = p(a1, c) u(a2, g), scalars over (a, g, c)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t a = 0; a < na && ok; ++a)
            for (size_t g = 0; g < nh && ok; ++g)
                for (size_t c = 0; c < na; ++c) {
                    Scalar lhs, rhs;
                    for (auto& [a1, a2, ca] : dA[a]) {
                        for (auto& [g1, g2, cg] : dH[g])
                            lhs += ca * cg * Q.u.at(a1, g2) * Q.p.eval_lv(a2, S.act_basis(g1, c));
                        rhs += ca * Q.p.at(a1, c) * Q.u.at(a2, g);
                    }
                    if (lhs != rhs) { ok = false; w = {a, g, c}; break; }
                }
        rep.record("4.4", ok, w);
    }
    // (4.5): tau(h1, g2) v(h2, g1 |> c) = v(h1, c) tau(h2, g)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h)
            for (size_t g = 0; g < nh && ok; ++g)
                for (size_t c = 0; c < na; ++c) {
                    Scalar lhs, rhs;
                    for (auto& [h1, h2, ch] : dH[h]) {
                        for (auto& [g1, g2, cg] : dH[g])
                            lhs += ch * cg * Q.tau.at(h1, g2) * Q.v.eval_lv(h2, S.act_basis(g1, c));
                        rhs += ch * Q.v.at(h1, c) * Q.tau.at(h2, g);
                    }
                    if (lhs != rhs) { ok = false; w = {h, g, c}; break; }
                }
        rep.record("4.5", ok, w);
    }
    // (4.6): p(h1 |> b, c1) v(h2, c2) = v(h, c1) p(b, c2)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h)
            for (size_t b = 0; b < na && ok; ++b)
                for (size_t c = 0; c < na; ++c) {
                    Scalar lhs, rhs;
                    for (auto& [c1, c2, cc] : dA[c]) {
                        for (auto& [h1, h2, ch] : dH[h])
                            lhs += cc * ch * Q.p.eval_vr(S.act_basis(h1, b), c1) * Q.v.at(h2, c2);
                        rhs += cc * Q.v.at(h, c1) * Q.p.at(b, c2);
                    }
                    if (lhs != rhs) { ok = false; w = {h, b, c}; break; }
                }
        rep.record("4.6", ok, w);
    }
    // (4.7): u(h1 |> b, t1) tau(h2, t2) = tau(h, t1) u(b, t2)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h)
            for (size_t b = 0; b < na && ok; ++b)
                for (size_t t = 0; t < nh; ++t) {
                    Scalar lhs, rhs;
                    for (auto& [t1, t2, ct] : dH[t]) {
                        for (auto& [h1, h2, ch] : dH[h])
                            lhs += ct * ch * Q.u.eval_vr(S.act_basis(h1, b), t1) * Q.tau.at(h2, t2);
                        rhs += ct * Q.tau.at(h, t1) * Q.u.at(b, t2);
                    }
                    if (lhs != rhs) { ok = false; w = {h, b, t}; break; }
                }
        rep.record("4.7", ok, w);
    }
    // derived scalar forms: v(h1, b) h2 = h1 v(h2, b) and g1 u(a, g2) = u(a, g1) g2, in H
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h)
            for (size_t b = 0; b < na; ++b) {
                Vec lhs(nh), rhs(nh);
                for (auto& [h1, h2, ch] : dH[h]) {
                    lhs[h2] += ch * Q.v.at(h1, b);
                    rhs[h1] += ch * Q.v.at(h2, b);
                }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {h, b}; break; }
            }
        rep.record("1.2", ok, w);
    }
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t g = 0; g < nh && ok; ++g)
            for (size_t a = 0; a < na; ++a) {
                Vec lhs(nh), rhs(nh);
                for (auto& [g1, g2, cg] : dH[g]) {
                    lhs[g1] += cg * Q.u.at(a, g2);
                    rhs[g2] += cg * Q.u.at(a, g1);
                }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {g, a}; break; }
            }
        rep.record("2.2", ok, w);
    }
    return rep;
}

inline AxiomReport verify_quadruple(const CrossedSystem& S, const BraidingQuadruple& Q) {
    AxiomReport rep;
    rep.merge(check_braiding(S.A, Q.p), "p.");
    rep.merge(check_pf_right_skew(S, Q.p, Q.u), "u.");
    rep.merge(check_pf_left_skew(S, Q.p, Q.v), "v.");
    rep.merge(check_uv_skew_braiding(S, Q.u, Q.v, Q.tau), "tau.");
    rep.merge(check_compatibilities(S, Q));
    return rep;
}

inline BraidingQuadruple certify_quadruple(const CrossedSystem& S, BraidingQuadruple Q) {
    AxiomReport rep = verify_quadruple(S, Q);
    if (!rep.all_passed()) {
        std::string first;
        for (auto& e : rep.entries)
            if (!e.passed) { first = e.axiom; break; }
        fail("QuadrupleNotCertified", "braiding quadruple fails " + first + "\n" + rep.to_text());
    }
    Q.certified = true;
    return Q;
}

// ------------------------------------------------ sigma: assembly and split

// sigma(a # h, b # g) = u(a1, g1) p(a2, b1) tau(h1, g2) v(h2, b2)
inline Pairing assemble_sigma(const CrossedSystem& S, const BraidingQuadruple& Q) {
    if (!Q.certified) fail("QuadrupleNotCertified", "assemble_sigma requires a certified quadruple");
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim(), n = na * nh;
    auto dA = A.coalgebra.delta_table();
    auto dH = H.coalgebra.delta_table();
    Pairing sigma(n, n);
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h)
            for (size_t b = 0; b < na; ++b)
                for (size_t g = 0; g < nh; ++g) {
                    Scalar s;
                    for (auto& [a1, a2, ca] : dA[a])
                        for (auto& [b1, b2, cb] : dA[b])
                            for (auto& [h1, h2, ch] : dH[h])
                                for (auto& [g1, g2, cg] : dH[g])
                                    s += ca * cb * ch * cg * Q.u.at(a1, g1) * Q.p.at(a2, b1) *
                                         Q.tau.at(h1, g2) * Q.v.at(h2, b2);
                    sigma.at(a * nh + h, b * nh + g) = s;
                }
    return sigma;
}

// Restrict a braiding on A # H to the four component maps and re-certify them.
inline BraidingQuadruple decompose_sigma(const CrossedSystem& S, const HopfData& product,
                                         const Pairing& sigma) {
    AxiomReport br = check_braiding(product, sigma);
    if (!br.all_passed()) fail("NotABraiding", "sigma is not a braiding on the product:\n" + br.to_text());
    size_t na = S.A.dim(), nh = S.H.dim();
    CanonicalMaps cm = canonical_maps(S);
    BraidingQuadruple Q;
    Q.p = Pairing(na, na);
    Q.tau = Pairing(nh, nh);
    Q.u = Pairing(na, nh);
    Q.v = Pairing(nh, na);
    for (size_t a = 0; a < na; ++a)
        for (size_t b = 0; b < na; ++b) Q.p.at(a, b) = sigma.eval(cm.i_A.column(a), cm.i_A.column(b));
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g) Q.tau.at(h, g) = sigma.eval(cm.i_H.column(h), cm.i_H.column(g));
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) Q.u.at(a, h) = sigma.eval(cm.i_A.column(a), cm.i_H.column(h));
    for (size_t h = 0; h < nh; ++h)
        for (size_t a = 0; a < na; ++a) Q.v.at(h, a) = sigma.eval(cm.i_H.column(h), cm.i_A.column(a));
    return certify_quadruple(S, Q);
}

// --------------------------------------------------- cyclic-group material

inline Pairing cyclic_bicharacter_braiding(const HopfData& kCn, const Scalar& tau_scalar) {
    size_t n = kCn.dim();
    if (tau_scalar.pow((long)n) != Scalar(1L))
        fail("NotRootOfUnity", "tau must satisfy tau^n = 1");
    Pairing p(n, n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) p.at(a, b) = tau_scalar.pow((long)(a * b));
    return p;
}

// u(t^a, g^b) = w_b^a with w_b = upsilon^b tau^{-(alpha(1,1)+...+alpha(1,b-1))}.
// alpha must be a normalized symmetric 2-cocycle on Z_m valued in Z_n, and
// upsilon^n = 1, upsilon^m = tau^{alpha(1,1)+...+alpha(1,m-1)}.
inline Pairing cyclic_pf_right_skew(size_t n, size_t m, const std::vector<std::vector<unsigned>>& alpha,
                                    const Scalar& tau_scalar, const Scalar& upsilon) {
    if (alpha.size() != m) fail("ShapeMismatch", "alpha must be m x m");
    for (auto& row : alpha)
        if (row.size() != m) fail("ShapeMismatch", "alpha must be m x m");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (alpha[i][j] != alpha[j][i])
                fail("AlphaNotSymmetric", "alpha(" + std::to_string(i) + "," + std::to_string(j) +
                                              ") != alpha(" + std::to_string(j) + "," +
                                              std::to_string(i) + ")");
    for (size_t i = 0; i < m; ++i)
        if (alpha[0][i] != 0 || alpha[i][0] != 0)
            fail("AlphaNotCocycle", "alpha is not normalized");
    for (size_t b = 0; b < m; ++b)
        for (size_t c = 0; c < m; ++c)
            for (size_t e = 0; e < m; ++e)
                if ((alpha[c][e] + alpha[b][(c + e) % m]) % n !=
                    (alpha[b][c] + alpha[(b + c) % m][e]) % n)
                    fail("AlphaNotCocycle", "alpha violates the 2-cocycle identity at (" +
                                                std::to_string(b) + "," + std::to_string(c) + "," +
                                                std::to_string(e) + ")");
    if (upsilon.pow((long)n) != Scalar(1L))
        fail("UpsilonConditionFailed", "upsilon^n != 1");
    unsigned total = 0;
    for (size_t j = 1; j < m; ++j) total += alpha[1 % m][j];
    if (upsilon.pow((long)m) != tau_scalar.pow((long)total))
        fail("UpsilonConditionFailed", "upsilon^m != tau^(sum of alpha(1,j))");

    Pairing u(n, m);
    for (size_t b = 0; b < m; ++b) {
        unsigned partial = 0;
        for (size_t j = 1; j < b; ++j) partial += alpha[1 % m][j];
        Scalar wb = upsilon.pow((long)b) * tau_scalar.pow(-(long)partial);
        for (size_t a = 0; a < n; ++a) u.at(a, b) = wb.pow((long)a);
    }
    return u;
}

// ------------------------------------------------------------------ search

struct SearchParam {
    std::string name;
    std::vector<Scalar> candidates;
};

// Entry of a quadruple template: either a fixed scalar or +-(parameter^power).
struct EntryExpr {
    bool is_param = false;
    Scalar constant;
    std::string param;
    long power = 1;
    bool negate = false;

    static EntryExpr fixed(Scalar s) {
        EntryExpr e;
        e.constant = std::move(s);
        return e;
    }
    // text forms: a scalar literal, or [-]$name[^k]
    static EntryExpr parse(const std::string& text, unsigned field_order) {
        std::string t = text;
        EntryExpr e;
        size_t pos = 0;
        if (!t.empty() && (t[0] == '-')) { e.negate = true; pos = 1; }
        if (pos < t.size() && t[pos] == '$') {
            e.is_param = true;
            ++pos;
            size_t start = pos;
            while (pos < t.size() && t[pos] != '^') ++pos;
            e.param = t.substr(start, pos - start);
            if (pos < t.size() && t[pos] == '^') e.power = std::stol(t.substr(pos + 1));
            if (e.param.empty()) fail("ParseError", "empty parameter name in '" + text + "'");
            return e;
        }
        e.negate = false;
        e.constant = Scalar::parse(text, field_order);
        return e;
    }

    Scalar eval(const std::map<std::string, Scalar>& env) const {
        if (!is_param) return constant;
        auto it = env.find(param);
        if (it == env.end()) fail("ParseError", "unknown search parameter '" + param + "'");
        Scalar v = it->second.pow(power);
        return negate ? -v : v;
    }
};

struct QuadrupleTemplate {
    std::vector<std::vector<EntryExpr>> p, tau, u, v;
};

inline QuadrupleTemplate fixed_template(const BraidingQuadruple& Q) {
    QuadrupleTemplate T;
    auto conv = [](const Pairing& P) {
        std::vector<std::vector<EntryExpr>> rows(P.left_dim, std::vector<EntryExpr>(P.right_dim));
        for (size_t i = 0; i < P.left_dim; ++i)
            for (size_t j = 0; j < P.right_dim; ++j) rows[i][j] = EntryExpr::fixed(P.at(i, j));
        return rows;
    };
    T.p = conv(Q.p);
    T.tau = conv(Q.tau);
    T.u = conv(Q.u);
    T.v = conv(Q.v);
    return T;
}

// Exhaustive enumeration over the declared candidate sets; returns every
// assignment whose quadruple certifies, in lexicographic candidate order.
inline std::vector<std::pair<std::map<std::string, Scalar>, BraidingQuadruple>>
search_braidings(const CrossedSystem& S, const std::vector<SearchParam>& params,
                 const QuadrupleTemplate& T, size_t max_nodes = 1 << 20) {
    size_t space = 1;
    for (const auto& p : params) {
        if (p.candidates.empty()) return {};
        if (space > max_nodes / p.candidates.size())
            fail("SearchSpaceTooLarge", "candidate space exceeds the configured cap");
        space *= p.candidates.size();
    }
    size_t na = S.A.dim(), nh = S.H.dim();
    auto instantiate = [&](const std::map<std::string, Scalar>& env) {
        BraidingQuadruple Q;
        Q.p = Pairing(na, na);
        Q.tau = Pairing(nh, nh);
        Q.u = Pairing(na, nh);
        Q.v = Pairing(nh, na);
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < na; ++j) Q.p.at(i, j) = T.p[i][j].eval(env);
        for (size_t i = 0; i < nh; ++i)
            for (size_t j = 0; j < nh; ++j) Q.tau.at(i, j) = T.tau[i][j].eval(env);
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nh; ++j) Q.u.at(i, j) = T.u[i][j].eval(env);
        for (size_t i = 0; i < nh; ++i)
            for (size_t j = 0; j < na; ++j) Q.v.at(i, j) = T.v[i][j].eval(env);
        return Q;
    };
    std::vector<std::pair<std::map<std::string, Scalar>, BraidingQuadruple>> found;
    std::vector<size_t> idx(params.size(), 0);
    while (true) {
        std::map<std::string, Scalar> env;
        for (size_t i = 0; i < params.size(); ++i) env[params[i].name] = params[i].candidates[idx[i]];
        BraidingQuadruple Q = instantiate(env);
        if (verify_quadruple(S, Q).all_passed()) {
            Q.certified = true;
            found.emplace_back(env, Q);
        }
        size_t k = params.size();
        while (k > 0) {
            --k;
            if (++idx[k] < params[k].candidates.size()) break;
            idx[k] = 0;
            if (k == 0) return found;
        }
        if (params.empty()) return found;
    }
}

// ------------------------------------------------------- corollary checks

// Specializations: with f trivial the RS/LS families collapse to plain skew
// pairings and the (u,v)-skew braiding to a braiding on H; with the action
// also trivial the compatibilities take their tensor-product form; with a
// commutative A, trivial action and p = eps (x) eps, sigma collapses to tau.
inline AxiomReport corollary_checks(const CrossedSystem& S, const BraidingQuadruple& Q) {
    bool f_trivial = S.cocycle == trivial_cocycle(S.A, S.H);
    bool act_trivial = S.act == trivial_action(S.A, S.H);
    if (!f_trivial && !act_trivial)
        fail("ShapeNotSpecial", "corollary checks need a trivial cocycle and/or trivial action");
    AxiomReport rep;
    if (f_trivial) {
        bool u_eq = check_pf_right_skew(S, Q.p, Q.u).all_passed() ==
                    check_skew_pairing(S.A, S.H, Q.u).all_passed();
        rep.record("u_rs_equals_skew_pairing", u_eq);
        bool v_eq = check_pf_left_skew(S, Q.p, Q.v).all_passed() ==
                    check_skew_pairing(S.H, S.A, Q.v).all_passed();
        rep.record("v_ls_equals_skew_pairing", v_eq);
        bool tau_eq = check_uv_skew_braiding(S, Q.u, Q.v, Q.tau).all_passed() ==
                      check_braiding(S.H, Q.tau).all_passed();
        rep.record("tau_sbr_equals_braiding", tau_eq);
    }
    if (f_trivial && act_trivial) {
        AxiomReport compat = check_compatibilities(S, Q);
        rep.merge(compat, "tensor.");
        if (is_cocommutative(S.A) && is_cocommutative(S.H))
            rep.record("cocommutative_compatibilities_automatic", compat.all_passed());
    }
    if (act_trivial && is_commutative(S.A) && Q.p == counit_pairing(S.A, S.A)) {
        BraidingQuadruple QQ = Q;
        QQ.certified = true;
        Pairing sigma = assemble_sigma(S, QQ);
        size_t na = S.A.dim(), nh = S.H.dim();
        bool ok = true;
        std::vector<size_t> w;
        for (size_t a = 0; a < na && ok; ++a)
            for (size_t h = 0; h < nh && ok; ++h)
                for (size_t b = 0; b < na && ok; ++b)
                    for (size_t g = 0; g < nh; ++g) {
                        Scalar expect = S.A.coalgebra.eps_basis(a) * S.A.coalgebra.eps_basis(b) *
                                        Q.tau.at(h, g);
                        if (sigma.at(a * nh + h, b * nh + g) != expect) {
                            ok = false; w = {a, h, b, g}; break;
                        }
                    }
        rep.record("sigma_collapses_to_tau", ok, w);
    }
    return rep;
}

} // namespace hopfcross
