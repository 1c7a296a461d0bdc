#pragma once

// Bundled example data: the crossed system of Sweedler's 4-dimensional Hopf
// algebra with k[C3], and its braiding quadruples.

#include "hopfcross/braiding.hpp"
#include "hopfcross/structure.hpp"

namespace hopfcross {

// f(a,a) = f(a^2,a^2) = g, otherwise grouplike 1; a^i |> x = -x, a^i |> gx = -gx
// for i != 0, grouplikes fixed.
inline CrossedSystem h4_c3_system() {
    HopfData A = sweedler_h4();
    HopfData H = cyclic_group_algebra(3);
    size_t na = 4, nh = 3;
    LinMap act({nh, na}, {na});
    for (size_t h = 0; h < nh; ++h) {
        Scalar chi = (h == 0) ? Scalar(1L) : Scalar(-1L);
        act.at(0, h * na + 0) = Scalar(1L);
        act.at(1, h * na + 1) = Scalar(1L);
        act.at(2, h * na + 2) = chi;
        act.at(3, h * na + 3) = chi;
    }
    LinMap coc({nh, nh}, {na});
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g) coc.at((h == g && h != 0) ? 1 : 0, h * nh + g) = Scalar(1L);
    return certify_crossed_system({A, H, act, coc});
}

// The braiding quadruple family on H4 # k[C3], parameterized by alpha (free)
// and gamma with gamma^3 = 1:
//   p(g,g) = -1, p(x,x) = p(x,gx) = p(gx,gx) = alpha, p(gx,x) = -alpha;
//   u(g,a) = u(g,a^2) = -1;  v(a,g) = v(a^2,g) = -1;
//   tau(a,a) = tau(a^2,a^2) = -gamma, tau(a,a^2) = tau(a^2,a) = -gamma^2.
// The diagonal entries of tau are cube roots of -1; that sign is forced by
// (SBR1) together with u(g,a) = -1 and f(a,a) = g.
inline BraidingQuadruple h4_c3_quadruple(const Scalar& alpha, const Scalar& gamma) {
    if (gamma.pow(3) != Scalar(1L)) fail("NotRootOfUnity", "gamma must satisfy gamma^3 = 1");
    BraidingQuadruple Q;
    Q.p = Pairing(4, 4);
    Q.p.at(0, 0) = Scalar(1L);
    Q.p.at(0, 1) = Scalar(1L);
    Q.p.at(1, 0) = Scalar(1L);
    Q.p.at(1, 1) = Scalar(-1L);
    Q.p.at(2, 2) = alpha;
    Q.p.at(2, 3) = alpha;
    Q.p.at(3, 2) = -alpha;
    Q.p.at(3, 3) = alpha;
    Q.u = Pairing(4, 3);
    for (size_t j = 0; j < 3; ++j) Q.u.at(0, j) = Scalar(1L);
    Q.u.at(1, 0) = Scalar(1L);
    Q.u.at(1, 1) = Scalar(-1L);
    Q.u.at(1, 2) = Scalar(-1L);
    Q.v = Pairing(3, 4);
    for (size_t i = 0; i < 3; ++i) Q.v.at(i, 0) = Scalar(1L);
    Q.v.at(0, 1) = Scalar(1L);
    Q.v.at(1, 1) = Scalar(-1L);
    Q.v.at(2, 1) = Scalar(-1L);
    Q.tau = Pairing(3, 3);
    for (size_t j = 0; j < 3; ++j) Q.tau.at(0, j) = Scalar(1L);
    Q.tau.at(1, 0) = Scalar(1L);
    Q.tau.at(2, 0) = Scalar(1L);
    Scalar g2 = gamma * gamma;
    Q.tau.at(1, 1) = -gamma;
    Q.tau.at(1, 2) = -g2;
    Q.tau.at(2, 1) = -g2;
    Q.tau.at(2, 2) = -gamma;
    return Q;
}

// C2/C2 group crossed system with f(s,s) = t; its product is k[C4].
inline GroupCrossedData c2_c2_cocycle_data() {
    GroupCrossedData D;
    D.cayley_H = {{0, 1}, {1, 0}};
    D.cayley_G = {{0, 1}, {1, 0}};
    D.labels_H = {"1", "t"};
    D.labels_G = {"1", "s"};
    D.f = {{0, 0}, {0, 1}}; // f(s,s) = t
    D.act = {{0, 1}, {0, 1}}; // trivial
    return D;
}

// Central extension data for the quaternion group: H = C2 = <t>, G = C2xC2,
// nonsymmetric cocycle; the crossed product group is Q8.
inline GroupCrossedData q8_cocycle_data() {
    GroupCrossedData D;
    D.cayley_H = {{0, 1}, {1, 0}};
    D.labels_H = {"1", "t"};
    D.cayley_G = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    D.labels_G = {"1", "i", "j", "k"};
    // beta(i,i)=beta(j,j)=beta(k,k)=1, beta(i,j)=beta(j,k)=beta(k,i)=0,
    // beta(j,i)=beta(k,j)=beta(i,k)=1: the Q8 extension cocycle.
    D.f = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    D.act = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    return D;
}

} // namespace hopfcross
