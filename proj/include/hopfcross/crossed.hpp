#pragma once

// Crossed systems (A, H, act, f) of Hopf algebras and their crossed products
// A #_f H: validation of every defining identity, the product construction
// with its antipode, canonical maps, factorization through a normal Hopf
// subalgebra (both directions), lazy-cocycle equivalences, coboundaries and
// the two universal properties.

#include <optional>

#include "hopfcross/hopf.hpp"

namespace hopfcross {

// All Sweedler expansions of one basis element: list of (leg multi-index, coefficient).
inline std::vector<std::pair<std::vector<size_t>, Scalar>> sweedler_legs(const CoalgebraData& C,
                                                                         size_t i, size_t legs) {
    std::vector<std::pair<std::vector<size_t>, Scalar>> cur{{{i}, Scalar(1L)}};
    for (size_t step = 1; step < legs; ++step) {
        std::vector<std::pair<std::vector<size_t>, Scalar>> next;
        for (auto& [tup, c] : cur) {
            size_t last = tup.back();
            for (auto& [j, k, cc] : C.delta_basis(last)) {
                auto t = tup;
                t.back() = j;
                t.push_back(k);
                next.emplace_back(std::move(t), c * cc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct CrossedSystem {
    HopfData A, H;
    LinMap act;     // [nH, nA] -> [nA]
    LinMap cocycle; // [nH, nH] -> [nA]
    bool certified = false;

    Vec act_basis(size_t h, size_t a) const { return act.column(h * A.dim() + a); }
    Vec f_basis(size_t h, size_t g) const { return cocycle.column(h * H.dim() + g); }

    Vec act_vec(const Vec& hv, const Vec& av) const {
        Vec out(A.dim());
        for (size_t h = 0; h < H.dim(); ++h) {
            if (hv[h].is_zero()) continue;
            for (size_t a = 0; a < A.dim(); ++a) {
                if (av[a].is_zero()) continue;
                Vec w = act_basis(h, a);
                Scalar c = hv[h] * av[a];
                for (size_t r = 0; r < A.dim(); ++r)
                    if (!w[r].is_zero()) out[r] += c * w[r];
            }
        }
        return out;
    }

    Vec f_vec(const Vec& h1, const Vec& h2) const {
        Vec out(A.dim());
        for (size_t h = 0; h < H.dim(); ++h) {
            if (h1[h].is_zero()) continue;
            for (size_t g = 0; g < H.dim(); ++g) {
                if (h2[g].is_zero()) continue;
                Vec w = f_basis(h, g);
                Scalar c = h1[h] * h2[g];
                for (size_t r = 0; r < A.dim(); ++r)
                    if (!w[r].is_zero()) out[r] += c * w[r];
            }
        }
        return out;
    }
};

inline LinMap trivial_action(const HopfData& A, const HopfData& H) {
    size_t na = A.dim(), nh = H.dim();
    LinMap act({nh, na}, {na});
    for (size_t h = 0; h < nh; ++h) {
        Scalar e = H.coalgebra.eps_basis(h);
        for (size_t a = 0; a < na; ++a) act.at(a, h * na + a) = e;
    }
    return act;
}

inline LinMap trivial_cocycle(const HopfData& A, const HopfData& H) {
    size_t na = A.dim(), nh = H.dim();
    LinMap f({nh, nh}, {na});
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g) {
            Scalar e = H.coalgebra.eps_basis(h) * H.coalgebra.eps_basis(g);
            for (size_t r = 0; r < na; ++r) f.at(r, h * nh + g) = e * A.algebra.unit[r];
        }
    return f;
}

// ------------------------------------------------------------- verification

inline AxiomReport verify_crossed_system(const CrossedSystem& S) {
    AxiomReport rep;
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim();
    rep.record("A_hopf_axioms", verify_hopf(A).all_passed());
    rep.record("H_hopf_axioms", verify_hopf(H).all_passed());

    auto dH = H.coalgebra.delta_table();
    auto dA = A.coalgebra.delta_table();

    // act is a coalgebra map
    {
        bool com = true, eps = true;
        std::vector<size_t> wcom, weps;
        for (size_t h = 0; h < nh && (com || eps); ++h)
            for (size_t a = 0; a < na; ++a) {
                Vec img = S.act_basis(h, a);
                if (com) {
                    Vec lhs(na * na), rhs(na * na);
                    for (size_t r = 0; r < na; ++r)
                        if (!img[r].is_zero())
                            for (auto& [p, q, c] : dA[r]) lhs[p * na + q] += img[r] * c;
                    for (auto& [h1, h2, c1] : dH[h])
                        for (auto& [a1, a2, c2] : dA[a]) {
                            Vec u = S.act_basis(h1, a1), v = S.act_basis(h2, a2);
                            Scalar c = c1 * c2;
                            for (size_t r = 0; r < na; ++r) {
                                if (u[r].is_zero()) continue;
                                for (size_t s = 0; s < na; ++s)
                                    if (!v[s].is_zero()) rhs[r * na + s] += c * u[r] * v[s];
                            }
                        }
                    if (!vec_eq(lhs, rhs)) { com = false; wcom = {h, a}; }
                }
                if (eps && A.coalgebra.eps(img) != H.coalgebra.eps_basis(h) * A.coalgebra.eps_basis(a)) {
                    eps = false; weps = {h, a};
                }
            }
        rep.record("action_comultiplicative", com, wcom);
        rep.record("action_counit", eps, weps);
    }
    // f is a coalgebra map
    {
        bool com = true, eps = true;
        std::vector<size_t> wcom, weps;
        for (size_t h = 0; h < nh && (com || eps); ++h)
            for (size_t g = 0; g < nh; ++g) {
                Vec img = S.f_basis(h, g);
                if (com) {
                    Vec lhs(na * na), rhs(na * na);
                    for (size_t r = 0; r < na; ++r)
                        if (!img[r].is_zero())
                            for (auto& [p, q, c] : dA[r]) lhs[p * na + q] += img[r] * c;
                    for (auto& [h1, h2, c1] : dH[h])
                        for (auto& [g1, g2, c2] : dH[g]) {
                            Vec u = S.f_basis(h1, g1), v = S.f_basis(h2, g2);
                            Scalar c = c1 * c2;
                            for (size_t r = 0; r < na; ++r) {
                                if (u[r].is_zero()) continue;
                                for (size_t s = 0; s < na; ++s)
                                    if (!v[s].is_zero()) rhs[r * na + s] += c * u[r] * v[s];
                            }
                        }
                    if (!vec_eq(lhs, rhs)) { com = false; wcom = {h, g}; }
                }
                if (eps && A.coalgebra.eps(img) != H.coalgebra.eps_basis(h) * H.coalgebra.eps_basis(g)) {
                    eps = false; weps = {h, g};
                }
            }
        rep.record("cocycle_comultiplicative", com, wcom);
        rep.record("cocycle_counit", eps, weps);
    }
    // h |> 1 = eps(h) 1
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh; ++h) {
            Vec lhs = S.act_vec(basis_vec(nh, h), A.algebra.unit);
            Vec rhs(na);
            for (size_t r = 0; r < na; ++r) rhs[r] = H.coalgebra.eps_basis(h) * A.algebra.unit[r];
            if (!vec_eq(lhs, rhs)) { ok = false; w = {h}; break; }
        }
        rep.record("action_normalized", ok, w);
    }
    // 1 |> a = a
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t a = 0; a < na; ++a)
            if (!vec_eq(S.act_vec(H.algebra.unit, basis_vec(na, a)), basis_vec(na, a))) {
                ok = false; w = {a}; break;
            }
        rep.record("action_unit", ok, w);
    }
    // h |> (ab) = (h1 |> a)(h2 |> b)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh && ok; ++h)
            for (size_t a = 0; a < na && ok; ++a)
                for (size_t b = 0; b < na; ++b) {
                    Vec lhs = S.act_vec(basis_vec(nh, h), A.algebra.mul_basis(a, b));
                    Vec rhs(na);
                    for (auto& [h1, h2, c] : dH[h]) {
                        Vec p = A.algebra.mul(S.act_basis(h1, a), S.act_basis(h2, b));
                        for (size_t r = 0; r < na; ++r)
                            if (!p[r].is_zero()) rhs[r] += c * p[r];
                    }
                    if (!vec_eq(lhs, rhs)) { ok = false; w = {h, a, b}; break; }
                }
        rep.record("action_multiplicative", ok, w);
    }
    // f(h,1) = f(1,h) = eps(h) 1
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t h = 0; h < nh; ++h) {
            Vec target(na);
            for (size_t r = 0; r < na; ++r) target[r] = H.coalgebra.eps_basis(h) * A.algebra.unit[r];
            if (!vec_eq(S.f_vec(basis_vec(nh, h), H.algebra.unit), target) ||
                !vec_eq(S.f_vec(H.algebra.unit, basis_vec(nh, h)), target)) {
                ok = false; w = {h}; break;
            }
        }
        rep.record("cocycle_normalized", ok, w);
    }
    // twisted module: [g1 |> (h1 |> a)] f(g2, h2) = f(g1, h1) ((g2 h2) |> a)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t g = 0; g < nh && ok; ++g)
            for (size_t h = 0; h < nh && ok; ++h)
                for (size_t a = 0; a < na; ++a) {
                    Vec lhs(na), rhs(na);
                    for (auto& [g1, g2, c1] : dH[g])
                        for (auto& [h1, h2, c2] : dH[h]) {
                            Scalar c = c1 * c2;
                            Vec l = A.algebra.mul(S.act_vec(basis_vec(nh, g1), S.act_basis(h1, a)),
                                                  S.f_basis(g2, h2));
                            Vec r = A.algebra.mul(S.f_basis(g1, h1),
                                                  S.act_vec(H.algebra.mul_basis(g2, h2), basis_vec(na, a)));
                            for (size_t t = 0; t < na; ++t) {
                                lhs[t] += c * l[t];
                                rhs[t] += c * r[t];
                            }
                        }
                    if (!vec_eq(lhs, rhs)) { ok = false; w = {g, h, a}; break; }
                }
        rep.record("twisted_module", ok, w);
    }
    // cocycle condition: (g1 |> f(h1, l1)) f(g2, h2 l2) = f(g1, h1) f(g2 h2, l)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t g = 0; g < nh && ok; ++g)
            for (size_t h = 0; h < nh && ok; ++h)
                for (size_t l = 0; l < nh; ++l) {
                    Vec lhs(na), rhs(na);
                    for (auto& [g1, g2, c1] : dH[g]) {
                        for (auto& [h1, h2, c2] : dH[h])
                            for (auto& [l1, l2, c3] : dH[l]) {
                                Scalar c = c1 * c2 * c3;
                                Vec lv = A.algebra.mul(S.act_vec(basis_vec(nh, g1), S.f_basis(h1, l1)),
                                                       S.f_vec(basis_vec(nh, g2), H.algebra.mul_basis(h2, l2)));
                                for (size_t t = 0; t < na; ++t) lhs[t] += c * lv[t];
                            }
                        for (auto& [h1, h2, c2] : dH[h]) {
                            Scalar c = c1 * c2;
                            Vec rv = A.algebra.mul(S.f_basis(g1, h1),
                                                   S.f_vec(H.algebra.mul_basis(g2, h2), basis_vec(nh, l)));
                            for (size_t t = 0; t < na; ++t) rhs[t] += c * rv[t];
                        }
                    }
                    if (!vec_eq(lhs, rhs)) { ok = false; w = {g, h, l}; break; }
                }
        rep.record("cocycle_condition", ok, w);
    }
    // co-condition for the action: g1 (x) (g2 |> a) = g2 (x) (g1 |> a)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t g = 0; g < nh && ok; ++g)
            for (size_t a = 0; a < na; ++a) {
                Vec lhs(nh * na), rhs(nh * na);
                for (auto& [g1, g2, c] : dH[g]) {
                    Vec l = S.act_basis(g2, a), r = S.act_basis(g1, a);
                    for (size_t t = 0; t < na; ++t) {
                        if (!l[t].is_zero()) lhs[g1 * na + t] += c * l[t];
                        if (!r[t].is_zero()) rhs[g2 * na + t] += c * r[t];
                    }
                }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {g, a}; break; }
            }
        rep.record("co_condition_action", ok, w);
    }
    // co-condition for the cocycle: g1 h1 (x) f(g2, h2) = g2 h2 (x) f(g1, h1)
    {
        bool ok = true;
        std::vector<size_t> w;
        for (size_t g = 0; g < nh && ok; ++g)
            for (size_t h = 0; h < nh; ++h) {
                Vec lhs(nh * na), rhs(nh * na);
                for (auto& [g1, g2, c1] : dH[g])
                    for (auto& [h1, h2, c2] : dH[h]) {
                        Scalar c = c1 * c2;
                        Vec m12 = H.algebra.mul_basis(g1, h1);
                        Vec f12 = S.f_basis(g2, h2);
                        for (size_t p = 0; p < nh; ++p) {
                            if (m12[p].is_zero()) continue;
                            for (size_t t = 0; t < na; ++t)
                                if (!f12[t].is_zero()) lhs[p * na + t] += c * m12[p] * f12[t];
                        }
                        Vec m21 = H.algebra.mul_basis(g2, h2);
                        Vec f21 = S.f_basis(g1, h1);
                        for (size_t p = 0; p < nh; ++p) {
                            if (m21[p].is_zero()) continue;
                            for (size_t t = 0; t < na; ++t)
                                if (!f21[t].is_zero()) rhs[p * na + t] += c * m21[p] * f21[t];
                        }
                    }
                if (!vec_eq(lhs, rhs)) { ok = false; w = {g, h}; break; }
            }
        rep.record("co_condition_cocycle", ok, w);
    }
    return rep;
}

inline CrossedSystem certify_crossed_system(CrossedSystem S) {
    AxiomReport rep = verify_crossed_system(S);
    if (!rep.all_passed()) {
        std::string first;
        for (auto& e : rep.entries)
            if (!e.passed) { first = e.axiom; break; }
        fail("SystemNotCertified", "crossed system axiom failed: " + first + "\n" + rep.to_text());
    }
    S.certified = true;
    return S;
}

inline CrossedSystem trivial_system(const HopfData& A, const HopfData& H) {
    return certify_crossed_system({A, H, trivial_action(A, H), trivial_cocycle(A, H)});
}

inline CrossedSystem smash_system(const HopfData& A, const HopfData& H, const LinMap& act) {
    return certify_crossed_system({A, H, act, trivial_cocycle(A, H)});
}

// ------------------------------------------------------------- the product

// Basis order of A # H is A-major: index(a, h) = a * dim(H) + h.
inline size_t crossed_index(const CrossedSystem& S, size_t a, size_t h) { return a * S.H.dim() + h; }

inline HopfData build_crossed_product(const CrossedSystem& S) {
    if (!S.certified) fail("SystemNotCertified", "build_crossed_product requires a certified system");
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim(), n = na * nh;
    HopfData P;
    P.name = A.name + " # " + H.name;
    P.basis_labels.resize(n);
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h)
            P.basis_labels[a * nh + h] = A.basis_labels[a] + "#" + H.basis_labels[h];

    P.algebra.dim = n;
    P.algebra.mult = LinMap({n, n}, {n});
    auto legs3 = [&](size_t h) { return sweedler_legs(H.coalgebra, h, 3); };
    auto dH = H.coalgebra.delta_table();
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            auto hl = legs3(h);
            for (size_t c = 0; c < na; ++c)
                for (size_t g = 0; g < nh; ++g) {
                    size_t col = (a * nh + h) * n + (c * nh + g);
                    // a (h1 |> c) f(h2, g1) # h3 g2
                    for (auto& [ht, ch] : hl)
                        for (auto& [g1, g2, cg] : dH[g]) {
                            Scalar coef = ch * cg;
                            Vec av = A.algebra.mul(
                                A.algebra.mul(basis_vec(na, a), S.act_basis(ht[0], c)),
                                S.f_basis(ht[1], g1));
                            Vec hv = H.algebra.mul_basis(ht[2], g2);
                            for (size_t r = 0; r < na; ++r) {
                                if (av[r].is_zero()) continue;
                                for (size_t s = 0; s < nh; ++s)
                                    if (!hv[s].is_zero())
                                        P.algebra.mult.at(r * nh + s, col) += coef * av[r] * hv[s];
                            }
                        }
                }
        }
    P.algebra.unit = Vec(n);
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h)
            P.algebra.unit[a * nh + h] = A.algebra.unit[a] * H.algebra.unit[h];

    // tensor product coalgebra
    P.coalgebra.dim = n;
    P.coalgebra.comult = LinMap({n}, {n, n});
    P.coalgebra.counit = LinMap({n}, {1});
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            size_t i = a * nh + h;
            for (auto& [a1, a2, c1] : A.coalgebra.delta_basis(a))
                for (auto& [h1, h2, c2] : dH[h])
                    P.coalgebra.comult.at((a1 * nh + h1) * n + (a2 * nh + h2), i) = c1 * c2;
            P.coalgebra.counit.at(0, i) = A.coalgebra.eps_basis(a) * H.coalgebra.eps_basis(h);
        }

    // S(a # g) = ( S_A[f(S_H(g2), g3)] # S_H(g1) ) * ( S_A(a) # 1 )
    P.antipode = LinMap({n}, {n});
    for (size_t a = 0; a < na; ++a)
        for (size_t g = 0; g < nh; ++g) {
            Vec total(n);
            for (auto& [gt, cg] : legs3(g)) {
                Vec sh = H.S_basis(gt[0]);
                Vec fa = S.f_vec(H.S_basis(gt[1]), basis_vec(nh, gt[2]));
                Vec sfa = A.S(fa);
                Vec left(n);
                for (size_t r = 0; r < na; ++r) {
                    if (sfa[r].is_zero()) continue;
                    for (size_t s = 0; s < nh; ++s)
                        if (!sh[s].is_zero()) left[r * nh + s] += cg * sfa[r] * sh[s];
                }
                Vec sa = A.S_basis(a);
                Vec right(n);
                for (size_t r = 0; r < na; ++r)
                    if (!sa[r].is_zero())
                        for (size_t s = 0; s < nh; ++s)
                            if (!H.algebra.unit[s].is_zero()) right[r * nh + s] = sa[r] * H.algebra.unit[s];
                Vec prod = P.algebra.mul(left, right);
                for (size_t t = 0; t < n; ++t) total[t] += prod[t];
            }
            for (size_t t = 0; t < n; ++t) P.antipode.at(t, a * nh + g) = total[t];
        }
    return P;
}

struct CanonicalMaps {
    LinMap i_A, i_H, pi_A, pi_H;
};

inline CanonicalMaps canonical_maps(const CrossedSystem& S) {
    size_t na = S.A.dim(), nh = S.H.dim(), n = na * nh;
    CanonicalMaps m{LinMap({na}, {n}), LinMap({nh}, {n}), LinMap({n}, {na}), LinMap({n}, {nh})};
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            if (!S.H.algebra.unit[h].is_zero()) m.i_A.at(a * nh + h, a) = S.H.algebra.unit[h];
            if (!S.A.algebra.unit[a].is_zero()) m.i_H.at(a * nh + h, h) = S.A.algebra.unit[a];
            m.pi_A.at(a, a * nh + h) = S.H.coalgebra.eps_basis(h);
            m.pi_H.at(h, a * nh + h) = S.A.coalgebra.eps_basis(a);
        }
    return m;
}

// --------------------------------------------------- group crossed systems

struct GroupCrossedData {
    std::vector<std::vector<size_t>> cayley_H, cayley_G;
    std::vector<std::vector<size_t>> f;   // f[g1][g2] in H
    std::vector<std::vector<size_t>> act; // act[g][h] in H
    std::vector<std::string> labels_H, labels_G;
};

struct GroupCrossedResult {
    CrossedSystem system;
    HopfData product_group_algebra; // k[H x_f G] built from the crossed product group table
    LinMap phi;                     // k[H x_f G] -> kH # kG, (h, g) -> h # g
};

inline GroupCrossedResult linearize_group_crossed_system(const GroupCrossedData& D) {
    HopfData kH = group_algebra(D.cayley_H, D.labels_H, "kH");
    HopfData kG = group_algebra(D.cayley_G, D.labels_G, "kG");
    size_t nh = D.cayley_H.size(), ng = D.cayley_G.size();
    size_t eH = 0, eG = 0;
    for (size_t i = 0; i < nh; ++i)
        if (!kH.algebra.unit[i].is_zero()) eH = i;
    for (size_t i = 0; i < ng; ++i)
        if (!kG.algebra.unit[i].is_zero()) eG = i;

    auto bad = [&](const std::string& what) { fail("GroupAxiomFailure", what); };
    for (size_t g = 0; g < ng; ++g) {
        if (D.f[g][eG] != eH || D.f[eG][g] != eH) bad("cocycle not normalized");
        if (D.act[g][eH] != eH) bad("action does not fix the identity");
    }
    for (size_t h = 0; h < nh; ++h)
        if (D.act[eG][h] != h) bad("identity does not act trivially");
    for (size_t g = 0; g < ng; ++g)
        for (size_t h1 = 0; h1 < nh; ++h1)
            for (size_t h2 = 0; h2 < nh; ++h2)
                if (D.act[g][D.cayley_H[h1][h2]] != D.cayley_H[D.act[g][h1]][D.act[g][h2]])
                    bad("action is not by endomorphisms");
    for (size_t g1 = 0; g1 < ng; ++g1)
        for (size_t g2 = 0; g2 < ng; ++g2) {
            for (size_t h = 0; h < nh; ++h) {
                size_t lhs = D.cayley_H[D.act[g1][D.act[g2][h]]][D.f[g1][g2]];
                size_t rhs = D.cayley_H[D.f[g1][g2]][D.act[D.cayley_G[g1][g2]][h]];
                if (lhs != rhs) bad("group twisted module condition fails");
            }
            for (size_t g3 = 0; g3 < ng; ++g3) {
                size_t lhs = D.cayley_H[D.act[g1][D.f[g2][g3]]][D.f[g1][D.cayley_G[g2][g3]]];
                size_t rhs = D.cayley_H[D.f[g1][g2]][D.f[D.cayley_G[g1][g2]][g3]];
                if (lhs != rhs) bad("group cocycle condition fails");
            }
        }

    LinMap act({ng, nh}, {nh});
    for (size_t g = 0; g < ng; ++g)
        for (size_t h = 0; h < nh; ++h) act.at(D.act[g][h], g * nh + h) = Scalar(1L);
    LinMap coc({ng, ng}, {nh});
    for (size_t g1 = 0; g1 < ng; ++g1)
        for (size_t g2 = 0; g2 < ng; ++g2) coc.at(D.f[g1][g2], g1 * ng + g2) = Scalar(1L);

    GroupCrossedResult out{certify_crossed_system({kH, kG, act, coc}), {}, {}};

    // crossed product group on H x G: (h1,g1)(h2,g2) = (h1 (g1|>h2) f(g1,g2), g1 g2)
    size_t n = nh * ng;
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t h1 = 0; h1 < nh; ++h1)
        for (size_t g1 = 0; g1 < ng; ++g1)
            for (size_t h2 = 0; h2 < nh; ++h2)
                for (size_t g2 = 0; g2 < ng; ++g2) {
                    size_t hpart = D.cayley_H[D.cayley_H[h1][D.act[g1][h2]]][D.f[g1][g2]];
                    table[h1 * ng + g1][h2 * ng + g2] = hpart * ng + D.cayley_G[g1][g2];
                }
    std::vector<std::string> labels(n);
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < ng; ++g)
            labels[h * ng + g] = "(" + kH.basis_labels[h] + "," + kG.basis_labels[g] + ")";
    out.product_group_algebra = group_algebra(table, labels, "k[H x G]");
    out.phi = LinMap::identity({n}); // (h, g) -> h # g is the identity on this basis order
    return out;
}

// --------------------------------------------------------------- coboundary

struct CoboundaryResult {
    CrossedSystem system;
    LinMap phi; // A #_f H -> A (x) H, a # h -> a gamma(h1) (x) h2
};

inline bool is_cocommutative_coalgebra(const CoalgebraData& C) {
    size_t n = C.dim;
    for (size_t i = 0; i < n; ++i) {
        Vec d(n * n), df(n * n);
        for (auto& [j, k, c] : C.delta_basis(i)) {
            d[j * n + k] += c;
            df[k * n + j] += c;
        }
        if (!vec_eq(d, df)) return false;
    }
    return true;
}

inline CoboundaryResult coboundary_system(const HopfData& A, const HopfData& H, const LinMap& gamma) {
    size_t na = A.dim(), nh = H.dim();
    if (gamma.cols() != nh || gamma.rows() != na)
        fail("ShapeMismatch", "coboundary_system: gamma must go from H to A");
    if (!is_cocommutative_coalgebra(H.coalgebra))
        fail("NotCocommutative", "coboundary construction needs cocommutative H");
    AxiomReport gam = map_predicates(gamma, H, A, MapKind::Coalgebra);
    if (!gam.all_passed()) fail("NotCoalgebraMap", "gamma is not a coalgebra map");
    if (!vec_eq(gamma.apply(H.algebra.unit), A.algebra.unit))
        fail("NotCoalgebraMap", "gamma is not unitary");

    LinMap gamma_inv = compose(A.antipode, gamma); // S_A . gamma
    auto dH = H.coalgebra.delta_table();

    LinMap act({nh, na}, {na});
    for (size_t h = 0; h < nh; ++h)
        for (size_t a = 0; a < na; ++a) {
            Vec out(na);
            for (auto& [h1, h2, c] : dH[h]) {
                Vec v = A.algebra.mul(A.algebra.mul(gamma.column(h1), basis_vec(na, a)),
                                      gamma_inv.column(h2));
                for (size_t r = 0; r < na; ++r)
                    if (!v[r].is_zero()) out[r] += c * v[r];
            }
            for (size_t r = 0; r < na; ++r) act.at(r, h * na + a) = out[r];
        }
    LinMap coc({nh, nh}, {na});
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g) {
            Vec out(na);
            for (auto& [h1, h2, c1] : dH[h])
                for (auto& [g1, g2, c2] : dH[g]) {
                    Vec m = A.algebra.mul(gamma.column(h1), gamma.column(g1));
                    Vec tail = gamma_inv.apply(H.algebra.mul_basis(h2, g2));
                    Vec v = A.algebra.mul(m, tail);
                    Scalar c = c1 * c2;
                    for (size_t r = 0; r < na; ++r)
                        if (!v[r].is_zero()) out[r] += c * v[r];
                }
            for (size_t r = 0; r < na; ++r) coc.at(r, h * nh + g) = out[r];
        }

    CoboundaryResult res{certify_crossed_system({A, H, act, coc}), LinMap({na * nh}, {na * nh})};
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            size_t col = a * nh + h;
            for (auto& [h1, h2, c] : dH[h]) {
                Vec v = A.algebra.mul(basis_vec(na, a), gamma.column(h1));
                for (size_t r = 0; r < na; ++r)
                    if (!v[r].is_zero()) res.phi.at(r * nh + h2, col) += c * v[r];
            }
        }
    return res;
}

// ------------------------------------------------------------ lazy cocycles

inline AxiomReport check_lazy_cocycle(const HopfData& A, const HopfData& H, const LinMap& u) {
    AxiomReport rep;
    size_t na = A.dim(), nh = H.dim();
    if (u.cols() != nh || u.rows() != na) fail("ShapeMismatch", "lazy cocycle must go from H to A");
    AxiomReport coalg = map_predicates(u, H, A, MapKind::Coalgebra);
    rep.record("coalgebra_map", coalg.all_passed());
    rep.record("unitary", vec_eq(u.apply(H.algebra.unit), A.algebra.unit));
    bool lazy = true;
    std::vector<size_t> w;
    for (size_t h = 0; h < nh; ++h) {
        Vec lhs(nh * na), rhs(nh * na);
        for (auto& [h1, h2, c] : H.coalgebra.delta_basis(h)) {
            Vec l = u.column(h2), r = u.column(h1);
            for (size_t t = 0; t < na; ++t) {
                if (!l[t].is_zero()) lhs[h1 * na + t] += c * l[t];
                if (!r[t].is_zero()) rhs[h2 * na + t] += c * r[t];
            }
        }
        if (!vec_eq(lhs, rhs)) { lazy = false; w = {h}; break; }
    }
    rep.record("laziness", lazy, w);
    bool inv_ok = true;
    try {
        (void)convolution_inverse(u, H.coalgebra, A.algebra);
    } catch (const Error&) {
        inv_ok = false;
    }
    rep.record("convolution_invertible", inv_ok);
    return rep;
}

struct LazyTransformResult {
    CrossedSystem system;
    LinMap iso; // A #_f H -> A #_{f'} H, a # h -> a u(h1) # h2
};

inline LazyTransformResult transform_by_lazy_cocycle(const CrossedSystem& S, const LinMap& u) {
    if (!S.certified) fail("SystemNotCertified", "transform requires a certified system");
    AxiomReport lc = check_lazy_cocycle(S.A, S.H, u);
    if (!lc.all_passed()) fail("LazyCheckFailed", "not a coalgebra lazy 1-cocycle:\n" + lc.to_text());
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim();
    LinMap uinv = convolution_inverse(u, H.coalgebra, A.algebra);

    // h |>' a = u^{-1}(h1) (h2 |> a) u(h3)
    LinMap act({nh, na}, {na});
    for (size_t h = 0; h < nh; ++h) {
        auto legs = sweedler_legs(H.coalgebra, h, 3);
        for (size_t a = 0; a < na; ++a) {
            Vec out(na);
            for (auto& [t, c] : legs) {
                Vec v = A.algebra.mul(A.algebra.mul(uinv.column(t[0]), S.act_basis(t[1], a)),
                                      u.column(t[2]));
                for (size_t r = 0; r < na; ++r)
                    if (!v[r].is_zero()) out[r] += c * v[r];
            }
            for (size_t r = 0; r < na; ++r) act.at(r, h * na + a) = out[r];
        }
    }
    // f'(h,k) = u^{-1}(h1) (h2 |> u^{-1}(k1)) f(h3, k2) u(h4 k3)
    LinMap coc({nh, nh}, {na});
    for (size_t h = 0; h < nh; ++h) {
        auto hl = sweedler_legs(H.coalgebra, h, 4);
        for (size_t k = 0; k < nh; ++k) {
            auto kl = sweedler_legs(H.coalgebra, k, 3);
            Vec out(na);
            for (auto& [ht, ch] : hl)
                for (auto& [kt, ck] : kl) {
                    Scalar c = ch * ck;
                    Vec v = A.algebra.mul(uinv.column(ht[0]),
                                          S.act_vec(basis_vec(nh, ht[1]), uinv.column(kt[0])));
                    v = A.algebra.mul(v, S.f_basis(ht[2], kt[1]));
                    Vec tailH = H.algebra.mul_basis(ht[3], kt[2]);
                    Vec tail(na);
                    for (size_t p = 0; p < nh; ++p)
                        if (!tailH[p].is_zero()) {
                            Vec uc = u.column(p);
                            for (size_t r = 0; r < na; ++r)
                                if (!uc[r].is_zero()) tail[r] += tailH[p] * uc[r];
                        }
                    v = A.algebra.mul(v, tail);
                    for (size_t r = 0; r < na; ++r)
                        if (!v[r].is_zero()) out[r] += c * v[r];
                }
            for (size_t r = 0; r < na; ++r) coc.at(r, h * nh + k) = out[r];
        }
    }

    LazyTransformResult res{certify_crossed_system({A, H, act, coc}), LinMap({na * nh}, {na * nh})};
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            size_t col = a * nh + h;
            for (auto& [h1, h2, c] : H.coalgebra.delta_basis(h)) {
                Vec v = A.algebra.mul(basis_vec(na, a), u.column(h1));
                for (size_t r = 0; r < na; ++r)
                    if (!v[r].is_zero()) res.iso.at(r * nh + h2, col) += c * v[r];
            }
        }
    return res;
}

// ------------------------------------------------------------ factorization

struct FactorizationWitness {
    HopfData E;
    HopfData A;          // pulled back through a_embed
    CoalgebraData H_coa; // pulled back through h_embed
    LinMap a_embed, h_embed;
    LinMap u_map; // A (x) H -> E, a (x) h -> a h
    CrossedSystem recovered;
    HopfData product; // built from the recovered system
    LinMap iso;       // E -> product
};

namespace detail {

// Express each column of `vecs` in the column span of `emb`; error if impossible.
inline LinMap express_in(const LinMap& emb, const LinMap& vecs, const std::string& errcode,
                         const std::string& what) {
    LinMap out({vecs.cols()}, {emb.cols()});
    for (size_t c = 0; c < vecs.cols(); ++c) {
        auto coords = membership(emb, vecs.column(c));
        if (!coords) fail(errcode, what);
        for (size_t r = 0; r < emb.cols(); ++r) out.at(r, c) = (*coords)[r];
    }
    return out;
}

} // namespace detail

inline FactorizationWitness factorize(const HopfData& E, const LinMap& a_embed,
                                      const LinMap& h_embed) {
    size_t ne = E.dim(), na = a_embed.cols(), nh = h_embed.cols();
    if (a_embed.rows() != ne || h_embed.rows() != ne)
        fail("ShapeMismatch", "embeddings must land in E");
    if (rank_of(a_embed) != na || rank_of(h_embed) != nh)
        fail("NotBijective", "an embedding is not injective");
    if (na * nh != ne) fail("NotBijective", "dim A * dim H != dim E");

    FactorizationWitness W;
    W.E = E;
    W.a_embed = a_embed;
    W.h_embed = h_embed;

    // ---- pull back the Hopf structure of A
    {
        HopfData& A = W.A;
        A.name = "A";
        A.algebra.dim = na;
        A.basis_labels.resize(na);
        for (size_t i = 0; i < na; ++i) A.basis_labels[i] = "a" + std::to_string(i);
        LinMap prods({na, na}, {ne});
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < na; ++j) {
                Vec p = E.algebra.mul(a_embed.column(i), a_embed.column(j));
                for (size_t r = 0; r < ne; ++r) prods.at(r, i * na + j) = p[r];
            }
        A.algebra.mult = detail::express_in(a_embed, prods, "NotSubalgebra",
                                            "A image not closed under multiplication");
        auto unit_coords = membership(a_embed, E.algebra.unit);
        if (!unit_coords) fail("NotSubalgebra", "1_E not in the image of A");
        A.algebra.unit = *unit_coords;
        // subcoalgebra: Delta_E(a) must lie in im(a_embed) (x) im(a_embed)
        LinMap emb2 = tensor_map(a_embed, a_embed);
        LinMap deltas({na}, {ne * ne});
        for (size_t i = 0; i < na; ++i) {
            Vec img = a_embed.column(i);
            Vec d(ne * ne);
            for (size_t r = 0; r < ne; ++r)
                if (!img[r].is_zero())
                    for (auto& [p, q, c] : E.coalgebra.delta_basis(r)) d[p * ne + q] += img[r] * c;
            for (size_t r = 0; r < ne * ne; ++r) deltas.at(r, i) = d[r];
        }
        A.coalgebra.dim = na;
        A.coalgebra.comult = detail::express_in(emb2, deltas, "NotSubcoalgebra",
                                                "A image is not a subcoalgebra")
                                 .reshaped({na}, {na, na});
        A.coalgebra.counit = compose(E.coalgebra.counit, a_embed);
        LinMap simg = compose(E.antipode, a_embed);
        A.antipode = detail::express_in(a_embed, simg, "NotSubalgebra",
                                        "A image not closed under the antipode");
    }

    // ---- pull back the coalgebra structure of H
    {
        LinMap emb2 = tensor_map(h_embed, h_embed);
        LinMap deltas({nh}, {ne * ne});
        for (size_t i = 0; i < nh; ++i) {
            Vec img = h_embed.column(i);
            Vec d(ne * ne);
            for (size_t r = 0; r < ne; ++r)
                if (!img[r].is_zero())
                    for (auto& [p, q, c] : E.coalgebra.delta_basis(r)) d[p * ne + q] += img[r] * c;
            for (size_t r = 0; r < ne * ne; ++r) deltas.at(r, i) = d[r];
        }
        W.H_coa.dim = nh;
        W.H_coa.comult = detail::express_in(emb2, deltas, "ShapeMismatch",
                                            "H span is not a subcoalgebra")
                             .reshaped({nh}, {nh, nh});
        W.H_coa.counit = compose(E.coalgebra.counit, h_embed);
    }
    auto unitH = membership(h_embed, E.algebra.unit);
    if (!unitH) fail("ShapeMismatch", "1_E does not lie in the H subcoalgebra");

    // ---- u : A (x) H -> E and its inverse
    W.u_map = LinMap({na, nh}, {ne});
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            Vec p = E.algebra.mul(a_embed.column(a), h_embed.column(h));
            for (size_t r = 0; r < ne; ++r) W.u_map.at(r, a * nh + h) = p[r];
        }
    LinMap u_inv;
    try {
        u_inv = invert(W.u_map);
    } catch (const Error&) {
        fail("NotBijective", "multiplication map A (x) H -> E is not bijective");
    }

    // mu(h (x) a) = u^{-1}(h a) and nu(h (x) g) = u^{-1}(h g), both valued in A (x) H
    LinMap mu({nh, na}, {na * nh});
    for (size_t h = 0; h < nh; ++h)
        for (size_t a = 0; a < na; ++a) {
            Vec p = u_inv.apply(E.algebra.mul(h_embed.column(h), a_embed.column(a)));
            for (size_t r = 0; r < na * nh; ++r) mu.at(r, h * na + a) = p[r];
        }
    LinMap nu({nh, nh}, {na * nh});
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g) {
            Vec p = u_inv.apply(E.algebra.mul(h_embed.column(h), h_embed.column(g)));
            for (size_t r = 0; r < na * nh; ++r) nu.at(r, h * nh + g) = p[r];
        }

    // normality of the A image: x1 a S(x2) and S(x1) a x2 stay in im(a_embed)
    for (size_t x = 0; x < ne; ++x) {
        auto dx = E.coalgebra.delta_basis(x);
        for (size_t a = 0; a < na; ++a) {
            Vec v1(ne), v2(ne);
            for (auto& [x1, x2, c] : dx) {
                Vec t1 = E.algebra.mul(E.algebra.mul(basis_vec(ne, x1), a_embed.column(a)),
                                       E.S_basis(x2));
                Vec t2 = E.algebra.mul(E.algebra.mul(E.S_basis(x1), a_embed.column(a)),
                                       basis_vec(ne, x2));
                for (size_t r = 0; r < ne; ++r) {
                    v1[r] += c * t1[r];
                    v2[r] += c * t2[r];
                }
            }
            if (!membership(a_embed, v1) || !membership(a_embed, v2))
                fail("NotNormal", "A is not a normal Hopf subalgebra (witness x=" +
                                      std::to_string(x) + ", a=" + std::to_string(a) + ")");
        }
    }

    // left action <| := (eps_A (x) id) . mu must come out trivial: h <| a = eps(a) h
    for (size_t h = 0; h < nh; ++h)
        for (size_t a = 0; a < na; ++a) {
            Vec hp(nh);
            for (size_t p = 0; p < na; ++p)
                for (size_t q = 0; q < nh; ++q) {
                    const Scalar& c = mu.at(p * nh + q, h * na + a);
                    if (!c.is_zero()) hp[q] += c * W.A.coalgebra.eps_basis(p);
                }
            Vec expect(nh);
            expect[h] = W.A.coalgebra.eps_basis(a);
            if (!vec_eq(hp, expect))
                fail("LeftActionNotTrivial", "recovered left action is not eps_A (x) id at (" +
                                                 std::to_string(h) + "," + std::to_string(a) + ")");
        }

    // recovered structure on H: mult_H = (eps_A (x) id) . nu, f = (id (x) eps_H) . nu,
    // act = (id (x) eps_H) . mu
    HopfData Hrec;
    Hrec.name = "H";
    Hrec.basis_labels.resize(nh);
    for (size_t i = 0; i < nh; ++i) Hrec.basis_labels[i] = "h" + std::to_string(i);
    Hrec.coalgebra = W.H_coa;
    Hrec.algebra.dim = nh;
    Hrec.algebra.mult = LinMap({nh, nh}, {nh});
    LinMap fmap({nh, nh}, {na});
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g)
            for (size_t p = 0; p < na; ++p)
                for (size_t q = 0; q < nh; ++q) {
                    const Scalar& c = nu.at(p * nh + q, h * nh + g);
                    if (c.is_zero()) continue;
                    Hrec.algebra.mult.at(q, h * nh + g) += c * W.A.coalgebra.eps_basis(p);
                    fmap.at(p, h * nh + g) += c * W.H_coa.eps_basis(q);
                }
    Hrec.algebra.unit = *unitH;
    LinMap actmap({nh, na}, {na});
    for (size_t h = 0; h < nh; ++h)
        for (size_t a = 0; a < na; ++a)
            for (size_t p = 0; p < na; ++p)
                for (size_t q = 0; q < nh; ++q) {
                    const Scalar& c = mu.at(p * nh + q, h * na + a);
                    if (!c.is_zero()) actmap.at(p, h * na + a) += c * W.H_coa.eps_basis(q);
                }
    Hrec.antipode = derive_antipode(Hrec);

    W.recovered = certify_crossed_system({W.A, Hrec, actmap, fmap});
    W.product = build_crossed_product(W.recovered);
    W.iso = invert(W.u_map); // E -> A # H on the product basis
    return W;
}

// -------------------------------------------------------- universal maps

inline LinMap universal_map_out(const CrossedSystem& S, const HopfData& X, const LinMap& u,
                                const LinMap& v) {
    if (!S.certified) fail("SystemNotCertified", "universal_map_out requires a certified system");
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim(), nx = X.dim();
    if (u.cols() != na || u.rows() != nx || v.cols() != nh || v.rows() != nx)
        fail("ShapeMismatch", "universal_map_out: u : A -> X and v : H -> X required");
    if (!map_predicates(u, A, X, MapKind::Hopf).all_passed())
        fail("PreconditionFailed", "u is not a Hopf algebra map");
    if (!map_predicates(v, H, X, MapKind::Coalgebra).all_passed())
        fail("PreconditionFailed", "v is not a coalgebra map");

    auto dH = H.coalgebra.delta_table();
    // (u1): u(f(h1,g1)) v(h2 g2) = v(h) v(g)
    for (size_t h = 0; h < nh; ++h)
        for (size_t g = 0; g < nh; ++g) {
            Vec lhs(nx);
            for (auto& [h1, h2, c1] : dH[h])
                for (auto& [g1, g2, c2] : dH[g]) {
                    Vec uf = u.apply(S.f_basis(h1, g1));
                    Vec hg = H.algebra.mul_basis(h2, g2);
                    Vec vhg(nx);
                    for (size_t p = 0; p < nh; ++p)
                        if (!hg[p].is_zero()) {
                            Vec vc = v.column(p);
                            for (size_t r = 0; r < nx; ++r)
                                if (!vc[r].is_zero()) vhg[r] += hg[p] * vc[r];
                        }
                    Vec t = X.algebra.mul(uf, vhg);
                    Scalar c = c1 * c2;
                    for (size_t r = 0; r < nx; ++r) lhs[r] += c * t[r];
                }
            Vec rhs = X.algebra.mul(v.column(h), v.column(g));
            if (!vec_eq(lhs, rhs))
                fail("PreconditionFailed", "(u1) fails at basis pair (" + std::to_string(h) + "," +
                                               std::to_string(g) + ")");
        }
    // (u2): u(h1 |> b) v(h2) = v(h) u(b)
    for (size_t h = 0; h < nh; ++h)
        for (size_t b = 0; b < na; ++b) {
            Vec lhs(nx);
            for (auto& [h1, h2, c] : dH[h]) {
                Vec t = X.algebra.mul(u.apply(S.act_basis(h1, b)), v.column(h2));
                for (size_t r = 0; r < nx; ++r) lhs[r] += c * t[r];
            }
            Vec rhs = X.algebra.mul(v.column(h), u.column(b));
            if (!vec_eq(lhs, rhs))
                fail("PreconditionFailed", "(u2) fails at basis pair (" + std::to_string(h) + "," +
                                               std::to_string(b) + ")");
        }

    LinMap w({na * nh}, {nx});
    for (size_t a = 0; a < na; ++a)
        for (size_t h = 0; h < nh; ++h) {
            Vec t = X.algebra.mul(u.column(a), v.column(h));
            for (size_t r = 0; r < nx; ++r) w.at(r, a * nh + h) = t[r];
        }
    return w;
}

inline LinMap universal_map_in(const CrossedSystem& S, const HopfData& X, const LinMap& u,
                               const LinMap& v) {
    if (!S.certified) fail("SystemNotCertified", "universal_map_in requires a certified system");
    const HopfData &A = S.A, &H = S.H;
    size_t na = A.dim(), nh = H.dim(), nx = X.dim();
    if (u.cols() != nx || u.rows() != na || v.cols() != nx || v.rows() != nh)
        fail("ShapeMismatch", "universal_map_in: u : X -> A and v : X -> H required");
    if (!map_predicates(v, X, H, MapKind::Hopf).all_passed())
        fail("PreconditionFailed", "v is not a Hopf algebra map");
    if (!map_predicates(u, X, A, MapKind::Coalgebra).all_passed())
        fail("PreconditionFailed", "u is not a coalgebra map");

    // (u3): u(x1) (x) v(x2) = u(x2) (x) v(x1)
    for (size_t x = 0; x < nx; ++x) {
        Vec lhs(na * nh), rhs(na * nh);
        for (auto& [x1, x2, c] : X.coalgebra.delta_basis(x)) {
            Vec u1 = u.column(x1), v2 = v.column(x2), u2 = u.column(x2), v1 = v.column(x1);
            for (size_t r = 0; r < na; ++r) {
                if (!u1[r].is_zero())
                    for (size_t s = 0; s < nh; ++s)
                        if (!v2[s].is_zero()) lhs[r * nh + s] += c * u1[r] * v2[s];
                if (!u2[r].is_zero())
                    for (size_t s = 0; s < nh; ++s)
                        if (!v1[s].is_zero()) rhs[r * nh + s] += c * u2[r] * v1[s];
            }
        }
        if (!vec_eq(lhs, rhs))
            fail("PreconditionFailed", "(u3) fails at basis element " + std::to_string(x));
    }
    // (u4): u(xy) = u(x1) [v(x2) |> u(y1)] f(v(x3), v(y2))
    for (size_t x = 0; x < nx; ++x) {
        auto xl = sweedler_legs(X.coalgebra, x, 3);
        for (size_t y = 0; y < nx; ++y) {
            Vec lhs = u.apply(X.algebra.mul_basis(x, y));
            Vec rhs(na);
            for (auto& [xt, cx] : xl)
                for (auto& [y1, y2, cy] : X.coalgebra.delta_basis(y)) {
                    Scalar c = cx * cy;
                    Vec mid = S.act_vec(v.column(xt[1]), u.column(y1));
                    Vec tail = S.f_vec(v.column(xt[2]), v.column(y2));
                    Vec t = A.algebra.mul(A.algebra.mul(u.column(xt[0]), mid), tail);
                    for (size_t r = 0; r < na; ++r) rhs[r] += c * t[r];
                }
            if (!vec_eq(lhs, rhs))
                fail("PreconditionFailed", "(u4) fails at basis pair (" + std::to_string(x) + "," +
                                               std::to_string(y) + ")");
        }
    }

    LinMap w({nx}, {na * nh});
    for (size_t x = 0; x < nx; ++x)
        for (auto& [x1, x2, c] : X.coalgebra.delta_basis(x)) {
            Vec u1 = u.column(x1), v2 = v.column(x2);
            for (size_t r = 0; r < na; ++r)
                if (!u1[r].is_zero())
                    for (size_t s = 0; s < nh; ++s)
                        if (!v2[s].is_zero()) w.at(r * nh + s, x) += c * u1[r] * v2[s];
        }
    return w;
}

} // namespace hopfcross
