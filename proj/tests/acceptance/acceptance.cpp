// Acceptance suite: one check per shipped criterion, each printing a single
// PASS/FAIL line plus supporting detail. Run all criteria with no arguments
// or a single one with --criterion N.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfcross/io.hpp"
#include "hopfcross/polybraid.hpp"
#include "hopfcross/presets.hpp"

using namespace hopfcross;

namespace {

const std::string kData = HOPFCROSS_DATA_DIR;
const std::string kCli = HOPFCROSS_CLI_PATH;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::vector<std::string> valid_system_fixtures() {
    return {"h4_c3_system.json",  "trivial_c2_c3.json", "trivial_h4_c3.json",
            "trivial_c3_h4.json", "trivial_c2_c2.json", "smash_h4_c2.json",
            "c2c2_cocycle_system.json", "q8_system.json", "coboundary_h4_c2.json"};
}

CrossedSystem load_system(const std::string& name, FieldContext& fc, bool certify = true) {
    return crossed_from_json(load_json_file(kData + "/" + name), fc, kData, certify);
}

// The sigma values published for this example, assembled from the published
// component tables (tau with a +gamma/-gamma diagonal and the symmetric
// p-corner). These tables do not satisfy the braiding axioms; the criterion
// below compares them cell by cell against the axiom-valid family and
// reports the discrepancy honestly.
Pairing published_sigma(const Scalar& alpha, const Scalar& gamma) {
    Scalar g2 = gamma * gamma;
    Pairing p(4, 4), tau(3, 3), u(4, 3), v(3, 4);
    p.at(0, 0) = Scalar(1L); p.at(0, 1) = Scalar(1L);
    p.at(1, 0) = Scalar(1L); p.at(1, 1) = Scalar(-1L);
    p.at(2, 2) = alpha; p.at(2, 3) = -alpha;
    p.at(3, 2) = alpha; p.at(3, 3) = alpha;
    for (size_t j = 0; j < 3; ++j) tau.at(0, j) = Scalar(1L);
    tau.at(1, 0) = Scalar(1L); tau.at(2, 0) = Scalar(1L);
    tau.at(1, 1) = gamma; tau.at(1, 2) = -g2;
    tau.at(2, 1) = -g2; tau.at(2, 2) = -gamma;
    for (size_t j = 0; j < 3; ++j) u.at(0, j) = Scalar(1L);
    u.at(1, 0) = Scalar(1L); u.at(1, 1) = Scalar(-1L); u.at(1, 2) = Scalar(-1L);
    for (size_t i = 0; i < 3; ++i) v.at(i, 0) = Scalar(1L);
    v.at(0, 1) = Scalar(1L); v.at(1, 1) = Scalar(-1L); v.at(2, 1) = Scalar(-1L);

    HopfData A = sweedler_h4();
    HopfData H = cyclic_group_algebra(3);
    auto dA = A.coalgebra.delta_table();
    auto dH = H.coalgebra.delta_table();
    Pairing sigma(12, 12);
    for (size_t a = 0; a < 4; ++a)
        for (size_t h = 0; h < 3; ++h)
            for (size_t b = 0; b < 4; ++b)
                for (size_t g = 0; g < 3; ++g) {
                    Scalar s;
                    for (auto& [a1, a2, ca] : dA[a])
                        for (auto& [b1, b2, cb] : dA[b])
                            for (auto& [h1, h2, ch] : dH[h])
                                for (auto& [g1, g2c, cg] : dH[g])
                                    s += ca * cb * ch * cg * u.at(a1, g1) * p.at(a2, b1) *
                                         tau.at(h1, g2c) * v.at(h2, b2);
                    sigma.at(a * 3 + h, b * 3 + g) = s;
                }
    return sigma;
}

// ------------------------------------------------------------- criterion 1

bool criterion1(std::ostream& os) {
    auto t0 = std::chrono::steady_clock::now();
    bool table_emission_ok = true;
    for (int alpha : {1, 2}) {
        std::string out = std::string("/tmp/hopfcross_sigma_alpha") + std::to_string(alpha) + ".tsv";
        int rc = run_cli("braid table " + kData + "/h4_c3_system.json " + kData +
                         "/h4_c3_quad_alpha" + std::to_string(alpha) + ".json --out " + out);
        bool match = rc == 0 && slurp(out) == slurp(kData + "/golden/h4_c3_sigma_alpha" +
                                                    std::to_string(alpha) + ".tsv");
        os << "  braid table (alpha=" << alpha << ", gamma=z): exit " << rc
           << ", matches bundled golden table byte for byte: " << (match ? "yes" : "NO") << "\n";
        table_emission_ok = table_emission_ok && match;
    }

    CrossedSystem S = h4_c3_system();
    HopfData P = build_crossed_product(S);
    Scalar z = Scalar::zeta(3, 1);
    auto idx = [](size_t a, size_t h) { return a * 3 + h; };

    bool zero_blocks_ok = true, pinned_ok = true, published_match = true;
    for (int alpha_i : {1, 2}) {
        Scalar alpha((long)alpha_i);
        BraidingQuadruple Q = certify_quadruple(S, h4_c3_quadruple(alpha, z));
        Pairing sigma = assemble_sigma(S, Q);
        // mixed grouplike/nilpotent blocks vanish
        for (size_t a = 0; a < 4; ++a)
            for (size_t h = 0; h < 3; ++h)
                for (size_t b = 0; b < 4; ++b)
                    for (size_t g = 0; g < 3; ++g)
                        if ((a < 2) != (b < 2) && !sigma.at(idx(a, h), idx(b, g)).is_zero())
                            zero_blocks_ok = false;
        // the four pinned entries, asserted exactly as shipped
        struct Pin {
            size_t r, c;
            Scalar expect;
            const char* label;
        };
        std::vector<Pin> pins = {
            {idx(0, 1), idx(0, 1), z, "sigma(1#a,1#a) = gamma"},
            {idx(1, 0), idx(1, 0), Scalar(-1L), "sigma(g#1,g#1) = -1"},
            {idx(2, 1), idx(2, 1), -alpha * z, "sigma(x#a,x#a) = -alpha*gamma"},
            {idx(3, 2), idx(3, 2), alpha * z, "sigma(gx#a^2,gx#a^2) = alpha*gamma"},
        };
        for (const Pin& pin : pins) {
            bool ok = sigma.at(pin.r, pin.c) == pin.expect;
            os << "  alpha=" << alpha_i << ": pinned " << pin.label << ": "
               << (ok ? "PASS" : "FAIL") << " (computed " << sigma.at(pin.r, pin.c).render()
               << ", pinned " << pin.expect.render() << ")\n";
            pinned_ok = pinned_ok && ok;
        }
        // full comparison against the published reference tables
        Pairing ref = published_sigma(alpha, z);
        size_t mismatches = 0;
        for (size_t i = 0; i < 12; ++i)
            for (size_t j = 0; j < 12; ++j)
                if (sigma.at(i, j) != ref.at(i, j)) ++mismatches;
        os << "  alpha=" << alpha_i << ": cells agreeing with the published reference table: "
           << (144 - mismatches) << "/144\n";
        if (mismatches) published_match = false;
        // and the mathematical reason: the reference table is not a braiding
        AxiomReport refbr = check_braiding(P, ref);
        const auto* br1 = refbr.find("BR1");
        if (br1 && !br1->passed && br1->witness) {
            os << "  alpha=" << alpha_i
               << ": the published reference table itself fails BR1 at basis triple (";
            for (size_t k = 0; k < br1->witness->size(); ++k)
                os << (k ? "," : "") << P.basis_labels[(*br1->witness)[k]];
            os << ") - no braiding attains those cells\n";
        }
    }
    double dt = seconds_since(t0);
    bool time_ok = dt < 5.0;
    os << "  runtime " << dt << " s (< 5 s: " << (time_ok ? "yes" : "NO") << ")\n";
    bool pass = table_emission_ok && zero_blocks_ok && pinned_ok && published_match && time_ok;
    if (!pass && table_emission_ok && zero_blocks_ok && time_ok) {
        os << "  summary: the emitted tables are exactly the axiom-valid braiding family\n"
              "  (byte-identical goldens, zero mixed blocks, sigma(g#1,g#1) = -1,\n"
              "  sigma(gx#a^2,gx#a^2) = alpha*gamma). The remaining pinned values\n"
              "  sigma(1#a,1#a) = +gamma and sigma(x#a,x#a) = -alpha*gamma are unattainable:\n"
              "  (SBR1) with u(g,a) = -1 and f(a,a) = g forces tau(a,a)^3 = -1 and\n"
              "  tau(a^2,a^2) = tau(a,a), so sigma(1#a,1#a) = -gamma and the x/gx diagonal\n"
              "  entries are equal. The 22 disagreeing reference cells fail (BR1) directly.\n";
    }
    return pass;
}

// ------------------------------------------------------------- criterion 2

bool criterion2(std::ostream& os) {
    auto t0 = std::chrono::steady_clock::now();
    bool all_ok = true;
    FieldContext fc;
    for (const std::string& name : valid_system_fixtures()) {
        FieldContext f2;
        CrossedSystem S = load_system(name, f2, /*certify=*/false);
        AxiomReport rep = verify_crossed_system(S);
        os << "  " << name << ": " << (rep.all_passed() ? "all axioms pass" : "FAILS") << "\n";
        all_ok = all_ok && rep.all_passed();
    }
    CrossedSystem S = h4_c3_system();
    HopfData P = build_crossed_product(S);
    AxiomReport rep = verify_hopf(P);
    os << "  12-dim product: full Hopf verification (all associativity triples, "
          "coassociativity, antipode convolution): "
       << (rep.all_passed() ? "pass" : "FAIL") << "\n";
    all_ok = all_ok && rep.all_passed();
    double dt = seconds_since(t0);
    os << "  runtime " << dt << " s (< 30 s: " << (dt < 30 ? "yes" : "NO") << ")\n";
    return all_ok && dt < 30;
}

// ------------------------------------------------------------- criterion 3

bool criterion3(std::ostream& os) {
    bool all_ok = true;
    std::vector<std::string> fixtures = {"trivial_c2_c3.json", "smash_h4_c2.json",
                                         "c2c2_cocycle_system.json", "coboundary_h4_c2.json",
                                         "h4_c3_system.json"};
    for (const std::string& name : fixtures) {
        FieldContext fc;
        CrossedSystem S = load_system(name, fc);
        HopfData P = build_crossed_product(S);
        CanonicalMaps cm = canonical_maps(S);
        try {
            FactorizationWitness W = factorize(P, cm.i_A, cm.i_H);
            bool exact = W.recovered.act == S.act && W.recovered.cocycle == S.cocycle &&
                         W.recovered.A.algebra.mult == S.A.algebra.mult &&
                         W.recovered.H.algebra.mult == S.H.algebra.mult &&
                         map_predicates(W.iso, P, W.product, MapKind::Iso).all_passed();
            os << "  " << name << ": recovered system coefficient-exact, normality and trivial "
                  "left action verified: "
               << (exact ? "yes" : "NO") << "\n";
            all_ok = all_ok && exact;
        } catch (const Error& e) {
            os << "  " << name << ": FAIL (" << e.what() << ")\n";
            all_ok = false;
        }
    }
    return all_ok;
}

// ------------------------------------------------------------- criterion 4

bool spans_line(const std::vector<Vec>& basis, const Vec& expect) {
    if (basis.size() != 1) return false;
    const Vec& b = basis[0];
    Scalar ratio;
    bool have = false;
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i].is_zero() != expect[i].is_zero()) return false;
        if (!b[i].is_zero()) {
            Scalar r = expect[i] / b[i];
            if (have && r != ratio) return false;
            ratio = r;
            have = true;
        }
    }
    return have;
}

bool criterion4(std::ostream& os) {
    bool ok = true;
    HopfData H4 = sweedler_h4();
    IntegralSpace r = integrals(H4, Side::Right);
    Vec xmgx(4);
    xmgx[2] = Scalar(1L);
    xmgx[3] = Scalar(-1L);
    bool a = spans_line(r.basis, xmgx) && r.epsilon_values[0].is_zero();
    os << "  H4 right integrals = span{x - gx}, eps = 0: " << (a ? "yes" : "NO") << "\n";
    IntegralSpace l = integrals(H4, Side::Left);
    Vec xpgx(4);
    xpgx[2] = Scalar(1L);
    xpgx[3] = Scalar(1L);
    bool b = spans_line(l.basis, xpgx);
    os << "  H4 left integrals = span{x + gx}: " << (b ? "yes" : "NO") << "\n";
    HopfData C3 = cyclic_group_algebra(3);
    IntegralSpace rc = integrals(C3, Side::Right);
    bool c = spans_line(rc.basis, Vec(3, Scalar(1L)));
    os << "  k[C3] integrals = span of the group sum: " << (c ? "yes" : "NO") << "\n";
    CrossedSystem S = h4_c3_system();
    HopfData P = build_crossed_product(S);
    IntegralSpace rp = integrals(P, Side::Right);
    bool d = rp.basis.size() == 1;
    os << "  12-dim product: right integral space is one-dimensional: " << (d ? "yes" : "NO") << "\n";
    bool e = true;
    try {
        product_integral(S, P, xmgx, Vec(3, Scalar(1L)));
    } catch (const Error&) {
        e = false;
    }
    os << "  (x - gx) # (1 + a + a^2) is a right integral of the product: " << (e ? "yes" : "NO") << "\n";
    bool f = !is_semisimple(P).semisimple;
    os << "  H4 # k[C3] is not semisimple: " << (f ? "yes" : "NO") << "\n";
    bool g = true;
    for (const std::string& name : valid_system_fixtures()) {
        FieldContext fc;
        CrossedSystem C = load_system(name, fc);
        bool lhs = is_semisimple(build_crossed_product(C)).semisimple;
        bool rhs = is_semisimple(C.A).semisimple && is_semisimple(C.H).semisimple;
        if (lhs != rhs) {
            g = false;
            os << "  Maschke consistency FAILS on " << name << "\n";
        }
    }
    os << "  semisimple(A # H) = semisimple(A) and semisimple(H), full corpus: "
       << (g ? "yes" : "NO") << "\n";
    ok = a && b && c && d && e && f && g;
    return ok;
}

// ------------------------------------------------------------- criterion 5

bool criterion5(std::ostream& os) {
    bool ok = true;
    for (const std::string& name : valid_system_fixtures()) {
        FieldContext fc;
        CrossedSystem S = load_system(name, fc);
        HopfData P = build_crossed_product(S);
        bool comm_eq = commutativity_criterion(S).all_passed() == is_commutative(P);
        bool inv_eq = true;
        if (is_cocommutative(S.H))
            inv_eq = involutory_criterion_cocomm(S).all_passed() == is_involutory(P);
        os << "  " << name << ": commutativity criterion <-> product " << (comm_eq ? "ok" : "FAIL")
           << ", involutivity criterion <-> product " << (inv_eq ? "ok" : "FAIL") << "\n";
        ok = ok && comm_eq && inv_eq;
    }
    // the C2/C2 cocycle system in detail
    FieldContext fc;
    CrossedSystem G = load_system("c2c2_cocycle_system.json", fc);
    HopfData P = build_crossed_product(G);
    bool comm = is_commutative(P), inv = is_involutory(P);
    Vec one_s = basis_vec(4, 1);
    Vec pw = one_s;
    size_t order = 1;
    while (!vec_eq(pw, P.algebra.unit) && order < 8) {
        pw = P.algebra.mul(pw, one_s);
        ++order;
    }
    bool gl = is_grouplike(P, one_s) && order == 4;
    os << "  C2/C2 cocycle product: commutative " << comm << ", involutory " << inv
       << ", grouplike 1#s of order " << order << " (so the product is k[C4])\n";
    // H4 # k[C3]: neither
    CrossedSystem S = h4_c3_system();
    HopfData HP = build_crossed_product(S);
    bool neither = !is_commutative(HP) && !is_involutory(HP);
    os << "  H4 # k[C3]: commutative " << is_commutative(HP) << ", involutory "
       << is_involutory(HP) << "\n";
    return ok && comm && inv && gl && neither;
}

// ------------------------------------------------------------- criterion 6

bool criterion6(std::ostream& os) {
    bool ok = true;
    CrossedSystem S = h4_c3_system();
    HopfData P = build_crossed_product(S);
    Scalar z = Scalar::zeta(3, 1);
    size_t count = 0;
    for (const Scalar& alpha : {Scalar(1L), Scalar(2L)})
        for (const Scalar& gamma : {Scalar(1L), z, z * z}) {
            BraidingQuadruple Q = certify_quadruple(S, h4_c3_quadruple(alpha, gamma));
            Pairing sigma = assemble_sigma(S, Q);
            bool br = check_braiding(P, sigma).all_passed();
            BraidingQuadruple back = decompose_sigma(S, P, sigma);
            bool round1 = back.p == Q.p && back.tau == Q.tau && back.u == Q.u && back.v == Q.v;
            bool round2 = assemble_sigma(S, back) == sigma;
            ok = ok && br && round1 && round2;
            ++count;
        }
    os << "  " << count
       << " corpus quadruples: assembled sigma passes (BR1)-(BR5) exhaustively on the "
          "12-dim product, decompose . assemble and assemble . decompose are exact: "
       << (ok ? "yes" : "NO") << "\n";
    // bicharacter braidings on the tensor square of k[C2]
    FieldContext fc;
    CrossedSystem T = load_system("trivial_c2_c2.json", fc);
    HopfData TP = build_crossed_product(T);
    HopfData C2 = cyclic_group_algebra(2, "s");
    size_t bc = 0;
    for (const Scalar& sp : {Scalar(1L), Scalar(-1L)})
        for (const Scalar& st : {Scalar(1L), Scalar(-1L)})
            for (const Scalar& su : {Scalar(1L), Scalar(-1L)})
                for (const Scalar& sv : {Scalar(1L), Scalar(-1L)}) {
                    BraidingQuadruple Q;
                    Q.p = cyclic_bicharacter_braiding(C2, sp);
                    Q.tau = cyclic_bicharacter_braiding(C2, st);
                    Q.u = counit_pairing(C2, C2);
                    Q.u.at(1, 1) = su;
                    Q.v = counit_pairing(C2, C2);
                    Q.v.at(1, 1) = sv;
                    Q = certify_quadruple(T, Q);
                    Pairing sigma = assemble_sigma(T, Q);
                    bool br = check_braiding(TP, sigma).all_passed();
                    BraidingQuadruple back = decompose_sigma(T, TP, sigma);
                    bool same = back.p == Q.p && back.tau == Q.tau && back.u == Q.u && back.v == Q.v;
                    if (br && same) ++bc;
                }
    os << "  16/16 bicharacter quadruples on k[C2] (x) k[C2] certify and round-trip: "
       << (bc == 16 ? "yes" : "NO") << "\n";
    return ok && bc == 16;
}

// ------------------------------------------------------------- criterion 7

bool criterion7(std::ostream& os) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<PolySigmaParams> sets = {
        {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(1L)},
        {Scalar(1L), Scalar(2L), Scalar(3L), Scalar(5L)},
        {Scalar::zeta(3, 1), Scalar(2L), Scalar(3L), Scalar(5L)},
    };
    bool agree = true;
    for (const auto& P : sets)
        for (size_t s = 0; s <= 12 && agree; ++s)
            for (size_t a = 0; a <= s && agree; ++a)
                for (size_t c = 0; c <= s; ++c)
                    if (closed_form_sigma(P, a, s - a, c, s - c) !=
                        assembled_sigma_poly(P, a, s - a, c, s - c)) {
                        agree = false;
                        os << "  MISMATCH at (" << a << "," << s - a << "," << c << "," << s - c
                           << ")\n";
                        break;
                    }
    os << "  closed form = assembled braiding for all a+b = c+d <= 12, three parameter sets: "
       << (agree ? "yes" : "NO") << "\n";
    bool br = true;
    for (const auto& P : sets) {
        AxiomReport rep = br_axioms_bounded(P, 6);
        br = br && rep.all_passed();
    }
    os << "  BR1/BR3/BR5 bounded checks at D = 6: " << (br ? "pass" : "FAIL") << "\n";
    double dt = seconds_since(t0);
    os << "  runtime " << dt << " s (< 60 s: " << (dt < 60 ? "yes" : "NO") << ")\n";
    return agree && br && dt < 60;
}

// ------------------------------------------------------------- criterion 8

bool criterion8(std::ostream& os) {
    bool ok = true;
    struct Grid {
        size_t n, m;
    };
    for (Grid g : {Grid{2, 2}, Grid{2, 3}, Grid{3, 3}}) {
        size_t n = g.n, m = g.m;
        std::vector<Scalar> mu;
        for (size_t k = 0; k < n; ++k) mu.push_back(Scalar::zeta((unsigned)n, (long)k));
        Scalar tau = Scalar::zeta((unsigned)n, 1); // primitive
        size_t cells = (m - 1) * (m - 1);
        size_t total_alpha = 1;
        for (size_t i = 0; i < cells; ++i) total_alpha *= n;
        size_t checked = 0, accepted_count = 0, mismatch = 0, quoted_mismatch = 0;
        for (size_t code = 0; code < total_alpha; ++code) {
            std::vector<std::vector<unsigned>> alpha(m, std::vector<unsigned>(m, 0));
            size_t rest = code;
            for (size_t i = 1; i < m; ++i)
                for (size_t j = 1; j < m; ++j) {
                    alpha[i][j] = (unsigned)(rest % n);
                    rest /= n;
                }
            for (const Scalar& ups : mu) {
                ++checked;
                bool accepted = true;
                Pairing table(n, m);
                try {
                    table = cyclic_pf_right_skew(n, m, alpha, tau, ups);
                } catch (const Error&) {
                    accepted = false;
                }
                // brute-force: w_b = ups^b tau^{-sum of alpha(1,j), j < b}; RS-valid iff
                // w_{(b+c)%m} tau^{alpha(b,c)} = w_b w_c for all b, c
                std::vector<Scalar> w(m, Scalar(1L));
                for (size_t b = 1; b < m; ++b) {
                    long partial = 0;
                    for (size_t j = 1; j < b; ++j) partial += alpha[1][j];
                    w[b] = ups.pow((long)b) * tau.pow(-partial);
                }
                bool valid = true;
                for (size_t b = 0; b < m && valid; ++b)
                    for (size_t c = 0; c < m; ++c)
                        if (w[(b + c) % m] * tau.pow((long)alpha[b][c]) != w[b] * w[c]) {
                            valid = false;
                            break;
                        }
                if (accepted != valid) ++mismatch;
                if (accepted) {
                    ++accepted_count;
                    // the emitted table passes the full RS axiom family on the real system
                    HopfData A = cyclic_group_algebra(n, "t");
                    HopfData H = cyclic_group_algebra(m, "g");
                    LinMap coc({m, m}, {n});
                    for (size_t i = 0; i < m; ++i)
                        for (size_t j = 0; j < m; ++j) coc.at(alpha[i][j], i * m + j) = Scalar(1L);
                    CrossedSystem S{A, H, trivial_action(A, H), coc};
                    Pairing p = cyclic_bicharacter_braiding(A, tau);
                    if (!check_pf_right_skew(S, p, table).all_passed()) ++mismatch;
                }
                // where the quoted single-exponent form upsilon^m = tau^alpha(1,m-1)
                // differs from the partial-sum condition
                bool symm = true, norm = true, coc_ok = true;
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < m; ++j) {
                        if (alpha[i][j] != alpha[j][i]) symm = false;
                        if ((i == 0 || j == 0) && alpha[i][j] != 0) norm = false;
                    }
                for (size_t b = 0; b < m && coc_ok; ++b)
                    for (size_t c = 0; c < m && coc_ok; ++c)
                        for (size_t e = 0; e < m; ++e)
                            if ((alpha[c][e] + alpha[b][(c + e) % m]) % n !=
                                (alpha[b][c] + alpha[(b + c) % m][e]) % n) {
                                coc_ok = false;
                                break;
                            }
                bool quoted = symm && norm && coc_ok &&
                              ups.pow((long)m) == tau.pow((long)alpha[1][m - 1]);
                if (quoted != accepted) ++quoted_mismatch;
            }
        }
        os << "  (n,m) = (" << n << "," << m << "): " << checked
           << " (alpha, upsilon) pairs; accept <-> brute-force RS-valid exactly, mismatches: "
           << mismatch << "; accepted: " << accepted_count << "\n";
        if (quoted_mismatch)
            os << "    note: the single-exponent condition upsilon^m = tau^alpha(1,m-1) "
                  "misclassifies "
               << quoted_mismatch
               << " pairs; the implemented exponent is the partial sum over alpha(1,j)\n";
        ok = ok && mismatch == 0;
    }
    return ok;
}

// ------------------------------------------------------------- criterion 9

bool criterion9(std::ostream& os) {
    bool ok = true;
    auto show = [&](const std::string& label, const AxiomReport& rep, const std::string& axiom) {
        const auto* e = rep.find(axiom);
        bool good = e && !e->passed && e->witness.has_value();
        os << "  " << label << ": entry '" << axiom << "' "
           << (good ? "fails with witness (" : "DID NOT fail as expected (");
        if (good) {
            for (size_t i = 0; i < e->witness->size(); ++i) os << (i ? "," : "") << (*e->witness)[i];
        }
        os << ")\n";
        ok = ok && good;
    };

    {
        FieldContext fc;
        HopfData bad = hopf_from_json(load_json_file(kData + "/faults/h4_coassoc.json"), fc);
        show("faults/h4_coassoc.json", verify_coalgebra(bad.coalgebra), "coassociativity");
    }
    auto crossed_fault = [&](const std::string& file, const std::string& axiom) {
        FieldContext fc;
        CrossedSystem S = crossed_from_json(load_json_file(kData + "/faults/" + file), fc, kData,
                                            /*certify=*/false);
        show("faults/" + file, verify_crossed_system(S), axiom);
    };
    crossed_fault("twisted_module.json", "twisted_module");
    crossed_fault("cocycle_condition.json", "cocycle_condition");
    crossed_fault("co_condition_action.json", "co_condition_action");
    crossed_fault("co_condition_cocycle.json", "co_condition_cocycle");

    auto quad_fault = [&](const std::string& file, const std::string& system,
                          const std::string& axiom, bool compat) {
        FieldContext fc;
        CrossedSystem S = load_system(system, fc);
        BraidingQuadruple Q = quadruple_from_json(load_json_file(kData + "/faults/" + file), S, fc);
        AxiomReport rep = compat ? check_compatibilities(S, Q) : AxiomReport{};
        if (!compat) rep = verify_quadruple(S, Q);
        show("faults/" + file, rep, axiom);
    };
    quad_fault("rs3_u.json", "h4_c3_system.json", "u.RS3", false);
    quad_fault("ls1_v.json", "h4_c3_system.json", "v.LS1", false);
    quad_fault("sbr5_tau.json", "trivial_c3_h4.json", "tau.SBR5", false);
    quad_fault("compat_41.json", "trivial_h4_c3.json", "4.1", true);
    quad_fault("compat_42.json", "trivial_h4_c3.json", "4.2", true);
    quad_fault("compat_43.json", "q8_system.json", "4.3", true);
    quad_fault("compat_44.json", "trivial_h4_c3.json", "4.4", true);
    quad_fault("compat_45.json", "trivial_c3_h4.json", "4.5", true);
    quad_fault("compat_46.json", "trivial_h4_c3.json", "4.6", true);
    quad_fault("compat_47.json", "trivial_c3_h4.json", "4.7", true);
    return ok;
}

// ------------------------------------------------------------ criterion 10

bool criterion10(std::ostream& os) {
    HopfData A = sweedler_h4();
    HopfData C2 = cyclic_group_algebra(2, "s");
    LinMap gamma({2}, {4});
    gamma.at(0, 0) = Scalar(1L);
    gamma.at(1, 1) = Scalar(1L);
    CoboundaryResult R = coboundary_system(A, C2, gamma);
    HopfData P = build_crossed_product(R.system);
    bool iso = map_predicates(R.phi, P, tensor_hopf(A, C2), MapKind::Iso).all_passed();
    os << "  phi : A #_f H -> A (x) H passes the full Hopf isomorphism predicate: "
       << (iso ? "yes" : "NO") << "\n";
    LazyTransformResult tr = transform_by_lazy_cocycle(R.system, gamma);
    bool triv = tr.system.act == trivial_action(A, C2) &&
                tr.system.cocycle == trivial_cocycle(A, C2);
    os << "  transforming by u = gamma yields the trivial system: " << (triv ? "yes" : "NO") << "\n";
    // second coboundary fixture: gamma = unit . counit gives the trivial system outright
    CoboundaryResult R0 = coboundary_system(A, C2, unit_counit_map(C2.coalgebra, A.algebra));
    bool triv0 = R0.system.act == trivial_action(A, C2) && R0.phi == LinMap::identity({8});
    os << "  gamma = unit.counit: trivial system with identity phi: " << (triv0 ? "yes" : "NO") << "\n";
    // third: A = H = k[C2], gamma = id
    CoboundaryResult R1 = coboundary_system(C2, C2, LinMap::identity({2}));
    bool triv1 = R1.system.cocycle == trivial_cocycle(C2, C2);
    bool iso1 = map_predicates(R1.phi, build_crossed_product(R1.system), tensor_hopf(C2, C2),
                               MapKind::Iso)
                    .all_passed();
    os << "  k[C2]/k[C2] with gamma = id: trivial cocycle and phi iso: "
       << ((triv1 && iso1) ? "yes" : "NO") << "\n";
    return iso && triv && triv0 && triv1 && iso1;
}

struct Criterion {
    int id;
    const char* label;
    bool (*fn)(std::ostream&);
};

const Criterion kCriteria[] = {
    {1, "sigma table reproduction (alpha in {1,2}, gamma = zeta_3)", criterion1},
    {2, "crossed-system certification and exhaustive product verification", criterion2},
    {3, "factorization round trip through the canonical embeddings", criterion3},
    {4, "integrals, product integrals and Maschke consistency", criterion4},
    {5, "commutativity and involutivity criteria match the built products", criterion5},
    {6, "braiding assembly/decomposition round trips, axioms exhaustive", criterion6},
    {7, "polynomial braiding: closed form vs assembled oracle, bounded axioms", criterion7},
    {8, "cyclic pairing existence conditions vs brute force over the grid", criterion8},
    {9, "fault injection: each named axiom fails with a printed witness", criterion9},
    {10, "coboundary systems: isomorphism to the tensor product, gamma-transform", criterion10},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    bool all_ok = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail << "  exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " - " << c.label
                  << "\n"
                  << detail.str();
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
