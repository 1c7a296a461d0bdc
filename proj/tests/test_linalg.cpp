#include <catch2/catch_amalgamated.hpp>

#include "hopfcross/hopf.hpp"

using namespace hopfcross;

namespace {
struct Rng {
    uint64_t s = 0xdeadbeefcafef00dull;
    uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    Scalar scalar() { return Scalar((long)(next() % 11) - 5); }
    LinMap map(size_t rows, size_t cols) {
        LinMap f({cols}, {rows});
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) f.at(r, c) = scalar();
        return f;
    }
};
} // namespace

TEST_CASE("compose basics", "[linalg]") {
    Rng rng;
    LinMap f = rng.map(3, 3);
    CHECK(compose(LinMap::identity({3}), f) == f);
    LinMap flip = LinMap::flip(2, 2);
    CHECK(compose(flip, flip) == LinMap::identity({2, 2}));
    // the antipode preserves the counit
    HopfData H4 = sweedler_h4();
    CHECK(compose(H4.coalgebra.counit, H4.antipode) == H4.coalgebra.counit);
}

TEST_CASE("tensor maps", "[linalg]") {
    CHECK(tensor_map(LinMap::identity({2}), LinMap::identity({3})) == LinMap::identity({6}));
    Rng rng;
    LinMap f = rng.map(2, 2), g = rng.map(3, 3);
    LinMap fg = tensor_map(f, g);
    // (f (x) g)(x (x) y) = f(x) (x) g(y) on basis vectors
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Vec in(6);
            in[i * 3 + j] = Scalar(1L);
            Vec out = fg.apply(in);
            Vec fx = f.column(i), gy = g.column(j);
            for (size_t r = 0; r < 2; ++r)
                for (size_t s = 0; s < 3; ++s) CHECK(out[r * 3 + s] == fx[r] * gy[s]);
        }
    // tensor respects composition
    LinMap f2 = rng.map(2, 2), g2 = rng.map(3, 3);
    CHECK(compose(tensor_map(f2, g2), tensor_map(f, g)) ==
          tensor_map(compose(f2, f), compose(g2, g)));
}

TEST_CASE("permute factors", "[linalg]") {
    // cyclic rotation of three factors of sizes 2,3,2
    LinMap p = LinMap::permute({2, 3, 2}, {2, 0, 1});
    Vec in(12);
    in[(1 * 3 + 2) * 2 + 0] = Scalar(1L); // e_1 (x) e_2 (x) e_0
    Vec out = p.apply(in);
    // output factors: (factor2, factor0, factor1) = (e_0, e_1, e_2)
    CHECK(out[(0 * 2 + 1) * 3 + 2] == Scalar(1L));
}

TEST_CASE("solve", "[linalg]") {
    LinMap zero({3}, {3});
    SolveResult r = solve(zero, Vec(3));
    CHECK(r.particular.has_value());
    CHECK(r.nullspace_basis.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(r.nullspace_basis[i] == basis_vec(3, i));

    LinMap id = LinMap::identity({3});
    SolveResult r2 = solve(id, basis_vec(3, 0));
    REQUIRE(r2.particular.has_value());
    CHECK(*r2.particular == basis_vec(3, 0));
    CHECK(r2.nullspace_basis.empty());

    // inconsistent system has no particular solution
    LinMap stack({1}, {2});
    stack.at(0, 0) = Scalar(1L);
    stack.at(1, 0) = Scalar(1L);
    Vec b{Scalar(1L), Scalar(2L)};
    CHECK_FALSE(solve(stack, b).particular.has_value());

    // exactness and rank-nullity on random systems
    Rng rng;
    for (int trial = 0; trial < 12; ++trial) {
        LinMap M = rng.map(4, 5);
        Vec x(5);
        for (auto& c : x) c = rng.scalar();
        Vec b2 = M.apply(x);
        SolveResult rr = solve(M, b2);
        REQUIRE(rr.particular.has_value());
        CHECK(vec_eq(M.apply(*rr.particular), b2));
        for (const auto& v : rr.nullspace_basis) CHECK(vec_is_zero(M.apply(v)));
        CHECK(rank_of(M) + rr.nullspace_basis.size() == 5);
    }
}

TEST_CASE("invert", "[linalg]") {
    CHECK(invert(LinMap::identity({4})) == LinMap::identity({4}));
    LinMap flip = LinMap::flip(2, 3);
    CHECK(compose(invert(flip), flip) == LinMap::identity({2, 3}));
    CHECK_THROWS_AS(invert(LinMap({2}, {2})), Error);
    Rng rng;
    for (int trial = 0; trial < 8; ++trial) {
        LinMap M = rng.map(4, 4);
        for (size_t i = 0; i < 4; ++i) M.at(i, i) += Scalar(100L); // diagonally dominant
        CHECK(compose(invert(M), M) == LinMap::identity({4}));
    }
}

TEST_CASE("convolution algebra", "[linalg]") {
    HopfData H4 = sweedler_h4();
    HopfData C3 = cyclic_group_algebra(3);
    LinMap eta_eps = unit_counit_map(H4.coalgebra, H4.algebra);
    Rng rng;
    LinMap f = rng.map(4, 4);
    CHECK(convolution(f, eta_eps, H4.coalgebra, H4.algebra) == f);
    CHECK(convolution(eta_eps, f, H4.coalgebra, H4.algebra) == f);
    // id * S = unit . counit
    CHECK(convolution(LinMap::identity({3}), C3.antipode, C3.coalgebra, C3.algebra) ==
          unit_counit_map(C3.coalgebra, C3.algebra));
    CHECK(convolution(LinMap::identity({4}), H4.antipode, H4.coalgebra, H4.algebra) == eta_eps);
    // associativity on random triples
    for (int trial = 0; trial < 8; ++trial) {
        LinMap a = rng.map(4, 4), b = rng.map(4, 4), c = rng.map(4, 4);
        CHECK(convolution(convolution(a, b, H4.coalgebra, H4.algebra), c, H4.coalgebra, H4.algebra) ==
              convolution(a, convolution(b, c, H4.coalgebra, H4.algebra), H4.coalgebra, H4.algebra));
    }
}

TEST_CASE("convolution inverses", "[linalg]") {
    HopfData H4 = sweedler_h4();
    LinMap eta_eps = unit_counit_map(H4.coalgebra, H4.algebra);
    CHECK(convolution_inverse(eta_eps, H4.coalgebra, H4.algebra) == eta_eps);
    // the convolution inverse of the identity is the antipode: S(x) = -gx
    LinMap S = convolution_inverse(LinMap::identity({4}), H4.coalgebra, H4.algebra);
    CHECK(S == H4.antipode);
    CHECK(S.at(3, 2) == Scalar(-1L));
    // for a coalgebra map gamma the inverse is S_A . gamma
    HopfData C2 = cyclic_group_algebra(2, "s");
    LinMap gamma({2}, {4});
    gamma.at(0, 0) = Scalar(1L);
    gamma.at(1, 1) = Scalar(1L); // s -> g
    CHECK(convolution_inverse(gamma, C2.coalgebra, H4.algebra) == compose(H4.antipode, gamma));
    // a map with no convolution inverse: the zero map
    CHECK_THROWS_AS(convolution_inverse(LinMap({2}, {4}), C2.coalgebra, H4.algebra), Error);
}
