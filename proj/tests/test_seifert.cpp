#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidsig/goeritz.hpp"
#include "braidsig/seifert.hpp"

using namespace braidsig;

TEST_CASE("trefoil Seifert matrix") {
    const SeifertData s = seifert_matrix(BraidWord(2, {1, 1, 1}));
    const IntMatrix expect = {{-1, 1}, {0, -1}};
    CHECK(s.v == expect);
    REQUIRE(s.basis.size() == 2);
    CHECK(s.basis[0].column == 1);
    CHECK(s.basis[0].t1 == 0);
    CHECK(s.basis[0].t2 == 1);
    const InvariantReport r = signature_seifert(BraidWord(2, {1, 1, 1}));
    CHECK(r.sigma == -2);
    CHECK(r.det == 3);
}

TEST_CASE("empty word gives the empty matrix") {
    CHECK(seifert_matrix(BraidWord(3, {})).v.empty());
}

TEST_CASE("dimension equals the first Betti number") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int b = 2 + static_cast<int>(rng() % 5);
        const int l = static_cast<int>(rng() % 12);
        std::vector<int> letters(static_cast<std::size_t>(l));
        for (int& k : letters) k = 1 + static_cast<int>(rng() % static_cast<unsigned>(b - 1));
        const BraidWord w(b, letters);
        CHECK(static_cast<int>(seifert_matrix(w).v.size()) == betti(w));
    }
    // (a1 a2)^4 spans a 6-dimensional form
    std::vector<int> t34;
    for (int i = 0; i < 4; ++i) { t34.push_back(1); t34.push_back(2); }
    CHECK(seifert_matrix(BraidWord(3, t34)).v.size() == 6);
}

TEST_CASE("torus closures through the Seifert pipeline") {
    for (int n = 1; n <= 8; ++n)
        CHECK(signature_seifert(BraidWord(2, std::vector<int>(n + 1, 1))).sigma == -n);
    std::vector<int> t37;
    for (int i = 0; i < 7; ++i) { t37.push_back(1); t37.push_back(2); }
    const InvariantReport r = signature_seifert(BraidWord(3, t37));
    CHECK(r.sigma == -8);
    CHECK(r.det == 1);
    CHECK(signature_seifert(family({FamilyName::alpha, 1, 1})).sigma == -6);
}

TEST_CASE("split words give block-diagonal forms") {
    const SeifertData s = seifert_matrix(BraidWord(4, {1, 1, 3, 3}));
    REQUIRE(s.v.size() == 2);
    CHECK(s.v[0][1] == 0);
    CHECK(s.v[1][0] == 0);
    CHECK(s.basis[0].column == 1);
    CHECK(s.basis[1].column == 3);
    // reported det of a split union is 0, nullity counts the extra parts
    const InvariantReport r = signature_seifert(BraidWord(4, {1, 1, 3, 3}));
    CHECK(r.det == 0);
    CHECK(r.sigma == -2);
    CHECK(r.nullity == 1);
}

TEST_CASE("symmetrized form invariants") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 150; ++t) {
        const int b = 2 + static_cast<int>(rng() % 4);
        const int l = static_cast<int>(rng() % 11);
        std::vector<int> letters(static_cast<std::size_t>(l));
        for (int& k : letters) k = 1 + static_cast<int>(rng() % static_cast<unsigned>(b - 1));
        const BraidWord w(b, letters);
        const IntMatrix s = symmetrized(seifert_matrix(w).v);
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(s[i][i] == -2);
        const SignatureTriple tri = signature_triple(s);
        const int b1 = betti(w);
        CHECK(tri.sigma() <= b1);
        CHECK(-b1 <= tri.sigma());
        CHECK(tri.zeros + static_cast<std::size_t>(std::abs(tri.sigma())) <=
              static_cast<std::size_t>(b1));
        // cyclic rotation preserves sigma and det
        const BraidWord v = rotate(w, rng() % (w.length() + 1));
        CHECK(signature_seifert(v).sigma == tri.sigma());
        CHECK(signature_seifert(v).det == signature_seifert(w).det);
    }
}

TEST_CASE("full twists shift the signature by eight") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 25; ++t) {
        const int l = static_cast<int>(rng() % 8);
        std::vector<int> letters(static_cast<std::size_t>(l));
        for (int& k : letters) k = 1 + static_cast<int>(rng() % 2u);
        const BraidWord w(3, letters);
        const long long s0 = signature_seifert(w).sigma;
        for (int k = 1; k <= 2; ++k) {
            const long long sk = signature_seifert(prepend_half_twists(w, 4 * k)).sigma;
            CHECK(-sk == -s0 + 8 * k);
        }
    }
}

TEST_CASE("torus presentations on different strand counts agree") {
    // T(n,m) and T(m,n) close to the same link from unrelated diagrams
    const std::pair<FamilySpec, FamilySpec> pairs[] = {
        {{FamilyName::torus, 4, 3}, {FamilyName::torus, 3, 4}},
        {{FamilyName::torus, 5, 2}, {FamilyName::torus, 2, 5}},
        {{FamilyName::torus, 5, 4}, {FamilyName::torus, 4, 5}},
        {{FamilyName::torus, 4, 6}, {FamilyName::torus, 6, 4}},
    };
    for (const auto& [a, b] : pairs) {
        const InvariantReport ra = signature_gl(family(a));
        const InvariantReport rb = signature_seifert(family(b));
        CHECK(ra.sigma == rb.sigma);
        CHECK(ra.det == rb.det);
        CHECK(ra.b1 == rb.b1);
        CHECK(ra.components == rb.components);
    }
    // known values for the (4,5) torus knot
    const InvariantReport t45 = signature_gl(family({FamilyName::torus, 4, 5}));
    CHECK(t45.sigma == -8);
    CHECK(t45.det == 5);
    CHECK(t45.b1 == 12);
}

TEST_CASE("pipeline agreement sampled on 5 to 8 strands") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        const int b = 5 + static_cast<int>(rng() % 4u);
        const int l = static_cast<int>(rng() % 15);
        std::vector<int> letters(static_cast<std::size_t>(l));
        for (int& k : letters) k = 1 + static_cast<int>(rng() % static_cast<unsigned>(b - 1));
        const BraidWord w(b, letters);
        const InvariantReport g = signature_gl(w);
        const InvariantReport s = signature_seifert(w);
        REQUIRE(g.sigma == s.sigma);
        REQUIRE(g.det == s.det);
        REQUIRE(g.nullity == s.nullity);
    }
}

TEST_CASE("pipeline agreement on an exhaustive small range") {
    for (int b = 2; b <= 4; ++b) {
        std::vector<int> odo;
        for (int l = 0; l <= 7; ++l) {
            odo.assign(static_cast<std::size_t>(l), 1);
            while (true) {
                const BraidWord w(b, odo);
                const InvariantReport g = signature_gl(w);
                const InvariantReport s = signature_seifert(w);
                REQUIRE(g.sigma == s.sigma);
                REQUIRE(g.det == s.det);
                REQUIRE(g.nullity == s.nullity);
                REQUIRE(g.b1 == s.b1);
                int i = l - 1;
                while (i >= 0 && odo[static_cast<std::size_t>(i)] == b - 1) {
                    odo[static_cast<std::size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++odo[static_cast<std::size_t>(i)];
            }
        }
    }
}
