#include <doctest.h>

#include "fcore/core.hpp"
#include "fcore/jones.hpp"
#include "fcore/rewriting.hpp"
#include "test_helpers.hpp"

using namespace fcore;

TEST_CASE("prime parameter validation") {
    CHECK_NOTHROW(JonesPrime(2));
    CHECK_NOTHROW(JonesPrime(7));
    CHECK_THROWS(JonesPrime(1));
    CHECK_THROWS(JonesPrime(4));
    CHECK_THROWS(JonesPrime(9));
}

TEST_CASE("digit statistics") {
    CHECK(sum_p("101", JonesPrime(2)) == 0);
    CHECK(sum_p("", JonesPrime(3)) == 0);
    CHECK(sum_p("1011", JonesPrime(3)) == 0);
    CHECK(suf_p("101", JonesPrime(2)) == 1);
    CHECK(suf_p("100", JonesPrime(2)) == 0);
    CHECK(suf_p("0111", JonesPrime(3)) == 0);

    // sum is well-defined on dyadic fractions: trailing zeros carry nothing
    testing::Rng rng(139);
    for (int i = 0; i < 50; ++i) {
        Dyadic d = testing::random_dyadic(rng, 10);
        Word padded = d.word() + Word(rng() % 4, '0');
        CHECK(sum_p(padded, JonesPrime(3)) == sum_p(d.word(), JonesPrime(3)));
    }
}

TEST_CASE("the digit-sum automaton") {
    const Automaton a2 = a_sum(JonesPrime(2));
    CHECK(a2.vertex_count() == 2);
    CHECK(a2.child(0, '0') == 0);
    CHECK(a2.child(0, '1') == 1);
    CHECK(a2.child(1, '0') == 1);
    CHECK(a2.child(1, '1') == 0);

    const Automaton a3 = a_sum(JonesPrime(3));
    CHECK(a3.read_path("101") == a3.vertex_by_name("a2"));
    testing::Rng rng(149);
    for (int i = 0; i < 100; ++i) {
        Word u = testing::random_word(rng, 12);
        CHECK(a3.read_path(u) == sum_p(u, JonesPrime(3)));
    }
}

TEST_CASE("the ones-suffix automaton") {
    const Automaton b2 = a_suf(JonesPrime(2));
    CHECK(b2.vertex_count() == 2);
    CHECK(b2.child(0, '0') == 0);
    CHECK(b2.child(1, '0') == 0);

    const Automaton b3 = a_suf(JonesPrime(3));
    CHECK(b3.read_path("0111") == b3.vertex_by_name("b0"));
    testing::Rng rng(151);
    for (int i = 0; i < 100; ++i) {
        Word u = testing::random_word(rng, 12);
        CHECK(b3.read_path(u) == suf_p(u, JonesPrime(3)));
    }
}

TEST_CASE("jones generating sets") {
    const auto gens2 = jones_generators(JonesPrime(2));
    REQUIRE(gens2.size() == 3);
    CHECK(gens2[0] == make_x(0) * make_x(1));
    CHECK(gens2[1] == make_x(1) * make_x(2));
    CHECK(gens2[2] == make_x(2) * make_x(3));

    for (unsigned pv : {2u, 3u}) {
        const JonesPrime p(pv);
        const Automaton sum = a_sum(p);
        const Automaton suf = a_suf(p);
        for (const TreeDiagram& g : jones_generators(p)) {
            CHECK(accepts(sum, g));
            CHECK(accepts(suf, g));
        }
    }
}

TEST_CASE("acceptance by the two digit automata agrees") {
    testing::Rng rng(157);
    for (unsigned pv : {2u, 3u}) {
        const JonesPrime p(pv);
        const Automaton sum = a_sum(p);
        const Automaton suf = a_suf(p);
        int accepted = 0;
        for (int i = 0; i < 200; ++i) {
            TreeDiagram d = testing::random_reduced_diagram(rng, 8);
            const bool s = accepts(sum, d);
            CHECK(s == accepts(suf, d));
            if (s) ++accepted;
        }
        CHECK(accepted >= 1); // the identity at least
    }
}

TEST_CASE("accepted elements preserve the digit sum of dyadics") {
    testing::Rng rng(163);
    const JonesPrime two(2);
    const Automaton sum = a_sum(two);
    const auto gens = jones_generators(two);
    for (int i = 0; i < 100; ++i) {
        TreeDiagram f = TreeDiagram::identity();
        for (int k = 0; k < 8; ++k) {
            const TreeDiagram& g = gens[rng() % gens.size()];
            f = rng() % 2 ? f * g : f * g.inverse();
        }
        REQUIRE(accepts(sum, f));
        Dyadic x = testing::random_dyadic(rng, 10);
        CHECK(sum_p(evaluate(f, x).word(), two) == sum_p(x.word(), two));
    }
}

TEST_CASE("pair-of-branches criterion") {
    const JonesPrime two(2);
    CHECK(jones_pair_exists("100", "010", two));
    CHECK_FALSE(jones_pair_exists("1", "11", two)); // sums 1 and 0
    CHECK(jones_pair_exists("0110", "0110", two));

    // an explicit element witnesses the positive case
    const auto gens = jones_generators(two);
    std::vector<TreeDiagram> frontier{TreeDiagram::identity()};
    bool found = false;
    for (int len = 0; len < 4 && !found; ++len) {
        std::vector<TreeDiagram> next;
        for (const TreeDiagram& w : frontier)
            for (const TreeDiagram& g : gens)
                for (const TreeDiagram& f : {w * g, w * g.inverse()}) {
                    if (has_branch_pair(f, "100", "010")) found = true;
                    next.push_back(f);
                }
        frontier = std::move(next);
    }
    CHECK(found);
}

TEST_CASE("pair criterion agrees with the folded core") {
    // independent routes: digit statistics vs the folded core automaton
    testing::Rng rng(167);
    for (unsigned pv : {2u, 3u}) {
        const JonesPrime p(pv);
        const Automaton core = build_core(jones_generators(p));
        REQUIRE(core.is_full());
        for (int i = 0; i < 200; ++i) {
            Word u = testing::random_word(rng, 9);
            Word v = testing::random_word(rng, 9);
            CHECK(jones_pair_exists(u, v, p) == (core.read_path(u) == core.read_path(v)));
        }
    }
}

TEST_CASE("pair criterion composes like an equivalence") {
    testing::Rng rng(173);
    const JonesPrime three(3);
    for (int i = 0; i < 200; ++i) {
        Word u = testing::random_word(rng, 8);
        Word v = testing::random_word(rng, 8);
        Word w = testing::random_word(rng, 8);
        CHECK(jones_pair_exists(u, u, three));
        CHECK(jones_pair_exists(u, v, three) == jones_pair_exists(v, u, three));
        if (jones_pair_exists(u, v, three) && jones_pair_exists(v, w, three))
            CHECK(jones_pair_exists(u, w, three));
    }
}

TEST_CASE("core structure verification") {
    for (unsigned pv : {2u, 3u, 5u}) {
        const JonesCoreReport r = verify_jones_core(JonesPrime(pv));
        CHECK(r.ok());
        CHECK(r.vertex_count == pv * pv + pv + 2);
        CHECK(r.census == std::array<std::size_t, 4>{1, 1, pv, pv * pv});
        CHECK(r.full);
        CHECK(r.morphism_onto_sum);
        CHECK(r.morphism_onto_suf);
        CHECK(r.to_text().find("ok") != std::string::npos);
    }
}

TEST_CASE("left-zero and cyclic structure of the associated semigroups") {
    for (unsigned pv : {2u, 3u}) {
        const JonesPrime p(pv);
        const SemigroupPresentation psum = presentation_of(a_sum(p));
        // xy = x for all letters
        for (std::uint32_t x = 0; x < pv; ++x)
            for (std::uint32_t y = 0; y < pv; ++y)
                CHECK(words_equal(psum, {x, y}, {x}).kind == VerdictKind::Yes);

        const SemigroupPresentation psuf = presentation_of(a_suf(p));
        // b_0^p w = w
        testing::Rng rng(179 + pv);
        for (int i = 0; i < 10; ++i) {
            LetterWord w;
            for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
                w.push_back(static_cast<std::uint32_t>(rng() % pv));
            LetterWord padded(pv, 0);
            padded.insert(padded.end(), w.begin(), w.end());
            CHECK(words_equal(psuf, padded, w).kind == VerdictKind::Yes);
        }
    }
}

TEST_CASE("dyadics with equal digit sum lie in one orbit") {
    testing::Rng rng(181);
    const JonesPrime two(2);
    const Automaton core = build_core(jones_generators(two));
    const auto gens = jones_generators(two);
    int connected = 0;
    for (int i = 0; i < 200 && connected < 12; ++i) {
        Dyadic x = testing::random_dyadic(rng, 5);
        Dyadic y = testing::random_dyadic(rng, 5);
        if (x == y || sum_p(x.word(), two) != sum_p(y.word(), two)) continue;
        ++connected;
        // the branch-pair criterion puts them in one orbit
        Word u = x.word() + '0';
        Word v = y.word() + '0';
        CHECK(jones_pair_exists(u, v, two));
        CHECK(core.read_path(u) == core.read_path(v));
        // and an explicit connecting element turns up by bounded search
        bool found = false;
        std::vector<TreeDiagram> frontier{TreeDiagram::identity()};
        for (int len = 1; len <= 5 && !found; ++len) {
            std::vector<TreeDiagram> next;
            for (const TreeDiagram& w : frontier) {
                for (const TreeDiagram& g : gens)
                    for (const TreeDiagram& f : {w * g, w * g.inverse()}) {
                        if (evaluate(f, x) == y) found = true;
                        next.push_back(f);
                    }
                if (found) break;
            }
            frontier = std::move(next);
        }
        CHECK(found);
    }
    CHECK(connected == 12);
}
