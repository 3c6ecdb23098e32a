#include <doctest.h>

#include "fcore/words.hpp"
#include "test_helpers.hpp"

using namespace fcore;

TEST_CASE("trailing digit counts") {
    CHECK(ell0("") == 0);
    CHECK(ell0("0100") == 2);
    CHECK(ell0("01") == 0);
    CHECK(ell1("01") == 1);
    CHECK(ell1("00") == 0);
    CHECK(ell1("111") == 3);
}

TEST_CASE("at most one trailing count is nonzero") {
    testing::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Word w = testing::random_word(rng, 16, 1);
        CHECK((ell0(w) == 0 || ell1(w) == 0));
    }
}

TEST_CASE("word text spelling") {
    CHECK(word_from_text("e").empty());
    CHECK(word_from_text("0101") == "0101");
    CHECK(word_to_text("") == "e");
    CHECK_THROWS_AS(word_from_text("012"), ParseError);
}

TEST_CASE("dyadic canonicalization") {
    CHECK(Dyadic("0100").word() == "01");
    CHECK(Dyadic("1").word() == "1");
    CHECK(Dyadic("01").numerator() == 1);
    CHECK(Dyadic("01").denominator_exponent() == 2);
    CHECK_THROWS(Dyadic("000"));
    CHECK_THROWS(Dyadic(""));
}

TEST_CASE("branches of small trees") {
    const Tree caret = Tree::caret(Tree::leaf(), Tree::leaf());
    CHECK(caret.branches() == std::vector<Word>{"0", "1"});
    CHECK(Tree::leaf().branches() == std::vector<Word>{""});

    // left tree of the first generator
    const Tree t = Tree::from_branches({"00", "01", "1"});
    CHECK(t.branches() == std::vector<Word>{"00", "01", "1"});
    CHECK(t.leaf_count() == 3);
    CHECK(t.caret_count() == 2);
}

TEST_CASE("from_branches rejects invalid sets") {
    CHECK_THROWS(Tree::from_branches({"0"}));            // incomplete
    CHECK_THROWS(Tree::from_branches({"0", "10"}));      // incomplete
    CHECK_THROWS(Tree::from_branches({"1", "0"}));       // out of order
    CHECK_THROWS(Tree::from_branches({"0", "1", "11"})); // overlap
}

TEST_CASE("branch order is lexicographic") {
    testing::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Tree t = testing::random_tree(rng, 1 + i % 12);
        auto sorted = t.branches();
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == t.branches());
    }
}

TEST_CASE("caret count identities") {
    CHECK(caret_count_identity_check(Tree::from_branches({"00", "01", "1"})));
    CHECK(caret_count_identity_check(Tree::leaf()));

    testing::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        Tree t = testing::random_tree(rng, 1 + i % 15);
        // independent caret counter: internal nodes of the preorder shape
        std::size_t carets = 0;
        for (char c : t.shape())
            if (c) ++carets;
        CHECK(carets == t.leaf_count() - 1);
        CHECK(caret_count_identity_check(t));
    }
}

TEST_CASE("tree surgery round trips") {
    testing::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        Tree a = testing::random_tree(rng, 1 + i % 8);
        Tree b = testing::random_tree(rng, 1 + (i * 7) % 8);
        Tree m = a.merged_with(b);
        // the merge contains both as rooted subtrees: every branch of a
        // extends to branches of m
        for (const Word& u : a.branches()) CHECK_NOTHROW(m.subtree_at(u));
        for (const Word& u : b.branches()) CHECK_NOTHROW(m.subtree_at(u));
        CHECK(m.merged_with(a) == m);
        CHECK(m.merged_with(b) == m);
    }
}

TEST_CASE("minimal tree with branch") {
    CHECK(Tree::minimal_with_branch("").is_leaf());
    CHECK(Tree::minimal_with_branch("01").branches() == std::vector<Word>{"00", "01", "1"});
    CHECK(Tree::minimal_with_branch("10").branches() == std::vector<Word>{"0", "10", "11"});
}
