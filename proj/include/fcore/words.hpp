#ifndef FCORE_WORDS_HPP
#define FCORE_WORDS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fcore/errors.hpp"

namespace fcore {

/// A finite binary word: a string over the characters '0' and '1'.
/// The empty word is the monoid identity; it is spelled "e" in textual
/// interfaces.
using Word = std::string;

bool is_binary_word(std::string_view s);

/// Parses a word from its textual spelling ("e" denotes the empty word).
Word word_from_text(std::string_view s);
std::string word_to_text(const Word& w);

/// Length of the longest suffix of zeros.
std::size_t ell0(const Word& u);

/// Length of the longest suffix of ones.
std::size_t ell1(const Word& u);

/// A dyadic fraction in (0,1), stored as the canonical binary word of its
/// fractional expansion: nonempty, trailing zeros stripped (last digit '1').
class Dyadic {
public:
    /// Canonicalizes by stripping trailing zeros; rejects words with no '1'
    /// (value 0) since the value must lie strictly between 0 and 1.
    explicit Dyadic(Word digits);

    const Word& word() const { return word_; }

    /// Exact value as numerator / 2^exponent.
    unsigned long long numerator() const;
    std::size_t denominator_exponent() const { return word_.size(); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.word_ == b.word_; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

private:
    Word word_;
};

/// A full finite binary tree: every vertex has zero or two children.
/// Stored as the preorder shape (true = caret, false = leaf) together with
/// the cached left-to-right branch list; the branch order is what pairs
/// leaves between two trees.
class Tree {
public:
    /// The single-vertex tree.
    Tree();

    static Tree leaf() { return Tree(); }
    static Tree caret(const Tree& left, const Tree& right);

    /// Builds the tree whose branch set is the given left-to-right list;
    /// the list must be a maximal prefix-free set of binary words.
    static Tree from_branches(const std::vector<Word>& branches);

    /// The smallest tree having u as a branch.
    static Tree minimal_with_branch(const Word& u);

    bool is_leaf() const { return shape_.size() == 1; }
    std::size_t leaf_count() const { return branches_.size(); }
    std::size_t caret_count() const { return (shape_.size() - 1) / 2; }

    const std::vector<Word>& branches() const { return branches_; }

    /// Preorder shape encoding; 1 = caret, 0 = leaf.
    const std::vector<char>& shape() const { return shape_; }

    /// Subtree rooted at the end of path u; u must lead to a vertex.
    Tree subtree_at(const Word& u) const;

    /// Returns a copy with the given leaf (by left-to-right index) replaced
    /// by the tree t.
    Tree with_leaf_replaced(std::size_t leaf_index, const Tree& t) const;

    /// Returns a copy where each leaf, in order, is replaced by the
    /// corresponding entry of pieces (which must have leaf_count entries).
    Tree with_leaves_replaced(const std::vector<Tree>& pieces) const;

    /// The minimal common refinement: the smallest tree containing both
    /// this tree and other as rooted subtrees.
    Tree merged_with(const Tree& other) const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.shape_ == b.shape_; }
    friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

private:
    explicit Tree(std::vector<char> shape);

    std::size_t subtree_end(std::size_t begin) const;
    void compute_branches();

    std::vector<char> shape_;
    std::vector<Word> branches_;
};

/// Checks the caret-count identities: the sums of trailing-one and
/// trailing-zero lengths over all branches both equal leaf_count - 1.
bool caret_count_identity_check(const Tree& t);

} // namespace fcore

#endif
