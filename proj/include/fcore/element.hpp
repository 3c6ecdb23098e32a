#ifndef FCORE_ELEMENT_HPP
#define FCORE_ELEMENT_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fcore/words.hpp"

namespace fcore {

/// An element of Thompson's group F as a pair of full finite binary trees
/// with equal leaf counts. Branches pair up by position: the i-th branch of
/// the domain tree maps to the i-th branch of the range tree. Composition
/// is left to right throughout.
class TreeDiagram {
public:
    TreeDiagram(Tree domain, Tree range);

    static TreeDiagram identity() { return TreeDiagram(Tree::leaf(), Tree::leaf()); }
    static TreeDiagram from_branch_pairs(const std::vector<std::pair<Word, Word>>& pairs);

    const Tree& domain_tree() const { return domain_; }
    const Tree& range_tree() const { return range_; }

    std::size_t leaf_count() const { return domain_.leaf_count(); }
    std::vector<std::pair<Word, Word>> branch_pairs() const;

    bool is_reduced() const;
    bool is_identity() const { return domain_.is_leaf() && range_.is_leaf(); }

    /// The unique reduced tree-diagram equivalent to this one.
    TreeDiagram reduced() const;

    TreeDiagram inverse() const { return TreeDiagram(range_, domain_); }

    /// Left-to-right product: the result acts as *this followed by rhs.
    /// Always returns the reduced representative.
    TreeDiagram operator*(const TreeDiagram& rhs) const;

    /// Structural equality of the raw tree pair (compare reduced forms to
    /// test equality in F).
    friend bool operator==(const TreeDiagram& a, const TreeDiagram& b) {
        return a.domain_ == b.domain_ && a.range_ == b.range_;
    }
    friend bool operator!=(const TreeDiagram& a, const TreeDiagram& b) { return !(a == b); }

private:
    Tree domain_;
    Tree range_;
};

/// The reduced tree-diagram of the generator x_n; values are memoized.
const TreeDiagram& make_x(std::size_t n);

/// Image of a dyadic fraction under the map.
Dyadic evaluate(const TreeDiagram& f, const Dyadic& alpha);

/// log2 of the right slope at alpha (at 0+ when alpha is absent).
int log_slope_right(const TreeDiagram& f, const std::optional<Dyadic>& alpha = std::nullopt);

/// log2 of the left slope at alpha (at 1- when alpha is absent).
int log_slope_left(const TreeDiagram& f, const std::optional<Dyadic>& alpha = std::nullopt);

/// Image under the abelianization map: log2 slopes at 0+ and 1-.
struct AbelianImage {
    int at_zero;
    int at_one;

    friend bool operator==(const AbelianImage& a, const AbelianImage& b) {
        return a.at_zero == b.at_zero && a.at_one == b.at_one;
    }
};

AbelianImage abelianize(const TreeDiagram& f);

/// The [u]-copy of g: acts as g inside the dyadic interval of u and as the
/// identity elsewhere. Requires g reduced; the result is reduced.
TreeDiagram copy_in(const Word& u, const TreeDiagram& g);

/// g ⊕ h: acts as a copy of g on [0] and as a copy of h on [1].
TreeDiagram direct_sum(const TreeDiagram& g, const TreeDiagram& h);

/// The 2-tuples associated with consecutive pairs of branches: for pairs
/// (u_i -> v_i), i = 1..n, the n-1 tuples
/// (ell1(u_i) - ell1(v_i), ell0(u_{i+1}) - ell0(v_{i+1})).
std::vector<std::pair<long, long>> tuple_sequence(const TreeDiagram& d);

/// True iff f maps the dyadic interval of u linearly onto the interval of v,
/// i.e. some tree-diagram of f has the pair of branches u -> v.
bool has_branch_pair(const TreeDiagram& f, const Word& u, const Word& v);

/// One letter of a word in the generators: x_{index}^{exponent}.
struct GenLetter {
    std::size_t index;
    int exponent; // +1 or -1
};

/// Parses whitespace-separated tokens x0 x1 x2 ... (uppercase X = inverse).
std::vector<GenLetter> parse_generator_word(std::string_view text);

/// Multiplies out a generator word into a reduced tree-diagram.
TreeDiagram to_diagram(const std::vector<GenLetter>& letters);

} // namespace fcore

#endif
