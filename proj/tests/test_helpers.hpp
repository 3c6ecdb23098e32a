#ifndef FCORE_TEST_HELPERS_HPP
#define FCORE_TEST_HELPERS_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "fcore/element.hpp"
#include "fcore/words.hpp"

namespace fcore::testing {

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, std::size_t max_len, std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('0' + bit(rng));
    return w;
}

inline Dyadic random_dyadic(Rng& rng, std::size_t max_len) {
    Word w = random_word(rng, max_len > 0 ? max_len - 1 : 0);
    std::uniform_int_distribution<std::size_t> at(0, w.size());
    w.insert(w.begin() + static_cast<long>(at(rng)), '1'); // guarantee a one
    return Dyadic(w);
}

inline Tree random_tree(Rng& rng, std::size_t leaves) {
    if (leaves <= 1) return Tree::leaf();
    std::uniform_int_distribution<std::size_t> split(1, leaves - 1);
    std::size_t left = split(rng);
    return Tree::caret(random_tree(rng, left), random_tree(rng, leaves - left));
}

inline std::vector<GenLetter> random_generator_word(Rng& rng, std::size_t max_len,
                                                    std::size_t max_index = 4) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> idx(0, max_index);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<GenLetter> w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.push_back({idx(rng), sign(rng) ? 1 : -1});
    return w;
}

inline TreeDiagram random_element(Rng& rng, std::size_t max_len, std::size_t max_index = 4) {
    return to_diagram(random_generator_word(rng, max_len, max_index));
}

inline TreeDiagram random_reduced_diagram(Rng& rng, std::size_t max_leaves) {
    std::uniform_int_distribution<std::size_t> leaves(1, max_leaves);
    std::size_t n = leaves(rng);
    return TreeDiagram(random_tree(rng, n), random_tree(rng, n)).reduced();
}

/// Equivalent unreduced diagram: inserts k common carets at random leaves.
inline TreeDiagram insert_common_carets(Rng& rng, const TreeDiagram& d, std::size_t k) {
    Tree dom = d.domain_tree();
    Tree ran = d.range_tree();
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> at(0, dom.leaf_count() - 1);
        std::size_t leaf = at(rng);
        Tree caret = Tree::caret(Tree::leaf(), Tree::leaf());
        dom = dom.with_leaf_replaced(leaf, caret);
        ran = ran.with_leaf_replaced(leaf, caret);
    }
    return TreeDiagram(dom, ran);
}

/// Exact rational with a power-of-two denominator: value = num / 2^exp.
struct Rational {
    long long num;
    unsigned exp;

    static Rational of(const Dyadic& d) {
        return {static_cast<long long>(d.numerator()),
                static_cast<unsigned>(d.denominator_exponent())};
    }

    Rational normalized() const {
        Rational r = *this;
        while (r.exp > 0 && r.num % 2 == 0) {
            r.num /= 2;
            --r.exp;
        }
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        const Rational x = a.normalized(), y = b.normalized();
        return x.num == y.num && x.exp == y.exp;
    }
};

/// Independent evaluation oracle: interprets the diagram as a piecewise
/// linear map on exact rationals, never touching the digit-wise path.
inline Rational oracle_evaluate(const TreeDiagram& f, const Rational& x) {
    const auto& dom = f.domain_tree().branches();
    const auto& ran = f.range_tree().branches();
    for (std::size_t i = 0; i < dom.size(); ++i) {
        // the interval of branch u is [.u, .u + 2^-|u|]
        long long unum = 0;
        for (char c : dom[i]) unum = unum * 2 + (c - '0');
        const unsigned uexp = static_cast<unsigned>(dom[i].size());
        // x in [unum/2^uexp, (unum+1)/2^uexp]?
        // compare x*2^uexp with unum over a common denominator
        const long long lhs = x.num * (1ll << uexp);
        const long long lo = unum * (1ll << x.exp);
        const long long hi = (unum + 1) * (1ll << x.exp);
        if (lhs < lo || lhs > hi) continue;
        // maps linearly onto [.v, .v + 2^-|v|] with slope 2^(uexp - vexp)
        long long vnum = 0;
        for (char c : ran[i]) vnum = vnum * 2 + (c - '0');
        const unsigned vexp = static_cast<unsigned>(ran[i].size());
        // f(x) = vnum/2^vexp + (x - unum/2^uexp) * 2^(uexp-vexp)
        //      = (vnum*2^(x.exp+uexp-vexp) + (x.num*2^uexp - unum*2^x.exp)*2^(uexp-vexp))
        //        / 2^(x.exp+uexp)  -- keep everything over 2^(x.exp+vexp)
        const long long offset = lhs - lo; // (x - .u) * 2^(x.exp + uexp)
        return Rational{vnum * (1ll << x.exp) + offset, x.exp + vexp};
    }
    return x; // unreachable for complete trees
}

} // namespace fcore::testing

#endif
