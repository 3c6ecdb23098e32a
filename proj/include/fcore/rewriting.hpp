#ifndef FCORE_REWRITING_HPP
#define FCORE_REWRITING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcore/automaton.hpp"

namespace fcore {

/// A word over the vertex alphabet of an automaton (letters are vertex
/// indices); possibly empty.
using LetterWord = std::vector<std::uint32_t>;

/// The semigroup presentation associated with a tree-automaton: the alphabet
/// is its vertex set and there is one relation a = bc per inner vertex a
/// with children b, c.
struct SemigroupPresentation {
    std::vector<std::string> letters;

    struct Relation {
        std::uint32_t lhs;                 // a
        std::array<std::uint32_t, 2> rhs;  // b, c
    };
    std::vector<Relation> relations;

    std::string spell(const LetterWord& w) const;
};

SemigroupPresentation presentation_of(const Automaton& a);

/// A minimal tree associated with an automaton: a labeled binary tree, grown
/// from the root, in which no two distinct inner vertices share a label and
/// every leaf sharing a label with an inner vertex is expandable. Built with
/// a deterministic leftmost-first expansion, so its shape is a function of
/// the automaton.
struct MinimalTree {
    struct Node {
        std::uint32_t label; // automaton vertex
        Word path;
        std::int32_t child[2] = {-1, -1};
    };
    std::vector<Node> nodes; // node 0 is the root

    bool is_tree_leaf(std::size_t i) const { return nodes[i].child[0] < 0; }

    /// Paths of all vertices in the order the tree was grown.
    std::vector<Word> paths() const;

    /// The set of labeled carets (father, left child, right child).
    std::vector<std::array<std::uint32_t, 3>> labeled_carets() const;
};

MinimalTree minimal_tree(const Automaton& a);

/// The pair of words associated with a readable path u: the leaf labels of
/// the minimal tree with branch u, split around u's leaf.
struct AssociatedPair {
    LetterWord before; // p_u
    LetterWord after;  // q_u
};

AssociatedPair associated_pair(const Automaton& a, const Word& u);

/// One rewriting step: at position pos, replace letter lhs by its two-letter
/// rhs (expand) or the reverse (contract).
struct RewriteStep {
    std::size_t pos;
    std::size_t relation;
    bool expand;
};

LetterWord apply_step(const SemigroupPresentation& p, const LetterWord& w, const RewriteStep& s);

/// Renders a derivation as one relation application per line.
std::string format_trace(const SemigroupPresentation& p, const LetterWord& start,
                         const std::vector<RewriteStep>& trace);

/// Three-valued outcome of a semi-decidable check.
enum class VerdictKind { Yes, No, Unknown };

struct Verdict {
    VerdictKind kind;
    std::string reason;                                 // sub-check name for No
    std::optional<std::pair<Word, Word>> witness_pair;  // separating words, when relevant
    std::uint64_t budget_spent = 0;

    // For word-problem Yes verdicts: a replayable derivation from the first
    // word to the second.
    std::vector<RewriteStep> trace;

    static Verdict yes() { return Verdict{VerdictKind::Yes, "", std::nullopt, 0, {}}; }
    static Verdict no(std::string reason) {
        return Verdict{VerdictKind::No, std::move(reason), std::nullopt, 0, {}};
    }
    static Verdict unknown(std::uint64_t spent) {
        return Verdict{VerdictKind::Unknown, "budget exhausted", std::nullopt, spent, {}};
    }

    explicit operator bool() const { return kind == VerdictKind::Yes; }
};

const char* to_string(VerdictKind k);

inline constexpr std::uint64_t kDefaultWordBudget = 100000;

/// Decides equality of two words in the semigroup of p. Empty equals only
/// empty. Sound separators (first-letter, last-letter, length-parity
/// invariants) may refute immediately; otherwise a bidirectional
/// breadth-first search over rewrites runs until the words meet (Yes, with
/// trace), both equivalence classes are exhausted (No), or the budget of
/// node expansions runs out (Unknown).
Verdict words_equal(const SemigroupPresentation& p, const LetterWord& w1, const LetterWord& w2,
                    std::uint64_t budget = kDefaultWordBudget);

/// Decides whether the automaton is isomorphic to the core of some subgroup
/// of F. Structural refutations (root a descendant of itself, a vertex
/// reachable under two different types, not reduced) come with witnesses;
/// otherwise every coincidence of labels in the minimal tree must be
/// realized in the associated semigroup, checked with words_equal under the
/// given per-pair budget.
Verdict is_core_automaton(const Automaton& a, std::uint64_t budget = kDefaultWordBudget);

} // namespace fcore

#endif
