#include "fcore/element.hpp"

#include <cassert>
#include <cctype>
#include <mutex>

namespace fcore {

TreeDiagram::TreeDiagram(Tree domain, Tree range)
    : domain_(std::move(domain)), range_(std::move(range)) {
    if (domain_.leaf_count() != range_.leaf_count())
        throw std::invalid_argument("tree-diagram requires equal leaf counts");
}

TreeDiagram TreeDiagram::from_branch_pairs(const std::vector<std::pair<Word, Word>>& pairs) {
    std::vector<Word> dom, ran;
    dom.reserve(pairs.size());
    ran.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        dom.push_back(u);
        ran.push_back(v);
    }
    return TreeDiagram(Tree::from_branches(dom), Tree::from_branches(ran));
}

std::vector<std::pair<Word, Word>> TreeDiagram::branch_pairs() const {
    std::vector<std::pair<Word, Word>> pairs;
    pairs.reserve(leaf_count());
    for (std::size_t i = 0; i < leaf_count(); ++i)
        pairs.emplace_back(domain_.branches()[i], range_.branches()[i]);
    return pairs;
}

namespace {

// A common caret at position i: branches i and i+1 are siblings in both trees.
bool common_caret_at(const std::vector<Word>& dom, const std::vector<Word>& ran, std::size_t i) {
    const Word &u0 = dom[i], &u1 = dom[i + 1], &v0 = ran[i], &v1 = ran[i + 1];
    return u0.size() == u1.size() && !u0.empty() &&
           Word(u0.begin(), u0.end() - 1) == Word(u1.begin(), u1.end() - 1) &&
           u0.back() == '0' && u1.back() == '1' && v0.size() == v1.size() && !v0.empty() &&
           Word(v0.begin(), v0.end() - 1) == Word(v1.begin(), v1.end() - 1) &&
           v0.back() == '0' && v1.back() == '1';
}

} // namespace

bool TreeDiagram::is_reduced() const {
    const auto& dom = domain_.branches();
    const auto& ran = range_.branches();
    for (std::size_t i = 0; i + 1 < dom.size(); ++i)
        if (common_caret_at(dom, ran, i)) return false;
    return true;
}

TreeDiagram TreeDiagram::reduced() const {
    std::vector<Word> dom = domain_.branches();
    std::vector<Word> ran = range_.branches();
    std::size_t i = 0;
    while (i + 1 < dom.size()) {
        if (common_caret_at(dom, ran, i)) {
            dom[i].pop_back();
            ran[i].pop_back();
            dom.erase(dom.begin() + static_cast<long>(i) + 1);
            ran.erase(ran.begin() + static_cast<long>(i) + 1);
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    return TreeDiagram(Tree::from_branches(dom), Tree::from_branches(ran));
}

TreeDiagram TreeDiagram::operator*(const TreeDiagram& rhs) const {
    const Tree common = range_.merged_with(rhs.domain_);
    auto grow = [&common](const Tree& target, const Tree& base) {
        std::vector<Tree> pieces;
        pieces.reserve(base.leaf_count());
        for (const Word& b : base.branches()) pieces.push_back(common.subtree_at(b));
        return target.with_leaves_replaced(pieces);
    };
    return TreeDiagram(grow(domain_, range_), grow(rhs.range_, rhs.domain_)).reduced();
}

const TreeDiagram& make_x(std::size_t n) {
    static std::vector<TreeDiagram> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) {
        cache.push_back(TreeDiagram::from_branch_pairs({{"00", "0"}, {"01", "10"}, {"1", "11"}}));
        cache.push_back(TreeDiagram::from_branch_pairs(
            {{"0", "0"}, {"100", "10"}, {"101", "110"}, {"11", "111"}}));
    }
    while (cache.size() <= n) {
        const TreeDiagram& x0 = cache[0];
        cache.push_back(x0.inverse() * cache.back() * x0);
    }
    return cache[n];
}

namespace {

// Walks the domain tree along the digit stream word + tail-repeated digit;
// returns the branch index reached.
std::size_t branch_along(const Tree& domain, const Word& word, char tail) {
    std::size_t index = 0;     // preorder index in the shape
    std::size_t leaf_rank = 0; // leaves passed to the left
    const auto& shape = domain.shape();
    auto subtree_end = [&shape](std::size_t begin) {
        std::size_t j = begin;
        long pending = 1;
        while (pending > 0) {
            pending += shape[j] ? 1 : -1;
            ++j;
        }
        return j;
    };
    std::size_t pos = 0;
    while (shape[index]) {
        char digit = pos < word.size() ? word[pos] : tail;
        ++pos;
        std::size_t left = index + 1;
        if (digit == '0') {
            index = left;
        } else {
            std::size_t right = subtree_end(left);
            // count leaves in the skipped left subtree
            for (std::size_t k = left; k < right; ++k)
                if (!shape[k]) ++leaf_rank;
            index = right;
        }
    }
    return leaf_rank;
}

} // namespace

Dyadic evaluate(const TreeDiagram& f, const Dyadic& alpha) {
    const Word& a = alpha.word();
    std::size_t i = branch_along(f.domain_tree(), a, '0');
    const Word& u = f.domain_tree().branches()[i];
    const Word& v = f.range_tree().branches()[i];
    Word out = v;
    if (u.size() < a.size()) out += a.substr(u.size());
    return Dyadic(out);
}

int log_slope_right(const TreeDiagram& f, const std::optional<Dyadic>& alpha) {
    std::size_t i = branch_along(f.domain_tree(), alpha ? alpha->word() : Word{}, '0');
    return static_cast<int>(f.domain_tree().branches()[i].size()) -
           static_cast<int>(f.range_tree().branches()[i].size());
}

int log_slope_left(const TreeDiagram& f, const std::optional<Dyadic>& alpha) {
    Word approach; // word whose 1-padding approaches alpha from the left
    if (alpha) {
        approach = alpha->word();
        approach.back() = '0'; // canonical word ends in '1'; .u1 = .u01^inf
    }
    std::size_t i = branch_along(f.domain_tree(), approach, '1');
    return static_cast<int>(f.domain_tree().branches()[i].size()) -
           static_cast<int>(f.range_tree().branches()[i].size());
}

AbelianImage abelianize(const TreeDiagram& f) {
    return AbelianImage{log_slope_right(f), log_slope_left(f)};
}

TreeDiagram copy_in(const Word& u, const TreeDiagram& g) {
    if (!g.is_reduced()) throw NotReducedError("copy_in requires a reduced tree-diagram");
    if (g.is_identity()) return g;
    const Tree frame = Tree::minimal_with_branch(u);
    std::size_t slot = 0;
    const auto& frame_branches = frame.branches();
    while (frame_branches[slot] != u) ++slot;
    return TreeDiagram(frame.with_leaf_replaced(slot, g.domain_tree()),
                       frame.with_leaf_replaced(slot, g.range_tree()));
}

TreeDiagram direct_sum(const TreeDiagram& g, const TreeDiagram& h) {
    return copy_in("0", g.reduced()) * copy_in("1", h.reduced());
}

std::vector<std::pair<long, long>> tuple_sequence(const TreeDiagram& d) {
    const auto& dom = d.domain_tree().branches();
    const auto& ran = d.range_tree().branches();
    std::vector<std::pair<long, long>> tuples;
    for (std::size_t i = 0; i + 1 < dom.size(); ++i)
        tuples.emplace_back(static_cast<long>(ell1(dom[i])) - static_cast<long>(ell1(ran[i])),
                            static_cast<long>(ell0(dom[i + 1])) -
                                static_cast<long>(ell0(ran[i + 1])));
    return tuples;
}

bool has_branch_pair(const TreeDiagram& f, const Word& u, const Word& v) {
    const TreeDiagram r = f.reduced();
    const auto& dom = r.domain_tree().branches();
    const auto& ran = r.range_tree().branches();
    for (std::size_t i = 0; i < dom.size(); ++i) {
        const Word &p = dom[i], &q = ran[i];
        if (u.size() >= p.size() && v.size() >= q.size() && u.compare(0, p.size(), p) == 0 &&
            v.compare(0, q.size(), q) == 0 && u.substr(p.size()) == v.substr(q.size()))
            return true;
    }
    return false;
}

std::vector<GenLetter> parse_generator_word(std::string_view text) {
    std::vector<GenLetter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        char head = text[pos];
        if (head != 'x' && head != 'X')
            throw ParseError("expected generator token at position " + std::to_string(start),
                             static_cast<long>(start));
        ++pos;
        std::size_t digits = 0;
        std::size_t index = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            index = index * 10 + static_cast<std::size_t>(text[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0)
            throw ParseError("generator token missing index at position " + std::to_string(start),
                             static_cast<long>(start));
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError("malformed generator token at position " + std::to_string(start),
                             static_cast<long>(start));
        letters.push_back(GenLetter{index, head == 'x' ? +1 : -1});
    }
    return letters;
}

TreeDiagram to_diagram(const std::vector<GenLetter>& letters) {
    TreeDiagram d = TreeDiagram::identity();
    for (const GenLetter& l : letters) {
        const TreeDiagram& x = make_x(l.index);
        d = d * (l.exponent > 0 ? x : x.inverse());
    }
    return d;
}

} // namespace fcore
