#include "fcore/words.hpp"

#include <algorithm>
#include <cassert>

namespace fcore {

bool is_binary_word(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

Word word_from_text(std::string_view s) {
    if (s == "e") return Word{};
    if (!is_binary_word(s))
        throw ParseError("not a binary word: '" + std::string(s) + "'");
    return Word(s);
}

std::string word_to_text(const Word& w) {
    return w.empty() ? "e" : w;
}

std::size_t ell0(const Word& u) {
    std::size_t n = 0;
    for (auto it = u.rbegin(); it != u.rend() && *it == '0'; ++it) ++n;
    return n;
}

std::size_t ell1(const Word& u) {
    std::size_t n = 0;
    for (auto it = u.rbegin(); it != u.rend() && *it == '1'; ++it) ++n;
    return n;
}

Dyadic::Dyadic(Word digits) : word_(std::move(digits)) {
    if (!is_binary_word(word_))
        throw std::invalid_argument("dyadic fraction: digits must be 0/1");
    while (!word_.empty() && word_.back() == '0') word_.pop_back();
    if (word_.empty())
        throw std::invalid_argument("dyadic fraction must lie strictly between 0 and 1");
}

unsigned long long Dyadic::numerator() const {
    unsigned long long n = 0;
    for (char c : word_) n = (n << 1) | static_cast<unsigned long long>(c - '0');
    return n;
}

Tree::Tree() : shape_{0} { compute_branches(); }

Tree::Tree(std::vector<char> shape) : shape_(std::move(shape)) { compute_branches(); }

Tree Tree::caret(const Tree& left, const Tree& right) {
    std::vector<char> shape;
    shape.reserve(1 + left.shape_.size() + right.shape_.size());
    shape.push_back(1);
    shape.insert(shape.end(), left.shape_.begin(), left.shape_.end());
    shape.insert(shape.end(), right.shape_.begin(), right.shape_.end());
    return Tree(std::move(shape));
}

namespace {

// Recursive descent over a branch span [lo, hi) at string offset depth.
void build_from_branches(const std::vector<Word>& branches, std::size_t lo, std::size_t hi,
                         std::size_t depth, std::vector<char>& shape) {
    if (hi - lo == 1) {
        if (branches[lo].size() != depth)
            throw std::invalid_argument("branch list is not a maximal prefix-free set");
        shape.push_back(0);
        return;
    }
    std::size_t split = lo;
    while (split < hi && branches[split].size() > depth && branches[split][depth] == '0') ++split;
    if (split == lo || split == hi)
        throw std::invalid_argument("branch list is not a maximal prefix-free set");
    for (std::size_t i = lo; i < hi; ++i)
        if (branches[i].size() <= depth || branches[i][depth] != (i < split ? '0' : '1'))
            throw std::invalid_argument("branch list is not a maximal prefix-free set");
    shape.push_back(1);
    build_from_branches(branches, lo, split, depth + 1, shape);
    build_from_branches(branches, split, hi, depth + 1, shape);
}

} // namespace

Tree Tree::from_branches(const std::vector<Word>& branches) {
    if (branches.empty())
        throw std::invalid_argument("branch list must be nonempty");
    for (const Word& b : branches)
        if (!is_binary_word(b)) throw std::invalid_argument("branch contains a non-binary digit");
    std::vector<char> shape;
    build_from_branches(branches, 0, branches.size(), 0, shape);
    return Tree(std::move(shape));
}

Tree Tree::minimal_with_branch(const Word& u) {
    Tree t = Tree::leaf();
    for (auto it = u.rbegin(); it != u.rend(); ++it)
        t = (*it == '0') ? Tree::caret(t, Tree::leaf()) : Tree::caret(Tree::leaf(), t);
    return t;
}

std::size_t Tree::subtree_end(std::size_t begin) const {
    std::size_t j = begin;
    long pending = 1;
    while (pending > 0) {
        pending += shape_[j] ? 1 : -1;
        ++j;
    }
    return j;
}

Tree Tree::subtree_at(const Word& u) const {
    std::size_t i = 0;
    for (char c : u) {
        if (!shape_[i]) throw std::invalid_argument("path leaves the tree at a leaf");
        i = (c == '0') ? i + 1 : subtree_end(i + 1);
    }
    return Tree(std::vector<char>(shape_.begin() + static_cast<long>(i),
                                  shape_.begin() + static_cast<long>(subtree_end(i))));
}

Tree Tree::with_leaf_replaced(std::size_t leaf_index, const Tree& t) const {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (shape_[i]) continue;
        if (seen++ == leaf_index) {
            std::vector<char> shape(shape_.begin(), shape_.begin() + static_cast<long>(i));
            shape.insert(shape.end(), t.shape_.begin(), t.shape_.end());
            shape.insert(shape.end(), shape_.begin() + static_cast<long>(i) + 1, shape_.end());
            return Tree(std::move(shape));
        }
    }
    throw std::out_of_range("leaf index out of range");
}

Tree Tree::with_leaves_replaced(const std::vector<Tree>& pieces) const {
    if (pieces.size() != leaf_count())
        throw std::invalid_argument("piece count must equal leaf count");
    std::vector<char> shape;
    std::size_t next = 0;
    for (char c : shape_) {
        if (c) {
            shape.push_back(1);
        } else {
            const auto& piece = pieces[next++].shape_;
            shape.insert(shape.end(), piece.begin(), piece.end());
        }
    }
    return Tree(std::move(shape));
}

namespace {

void merge_shapes(const std::vector<char>& a, std::size_t& i, const std::vector<char>& b,
                  std::size_t& j, std::vector<char>& out) {
    auto copy_subtree = [&out](const std::vector<char>& s, std::size_t& k) {
        long pending = 1;
        while (pending > 0) {
            pending += s[k] ? 1 : -1;
            out.push_back(s[k]);
            ++k;
        }
    };
    if (!a[i] && !b[j]) {
        out.push_back(0);
        ++i, ++j;
    } else if (!a[i]) {
        ++i;
        copy_subtree(b, j);
    } else if (!b[j]) {
        ++j;
        copy_subtree(a, i);
    } else {
        out.push_back(1);
        ++i, ++j;
        merge_shapes(a, i, b, j, out); // left subtrees
        merge_shapes(a, i, b, j, out); // right subtrees
    }
}

} // namespace

Tree Tree::merged_with(const Tree& other) const {
    std::vector<char> shape;
    std::size_t i = 0, j = 0;
    merge_shapes(shape_, i, other.shape_, j, shape);
    return Tree(std::move(shape));
}

void Tree::compute_branches() {
    branches_.clear();
    Word path;
    // Explicit stack of (index, path-so-far) to walk the preorder shape.
    struct Frame {
        std::size_t index;
        Word path;
    };
    std::vector<Frame> stack;
    stack.push_back({0, Word{}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (!shape_[f.index]) {
            branches_.push_back(std::move(f.path));
        } else {
            std::size_t left = f.index + 1;
            std::size_t right = subtree_end(left);
            stack.push_back({right, f.path + '1'});
            stack.push_back({left, f.path + '0'});
        }
    }
}

bool caret_count_identity_check(const Tree& t) {
    std::size_t sum0 = 0, sum1 = 0;
    for (const Word& b : t.branches()) {
        sum0 += ell0(b);
        sum1 += ell1(b);
    }
    return sum0 == t.leaf_count() - 1 && sum1 == t.leaf_count() - 1;
}

} // namespace fcore
