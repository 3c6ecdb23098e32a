#include "fcore/core.hpp"

#include <array>
#include <deque>
#include <map>
#include <unordered_map>

#include "fcore/errors.hpp"

namespace fcore {

namespace {

// Folding arena: vertices with arbitrarily many outgoing half-edges, merged
// with union-find until the graph is deterministic and no two fathers share
// a child pair.
class FoldingGraph {
public:
    std::uint32_t add_vertex() {
        parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
        out_.emplace_back();
        return parent_.back();
    }

    void add_edge(std::uint32_t src, char digit, std::uint32_t dst) {
        out_[src].emplace_back(digit, dst);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    Automaton to_automaton(std::uint32_t root) {
        fold();
        root = find(root);
        std::unordered_map<std::uint32_t, std::uint32_t> index;
        std::vector<std::uint32_t> reps;
        std::deque<std::uint32_t> queue{root};
        index.emplace(root, 0);
        reps.push_back(root);
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop_front();
            for (std::uint32_t c : children(v)) {
                if (c == kNone) continue;
                if (index.emplace(c, static_cast<std::uint32_t>(reps.size())).second) {
                    reps.push_back(c);
                    queue.push_back(c);
                }
            }
        }
        std::vector<Automaton::VertexSpec> spec(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            auto kids = children(reps[i]);
            if (kids[0] != kNone) spec[i].child = {index.at(kids[0]), index.at(kids[1])};
        }
        return Automaton(std::move(spec), 0);
    }

private:
    static constexpr std::uint32_t kNone = Automaton::kNone;

    void merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (out_[a].size() < out_[b].size()) std::swap(a, b);
        parent_[b] = a;
        out_[a].insert(out_[a].end(), out_[b].begin(), out_[b].end());
        out_[b].clear();
        out_[b].shrink_to_fit();
    }

    std::array<std::uint32_t, 2> children(std::uint32_t v) {
        std::array<std::uint32_t, 2> kids{kNone, kNone};
        for (auto& [digit, dst] : out_[find(v)]) kids[digit - '0'] = find(dst);
        return kids;
    }

    // (1) merge same-labeled outgoing edges per class; (2) merge distinct
    // fathers with identical child pairs; repeat both until stable.
    void fold() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t v = 0; v < parent_.size(); ++v) {
                if (find(v) != v) continue;
                std::array<std::uint32_t, 2> target{kNone, kNone};
                const auto edges = out_[v]; // merges below may touch out_[v]
                for (const auto& [digit, dst] : edges) {
                    std::uint32_t d = find(dst);
                    auto slot = static_cast<std::size_t>(digit - '0');
                    if (target[slot] == kNone) {
                        target[slot] = d;
                    } else if (target[slot] != d) {
                        merge(target[slot], d);
                        target[slot] = find(target[slot]);
                        changed = true;
                    }
                }
            }
            if (changed) continue; // re-run step (1) before looking at fathers
            std::map<std::array<std::uint32_t, 2>, std::uint32_t> seen;
            for (std::uint32_t v = 0; v < parent_.size(); ++v) {
                if (find(v) != v) continue;
                auto kids = children(v);
                if (kids[0] == kNone) continue;
                auto [it, fresh] = seen.emplace(kids, v);
                if (!fresh && it->second != v) {
                    merge(it->second, v);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::uint32_t> parent_;
    std::vector<std::vector<std::pair<char, std::uint32_t>>> out_;
};

// Adds the edges of one tree to the graph, rooted at root, taking the i-th
// leaf vertex from leaf_ids.
void add_tree(FoldingGraph& graph, std::uint32_t root, const Tree& t,
              const std::vector<std::uint32_t>& leaf_ids) {
    const auto& shape = t.shape();
    std::vector<std::uint32_t> stack;
    std::vector<char> next_digit;
    std::size_t leaf_rank = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        std::uint32_t v;
        if (i == 0) {
            v = root;
        } else {
            v = shape[i] ? graph.add_vertex() : leaf_ids[leaf_rank];
            graph.add_edge(stack.back(), next_digit.back(), v);
            if (next_digit.back() == '0') {
                next_digit.back() = '1';
            } else {
                stack.pop_back();
                next_digit.pop_back();
            }
        }
        if (shape[i]) {
            stack.push_back(v);
            next_digit.push_back('0');
        } else {
            ++leaf_rank;
        }
    }
}

} // namespace

Automaton build_core(const std::vector<TreeDiagram>& gens) {
    for (const TreeDiagram& g : gens)
        if (!g.is_reduced()) throw NotReducedError("build_core requires reduced generators");
    FoldingGraph graph;
    std::uint32_t root = graph.add_vertex();
    for (const TreeDiagram& g : gens) {
        if (g.is_identity()) continue; // its sphere is the root alone
        // the sphere of g: both trees directed away from a common root, with
        // corresponding leaves identified
        std::vector<std::uint32_t> leaf_ids(g.leaf_count());
        for (std::size_t i = 0; i < g.leaf_count(); ++i) leaf_ids[i] = graph.add_vertex();
        add_tree(graph, root, g.domain_tree(), leaf_ids);
        add_tree(graph, root, g.range_tree(), leaf_ids);
    }
    return graph.to_automaton(root);
}

bool closure_contains(const Automaton& core_h, const TreeDiagram& f) {
    return accepts(core_h, f);
}

bool closure_contains_derived(const Automaton& core_h) {
    const auto types = vertex_types(core_h);
    std::size_t middles = 0;
    std::size_t middle = 0;
    for (std::size_t v = 0; v < core_h.vertex_count(); ++v)
        if (types[v].has(VertexType::Middle)) {
            ++middles;
            middle = v;
        }
    return middles == 1 && core_h.is_inner(static_cast<Automaton::Vertex>(middle));
}

bool finitely_many_dyadic_orbits(const Automaton& core_h) {
    return core_h.is_full();
}

} // namespace fcore
