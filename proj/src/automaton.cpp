#include "fcore/automaton.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fcore/errors.hpp"

namespace fcore {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '+' && c != '.')
            return false;
    return true;
}

} // namespace

Automaton::Automaton(std::vector<VertexSpec> vertices, Vertex root) : root_(root) {
    if (root >= vertices.size()) throw std::invalid_argument("root out of range");
    verts_.reserve(vertices.size());
    std::unordered_set<std::string> names;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        VertexSpec& s = vertices[i];
        if ((s.child[0] == kNone) != (s.child[1] == kNone))
            throw std::invalid_argument("vertex must have zero or two outgoing edges");
        for (std::uint32_t c : s.child)
            if (c != kNone && c >= vertices.size())
                throw std::invalid_argument("edge target out of range");
        if (s.name.empty()) s.name = "v" + std::to_string(i);
        if (!valid_name(s.name)) throw std::invalid_argument("bad vertex id: " + s.name);
        if (!names.insert(s.name).second)
            throw std::invalid_argument("duplicate vertex id: " + s.name);
        verts_.push_back(V{std::move(s.name), s.child});
    }
    // no two distinct fathers with identical child pairs
    std::map<std::array<std::uint32_t, 2>, std::size_t> seen;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i].child[0] == kNone) continue;
        auto [it, fresh] = seen.emplace(verts_[i].child, i);
        if (!fresh)
            throw std::invalid_argument("vertices " + verts_[it->second].name + " and " +
                                        verts_[i].name + " share both children");
    }
    // every vertex reachable from the root
    std::vector<char> reach(verts_.size(), 0);
    std::deque<Vertex> queue{root_};
    reach[root_] = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (verts_[v].child[0] == kNone) continue;
        for (std::uint32_t c : verts_[v].child)
            if (!reach[c]) {
                reach[c] = 1;
                queue.push_back(c);
            }
    }
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (!reach[i])
            throw std::invalid_argument("vertex " + verts_[i].name + " unreachable from root");
}

Automaton Automaton::single_vertex() {
    return Automaton({VertexSpec{"r", {kNone, kNone}}}, 0);
}

Automaton Automaton::core_of_f() {
    // root -> (left, right); left -> (left, middle); right -> (middle, right);
    // middle -> (middle, middle)
    std::vector<VertexSpec> v(4);
    v[0] = {"r", {1, 2}};
    v[1] = {"L", {1, 3}};
    v[2] = {"R", {3, 2}};
    v[3] = {"M", {3, 3}};
    return Automaton(std::move(v), 0);
}

std::optional<Automaton::Vertex> Automaton::vertex_by_name(const std::string& name) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].name == name) return static_cast<Vertex>(i);
    return std::nullopt;
}

std::vector<Automaton::Vertex> Automaton::leaves() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].child[0] == kNone) out.push_back(static_cast<Vertex>(i));
    return out;
}

std::optional<Automaton::Vertex> Automaton::read_path(const Word& u) const {
    Vertex v = root_;
    for (char d : u) {
        if (is_leaf(v)) return std::nullopt;
        v = child(v, d);
    }
    return v;
}

const char* to_string(VertexType t) {
    switch (t) {
        case VertexType::Root: return "root";
        case VertexType::Left: return "left";
        case VertexType::Right: return "right";
        case VertexType::Middle: return "middle";
    }
    return "?";
}

unsigned VertexTypeSet::count() const {
    unsigned n = 0;
    for (unsigned i = 0; i < 4; ++i) n += mask >> i & 1u;
    return n;
}

std::vector<VertexTypeSet> vertex_types(const Automaton& a) {
    // Path classes: 0 = empty, 1 = 0^n, 2 = 1^n, 3 = mixed; fixpoint over
    // (vertex, class) pairs.
    std::vector<std::array<char, 4>> seen(a.vertex_count(), {0, 0, 0, 0});
    std::deque<std::pair<Automaton::Vertex, unsigned>> queue;
    auto push = [&](Automaton::Vertex v, unsigned cls) {
        if (!seen[v][cls]) {
            seen[v][cls] = 1;
            queue.emplace_back(v, cls);
        }
    };
    push(a.root(), 0);
    while (!queue.empty()) {
        auto [v, cls] = queue.front();
        queue.pop_front();
        if (a.is_leaf(v)) continue;
        unsigned cls0 = cls == 0 || cls == 1 ? 1 : 3;
        unsigned cls1 = cls == 0 || cls == 2 ? 2 : 3;
        push(a.child(v, '0'), cls0);
        push(a.child(v, '1'), cls1);
    }
    std::vector<VertexTypeSet> types(a.vertex_count());
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        for (unsigned cls = 0; cls < 4; ++cls)
            if (seen[v][cls]) types[v].add(static_cast<VertexType>(cls));
    return types;
}

std::array<std::size_t, 4> type_census(const Automaton& a) {
    std::array<std::size_t, 4> census{0, 0, 0, 0};
    for (const VertexTypeSet& s : vertex_types(a))
        for (unsigned t = 0; t < 4; ++t)
            if (s.mask >> t & 1u) ++census[t];
    return census;
}

bool accepts(const Automaton& a, const TreeDiagram& d) {
    const TreeDiagram r = d.is_reduced() ? d : d.reduced();
    for (const auto& [u, v] : r.branch_pairs()) {
        auto pu = a.read_path(u);
        auto pv = a.read_path(v);
        if (!pu || !pv || *pu != *pv) return false;
    }
    return true;
}

bool is_reduced_automaton(const Automaton& a) {
    const std::size_t n = a.vertex_count();
    // descendants[x] via DFS from x's children
    std::vector<std::vector<char>> desc(n, std::vector<char>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        if (a.is_leaf(static_cast<Automaton::Vertex>(x))) continue;
        std::deque<Automaton::Vertex> queue;
        for (char d : {'0', '1'}) {
            Automaton::Vertex c = a.child(static_cast<Automaton::Vertex>(x), d);
            if (!desc[x][c]) {
                desc[x][c] = 1;
                queue.push_back(c);
            }
        }
        while (!queue.empty()) {
            Automaton::Vertex v = queue.front();
            queue.pop_front();
            if (a.is_leaf(v)) continue;
            for (char d : {'0', '1'}) {
                Automaton::Vertex c = a.child(v, d);
                if (!desc[x][c]) {
                    desc[x][c] = 1;
                    queue.push_back(c);
                }
            }
        }
    }
    std::vector<unsigned> indeg(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (a.is_leaf(static_cast<Automaton::Vertex>(x))) continue;
        ++indeg[a.child(static_cast<Automaton::Vertex>(x), '0')];
        ++indeg[a.child(static_cast<Automaton::Vertex>(x), '1')];
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (a.is_leaf(static_cast<Automaton::Vertex>(x))) continue;
        if (desc[x][x]) continue;
        bool ok = false;
        for (std::size_t y = 0; y < n && !ok; ++y)
            if (desc[x][y] && indeg[y] >= 2) ok = true;
        if (!ok) return false;
    }
    return true;
}

std::optional<Morphism> find_morphism(const Automaton& src, const Automaton& dst) {
    std::vector<Automaton::Vertex> map(src.vertex_count(), Automaton::kNone);
    map[src.root()] = dst.root();
    std::deque<Automaton::Vertex> queue{src.root()};
    while (!queue.empty()) {
        Automaton::Vertex x = queue.front();
        queue.pop_front();
        if (src.is_leaf(x)) continue;
        if (dst.is_leaf(map[x])) return std::nullopt; // word readable on src only
        for (char d : {'0', '1'}) {
            Automaton::Vertex cx = src.child(x, d);
            Automaton::Vertex cd = dst.child(map[x], d);
            if (map[cx] == Automaton::kNone) {
                map[cx] = cd;
                queue.push_back(cx);
            } else if (map[cx] != cd) {
                return std::nullopt; // inconsistent vertex images
            }
        }
    }
    // Surjectivity in the word sense: every word readable on dst is readable
    // on src. Walk dst paths with their src shadows.
    bool surjective = true;
    std::set<std::pair<Automaton::Vertex, Automaton::Vertex>> visited;
    std::deque<std::pair<Automaton::Vertex, Automaton::Vertex>> pairs;
    pairs.emplace_back(dst.root(), src.root());
    visited.insert(pairs.front());
    while (!pairs.empty() && surjective) {
        auto [y, x] = pairs.front();
        pairs.pop_front();
        if (dst.is_leaf(y)) continue;
        if (src.is_leaf(x)) {
            surjective = false;
            break;
        }
        for (char d : {'0', '1'}) {
            auto next = std::make_pair(dst.child(y, d), src.child(x, d));
            if (visited.insert(next).second) pairs.push_back(next);
        }
    }
    return Morphism{std::move(map), surjective};
}

namespace {

// BFS numbering from the root, 0-edge before 1-edge.
std::vector<Automaton::Vertex> bfs_order(const Automaton& a) {
    std::vector<Automaton::Vertex> order;
    std::vector<char> seen(a.vertex_count(), 0);
    std::deque<Automaton::Vertex> queue{a.root()};
    seen[a.root()] = 1;
    while (!queue.empty()) {
        Automaton::Vertex v = queue.front();
        queue.pop_front();
        order.push_back(v);
        if (a.is_leaf(v)) continue;
        for (char d : {'0', '1'}) {
            Automaton::Vertex c = a.child(v, d);
            if (!seen[c]) {
                seen[c] = 1;
                queue.push_back(c);
            }
        }
    }
    return order;
}

} // namespace

std::string canonical_form(const Automaton& a) {
    std::vector<Automaton::Vertex> order = bfs_order(a);
    std::vector<std::uint32_t> number(a.vertex_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = static_cast<std::uint32_t>(i);
    std::ostringstream out;
    out << order.size();
    for (Automaton::Vertex v : order) {
        if (a.is_leaf(v))
            out << "|.";
        else
            out << '|' << number[a.child(v, '0')] << ',' << number[a.child(v, '1')];
    }
    return out.str();
}

namespace {

// Union-find with congruence closure over automaton vertices: merged inner
// vertices force their same-digit children to merge (down), and classes with
// identical child-pair classes merge (up).
class Congruence {
public:
    explicit Congruence(const Automaton& a) : a_(a), parent_(a.vertex_count()) {
        for (std::size_t i = 0; i < parent_.size(); ++i)
            parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) const {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void merge(std::uint32_t x, std::uint32_t y) {
        pending_.emplace_back(x, y);
        drain();
        close_upward();
    }

    // Normalized class vector: entry i = smallest vertex in i's class.
    std::vector<std::uint32_t> key() const {
        std::vector<std::uint32_t> smallest(parent_.size(), Automaton::kNone);
        std::vector<std::uint32_t> out(parent_.size());
        for (std::uint32_t i = 0; i < parent_.size(); ++i) {
            std::uint32_t r = find(i);
            if (smallest[r] == Automaton::kNone) smallest[r] = i;
        }
        for (std::uint32_t i = 0; i < parent_.size(); ++i) out[i] = smallest[find(i)];
        return out;
    }

    // Builds the quotient automaton; class names join member names with '+'.
    Automaton quotient() const {
        std::vector<std::uint32_t> cls(parent_.size());
        std::vector<std::uint32_t> reps;
        for (std::uint32_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) {
                cls[i] = static_cast<std::uint32_t>(reps.size());
                reps.push_back(i);
            }
        for (std::uint32_t i = 0; i < parent_.size(); ++i) cls[i] = cls[find(i)];
        std::vector<Automaton::VertexSpec> spec(reps.size());
        std::vector<std::vector<std::string>> members(reps.size());
        for (std::uint32_t i = 0; i < parent_.size(); ++i) {
            members[cls[i]].push_back(a_.name(i));
            if (a_.is_inner(i)) {
                spec[cls[i]].child = {cls[find(a_.child(i, '0'))], cls[find(a_.child(i, '1'))]};
            }
        }
        for (std::size_t c = 0; c < reps.size(); ++c) {
            std::sort(members[c].begin(), members[c].end());
            std::string name;
            for (const std::string& m : members[c]) {
                if (!name.empty()) name += '+';
                name += m;
            }
            spec[c].name = std::move(name);
        }
        return Automaton(std::move(spec), cls[a_.root()]);
    }

private:
    // An inner vertex of the class rooted at r, if any.
    std::uint32_t inner_member(std::uint32_t r) const {
        for (std::uint32_t i = 0; i < parent_.size(); ++i)
            if (find(i) == r && a_.is_inner(i)) return i;
        return Automaton::kNone;
    }

    void drain() {
        while (!pending_.empty()) {
            auto [px, py] = pending_.back();
            pending_.pop_back();
            std::uint32_t x = find(px);
            std::uint32_t y = find(py);
            if (x == y) continue;
            // down-closure: merged inner vertices force same-digit children
            // to merge; pick one inner member per class before the union
            std::uint32_t ix = inner_member(x);
            std::uint32_t iy = inner_member(y);
            if (y < x) std::swap(x, y);
            parent_[y] = x;
            if (ix != Automaton::kNone && iy != Automaton::kNone) {
                pending_.emplace_back(a_.child(ix, '0'), a_.child(iy, '0'));
                pending_.emplace_back(a_.child(ix, '1'), a_.child(iy, '1'));
            }
        }
    }

    void close_upward() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<std::array<std::uint32_t, 2>, std::uint32_t> seen;
            for (std::uint32_t i = 0; i < parent_.size(); ++i) {
                if (!a_.is_inner(i)) continue;
                std::array<std::uint32_t, 2> kids{find(a_.child(i, '0')), find(a_.child(i, '1'))};
                auto [it, fresh] = seen.emplace(kids, find(i));
                if (!fresh && it->second != find(i)) {
                    pending_.emplace_back(it->second, find(i));
                    drain();
                    changed = true;
                    break;
                }
            }
        }
    }

    const Automaton& a_;
    mutable std::vector<std::uint32_t> parent_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

} // namespace

std::vector<Automaton> enumerate_quotients(const Automaton& a, std::size_t cap) {
    const std::uint32_t n = static_cast<std::uint32_t>(a.vertex_count());
    std::set<std::vector<std::uint32_t>> keys;
    std::vector<Congruence> found;

    auto add = [&](Congruence c) {
        if (keys.insert(c.key()).second) {
            found.push_back(std::move(c));
            if (found.size() > cap)
                throw CapExceededError("quotient enumeration exceeded cap of " +
                                       std::to_string(cap));
            return true;
        }
        return false;
    };

    add(Congruence(a)); // trivial congruence: a itself
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y) {
            Congruence c(a);
            c.merge(x, y);
            add(c);
        }
    // close under pairwise joins
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < found.size() && !grew; ++i)
            for (std::size_t j = i + 1; j < found.size() && !grew; ++j) {
                const auto ki = found[i].key();
                const auto kj = found[j].key();
                Congruence c(a);
                for (std::uint32_t v = 0; v < n; ++v) {
                    if (ki[v] != v) c.merge(ki[v], v);
                    if (kj[v] != v) c.merge(kj[v], v);
                }
                grew = add(std::move(c));
            }
    }
    std::vector<Automaton> out;
    std::set<std::string> canon;
    for (const Congruence& c : found) {
        Automaton q = c.quotient();
        if (canon.insert(canonical_form(q)).second) out.push_back(std::move(q));
    }
    return out;
}

Automaton attach(const Automaton& host, Automaton::Vertex leaf, const Automaton& guest) {
    if (leaf >= host.vertex_count() || !host.is_leaf(leaf))
        throw NotALeafError("attachment point is not a leaf");
    const std::uint32_t hn = static_cast<std::uint32_t>(host.vertex_count());
    // guest vertices append after host's; the guest root folds onto the leaf
    auto guest_index = [&](Automaton::Vertex g) -> std::uint32_t {
        if (g == guest.root()) return leaf;
        return hn + g - (g > guest.root() ? 1 : 0);
    };
    std::vector<Automaton::VertexSpec> spec(hn + guest.vertex_count() - 1);
    std::unordered_set<std::string> used;
    for (std::uint32_t v = 0; v < hn; ++v) {
        spec[v].name = host.name(v);
        used.insert(spec[v].name);
        if (host.is_inner(v)) spec[v].child = {host.child(v, '0'), host.child(v, '1')};
    }
    for (std::uint32_t g = 0; g < guest.vertex_count(); ++g) {
        std::uint32_t v = guest_index(g);
        if (g != guest.root()) {
            std::string name = guest.name(g);
            while (used.count(name)) name += "_";
            used.insert(name);
            spec[v].name = std::move(name);
        }
        if (guest.is_inner(g))
            spec[v].child = {guest_index(guest.child(g, '0')), guest_index(guest.child(g, '1'))};
    }
    return Automaton(std::move(spec), host.root());
}

Automaton fill_leaves(const Automaton& a) {
    Automaton out = a;
    while (true) {
        std::vector<Automaton::Vertex> ls = out.leaves();
        if (ls.empty()) return out;
        out = attach(out, ls.front(), Automaton::core_of_f());
    }
}

Automaton load_automaton(std::istream& in) {
    std::string line;
    std::optional<std::string> root_name;
    std::vector<std::pair<std::string, std::pair<char, std::string>>> edges;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "root") {
            std::string name;
            if (!(ls >> name) || root_name)
                throw ParseError("bad root line", lineno);
            root_name = name;
        } else if (tok == "edge") {
            std::string src, digit, dst;
            if (!(ls >> src >> digit >> dst) || (digit != "0" && digit != "1"))
                throw ParseError("bad edge line", lineno);
            edges.emplace_back(src, std::make_pair(digit[0], dst));
        } else {
            throw ParseError("unknown directive: " + tok, lineno);
        }
    }
    if (!root_name) throw ParseError("missing root line");
    std::vector<Automaton::VertexSpec> spec;
    std::unordered_map<std::string, std::uint32_t> index;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, static_cast<std::uint32_t>(spec.size()));
        if (fresh) spec.push_back(Automaton::VertexSpec{name, {Automaton::kNone, Automaton::kNone}});
        return it->second;
    };
    std::uint32_t root = intern(*root_name);
    for (const auto& [src, e] : edges) {
        std::uint32_t s = intern(src);
        std::uint32_t d = intern(e.second);
        if (spec[s].child[e.first - '0'] != Automaton::kNone)
            throw ParseError("duplicate edge from " + src + " on digit " + e.first);
        spec[s].child[e.first - '0'] = d;
    }
    return Automaton(std::move(spec), root);
}

Automaton load_automaton_text(const std::string& text) {
    std::istringstream in(text);
    return load_automaton(in);
}

void save_automaton(const Automaton& a, std::ostream& out) {
    out << "root " << a.name(a.root()) << "\n";
    for (Automaton::Vertex v : bfs_order(a)) {
        if (a.is_leaf(v)) continue;
        out << "edge " << a.name(v) << " 0 " << a.name(a.child(v, '0')) << "\n";
        out << "edge " << a.name(v) << " 1 " << a.name(a.child(v, '1')) << "\n";
    }
}

std::string save_automaton_text(const Automaton& a) {
    std::ostringstream out;
    save_automaton(a, out);
    return out.str();
}

void write_dot(const Automaton& a, std::ostream& out) {
    static const char* colors[4] = {"gold", "skyblue", "palegreen", "salmon"};
    const auto types = vertex_types(a);
    out << "digraph automaton {\n  rankdir=TB;\n";
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        out << "  \"" << a.name(static_cast<Automaton::Vertex>(v)) << "\" [label=\""
            << a.name(static_cast<Automaton::Vertex>(v));
        for (unsigned t = 0; t < 4; ++t)
            if (types[v].has(static_cast<VertexType>(t)))
                out << "\\n" << to_string(static_cast<VertexType>(t));
        out << "\", style=filled";
        if (types[v].count() == 1)
            for (unsigned t = 0; t < 4; ++t)
                if (types[v].has(static_cast<VertexType>(t)))
                    out << ", fillcolor=" << colors[t];
        out << "];\n";
    }
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        if (a.is_leaf(static_cast<Automaton::Vertex>(v))) continue;
        for (char d : {'0', '1'})
            out << "  \"" << a.name(static_cast<Automaton::Vertex>(v)) << "\" -> \""
                << a.name(a.child(static_cast<Automaton::Vertex>(v), d)) << "\" [label=\"" << d
                << "\"];\n";
    }
    out << "}\n";
}

} // namespace fcore
