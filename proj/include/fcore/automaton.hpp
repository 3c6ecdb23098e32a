#ifndef FCORE_AUTOMATON_HPP
#define FCORE_AUTOMATON_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fcore/element.hpp"
#include "fcore/words.hpp"

namespace fcore {

/// A rooted tree-automaton: an edge-labeled directed rooted graph where
/// every vertex has zero or two outgoing edges (labeled 0 and 1), no two
/// distinct fathers share both children, and every vertex is reachable from
/// the root. Immutable once constructed; construction validates all of the
/// invariants above.
class Automaton {
public:
    using Vertex = std::uint32_t;
    static constexpr std::uint32_t kNone = 0xffffffffu;

    struct VertexSpec {
        std::string name;                                // unique ASCII id; "" = auto
        std::array<std::uint32_t, 2> child{kNone, kNone}; // both set or neither
    };

    Automaton(std::vector<VertexSpec> vertices, Vertex root);

    /// The one-vertex automaton (a single leaf root).
    static Automaton single_vertex();

    /// The core of Thompson's group F: root, left, right and middle
    /// vertices, with both self-loops on the middle vertex.
    static Automaton core_of_f();

    Vertex root() const { return root_; }
    std::size_t vertex_count() const { return verts_.size(); }

    bool is_inner(Vertex v) const { return verts_[v].child[0] != kNone; }
    bool is_leaf(Vertex v) const { return !is_inner(v); }

    /// Child along digit d ('0' or '1'); vertex must be inner.
    Vertex child(Vertex v, char d) const { return verts_[v].child[d - '0']; }

    const std::string& name(Vertex v) const { return verts_[v].name; }
    std::optional<Vertex> vertex_by_name(const std::string& name) const;

    std::vector<Vertex> leaves() const;
    bool is_full() const { return leaves().empty(); }

    /// End vertex of the path labeled u, if u is readable.
    std::optional<Vertex> read_path(const Word& u) const;

private:
    struct V {
        std::string name;
        std::array<std::uint32_t, 2> child;
    };
    std::vector<V> verts_;
    Vertex root_;
};

enum class VertexType : unsigned { Root = 0, Left = 1, Right = 2, Middle = 3 };

const char* to_string(VertexType t);

/// Set of vertex types as a 4-bit mask.
struct VertexTypeSet {
    unsigned mask = 0;

    void add(VertexType t) { mask |= 1u << static_cast<unsigned>(t); }
    bool has(VertexType t) const { return mask >> static_cast<unsigned>(t) & 1u; }
    unsigned count() const;

    friend bool operator==(const VertexTypeSet& a, const VertexTypeSet& b) {
        return a.mask == b.mask;
    }
};

/// For each vertex, the types under which it is reachable. Singleton sets
/// everywhere is a necessary condition for being a core.
std::vector<VertexTypeSet> vertex_types(const Automaton& a);

/// Census (root, left, right, middle) counting each vertex once per type it
/// carries.
std::array<std::size_t, 4> type_census(const Automaton& a);

/// True iff the diagram (reduced first) is readable and every pair of
/// branches lands on a common vertex.
bool accepts(const Automaton& a, const TreeDiagram& d);

/// True iff the automaton is not a proper extension of a smaller automaton:
/// every vertex is a leaf, a descendant of itself, or has a descendant with
/// at least two distinct incoming edges.
bool is_reduced_automaton(const Automaton& a);

/// A morphism of rooted tree-automata, as the vertex map source -> target.
struct Morphism {
    std::vector<Automaton::Vertex> map; // indexed by source vertex
    bool surjective;                    // every word readable on target is readable on source
};

/// The unique morphism from src to dst when it exists.
std::optional<Morphism> find_morphism(const Automaton& src, const Automaton& dst);

/// Canonical encoding under BFS renumbering from the root (0-edge before
/// 1-edge); two automata are isomorphic iff their encodings are equal.
std::string canonical_form(const Automaton& a);

/// All pairwise non-isomorphic surjective morphic images of a (including a
/// itself), computed over the congruence lattice. Throws CapExceededError
/// when more than cap distinct quotients appear.
std::vector<Automaton> enumerate_quotients(const Automaton& a, std::size_t cap = 10000);

/// Disjoint union of host and guest with the guest's root fused onto the
/// given leaf of host; the root is host's root.
Automaton attach(const Automaton& host, Automaton::Vertex leaf, const Automaton& guest);

/// Attaches a fresh copy of the core of F at every leaf; the result is full.
Automaton fill_leaves(const Automaton& a);

/// Text format: line "root <id>", then lines "edge <src> <0|1> <dst>".
/// Saving emits vertices in BFS order, so load/save round-trips are
/// byte-identical on saved files.
Automaton load_automaton(std::istream& in);
Automaton load_automaton_text(const std::string& text);
void save_automaton(const Automaton& a, std::ostream& out);
std::string save_automaton_text(const Automaton& a);

/// DOT export with vertices labeled by id and type.
void write_dot(const Automaton& a, std::ostream& out);

} // namespace fcore

#endif
