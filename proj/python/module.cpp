#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fcore/core.hpp"
#include "fcore/decide.hpp"
#include "fcore/jones.hpp"
#include "fcore/rewriting.hpp"

namespace py = pybind11;
using namespace fcore;

namespace {

TreeDiagram element_from_tokens(const std::string& tokens) {
    return to_diagram(parse_generator_word(tokens));
}

TreeDiagram element_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<Word, Word>> converted;
    converted.reserve(pairs.size());
    for (const auto& [u, v] : pairs)
        converted.emplace_back(word_from_text(u), word_from_text(v));
    return TreeDiagram::from_branch_pairs(converted);
}

std::vector<std::pair<std::string, std::string>> element_pairs(const TreeDiagram& d) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : d.branch_pairs())
        out.emplace_back(word_to_text(u), word_to_text(v));
    return out;
}

std::string verdict_str(VerdictKind k) { return to_string(k); }

} // namespace

PYBIND11_MODULE(_fcore, m) {
    m.doc() = "Thompson's group F: tree-diagrams, core automata and decision procedures";

    py::register_exception<NotReducedError>(m, "NotReducedError", PyExc_ValueError);
    py::register_exception<NotALeafError>(m, "NotALeafError", PyExc_ValueError);
    py::register_exception<UnreadableError>(m, "UnreadableError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<TreeDiagram>(m, "Element")
        .def_static("identity", &TreeDiagram::identity)
        .def_static("x", [](std::size_t n) { return make_x(n); }, py::arg("n"))
        .def_static("from_word", &element_from_tokens, py::arg("tokens"),
                    "Parse a word in the generators, e.g. 'x0 X1 x2'.")
        .def_static("from_pairs", &element_from_pairs, py::arg("pairs"),
                    "Build from branch pairs [(u, v), ...]; 'e' is the empty word.")
        .def("pairs", &element_pairs, "Branch pairs of this diagram.")
        .def("reduced", &TreeDiagram::reduced)
        .def("is_reduced", &TreeDiagram::is_reduced)
        .def("is_identity", [](const TreeDiagram& d) { return d.reduced().is_identity(); })
        .def("inverse", &TreeDiagram::inverse)
        .def("leaf_count", &TreeDiagram::leaf_count)
        .def(py::self * py::self)
        .def("__eq__",
             [](const TreeDiagram& a, const TreeDiagram& b) { return a.reduced() == b.reduced(); })
        .def("__call__",
             [](const TreeDiagram& d, const std::string& word) {
                 return evaluate(d, Dyadic(word_from_text(word))).word();
             },
             py::arg("dyadic_word"), "Image of the dyadic fraction .word.")
        .def("abelianization",
             [](const TreeDiagram& d) {
                 const AbelianImage im = abelianize(d);
                 return std::make_pair(im.at_zero, im.at_one);
             })
        .def("log_slope_right",
             [](const TreeDiagram& d, const std::optional<std::string>& word) {
                 return log_slope_right(
                     d, word ? std::optional<Dyadic>(Dyadic(word_from_text(*word))) : std::nullopt);
             },
             py::arg("at") = py::none())
        .def("log_slope_left",
             [](const TreeDiagram& d, const std::optional<std::string>& word) {
                 return log_slope_left(
                     d, word ? std::optional<Dyadic>(Dyadic(word_from_text(*word))) : std::nullopt);
             },
             py::arg("at") = py::none())
        .def("tuple_sequence", [](const TreeDiagram& d) { return tuple_sequence(d); })
        .def("copy_in",
             [](const TreeDiagram& d, const std::string& u) {
                 return copy_in(word_from_text(u), d.reduced());
             },
             py::arg("interval"))
        .def("__or__", &direct_sum, "Direct sum: acts as self on [0] and other on [1].")
        .def("__repr__", [](const TreeDiagram& d) {
            std::ostringstream out;
            out << "Element(";
            bool first = true;
            for (const auto& [u, v] : d.branch_pairs()) {
                if (!first) out << ", ";
                out << word_to_text(u) << "->" << word_to_text(v);
                first = false;
            }
            out << ")";
            return out.str();
        });

    py::class_<Automaton>(m, "Automaton")
        .def_static("single_vertex", &Automaton::single_vertex)
        .def_static("core_of_f", &Automaton::core_of_f)
        .def_static("loads", &load_automaton_text, py::arg("text"))
        .def("dumps", [](const Automaton& a) { return save_automaton_text(a); })
        .def("dot",
             [](const Automaton& a) {
                 std::ostringstream out;
                 write_dot(a, out);
                 return out.str();
             })
        .def_property_readonly("vertex_count", &Automaton::vertex_count)
        .def("is_full", &Automaton::is_full)
        .def("read_path",
             [](const Automaton& a, const std::string& u) -> std::optional<std::string> {
                 auto v = a.read_path(word_from_text(u));
                 if (!v) return std::nullopt;
                 return a.name(*v);
             },
             py::arg("word"))
        .def("accepts", [](const Automaton& a, const TreeDiagram& d) { return accepts(a, d); })
        .def("is_reduced", [](const Automaton& a) { return is_reduced_automaton(a); })
        .def("vertex_types",
             [](const Automaton& a) {
                 std::map<std::string, std::vector<std::string>> out;
                 const auto types = vertex_types(a);
                 for (std::size_t v = 0; v < a.vertex_count(); ++v) {
                     std::vector<std::string> entries;
                     for (unsigned t = 0; t < 4; ++t)
                         if (types[v].has(static_cast<VertexType>(t)))
                             entries.push_back(to_string(static_cast<VertexType>(t)));
                     out[a.name(static_cast<Automaton::Vertex>(v))] = entries;
                 }
                 return out;
             })
        .def("canonical_form", [](const Automaton& a) { return canonical_form(a); })
        .def("quotients",
             [](const Automaton& a, std::size_t cap) { return enumerate_quotients(a, cap); },
             py::arg("cap") = 10000)
        .def("fill_leaves", [](const Automaton& a) { return fill_leaves(a); })
        .def("__eq__",
             [](const Automaton& a, const Automaton& b) {
                 return canonical_form(a) == canonical_form(b);
             })
        .def("__repr__", [](const Automaton& a) {
            return "Automaton(" + std::to_string(a.vertex_count()) + " vertices)";
        });

    m.def("build_core",
          [](const std::vector<TreeDiagram>& gens) {
              std::vector<TreeDiagram> reduced;
              reduced.reserve(gens.size());
              for (const TreeDiagram& g : gens) reduced.push_back(g.reduced());
              return build_core(reduced);
          },
          py::arg("generators"), "The Stallings 2-core of the generated subgroup.");
    m.def("closure_contains", &closure_contains, py::arg("core"), py::arg("element"));
    m.def("contains_derived", &closure_contains_derived, py::arg("core"),
          "Does the closure contain the derived subgroup?");
    m.def("finitely_many_dyadic_orbits", &finitely_many_dyadic_orbits, py::arg("core"));
    m.def("is_generating",
          [](const std::vector<TreeDiagram>& gens) { return is_generating(gens); },
          py::arg("generators"));

    m.def("is_core_automaton",
          [](const Automaton& a, std::uint64_t budget) {
              const Verdict v = is_core_automaton(a, budget);
              py::dict out;
              out["verdict"] = verdict_str(v.kind);
              out["reason"] = v.reason;
              if (v.witness_pair)
                  out["witness"] = std::make_pair(word_to_text(v.witness_pair->first),
                                                  word_to_text(v.witness_pair->second));
              return out;
          },
          py::arg("automaton"), py::arg("budget") = kDefaultWordBudget);

    m.def("maximality",
          [](const std::vector<TreeDiagram>& gens, std::uint64_t budget, std::size_t cap) {
              const MaximalityReport r = maximality_verdict(gens, budget, cap);
              py::dict out;
              switch (r.result) {
                  case MaximalityReport::Result::MaximalInfiniteIndex:
                      out["verdict"] = "maximal-infinite-index";
                      break;
                  case MaximalityReport::Result::NotMaximal: out["verdict"] = "not-maximal"; break;
                  case MaximalityReport::Result::Unknown: out["verdict"] = "unknown"; break;
              }
              out["abelian_full"] = r.abelian_full;
              out["core_full"] = r.core_full;
              out["middle_count"] = r.middle_count;
              out["witness"] = r.witness;
              out["text"] = r.to_text();
              return out;
          },
          py::arg("generators"), py::arg("budget") = kDefaultWordBudget, py::arg("cap") = 10000);

    m.def("sum_p",
          [](const std::string& u, unsigned p) { return sum_p(word_from_text(u), JonesPrime(p)); },
          py::arg("word"), py::arg("p"));
    m.def("suf_p",
          [](const std::string& u, unsigned p) { return suf_p(word_from_text(u), JonesPrime(p)); },
          py::arg("word"), py::arg("p"));
    m.def("a_sum", [](unsigned p) { return a_sum(JonesPrime(p)); }, py::arg("p"));
    m.def("a_suf", [](unsigned p) { return a_suf(JonesPrime(p)); }, py::arg("p"));
    m.def("jones_generators",
          [](unsigned p) { return jones_generators(JonesPrime(p)); }, py::arg("p"));
    m.def("jones_pair_exists",
          [](const std::string& u, const std::string& v, unsigned p) {
              return jones_pair_exists(word_from_text(u), word_from_text(v), JonesPrime(p));
          },
          py::arg("u"), py::arg("v"), py::arg("p"));
    m.def("verify_jones_core",
          [](unsigned p) {
              const JonesCoreReport r = verify_jones_core(JonesPrime(p));
              py::dict out;
              out["ok"] = r.ok();
              out["vertex_count"] = r.vertex_count;
              out["expected_vertex_count"] = r.expected_vertex_count;
              out["census"] = r.census;
              out["full"] = r.full;
              out["text"] = r.to_text();
              return out;
          },
          py::arg("p"));

    m.def("ell0", [](const std::string& u) { return ell0(word_from_text(u)); }, py::arg("word"));
    m.def("ell1", [](const std::string& u) { return ell1(word_from_text(u)); }, py::arg("word"));
}
