#include "fcore/jones.hpp"

#include <sstream>

#include "fcore/core.hpp"

namespace fcore {

JonesPrime::JonesPrime(unsigned value) : value_(value) {
    if (value < 2) throw std::invalid_argument("Jones parameter must be a prime >= 2");
    for (unsigned d = 2; d * d <= value; ++d)
        if (value % d == 0)
            throw std::invalid_argument("Jones parameter must be prime, got " +
                                        std::to_string(value));
}

unsigned sum_p(const Word& u, JonesPrime p) {
    unsigned s = 0;
    for (char c : u)
        if (c == '1') s = (s + 1) % p.value();
    return s;
}

unsigned suf_p(const Word& u, JonesPrime p) {
    return static_cast<unsigned>(ell1(u) % p.value());
}

Automaton a_sum(JonesPrime p) {
    std::vector<Automaton::VertexSpec> spec(p.value());
    for (std::uint32_t i = 0; i < p.value(); ++i) {
        spec[i].name = "a" + std::to_string(i);
        spec[i].child = {i, (i + 1) % p.value()};
    }
    return Automaton(std::move(spec), 0);
}

Automaton a_suf(JonesPrime p) {
    std::vector<Automaton::VertexSpec> spec(p.value());
    for (std::uint32_t i = 0; i < p.value(); ++i) {
        spec[i].name = "b" + std::to_string(i);
        spec[i].child = {0, (i + 1) % p.value()};
    }
    return Automaton(std::move(spec), 0);
}

std::vector<TreeDiagram> jones_generators(JonesPrime p) {
    std::vector<TreeDiagram> gens;
    gens.reserve(p.value() + 1);
    for (std::size_t i = 0; i <= p.value(); ++i) {
        TreeDiagram g = TreeDiagram::identity();
        for (std::size_t k = 0; k < p.value(); ++k) g = g * make_x(i + k);
        gens.push_back(std::move(g));
    }
    return gens;
}

bool jones_pair_exists(const Word& u, const Word& v, JonesPrime p) {
    auto contains = [](const Word& w, char d) { return w.find(d) != Word::npos; };
    return contains(u, '0') == contains(v, '0') && contains(u, '1') == contains(v, '1') &&
           sum_p(u, p) == sum_p(v, p) && suf_p(u, p) == suf_p(v, p);
}

bool JonesCoreReport::ok() const {
    return vertex_count == expected_vertex_count && census == expected_census && full &&
           morphism_onto_sum && morphism_onto_suf;
}

std::string JonesCoreReport::to_text() const {
    std::ostringstream out;
    out << "Jones core verification, p = " << p << "\n";
    out << "  vertices: " << vertex_count << " (expected " << expected_vertex_count << ")\n";
    static const char* kinds[4] = {"root", "left", "right", "middle"};
    for (unsigned t = 0; t < 4; ++t)
        out << "  " << kinds[t] << " vertices: " << census[t] << " (expected "
            << expected_census[t] << ")\n";
    out << "  full (no leaves): " << (full ? "yes" : "no") << "\n";
    out << "  surjective morphism onto digit-sum automaton: " << (morphism_onto_sum ? "yes" : "no")
        << "\n";
    out << "  surjective morphism onto ones-suffix automaton: "
        << (morphism_onto_suf ? "yes" : "no") << "\n";
    out << "  result: " << (ok() ? "ok" : "FAILED") << "\n";
    return out.str();
}

JonesCoreReport verify_jones_core(JonesPrime p) {
    JonesCoreReport r;
    r.p = p.value();
    const Automaton core = build_core(jones_generators(p));
    r.vertex_count = core.vertex_count();
    r.expected_vertex_count = static_cast<std::size_t>(p.value()) * p.value() + p.value() + 2;
    r.census = type_census(core);
    r.expected_census = {1, 1, p.value(), static_cast<std::size_t>(p.value()) * p.value()};
    r.full = core.is_full();
    auto ms = find_morphism(core, a_sum(p));
    auto mf = find_morphism(core, a_suf(p));
    r.morphism_onto_sum = ms && ms->surjective;
    r.morphism_onto_suf = mf && mf->surjective;
    return r;
}

} // namespace fcore
