#ifndef FCORE_JONES_HPP
#define FCORE_JONES_HPP

#include <string>
#include <vector>

#include "fcore/automaton.hpp"
#include "fcore/element.hpp"

namespace fcore {

/// A prime parameter p >= 2 for the Jones subgroup family; primality is
/// checked at construction and composites are rejected.
class JonesPrime {
public:
    explicit JonesPrime(unsigned value);
    unsigned value() const { return value_; }

private:
    unsigned value_;
};

/// Number of 1-digits of u modulo p; well-defined on dyadic fractions since
/// trailing zeros carry no ones.
unsigned sum_p(const Word& u, JonesPrime p);

/// Length of the longest all-ones suffix of u, modulo p.
unsigned suf_p(const Word& u, JonesPrime p);

/// The automaton with vertices a_0..a_{p-1}, a 0-loop at each vertex and
/// 1-edges cycling a_i -> a_{i+1}; reading u ends at a_{sum_p(u)}.
Automaton a_sum(JonesPrime p);

/// The automaton with vertices b_0..b_{p-1}, 0-edges all to b_0 and 1-edges
/// cycling b_i -> b_{i+1}; reading u ends at b_{suf_p(u)}.
Automaton a_suf(JonesPrime p);

/// The p+1 generators x_i x_{i+1} ... x_{i+p-1}, i = 0..p, of the subgroup
/// accepted by a_sum(p).
std::vector<TreeDiagram> jones_generators(JonesPrime p);

/// True iff some element of the Jones subgroup has the pair of branches
/// u -> v: u and v agree on containing the digit 0, on containing the digit
/// 1, on sum_p and on suf_p.
bool jones_pair_exists(const Word& u, const Word& v, JonesPrime p);

/// Batch verification of the structure of the Jones core: vertex count
/// p^2 + p + 2, type census (1 root, 1 left, p right, p^2 middle),
/// surjective morphisms onto a_sum and a_suf, and fullness.
struct JonesCoreReport {
    unsigned p = 0;
    std::size_t vertex_count = 0;
    std::size_t expected_vertex_count = 0;
    std::array<std::size_t, 4> census{};          // root, left, right, middle
    std::array<std::size_t, 4> expected_census{};
    bool full = false;
    bool morphism_onto_sum = false;
    bool morphism_onto_suf = false;

    bool ok() const;
    std::string to_text() const;
};

JonesCoreReport verify_jones_core(JonesPrime p);

} // namespace fcore

#endif
