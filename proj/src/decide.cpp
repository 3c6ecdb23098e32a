#include "fcore/decide.hpp"

#include <numeric>
#include <sstream>

namespace fcore {

AbelianSubgroup::AbelianSubgroup(std::vector<AbelianImage> generators)
    : gens_(std::move(generators)) {
    // column-style Hermite reduction of the 2 x n generator matrix to the
    // triangular basis (a, b), (0, c)
    std::vector<std::pair<long long, long long>> rows;
    rows.reserve(gens_.size());
    for (const AbelianImage& g : gens_) rows.emplace_back(g.at_zero, g.at_one);
    for (auto& [x, y] : rows) {
        // fold (x, y) into the basis
        while (x != 0) {
            if (a_ == 0) {
                a_ = x;
                b_ = y;
                x = 0;
                y = 0; // fully absorbed into the basis
            } else {
                long long q = x / a_;
                x -= q * a_;
                y -= q * b_;
                if (x != 0) {
                    std::swap(a_, x);
                    std::swap(b_, y);
                }
            }
        }
        // now x == 0; fold y into c
        c_ = std::gcd(c_, y);
        y = 0;
    }
    if (a_ < 0) {
        a_ = -a_;
        b_ = -b_;
    }
    c_ = std::llabs(c_);
    if (c_ != 0) b_ = ((b_ % c_) + c_) % c_;
}

bool AbelianSubgroup::contains(long long x, long long y) const {
    if (a_ == 0) {
        if (x != 0) return false;
    } else {
        if (x % a_ != 0) return false;
        y -= (x / a_) * b_;
    }
    if (c_ == 0) return y == 0;
    return y % c_ == 0;
}

bool AbelianSubgroup::is_full() const { return contains(1, 0) && contains(0, 1); }

long long AbelianSubgroup::first_gcd() const {
    long long g = 0;
    for (const AbelianImage& im : gens_) g = std::gcd(g, static_cast<long long>(im.at_zero));
    return g;
}

long long AbelianSubgroup::second_gcd() const {
    long long g = 0;
    for (const AbelianImage& im : gens_) g = std::gcd(g, static_cast<long long>(im.at_one));
    return g;
}

AbelianSubgroup abelian_subgroup(const std::vector<TreeDiagram>& gens) {
    std::vector<AbelianImage> images;
    images.reserve(gens.size());
    for (const TreeDiagram& g : gens) images.push_back(abelianize(g));
    return AbelianSubgroup(std::move(images));
}

std::optional<std::pair<long long, long long>> is_closed_abelian(const AbelianSubgroup& k) {
    long long p = k.first_gcd();
    long long q = k.second_gcd();
    if (k.contains(p, 0) && k.contains(0, q)) return std::make_pair(p, q);
    return std::nullopt;
}

bool is_generating(const std::vector<TreeDiagram>& gens) {
    if (!abelian_subgroup(gens).is_full()) return false;
    std::vector<TreeDiagram> reduced;
    reduced.reserve(gens.size());
    for (const TreeDiagram& g : gens) reduced.push_back(g.reduced());
    return closure_contains_derived(build_core(reduced));
}

std::string MaximalityReport::caveat() const {
    return "Conditions were checked for the closure of the generated subgroup; the core "
           "determines the closure, and whether the subgroup equals its closure is not decided "
           "here.";
}

std::string MaximalityReport::to_text() const {
    std::ostringstream out;
    out << "(1) abelian image is all of Z^2: " << (abelian_full ? "yes" : "no") << "\n";
    out << "(2) core is full (no leaves): " << (core_full ? "yes" : "no") << "\n";
    out << "(3) middle vertices: " << middle_count << (middle_count > 1 ? " (more than one)" : "")
        << "\n";
    if (!census.empty()) {
        out << "(4) quotient census (" << census.size() << " surjective images):\n";
        for (const QuotientEntry& e : census) {
            out << "    " << e.automaton.vertex_count() << " vertices: ";
            switch (e.status) {
                case QuotientEntry::Status::IsSelf: out << "the core itself"; break;
                case QuotientEntry::Status::IsCoreOfF: out << "the core of the whole group"; break;
                case QuotientEntry::Status::Refuted:
                    out << "not a core automaton (" << e.verdict.reason;
                    if (e.verdict.witness_pair)
                        out << "; witness " << word_to_text(e.verdict.witness_pair->first) << ", "
                            << word_to_text(e.verdict.witness_pair->second);
                    out << ")";
                    break;
                case QuotientEntry::Status::CoreAutomaton: out << "IS a core automaton"; break;
                case QuotientEntry::Status::Undecided: out << "undecided within budget"; break;
            }
            out << "\n";
        }
    }
    out << "verdict: ";
    switch (result) {
        case Result::MaximalInfiniteIndex: out << "maximal subgroup of infinite index"; break;
        case Result::NotMaximal: out << "not maximal (" << witness << ")"; break;
        case Result::Unknown: out << "unknown (" << witness << ")"; break;
    }
    out << "\nnote: " << caveat() << "\n";
    return out.str();
}

MaximalityReport maximality_verdict(const std::vector<TreeDiagram>& gens, std::uint64_t budget,
                                    std::size_t cap) {
    MaximalityReport report;
    std::vector<TreeDiagram> reduced;
    reduced.reserve(gens.size());
    for (const TreeDiagram& g : gens) reduced.push_back(g.reduced());

    report.abelian_full = abelian_subgroup(reduced).is_full();
    const Automaton core = build_core(reduced);
    report.core_full = core.is_full();
    const auto census = type_census(core);
    report.middle_count = census[static_cast<unsigned>(VertexType::Middle)];

    if (!report.abelian_full || !report.core_full || report.middle_count <= 1) {
        report.result = MaximalityReport::Result::NotMaximal;
        std::ostringstream why;
        if (!report.abelian_full) why << "abelian image is a proper subgroup of Z^2";
        else if (!report.core_full) why << "the core has a leaf";
        else why << "unique middle vertex, so the closure contains the derived subgroup";
        report.witness = why.str();
        return report;
    }

    const std::string self_form = canonical_form(core);
    const std::string f_form = canonical_form(Automaton::core_of_f());
    bool any_unknown = false;
    std::optional<std::size_t> accepting;
    for (Automaton& q : enumerate_quotients(core, cap)) {
        MaximalityReport::QuotientEntry entry{std::move(q), {}, Verdict::yes()};
        const std::string form = canonical_form(entry.automaton);
        if (form == self_form) {
            entry.status = MaximalityReport::QuotientEntry::Status::IsSelf;
        } else if (form == f_form) {
            entry.status = MaximalityReport::QuotientEntry::Status::IsCoreOfF;
        } else {
            entry.verdict = is_core_automaton(entry.automaton, budget);
            switch (entry.verdict.kind) {
                case VerdictKind::No:
                    entry.status = MaximalityReport::QuotientEntry::Status::Refuted;
                    break;
                case VerdictKind::Yes:
                    entry.status = MaximalityReport::QuotientEntry::Status::CoreAutomaton;
                    accepting = report.census.size();
                    break;
                case VerdictKind::Unknown:
                    entry.status = MaximalityReport::QuotientEntry::Status::Undecided;
                    any_unknown = true;
                    break;
            }
        }
        report.census.push_back(std::move(entry));
    }

    if (accepting) {
        report.result = MaximalityReport::Result::NotMaximal;
        std::ostringstream why;
        why << "a proper quotient with " << report.census[*accepting].automaton.vertex_count()
            << " vertices is a core automaton, so a proper closed overgroup exists";
        report.witness = why.str();
    } else if (any_unknown) {
        report.result = MaximalityReport::Result::Unknown;
        report.witness = "some quotient could not be decided within budget";
    } else {
        report.result = MaximalityReport::Result::MaximalInfiniteIndex;
    }
    return report;
}

} // namespace fcore
