#ifndef FCORE_DECIDE_HPP
#define FCORE_DECIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcore/automaton.hpp"
#include "fcore/core.hpp"
#include "fcore/element.hpp"
#include "fcore/rewriting.hpp"

namespace fcore {

/// A subgroup of Z^2, given by the abelianization images of a generating
/// set. Exact integer arithmetic throughout.
class AbelianSubgroup {
public:
    AbelianSubgroup() = default;
    explicit AbelianSubgroup(std::vector<AbelianImage> generators);

    const std::vector<AbelianImage>& generators() const { return gens_; }

    bool contains(long long x, long long y) const;
    bool is_full() const; // the whole of Z^2

    /// gcd of first coordinates (0 for none) and of second coordinates.
    long long first_gcd() const;
    long long second_gcd() const;

private:
    std::vector<AbelianImage> gens_;
    // triangular basis (a, b), (0, c) with a, c >= 0
    long long a_ = 0, b_ = 0, c_ = 0;
};

AbelianSubgroup abelian_subgroup(const std::vector<TreeDiagram>& gens);

/// A subgroup K of Z^2 is closed iff K = pZ x qZ; returns (p, q) when so.
std::optional<std::pair<long long, long long>> is_closed_abelian(const AbelianSubgroup& k);

/// The generation decision: gens generate all of F iff their abelian image
/// is the whole of Z^2 and the closure of the generated subgroup contains
/// the derived subgroup.
bool is_generating(const std::vector<TreeDiagram>& gens);

/// Outcome of the maximality decision for the closure of the generated
/// subgroup.
struct MaximalityReport {
    enum class Result { MaximalInfiniteIndex, NotMaximal, Unknown };

    bool abelian_full = false;  // (1) image in the abelianization is Z^2
    bool core_full = false;     // (2) the core has no leaves
    std::size_t middle_count = 0; // (3) needs more than one middle vertex

    struct QuotientEntry {
        Automaton automaton;
        enum class Status { IsSelf, IsCoreOfF, Refuted, CoreAutomaton, Undecided } status;
        Verdict verdict; // from is_core_automaton, for checked quotients
    };
    std::vector<QuotientEntry> census; // (4) every proper non-core-of-F image refuted

    Result result = Result::Unknown;
    std::string witness; // failing condition or the accepting quotient

    // The verdict applies to the closure of the generated subgroup: the core
    // determines conditions (2)-(4) for the closure, and a full abelian
    // image of the generators implies the same for the closure. Whether the
    // subgroup equals its closure is not decided here.
    std::string caveat() const;

    std::string to_text() const;
};

MaximalityReport maximality_verdict(const std::vector<TreeDiagram>& gens,
                                    std::uint64_t budget = kDefaultWordBudget,
                                    std::size_t cap = 10000);

} // namespace fcore

#endif
