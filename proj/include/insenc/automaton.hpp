#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insenc/classify.hpp"
#include "insenc/contain.hpp"
#include "insenc/horizontal.hpp"
#include "insenc/word.hpp"

namespace insenc {

using BigInt = boost::multiprecision::cpp_int;

// Deterministic finite automaton over insertion-encoding letters (letters are
// kept as their textual form). Partial: missing transitions reject. State 0 is
// the start state; every state lies on some path from the start to an
// accepting state (no dead states).
struct Dfa {
    std::vector<char> accepting;
    // trans[s] sorted by letter text: (letter, target)
    std::vector<std::vector<std::pair<std::string, int>>> trans;

    std::string encoding;  // "horizontal" or "vertical"
    std::string mode;      // "rgf" or "matching"
    std::string basis;     // canonical basis text
    int slot_bound = 0;

    int state_count() const { return static_cast<int>(accepting.size()); }
};

enum class BuildStatus { Built, NotSlotBounded, CapExceeded };

struct BuildOutcome {
    BuildStatus status = BuildStatus::NotSlotBounded;
    std::optional<Dfa> dfa;             // set when status == Built
    ClassificationReport report;        // classifier outcome backing the verdict
    int slot_bound = 0;                 // exact bound when built
};

// Build the accepting DFA for the insertion encoding of the avoidance class.
// encoding 'h' supports Mode::Rgf and Mode::Matching; encoding 'v' supports
// Mode::Rgf (vertical matching encoding is undefined: InvalidInput).
// An Irregular classification refuses immediately (NotSlotBounded). The slot
// bound is computed exactly before the state search — via the canonical
// slot-bound bases for rgf modes, by iterated bounded enumeration for
// matchings; state_cap bounds the number of constructed states.
BuildOutcome build_dfa(const Basis& basis, char encoding, Mode mode,
                       int state_cap = 200000, int m_max = 4);

// Number of accepted words of length n (= class members of size n).
BigInt count_accepted(const Dfa& d, int n);

// Counts for lengths 1..n_max.
std::vector<BigInt> count_series(const Dfa& d, int n_max);

// Moore partition refinement; preserves the language, no dead states,
// idempotent. State 0 remains the start state.
Dfa minimize(const Dfa& d);

std::string dfa_to_json(const Dfa& d);

struct SoundnessReport {
    bool ok = true;
    std::string detail;  // first counterexample when !ok
};

// Diagnostic for the state abstraction: enumerate concrete configurations
// reachable by legal prefixes, group them by abstract state signature, and
// check that same-signature configurations admit identical legal letters and
// identical acceptance over all continuations of length <= depth.
SoundnessReport check_state_soundness(const Basis& basis, char encoding,
                                      Mode mode, int depth);

}  // namespace insenc
