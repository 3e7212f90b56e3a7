#pragma once

#include <string>
#include <vector>

#include "insenc/word.hpp"

namespace insenc {

// Evolution mode: which words a configuration may evolve into.
enum class Mode { Cayley, Rgf, Matching };

std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

// Horizontal insertion letters. Points are inserted left to right; each letter
// names the slot consumed (1-based, bottom-up) and its effect:
//   u: new value with a new slot left below it      m: new slots below and above
//   d: new value with a new slot left above it      f: fills, no new slot
// repeat = true marks a value that occurs again later (leaves a repeat slot at
// its level). Only f letters may be applied to repeat slots.
enum class HKind { U, M, D, F };

struct HLetter {
    HKind kind;
    int slot;
    bool repeat;

    bool operator==(const HLetter&) const = default;
};

using HWord = std::vector<HLetter>;

std::string format_letter(const HLetter& a);     // "m{1,1}"
std::string format_letters(const HWord& w);
HWord parse_h_letters(const std::string& text);

// A configuration of the horizontal evolution: the placed points (as level
// ids, bottom level = 1) plus the pending slots — at most one repeat slot per
// placed level and at most one new slot per gap between adjacent levels
// (including below the bottom and above the top). Slots are indexed bottom-up:
// gap 0, level 1, gap 1, level 2, ..., level r, gap r.
struct ConfigH {
    std::vector<char> level_repeat;  // r entries: repeat slot at level?
    std::vector<char> gap_new;       // r+1 entries: new slot in gap?
    Word placed;                     // placed points as level ids

    int levels() const { return static_cast<int>(level_repeat.size()); }
    int slot_count() const;
    bool operator==(const ConfigH&) const = default;
};

// One new slot (everything is still to come), nothing placed.
ConfigH initial_config_h();

// Letters legal in this configuration under the mode, in a fixed order
// (by slot, then kind u,m,d,f, then repeat flag 0,1).
std::vector<HLetter> legal_letters_h(const ConfigH& c, Mode mode);

// Apply one letter; IllegalLetter when it is not legal in this mode.
ConfigH apply_letter_h(const ConfigH& c, const HLetter& a, Mode mode);

// The insertion encoding of a Cayley permutation (mode follows the word).
HWord encode_h(const Word& pi);

// Decode a letter word back to the Cayley permutation it evolves.
// DanglingSlots when slots remain after the last letter.
Word decode_h(const HWord& w, Mode mode = Mode::Cayley);

// Alphabet-level check: rgf words use only d/f letters; matching words use
// only d{i,1}, f{i,1}, f{i,0}.
bool conforms_h(const HWord& w, Mode mode);

// Largest slot count over all configurations in the evolution of pi
// (including the initial configuration).
int max_slots_h(const Word& pi);

}  // namespace insenc
