#pragma once

#include <string>
#include <vector>

#include "insenc/horizontal.hpp"  // Mode
#include "insenc/word.hpp"

namespace insenc {

// Vertical insertion letters. Values are inserted smallest first, same-value
// occurrences left to right. Each letter names the slot consumed (1-based,
// left to right) and the shape of the replacement:
//   l: value with a slot to its right        m: slots on both sides
//   r: value with a slot to its left         f: fills, no remaining slot
// increase = true when the value is one larger than the previous letter's
// (the first letter always increases).
enum class VKind { L, M, R, F };

struct VLetter {
    VKind kind;
    int slot;
    bool increase;

    bool operator==(const VLetter&) const = default;
};

using VWord = std::vector<VLetter>;

std::string format_letter(const VLetter& a);   // "l{1,1}"
std::string format_letters(const VWord& w);
VWord parse_v_letters(const std::string& text);  // accepts 'l' and UTF-8 ell

// A configuration of the vertical evolution: placed values and slots in
// left-to-right order, plus the run threshold — the smallest slot index the
// next same-value letter may use (same-value occurrences go left to right).
struct ConfigV {
    std::vector<int> items;  // 0 = slot, otherwise the placed value
    int threshold = 1;       // 1 .. slot_count()+1
    bool initial = true;     // before the first letter (no run yet)

    int slot_count() const;
    bool operator==(const ConfigV&) const = default;
};

ConfigV initial_config_v();

// Letters legal in this configuration under the mode, in a fixed order.
// Rgf mode restricts increase letters to l{1,1} and f{1,1}.
// Matching mode is undefined for the vertical encoding: InvalidInput.
std::vector<VLetter> legal_letters_v(const ConfigV& c, Mode mode);

ConfigV apply_letter_v(const ConfigV& c, const VLetter& a, Mode mode);

VWord encode_v(const Word& pi);

Word decode_v(const VWord& w, Mode mode = Mode::Cayley);

// Alphabet-level check: rgf words only increase via l{1,1} or f{1,1}.
bool conforms_v(const VWord& w, Mode mode);

int max_slots_v(const Word& pi);

}  // namespace insenc
