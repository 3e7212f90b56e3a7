// Horizontal insertion encoding: points of a Cayley permutation are placed
// left to right; the configuration tracks, bottom to top, which levels must
// receive another point (repeat slots) and which gaps must receive a new
// value (new slots).  Letters name the slot used, how a new value splits its
// gap (u/m/d/f), and whether the inserted value recurs later (the j flag).
#include "insenc/horizontal.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

namespace insenc {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Cayley: return "cayley";
        case Mode::Rgf: return "rgf";
        case Mode::Matching: return "matching";
    }
    throw InvalidInput("unknown mode");
}

Mode parse_mode(const std::string& s) {
    if (s == "cayley") return Mode::Cayley;
    if (s == "rgf") return Mode::Rgf;
    if (s == "matching") return Mode::Matching;
    throw InvalidInput("unknown mode: " + s);
}

namespace {

char kind_char(HKind k) {
    switch (k) {
        case HKind::U: return 'u';
        case HKind::M: return 'm';
        case HKind::D: return 'd';
        case HKind::F: return 'f';
    }
    throw InvalidInput("unknown letter kind");
}

}  // namespace

std::string format_letter(const HLetter& a) {
    std::ostringstream os;
    os << kind_char(a.kind) << '{' << a.slot << ',' << (a.repeat ? 1 : 0)
       << '}';
    return os.str();
}

std::string format_letters(const HWord& w) {
    std::string out;
    for (const auto& a : w) out += format_letter(a);
    return out;
}

HWord parse_h_letters(const std::string& text) {
    HWord out;
    size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw InvalidInput("bad letter word at position " +
                           std::to_string(i) + ": " + what);
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        HKind kind;
        switch (text[i]) {
            case 'u': kind = HKind::U; break;
            case 'm': kind = HKind::M; break;
            case 'd': kind = HKind::D; break;
            case 'f': kind = HKind::F; break;
            default: fail("expected letter kind u/m/d/f");
        }
        ++i;
        if (i >= text.size() || text[i] != '{') fail("expected '{'");
        ++i;
        size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start || i - start > 6) fail("expected slot index");
        int slot = std::stoi(text.substr(start, i - start));
        if (slot < 1) fail("slot index must be positive");
        if (i >= text.size() || text[i] != ',') fail("expected ','");
        ++i;
        if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
            fail("expected repeat flag 0 or 1");
        bool repeat = text[i] == '1';
        ++i;
        if (i >= text.size() || text[i] != '}') fail("expected '}'");
        ++i;
        out.push_back(HLetter{kind, slot, repeat});
    }
    return out;
}

int ConfigH::slot_count() const {
    int n = 0;
    for (char b : level_repeat) n += b ? 1 : 0;
    for (char b : gap_new) n += b ? 1 : 0;
    return n;
}

ConfigH initial_config_h() {
    ConfigH c;
    c.gap_new = {1};
    return c;
}

namespace {

// A slot position in the bottom-to-top interleaved order
// gap 0, level 1, gap 1, ..., level r, gap r.
struct SlotRef {
    bool is_gap;
    int index;  // gap: 0-based gap number; level: 1-based level number
};

std::vector<SlotRef> slots_in_order(const ConfigH& c) {
    std::vector<SlotRef> out;
    int r = c.levels();
    for (int g = 0; g <= r; ++g) {
        if (c.gap_new[g]) out.push_back({true, g});
        if (g < r && c.level_repeat[g]) out.push_back({false, g + 1});
    }
    return out;
}

bool kind_legal_on_gap(HKind kind, int gap, const ConfigH& c, Mode mode) {
    switch (mode) {
        case Mode::Cayley:
            return true;
        case Mode::Rgf:
        case Mode::Matching:
            if (kind == HKind::F) return true;
            if (kind == HKind::D) return gap == c.levels();  // topmost gap
            return false;
    }
    return false;
}

bool repeat_legal_on_gap(bool repeat, Mode mode) {
    return mode != Mode::Matching || repeat;  // first occurrence must recur
}

bool repeat_legal_on_level(bool repeat, Mode mode) {
    return mode != Mode::Matching || !repeat;  // second occurrence is last
}

}  // namespace

std::vector<HLetter> legal_letters_h(const ConfigH& c, Mode mode) {
    std::vector<HLetter> out;
    auto order = slots_in_order(c);
    const HKind kinds[] = {HKind::U, HKind::M, HKind::D, HKind::F};
    for (size_t s = 0; s < order.size(); ++s) {
        int slot = static_cast<int>(s) + 1;
        if (order[s].is_gap) {
            for (HKind k : kinds) {
                if (!kind_legal_on_gap(k, order[s].index, c, mode)) continue;
                for (int j = 0; j <= 1; ++j)
                    if (repeat_legal_on_gap(j != 0, mode))
                        out.push_back(HLetter{k, slot, j != 0});
            }
        } else {
            for (int j = 0; j <= 1; ++j)
                if (repeat_legal_on_level(j != 0, mode))
                    out.push_back(HLetter{HKind::F, slot, j != 0});
        }
    }
    return out;
}

ConfigH apply_letter_h(const ConfigH& c, const HLetter& a, Mode mode) {
    auto order = slots_in_order(c);
    if (a.slot < 1 || a.slot > static_cast<int>(order.size()))
        throw IllegalLetter("letter " + format_letter(a) +
                            " names a slot the configuration lacks");
    SlotRef ref = order[a.slot - 1];
    ConfigH next = c;
    if (!ref.is_gap) {
        // A repeat slot accepts only f letters.
        if (a.kind != HKind::F)
            throw IllegalLetter("letter " + format_letter(a) +
                                " is not an f letter on a repeat slot");
        if (!repeat_legal_on_level(a.repeat, mode))
            throw IllegalLetter("letter " + format_letter(a) +
                                " would give a value a third occurrence");
        next.level_repeat[ref.index - 1] = a.repeat ? 1 : 0;
        next.placed.push_back(ref.index);
        return next;
    }
    int g = ref.index;
    if (!kind_legal_on_gap(a.kind, g, c, mode))
        throw IllegalLetter("letter " + format_letter(a) +
                            " is outside the " + to_string(mode) +
                            " alphabet for this slot");
    if (!repeat_legal_on_gap(a.repeat, mode))
        throw IllegalLetter("letter " + format_letter(a) +
                            " starts a value that never recurs");
    // Insert a new level directly above level g; points above shift up.
    for (int& v : next.placed)
        if (v > g) ++v;
    next.placed.push_back(g + 1);
    next.level_repeat.insert(next.level_repeat.begin() + g, a.repeat ? 1 : 0);
    bool below = a.kind == HKind::U || a.kind == HKind::M;
    bool above = a.kind == HKind::D || a.kind == HKind::M;
    next.gap_new[g] = below ? 1 : 0;
    next.gap_new.insert(next.gap_new.begin() + g + 1, above ? 1 : 0);
    return next;
}

namespace {

// Slot profile of the prefix pi[0..t-2] with future points pi[t-1..]:
// the letter consumed by point t names a slot of this profile.
struct Profile {
    std::vector<int> values;           // distinct placed values, ascending
    std::vector<char> level_marked;    // parallel to values
    std::vector<char> gap_marked;      // size values.size()+1
    int slot_count() const {
        int n = 0;
        for (char b : level_marked) n += b ? 1 : 0;
        for (char b : gap_marked) n += b ? 1 : 0;
        return n;
    }
};

Profile profile_at(const Word& pi, int t) {
    Profile p;
    std::vector<char> placed_seen(pi.size() + 2, 0);
    for (int i = 0; i + 1 < t; ++i) placed_seen[pi[i]] = 1;
    for (size_t v = 1; v < placed_seen.size(); ++v)
        if (placed_seen[v]) p.values.push_back(static_cast<int>(v));
    std::vector<char> future(pi.size() + 2, 0);
    for (size_t i = t - 1; i < pi.size(); ++i) future[pi[i]] = 1;
    int r = static_cast<int>(p.values.size());
    p.level_marked.assign(r, 0);
    for (int i = 0; i < r; ++i) p.level_marked[i] = future[p.values[i]];
    p.gap_marked.assign(r + 1, 0);
    for (int g = 0; g <= r; ++g) {
        int lo = g == 0 ? 0 : p.values[g - 1];
        int hi = g == r ? INT_MAX : p.values[g];
        for (size_t y = 1; y < future.size(); ++y)
            if (future[y] && static_cast<int>(y) > lo &&
                static_cast<int>(y) < hi)
                p.gap_marked[g] = 1;
    }
    return p;
}

// Bottom-to-top slot index of the given gap/level mark within the profile.
int profile_slot_index(const Profile& p, bool is_gap, int index) {
    int slot = 0;
    int r = static_cast<int>(p.values.size());
    for (int g = 0; g <= r; ++g) {
        if (p.gap_marked[g]) {
            ++slot;
            if (is_gap && g == index) return slot;
        }
        if (g < r && p.level_marked[g]) {
            ++slot;
            if (!is_gap && g == index) return slot;
        }
    }
    throw InvalidInput("profile slot lookup failed");
}

}  // namespace

HWord encode_h(const Word& pi) {
    if (!is_cayley(pi))
        throw InvalidInput("encode_h requires a Cayley permutation");
    int n = static_cast<int>(pi.size());
    HWord out;
    for (int t = 1; t <= n; ++t) {
        Profile p = profile_at(pi, t);
        int x = pi[t - 1];
        std::vector<char> later(pi.size() + 2, 0);
        for (int i = t; i < n; ++i) later[pi[i]] = 1;
        bool recurs = later[x];
        auto at = std::find(p.values.begin(), p.values.end(), x);
        if (at != p.values.end()) {
            int level_pos = static_cast<int>(at - p.values.begin());
            out.push_back(HLetter{HKind::F,
                                  profile_slot_index(p, false, level_pos),
                                  recurs});
            continue;
        }
        int g = 0;
        while (g < static_cast<int>(p.values.size()) && p.values[g] < x) ++g;
        int lo = g == 0 ? 0 : p.values[g - 1];
        int hi = g == static_cast<int>(p.values.size()) ? INT_MAX
                                                        : p.values[g];
        bool below = false, above = false;
        for (size_t y = 1; y < later.size(); ++y) {
            if (!later[y]) continue;
            int yy = static_cast<int>(y);
            if (yy > lo && yy < x) below = true;
            if (yy > x && yy < hi) above = true;
        }
        HKind kind = below ? (above ? HKind::M : HKind::U)
                           : (above ? HKind::D : HKind::F);
        out.push_back(HLetter{kind, profile_slot_index(p, true, g), recurs});
    }
    return out;
}

Word decode_h(const HWord& w, Mode mode) {
    ConfigH c = initial_config_h();
    for (const HLetter& a : w) c = apply_letter_h(c, a, mode);
    if (c.slot_count() != 0)
        throw DanglingSlots("word leaves " + std::to_string(c.slot_count()) +
                            " unfilled slots");
    return c.placed;
}

bool conforms_h(const HWord& w, Mode mode) {
    ConfigH c = initial_config_h();
    try {
        for (const HLetter& a : w) c = apply_letter_h(c, a, mode);
    } catch (const IllegalLetter&) {
        return false;
    }
    return true;
}

int max_slots_h(const Word& pi) {
    if (!is_cayley(pi))
        throw InvalidInput("max_slots_h requires a Cayley permutation");
    int best = 0;
    for (int t = 1; t <= static_cast<int>(pi.size()); ++t)
        best = std::max(best, profile_at(pi, t).slot_count());
    return best;
}

}  // namespace insenc
