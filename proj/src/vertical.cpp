// Vertical insertion encoding: values of a Cayley permutation are inserted
// smallest first, same-value occurrences left to right.  The configuration
// is the left-to-right sequence of placed values and slots; the run
// threshold keeps same-value insertions moving rightward, which makes the
// letter word canonical.
#include "insenc/vertical.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace insenc {

namespace {

char kind_char(VKind k) {
    switch (k) {
        case VKind::L: return 'l';
        case VKind::M: return 'm';
        case VKind::R: return 'r';
        case VKind::F: return 'f';
    }
    throw InvalidInput("unknown letter kind");
}

}  // namespace

std::string format_letter(const VLetter& a) {
    std::ostringstream os;
    os << kind_char(a.kind) << '{' << a.slot << ',' << (a.increase ? 1 : 0)
       << '}';
    return os.str();
}

std::string format_letters(const VWord& w) {
    std::string out;
    for (const auto& a : w) out += format_letter(a);
    return out;
}

VWord parse_v_letters(const std::string& text) {
    VWord out;
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
        VKind kind;
        if (text.compare(i, 3, "ℓ") == 0) {  // script ell
            kind = VKind::L;
            i += 3;
        } else {
            switch (text[i]) {
                case 'l': kind = VKind::L; break;
                case 'm': kind = VKind::M; break;
                case 'r': kind = VKind::R; break;
                case 'f': kind = VKind::F; break;
                default: fail("expected letter kind l/m/r/f");
            }
            ++i;
        }
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
            fail("expected increase flag 0 or 1");
        bool increase = text[i] == '1';
        ++i;
        if (i >= text.size() || text[i] != '}') fail("expected '}'");
        ++i;
        out.push_back(VLetter{kind, slot, increase});
    }
    return out;
}

int ConfigV::slot_count() const {
    int n = 0;
    for (int v : items) n += v == 0 ? 1 : 0;
    return n;
}

ConfigV initial_config_v() {
    ConfigV c;
    c.items = {0};
    return c;
}

namespace {

void require_supported(Mode mode) {
    if (mode == Mode::Matching)
        throw InvalidInput(
            "the vertical insertion encoding has no matching mode");
}

bool increase_legal(const VLetter& a, Mode mode) {
    if (mode == Mode::Rgf)
        return a.slot == 1 && (a.kind == VKind::L || a.kind == VKind::F);
    return true;
}

int next_threshold(VKind kind, int slot) {
    switch (kind) {
        case VKind::L: return slot;
        case VKind::M: return slot + 1;
        case VKind::R: return slot + 1;
        case VKind::F: return slot;
    }
    throw InvalidInput("unknown letter kind");
}

}  // namespace

std::vector<VLetter> legal_letters_v(const ConfigV& c, Mode mode) {
    require_supported(mode);
    std::vector<VLetter> out;
    int slots = c.slot_count();
    const VKind kinds[] = {VKind::L, VKind::M, VKind::R, VKind::F};
    for (int i = 1; i <= slots; ++i) {
        for (VKind k : kinds) {
            for (int j = 0; j <= 1; ++j) {
                VLetter a{k, i, j != 0};
                if (a.increase && !increase_legal(a, mode)) continue;
                if (!a.increase && (c.initial || i < c.threshold)) continue;
                out.push_back(a);
            }
        }
    }
    return out;
}

ConfigV apply_letter_v(const ConfigV& c, const VLetter& a, Mode mode) {
    require_supported(mode);
    int slots = c.slot_count();
    if (a.slot < 1 || a.slot > slots)
        throw IllegalLetter("letter " + format_letter(a) +
                            " names a slot the configuration lacks");
    if (a.increase) {
        if (!increase_legal(a, mode))
            throw IllegalLetter("letter " + format_letter(a) +
                                " is not an rgf increase letter");
    } else {
        if (c.initial)
            throw IllegalLetter("letter " + format_letter(a) +
                                " repeats before any value is placed");
        if (a.slot < c.threshold)
            throw IllegalLetter("letter " + format_letter(a) +
                                " lands left of the previous occurrence");
    }
    int current = 0;
    for (int v : c.items) current = std::max(current, v);
    int value = a.increase ? current + 1 : current;
    // locate the a.slot-th slot
    size_t pos = 0;
    for (int seen = 0;; ++pos) {
        if (c.items[pos] == 0 && ++seen == a.slot) break;
    }
    ConfigV next = c;
    next.initial = false;
    next.threshold = next_threshold(a.kind, a.slot);
    std::vector<int> repl;
    switch (a.kind) {
        case VKind::L: repl = {value, 0}; break;
        case VKind::M: repl = {0, value, 0}; break;
        case VKind::R: repl = {0, value}; break;
        case VKind::F: repl = {value}; break;
    }
    next.items.erase(next.items.begin() + pos);
    next.items.insert(next.items.begin() + pos, repl.begin(), repl.end());
    return next;
}

VWord encode_v(const Word& pi) {
    if (!is_cayley(pi))
        throw InvalidInput("encode_v requires a Cayley permutation");
    int n = static_cast<int>(pi.size());
    // points ordered by (value, position)
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pi[a] < pi[b];
    });
    std::vector<char> placed(n, 0);
    VWord out;
    int prev_value = 0;
    for (int p : order) {
        // slots are the maximal runs of unplaced positions
        int slot = 0;
        bool in_run = false;
        int run_lo = -1;
        for (int q = 0; q <= p; ++q) {
            if (!placed[q]) {
                if (!in_run) {
                    ++slot;
                    in_run = true;
                    run_lo = q;
                }
            } else {
                in_run = false;
            }
        }
        bool left = false, right = false;
        for (int q = run_lo; q < p; ++q) left = left || !placed[q];
        for (int q = p + 1; q < n && !placed[q]; ++q) right = true;
        VKind kind = left ? (right ? VKind::M : VKind::R)
                          : (right ? VKind::L : VKind::F);
        out.push_back(VLetter{kind, slot, pi[p] > prev_value});
        prev_value = pi[p];
        placed[p] = 1;
    }
    return out;
}

Word decode_v(const VWord& w, Mode mode) {
    require_supported(mode);
    ConfigV c = initial_config_v();
    for (const VLetter& a : w) c = apply_letter_v(c, a, mode);
    if (c.slot_count() != 0)
        throw DanglingSlots("word leaves " + std::to_string(c.slot_count()) +
                            " unfilled slots");
    return c.items;
}

bool conforms_v(const VWord& w, Mode mode) {
    require_supported(mode);
    if (mode == Mode::Cayley) return true;
    for (const VLetter& a : w)
        if (a.increase && !increase_legal(a, mode)) return false;
    return true;
}

int max_slots_v(const Word& pi) {
    if (!is_cayley(pi))
        throw InvalidInput("max_slots_v requires a Cayley permutation");
    int n = static_cast<int>(pi.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pi[a] < pi[b];
    });
    std::vector<char> placed(n, 0);
    int best = 0;
    for (int step = 0; step <= n; ++step) {
        int runs = 0;
        bool in_run = false;
        for (int q = 0; q < n; ++q) {
            if (!placed[q]) {
                if (!in_run) ++runs;
                in_run = true;
            } else {
                in_run = false;
            }
        }
        best = std::max(best, runs);
        if (step < n) placed[order[step]] = 1;
    }
    return best;
}

}  // namespace insenc
