// Regularity classification of avoidance classes.  The horizontal encoding
// is regular exactly when some basis pattern is an increasing-increasing
// juxtaposition and some basis pattern is an increasing-decreasing one.  The
// vertical encoding requires nine cell families to stay bounded inside the
// class; six are decided by basis membership alone, the three families with
// a decreasing top cell fall back to a search over universal alternations.
#include "insenc/classify.hpp"

#include <algorithm>
#include <set>

#include "insenc/generate.hpp"
#include "insenc/vertical.hpp"

namespace insenc {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Regular: return "regular";
        case Verdict::Irregular: return "irregular";
        case Verdict::Undecided: return "undecided";
    }
    throw InvalidInput("unknown verdict");
}

std::vector<Word> witness_family(const Word& gamma) {
    if (!is_cayley(gamma))
        throw InvalidInput("witness_family requires a Cayley permutation");
    int h = height(gamma);
    std::set<Word> out;
    // branch over values 1..h, keeping first occurrences left to right
    struct Frame {
        Word word;
        int value;
        int pos_prev;  // 1-based position of the first occurrence of value-1
    };
    std::vector<Frame> stack{{gamma, 1, 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.value > h) {
            out.insert(std::move(f.word));
            continue;
        }
        int first = 0;
        for (size_t i = 0; i < f.word.size(); ++i)
            if (f.word[i] == f.value) {
                first = static_cast<int>(i) + 1;
                break;
            }
        if (first > f.pos_prev)
            stack.push_back({f.word, f.value + 1, first});
        for (int q = f.pos_prev + 1; q <= first; ++q) {
            Word w = f.word;
            w.insert(w.begin() + (q - 1), f.value);
            stack.push_back({std::move(w), f.value + 1, q});
        }
    }
    return {out.begin(), out.end()};
}

namespace {

// Does every completed witness of this branch contain a basis pattern?
// Containment is monotone under insertion, so a branch whose current word
// already contains a pattern is covered without expanding it; a completed
// witness that avoids the basis refutes the whole search.
bool branch_covered(const Word& word, int value, int pos_prev, int h,
                    const Basis& basis) {
    if (!avoids_basis(word, basis)) return true;
    if (value > h) return false;
    int first = 0;
    for (size_t idx = 0; idx < word.size(); ++idx)
        if (word[idx] == value) {
            first = static_cast<int>(idx) + 1;
            break;
        }
    if (first > pos_prev &&
        !branch_covered(word, value + 1, first, h, basis))
        return false;
    for (int q = pos_prev + 1; q <= first; ++q) {
        Word w = word;
        w.insert(w.begin() + (q - 1), value);
        if (!branch_covered(w, value + 1, q, h, basis)) return false;
    }
    return true;
}

}  // namespace

bool avoided_by_class(const Word& gamma, const Basis& basis) {
    if (!is_cayley(gamma))
        throw InvalidInput("avoided_by_class requires a Cayley permutation");
    return branch_covered(gamma, 1, 0, height(gamma), basis);
}

namespace {

std::optional<Word> basis_witness(const Basis& basis, const FamilyTag& tag) {
    for (const Word& beta : basis.patterns())
        if (in_class(beta, tag)) return beta;
    return std::nullopt;
}

Word family_alternation(const FamilyTag& tag, int m) {
    return tag.shape == 'G' ? g_alternation(tag, m)
                            : vertical_alternation(tag, m);
}

}  // namespace

ClassificationReport classify_h(const Basis& basis, Mode mode) {
    ClassificationReport rep;
    rep.encoding = "horizontal";
    rep.mode = to_string(mode);
    FamilyTag inc_inc{'H', CellKind::Inc, CellKind::Inc};
    FamilyTag inc_dec{'H', CellKind::Inc, CellKind::Dec};
    auto w1 = basis_witness(basis, inc_inc);
    auto w2 = basis_witness(basis, inc_dec);
    rep.witnesses.emplace_back("H(I,I)", w1);
    rep.witnesses.emplace_back("H(I,D)", w2);
    rep.verdict = w1 && w2 ? Verdict::Regular : Verdict::Irregular;
    return rep;
}

ClassificationReport classify_v(const Basis& basis, int m_max) {
    ClassificationReport rep;
    rep.encoding = "vertical";
    rep.mode = "rgf";
    rep.search_bound = m_max;
    const FamilyTag exact[] = {
        {'G', CellKind::Inc, CellKind::Inc}, {'G', CellKind::Dec, CellKind::Inc},
        {'G', CellKind::Inc, CellKind::Const},
        {'G', CellKind::Dec, CellKind::Const},
        {'V', CellKind::Const, CellKind::Inc},
        {'V', CellKind::Const, CellKind::Const}};
    const FamilyTag searched[] = {{'G', CellKind::Inc, CellKind::Dec},
                                  {'G', CellKind::Dec, CellKind::Dec},
                                  {'V', CellKind::Const, CellKind::Dec}};
    bool irregular = false;
    for (const FamilyTag& tag : exact) {
        auto w = basis_witness(basis, tag);
        irregular = irregular || !w;
        rep.witnesses.emplace_back(to_string(tag), w);
    }
    bool undecided = false;
    for (const FamilyTag& tag : searched) {
        auto w = basis_witness(basis, tag);
        if (!w && !irregular) {
            // no basis pattern grids: look for an avoided alternation
            for (int m = 1; m <= m_max && !w; ++m) {
                Word alt = family_alternation(tag, m);
                if (avoided_by_class(alt, basis)) w = alt;
            }
            undecided = undecided || !w;
        }
        rep.witnesses.emplace_back(to_string(tag), w);
    }
    rep.verdict = irregular ? Verdict::Irregular
                  : undecided ? Verdict::Undecided
                              : Verdict::Regular;
    return rep;
}

std::vector<Word> sb_h_basis(int k) {
    if (k < 1) throw InvalidInput("slot bound must be positive");
    Word perm(k + 1);
    for (int i = 0; i < k + 1; ++i) perm[i] = i + 1;
    std::vector<Word> out;
    do {
        Word w;
        for (int i = 1; i <= k; ++i) w.push_back(i);
        w.insert(w.end(), perm.begin(), perm.end());
        out.push_back(std::move(w));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> sb_v_basis(int k) {
    if (k < 1) throw InvalidInput("slot bound must be positive");
    std::set<Word> out;
    for_each_cayley(k, [&](const Word& a) {
        int n = height(a);
        int j_last = 0;
        for (int j = 1; j <= k; ++j)
            if (a[j - 1] == n) j_last = j;
        // fills f_0..f_k, each >= n; the value n only at slots >= j_last
        std::vector<int> fill(k + 1, 0);
        auto assemble = [&]() {
            Word w;
            for (int v = 1; v <= n; ++v) w.push_back(v);
            for (int i = 0; i <= k; ++i) {
                w.push_back(fill[i]);
                if (i < k) w.push_back(a[i]);
            }
            if (is_cayley(w)) out.insert(std::move(w));
        };
        auto rec = [&](auto&& self, int i) -> void {
            if (i > k) {
                assemble();
                return;
            }
            for (int v = n; v <= n + k + 1; ++v) {
                if (v == n && i < j_last) continue;
                fill[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    });
    return {out.begin(), out.end()};
}

int slot_probe(const Basis& basis, char encoding, int n_max, Mode mode) {
    if (encoding != 'h' && encoding != 'v')
        throw InvalidInput("encoding must be 'h' or 'v'");
    if (encoding == 'v' && mode == Mode::Matching)
        throw InvalidInput(
            "the vertical insertion encoding has no matching mode");
    int best = 0;
    auto probe = [&](const Word& pi) {
        best = std::max(best,
                        encoding == 'h' ? max_slots_h(pi) : max_slots_v(pi));
    };
    for (int n = 1; n <= n_max; ++n) {
        if (mode == Mode::Matching)
            for_each_matching_rgf_avoiding(n, basis, probe);
        else
            for_each_rgf_avoiding(n, basis, probe);
    }
    return best;
}

}  // namespace insenc
