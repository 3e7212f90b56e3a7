// Accepting DFA for the insertion encoding of an avoidance class. States
// abstract a configuration to its slot structure plus, per basis pattern, the
// set of partial occurrences among the placed points (tracked through value
// zones), which is exactly the information that determines which continuations
// complete without ever creating a basis occurrence.

#include "insenc/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "insenc/generate.hpp"
#include "insenc/vertical.hpp"
#include "json.hpp"

namespace insenc {
namespace {

constexpr int kMaxBoundH = 6;
constexpr int kMaxBoundV = 4;
constexpr int kMaxBoundMatching = 6;

// ---------------------------------------------------------------------------
// Exact slot bound.
//
// Rgf modes: the class stays within k slots iff every element of the k-slot
// canonical basis is avoided by the whole class, so the exact bound is the
// smallest such k. Matchings: iterate a bounded enumeration — if every class
// matching of size <= 2k+2 stays within k slots then all of them do.
// ---------------------------------------------------------------------------

int find_bound_rgf(const Basis& basis, char encoding) {
    const int cap = encoding == 'h' ? kMaxBoundH : kMaxBoundV;
    for (int k = 1; k <= cap; ++k) {
        const std::vector<Word> sb =
            encoding == 'h' ? sb_h_basis(k) : sb_v_basis(k);
        bool all = true;
        for (const Word& gamma : sb) {
            if (!avoided_by_class(gamma, basis)) {
                all = false;
                break;
            }
        }
        if (all) return k;
    }
    return 0;
}

int find_bound_matching(const Basis& basis) {
    int k = 1;
    while (k <= kMaxBoundMatching) {
        int widest = 0;
        for (int n = 2; n <= 2 * k + 2; n += 2) {
            for_each_matching_rgf_avoiding(n, basis, [&](const Word& pi) {
                widest = std::max(widest, max_slots_h(pi));
            });
        }
        if (widest <= k) return std::max(widest, 1);
        k = widest;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Horizontal abstraction. Reachable rgf/matching configurations consist of
// live levels (repeat slot present) interleaved with dead ones, plus at most
// one new slot in the top gap. Placed points are summarised per basis pattern
// by partial occurrences: the matched prefix length and, for each realized
// pattern value, the zone its points occupy. Zones, bottom-up over the r live
// levels: between-zone 2i+1 (strictly between live levels i and i+1, i = 0..r)
// and at-zone 2i (exactly at live level i). Points in one zone compare
// identically against every future point, so the abstraction is exact.
// ---------------------------------------------------------------------------

struct HMatch {
    int j = 0;             // matched prefix length of the pattern
    std::vector<int> psi;  // zone per pattern value, 0 = not yet realized

    bool operator==(const HMatch&) const = default;
    bool operator<(const HMatch& o) const {
        return std::tie(j, psi) < std::tie(o.j, o.psi);
    }
};

struct HState {
    int r = 0;        // live levels
    bool top = true;  // new slot in the top gap
    std::vector<std::vector<HMatch>> match;  // per basis pattern, sorted
};

std::vector<int> h_key(const HState& st) {
    std::vector<int> key{st.r, st.top ? 1 : 0};
    for (const auto& ms : st.match) {
        key.push_back(static_cast<int>(ms.size()));
        for (const auto& m : ms) {
            key.push_back(m.j);
            key.insert(key.end(), m.psi.begin(), m.psi.end());
        }
    }
    return key;
}

std::vector<HLetter> h_abs_letters(int r, bool top, Mode mode) {
    std::vector<HLetter> out;
    for (int i = 1; i <= r; ++i) {
        out.push_back({HKind::F, i, false});
        if (mode == Mode::Rgf) out.push_back({HKind::F, i, true});
    }
    if (top) {
        const int i = r + 1;
        if (mode == Mode::Rgf) {
            out.push_back({HKind::D, i, false});
            out.push_back({HKind::D, i, true});
            out.push_back({HKind::F, i, false});
            out.push_back({HKind::F, i, true});
        } else {
            out.push_back({HKind::D, i, true});
            out.push_back({HKind::F, i, true});
        }
    }
    return out;
}

// One abstract step; nullopt when the letter is suppressed (it would complete
// a basis occurrence) or pruned (the configuration would exceed the bound).
std::optional<HState> h_step(const HState& st, const HLetter& a,
                             const std::vector<Word>& betas, int bound) {
    const int r = st.r;
    const bool new_max = a.slot == r + 1;
    int nr = 0;
    bool ntop = false;
    int p_pre = 0;   // zone of the filled level before the step
    int p_post = 0;  // zone of the new point after the step
    if (!new_max) {
        const int i = a.slot;
        p_pre = 2 * i;
        if (a.repeat) {
            nr = r;
            p_post = 2 * i;
        } else {
            nr = r - 1;
            p_post = 2 * i - 1;
        }
        ntop = st.top;
    } else {
        ntop = a.kind == HKind::D;
        if (a.repeat) {
            nr = r + 1;
            p_post = 2 * r + 2;
        } else {
            nr = r;
            p_post = 2 * r + 1;
        }
    }
    if (nr + (ntop ? 1 : 0) > bound) return std::nullopt;

    const bool level_dies = !new_max && !a.repeat;
    auto remap = [&](int z) {
        if (!level_dies) return z;
        const int i = a.slot;
        if (z < 2 * i - 1) return z;
        if (z <= 2 * i + 1) return 2 * i - 1;
        return z - 2;
    };

    HState ns;
    ns.r = nr;
    ns.top = ntop;
    ns.match.resize(betas.size());
    for (size_t b = 0; b < betas.size(); ++b) {
        const Word& beta = betas[b];
        const int h = height(beta);
        auto& out_ms = ns.match[b];

        // false = the letter completes this pattern: suppress the transition.
        auto try_extend = [&](const HMatch& m) -> bool {
            const int c = beta[m.j];
            const bool realized = m.psi[c - 1] != 0;
            bool ok = true;
            if (new_max) {
                if (realized) return true;  // a new maximum never ties
                for (int v = c + 1; v <= h; ++v)
                    if (m.psi[v - 1] != 0) return true;  // must exceed all
            } else if (realized) {
                ok = m.psi[c - 1] == p_pre;
            } else {
                for (int v = c - 1; v >= 1; --v)
                    if (m.psi[v - 1] != 0) {
                        ok = m.psi[v - 1] < p_pre;
                        break;
                    }
                if (ok)
                    for (int v = c + 1; v <= h; ++v)
                        if (m.psi[v - 1] != 0) {
                            ok = m.psi[v - 1] > p_pre;
                            break;
                        }
            }
            if (!ok) return true;
            if (m.j + 1 == static_cast<int>(beta.size())) return false;
            HMatch e;
            e.j = m.j + 1;
            e.psi.resize(h, 0);
            for (int v = 1; v <= h; ++v)
                if (m.psi[v - 1] != 0) e.psi[v - 1] = remap(m.psi[v - 1]);
            if (!realized) e.psi[c - 1] = p_post;
            out_ms.push_back(std::move(e));
            return true;
        };

        for (const HMatch& m : st.match[b]) {
            HMatch s;
            s.j = m.j;
            s.psi.resize(h, 0);
            for (int v = 1; v <= h; ++v)
                if (m.psi[v - 1] != 0) s.psi[v - 1] = remap(m.psi[v - 1]);
            out_ms.push_back(std::move(s));
        }
        for (const HMatch& m : st.match[b])
            if (!try_extend(m)) return std::nullopt;
        HMatch empty;
        empty.psi.assign(h, 0);
        if (!try_extend(empty)) return std::nullopt;

        std::sort(out_ms.begin(), out_ms.end());
        out_ms.erase(std::unique(out_ms.begin(), out_ms.end()), out_ms.end());
    }
    return ns;
}

// ---------------------------------------------------------------------------
// Vertical abstraction. Values are inserted smallest first, so a partial
// occurrence of a pattern consists of complete value classes 1..c, the first
// p points (in index order) of class c+1, a hot flag (class c was completed
// at the value currently being inserted — the next class must not start at an
// equal value), and per realized pattern index its zone = number of slots
// strictly to its left, stored in index order.
// ---------------------------------------------------------------------------

struct VMatch {
    int c = 0;     // complete value classes
    int p = 0;     // realized points of class c+1 (always its first indices)
    bool hot = false;        // class c completed at the current value
    std::vector<int> zones;  // zone per realized index, in index order

    bool operator==(const VMatch&) const = default;
    bool operator<(const VMatch& o) const {
        return std::tie(c, p, hot, zones) < std::tie(o.c, o.p, o.hot, o.zones);
    }
};

struct VState {
    int s = 1;             // slot count
    int t = 1;             // run threshold
    bool initial = true;   // before the first letter
    std::vector<std::vector<VMatch>> match;
};

std::vector<int> v_key(const VState& st) {
    std::vector<int> key{st.s, st.t, st.initial ? 1 : 0};
    for (const auto& ms : st.match) {
        key.push_back(static_cast<int>(ms.size()));
        for (const auto& m : ms) {
            key.push_back(m.c);
            key.push_back(m.p);
            key.push_back(m.hot ? 1 : 0);
            key.push_back(static_cast<int>(m.zones.size()));
            key.insert(key.end(), m.zones.begin(), m.zones.end());
        }
    }
    return key;
}

std::vector<VLetter> v_abs_letters(int s, int t, bool initial) {
    std::vector<VLetter> out;
    if (s == 0) return out;
    out.push_back({VKind::L, 1, true});
    out.push_back({VKind::F, 1, true});
    if (!initial)
        for (int i = std::max(t, 1); i <= s; ++i)
            for (VKind kind : {VKind::L, VKind::M, VKind::R, VKind::F})
                out.push_back({kind, i, false});
    return out;
}

// Pattern indices realized by a (c, p) progress, ascending (0-based).
std::vector<int> v_realized(const std::vector<std::vector<int>>& classes,
                            int c, int p) {
    std::vector<int> out;
    for (int v = 0; v < c; ++v)
        out.insert(out.end(), classes[v].begin(), classes[v].end());
    for (int q = 0; q < p; ++q) out.push_back(classes[c][q]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VState> v_step(
    const VState& st, const VLetter& a,
    const std::vector<std::vector<std::vector<int>>>& beta_classes,
    int bound) {
    const int i = a.slot;
    int ns = st.s;
    if (a.kind == VKind::M) ns = st.s + 1;
    if (a.kind == VKind::F) ns = st.s - 1;
    if (ns > bound) return std::nullopt;
    int nt = i;
    if (a.kind == VKind::M || a.kind == VKind::R) nt = i + 1;

    auto remap = [&](int z) {
        if (a.kind == VKind::M) return z >= i ? z + 1 : z;
        if (a.kind == VKind::F) return z >= i ? z - 1 : z;
        return z;
    };
    const int p_zone =
        (a.kind == VKind::L || a.kind == VKind::F) ? i - 1 : i;

    VState out;
    out.s = ns;
    out.t = nt;
    out.initial = false;
    out.match.resize(beta_classes.size());
    for (size_t b = 0; b < beta_classes.size(); ++b) {
        const auto& classes = beta_classes[b];
        const int nclasses = static_cast<int>(classes.size());
        auto& out_ms = out.match[b];

        // false = the letter completes this pattern: suppress the transition.
        auto try_extend = [&](const VMatch& m) -> bool {
            if (a.increase) {
                if (m.p != 0) return true;  // the match dies, no extension
            } else if (m.p == 0 && m.hot) {
                return true;  // next class must start at a strictly larger value
            }
            const auto& cl = classes[m.c];
            const int u = cl[m.p];
            const std::vector<int> idxs = v_realized(classes, m.c, m.p);
            for (size_t q = 0; q < idxs.size(); ++q) {
                if (idxs[q] < u) {
                    if (m.zones[q] > i - 1) return true;
                } else {
                    if (m.zones[q] < i) return true;
                }
            }
            VMatch e;
            if (m.p + 1 == static_cast<int>(cl.size())) {
                e.c = m.c + 1;
                e.p = 0;
                e.hot = true;
            } else {
                e.c = m.c;
                e.p = m.p + 1;
                e.hot = false;
            }
            if (e.c == nclasses) return false;
            e.zones.reserve(idxs.size() + 1);
            size_t q = 0;
            for (; q < idxs.size() && idxs[q] < u; ++q)
                e.zones.push_back(remap(m.zones[q]));
            e.zones.push_back(p_zone);
            for (; q < idxs.size(); ++q) e.zones.push_back(remap(m.zones[q]));
            out_ms.push_back(std::move(e));
            return true;
        };

        for (const VMatch& m : st.match[b]) {
            if (a.increase && m.p != 0) continue;  // mid-class value change
            VMatch s2 = m;
            if (a.increase) s2.hot = false;
            for (int& z : s2.zones) z = remap(z);
            out_ms.push_back(std::move(s2));
        }
        for (const VMatch& m : st.match[b])
            if (!try_extend(m)) return std::nullopt;
        if (!try_extend(VMatch{})) return std::nullopt;

        std::sort(out_ms.begin(), out_ms.end());
        out_ms.erase(std::unique(out_ms.begin(), out_ms.end()), out_ms.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Breadth-first state search, then a backward trim from the accepting state
// so no dead states remain (the start state is always kept).
// ---------------------------------------------------------------------------

std::optional<Dfa> finish_dfa(
    std::vector<std::vector<std::pair<std::string, int>>> trans,
    int terminal) {
    const int n = static_cast<int>(trans.size());
    std::vector<char> keep(n, 0);
    if (terminal >= 0) {
        std::vector<std::vector<int>> rev(n);
        for (int s = 0; s < n; ++s)
            for (const auto& [text, t] : trans[s]) {
                (void)text;
                rev[t].push_back(s);
            }
        std::vector<int> work{terminal};
        keep[terminal] = 1;
        while (!work.empty()) {
            const int s = work.back();
            work.pop_back();
            for (int q : rev[s])
                if (!keep[q]) {
                    keep[q] = 1;
                    work.push_back(q);
                }
        }
    }
    keep[0] = 1;
    std::vector<int> newid(n, -1);
    int m = 0;
    for (int s = 0; s < n; ++s)
        if (keep[s]) newid[s] = m++;
    Dfa d;
    d.accepting.assign(m, 0);
    if (terminal >= 0) d.accepting[newid[terminal]] = 1;
    d.trans.resize(m);
    for (int s = 0; s < n; ++s) {
        if (!keep[s]) continue;
        auto& row = d.trans[newid[s]];
        for (auto& [text, t] : trans[s])
            if (keep[t]) row.emplace_back(std::move(text), newid[t]);
        std::sort(row.begin(), row.end());
    }
    return d;
}

std::optional<Dfa> build_h_states(const Basis& basis, Mode mode, int bound,
                                  int state_cap) {
    const std::vector<Word>& betas = basis.patterns();
    std::map<std::vector<int>, int> ids;
    std::vector<HState> states;
    std::vector<std::vector<std::pair<std::string, int>>> trans;
    int terminal = -1;
    bool over_cap = false;

    auto intern = [&](HState&& ns) -> int {
        if (ns.r == 0 && !ns.top) {
            if (terminal == -1) {
                terminal = static_cast<int>(trans.size());
                states.push_back(HState{});
                trans.emplace_back();
            }
            return terminal;
        }
        auto key = h_key(ns);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (static_cast<int>(trans.size()) >= state_cap) {
            over_cap = true;
            return -1;
        }
        const int id = static_cast<int>(trans.size());
        ids.emplace(std::move(key), id);
        states.push_back(std::move(ns));
        trans.emplace_back();
        return id;
    };

    HState start;
    start.r = 0;
    start.top = true;
    start.match.resize(betas.size());
    intern(std::move(start));
    for (int s = 0; s < static_cast<int>(trans.size()); ++s) {
        if (s == terminal) continue;
        const HState st = states[s];  // copy: states may reallocate
        for (const HLetter& a : h_abs_letters(st.r, st.top, mode)) {
            auto ns = h_step(st, a, betas, bound);
            if (!ns) continue;
            const int t = intern(std::move(*ns));
            if (over_cap) return std::nullopt;
            trans[s].emplace_back(format_letter(a), t);
        }
    }
    return finish_dfa(std::move(trans), terminal);
}

std::optional<Dfa> build_v_states(const Basis& basis, int bound,
                                  int state_cap) {
    std::vector<std::vector<std::vector<int>>> beta_classes;
    for (const Word& beta : basis.patterns()) {
        std::vector<std::vector<int>> classes(height(beta));
        for (size_t idx = 0; idx < beta.size(); ++idx)
            classes[beta[idx] - 1].push_back(static_cast<int>(idx));
        beta_classes.push_back(std::move(classes));
    }
    std::map<std::vector<int>, int> ids;
    std::vector<VState> states;
    std::vector<std::vector<std::pair<std::string, int>>> trans;
    int terminal = -1;
    bool over_cap = false;

    auto intern = [&](VState&& ns) -> int {
        if (ns.s == 0) {
            if (terminal == -1) {
                terminal = static_cast<int>(trans.size());
                states.push_back(VState{});
                trans.emplace_back();
            }
            return terminal;
        }
        auto key = v_key(ns);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (static_cast<int>(trans.size()) >= state_cap) {
            over_cap = true;
            return -1;
        }
        const int id = static_cast<int>(trans.size());
        ids.emplace(std::move(key), id);
        states.push_back(std::move(ns));
        trans.emplace_back();
        return id;
    };

    VState start;
    start.match.resize(beta_classes.size());
    intern(std::move(start));
    for (int s = 0; s < static_cast<int>(trans.size()); ++s) {
        if (s == terminal) continue;
        const VState st = states[s];
        for (const VLetter& a : v_abs_letters(st.s, st.t, st.initial)) {
            auto ns = v_step(st, a, beta_classes, bound);
            if (!ns) continue;
            const int t = intern(std::move(*ns));
            if (over_cap) return std::nullopt;
            trans[s].emplace_back(format_letter(a), t);
        }
    }
    return finish_dfa(std::move(trans), terminal);
}

}  // namespace

BuildOutcome build_dfa(const Basis& basis, char encoding, Mode mode,
                       int state_cap, int m_max) {
    if (encoding != 'h' && encoding != 'v')
        throw InvalidInput("build_dfa: encoding must be 'h' or 'v'");
    if (mode == Mode::Cayley)
        throw InvalidInput("build_dfa: mode must be Rgf or Matching");
    if (encoding == 'v' && mode == Mode::Matching)
        throw InvalidInput(
            "build_dfa: the vertical encoding has no matching mode");

    BuildOutcome out;
    out.report =
        encoding == 'h' ? classify_h(basis, mode) : classify_v(basis, m_max);
    if (out.report.verdict == Verdict::Irregular) {
        out.status = BuildStatus::NotSlotBounded;
        return out;
    }
    const int bound = mode == Mode::Matching ? find_bound_matching(basis)
                                             : find_bound_rgf(basis, encoding);
    if (bound == 0) {
        out.status = BuildStatus::CapExceeded;
        return out;
    }
    out.slot_bound = bound;
    std::optional<Dfa> dfa = encoding == 'h'
                                 ? build_h_states(basis, mode, bound, state_cap)
                                 : build_v_states(basis, bound, state_cap);
    if (!dfa) {
        out.status = BuildStatus::CapExceeded;
        return out;
    }
    dfa->encoding = encoding == 'h' ? "horizontal" : "vertical";
    dfa->mode = to_string(mode);
    dfa->basis = basis.to_string();
    dfa->slot_bound = bound;
    out.status = BuildStatus::Built;
    out.dfa = std::move(*dfa);
    return out;
}

BigInt count_accepted(const Dfa& d, int n) {
    if (n < 0) throw InvalidInput("count_accepted: negative length");
    const int N = d.state_count();
    std::vector<BigInt> cur(N), nxt(N);
    cur[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(nxt.begin(), nxt.end(), BigInt(0));
        for (int s = 0; s < N; ++s) {
            if (cur[s] == 0) continue;
            for (const auto& [text, t] : d.trans[s]) {
                (void)text;
                nxt[t] += cur[s];
            }
        }
        cur.swap(nxt);
    }
    BigInt total = 0;
    for (int s = 0; s < N; ++s)
        if (d.accepting[s]) total += cur[s];
    return total;
}

std::vector<BigInt> count_series(const Dfa& d, int n_max) {
    const int N = d.state_count();
    std::vector<BigInt> cur(N), nxt(N), out;
    cur[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        std::fill(nxt.begin(), nxt.end(), BigInt(0));
        for (int s = 0; s < N; ++s) {
            if (cur[s] == 0) continue;
            for (const auto& [text, t] : d.trans[s]) {
                (void)text;
                nxt[t] += cur[s];
            }
        }
        cur.swap(nxt);
        BigInt total = 0;
        for (int s = 0; s < N; ++s)
            if (d.accepting[s]) total += cur[s];
        out.push_back(std::move(total));
    }
    return out;
}

Dfa minimize(const Dfa& d) {
    const int n = d.state_count();
    Dfa r;
    r.encoding = d.encoding;
    r.mode = d.mode;
    r.basis = d.basis;
    r.slot_bound = d.slot_bound;
    const bool any_accepting =
        std::any_of(d.accepting.begin(), d.accepting.end(),
                    [](char a) { return a != 0; });
    if (!any_accepting) {
        r.accepting.assign(1, 0);
        r.trans.resize(1);
        return r;
    }

    std::map<std::string, int> alphabet;
    for (const auto& row : d.trans)
        for (const auto& [text, t] : row) {
            (void)t;
            alphabet.emplace(text, 0);
        }
    int na = 0;
    for (auto& [text, id] : alphabet) {
        (void)text;
        id = na++;
    }
    // transition table with an explicit reject sink at index n
    std::vector<std::vector<int>> table(n + 1, std::vector<int>(na, n));
    for (int s = 0; s < n; ++s)
        for (const auto& [text, t] : d.trans[s])
            table[s][alphabet.at(text)] = t;

    std::vector<int> block(n + 1, 0);
    for (int s = 0; s < n; ++s) block[s] = d.accepting[s] ? 1 : 0;
    int nblocks = 2;
    while (true) {
        std::map<std::vector<int>, int> sigs;
        std::vector<int> next(n + 1);
        for (int s = 0; s <= n; ++s) {
            std::vector<int> sig{block[s]};
            for (int a = 0; a < na; ++a) sig.push_back(block[table[s][a]]);
            next[s] =
                sigs.emplace(std::move(sig), static_cast<int>(sigs.size()))
                    .first->second;
        }
        const int count = static_cast<int>(sigs.size());
        block.swap(next);
        const bool stable = count == nblocks;
        nblocks = count;
        if (stable) break;
    }

    const int sink_block = block[n];
    std::vector<int> block_id(nblocks, -1);
    std::vector<int> rep;
    for (int s = 0; s < n; ++s) {
        if (block[s] == sink_block) continue;
        if (block_id[block[s]] == -1) {
            block_id[block[s]] = static_cast<int>(rep.size());
            rep.push_back(s);
        }
    }
    r.accepting.assign(rep.size(), 0);
    r.trans.resize(rep.size());
    for (size_t b = 0; b < rep.size(); ++b) {
        const int s = rep[b];
        r.accepting[b] = d.accepting[s];
        for (const auto& [text, t] : d.trans[s])
            if (block[t] != sink_block)
                r.trans[b].emplace_back(text, block_id[block[t]]);
    }
    return r;
}

std::string dfa_to_json(const Dfa& d) {
    nlohmann::json j;
    j["encoding"] = d.encoding;
    j["mode"] = d.mode;
    j["basis"] = d.basis;
    j["slot_bound"] = d.slot_bound;
    j["state_count"] = d.state_count();
    std::vector<int> acc;
    for (int s = 0; s < d.state_count(); ++s)
        if (d.accepting[s]) acc.push_back(s);
    j["accepting"] = acc;
    nlohmann::json edges = nlohmann::json::array();
    for (int s = 0; s < d.state_count(); ++s)
        for (const auto& [text, t] : d.trans[s])
            edges.push_back({{"from", s}, {"letter", text}, {"to", t}});
    j["transitions"] = edges;
    return j.dump(2);
}

SoundnessReport check_state_soundness(const Basis& basis, char encoding,
                                      Mode mode, int depth) {
    SoundnessReport rep;
    auto out = build_dfa(basis, encoding, mode);
    if (out.status != BuildStatus::Built) {
        rep.ok = false;
        rep.detail = "automaton was not built";
        return rep;
    }
    const Dfa& d = *out.dfa;
    auto fail = [&](std::string msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.detail = std::move(msg);
        }
    };
    auto step_dfa = [&](int s, const std::string& text) -> std::optional<int> {
        const auto& row = d.trans[s];
        auto it = std::lower_bound(
            row.begin(), row.end(), text,
            [](const auto& pr, const std::string& t) { return pr.first < t; });
        if (it != row.end() && it->first == text) return it->second;
        return std::nullopt;
    };

    if (encoding == 'h') {
        HWord prefix;
        std::function<void(const ConfigH&, std::optional<int>, int)> walk =
            [&](const ConfigH& c, std::optional<int> st, int left) {
                if (!rep.ok) return;
                const auto legal = legal_letters_h(c, mode);
                std::set<std::string> texts;
                for (const auto& a : legal) texts.insert(format_letter(a));
                if (st)
                    for (const auto& [text, t] : d.trans[*st]) {
                        (void)t;
                        if (!texts.count(text)) {
                            fail("dfa offers illegal letter " + text +
                                 " after \"" + format_letters(prefix) + "\"");
                            return;
                        }
                    }
                if (left == 0) return;
                for (const auto& a : legal) {
                    const ConfigH nc = apply_letter_h(c, a, mode);
                    const std::optional<int> nst =
                        st ? step_dfa(*st, format_letter(a)) : std::nullopt;
                    prefix.push_back(a);
                    if (nc.slot_count() == 0) {
                        const Word pi = decode_h(prefix, mode);
                        const bool concrete = avoids_basis(pi, basis);
                        const bool accepted = nst && d.accepting[*nst];
                        if (concrete != accepted)
                            fail("acceptance mismatch on \"" +
                                 format_letters(prefix) + "\" = " +
                                 format_word(pi));
                    } else {
                        walk(nc, nst, left - 1);
                    }
                    prefix.pop_back();
                    if (!rep.ok) return;
                }
            };
        walk(initial_config_h(), 0, depth);
    } else {
        VWord prefix;
        std::function<void(const ConfigV&, std::optional<int>, int)> walk =
            [&](const ConfigV& c, std::optional<int> st, int left) {
                if (!rep.ok) return;
                const auto legal = legal_letters_v(c, mode);
                std::set<std::string> texts;
                for (const auto& a : legal) texts.insert(format_letter(a));
                if (st)
                    for (const auto& [text, t] : d.trans[*st]) {
                        (void)t;
                        if (!texts.count(text)) {
                            fail("dfa offers illegal letter " + text +
                                 " after \"" + format_letters(prefix) + "\"");
                            return;
                        }
                    }
                if (left == 0) return;
                for (const auto& a : legal) {
                    const ConfigV nc = apply_letter_v(c, a, mode);
                    const std::optional<int> nst =
                        st ? step_dfa(*st, format_letter(a)) : std::nullopt;
                    prefix.push_back(a);
                    if (nc.slot_count() == 0) {
                        const Word pi = decode_v(prefix, mode);
                        const bool concrete = avoids_basis(pi, basis);
                        const bool accepted = nst && d.accepting[*nst];
                        if (concrete != accepted)
                            fail("acceptance mismatch on \"" +
                                 format_letters(prefix) + "\" = " +
                                 format_word(pi));
                    } else {
                        walk(nc, nst, left - 1);
                    }
                    prefix.pop_back();
                    if (!rep.ok) return;
                }
            };
        walk(initial_config_v(), 0, depth);
    }
    return rep;
}

}  // namespace insenc
