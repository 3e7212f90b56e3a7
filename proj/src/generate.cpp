#include "insenc/generate.hpp"

#include <algorithm>

namespace insenc {

namespace {

// Any word over [1, h] using every value of [1, h] is a Cayley permutation;
// track the values of [1, mx] not used yet so dead branches are cut early.
void cayley_rec(int n, Word& w, int mx, std::vector<char>& used, int missing,
                const std::function<void(const Word&)>& fn) {
    const int len = static_cast<int>(w.size());
    if (len == n) {
        if (missing == 0) fn(w);
        return;
    }
    const int left_after = n - len - 1;
    for (int v = 1; v <= mx + 1 + (left_after - missing); ++v) {
        const int jump = std::max(0, v - mx - 1);  // fresh values skipped below v
        const int drop = (v <= mx && !used[v]) ? 1 : 0;
        const int new_missing = missing + jump - drop;
        if (new_missing > left_after) continue;
        const char was = used[v];
        used[v] = 1;
        w.push_back(v);
        cayley_rec(n, w, std::max(mx, v), used, new_missing, fn);
        w.pop_back();
        used[v] = was;
    }
}

bool extension_allowed(const Word& w, const Basis& basis) {
    for (const auto& p : basis.patterns())
        if (contains_using_last(w, p)) return false;
    return true;
}

void rgf_rec(int n, Word& w, int mx, const Basis& basis,
             const std::function<void(const Word&)>& fn) {
    if (static_cast<int>(w.size()) == n) {
        fn(w);
        return;
    }
    for (int v = 1; v <= mx + 1; ++v) {
        w.push_back(v);
        if (extension_allowed(w, basis))
            rgf_rec(n, w, std::max(mx, v), basis, fn);
        w.pop_back();
    }
}

void matching_rec(int n, Word& w, int mx, std::vector<int>& count, int open,
                  const Basis& basis,
                  const std::function<void(const Word&)>& fn) {
    const int len = static_cast<int>(w.size());
    if (len == n) {
        if (open == 0) fn(w);
        return;
    }
    const int remaining = n - len;
    for (int v = 1; v <= mx + 1; ++v) {
        const bool fresh = v == mx + 1;
        if (!fresh && count[v] != 1) continue;  // second occurrence only
        const int new_open = open + (fresh ? 1 : -1);
        if (new_open > remaining - 1) continue;  // unfinished values must fit
        if (fresh) count.push_back(1);
        else ++count[v];
        w.push_back(v);
        if (extension_allowed(w, basis))
            matching_rec(n, w, std::max(mx, v), count, new_open, basis, fn);
        w.pop_back();
        if (fresh) count.pop_back();
        else --count[v];
    }
}

}  // namespace

void for_each_cayley(int n, const std::function<void(const Word&)>& fn) {
    if (n <= 0) return;
    Word w;
    w.reserve(n);
    std::vector<char> used(n + 2, 0);
    cayley_rec(n, w, 0, used, 0, fn);
}

std::vector<Word> all_cayley(int n) {
    std::vector<Word> out;
    for_each_cayley(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

void for_each_rgf_avoiding(int n, const Basis& basis,
                           const std::function<void(const Word&)>& fn) {
    if (n <= 0) return;
    Word w;
    w.reserve(n);
    rgf_rec(n, w, 0, basis, fn);
}

std::vector<Word> rgfs_avoiding(int n, const Basis& basis) {
    std::vector<Word> out;
    for_each_rgf_avoiding(n, basis, [&](const Word& w) { out.push_back(w); });
    return out;
}

void for_each_matching_rgf_avoiding(int n, const Basis& basis,
                                    const std::function<void(const Word&)>& fn) {
    if (n <= 0 || n % 2 != 0) return;
    Word w;
    w.reserve(n);
    std::vector<int> count{0};  // count[0] unused
    matching_rec(n, w, 0, count, 0, basis, fn);
}

std::vector<Word> matching_rgfs_avoiding(int n, const Basis& basis) {
    std::vector<Word> out;
    for_each_matching_rgf_avoiding(n, basis,
                                   [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace insenc
