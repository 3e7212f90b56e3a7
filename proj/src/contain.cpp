#include "insenc/contain.hpp"

#include <algorithm>
#include <sstream>

namespace insenc {

namespace {

int cmp(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

// DFS for the lexicographically first occurrence. idx holds 0-based chosen
// positions for sigma[0..idx.size()-1]; pinned_last pins sigma's last index
// to pi's last position (contains_using_last).
bool dfs(const Word& pi, const Word& sigma, std::vector<int>& idx,
         bool pinned_last) {
    const int n = static_cast<int>(pi.size());
    const int m = static_cast<int>(sigma.size());
    const int t = static_cast<int>(idx.size());
    const int done = pinned_last ? m - 1 : m;
    if (t == done) return true;
    int lo = idx.empty() ? 0 : idx.back() + 1;
    int hi = (pinned_last ? n - 1 : n) - (done - t);  // leave room for the rest
    for (int p = lo; p <= hi; ++p) {
        bool ok = true;
        for (int s = 0; s < t && ok; ++s)
            ok = cmp(sigma[s], sigma[t]) == cmp(pi[idx[s]], pi[p]);
        if (ok && pinned_last)
            ok = cmp(sigma[t], sigma[m - 1]) == cmp(pi[p], pi[n - 1]);
        if (!ok) continue;
        idx.push_back(p);
        if (dfs(pi, sigma, idx, pinned_last)) return true;
        idx.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains(const Word& pi, const Word& sigma) {
    if (sigma.size() > pi.size()) return std::nullopt;
    if (sigma.empty()) return std::vector<int>{};
    std::vector<int> idx;
    if (!dfs(pi, sigma, idx, false)) return std::nullopt;
    for (int& i : idx) ++i;  // report 1-based
    return idx;
}

bool contains_using_last(const Word& pi, const Word& sigma) {
    if (sigma.empty() || sigma.size() > pi.size() || pi.empty()) return false;
    std::vector<int> idx;
    return dfs(pi, sigma, idx, true);
}

bool avoids(const Word& pi, const Word& sigma) {
    return !contains(pi, sigma).has_value();
}

Basis::Basis(std::vector<Word> patterns) {
    for (const auto& p : patterns) {
        if (p.empty()) throw InvalidInput("empty basis pattern");
        if (!is_cayley(p))
            throw InvalidInput("basis pattern '" + format_word(p) +
                               "' is not a Cayley permutation");
    }
    std::sort(patterns.begin(), patterns.end(),
              [](const Word& a, const Word& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    patterns.erase(std::unique(patterns.begin(), patterns.end()),
                   patterns.end());
    // keep only patterns containing no earlier (smaller) kept pattern
    for (const auto& p : patterns) {
        bool redundant = false;
        for (const auto& kept : patterns_)
            if (contains(p, kept).has_value()) {
                redundant = true;
                break;
            }
        if (!redundant) patterns_.push_back(p);
    }
}

Basis Basis::parse(const std::string& text) {
    std::vector<Word> pats;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            pats.push_back(parse_word(cur));
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == ';' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return Basis(std::move(pats));
}

std::string Basis::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < patterns_.size(); ++i) {
        if (i) os << ';';
        os << format_word(patterns_[i]);
    }
    return os.str();
}

bool avoids_basis(const Word& pi, const Basis& basis) {
    for (const auto& p : basis.patterns())
        if (contains(pi, p).has_value()) return false;
    return true;
}

}  // namespace insenc
