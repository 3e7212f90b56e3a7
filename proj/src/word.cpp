#include "insenc/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace insenc {

int height(const Word& w) {
    int h = 0;
    for (int v : w) h = std::max(h, v);
    return h;
}

Word standardise(const Word& w) {
    std::map<int, int> rank;
    for (int v : w) rank[v] = 0;
    int r = 0;
    for (auto& [v, rk] : rank) rk = ++r;
    Word out;
    out.reserve(w.size());
    for (int v : w) out.push_back(rank[v]);
    return out;
}

bool is_cayley(const Word& w) {
    int h = 0;
    for (int v : w) {
        if (v < 1) return false;
        h = std::max(h, v);
    }
    std::vector<char> seen(h + 1, 0);
    for (int v : w) seen[v] = 1;
    for (int v = 1; v <= h; ++v)
        if (!seen[v]) return false;
    return true;
}

bool is_rgf(const Word& w) {
    int mx = 0;
    for (int v : w) {
        if (v < 1 || v > mx + 1) return false;
        mx = std::max(mx, v);
    }
    return true;
}

bool is_matching_rgf(const Word& w) {
    if (!is_rgf(w)) return false;
    std::vector<int> count(height(w) + 1, 0);
    for (int v : w) ++count[v];
    for (int v = 1; v < static_cast<int>(count.size()); ++v)
        if (count[v] != 2) return false;
    return true;
}

std::string format_word(const Word& w) {
    std::ostringstream os;
    if (height(w) <= 9) {
        for (int v : w) os << v;
    } else {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ',';
            os << w[i];
        }
    }
    return os.str();
}

namespace {

int parse_value(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty value in word '" + s + "'");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidInput("bad character in word value '" + s + "'");
    long v = std::stol(s);
    if (v < 1 || v > 1000000)
        throw InvalidInput("word values must be in [1, 10^6], got '" + s + "'");
    return static_cast<int>(v);
}

}  // namespace

Word parse_word(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidInput("empty word");
    Word out;
    if (s.find(',') != std::string::npos) {
        std::string cur;
        std::istringstream is(s);
        while (std::getline(is, cur, ',')) out.push_back(parse_value(cur));
        if (!s.empty() && s.back() == ',')
            throw InvalidInput("trailing comma in word '" + text + "'");
    } else {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw InvalidInput("digit-form words use digits 1-9, got '" +
                                   std::string(1, c) + "'");
            out.push_back(c - '0');
        }
    }
    return out;
}

}  // namespace insenc
