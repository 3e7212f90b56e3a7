#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insenc/word.hpp"

namespace insenc {

// Occurrence of sigma in pi: strictly increasing 1-based indices i_1 < ... < i_k
// such that the subword pi[i_1..i_k] standardises to sigma (equal values in
// sigma require equal values in pi, strict inequalities require strict
// inequalities). Returns the lexicographically first occurrence, or nullopt.
std::optional<std::vector<int>> contains(const Word& pi, const Word& sigma);

// True when no occurrence of sigma exists and the new point at pi's last
// position is required to be part of it (used for incremental generation).
bool contains_using_last(const Word& pi, const Word& sigma);

bool avoids(const Word& pi, const Word& sigma);

// A canonicalized set of Cayley-permutation patterns: sorted by (size, values),
// duplicates removed, and any pattern containing another member removed.
class Basis {
  public:
    Basis() = default;
    explicit Basis(std::vector<Word> patterns);

    // Patterns separated by ';' or whitespace; each pattern in either textual
    // word form. Commas bind values within one pattern.
    static Basis parse(const std::string& text);

    const std::vector<Word>& patterns() const { return patterns_; }
    bool empty() const { return patterns_.empty(); }
    std::string to_string() const;

    bool operator==(const Basis&) const = default;

  private:
    std::vector<Word> patterns_;
};

bool avoids_basis(const Word& pi, const Basis& basis);

}  // namespace insenc
