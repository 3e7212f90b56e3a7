#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace insenc {

// A word over positive integers. Cayley permutations are words in which every
// value from 1 up to the maximum appears at least once.
using Word = std::vector<int>;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IllegalLetter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DanglingSlots : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNormalizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNormalized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorruptStore : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest value in the word; 0 for the empty word.
int height(const Word& w);

// Replace each value by its rank among the distinct values present
// (smallest value becomes 1). The result is always a Cayley permutation.
Word standardise(const Word& w);

bool is_cayley(const Word& w);

// Restricted growth function: a Cayley permutation whose first occurrences
// appear in increasing value order.
bool is_rgf(const Word& w);

// An RGF in which every value occurs exactly twice (a perfect matching).
bool is_matching_rgf(const Word& w);

// Textual form: concatenated digits when height <= 9 ("121331"),
// comma-separated values otherwise ("1,2,10,3"). Both accepted on input.
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace insenc
