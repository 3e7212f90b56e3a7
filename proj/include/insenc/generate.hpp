#pragma once

#include <functional>
#include <vector>

#include "insenc/contain.hpp"
#include "insenc/word.hpp"

namespace insenc {

// All Cayley permutations of size n, lexicographic order.
void for_each_cayley(int n, const std::function<void(const Word&)>& fn);
std::vector<Word> all_cayley(int n);

// All RGFs of size n avoiding the basis, lexicographic order. Generation is
// prefix-pruned: a prefix containing a basis pattern is never extended.
void for_each_rgf_avoiding(int n, const Basis& basis,
                           const std::function<void(const Word&)>& fn);
std::vector<Word> rgfs_avoiding(int n, const Basis& basis);

// All matching RGFs (every value exactly twice) of size n avoiding the basis.
void for_each_matching_rgf_avoiding(int n, const Basis& basis,
                                    const std::function<void(const Word&)>& fn);
std::vector<Word> matching_rgfs_avoiding(int n, const Basis& basis);

}  // namespace insenc
