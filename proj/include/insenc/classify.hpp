#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insenc/contain.hpp"
#include "insenc/geometry.hpp"
#include "insenc/horizontal.hpp"
#include "insenc/word.hpp"

namespace insenc {

enum class Verdict { Regular, Irregular, Undecided };

std::string to_string(Verdict v);

// Outcome of the regularity test for one avoidance class. For each family
// that must be avoided, `witnesses` records an avoided member of the family
// (the basis pattern itself when one lies in the family, otherwise a
// universal alternation shown to be avoided by the class), or nullopt when
// none was found.
struct ClassificationReport {
    std::string encoding;  // "horizontal" or "vertical"
    std::string mode;      // "rgf" or "matching"
    Verdict verdict = Verdict::Irregular;
    std::vector<std::pair<std::string, std::optional<Word>>> witnesses;
    int search_bound = 0;  // alternation sizes searched (vertical only)
};

// Horizontal: the class has a regular insertion encoding iff some basis
// pattern lies in H(I,I) and some basis pattern lies in H(I,D). Exact.
ClassificationReport classify_h(const Basis& basis, Mode mode = Mode::Rgf);

// Vertical: nine families. Six are decided exactly by basis membership;
// for G(I,D), G(D,D) and V(C,D) the classifier additionally searches the
// family's universal alternations of parameter m = 1..m_max for one avoided
// by the class. Verdicts: Regular (all nine witnessed), Irregular (one of
// the six exact families has no basis pattern), otherwise Undecided.
ClassificationReport classify_v(const Basis& basis, int m_max = 4);

// Is gamma avoided by every RGF of the avoidance class of the basis?
// Decided exactly via the witness family of gamma.
bool avoided_by_class(const Word& gamma, const Basis& basis);

// The witness family W(gamma): all RGFs obtained from gamma by inserting at
// most one extra occurrence of each value, each inserted point being the
// first occurrence of its value in the result. Every RGF containing gamma
// contains a member, and every member contains gamma.
std::vector<Word> witness_family(const Word& gamma);

// Canonical basis of the k-slot-bounded horizontal classes: the words
// 1 2 .. k followed by a permutation of 1 .. k+1 ((k+1)! elements).
std::vector<Word> sb_h_basis(int k);

// Canonical basis of the k-slot-bounded vertical classes: all one-point-per-
// slot derivations of the configurations 1..n <> a1 <> ... <> ak <> over
// Cayley permutations a of size k with n = max(a). Fills are values >= n,
// with n itself allowed only in slots at or after the last a_j = n, and the
// values above n contiguous.
std::vector<Word> sb_v_basis(int k);

// Largest slot count over all class members of size <= n_max.
// encoding is 'h' or 'v'; mode Rgf or Matching (horizontal only).
int slot_probe(const Basis& basis, char encoding, int n_max,
               Mode mode = Mode::Rgf);

}  // namespace insenc
