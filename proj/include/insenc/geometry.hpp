#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insenc/word.hpp"

namespace insenc {

// Cell requirement of a grid matrix: strictly increasing, strictly decreasing,
// constant, or empty. Empty and singleton point sets satisfy I, D and C.
enum class CellKind { Empty, Inc, Dec, Const };

char cell_kind_char(CellKind k);           // '0', 'I', 'D', 'C'
CellKind parse_cell_kind(char c);

// t columns x u rows of cell requirements, indexed from the bottom-left:
// entry(k, l) is column k (from the left) and row l (from the bottom),
// both 1-based. Textual form lists rows top-to-bottom, ';' between rows,
// ',' between cells: "0,D;I,I" is the 2x2 matrix with bottom row I I.
class GridMatrix {
  public:
    GridMatrix(int cols, int rows);
    static GridMatrix parse(const std::string& text);

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    CellKind entry(int k, int l) const;
    void set_entry(int k, int l, CellKind v);
    std::string to_string() const;

  private:
    int cols_, rows_;
    std::vector<CellKind> cells_;  // row-major from the bottom row
};

// A gridding of a word of size n: column cuts 1 = c_1 <= ... <= c_{t+1} = n+1
// over indices and row cuts 1 = r_1 <= ... <= r_{u+1} = h+1 over values.
// Cell (k, l) covers indices [c_k, c_{k+1}) and values [r_l, r_{l+1}).
struct Gridding {
    std::vector<int> col_cuts;
    std::vector<int> row_cuts;
};

// Subword of points with index in [i_lo, i_hi] and value in [v_lo, v_hi]
// (inclusive), in index order, values unchanged.
Word window(const Word& w, int i_lo, int i_hi, int v_lo, int v_hi);

// Does the (unstandardised) sequence satisfy the cell requirement?
bool sequence_of_kind(const Word& w, CellKind kind);

// First gridding in lexicographic cut order, or nullopt.
std::optional<Gridding> find_gridding(const Word& w, const GridMatrix& m);

// Families of Cayley permutations built from two monotone-or-constant parts.
//   H(A,B): some index split; left part of kind A, right part of kind B.
//   V(A,B): some value split; points at low values form kind A (in index
//           order), points at high values form kind B.
//   G(A,B): griddable on the 2x2 matrix with bottom row (I, A), top row (0, B).
struct FamilyTag {
    char shape;   // 'H', 'V' or 'G'
    CellKind a;   // second letter
    CellKind b;   // third letter

    bool operator==(const FamilyTag&) const = default;
};

std::string to_string(const FamilyTag& tag);        // "G(I,D)"
FamilyTag parse_family(const std::string& text);

bool in_class(const Word& w, const FamilyTag& tag);

// Horizontal juxtaposition: the first |sigma| points standardise to sigma and
// the rest to tau. Vertical juxtaposition: the points holding the smallest
// height(sigma) values standardise to sigma, the rest (the top values) to tau.
bool is_juxtaposition(const Word& pi, const Word& sigma, const Word& tau,
                      bool vertical);

// Universal words for the regular families:
//   concatenation(H(I,I), n) = 1..n 1..n     concatenation(H(I,D), n) = 1..n n..1
// contain every member of their family of size <= n. Other tags: InvalidInput.
Word concatenation(const FamilyTag& tag, int n);

// vertical_alternation(V(A,B), n) = a1 b1 a2 b2 ... an bn with the a-part of
// kind A on low values and the b-part of kind B on top values.
Word vertical_alternation(const FamilyTag& tag, int n);

// g_alternation(G(A,B), n) = 1..n a1 b1 ... an bn, an increasing prefix
// followed by the alternation of the two top parts.
Word g_alternation(const FamilyTag& tag, int n);

// Indices (1-based) of a strictly increasing, strictly decreasing or constant
// subsequence of the given length; guaranteed to exist when
// |w| >= target^3. Returns nullopt only when no such subsequence exists.
std::optional<std::vector<int>> monotone_or_constant_subsequence(const Word& w,
                                                                 int target);

}  // namespace insenc
