#include "insenc/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "insenc/contain.hpp"

namespace insenc {

char cell_kind_char(CellKind k) {
    switch (k) {
        case CellKind::Empty: return '0';
        case CellKind::Inc: return 'I';
        case CellKind::Dec: return 'D';
        case CellKind::Const: return 'C';
    }
    return '?';
}

CellKind parse_cell_kind(char c) {
    switch (c) {
        case '0': return CellKind::Empty;
        case 'I': return CellKind::Inc;
        case 'D': return CellKind::Dec;
        case 'C': return CellKind::Const;
    }
    throw InvalidInput(std::string("bad cell kind '") + c + "'");
}

GridMatrix::GridMatrix(int cols, int rows) : cols_(cols), rows_(rows) {
    if (cols < 1 || rows < 1) throw InvalidInput("grid matrix must be nonempty");
    cells_.assign(static_cast<size_t>(cols) * rows, CellKind::Empty);
}

CellKind GridMatrix::entry(int k, int l) const {
    if (k < 1 || k > cols_ || l < 1 || l > rows_)
        throw InvalidInput("grid entry out of range");
    return cells_[static_cast<size_t>(l - 1) * cols_ + (k - 1)];
}

void GridMatrix::set_entry(int k, int l, CellKind v) {
    if (k < 1 || k > cols_ || l < 1 || l > rows_)
        throw InvalidInput("grid entry out of range");
    cells_[static_cast<size_t>(l - 1) * cols_ + (k - 1)] = v;
}

GridMatrix GridMatrix::parse(const std::string& text) {
    std::vector<std::vector<CellKind>> rows_top_down;
    std::istringstream rows_in(text);
    std::string row;
    while (std::getline(rows_in, row, ';')) {
        std::vector<CellKind> cells;
        std::istringstream cells_in(row);
        std::string cell;
        while (std::getline(cells_in, cell, ',')) {
            std::string trimmed;
            for (char c : cell)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    trimmed.push_back(c);
            if (trimmed.size() != 1)
                throw InvalidInput("bad grid cell '" + cell + "'");
            cells.push_back(parse_cell_kind(trimmed[0]));
        }
        if (cells.empty() || (!row.empty() && row.back() == ','))
            throw InvalidInput("bad grid row '" + row + "'");
        rows_top_down.push_back(std::move(cells));
    }
    if (rows_top_down.empty()) throw InvalidInput("empty grid matrix");
    const int u = static_cast<int>(rows_top_down.size());
    const int t = static_cast<int>(rows_top_down[0].size());
    for (const auto& r : rows_top_down)
        if (static_cast<int>(r.size()) != t)
            throw InvalidInput("ragged grid matrix '" + text + "'");
    GridMatrix m(t, u);
    for (int l = 1; l <= u; ++l)
        for (int k = 1; k <= t; ++k)
            m.set_entry(k, l, rows_top_down[u - l][k - 1]);
    return m;
}

std::string GridMatrix::to_string() const {
    std::ostringstream os;
    for (int l = rows_; l >= 1; --l) {
        if (l != rows_) os << ';';
        for (int k = 1; k <= cols_; ++k) {
            if (k != 1) os << ',';
            os << cell_kind_char(entry(k, l));
        }
    }
    return os.str();
}

Word window(const Word& w, int i_lo, int i_hi, int v_lo, int v_hi) {
    Word out;
    const int n = static_cast<int>(w.size());
    for (int i = std::max(1, i_lo); i <= std::min(n, i_hi); ++i)
        if (w[i - 1] >= v_lo && w[i - 1] <= v_hi) out.push_back(w[i - 1]);
    return out;
}

bool sequence_of_kind(const Word& w, CellKind kind) {
    switch (kind) {
        case CellKind::Empty: return w.empty();
        case CellKind::Inc:
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i - 1] >= w[i]) return false;
            return true;
        case CellKind::Dec:
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i - 1] <= w[i]) return false;
            return true;
        case CellKind::Const:
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i] != w[0]) return false;
            return true;
    }
    return false;
}

namespace {

// enumerate nondecreasing cut tuples (c_2..c_t) over [1, limit] in lex order
bool next_cuts(std::vector<int>& cuts, int limit) {
    for (int i = static_cast<int>(cuts.size()) - 1; i >= 0; --i) {
        if (cuts[i] < limit) {
            ++cuts[i];
            for (size_t j = i + 1; j < cuts.size(); ++j) cuts[j] = cuts[i];
            return true;
        }
    }
    return false;
}

bool cells_ok(const Word& w, const GridMatrix& m, const std::vector<int>& cc,
              const std::vector<int>& rc) {
    for (int k = 1; k <= m.cols(); ++k)
        for (int l = 1; l <= m.rows(); ++l) {
            Word cell = window(w, cc[k - 1], cc[k] - 1, rc[l - 1], rc[l] - 1);
            if (!sequence_of_kind(cell, m.entry(k, l))) return false;
        }
    return true;
}

}  // namespace

std::optional<Gridding> find_gridding(const Word& w, const GridMatrix& m) {
    const int n = static_cast<int>(w.size());
    const int h = height(w);
    const int t = m.cols(), u = m.rows();
    std::vector<int> cmid(std::max(0, t - 1), 1);
    while (true) {
        std::vector<int> cc{1};
        cc.insert(cc.end(), cmid.begin(), cmid.end());
        cc.push_back(n + 1);
        if (std::is_sorted(cc.begin(), cc.end())) {
            std::vector<int> rmid(std::max(0, u - 1), 1);
            while (true) {
                std::vector<int> rc{1};
                rc.insert(rc.end(), rmid.begin(), rmid.end());
                rc.push_back(h + 1);
                if (std::is_sorted(rc.begin(), rc.end()) &&
                    cells_ok(w, m, cc, rc))
                    return Gridding{cc, rc};
                if (rmid.empty() || !next_cuts(rmid, h + 1)) break;
            }
        }
        if (cmid.empty() || !next_cuts(cmid, n + 1)) break;
    }
    return std::nullopt;
}

std::string to_string(const FamilyTag& tag) {
    std::string s;
    s += tag.shape;
    s += '(';
    s += cell_kind_char(tag.a);
    s += ',';
    s += cell_kind_char(tag.b);
    s += ')';
    return s;
}

FamilyTag parse_family(const std::string& text) {
    if (text.size() != 6 || text[1] != '(' || text[3] != ',' || text[5] != ')')
        throw InvalidInput("bad family tag '" + text + "'");
    char shape = text[0];
    if (shape != 'H' && shape != 'V' && shape != 'G')
        throw InvalidInput("bad family shape in '" + text + "'");
    FamilyTag tag{shape, parse_cell_kind(text[2]), parse_cell_kind(text[4])};
    if (tag.a == CellKind::Empty || tag.b == CellKind::Empty)
        throw InvalidInput("family parts must be I, D or C: '" + text + "'");
    return tag;
}

bool in_class(const Word& w, const FamilyTag& tag) {
    const int n = static_cast<int>(w.size());
    if (tag.shape == 'H') {
        for (int s = 0; s <= n; ++s) {
            Word left(w.begin(), w.begin() + s);
            Word right(w.begin() + s, w.end());
            if (sequence_of_kind(left, tag.a) && sequence_of_kind(right, tag.b))
                return true;
        }
        return false;
    }
    if (tag.shape == 'V') {
        const int h = height(w);
        for (int cut = 0; cut <= h; ++cut) {
            Word low = window(w, 1, n, 1, cut);
            Word high = window(w, 1, n, cut + 1, h);
            if (sequence_of_kind(low, tag.a) && sequence_of_kind(high, tag.b))
                return true;
        }
        return false;
    }
    // G(A,B): bottom row (I, A), top row (0, B)
    GridMatrix m(2, 2);
    m.set_entry(1, 1, CellKind::Inc);
    m.set_entry(2, 1, tag.a);
    m.set_entry(1, 2, CellKind::Empty);
    m.set_entry(2, 2, tag.b);
    return find_gridding(w, m).has_value();
}

bool is_juxtaposition(const Word& pi, const Word& sigma, const Word& tau,
                      bool vertical) {
    if (vertical) {
        if (height(sigma) + height(tau) != height(pi)) return false;
        const int n = static_cast<int>(pi.size());
        Word low = window(pi, 1, n, 1, height(sigma));
        Word high = window(pi, 1, n, height(sigma) + 1, height(pi));
        return standardise(low) == standardise(sigma) &&
               standardise(high) == standardise(tau);
    }
    if (sigma.size() + tau.size() != pi.size()) return false;
    Word left(pi.begin(), pi.begin() + sigma.size());
    Word right(pi.begin() + sigma.size(), pi.end());
    return standardise(left) == standardise(sigma) &&
           standardise(right) == standardise(tau);
}

Word concatenation(const FamilyTag& tag, int n) {
    if (n < 1) throw InvalidInput("concatenation parameter must be positive");
    if (tag.shape != 'H' || tag.a != CellKind::Inc ||
        (tag.b != CellKind::Inc && tag.b != CellKind::Dec))
        throw InvalidInput("concatenation defined for H(I,I) and H(I,D) only");
    Word w;
    for (int i = 1; i <= n; ++i) w.push_back(i);
    if (tag.b == CellKind::Inc)
        for (int i = 1; i <= n; ++i) w.push_back(i);
    else
        for (int i = n; i >= 1; --i) w.push_back(i);
    return w;
}

namespace {

int part_value(CellKind kind, int i, int n, int base) {
    switch (kind) {
        case CellKind::Const: return base + 1;
        case CellKind::Inc: return base + i;
        case CellKind::Dec: return base + n + 1 - i;
        case CellKind::Empty: break;
    }
    throw InvalidInput("alternation parts must be I, D or C");
}

}  // namespace

Word vertical_alternation(const FamilyTag& tag, int n) {
    if (n < 1) throw InvalidInput("alternation parameter must be positive");
    if (tag.shape != 'V') throw InvalidInput("vertical_alternation needs a V tag");
    const int low_height = tag.a == CellKind::Const ? 1 : n;
    Word w;
    for (int i = 1; i <= n; ++i) {
        w.push_back(part_value(tag.a, i, n, 0));
        w.push_back(part_value(tag.b, i, n, low_height));
    }
    return w;
}

Word g_alternation(const FamilyTag& tag, int n) {
    if (n < 1) throw InvalidInput("alternation parameter must be positive");
    if (tag.shape != 'G' || tag.a == CellKind::Const)
        throw InvalidInput("g_alternation needs a G tag with A in {I, D}");
    Word w;
    for (int i = 1; i <= n; ++i) w.push_back(i);
    for (int i = 1; i <= n; ++i) {
        w.push_back(part_value(tag.a, i, n, 0));
        w.push_back(part_value(tag.b, i, n, n));
    }
    return w;
}

std::optional<std::vector<int>> monotone_or_constant_subsequence(const Word& w,
                                                                 int target) {
    const int n = static_cast<int>(w.size());
    if (target < 1) throw InvalidInput("target length must be positive");
    if (target > n) return std::nullopt;
    // constant: first `target` occurrences of a frequent value
    {
        std::map<int, std::vector<int>> positions;
        for (int i = 0; i < n; ++i) positions[w[i]].push_back(i + 1);
        for (const auto& [v, pos] : positions)
            if (static_cast<int>(pos.size()) >= target)
                return std::vector<int>(pos.begin(), pos.begin() + target);
    }
    // strictly monotone via O(n^2) longest-chain DP
    for (bool increasing : {true, false}) {
        std::vector<int> best(n, 1), prev(n, -1);
        int best_end = -1;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                const bool ok = increasing ? w[j] < w[i] : w[j] > w[i];
                if (ok && best[j] + 1 > best[i]) {
                    best[i] = best[j] + 1;
                    prev[i] = j;
                }
            }
            if (best[i] >= target && best_end < 0) best_end = i;
        }
        if (best_end >= 0) {
            std::vector<int> idx;
            // walk back down to exactly `target` entries
            int i = best_end;
            while (i >= 0 && static_cast<int>(idx.size()) < target) {
                idx.push_back(i + 1);
                i = prev[i];
            }
            std::reverse(idx.begin(), idx.end());
            return idx;
        }
    }
    return std::nullopt;
}

}  // namespace insenc
