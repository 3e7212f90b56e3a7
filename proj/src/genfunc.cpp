// Exact rational generating functions: integer polynomials, reduction via a
// primitive polynomial remainder sequence, and state elimination over the
// field of rational functions. No floating point anywhere.

#include "insenc/genfunc.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace insenc {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = at(i) + o.at(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = at(i) - o.at(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> out(c_);
    for (BigInt& v : out) v = -v;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::times(const BigInt& k) const {
    if (k == 0) return IntPoly{};
    std::vector<BigInt> out(c_);
    for (BigInt& v : out) v *= k;
    return IntPoly(std::move(out));
}

namespace {

IntPoly monomial(const BigInt& coeff, int degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const BigInt& v : p.coeffs()) g = boost::multiprecision::gcd(g, v);
    return g;  // nonnegative; 0 only for the zero polynomial
}

IntPoly scale_down(const IntPoly& p, const BigInt& k) {
    std::vector<BigInt> out(p.coeffs());
    for (BigInt& v : out) v /= k;
    return IntPoly(std::move(out));
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    return scale_down(p, content(p));
}

// Pseudo-remainder: the remainder after repeatedly scaling by the divisor's
// leading coefficient so each division step stays over the integers.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const BigInt lb = b.coeffs().back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const BigInt la = a.coeffs().back();
        const int shift = a.degree() - b.degree();
        a = a.times(lb) - b * monomial(la, shift);
    }
    return a;
}

// Primitive gcd of two nonzero polynomials, leading coefficient positive.
IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.coeffs().back() < 0) a = -a;
    return a;
}

// Exact division; the divisor is known to divide evenly.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return IntPoly{};
    std::vector<BigInt> rem(a.coeffs());
    const int db = b.degree();
    const BigInt& lb = b.coeffs().back();
    std::vector<BigInt> quot(a.degree() - db + 1);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        BigInt q = rem[i + db] / lb;
        quot[i] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i + j] -= q * b.at(j);
    }
    return IntPoly(std::move(quot));
}

// Reduce a fraction of integer polynomials: coprime polynomial parts,
// coprime integer contents, denominator leading coefficient positive.
void reduce_fraction(IntPoly& num, IntPoly& den) {
    if (num.is_zero()) {
        den = IntPoly{1};
        return;
    }
    const BigInt cn = content(num);
    const BigInt cd = content(den);
    IntPoly pn = scale_down(num, cn);
    IntPoly pd = scale_down(den, cd);
    const IntPoly g = poly_gcd(pn, pd);
    if (g.degree() > 0) {
        pn = divide_exact(pn, g);
        pd = divide_exact(pd, g);
    }
    const BigInt ci = boost::multiprecision::gcd(cn, cd);
    num = pn.times(cn / ci);
    den = pd.times(cd / ci);
    if (den.coeffs().back() < 0) {
        num = -num;
        den = -den;
    }
}

// Rational-function arithmetic for the elimination.
struct Frac {
    IntPoly n;
    IntPoly d{1};

    bool is_zero() const { return n.is_zero(); }
};

Frac reduced(IntPoly n, IntPoly d) {
    reduce_fraction(n, d);
    return {std::move(n), std::move(d)};
}

Frac operator-(const Frac& a, const Frac& b) {
    return reduced(a.n * b.d - b.n * a.d, a.d * b.d);
}

Frac operator*(const Frac& a, const Frac& b) {
    return reduced(a.n * b.n, a.d * b.d);
}

Frac operator/(const Frac& a, const Frac& b) {
    return reduced(a.n * b.d, a.d * b.n);
}

}  // namespace

RationalGF normalize(const RationalGF& g) {
    if (g.den.is_zero()) throw NotNormalizable("zero denominator");
    IntPoly num = g.num;
    IntPoly den = g.den;
    reduce_fraction(num, den);
    const BigInt d0 = den.at(0);
    if (d0 == 0)
        throw NotNormalizable("denominator vanishes at 0 after reduction");
    if (d0 == 1) return {std::move(num), std::move(den)};
    if (d0 == -1) return {-num, -den};
    throw NotNormalizable(
        "denominator constant term is not a unit after reduction");
}

std::vector<BigInt> series(const RationalGF& g, int n_max) {
    if (g.den.at(0) != 1)
        throw NotNormalized("series requires den(0) = 1");
    std::vector<BigInt> a(n_max + 1);
    const int dd = g.den.degree();
    for (int n = 0; n <= n_max; ++n) {
        BigInt v = g.num.at(n);
        for (int j = 1; j <= dd && j <= n; ++j) v -= g.den.at(j) * a[n - j];
        a[n] = std::move(v);
    }
    return a;
}

RationalGF gf_from_dfa(const Dfa& d0) {
    const Dfa d = minimize(d0);
    const int n = d.state_count();
    // (I - x M) u = b with M the transition multiplicity matrix and
    // b the accepting indicator; the answer is u[0].
    std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n));
    std::vector<Frac> b(n);
    for (int s = 0; s < n; ++s) {
        a[s][s] = Frac{IntPoly{1}, IntPoly{1}};
        for (const auto& [text, t] : d.trans[s]) {
            (void)text;
            a[s][t] = a[s][t] - Frac{IntPoly::x(), IntPoly{1}};
        }
        if (d.accepting[s]) b[s] = Frac{IntPoly{1}, IntPoly{1}};
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw InvalidInput("gf_from_dfa: singular system");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        const Frac pv = a[col][col];
        for (int j = col; j < n; ++j) a[col][j] = a[col][j] / pv;
        b[col] = b[col] / pv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const Frac f = a[row][col];
            for (int j = col; j < n; ++j)
                a[row][j] = a[row][j] - f * a[col][j];
            b[row] = b[row] - f * b[col];
        }
    }
    return normalize({b[0].n, b[0].d});
}

namespace {

std::string poly_text(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const BigInt c = p.at(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        const BigInt mag = negative ? BigInt(-c) : c;
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

bool single_term(const IntPoly& p) {
    int terms = 0;
    for (const BigInt& v : p.coeffs())
        if (v != 0) ++terms;
    return terms == 1;
}

}  // namespace

std::string pretty(const RationalGF& g) {
    if (g.num.is_zero()) return "0";
    if (g.den == IntPoly{1}) return poly_text(g.num);
    std::string num = poly_text(g.num);
    if (!single_term(g.num)) num = "(" + num + ")";
    return num + "/(" + poly_text(g.den) + ")";
}

}  // namespace insenc
