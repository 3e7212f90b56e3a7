#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "insenc/automaton.hpp"
#include "insenc/word.hpp"

namespace insenc {

// Polynomial with arbitrary-precision integer coefficients, ascending by
// degree, canonical (no trailing zero coefficients; empty means zero).
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly x();  // the monomial x

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt at(int i) const;  // coefficient of x^i (0 beyond degree)

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly times(const BigInt& k) const;

    bool operator==(const IntPoly&) const = default;

  private:
    void trim();
    std::vector<BigInt> c_;
};

// num/den over the integers. Canonical after normalize(): fraction reduced
// (no common polynomial factor, integer contents coprime) and den(0) = 1.
struct RationalGF {
    IntPoly num;
    IntPoly den;

    bool operator==(const RationalGF&) const = default;
};

// Reduce and scale so den(0) = 1. NotNormalizable when den = 0 or den(0) = 0
// after reduction. Idempotent.
RationalGF normalize(const RationalGF& g);

// Coefficients of the power series expansion, indices 0..n_max.
// NotNormalized unless den(0) = 1.
std::vector<BigInt> series(const RationalGF& g, int n_max);

// Exact generating function of the DFA's accepted-word-count sequence,
// normalized. The automaton is minimized first; solved by exact elimination
// over rational functions (no floating point anywhere).
RationalGF gf_from_dfa(const Dfa& d);

// Human-readable form, e.g. "x/(1-2*x)" or "(x+x^2)/(1-x-x^2)".
std::string pretty(const RationalGF& g);

}  // namespace insenc
