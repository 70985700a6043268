#pragma once

#include <vector>

#include "mapcensus/rational.hpp"

namespace mapcensus {

/// Truncated univariate formal power series over exact rationals, with an
/// optional Laurent offset.
///
/// A Series1 with order N, shift s and coefficients c[0..N] represents
///   sum_i c[i] * x^(i+s).
/// `order()` is the largest exponent index known exactly: operations that lose
/// top-order information (division by a positive-valuation series, negative
/// shifts, derivatives) return a series with a correspondingly smaller order,
/// so a coefficient you can read is always an exact one.
///
/// Arithmetic requires shift == 0; `shifted()` only records an offset and
/// `normalized()` folds it back into the exponents (throwing if a nonzero
/// coefficient would land at a negative exponent). Offsets only appear
/// transiently inside the Burnside assembler.
class Series1 {
  public:
    Series1() = default;
    explicit Series1(int order) : order_(order), coeffs_(order + 1) {
        if (order < 0) throw std::invalid_argument("Series1: negative order");
    }

    static Series1 constant(const Rational& c, int order);
    static Series1 variable(int order);                        // x
    static Series1 monomial(const Rational& c, int k, int order);

    int order() const { return order_; }
    int shift() const { return shift_; }

    const Rational& coeff(int k) const;
    void set_coeff(int k, const Rational& v);

    /// Smallest k with coeff(k) != 0, or order()+1 if zero through order().
    int valuation() const;
    bool is_zero() const { return valuation() > order_; }

    Series1 truncated(int order) const;
    Series1 shifted(int delta) const;
    Series1 normalized() const;

    Series1 operator-() const;

    friend Series1 operator+(const Series1& a, const Series1& b);
    friend Series1 operator-(const Series1& a, const Series1& b);
    friend Series1 operator*(const Series1& a, const Series1& b);
    /// Long division; requires valuation(a) >= valuation(b). The result is
    /// exact to min(order) - valuation(b).
    friend Series1 operator/(const Series1& a, const Series1& b);

    friend Series1 operator+(const Series1& a, const Rational& c);
    friend Series1 operator+(const Rational& c, const Series1& a) { return a + c; }
    friend Series1 operator-(const Series1& a, const Rational& c) { return a + Rational(-c); }
    friend Series1 operator-(const Rational& c, const Series1& a) { return -a + c; }
    friend Series1 operator*(const Series1& a, const Rational& c);
    friend Series1 operator*(const Rational& c, const Series1& a) { return a * c; }
    friend Series1 operator/(const Rational& c, const Series1& a);

  private:
    int order_ = -1;
    int shift_ = 0;
    std::vector<Rational> coeffs_;

    void require_plain(const char* op) const;
};

/// f(g(x)); requires valuation(g) >= 1.
Series1 compose(const Series1& f, const Series1& g);

/// f(x^k) truncated to target_order (exact there as long as k*order(f)+k-1 covers it).
Series1 power_substitute(const Series1& f, int k, int target_order);

Series1 derivative(const Series1& f);
Series1 antiderivative(const Series1& f);   // constant of integration 0
Series1 x_derivative(const Series1& f);     // x * d/dx

/// True when a and b agree on exponents 0..upto; both must be exact that far.
bool agree_to(const Series1& a, const Series1& b, int upto);
bool zero_to(const Series1& a, int upto);
/// First exponent in 0..upto where a and b differ, or -1.
int first_difference(const Series1& a, const Series1& b, int upto);

}  // namespace mapcensus
