#pragma once

#include <utility>
#include <vector>

#include "mapcensus/rational.hpp"
#include "mapcensus/series1.hpp"

namespace mapcensus {

/// Truncated bivariate series over exact rationals with total-degree
/// truncation: coefficients are stored for every exponent pair (i, j) with
/// i + j <= order, in a triangular layout. Per-variable Laurent offsets are
/// metadata, as in Series1.
///
/// Division is restricted to divisors whose lowest homogeneous slice is a
/// single monomial dividing every term of the dividend; that covers the
/// divisors that occur here (units, the variables, and series with a clean
/// lowest monomial such as the rooted-simple core series), and anything else
/// signals a malformed formula.
class Series2 {
  public:
    Series2() = default;
    explicit Series2(int order);

    static Series2 constant(const Rational& c, int order);
    static Series2 var_b(int order);   // first variable
    static Series2 var_w(int order);   // second variable
    static Series2 monomial(const Rational& c, int i, int j, int order);

    int order() const { return order_; }
    int shift_b() const { return shift_b_; }
    int shift_w() const { return shift_w_; }

    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rational& v);

    /// Smallest total degree with a nonzero coefficient (order()+1 if none).
    int valuation() const;
    bool is_zero() const { return valuation() > order_; }

    Series2 truncated(int order) const;
    Series2 shifted(int db, int dw) const;
    Series2 normalized() const;

    Series2 swapped() const;            // (i, j) <-> (j, i)
    Series2 euler() const;              // coefficient at (i, j) scaled by i+j
    Series1 diagonal() const;           // evaluate both variables equal

    Series2 operator-() const;

    friend Series2 operator+(const Series2& a, const Series2& b);
    friend Series2 operator-(const Series2& a, const Series2& b);
    friend Series2 operator*(const Series2& a, const Series2& b);
    friend Series2 operator/(const Series2& a, const Series2& b);

    friend Series2 operator+(const Series2& a, const Rational& c);
    friend Series2 operator+(const Rational& c, const Series2& a) { return a + c; }
    friend Series2 operator-(const Series2& a, const Rational& c) { return a + Rational(-c); }
    friend Series2 operator-(const Rational& c, const Series2& a) { return -a + c; }
    friend Series2 operator*(const Series2& a, const Rational& c);
    friend Series2 operator*(const Rational& c, const Series2& a) { return a * c; }
    friend Series2 operator/(const Rational& c, const Series2& a);

  private:
    int order_ = -1;
    int shift_b_ = 0, shift_w_ = 0;
    std::vector<Rational> coeffs_;      // triangular: degree d block at d(d+1)/2, entry i

    static std::size_t index(int i, int j) {
        int d = i + j;
        return static_cast<std::size_t>(d) * (d + 1) / 2 + i;
    }
    void require_plain(const char* op) const;
};

/// f(g1, g2); both inner series need valuation >= 1.
Series2 compose(const Series2& f, const Series2& g1, const Series2& g2);

/// f(x^k, y^k) truncated to target_order.
Series2 power_substitute(const Series2& f, int k, int target_order);

bool agree_to(const Series2& a, const Series2& b, int upto);
bool zero_to(const Series2& a, int upto);
/// First (i, j) in total-degree order where a and b differ, or {-1, -1}.
std::pair<int, int> first_difference(const Series2& a, const Series2& b, int upto);

}  // namespace mapcensus
