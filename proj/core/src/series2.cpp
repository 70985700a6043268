#include "mapcensus/series2.hpp"

#include <algorithm>

namespace mapcensus {

Series2::Series2(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("Series2: negative order");
    coeffs_.resize(static_cast<std::size_t>(order + 1) * (order + 2) / 2);
}

Series2 Series2::constant(const Rational& c, int order) {
    Series2 s(order);
    s.coeffs_[0] = c;
    return s;
}

Series2 Series2::var_b(int order) { return monomial(Rational(1), 1, 0, order); }
Series2 Series2::var_w(int order) { return monomial(Rational(1), 0, 1, order); }

Series2 Series2::monomial(const Rational& c, int i, int j, int order) {
    Series2 s(order);
    if (i < 0 || j < 0 || i + j > order)
        throw std::invalid_argument("Series2::monomial: exponents out of range");
    s.coeffs_[index(i, j)] = c;
    return s;
}

const Rational& Series2::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::out_of_range("Series2::coeff: exponent pair not tracked");
    return coeffs_[index(i, j)];
}

void Series2::set_coeff(int i, int j, const Rational& v) {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::out_of_range("Series2::set_coeff: exponent pair not tracked");
    coeffs_[index(i, j)] = v;
}

int Series2::valuation() const {
    for (int d = 0; d <= order_; ++d)
        for (int i = 0; i <= d; ++i)
            if (coeffs_[index(i, d - i)] != 0) return d;
    return order_ + 1;
}

Series2 Series2::truncated(int order) const {
    require_plain("truncated");
    if (order > order_) throw std::invalid_argument("Series2::truncated: not exact that far");
    Series2 s(order);
    std::copy(coeffs_.begin(), coeffs_.begin() + s.coeffs_.size(), s.coeffs_.begin());
    return s;
}

Series2 Series2::shifted(int db, int dw) const {
    Series2 s = *this;
    s.shift_b_ += db;
    s.shift_w_ += dw;
    return s;
}

Series2 Series2::normalized() const {
    if (shift_b_ == 0 && shift_w_ == 0) return *this;
    int gain = shift_b_ + shift_w_;   // change in total degree
    int new_order = order_ + gain;
    if (new_order < 0) throw std::domain_error("Series2::normalized: nothing left");
    Series2 s(new_order);
    for (int d = 0; d <= order_; ++d) {
        for (int i = 0; i <= d; ++i) {
            const Rational& v = coeffs_[index(i, d - i)];
            if (v == 0) continue;
            int ni = i + shift_b_, nj = d - i + shift_w_;
            if (ni < 0 || nj < 0)
                throw std::domain_error("Series2::normalized: negative exponent survives");
            s.coeffs_[index(ni, nj)] = v;
        }
    }
    return s;
}

Series2 Series2::swapped() const {
    require_plain("swapped");
    Series2 s(order_);
    for (int d = 0; d <= order_; ++d)
        for (int i = 0; i <= d; ++i) s.coeffs_[index(d - i, i)] = coeffs_[index(i, d - i)];
    return s;
}

Series2 Series2::euler() const {
    require_plain("euler");
    Series2 s = *this;
    for (int d = 0; d <= order_; ++d)
        for (int i = 0; i <= d; ++i) s.coeffs_[index(i, d - i)] *= Rational(d);
    return s;
}

Series1 Series2::diagonal() const {
    require_plain("diagonal");
    Series1 s(order_);
    for (int d = 0; d <= order_; ++d) {
        Rational acc(0);
        for (int i = 0; i <= d; ++i) acc += coeffs_[index(i, d - i)];
        s.set_coeff(d, acc);
    }
    return s;
}

void Series2::require_plain(const char* op) const {
    if (shift_b_ != 0 || shift_w_ != 0)
        throw std::logic_error(std::string("Series2::") + op + ": unnormalized Laurent offset");
    if (order_ < 0) throw std::logic_error(std::string("Series2::") + op + ": empty series");
}

Series2 Series2::operator-() const {
    Series2 s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series2 operator+(const Series2& a, const Series2& b) {
    a.require_plain("add");
    b.require_plain("add");
    Series2 s(std::min(a.order_, b.order_));
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return s;
}

Series2 operator-(const Series2& a, const Series2& b) {
    a.require_plain("sub");
    b.require_plain("sub");
    Series2 s(std::min(a.order_, b.order_));
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return s;
}

Series2 operator*(const Series2& a, const Series2& b) {
    a.require_plain("mul");
    b.require_plain("mul");
    int n = std::min(a.order_, b.order_);
    Series2 s(n);
    Rational t;
    for (int da = 0; da <= n; ++da) {
        for (int ia = 0; ia <= da; ++ia) {
            const Rational& ca = a.coeffs_[Series2::index(ia, da - ia)];
            if (ca == 0) continue;
            for (int db = 0; da + db <= n; ++db) {
                for (int ib = 0; ib <= db; ++ib) {
                    const Rational& cb = b.coeffs_[Series2::index(ib, db - ib)];
                    if (cb == 0) continue;
                    t = ca * cb;
                    s.coeffs_[Series2::index(ia + ib, da + db - ia - ib)] += t;
                }
            }
        }
    }
    return s;
}

Series2 operator/(const Series2& a, const Series2& b) {
    a.require_plain("div");
    b.require_plain("div");
    int vb = b.valuation();
    if (vb > b.order_) throw std::domain_error("Series2: division by zero series");
    // the lowest slice of b must be a single monomial
    int p = -1, q = -1;
    for (int i = 0; i <= vb; ++i) {
        if (b.coeffs_[Series2::index(i, vb - i)] != 0) {
            if (p >= 0)
                throw std::domain_error("Series2: divisor lowest slice is not a monomial");
            p = i;
            q = vb - i;
        }
    }
    // dividend must be divisible by that monomial
    for (int d = 0; d <= a.order_; ++d)
        for (int i = 0; i <= d; ++i)
            if (a.coeffs_[Series2::index(i, d - i)] != 0 && (i < p || d - i < q))
                throw std::domain_error("Series2: dividend not divisible at the valuation level");

    int n = std::min(a.order_, b.order_) - vb;
    if (n < 0) throw std::domain_error("Series2: division leaves no exact coefficients");
    // shift both down by (p, q); then divide by a unit-lowest series degree by degree
    Series2 ash(n), bsh(n), quo(n);
    for (int d = 0; d <= n; ++d)
        for (int i = 0; i <= d; ++i) {
            if (i + p + d - i + q <= a.order_)
                ash.coeffs_[Series2::index(i, d - i)] = a.coeffs_[Series2::index(i + p, d - i + q)];
            if (i + p + d - i + q <= b.order_)
                bsh.coeffs_[Series2::index(i, d - i)] = b.coeffs_[Series2::index(i + p, d - i + q)];
        }
    const Rational lead = bsh.coeffs_[0];
    Rational t;
    for (int d = 0; d <= n; ++d) {
        for (int i = 0; i <= d; ++i) {
            Rational acc = ash.coeffs_[Series2::index(i, d - i)];
            // subtract contributions of b-terms of positive degree
            for (int db = 1; db <= d; ++db) {
                for (int ib = 0; ib <= db; ++ib) {
                    const Rational& cb = bsh.coeffs_[Series2::index(ib, db - ib)];
                    if (cb == 0 || ib > i || db - ib > d - i) continue;
                    t = cb * quo.coeffs_[Series2::index(i - ib, d - i - (db - ib))];
                    acc -= t;
                }
            }
            quo.coeffs_[Series2::index(i, d - i)] = acc / lead;
        }
    }
    return quo;
}

Series2 operator+(const Series2& a, const Rational& c) {
    a.require_plain("add");
    Series2 s = a;
    s.coeffs_[0] += c;
    return s;
}

Series2 operator*(const Series2& a, const Rational& c) {
    a.require_plain("mul");
    Series2 s = a;
    for (auto& v : s.coeffs_) v *= c;
    return s;
}

Series2 operator/(const Rational& c, const Series2& a) {
    return Series2::constant(c, a.order()) / a;
}

Series2 compose(const Series2& f, const Series2& g1, const Series2& g2) {
    if (g1.valuation() < 1 || g2.valuation() < 1)
        throw std::domain_error("Series2 compose: inner series has nonzero constant term");
    int n = std::min({f.order(), g1.order(), g2.order()});
    // f(g1,g2) = sum_i g1^i P_i(g2), outer Horner in g1, inner Horner in g2
    auto row = [&](int i) {
        int jmax = std::min(f.order() - i, n);
        Series2 r = Series2::constant(f.coeff(i, jmax), n);
        for (int j = jmax - 1; j >= 0; --j) r = r * g2 + f.coeff(i, j);
        return r;
    };
    int imax = std::min(f.order(), n);
    Series2 acc = row(imax);
    for (int i = imax - 1; i >= 0; --i) acc = acc * g1 + row(i);
    return acc;
}

Series2 power_substitute(const Series2& f, int k, int target_order) {
    if (k < 1) throw std::invalid_argument("power_substitute: k must be >= 1");
    if (k == 1) return f.truncated(std::min(f.order(), target_order));
    long reach = static_cast<long>(k) * f.order() + k - 1;
    if (target_order > reach)
        throw std::invalid_argument("power_substitute: target order beyond exact reach");
    Series2 s(target_order);
    for (int d = 0; static_cast<long>(d) * k <= target_order; ++d)
        for (int i = 0; i <= d; ++i)
            if (f.coeff(i, d - i) != 0) s.set_coeff(i * k, (d - i) * k, f.coeff(i, d - i));
    return s;
}

bool agree_to(const Series2& a, const Series2& b, int upto) {
    return first_difference(a, b, upto).first < 0;
}

bool zero_to(const Series2& a, int upto) {
    if (a.order() < upto) throw std::logic_error("zero_to: series not exact that far");
    for (int d = 0; d <= upto; ++d)
        for (int i = 0; i <= d; ++i)
            if (a.coeff(i, d - i) != 0) return false;
    return true;
}

std::pair<int, int> first_difference(const Series2& a, const Series2& b, int upto) {
    if (a.order() < upto || b.order() < upto)
        throw std::logic_error("first_difference: series not exact that far");
    for (int d = 0; d <= upto; ++d)
        for (int i = 0; i <= d; ++i)
            if (a.coeff(i, d - i) != b.coeff(i, d - i)) return {i, d - i};
    return {-1, -1};
}

}  // namespace mapcensus
