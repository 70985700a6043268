#include "mapcensus/series1.hpp"

#include <algorithm>

namespace mapcensus {

namespace {
const Rational kZero(0);
}

Series1 Series1::constant(const Rational& c, int order) {
    Series1 s(order);
    s.coeffs_[0] = c;
    return s;
}

Series1 Series1::variable(int order) { return monomial(Rational(1), 1, order); }

Series1 Series1::monomial(const Rational& c, int k, int order) {
    Series1 s(order);
    if (k < 0 || k > order) throw std::invalid_argument("Series1::monomial: exponent out of range");
    s.coeffs_[k] = c;
    return s;
}

const Rational& Series1::coeff(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("Series1::coeff: exponent not tracked");
    return coeffs_[k];
}

void Series1::set_coeff(int k, const Rational& v) {
    if (k < 0 || k > order_) throw std::out_of_range("Series1::set_coeff: exponent not tracked");
    coeffs_[k] = v;
}

int Series1::valuation() const {
    for (int i = 0; i <= order_; ++i)
        if (coeffs_[i] != 0) return i;
    return order_ + 1;
}

Series1 Series1::truncated(int order) const {
    require_plain("truncated");
    if (order > order_) throw std::invalid_argument("Series1::truncated: not exact that far");
    Series1 s(order);
    std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
    return s;
}

Series1 Series1::shifted(int delta) const {
    Series1 s = *this;
    s.shift_ += delta;
    return s;
}

Series1 Series1::normalized() const {
    if (shift_ == 0) return *this;
    if (shift_ > 0) {
        Series1 s(order_ + shift_);
        for (int i = 0; i <= order_; ++i) s.coeffs_[i + shift_] = coeffs_[i];
        return s;
    }
    // negative offset: every surviving exponent must be >= 0
    int drop = -shift_;
    for (int i = 0; i < std::min(drop, order_ + 1); ++i)
        if (coeffs_[i] != 0)
            throw std::domain_error("Series1::normalized: negative exponent survives");
    if (order_ - drop < 0) throw std::domain_error("Series1::normalized: nothing left");
    Series1 s(order_ - drop);
    for (int i = drop; i <= order_; ++i) s.coeffs_[i - drop] = coeffs_[i];
    return s;
}

void Series1::require_plain(const char* op) const {
    if (shift_ != 0)
        throw std::logic_error(std::string("Series1::") + op + ": unnormalized Laurent offset");
    if (order_ < 0) throw std::logic_error(std::string("Series1::") + op + ": empty series");
}

Series1 Series1::operator-() const {
    Series1 s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series1 operator+(const Series1& a, const Series1& b) {
    a.require_plain("add");
    b.require_plain("add");
    Series1 s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
}

Series1 operator-(const Series1& a, const Series1& b) {
    a.require_plain("sub");
    b.require_plain("sub");
    Series1 s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return s;
}

Series1 operator*(const Series1& a, const Series1& b) {
    a.require_plain("mul");
    b.require_plain("mul");
    Series1 s(std::min(a.order_, b.order_));
    Rational acc;
    for (int i = 0; i <= s.order_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j + i <= s.order_; ++j) {
            if (b.coeffs_[j] == 0) continue;
            acc = a.coeffs_[i] * b.coeffs_[j];
            s.coeffs_[i + j] += acc;
        }
    }
    return s;
}

Series1 operator/(const Series1& a, const Series1& b) {
    a.require_plain("div");
    b.require_plain("div");
    int vb = b.valuation();
    if (vb > b.order_) throw std::domain_error("Series1: division by zero series");
    if (a.valuation() < vb)
        throw std::domain_error("Series1: valuation mismatch in division");
    int n = std::min(a.order_, b.order_) - vb;
    if (n < 0) throw std::domain_error("Series1: division leaves no exact coefficients");
    Series1 q(n);
    const Rational& lead = b.coeffs_[vb];
    for (int k = 0; k <= n; ++k) {
        Rational acc = (k + vb <= a.order_) ? a.coeffs_[k + vb] : Rational(0);
        for (int j = 1; j <= k; ++j) {
            if (b.coeffs_[vb + j] == 0) continue;
            acc -= b.coeffs_[vb + j] * q.coeffs_[k - j];
        }
        q.coeffs_[k] = acc / lead;
    }
    return q;
}

Series1 operator+(const Series1& a, const Rational& c) {
    a.require_plain("add");
    Series1 s = a;
    s.coeffs_[0] += c;
    return s;
}

Series1 operator*(const Series1& a, const Rational& c) {
    a.require_plain("mul");
    Series1 s = a;
    for (auto& v : s.coeffs_) v *= c;
    return s;
}

Series1 operator/(const Rational& c, const Series1& a) {
    return Series1::constant(c, a.order()) / a;
}

Series1 compose(const Series1& f, const Series1& g) {
    if (g.valuation() < 1)
        throw std::domain_error("Series1 compose: inner series has nonzero constant term");
    int n = std::min(f.order(), g.order());
    // Horner over truncated series
    Series1 r = Series1::constant(f.coeff(f.order() <= n ? f.order() : n), n);
    for (int i = std::min(f.order(), n) - 1; i >= 0; --i) r = r * g + f.coeff(i);
    return r;
}

Series1 power_substitute(const Series1& f, int k, int target_order) {
    if (k < 1) throw std::invalid_argument("power_substitute: k must be >= 1");
    if (k == 1) return f.truncated(std::min(f.order(), target_order));
    // exact through k*order(f) + k - 1; the caller must not ask beyond that
    long reach = static_cast<long>(k) * f.order() + k - 1;
    if (target_order > reach)
        throw std::invalid_argument("power_substitute: target order beyond exact reach");
    Series1 s(target_order);
    for (int i = 0; static_cast<long>(i) * k <= target_order; ++i)
        s.set_coeff(i * k, f.coeff(i));
    return s;
}

Series1 derivative(const Series1& f) {
    if (f.order() < 1) throw std::domain_error("derivative: order too small");
    Series1 s(f.order() - 1);
    for (int i = 1; i <= f.order(); ++i) s.set_coeff(i - 1, f.coeff(i) * Rational(i));
    return s;
}

Series1 antiderivative(const Series1& f) {
    Series1 s(f.order() + 1);
    for (int i = 0; i <= f.order(); ++i) s.set_coeff(i + 1, f.coeff(i) / Rational(i + 1));
    return s;
}

Series1 x_derivative(const Series1& f) {
    Series1 s(f.order());
    for (int i = 0; i <= f.order(); ++i) s.set_coeff(i, f.coeff(i) * Rational(i));
    return s;
}

bool agree_to(const Series1& a, const Series1& b, int upto) {
    return first_difference(a, b, upto) < 0;
}

bool zero_to(const Series1& a, int upto) {
    if (a.order() < upto) throw std::logic_error("zero_to: series not exact that far");
    for (int i = 0; i <= upto; ++i)
        if (a.coeff(i) != 0) return false;
    return true;
}

int first_difference(const Series1& a, const Series1& b, int upto) {
    if (a.order() < upto || b.order() < upto)
        throw std::logic_error("first_difference: series not exact that far");
    for (int i = 0; i <= upto; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return -1;
}

}  // namespace mapcensus
