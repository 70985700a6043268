#include "mapcensus/kernels.hpp"

#include "mapcensus/census_formulas.hpp"

namespace mapcensus {

Series1 solve_kernel_1v(Kernel1 which, int order) {
    if (order < 1) throw std::invalid_argument("solve_kernel_1v: order must be >= 1");
    const Series1 x = Series1::variable(order);
    const Rational one(1), three(3);
    Series1 g(order);
    for (int round = 0; round <= order; ++round) {
        switch (which) {
            case Kernel1::beta:
                g = x + g * g * three;
                break;
            case Kernel1::eta: {
                Series1 d = one - g;
                g = x / (d * d);
                break;
            }
            case Kernel1::gamma: {
                Series1 p = g + one;
                g = x * p * p;
                break;
            }
        }
    }
    return g;
}

std::pair<Series2, Series2> solve_kernel_2v(Kernel2 which, int order) {
    if (order < 1) throw std::invalid_argument("solve_kernel_2v: order must be >= 1");
    const Series2 xb = Series2::var_b(order), xw = Series2::var_w(order);
    const Rational one(1), two(2);
    Series2 g1(order), g2(order);
    for (int round = 0; round <= order; ++round) {
        Series2 n1(order), n2(order);
        switch (which) {
            case Kernel2::beta12:
                n1 = xb + g1 * g1 + g1 * g2 * two;
                n2 = xw + g2 * g2 + g1 * g2 * two;
                break;
            case Kernel2::eta12: {
                Series2 d2 = one - g2, d1 = one - g1;
                n1 = xb / (d2 * d2);
                n2 = xw / (d1 * d1);
                break;
            }
            case Kernel2::gamma12: {
                Series2 p2 = g2 + one, p1 = g1 + one;
                n1 = xb * p2 * p2;
                n2 = xw * p1 * p1;
                break;
            }
        }
        g1 = n1;
        g2 = n2;
    }
    return {g1, g2};
}

KernelBundle solve_kernels(int order1, int order2) {
    KernelBundle k;
    k.order1 = order1;
    k.order2 = order2;
    k.beta = solve_kernel_1v(Kernel1::beta, order1);
    k.eta = solve_kernel_1v(Kernel1::eta, order1);
    k.gamma = solve_kernel_1v(Kernel1::gamma, order1);
    std::tie(k.beta1, k.beta2) = solve_kernel_2v(Kernel2::beta12, order2);
    std::tie(k.eta1, k.eta2) = solve_kernel_2v(Kernel2::eta12, order2);
    std::tie(k.gamma1, k.gamma2) = solve_kernel_2v(Kernel2::gamma12, order2);
    return k;
}

ChangeVar1Report changevar_beta_to_eta(const KernelBundle& k, const SeriesCatalog1v& cat,
                                       int order) {
    ChangeVar1Report r;
    const Rational one(1), three(3);
    Series1 y_of_x = Series1::variable(cat.F.order()) * (cat.F + one) * (cat.F + one);
    Series1 eta_at = compose(k.eta, y_of_x);
    Series1 rhs = eta_at / (eta_at * three + one);
    r.new_of_old = y_of_x;
    r.kernel_via_new = rhs;
    r.checked_order = order;
    r.first_failure = first_difference(k.beta, rhs, order);
    r.pass = r.first_failure < 0;
    return r;
}

ChangeVar1Report changevar_eta_to_gamma(const KernelBundle& k, const SeriesCatalog1v& cat,
                                        int order) {
    ChangeVar1Report r;
    const Rational one(1), two(2);
    Series1 z_of_y = cat.W / Series1::variable(cat.W.order());
    Series1 gam_at = compose(k.gamma, z_of_y);
    Series1 rhs = gam_at / (gam_at * two + one);
    r.new_of_old = z_of_y;
    r.kernel_via_new = rhs;
    r.checked_order = order;
    r.first_failure = first_difference(k.eta, rhs, order);
    r.pass = r.first_failure < 0;
    return r;
}

ChangeVar2Report changevar_2v(ChangeVar2 which, const KernelBundle& k,
                              const SeriesCatalog2v& cat, int order) {
    ChangeVar2Report r;
    r.checked_order = order;
    const Rational one(1), three(3);
    if (which == ChangeVar2::beta_eta) {
        int n = cat.F.order();
        Series2 grow = (cat.F + one) * (cat.F + one);
        Series2 arg_b = Series2::var_b(n) * grow;
        Series2 arg_w = Series2::var_w(n) * grow;
        Series2 e1 = compose(k.eta1, arg_b, arg_w);
        Series2 e2 = compose(k.eta2, arg_b, arg_w);
        Series2 s = e1 + e2 - e1 * e2 * three + one;
        Series2 rhs1 = e1 * (one - e2) / s;
        Series2 rhs2 = e2 * (one - e1) / s;
        auto d1 = first_difference(k.beta1, rhs1, order);
        auto d2 = first_difference(k.beta2, rhs2, order);
        // the rooted series itself transports: F(x_b, x_w) = e1 + e2 - 3 e1 e2
        auto d3 = first_difference(cat.F, e1 + e2 - e1 * e2 * three, order);
        r.first_failure = d1.first >= 0 ? d1 : (d2.first >= 0 ? d2 : d3);
        r.pass = d1.first < 0 && d2.first < 0 && d3.first < 0;
        r.detail = "beta1 - eta1^(1-eta2^)/S, beta2 swap, F - (eta1^+eta2^-3 eta1^ eta2^)";
    } else {
        int n = cat.W.order();
        Series2 zb = cat.W / Series2::var_w(n);   // first kernel argument
        Series2 zw = cat.W / Series2::var_b(n);
        Series2 g1 = compose(k.gamma1, zb, zw);
        Series2 g2 = compose(k.gamma2, zb, zw);
        Series2 s = g1 + g2 + one;
        Series2 rhs1 = g1 / s;
        Series2 rhs2 = g2 / s;
        auto d1 = first_difference(k.eta1, rhs1, order);
        auto d2 = first_difference(k.eta2, rhs2, order);
        r.first_failure = d1.first >= 0 ? d1 : d2;
        r.pass = d1.first < 0 && d2.first < 0;
        r.detail = "eta1 - gamma1^/(1+gamma1^+gamma2^), eta2 swap";
    }
    return r;
}

}  // namespace mapcensus
