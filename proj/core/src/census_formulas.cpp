#include "mapcensus/census_formulas.hpp"

#include "mapcensus/decomposition_checks.hpp"

namespace mapcensus {

namespace {

const Rational kOne(1), kTwo(2), kThree(3), kFour(4), kSix(6), kNine(9);

void require_kernel_order(int have, int need, const char* what) {
    if (have < need)
        throw std::invalid_argument(std::string("catalog build: kernel order too small for ") +
                                    what);
}

}  // namespace

void build_base_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat) {
    int n = order + kCatalogMargin;
    require_kernel_order(k.order1, n, "base 1v");
    const Series1 b = k.beta.truncated(n);
    const Series1 e = k.eta.truncated(n);
    const Series1 x = Series1::variable(n);

    Series1 one_minus_3b = kOne - b * kThree;
    cat.F = (b * (kTwo - b * kNine) / (one_minus_3b * one_minus_3b)).truncated(order);
    cat.f = (cat.F / (cat.F + kOne)).truncated(order);
    {
        Series1 F_full = b * (kTwo - b * kNine) / (one_minus_3b * one_minus_3b);
        cat.E = (x_derivative(F_full) * kTwo + F_full + kOne).truncated(order);
    }

    Series1 G_full = e * (kTwo - e * kThree);
    cat.G = G_full.truncated(order);
    Series1 W_full = G_full - x * kTwo;
    Series1 W_over_y = W_full / x;
    Series1 J_full = W_full / (W_over_y + kOne);
    cat.W = W_full.truncated(order);
    cat.J = J_full.truncated(order);
    cat.C = (x_derivative(W_full) - W_full).truncated(order);
    cat.B = (x_derivative(J_full) - J_full).truncated(order);

    // 2-rooted simple splits, then L and K by exact division from their
    // defining identities  G_ff' = L (W/y + 1)  and  G_vf' = K (W/y + 1) + W/y.
    Series1 one_minus_e = kOne - e;
    Series1 Gffp_full = kOne / (one_minus_e * one_minus_e);
    Series1 Gvfp_full = e * kTwo / one_minus_e;
    cat.L = (Gffp_full / (W_over_y + kOne)).truncated(order);
    cat.K = ((Gvfp_full - W_over_y) / (W_over_y + kOne)).truncated(order);
}

void build_krooted_maps_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat) {
    int n = order + kCatalogMargin;
    require_kernel_order(k.order1, n, "k-rooted maps 1v");
    const Series1 b = k.beta.truncated(n);
    Series1 d3 = kOne - b * kThree;
    Series1 d6 = kOne - b * kSix;
    cat.F_vf = (kTwo / (d6 * d3)).truncated(order);
    cat.F_ff = (kOne / (d3 * d3 * d6)).truncated(order);
    cat.F_vv = (b * kSix / d6).truncated(order);
}

void build_krooted_2c_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat) {
    int n = order + kCatalogMargin;
    require_kernel_order(k.order1, n, "k-rooted 2c 1v");
    const Series1 e = k.eta.truncated(n);
    Series1 d3 = kOne - e * kThree;
    Series1 d1 = kOne - e;
    cat.G_vf = (kTwo / d3).truncated(order);
    cat.G_ff = (kOne / (d3 * d1)).truncated(order);
    cat.G_vv = (e * kTwo / d3).truncated(order);
    cat.G_ff_prime = (kOne / (d1 * d1)).truncated(order);
    cat.G_ff2 = (e * kTwo / (d3 * d1 * d1)).truncated(order);
    cat.G_vf_prime = (e * kTwo / d1).truncated(order);
    cat.G_vf2 = (e * kFour / (d3 * d1)).truncated(order);
}

void build_krooted_3c_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat) {
    int n = order + kCatalogMargin;
    require_kernel_order(k.order1, n, "k-rooted 3c 1v");
    const Series1 g = k.gamma.truncated(n);
    Series1 g2 = g * g;
    Series1 g4 = g2 * g2;
    Series1 p = g + kOne;                    // 1 + gamma
    Series1 m = kOne - g;                    // 1 - gamma
    Series1 q = g * kThree + g2 + kOne;      // 1 + 3 gamma + gamma^2
    Series1 r = g * kTwo + kOne;             // 1 + 2 gamma
    Series1 q2 = q * q, r3 = r * r * r, p2 = p * p;

    Series1 hnum = g4 + g2 * g * kTwo - g2 * kThree - g * kFour - kOne;
    cat.H = (-(g4 * g2 * hnum) / (p2 * p2 * q2 * r3)).truncated(order);
    cat.H_vf = (p * (g2 * Rational(8) + g * Rational(13) + kFour) * g4 * kFour /
                (m * q2 * r3)).truncated(order);
    cat.H_vf_prime = (g4 * kTwo / (q * r * r)).truncated(order);
    cat.H_ff = (g2 * (g2 * Rational(10) + g * Rational(5) + g2 * g * kNine + kOne) * p2 * kTwo /
                (m * q2 * r3)).truncated(order);
    cat.H_ff_prime = ((g * kThree + g2 * kThree + kOne) * g2 / (q * r * r)).truncated(order);
    cat.H_vv2 = ((g4 * g * Rational(8) + g4 * Rational(28) + g2 * g * Rational(31) +
                  g2 * Rational(21) + g * Rational(10) + kTwo) *
                 g4 * kTwo / (q2 * p2 * m * r3)).truncated(order);
    cat.H_vv_ge3 = (g2 * (g * kThree + kTwo) * kTwo / (m * q * r)).truncated(order);
}

SeriesCatalog1v build_catalog_1v(const KernelBundle& k, int order) {
    SeriesCatalog1v cat;
    cat.order = order;
    build_base_1v(k, order, cat);
    build_krooted_maps_1v(k, order, cat);
    build_krooted_2c_1v(k, order, cat);
    build_krooted_3c_1v(k, order, cat);
    return cat;
}

SeriesCatalog1v build_catalog_1v(int order) {
    KernelBundle k;
    k.order1 = order + kCatalogMargin;
    k.beta = solve_kernel_1v(Kernel1::beta, k.order1);
    k.eta = solve_kernel_1v(Kernel1::eta, k.order1);
    k.gamma = solve_kernel_1v(Kernel1::gamma, k.order1);
    return build_catalog_1v(k, order);
}

const ThreeConnForms& ThreeConnForms::instance() {
    static const ThreeConnForms forms = [] {
        ThreeConnForms f;
        f.rooted = load_closed_form("h_rooted.cf");
        f.bf = load_closed_form("h_bf.cf");
        f.bfp = load_closed_form("h_bfp.cf");
        f.ff = load_closed_form("h_ff.cf");
        f.ffp = load_closed_form("h_ffp.cf");
        f.bb2 = load_closed_form("h_bb2.cf");
        f.bw2 = load_closed_form("h_bw2.cf");
        f.bb3 = load_closed_form("h_bb3.cf");
        f.bw3 = load_closed_form("h_bw3.cf");
        return f;
    }();
    return forms;
}

void build_base_2v(const KernelBundle& k, int order, SeriesCatalog2v& cat) {
    int n = order + kCatalogMargin;
    require_kernel_order(k.order2, n, "base 2v");
    const Series2 b1 = k.beta1.truncated(n), b2 = k.beta2.truncated(n);
    const Series2 e1 = k.eta1.truncated(n), e2 = k.eta2.truncated(n);
    const Series2 yb = Series2::var_b(n), yw = Series2::var_w(n);

    {
        Series2 d1 = b1 + b2 * kTwo - kOne;
        Series2 d2 = b2 + b1 * kTwo - kOne;
        Series2 num = -(b1 * b1 * kTwo + b2 * b2 * kTwo + b1 * b2 * Rational(5) - b1 - b2);
        Series2 F_full = num / (d1 * d2);
        cat.F = F_full.truncated(order);
        cat.f = (F_full / (F_full + kOne)).truncated(order);
        cat.E = (F_full.euler() * kTwo + F_full + kOne).truncated(order);
    }

    Series2 G_full = e1 + e2 - e1 * e2 * kThree;
    cat.G = G_full.truncated(order);
    Series2 W_full = G_full - yb - yw;
    cat.W = W_full.truncated(order);
    cat.C = (W_full.euler() - W_full).truncated(order);

    Series2 one_m_e1 = kOne - e1, one_m_e2 = kOne - e2;
    Series2 Gffp_full = kOne / (one_m_e1 * one_m_e2);
    Series2 Gbfp_full = e1 / one_m_e1;
    Series2 Gwfp_full = e2 / one_m_e2;
    cat.G_ff_prime = Gffp_full.truncated(order);
    cat.G_bf_prime = Gbfp_full.truncated(order);
    cat.G_wf_prime = Gwfp_full.truncated(order);

    Series2 W_over_yb = W_full / yb;
    cat.L = (Gffp_full / (W_over_yb + kOne)).truncated(order);
    cat.tL = cat.L.swapped();
    cat.K_b = (Gbfp_full / (W_over_yb + kOne)).truncated(order);
    cat.K_w = ((Gwfp_full - W_over_yb) / (W_over_yb + kOne)).truncated(order);
    cat.tK_b = cat.K_b.swapped();
    cat.tK_w = cat.K_w.swapped();
}

void build_krooted_2v(const KernelBundle& k, int order, Family2v family, SeriesCatalog2v& cat) {
    int n = order + kCatalogMargin;
    require_kernel_order(k.order2, n, "k-rooted 2v");
    switch (family) {
        case Family2v::maps: {
            const Series2 b1 = k.beta1.truncated(n), b2 = k.beta2.truncated(n);
            Series2 D = b1 * b2 * kFour + kOne - b2 * kFour - b1 * kFour + b2 * b2 * kFour +
                        b1 * b1 * kFour;
            Series2 d1 = b1 + b2 * kTwo - kOne;
            Series2 d2 = b2 + b1 * kTwo - kOne;
            cat.F_bf = ((b2 * kTwo - kOne) / (D * d2)).truncated(order);
            cat.F_wf = ((b1 * kTwo - kOne) / (D * d1)).truncated(order);
            cat.F_ff = (-(b1 + b2 - kOne) / (d1 * d2 * D)).truncated(order);
            cat.F_bb = (b2 / D).truncated(order);
            cat.F_ww = (b1 / D).truncated(order);
            cat.F_bw = (-(b1 * b1 * kTwo - b1 + b1 * b2 * kTwo - b2 + b2 * b2 * kTwo) * kTwo / D)
                           .truncated(order);
            break;
        }
        case Family2v::two_connected: {
            const Series2 e1 = k.eta1.truncated(n), e2 = k.eta2.truncated(n);
            Series2 S = e1 * e2 * kThree + e2 - kOne + e1;
            Series2 m1 = e1 - kOne, m2 = e2 - kOne;
            cat.G_bf = (-(m2 * (e1 + kOne)) / (m1 * S)).truncated(order);
            cat.G_wf = (-((e2 + kOne) * m1) / (m2 * S)).truncated(order);
            cat.G_ff = ((e1 * e2 - kOne) / (m2 * m1 * S)).truncated(order);
            cat.G_bb = (e2 * m1 / S).truncated(order);
            cat.G_ww = (e1 * m2 / S).truncated(order);
            cat.G_bw = (e1 * e2 * Rational(-4) / S).truncated(order);
            // 2-rooted remainders need the primes from the base build
            if (cat.G_bf_prime.order() >= order) {
                cat.G_ff2 = (cat.G_ff - cat.G_ff_prime.truncated(order)).truncated(order);
                cat.G_bf2 = (cat.G_bf - kOne - cat.G_bf_prime.truncated(order)).truncated(order);
                cat.G_wf2 = (cat.G_wf - kOne - cat.G_wf_prime.truncated(order)).truncated(order);
            }
            break;
        }
        case Family2v::three_connected: {
            const Series2 g1 = k.gamma1.truncated(n), g2 = k.gamma2.truncated(n);
            const ThreeConnForms& f = ThreeConnForms::instance();
            cat.H = f.rooted.eval(g1, g2).truncated(order);
            cat.H_bf = f.bf.eval(g1, g2).truncated(order);
            cat.H_wf = cat.H_bf.swapped();
            cat.H_bf_prime = f.bfp.eval(g1, g2).truncated(order);
            cat.H_wf_prime = cat.H_bf_prime.swapped();
            cat.H_ff = f.ff.eval(g1, g2).truncated(order);
            cat.H_ff_prime = f.ffp.eval(g1, g2).truncated(order);
            cat.H_bb2 = f.bb2.eval(g1, g2).truncated(order);
            cat.H_ww2 = cat.H_bb2.swapped();
            cat.H_bw2 = f.bw2.eval(g1, g2).truncated(order);
            cat.H_bb_ge3 = f.bb3.eval(g1, g2).truncated(order);
            cat.H_ww_ge3 = cat.H_bb_ge3.swapped();
            cat.H_bw_ge3 = f.bw3.eval(g1, g2).truncated(order);
            break;
        }
    }
}

SeriesCatalog2v build_catalog_2v(const KernelBundle& k, int order, Catalog2Options opt) {
    SeriesCatalog2v cat;
    cat.order = order;
    cat.order_krooted = opt.order_krooted < 0 ? order : opt.order_krooted;
    if (opt.auxiliary) {
        opt.maps = opt.two_connected = opt.three_connected = true;
        // the identity layer works at a single uniform order
        cat.order_krooted = order;
    }
    if (opt.auxiliary || opt.maps) build_base_2v(k, order, cat);
    if (opt.maps) build_krooted_2v(k, cat.order_krooted, Family2v::maps, cat);
    if (opt.two_connected) {
        if (cat.G_ff_prime.order() < cat.order_krooted) build_base_2v(k, order, cat);
        build_krooted_2v(k, cat.order_krooted, Family2v::two_connected, cat);
    }
    if (opt.three_connected) build_krooted_2v(k, cat.order_krooted, Family2v::three_connected, cat);
    if (opt.auxiliary) {
        cat.J = derive_j_2v(cat, order);
        cat.B = (cat.J.euler() - cat.J).truncated(cat.J.order());
    }
    return cat;
}

SeriesCatalog2v build_catalog_2v(int order, Catalog2Options opt) {
    int korder = opt.order_krooted < 0 || opt.auxiliary ? order : opt.order_krooted;
    int need = std::max(order, korder) + kCatalogMargin;
    KernelBundle k;
    k.order2 = need;
    bool base = opt.auxiliary || opt.maps || opt.two_connected;
    if (opt.auxiliary || opt.maps) std::tie(k.beta1, k.beta2) = solve_kernel_2v(Kernel2::beta12, need);
    if (base) std::tie(k.eta1, k.eta2) = solve_kernel_2v(Kernel2::eta12, need);
    if (opt.auxiliary || opt.three_connected)
        std::tie(k.gamma1, k.gamma2) = solve_kernel_2v(Kernel2::gamma12, need);
    return build_catalog_2v(k, order, opt);
}

}  // namespace mapcensus
