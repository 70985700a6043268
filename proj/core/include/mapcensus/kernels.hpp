#pragma once

#include "mapcensus/series1.hpp"
#include "mapcensus/series2.hpp"

namespace mapcensus {

struct SeriesCatalog1v;
struct SeriesCatalog2v;

enum class Kernel1 { beta, eta, gamma };
enum class Kernel2 { beta12, eta12, gamma12 };

/// The solved algebraic kernels at a given truncation order. The three
/// univariate kernels satisfy
///   beta = x + 3 beta^2,  eta (1-eta)^2 = y,  gamma = z (1+gamma)^2,
/// and the bivariate pairs the corresponding two-variable systems; all are the
/// unique power-series solutions with zero constant term.
struct KernelBundle {
    int order1 = 0;
    int order2 = 0;
    Series1 beta, eta, gamma;
    Series2 beta1, beta2, eta1, eta2, gamma1, gamma2;
};

/// Fixed-point iteration g <- RHS(g); each round gains at least one order.
Series1 solve_kernel_1v(Kernel1 which, int order);
std::pair<Series2, Series2> solve_kernel_2v(Kernel2 which, int order);

KernelBundle solve_kernels(int order1, int order2);

/// Change of variable linking the map kernel to the simple-quadrangulation
/// kernel: under y = x (1+F(x))^2 the two kernels are related by
/// beta(x) = eta(y) / (1 + 3 eta(y)).
struct ChangeVar1Report {
    Series1 new_of_old;     // the substitution series (y in terms of x, etc.)
    Series1 kernel_via_new; // the right-hand side composed through it
    bool pass = false;
    int checked_order = 0;
    int first_failure = -1;
};

ChangeVar1Report changevar_beta_to_eta(const KernelBundle& k, const SeriesCatalog1v& cat, int order);
/// z = W(y)/y with eta(y) = gamma(z) / (2 gamma(z) + 1).
ChangeVar1Report changevar_eta_to_gamma(const KernelBundle& k, const SeriesCatalog1v& cat, int order);

enum class ChangeVar2 { beta_eta, eta_gamma };

struct ChangeVar2Report {
    bool pass = false;
    int checked_order = 0;
    std::pair<int, int> first_failure{-1, -1};
    std::string detail;
};

/// Bivariate counterparts. For beta<->eta the substitution is
/// (y_b, y_w) = (x_b (1+F)^2, x_w (1+F)^2) and the kernels are linked by
///   beta1 = eta1^ (1 - eta2^) / S,  S = 1 + eta1^ + eta2^ - 3 eta1^ eta2^
/// (equivalently eta1^ = beta1 / (1 - beta1 - 2 beta2)); for eta<->gamma the
/// substitution is (z_b, z_w) = (W/y_w, W/y_b) with
///   eta1 = gamma1^ / (1 + gamma1^ + gamma2^).
ChangeVar2Report changevar_2v(ChangeVar2 which, const KernelBundle& k,
                              const SeriesCatalog2v& cat, int order);

}  // namespace mapcensus
