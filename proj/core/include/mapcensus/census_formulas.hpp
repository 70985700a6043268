#pragma once

#include "mapcensus/closed_form.hpp"
#include "mapcensus/kernels.hpp"
#include "mapcensus/series1.hpp"
#include "mapcensus/series2.hpp"

namespace mapcensus {

/// Margin of extra orders the catalog builders compute internally so that
/// division/derivative order loss never eats into the requested range.
inline constexpr int kCatalogMargin = 8;

/// Every named univariate generating function, exact to `order`.
///
/// F-family: rooted quadrangulations by faces (= rooted maps by edges) and the
/// k-rooted map series. G-family: rooted / k-rooted simple quadrangulations
/// (= 2-connected maps), plus the auxiliary core series W, J, C, B, L, K and
/// the 2-rooted family splits. H-family: the 3-connected (irreducible) series.
struct SeriesCatalog1v {
    int order = 0;
    Series1 F, f, E, F_vv, F_vf, F_ff;
    Series1 G, W, J, C, B, L, K;
    Series1 G_vv, G_vf, G_ff;
    Series1 G_vf_prime, G_ff_prime, G_vf2, G_ff2;
    Series1 H, H_vf, H_vf_prime, H_ff, H_ff_prime, H_vv2, H_vv_ge3;
};

/// Two-variable counterparts with bicolored splits. Swapped companions (tL,
/// tK_b, tK_w and the w-side H entries) are cached because the identity layer
/// uses them constantly.
struct SeriesCatalog2v {
    int order = 0;          // order of the rooted entries
    int order_krooted = 0;  // order of the k-rooted entries (may be smaller)
    Series2 F, f, E, F_bf, F_wf, F_ff, F_bb, F_ww, F_bw;
    Series2 G, G_bf, G_wf, G_ff, G_bb, G_ww, G_bw;
    Series2 W, J, C, B, L, tL, K_b, K_w, tK_b, tK_w;
    Series2 G_bf_prime, G_wf_prime, G_ff_prime, G_bf2, G_wf2, G_ff2;
    Series2 H, H_bf, H_wf, H_bf_prime, H_wf_prime, H_ff, H_ff_prime;
    Series2 H_bb2, H_ww2, H_bw2, H_bb_ge3, H_ww_ge3, H_bw_ge3;
};

struct Catalog2Options {
    bool maps = true;
    bool two_connected = true;
    bool three_connected = true;
    /// W, J, C, B, L, K and the 2-rooted splits; implies all three families.
    bool auxiliary = true;
    /// order for k-rooted entries; -1 means same as the rooted order.
    int order_krooted = -1;
};

// Build steps (exposed so tests can exercise them individually).
void build_base_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat);
void build_krooted_maps_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat);
void build_krooted_2c_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat);
void build_krooted_3c_1v(const KernelBundle& k, int order, SeriesCatalog1v& cat);

SeriesCatalog1v build_catalog_1v(const KernelBundle& k, int order);
SeriesCatalog1v build_catalog_1v(int order);

enum class Family2v { maps, two_connected, three_connected };

void build_base_2v(const KernelBundle& k, int order, SeriesCatalog2v& cat);
void build_krooted_2v(const KernelBundle& k, int order, Family2v family, SeriesCatalog2v& cat);

SeriesCatalog2v build_catalog_2v(const KernelBundle& k, int order, Catalog2Options opt = {});
SeriesCatalog2v build_catalog_2v(int order, Catalog2Options opt = {});

/// The three-connected two-variable closed forms, loaded from the data files
/// once per process.
struct ThreeConnForms {
    RationalForm2 rooted, bf, bfp, ff, ffp, bb2, bw2, bb3, bw3;
    static const ThreeConnForms& instance();
};

}  // namespace mapcensus
