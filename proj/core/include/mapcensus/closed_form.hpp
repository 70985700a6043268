#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mapcensus/series2.hpp"

namespace mapcensus {

/// A bivariate polynomial as a term list; evaluation by grouped Horner.
struct Poly2 {
    struct Term {
        Rational c;
        int i = 0, j = 0;
    };
    std::vector<Term> terms;

    Series2 eval(const Series2& a, const Series2& b) const;
};

/// numerator / product(denominator factors), all polynomials in the two
/// kernel variables. The big three-connected closed forms are kept in data
/// files in this shape so the transcription stays reviewable.
struct RationalForm2 {
    Poly2 numerator;
    std::vector<Poly2> denominator_factors;

    Series2 eval(const Series2& a, const Series2& b) const;
};

/// Line-oriented format: `term <rational-coeff> <exp1> <exp2>` records grouped
/// under `[numerator]` / `[denominator-factor k]` headers; `#` comments.
RationalForm2 parse_closed_form(std::istream& in, const std::string& name);
RationalForm2 load_closed_form(const std::string& filename);

/// Resolves the data directory: MAPCENSUS_DATA_DIR env var if set, else the
/// build-time default.
std::string closed_form_data_dir();

}  // namespace mapcensus
