#include "mapcensus/closed_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef MAPCENSUS_DATA_DIR
#define MAPCENSUS_DATA_DIR "."
#endif

namespace mapcensus {

Series2 Poly2::eval(const Series2& a, const Series2& b) const {
    if (terms.empty()) return Series2(std::min(a.order(), b.order()));
    int n = std::min(a.order(), b.order());
    int imax = 0, jmax = 0;
    for (const auto& t : terms) {
        imax = std::max(imax, t.i);
        jmax = std::max(jmax, t.j);
    }
    // dense coefficient grid, then Horner rows in b and an outer Horner in a
    std::vector<std::vector<Rational>> grid(imax + 1, std::vector<Rational>(jmax + 1));
    for (const auto& t : terms) grid[t.i][t.j] += t.c;
    auto row = [&](int i) {
        Series2 r = Series2::constant(grid[i][jmax], n);
        for (int j = jmax - 1; j >= 0; --j) r = r * b + grid[i][j];
        return r;
    };
    Series2 acc = row(imax);
    for (int i = imax - 1; i >= 0; --i) acc = acc * a + row(i);
    return acc;
}

Series2 RationalForm2::eval(const Series2& a, const Series2& b) const {
    Series2 v = numerator.eval(a, b);
    for (const auto& f : denominator_factors) v = v / f.eval(a, b);
    return v;
}

RationalForm2 parse_closed_form(std::istream& in, const std::string& name) {
    RationalForm2 form;
    Poly2* current = nullptr;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "[numerator]") {
            current = &form.numerator;
        } else if (tok == "[denominator-factor") {
            form.denominator_factors.emplace_back();
            current = &form.denominator_factors.back();
            // consume the index and closing bracket; the ordinal is decorative
            ls >> tok;
        } else if (tok == "term") {
            if (!current)
                throw std::runtime_error(name + ": term before any section header");
            std::string coeff;
            int i, j;
            if (!(ls >> coeff >> i >> j))
                throw std::runtime_error(name + ": malformed term at line " + std::to_string(lineno));
            Rational c(coeff);
            c.canonicalize();
            current->terms.push_back({c, i, j});
        } else {
            throw std::runtime_error(name + ": unrecognized record '" + tok + "' at line " +
                                     std::to_string(lineno));
        }
    }
    if (form.numerator.terms.empty())
        throw std::runtime_error(name + ": missing or empty [numerator]");
    return form;
}

std::string closed_form_data_dir() {
    if (const char* env = std::getenv("MAPCENSUS_DATA_DIR")) return env;
    return MAPCENSUS_DATA_DIR;
}

RationalForm2 load_closed_form(const std::string& filename) {
    std::string path = closed_form_data_dir() + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open closed-form data file: " + path);
    return parse_closed_form(in, filename);
}

}  // namespace mapcensus
