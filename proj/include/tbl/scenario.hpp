#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbl/brauer_eval.hpp"

namespace tbl {

/**
 * Scenario file: UTF-8 text with `#` comments and sections
 *
 *   [field]    p, precision
 *   [scheme]   dim, boundary (repeatable), vertical
 *   [classes]  class (repeatable, s-expression syntax)
 *   [points]   point (repeatable; comma-separated coordinates, each an
 *              integer or a rational a/b with b prime to p)
 *   [options]  n (repeatable or comma list), seed, samples, l_bound
 */
struct Scenario {
    long p = 0;
    int precision = PAdic::kDefaultPrecision;
    int dim = 1;
    bool vertical = true;

    std::vector<std::string> boundary_texts;
    std::vector<Poly> boundary;

    std::vector<std::string> class_texts;
    std::vector<ClassExpr> classes;

    struct PointSpec {
        std::string text;
        std::vector<std::pair<mpz_class, mpz_class>> coords; // num/den
    };
    std::vector<PointSpec> points;

    std::vector<long> n_values;
    std::optional<uint64_t> seed;
    long samples = 100;
    long l_bound = 3;
    int q1_degree = 1; // residue degree for the injectivity probe

    SchemeModel model() const;
    OPoint make_point(const PointSpec& spec, int precision_override) const;
    OPoint make_point(const PointSpec& spec) const { return make_point(spec, precision); }
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

} // namespace tbl
