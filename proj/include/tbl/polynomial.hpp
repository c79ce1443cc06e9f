#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tbl/localfield.hpp"

namespace tbl {

/**
 * Multivariate polynomial with integer coefficients in variables x1..xd.
 * Scenario files write these in infix syntax (+, -, *, ^, parentheses).
 */
class Poly {
  public:
    using Exponents = std::vector<unsigned>;

    explicit Poly(int dim = 1) : dim_(dim) {}

    static Poly constant(int dim, const mpz_class& c);
    static Poly variable(int dim, int index); // 0-based
    static Poly parse(const std::string& text, int dim);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const mpz_class& constant_value() const; // requires is_constant and nonzero, or zero poly
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    bool operator==(const Poly& rhs) const { return dim_ == rhs.dim_ && terms_ == rhs.terms_; }

    Poly pow(unsigned k) const;
    Poly derivative(int var) const;

    // GCD of the coefficients (nonnegative); 0 for the zero polynomial.
    mpz_class content() const;

    long total_degree() const; // -1 for zero

    // Quotient when rhs divides exactly in Z[x1..xd], nullopt otherwise.
    std::optional<Poly> exact_divide(const Poly& rhs) const;

    PAdic eval(const std::vector<PAdic>& point, long p, int precision) const;
    long eval_mod_p(const std::vector<long>& point, long p) const;

    std::string to_string() const;

  private:
    void add_term(const Exponents& e, const mpz_class& c);

    int dim_;
    std::map<Exponents, mpz_class> terms_;
};

// Univariate helpers over F_p (used by the d = 1 squarefreeness check).
std::vector<long> reduce_mod_p(const Poly& f, long p);
bool squarefree_mod_p(const Poly& f, long p);

} // namespace tbl
