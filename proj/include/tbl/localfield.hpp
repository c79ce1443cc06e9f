#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tbl/errors.hpp"

namespace tbl {

/**
 * A p-adic number held at finite precision.
 *
 * A nonzero value is stored as p^valuation * unit, where the unit part is an
 * integer in [1, p^precision) coprime to p, known modulo p^precision.  The
 * precision counts significant base-p digits of the unit part and is
 * propagated explicitly through arithmetic: aligned sums keep the smaller
 * digit count, cancellation in subtraction eats digits one-for-one, and a
 * difference whose valuation cannot be read off from the available digits
 * raises PrecisionExhausted instead of guessing.
 *
 * Exact zero is its own kind (not "valuation = +infinity") so that a true
 * zero is never confused with a value that merely vanished to working
 * precision.  Exact zero behaves as an absorbing/identity element of infinite
 * precision.
 *
 * Values built directly from rationals additionally remember the exact value
 * they truncate.  Operator arithmetic always works on the stored digits and
 * drops the witness; polynomial evaluation at fully exact points uses the
 * witnesses to decide exact vanishing (see Poly::eval).
 */
class PAdic {
  public:
    static constexpr int kDefaultPrecision = 32;

    // Canonical decomposition of an integer value.
    static PAdic make(long p, int precision, const mpz_class& value);
    // Canonical decomposition of num/den; den must be prime to p.
    static PAdic make_rational(long p, int precision, const mpz_class& num, const mpz_class& den);
    static PAdic zero(long p, int precision);

    long p() const { return p_; }
    int precision() const { return precision_; }
    bool is_zero() const { return zero_; }

    // Valuation and unit part; both reject exact zero.
    long valuation() const;
    const mpz_class& unit() const;

    // Unit part reduced mod p, in [1, p).
    long unit_residue() const;

    PAdic operator+(const PAdic& rhs) const;
    PAdic operator-(const PAdic& rhs) const;
    PAdic operator*(const PAdic& rhs) const;
    PAdic operator/(const PAdic& rhs) const;
    PAdic operator-() const;

    PAdic pow(long k) const;

    // Same stored data, digit for digit.
    bool identical_to(const PAdic& rhs) const;

    bool has_exact_value() const { return has_witness_; }
    const mpq_class& exact_value() const;

    // "p^l * u (mod p^(l+N))" rendering for diagnostics.
    std::string to_string() const;

  private:
    PAdic(long p, int precision) : p_(p), precision_(precision), zero_(true), valuation_(0), unit_(0) {}

    mpz_class precision_modulus() const;

    long p_;
    int precision_;
    bool zero_;
    long valuation_;
    mpz_class unit_;
    bool has_witness_ = false;
    mpq_class witness_;
};

// Spec-level operation names.
inline long valuation(const PAdic& a) { return a.valuation(); }
inline long unit_residue(const PAdic& a) { return a.unit_residue(); }

// True iff the unit residues agree, i.e. the unit ratio lies in 1 + pZ_p.
bool unit_class_equal(const PAdic& a, const PAdic& b);

bool is_prime(long n);

} // namespace tbl
