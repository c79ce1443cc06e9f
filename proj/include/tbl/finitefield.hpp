#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tbl/errors.hpp"

namespace tbl {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/**
 * An element of F_{p^f}, stored as a coefficient vector of length f over F_p
 * reduced modulo the field's defining polynomial.  Elements carry a shared
 * handle to their field and are immutable values.
 */
class FqElem {
  public:
    FqElem() = default;
    FqElem(FqFieldPtr field, std::vector<uint64_t> coeffs);

    const FqFieldPtr& field() const { return field_; }
    const std::vector<uint64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const FqElem& rhs) const;
    bool operator!=(const FqElem& rhs) const { return !(*this == rhs); }

    FqElem operator+(const FqElem& rhs) const;
    FqElem operator-(const FqElem& rhs) const;
    FqElem operator*(const FqElem& rhs) const;
    FqElem operator/(const FqElem& rhs) const;

    FqElem pow(uint64_t e) const;
    FqElem inverse() const;

    // Position in the deterministic enumeration of the field:
    // sum of coeffs[i] * p^i.
    uint64_t index() const;

    std::string to_string() const;

  private:
    FqFieldPtr field_;
    std::vector<uint64_t> coeffs_;
};

/**
 * F_{p^f} presented as F_p[x]/(modulus), with the modulus chosen as the
 * lexicographically smallest monic irreducible of degree f (coefficients
 * compared low-degree-first).  The deterministic choice makes every value
 * derived from discrete logarithms reproducible across runs.
 */
class FqField : public std::enable_shared_from_this<FqField> {
  public:
    // F_{p^f} with the canonical modulus.
    static FqFieldPtr make(long p, int f);
    // F_p(zeta_n): degree = multiplicative order of p mod n.
    static FqFieldPtr cyclotomic(long p, long n);

    long p() const { return p_; }
    int degree() const { return f_; }
    uint64_t q() const { return q_; }
    // Modulus coefficients c_0..c_f (monic, c_f = 1).
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FqElem zero() const;
    FqElem one() const;
    // Image of an integer under Z -> F_p -> F_{p^f}.
    FqElem from_int(long value) const;
    // Inverse of index(): the k-th element in enumeration order.
    FqElem element(uint64_t index) const;
    // Generator x of the polynomial presentation.
    FqElem gen() const;

    // Exact multiplicative order of a nonzero element.
    uint64_t element_order(const FqElem& t) const;

    std::string to_string() const;

  private:
    FqField(long p, int f, std::vector<uint64_t> modulus);

    long p_;
    int f_;
    uint64_t q_;
    std::vector<uint64_t> modulus_;

    friend class FqElem;
};

// Smallest element of exact multiplicative order n, in enumeration order.
FqElem primitive_nth_root(const FqFieldPtr& field, long n);

// k with zeta^k = t, for t in mu_n; baby-step giant-step.
long dlog_mu_n(const FqElem& t, const FqElem& zeta, long n);

// dlog of t^((q-1)/n) against the session root; 0 iff t is an n-th power.
long kummer_class_index(const FqElem& t, long n);

// Product of the Frobenius conjugates t^(1 + p + ... + p^(f-1)), as an
// element of F_p.
long norm_to_prime_field(const FqElem& t);

// Multiplicative order of p modulo n (smallest f >= 1 with n | p^f - 1).
int multiplicative_order_mod(long p, long n);

} // namespace tbl
