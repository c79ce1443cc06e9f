#pragma once

#include <string>

#include "tbl/finitefield.hpp"
#include "tbl/localfield.hpp"

namespace tbl {

/**
 * An element of Q/Z written as numerator/order, kept gcd-reduced so that
 * equality of invariants is equality in Q/Z.  The zero class is 0/1.
 */
class BrauerInvariant {
  public:
    BrauerInvariant() : num_(0), order_(1) {}
    BrauerInvariant(long num, long order);

    long numerator() const { return num_; }
    long order() const { return order_; }
    bool is_zero() const { return num_ == 0; }

    BrauerInvariant operator+(const BrauerInvariant& rhs) const;
    BrauerInvariant operator-() const;
    bool operator==(const BrauerInvariant& rhs) const {
        return num_ == rhs.num_ && order_ == rhs.order_;
    }
    bool operator!=(const BrauerInvariant& rhs) const { return !(*this == rhs); }

    // The class in Z/n of an invariant of order dividing n.
    long numerator_mod(long n) const;

    std::string to_string() const; // "0", "1/2", "2/7", ...

  private:
    long num_;
    long order_;
};

// Residue of (-1)^(v(a)v(b)) a^v(b) b^(-v(a)) in F_p^*, returned in [1, p).
long tame_symbol(const PAdic& a, const PAdic& b);

// Quadratic Hilbert symbol for odd p via the tame formula: 0 if the tame
// value is a square mod p, else 1/2.
BrauerInvariant hilbert_symbol(const PAdic& a, const PAdic& b);

// inv of the cyclic algebra N_n({a, b}): Kummer index of the tame value
// inside F_p(zeta_n), divided by n.  Coincides with hilbert_symbol at n = 2.
BrauerInvariant norm_residue_invariant(const PAdic& a, const PAdic& b, long n);

// Value in Z/n of the unramified character attached to t in F_p^*, computed
// as the Kummer index of t inside F_p(zeta_n) (corestriction normalization:
// the transfer sends Frob_F to Frob_F').
long residue_character_index(long t, long n, long p);

} // namespace tbl
