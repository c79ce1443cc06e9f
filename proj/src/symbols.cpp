#include "tbl/symbols.hpp"

#include <numeric>
#include <sstream>

namespace tbl {

namespace {

long mod_pow(long base, long exp, long m) {
    base %= m;
    if (base < 0) base += m;
    long r = 1;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>((static_cast<__int128>(r) * base) % m);
        base = static_cast<long>((static_cast<__int128>(base) * base) % m);
        exp >>= 1;
    }
    return r;
}

// u^e mod p with e allowed negative.
long signed_pow_mod(long u, long e, long p) {
    long er = e % (p - 1);
    if (er < 0) er += p - 1;
    return mod_pow(u, er, p);
}

} // namespace

BrauerInvariant::BrauerInvariant(long num, long order) {
    if (order < 1) fail(ErrorCode::ValidationError, "invariant order must be >= 1");
    num %= order;
    if (num < 0) num += order;
    if (num == 0) {
        num_ = 0;
        order_ = 1;
        return;
    }
    long g = std::gcd(num, order);
    num_ = num / g;
    order_ = order / g;
}

BrauerInvariant BrauerInvariant::operator+(const BrauerInvariant& rhs) const {
    long l = std::lcm(order_, rhs.order_);
    return BrauerInvariant(num_ * (l / order_) + rhs.num_ * (l / rhs.order_), l);
}

BrauerInvariant BrauerInvariant::operator-() const {
    return BrauerInvariant(order_ - num_, order_);
}

long BrauerInvariant::numerator_mod(long n) const {
    if (n % order_ != 0)
        fail(ErrorCode::ValidationError, "invariant order does not divide " + std::to_string(n));
    return (num_ * (n / order_)) % n;
}

std::string BrauerInvariant::to_string() const {
    if (num_ == 0) return "0";
    std::ostringstream os;
    os << num_ << "/" << order_;
    return os.str();
}

long tame_symbol(const PAdic& a, const PAdic& b) {
    if (a.is_zero() || b.is_zero()) fail(ErrorCode::ExactZero, "tame symbol of exact zero");
    long p = a.p();
    long va = a.valuation();
    long vb = b.valuation();
    long ra = a.unit_residue();
    long rb = b.unit_residue();
    long t = signed_pow_mod(ra, vb, p);
    t = static_cast<long>((static_cast<__int128>(t) * signed_pow_mod(rb, -va, p)) % p);
    if ((va % 2 != 0) && (vb % 2 != 0)) t = (p - t) % p;
    if (t == 0) fail(ErrorCode::Internal, "tame symbol landed on zero");
    return t;
}

BrauerInvariant hilbert_symbol(const PAdic& a, const PAdic& b) {
    long p = a.p();
    if (p == 2) fail(ErrorCode::EvenP, "quadratic Hilbert symbol requires odd p");
    long t = tame_symbol(a, b);
    bool square = mod_pow(t, (p - 1) / 2, p) == 1;
    return BrauerInvariant(square ? 0 : 1, 2);
}

BrauerInvariant norm_residue_invariant(const PAdic& a, const PAdic& b, long n) {
    long p = a.p();
    if (n < 1) fail(ErrorCode::ValidationError, "n must be positive");
    if (std::gcd(n, p) != 1) fail(ErrorCode::PDividesN, "p divides n");
    if (n == 1) return BrauerInvariant();
    long t = tame_symbol(a, b);
    return BrauerInvariant(residue_character_index(t, n, p), n);
}

long residue_character_index(long t, long n, long p) {
    if (std::gcd(n, p) != 1) fail(ErrorCode::PDividesN, "p divides n");
    long tr = t % p;
    if (tr < 0) tr += p;
    if (tr == 0) fail(ErrorCode::ZeroElement, "residue character of zero");
    if (n == 1) return 0;
    FqFieldPtr field = FqField::cyclotomic(p, n);
    return kummer_class_index(field->from_int(tr), n);
}

} // namespace tbl
