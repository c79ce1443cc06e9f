#include "tbl/localfield.hpp"

#include <sstream>

namespace tbl {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

void check_field_params(long p, int precision) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (precision < 1) fail(ErrorCode::ValidationError, "precision must be >= 1");
}

mpz_class pow_p(long p, long e) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return m;
}

// Largest e with p^e | v, together with v / p^e.
long strip_p(long p, mpz_class& v) {
    long e = 0;
    mpz_class q, r;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        v = q;
        ++e;
    }
    return e;
}

} // namespace

PAdic PAdic::zero(long p, int precision) {
    check_field_params(p, precision);
    PAdic out(p, precision);
    out.has_witness_ = true;
    out.witness_ = 0;
    return out;
}

PAdic PAdic::make(long p, int precision, const mpz_class& value) {
    return make_rational(p, precision, value, 1);
}

PAdic PAdic::make_rational(long p, int precision, const mpz_class& num, const mpz_class& den) {
    check_field_params(p, precision);
    if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        fail(ErrorCode::DenominatorDivisibleByP, "denominator divisible by p");
    PAdic out(p, precision);
    out.has_witness_ = true;
    out.witness_ = mpq_class(num, den);
    out.witness_.canonicalize();
    if (num == 0) return out;

    out.zero_ = false;
    mpz_class n = num;
    out.valuation_ = strip_p(p, n);
    mpz_class mod = out.precision_modulus();
    mpz_class dinv;
    mpz_class d = den;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    out.unit_ = (n * dinv) % mod;
    if (out.unit_ < 0) out.unit_ += mod;
    return out;
}

const mpq_class& PAdic::exact_value() const {
    if (!has_witness_) fail(ErrorCode::Internal, "no exact witness on this value");
    return witness_;
}

mpz_class PAdic::precision_modulus() const {
    return pow_p(p_, precision_);
}

long PAdic::valuation() const {
    if (zero_) fail(ErrorCode::ExactZero, "valuation of exact zero");
    return valuation_;
}

const mpz_class& PAdic::unit() const {
    if (zero_) fail(ErrorCode::ExactZero, "unit part of exact zero");
    return unit_;
}

long PAdic::unit_residue() const {
    if (zero_) fail(ErrorCode::ExactZero, "unit residue of exact zero");
    return mpz_fdiv_ui(unit_.get_mpz_t(), static_cast<unsigned long>(p_));
}

bool unit_class_equal(const PAdic& a, const PAdic& b) {
    return a.unit_residue() == b.unit_residue();
}

PAdic PAdic::operator*(const PAdic& rhs) const {
    if (p_ != rhs.p_) fail(ErrorCode::ValidationError, "mixed primes in arithmetic");
    if (zero_ || rhs.zero_) return PAdic(p_, std::min(precision_, rhs.precision_));
    PAdic out(p_, std::min(precision_, rhs.precision_));
    out.zero_ = false;
    out.valuation_ = valuation_ + rhs.valuation_;
    mpz_class mod = out.precision_modulus();
    out.unit_ = (unit_ * rhs.unit_) % mod;
    return out;
}

PAdic PAdic::operator/(const PAdic& rhs) const {
    if (p_ != rhs.p_) fail(ErrorCode::ValidationError, "mixed primes in arithmetic");
    if (rhs.zero_) fail(ErrorCode::DivisionByZero, "division by exact zero");
    if (zero_) return PAdic(p_, std::min(precision_, rhs.precision_));
    PAdic out(p_, std::min(precision_, rhs.precision_));
    out.zero_ = false;
    out.valuation_ = valuation_ - rhs.valuation_;
    mpz_class mod = out.precision_modulus();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), rhs.unit_.get_mpz_t(), mod.get_mpz_t());
    out.unit_ = (unit_ * inv) % mod;
    return out;
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    PAdic out(p_, precision_);
    out.zero_ = false;
    out.valuation_ = valuation_;
    out.unit_ = precision_modulus() - unit_;
    return out;
}

PAdic PAdic::operator+(const PAdic& rhs) const {
    if (p_ != rhs.p_) fail(ErrorCode::ValidationError, "mixed primes in arithmetic");
    // Exact zero is exact: it costs no digits.
    if (zero_) return rhs;
    if (rhs.zero_) return *this;

    long base = std::min(valuation_, rhs.valuation_);
    long da = valuation_ - base;
    long db = rhs.valuation_ - base;
    // The mantissa at scale p^base is determined modulo p^digits.
    long digits = std::min(da + static_cast<long>(precision_), db + static_cast<long>(rhs.precision_));
    mpz_class mod = pow_p(p_, digits);
    mpz_class s = (unit_ * pow_p(p_, da) + rhs.unit_ * pow_p(p_, db)) % mod;
    if (s == 0)
        fail(ErrorCode::PrecisionExhausted,
             "sum vanishes modulo p^" + std::to_string(digits) + "; valuation undetermined");

    long cancel = strip_p(p_, s);
    PAdic out(p_, static_cast<int>(digits - cancel));
    out.zero_ = false;
    out.valuation_ = base + cancel;
    out.unit_ = s % pow_p(p_, digits - cancel);
    return out;
}

PAdic PAdic::operator-(const PAdic& rhs) const {
    return *this + (-rhs);
}

PAdic PAdic::pow(long k) const {
    if (zero_) {
        if (k <= 0) fail(ErrorCode::DivisionByZero, "0 raised to non-positive power");
        return *this;
    }
    PAdic out(p_, precision_);
    out.zero_ = false;
    out.valuation_ = valuation_ * k;
    mpz_class mod = precision_modulus();
    mpz_class e(k < 0 ? -k : k);
    mpz_powm(out.unit_.get_mpz_t(), unit_.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    if (k < 0) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), out.unit_.get_mpz_t(), mod.get_mpz_t());
        out.unit_ = inv;
    }
    return out;
}

bool PAdic::identical_to(const PAdic& rhs) const {
    if (p_ != rhs.p_ || zero_ != rhs.zero_) return false;
    if (zero_) return true;
    return valuation_ == rhs.valuation_ && precision_ == rhs.precision_ && unit_ == rhs.unit_;
}

std::string PAdic::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "0 (exact)";
        return os.str();
    }
    os << p_ << "^" << valuation_ << " * " << unit_.get_str() << " [" << precision_ << " digits]";
    return os.str();
}

} // namespace tbl
