#include "tbl/finitefield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tbl/localfield.hpp"

namespace tbl {

namespace {

using Poly = std::vector<uint64_t>; // coefficients over F_p, low degree first

int deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, long p) {
    int f = static_cast<int>(modulus.size()) - 1;
    std::vector<unsigned __int128> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    Poly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint64_t>(acc[i] % static_cast<uint64_t>(p));
    // reduce by the monic modulus
    for (int i = static_cast<int>(r.size()) - 1; i >= f; --i) {
        uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (int j = 0; j < f; ++j) {
            uint64_t sub = (c * modulus[j]) % static_cast<uint64_t>(p);
            r[i - f + j] = (r[i - f + j] + static_cast<uint64_t>(p) - sub) % static_cast<uint64_t>(p);
        }
    }
    r.resize(f);
    return r;
}

Poly pow_mod(Poly base, uint64_t e, const Poly& modulus, long p) {
    int f = static_cast<int>(modulus.size()) - 1;
    Poly result(f, 0);
    result[0] = 1;
    base.resize(std::max<size_t>(base.size(), f));
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, modulus, p);
        base = mul_mod(base, base, modulus, p);
        e >>= 1;
    }
    return result;
}

bool is_x_poly(const Poly& a) {
    if (deg(a) != 1) return false;
    return a[0] == 0 && a[1] == 1;
}

// Irreducibility over F_p: x^(p^f) == x and x^(p^(f/l)) != x for prime l | f.
bool is_irreducible(const Poly& modulus, long p) {
    int f = static_cast<int>(modulus.size()) - 1;
    Poly x(f, 0);
    if (f == 1) {
        // linear: always irreducible
        return true;
    }
    x[1] = 1;

    auto frob_power = [&](int k) {
        // x^(p^k) mod modulus
        Poly t = x;
        for (int i = 0; i < k; ++i) t = pow_mod(t, static_cast<uint64_t>(p), modulus, p);
        return t;
    };

    Poly xf = frob_power(f);
    trim(xf);
    if (!is_x_poly(xf)) return false;
    for (int l = 2; l <= f; ++l) {
        if (f % l != 0) continue;
        bool l_prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { l_prime = false; break; }
        if (!l_prime) continue;
        Poly xl = frob_power(f / l);
        trim(xl);
        if (is_x_poly(xl)) return false;
    }
    return true;
}

uint64_t pow_u64(long p, int f) {
    uint64_t q = 1;
    for (int i = 0; i < f; ++i) q *= static_cast<uint64_t>(p);
    return q;
}

} // namespace

int multiplicative_order_mod(long p, long n) {
    if (n <= 0) fail(ErrorCode::ValidationError, "n must be positive");
    if (n == 1) return 1;
    if (std::gcd(p, n) != 1) fail(ErrorCode::PDividesN, "p and n are not coprime");
    long r = p % n;
    int f = 1;
    long acc = r;
    while (acc != 1 % n) {
        acc = (acc * r) % n;
        ++f;
        if (f > n) fail(ErrorCode::Internal, "order computation overran n");
    }
    return f;
}

FqField::FqField(long p, int f, std::vector<uint64_t> modulus)
    : p_(p), f_(f), q_(pow_u64(p, f)), modulus_(std::move(modulus)) {}

FqFieldPtr FqField::make(long p, int f) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (f < 1) fail(ErrorCode::ValidationError, "extension degree must be >= 1");
    double bits = f * std::log2(static_cast<double>(p));
    if (bits > 48) fail(ErrorCode::ValidationError, "field size p^f exceeds the supported 2^48 bound");

    // Search low-degree-first lexicographic order: c_0 is the most
    // significant coordinate of the comparison.
    std::vector<uint64_t> c(f, 0);
    for (;;) {
        Poly modulus(c.begin(), c.end());
        modulus.push_back(1);
        if (is_irreducible(modulus, p))
            return FqFieldPtr(new FqField(p, f, std::move(modulus)));
        int i = f - 1;
        while (i >= 0) {
            if (++c[i] < static_cast<uint64_t>(p)) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) fail(ErrorCode::Internal, "no irreducible polynomial found");
    }
}

FqFieldPtr FqField::cyclotomic(long p, long n) {
    if (n < 1) fail(ErrorCode::ValidationError, "n must be positive");
    if (std::gcd(p, n) != 1) fail(ErrorCode::PDividesN, "p divides n");
    static std::mutex cache_mutex;
    static std::map<std::pair<long, int>, FqFieldPtr> cache;
    int f = multiplicative_order_mod(p, n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(p, f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FqFieldPtr field = make(p, f);
    cache.emplace(key, field);
    return field;
}

FqElem FqField::zero() const {
    return FqElem(shared_from_this(), std::vector<uint64_t>(f_, 0));
}

FqElem FqField::one() const {
    return from_int(1);
}

FqElem FqField::from_int(long value) const {
    std::vector<uint64_t> c(f_, 0);
    long r = value % p_;
    if (r < 0) r += p_;
    c[0] = static_cast<uint64_t>(r);
    return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::element(uint64_t index) const {
    if (index >= q_) fail(ErrorCode::ValidationError, "element index out of range");
    std::vector<uint64_t> c(f_, 0);
    for (int i = 0; i < f_; ++i) {
        c[i] = index % static_cast<uint64_t>(p_);
        index /= static_cast<uint64_t>(p_);
    }
    return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::gen() const {
    if (f_ == 1) return from_int(1);
    return element(static_cast<uint64_t>(p_));
}

uint64_t FqField::element_order(const FqElem& t) const {
    if (t.is_zero()) fail(ErrorCode::ZeroElement, "order of zero");
    uint64_t m = q_ - 1;
    std::vector<uint64_t> primes;
    uint64_t rest = m;
    for (uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            primes.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) primes.push_back(rest);
    uint64_t order = m;
    for (uint64_t d : primes)
        while (order % d == 0 && t.pow(order / d) == one()) order /= d;
    return order;
}

std::string FqField::to_string() const {
    std::ostringstream os;
    os << "F_" << q_ << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (int i = f_; i >= 0; --i) {
        if (modulus_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || modulus_[i] != 1) os << modulus_[i];
        if (i >= 1) {
            if (modulus_[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    return os.str();
}

FqElem::FqElem(FqFieldPtr field, std::vector<uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_->degree())
        fail(ErrorCode::Internal, "coefficient vector has wrong length");
}

bool FqElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint64_t c) { return c == 0; });
}

bool FqElem::operator==(const FqElem& rhs) const {
    return field_->q() == rhs.field_->q() && field_->p() == rhs.field_->p() && coeffs_ == rhs.coeffs_;
}

FqElem FqElem::operator+(const FqElem& rhs) const {
    uint64_t p = static_cast<uint64_t>(field_->p());
    std::vector<uint64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + rhs.coeffs_[i]) % p;
    return FqElem(field_, std::move(c));
}

FqElem FqElem::operator-(const FqElem& rhs) const {
    uint64_t p = static_cast<uint64_t>(field_->p());
    std::vector<uint64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + p - rhs.coeffs_[i]) % p;
    return FqElem(field_, std::move(c));
}

FqElem FqElem::operator*(const FqElem& rhs) const {
    return FqElem(field_, mul_mod(coeffs_, rhs.coeffs_, field_->modulus(), field_->p()));
}

FqElem FqElem::operator/(const FqElem& rhs) const {
    return *this * rhs.inverse();
}

FqElem FqElem::pow(uint64_t e) const {
    return FqElem(field_, pow_mod(coeffs_, e, field_->modulus(), field_->p()));
}

FqElem FqElem::inverse() const {
    if (is_zero()) fail(ErrorCode::ZeroElement, "inverse of zero");
    return pow(field_->q() - 2);
}

uint64_t FqElem::index() const {
    uint64_t e = 0;
    uint64_t base = 1;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        e += coeffs_[i] * base;
        base *= static_cast<uint64_t>(field_->p());
    }
    return e;
}

std::string FqElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
        if (i >= 1) {
            if (coeffs_[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

FqElem primitive_nth_root(const FqFieldPtr& field, long n) {
    if (n < 1) fail(ErrorCode::NoSuchRoot, "n must be positive");
    uint64_t m = field->q() - 1;
    if (m % static_cast<uint64_t>(n) != 0)
        fail(ErrorCode::NoSuchRoot, "n does not divide q - 1");
    if (n == 1) return field->one();

    // The choice is deterministic, so caching by (q, n) is safe.
    static std::mutex cache_mutex;
    static std::map<std::pair<uint64_t, long>, uint64_t> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({field->q(), n});
        if (it != cache.end()) return field->element(it->second);
    }

    std::vector<long> prime_divisors;
    long rest = n;
    for (long d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            prime_divisors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) prime_divisors.push_back(rest);

    auto has_exact_order_n = [&](const FqElem& t) {
        if (t.pow(static_cast<uint64_t>(n)) != field->one()) return false;
        for (long l : prime_divisors)
            if (t.pow(static_cast<uint64_t>(n / l)) == field->one()) return false;
        return true;
    };

    // Find one exact-order-n element via (q-1)/n powers, then minimize over
    // the phi(n) elements of that order.
    FqElem z = field->one();
    bool found = false;
    for (uint64_t idx = 2; idx < field->q(); ++idx) {
        FqElem s = field->element(idx).pow(m / static_cast<uint64_t>(n));
        if (has_exact_order_n(s)) {
            z = s;
            found = true;
            break;
        }
    }
    if (!found) fail(ErrorCode::Internal, "no element of exact order n found");

    FqElem best = z;
    FqElem cur = z;
    for (long k = 2; k < n; ++k) {
        cur = cur * z;
        if (std::gcd(k, n) != 1) continue;
        if (cur.index() < best.index()) best = cur;
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::make_pair(field->q(), n), best.index());
    }
    return best;
}

long dlog_mu_n(const FqElem& t, const FqElem& zeta, long n) {
    const FqFieldPtr& field = t.field();
    if (t.pow(static_cast<uint64_t>(n)) != field->one())
        fail(ErrorCode::NotInMuN, "element is not an n-th root of unity");
    if (n == 1) return 0;

    long m = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::unordered_map<uint64_t, long> baby;
    // baby steps: t * zeta^(-j)
    FqElem zinv = zeta.inverse();
    FqElem cur = t;
    for (long j = 0; j < m; ++j) {
        baby.emplace(cur.index(), j);
        cur = cur * zinv;
    }
    FqElem giant_step = zeta.pow(static_cast<uint64_t>(m));
    FqElem g = field->one();
    for (long i = 0; i * m <= n; ++i) {
        auto it = baby.find(g.index());
        if (it != baby.end()) {
            long k = (i * m + it->second) % n;
            return k;
        }
        g = g * giant_step;
    }
    fail(ErrorCode::NotInMuN, "discrete log not found in mu_n");
}

long kummer_class_index(const FqElem& t, long n) {
    if (t.is_zero()) fail(ErrorCode::ZeroElement, "Kummer class of zero");
    const FqFieldPtr& field = t.field();
    uint64_t m = field->q() - 1;
    if (n < 1 || m % static_cast<uint64_t>(n) != 0)
        fail(ErrorCode::NoSuchRoot, "n does not divide q - 1");
    if (n == 1) return 0;
    FqElem s = t.pow(m / static_cast<uint64_t>(n));
    FqElem zeta = primitive_nth_root(field, n);
    return dlog_mu_n(s, zeta, n);
}

long norm_to_prime_field(const FqElem& t) {
    const FqFieldPtr& field = t.field();
    if (t.is_zero()) return 0;
    uint64_t e = (field->q() - 1) / (static_cast<uint64_t>(field->p()) - 1);
    FqElem nrm = t.pow(e);
    for (size_t i = 1; i < nrm.coeffs().size(); ++i)
        if (nrm.coeffs()[i] != 0) fail(ErrorCode::Internal, "norm left the prime field");
    return static_cast<long>(nrm.coeffs()[0]);
}

} // namespace tbl
