#include "tbl/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tbl {

Poly Poly::constant(int dim, const mpz_class& c) {
    Poly f(dim);
    if (c != 0) f.terms_.emplace(Exponents(dim, 0), c);
    return f;
}

Poly Poly::variable(int dim, int index) {
    if (index < 0 || index >= dim) fail(ErrorCode::ValidationError, "variable index out of range");
    Poly f(dim);
    Exponents e(dim, 0);
    e[index] = 1;
    f.terms_.emplace(std::move(e), 1);
    return f;
}

void Poly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(dim_, 0);
}

const mpz_class& Poly::constant_value() const {
    static const mpz_class zero_value(0);
    if (terms_.empty()) return zero_value;
    if (!is_constant()) fail(ErrorCode::Internal, "constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    Poly out(dim_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponents e(dim_);
            for (int i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly out = constant(dim_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

Poly Poly::derivative(int var) const {
    Poly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * static_cast<long>(e[var]));
    }
    return out;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::optional<Poly> Poly::exact_divide(const Poly& rhs) const {
    if (rhs.is_zero()) return std::nullopt;
    Poly rem = *this;
    Poly quot(dim_);
    while (!rem.is_zero()) {
        // leading terms in the map's lexicographic term order
        auto lead_r = std::prev(rem.terms_.end());
        auto lead_d = std::prev(rhs.terms_.end());
        Exponents e(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (lead_r->first[i] < lead_d->first[i]) return std::nullopt;
            e[i] = lead_r->first[i] - lead_d->first[i];
        }
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead_r->second.get_mpz_t(), lead_d->second.get_mpz_t());
        if (r != 0) return std::nullopt;
        Poly term(dim_);
        term.terms_.emplace(e, q);
        quot = quot + term;
        rem = rem - term * rhs;
    }
    return quot;
}

PAdic Poly::eval(const std::vector<PAdic>& point, long p, int precision) const {
    if (static_cast<int>(point.size()) != dim_)
        fail(ErrorCode::ValidationError, "point dimension mismatch");

    // Exactly known coordinates: evaluate in Q and truncate once, so that a
    // point landing on a hypersurface gives exact zero rather than a
    // cancellation error.
    bool all_exact = std::all_of(point.begin(), point.end(), [](const PAdic& c) {
        return c.is_zero() || c.has_exact_value();
    });
    if (all_exact) {
        mpq_class acc = 0;
        for (const auto& [e, c] : terms_) {
            mpq_class term(c);
            for (int i = 0; i < dim_; ++i) {
                if (e[i] == 0) continue;
                mpq_class base = point[i].is_zero() && !point[i].has_exact_value()
                                     ? mpq_class(0)
                                     : point[i].exact_value();
                for (unsigned k = 0; k < e[i]; ++k) term *= base;
            }
            acc += term;
        }
        acc.canonicalize();
        return PAdic::make_rational(p, precision, acc.get_num(), acc.get_den());
    }

    PAdic acc = PAdic::zero(p, precision);
    for (const auto& [e, c] : terms_) {
        PAdic term = PAdic::make(p, precision, c);
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            term = term * point[i].pow(static_cast<long>(e[i]));
        }
        acc = acc + term;
    }
    return acc;
}

long Poly::eval_mod_p(const std::vector<long>& point, long p) const {
    if (static_cast<int>(point.size()) != dim_)
        fail(ErrorCode::ValidationError, "point dimension mismatch");
    long acc = 0;
    for (const auto& [e, c] : terms_) {
        long t = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
        for (int i = 0; i < dim_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k)
                t = static_cast<long>((static_cast<__int128>(t) * ((point[i] % p + p) % p)) % p);
        }
        acc = (acc + t) % p;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (a != 1 || !has_var) os << a.get_str();
        bool printed = false;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (a != 1 || printed) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser for the scenario polynomial syntax.
class InfixParser {
  public:
    InfixParser(const std::string& text, int dim) : text_(text), dim_(dim) {}

    Poly parse() {
        Poly f = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(ErrorCode::ParseError, "trailing input in polynomial: '" + text_.substr(pos_) + "'");
        return f;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly f = term();
        for (;;) {
            if (eat('+')) f = f + term();
            else if (eat('-')) f = f - term();
            else return f;
        }
    }

    Poly term() {
        Poly f = factor();
        while (eat('*')) f = f * factor();
        return f;
    }

    Poly factor() {
        Poly f = base();
        if (eat('^')) {
            skip_ws();
            unsigned k = read_uint();
            f = f.pow(k);
        }
        return f;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail(ErrorCode::ParseError, "unexpected end of polynomial");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly f = expr();
            if (!eat(')')) fail(ErrorCode::ParseError, "missing ')' in polynomial");
            return f;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v(read_digits());
            return Poly::constant(dim_, v);
        }
        if (c == 'x') {
            ++pos_;
            unsigned idx = read_uint();
            if (idx < 1 || static_cast<int>(idx) > dim_)
                fail(ErrorCode::ParseError, "variable x" + std::to_string(idx) + " out of range for dim " +
                                                std::to_string(dim_));
            return Poly::variable(dim_, static_cast<int>(idx) - 1);
        }
        fail(ErrorCode::ParseError, std::string("unexpected character '") + c + "' in polynomial");
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(ErrorCode::ParseError, "expected digits in polynomial");
        return text_.substr(start, pos_ - start);
    }

    unsigned read_uint() {
        return static_cast<unsigned>(std::stoul(read_digits()));
    }

    const std::string& text_;
    int dim_;
    size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(const std::string& text, int dim) {
    return InfixParser(text, dim).parse();
}

std::vector<long> reduce_mod_p(const Poly& f, long p) {
    if (f.dim() != 1) fail(ErrorCode::ValidationError, "univariate reduction of multivariate polynomial");
    std::vector<long> out;
    for (const auto& [e, c] : f.terms()) {
        size_t d = e[0];
        if (out.size() <= d) out.resize(d + 1, 0);
        out[d] = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

namespace {

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& b, long p) {
    auto inv = [&](long x) {
        long r = 1, base = ((x % p) + p) % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    };
    long binv = inv(b.back());
    while (a.size() >= b.size()) {
        long coef = (a.back() * binv) % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - coef * b[i]) % p + p) % p;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace

bool squarefree_mod_p(const Poly& f, long p) {
    std::vector<long> a = reduce_mod_p(f, p);
    std::vector<long> b = reduce_mod_p(f.derivative(0), p);
    if (a.empty()) return false;
    if (a.size() == 1) return true; // nonzero constant
    if (b.empty()) return false;    // derivative vanished mod p
    // gcd over F_p
    while (!b.empty()) {
        std::vector<long> r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a.size() == 1;
}

} // namespace tbl
