#include "tbl/brauer_eval.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace tbl {

ClassExpr ClassExpr::quaternion(Poly f, Poly g) {
    return ClassExpr(Quaternion{std::move(f), std::move(g)});
}

ClassExpr ClassExpr::cyclic(Poly f, Poly g, long n) {
    if (n < 1) fail(ErrorCode::ValidationError, "cyclic order must be >= 1");
    return ClassExpr(Cyclic{std::move(f), std::move(g), n});
}

ClassExpr ClassExpr::cup_unram(Poly f, long n, long k) {
    if (n < 1) fail(ErrorCode::ValidationError, "character order must be >= 1");
    k %= n;
    if (k < 0) k += n;
    return ClassExpr(CupUnram{std::move(f), n, k});
}

ClassExpr ClassExpr::constant(BrauerInvariant value) {
    return ClassExpr(Constant{value});
}

ClassExpr ClassExpr::product(std::vector<ClassExpr> parts) {
    return ClassExpr(Product{std::move(parts)});
}

long ClassExpr::order() const {
    return std::visit(
        [](const auto& node) -> long {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Quaternion>) {
                return 2;
            } else if constexpr (std::is_same_v<T, Cyclic>) {
                return node.n;
            } else if constexpr (std::is_same_v<T, CupUnram>) {
                return node.n;
            } else if constexpr (std::is_same_v<T, Constant>) {
                return node.value.order();
            } else {
                long l = 1;
                for (const ClassExpr& part : node.parts) l = std::lcm(l, part.order());
                return l;
            }
        },
        node());
}

std::string ClassExpr::to_string() const {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, Quaternion>) {
                os << "quat(" << node.f.to_string() << ", " << node.g.to_string() << ")";
            } else if constexpr (std::is_same_v<T, Cyclic>) {
                os << "cyclic(" << node.f.to_string() << ", " << node.g.to_string() << ", " << node.n
                   << ")";
            } else if constexpr (std::is_same_v<T, CupUnram>) {
                os << "cup-unram(" << node.f.to_string() << ", " << node.n << ", " << node.k << ")";
            } else if constexpr (std::is_same_v<T, Constant>) {
                os << "const(" << node.value.to_string() << ")";
            } else {
                os << "prod(";
                for (size_t i = 0; i < node.parts.size(); ++i) {
                    if (i) os << ", ";
                    os << node.parts[i].to_string();
                }
                os << ")";
            }
            return os.str();
        },
        node());
}

BoundaryFactorization factor_over_boundary(const Poly& f, const SchemeModel& model) {
    if (f.is_zero()) fail(ErrorCode::NonFactorable, "zero is not invertible on U");
    BoundaryFactorization bf;
    bf.horizontal.assign(model.horizontal().size(), 0);
    Poly g = f;
    for (size_t i = 0; i < model.horizontal().size(); ++i) {
        for (;;) {
            auto q = g.exact_divide(model.horizontal()[i]);
            if (!q) break;
            g = *q;
            ++bf.horizontal[i];
        }
    }
    if (!g.is_constant())
        fail(ErrorCode::NonFactorable,
             f.to_string() + " is not supported on the boundary divisor (remainder " + g.to_string() +
                 ")");
    mpz_class c = g.constant_value();
    while (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(model.p()))) {
        c /= model.p();
        ++bf.p_exp;
    }
    bf.unit = c;
    if (bf.p_exp > 0 && !model.include_vertical())
        fail(ErrorCode::NonFactorable,
             f.to_string() + " vanishes along V(p), which is not a boundary component of this model");
    return bf;
}

namespace {

void validate_entry(const Poly& f, const SchemeModel& model) {
    factor_over_boundary(f, model);
}

} // namespace

void validate_for_model(const ClassExpr& expr, const SchemeModel& model) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ClassExpr::Quaternion>) {
                validate_entry(node.f, model);
                validate_entry(node.g, model);
            } else if constexpr (std::is_same_v<T, ClassExpr::Cyclic>) {
                if (std::gcd(node.n, model.p()) != 1)
                    fail(ErrorCode::PDividesN, "cyclic order shares a factor with p");
                validate_entry(node.f, model);
                validate_entry(node.g, model);
            } else if constexpr (std::is_same_v<T, ClassExpr::CupUnram>) {
                if (std::gcd(node.n, model.p()) != 1)
                    fail(ErrorCode::PDividesN, "character order shares a factor with p");
                validate_entry(node.f, model);
            } else if constexpr (std::is_same_v<T, ClassExpr::Constant>) {
                if (std::gcd(node.value.order(), model.p()) != 1)
                    fail(ErrorCode::PDividesN, "constant class order shares a factor with p");
            } else {
                for (const ClassExpr& part : node.parts) validate_for_model(part, model);
            }
        },
        expr.node());
}

BrauerInvariant evaluate(const ClassExpr& expr, const SchemeModel& model, const OPoint& x) {
    validate_for_model(expr, model);
    return std::visit(
        [&](const auto& node) -> BrauerInvariant {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ClassExpr::Quaternion>) {
                return hilbert_symbol(eval_poly(node.f, x), eval_poly(node.g, x));
            } else if constexpr (std::is_same_v<T, ClassExpr::Cyclic>) {
                return norm_residue_invariant(eval_poly(node.f, x), eval_poly(node.g, x), node.n);
            } else if constexpr (std::is_same_v<T, ClassExpr::CupUnram>) {
                PAdic value = eval_poly(node.f, x);
                if (value.is_zero()) fail(ErrorCode::ExactZero, "cup entry vanishes at the point");
                long v = value.valuation();
                long num = ((node.k * (v % node.n)) % node.n + node.n) % node.n;
                return BrauerInvariant(num, node.n);
            } else if constexpr (std::is_same_v<T, ClassExpr::Constant>) {
                return node.value;
            } else {
                BrauerInvariant acc;
                for (const ClassExpr& part : node.parts) acc = acc + evaluate(part, model, x);
                return acc;
            }
        },
        expr.node());
}

namespace {

ResidueDescriptor make_descriptor(const SchemeModel& model, int component, long n,
                                  const BoundaryFactorization& bf_f, const BoundaryFactorization& bf_g,
                                  const mpz_class& wf, const mpz_class& wg) {
    int h = static_cast<int>(model.horizontal().size());
    bool vertical = model.is_vertical(component);
    long a = vertical ? bf_f.p_exp : bf_f.horizontal[component];
    long b = vertical ? bf_g.p_exp : bf_g.horizontal[component];

    ResidueDescriptor rd;
    rd.component = component;
    rd.n = n;
    rd.a = a;
    rd.b = b;
    rd.p = model.p();
    rd.sign = (a % 2 != 0 && b % 2 != 0) ? -1 : 1;

    // (-1)^{ab} f^b g^{-a} with the component's own factor cancelled:
    // unit part w_f^b / w_g^a, p-part p^(e_f b - e_g a), and f_j^(a_j b - b_j a)
    // for the other components.
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), wf.get_mpz_t(), static_cast<unsigned long>(b));
    mpz_pow_ui(den.get_mpz_t(), wg.get_mpz_t(), static_cast<unsigned long>(a));
    if (num < 0) { num = -num; rd.sign = -rd.sign; }
    if (den < 0) { den = -den; rd.sign = -rd.sign; }
    rd.unit_num = num;
    rd.unit_den = den;
    rd.p_exp = vertical ? 0 : bf_f.p_exp * b - bf_g.p_exp * a;
    for (int j = 0; j < h; ++j) {
        if (j == component) continue;
        long e = bf_f.horizontal[j] * b - bf_g.horizontal[j] * a;
        if (e != 0) rd.factors.emplace_back(model.horizontal()[j], e);
    }
    return rd;
}

std::vector<ResidueDescriptor> symbol_residues(const Poly& f, const Poly& g, long n,
                                               const SchemeModel& model) {
    BoundaryFactorization bf = factor_over_boundary(f, model);
    BoundaryFactorization bg = factor_over_boundary(g, model);
    std::vector<ResidueDescriptor> out;
    for (int i = 0; i < model.component_count(); ++i) {
        bool vertical = model.is_vertical(i);
        long a = vertical ? bf.p_exp : bf.horizontal[i];
        long b = vertical ? bg.p_exp : bg.horizontal[i];
        if (a == 0 && b == 0) continue;
        out.push_back(make_descriptor(model, i, n, bf, bg, bf.unit, bg.unit));
    }
    return out;
}

} // namespace

std::vector<ResidueDescriptor> residues(const ClassExpr& expr, const SchemeModel& model) {
    return std::visit(
        [&](const auto& node) -> std::vector<ResidueDescriptor> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ClassExpr::Quaternion>) {
                return symbol_residues(node.f, node.g, 2, model);
            } else if constexpr (std::is_same_v<T, ClassExpr::Cyclic>) {
                return symbol_residues(node.f, node.g, node.n, model);
            } else {
                fail(ErrorCode::ValidationError,
                     "residue descriptors are defined for quaternion and cyclic classes");
            }
        },
        expr.node());
}

std::string ResidueDescriptor::function_string() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    os << unit_num.get_str();
    if (unit_den != 1) os << "/" << unit_den.get_str();
    if (p_exp != 0) os << " * " << p << "^" << p_exp;
    for (const auto& [poly, e] : factors) os << " * (" << poly.to_string() << ")^" << e;
    return os.str();
}

long pullback_residue(const ResidueDescriptor& rd, const IntersectionData& data) {
    long p = rd.p;
    if (rd.p_exp > 0)
        fail(ErrorCode::ResidueFunctionVanishes,
             "residue function " + rd.function_string() + " vanishes at the reduction point");
    if (rd.p_exp < 0)
        fail(ErrorCode::ResidueFunctionVanishes,
             "residue function " + rd.function_string() + " is undefined at the reduction point");

    auto mod_pow_signed = [&](long base, long e) {
        long er = e % (p - 1);
        if (er < 0) er += p - 1;
        long r = 1;
        long bb = ((base % p) + p) % p;
        while (er > 0) {
            if (er & 1) r = (r * bb) % p;
            bb = (bb * bb) % p;
            er >>= 1;
        }
        return r;
    };

    long num = static_cast<long>(mpz_fdiv_ui(rd.unit_num.get_mpz_t(), static_cast<unsigned long>(p)));
    long den = static_cast<long>(mpz_fdiv_ui(rd.unit_den.get_mpz_t(), static_cast<unsigned long>(p)));
    if (num == 0 || den == 0)
        fail(ErrorCode::Internal, "unit part of residue function divisible by p");
    long value = (num * mod_pow_signed(den, -1)) % p;
    for (const auto& [poly, e] : rd.factors) {
        long fv = poly.eval_mod_p(data.reduction, p);
        if (fv == 0)
            fail(ErrorCode::ResidueFunctionVanishes,
                 "residue function " + rd.function_string() +
                     (e > 0 ? " vanishes" : " is undefined") + " at the reduction point");
        value = (value * mod_pow_signed(fv, e)) % p;
    }
    if (rd.sign < 0) value = (p - value) % p;
    return residue_character_index(value, rd.n, p);
}

Diagram4Report check_diagram_4(const ClassExpr& expr, const SchemeModel& model, const OPoint& x) {
    validate_for_model(expr, model);
    long p = model.p();
    long n = expr.order();
    if (std::gcd(n, p) != 1) fail(ErrorCode::HypothesisViolated, "gcd(n, p) != 1");
    if (std::gcd(n, p - 1) != 1) fail(ErrorCode::HypothesisViolated, "gcd(n, q - 1) != 1");
    if (!model.include_vertical())
        fail(ErrorCode::HypothesisViolated,
             "the boundary must contain the special fiber V(p) for Diagram (4)");

    Diagram4Report report;
    report.n = n;
    report.lhs = evaluate(expr, model, x).numerator_mod(n);

    IntersectionData data = intersection_data(model, x);
    int vertical_index = static_cast<int>(model.horizontal().size());

    long rhs = 0;
    auto add_term = [&](const std::string& label, long term) {
        term %= n;
        if (term < 0) term += n;
        report.contributions.emplace_back(label, term);
        rhs = (rhs + term) % n;
    };

    std::function<void(const ClassExpr&)> walk = [&](const ClassExpr& part) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ClassExpr::Quaternion> ||
                              std::is_same_v<T, ClassExpr::Cyclic>) {
                    long part_n = part.order();
                    long scale = n / part_n;
                    for (const ResidueDescriptor& rd : residues(part, model)) {
                        long m = data.multiplicity[rd.component];
                        if (m == 0) continue;
                        long v = pullback_residue(rd, data);
                        add_term(part.to_string() + " @ " + model.component_label(rd.component),
                                 m * v * scale);
                    }
                } else if constexpr (std::is_same_v<T, ClassExpr::CupUnram>) {
                    long scale = n / node.n;
                    BoundaryFactorization bf = factor_over_boundary(node.f, model);
                    for (int i = 0; i < model.component_count(); ++i) {
                        bool vertical = model.is_vertical(i);
                        long b = vertical ? bf.p_exp : bf.horizontal[i];
                        long m = data.multiplicity[i];
                        if (b == 0 || m == 0) continue;
                        add_term(part.to_string() + " @ " + model.component_label(i),
                                 m * b * node.k * scale);
                    }
                } else if constexpr (std::is_same_v<T, ClassExpr::Constant>) {
                    // pulled back from the base: ramified along V(p) only
                    add_term(part.to_string() + " @ " + model.component_label(vertical_index),
                             data.multiplicity[vertical_index] * node.value.numerator_mod(n));
                } else {
                    for (const ClassExpr& sub : node.parts) walk(sub);
                }
            },
            part.node());
    };
    walk(expr);

    report.rhs = rhs;
    report.equal = report.lhs == report.rhs;
    return report;
}

std::vector<ClassExpr> spanning_classes(const SchemeModel& model, long l_bound) {
    long p = model.p();
    if (p == 2) fail(ErrorCode::ValidationError, "spanning family requires odd p");
    if (l_bound < 0) fail(ErrorCode::ValidationError, "l_bound must be >= 0");

    long n0 = 2 * l_bound + 1;
    while (std::gcd(n0, p) != 1) ++n0;

    // smallest primitive root mod p
    long w = 0;
    for (long c = 2; c < p; ++c) {
        long order = 1;
        long acc = c % p;
        while (acc != 1) {
            acc = (acc * c) % p;
            ++order;
        }
        if (order == p - 1) {
            w = c;
            break;
        }
    }
    if (w == 0) fail(ErrorCode::Internal, "no primitive root found mod p");

    std::vector<ClassExpr> out;
    for (const Poly& f : model.horizontal()) {
        out.push_back(ClassExpr::cup_unram(f, n0, 1));
        // the uniformizer slot reads off the unit residue of f(u)
        out.push_back(ClassExpr::cyclic(f, Poly::constant(model.dim(), p), p - 1));
        out.push_back(ClassExpr::cyclic(f, Poly::constant(model.dim(), w), p - 1));
    }
    return out;
}

Theorem01Report theorem_0_1_check(const SchemeModel& model, const OPoint& x1, const OPoint& x2,
                                  const std::vector<ClassExpr>& classes) {
    Theorem01Report report;
    report.data1 = intersection_data(model, x1);
    report.data2 = intersection_data(model, x2);
    report.strong_equivalent = strong_equiv(report.data1, report.data2);
    for (const ClassExpr& c : classes) {
        Theorem01Entry entry;
        entry.class_name = c.to_string();
        entry.inv1 = evaluate(c, model, x1);
        entry.inv2 = evaluate(c, model, x2);
        entry.equal = entry.inv1 == entry.inv2;
        if (report.strong_equivalent && !entry.equal) ++report.violations;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

// Tokenizer and parser for the class s-expression syntax.
struct SExpr {
    std::string atom;            // nonempty iff leaf
    std::vector<SExpr> children; // used iff atom empty
};

class SExprParser {
  public:
    explicit SExprParser(const std::string& text) : text_(text) {}

    SExpr parse() {
        SExpr e = node();
        skip_ws();
        if (pos_ != text_.size()) fail(ErrorCode::ParseError, "trailing input in class expression");
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    SExpr node() {
        skip_ws();
        if (pos_ >= text_.size()) fail(ErrorCode::ParseError, "unexpected end of class expression");
        if (text_[pos_] == '(') {
            ++pos_;
            SExpr e;
            for (;;) {
                skip_ws();
                if (pos_ >= text_.size()) fail(ErrorCode::ParseError, "missing ')' in class expression");
                if (text_[pos_] == ')') {
                    ++pos_;
                    return e;
                }
                e.children.push_back(node());
            }
        }
        size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            ++pos_;
        if (start == pos_) fail(ErrorCode::ParseError, "empty atom in class expression");
        SExpr e;
        e.atom = text_.substr(start, pos_ - start);
        return e;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

long parse_integer_atom(const SExpr& e, const std::string& what) {
    if (e.atom.empty()) fail(ErrorCode::ParseError, "expected integer for " + what);
    try {
        size_t used = 0;
        long v = std::stol(e.atom, &used);
        if (used != e.atom.size()) fail(ErrorCode::ParseError, "bad integer '" + e.atom + "'");
        return v;
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad integer '" + e.atom + "' for " + what);
    }
}

Poly poly_from_sexpr(const SExpr& e, int dim, long p) {
    if (!e.atom.empty()) {
        const std::string& a = e.atom;
        if (a == "p") return Poly::constant(dim, p);
        if (a[0] == 'x') {
            int idx = 0;
            try {
                idx = std::stoi(a.substr(1));
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "bad variable '" + a + "'");
            }
            if (idx < 1 || idx > dim)
                fail(ErrorCode::ParseError, "variable " + a + " out of range for dim " + std::to_string(dim));
            return Poly::variable(dim, idx - 1);
        }
        return Poly::constant(dim, mpz_class(parse_integer_atom(e, "coefficient")));
    }
    if (e.children.empty()) fail(ErrorCode::ParseError, "empty polynomial expression");
    const std::string& op = e.children[0].atom;
    auto arg = [&](size_t i) { return poly_from_sexpr(e.children[i], dim, p); };
    if (op == "+") {
        Poly f = Poly::constant(dim, 0);
        for (size_t i = 1; i < e.children.size(); ++i) f = f + arg(i);
        return f;
    }
    if (op == "-") {
        if (e.children.size() == 2) return -arg(1);
        if (e.children.size() < 2) fail(ErrorCode::ParseError, "(-) needs arguments");
        Poly f = arg(1);
        for (size_t i = 2; i < e.children.size(); ++i) f = f - arg(i);
        return f;
    }
    if (op == "*") {
        Poly f = Poly::constant(dim, 1);
        for (size_t i = 1; i < e.children.size(); ++i) f = f * arg(i);
        return f;
    }
    if (op == "^") {
        if (e.children.size() != 3) fail(ErrorCode::ParseError, "(^ base exp) needs two arguments");
        long k = parse_integer_atom(e.children[2], "exponent");
        if (k < 0) fail(ErrorCode::ParseError, "negative exponent in polynomial");
        return arg(1).pow(static_cast<unsigned>(k));
    }
    fail(ErrorCode::ParseError, "unknown polynomial operator '" + op + "'");
}

ClassExpr class_from_sexpr(const SExpr& e, int dim, long p) {
    if (!e.atom.empty() || e.children.empty() || e.children[0].atom.empty())
        fail(ErrorCode::ParseError, "class expression must be a list starting with a keyword");
    const std::string& head = e.children[0].atom;
    if (head == "quat") {
        if (e.children.size() != 3) fail(ErrorCode::ParseError, "(quat f g) needs two arguments");
        return ClassExpr::quaternion(poly_from_sexpr(e.children[1], dim, p),
                                     poly_from_sexpr(e.children[2], dim, p));
    }
    if (head == "cyclic") {
        if (e.children.size() != 4) fail(ErrorCode::ParseError, "(cyclic f g n) needs three arguments");
        return ClassExpr::cyclic(poly_from_sexpr(e.children[1], dim, p),
                                 poly_from_sexpr(e.children[2], dim, p),
                                 parse_integer_atom(e.children[3], "n"));
    }
    if (head == "cup-unram") {
        if (e.children.size() != 4)
            fail(ErrorCode::ParseError, "(cup-unram f n k) needs three arguments");
        return ClassExpr::cup_unram(poly_from_sexpr(e.children[1], dim, p),
                                    parse_integer_atom(e.children[2], "n"),
                                    parse_integer_atom(e.children[3], "k"));
    }
    if (head == "const") {
        if (e.children.size() != 3) fail(ErrorCode::ParseError, "(const a n) needs two arguments");
        long a = parse_integer_atom(e.children[1], "numerator");
        long n = parse_integer_atom(e.children[2], "order");
        if (n < 1) fail(ErrorCode::ParseError, "constant class order must be >= 1");
        return ClassExpr::constant(BrauerInvariant(a, n));
    }
    if (head == "prod") {
        std::vector<ClassExpr> parts;
        for (size_t i = 1; i < e.children.size(); ++i)
            parts.push_back(class_from_sexpr(e.children[i], dim, p));
        return ClassExpr::product(std::move(parts));
    }
    fail(ErrorCode::ParseError, "unknown class keyword '" + head + "'");
}

} // namespace

ClassExpr ClassExpr::parse(const std::string& text, int dim, long p) {
    SExprParser parser(text);
    SExpr e = parser.parse();
    return class_from_sexpr(e, dim, p);
}

} // namespace tbl
