#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tbl/divisor_scheme.hpp"
#include "tbl/symbols.hpp"

namespace tbl {

/**
 * Symbolic Brauer classes on U, the complement of the boundary divisor:
 *
 *   quaternion(f, g)      quaternion algebra (f, g)_{-1}
 *   cyclic(f, g, n)       corestriction N_n({f, g}) from the zeta_n level
 *   cup_unram(f, n, k)    unramified character of order n and value k,
 *                         cupped with the Kummer class of f
 *   constant(a/n)         class pulled back from Br(Q_p)
 *   product(...)          formal product; invariants add in Q/Z
 *
 * For cyclic and cup classes f and g must be invertible on U, i.e. factor as
 * unit * p^e * prod f_i^{e_i} over the boundary polynomials.
 */
class ClassExpr {
  public:
    struct Quaternion {
        Poly f, g;
    };
    struct Cyclic {
        Poly f, g;
        long n;
    };
    struct CupUnram {
        Poly f;
        long n;
        long k;
    };
    struct Constant {
        BrauerInvariant value;
    };
    struct Product {
        std::vector<ClassExpr> parts;
    };

    using Node = std::variant<Quaternion, Cyclic, CupUnram, Constant, Product>;

    explicit ClassExpr(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

    static ClassExpr quaternion(Poly f, Poly g);
    static ClassExpr cyclic(Poly f, Poly g, long n);
    static ClassExpr cup_unram(Poly f, long n, long k);
    static ClassExpr constant(BrauerInvariant value);
    static ClassExpr product(std::vector<ClassExpr> parts);

    // S-expression syntax, e.g. "(cyclic x1 (+ x1 1) 3)"; the atom `p`
    // denotes the prime.
    static ClassExpr parse(const std::string& text, int dim, long p);

    const Node& node() const { return *node_; }

    // Smallest N with expr order dividing N (1 for the empty product).
    long order() const;

    std::string to_string() const;

  private:
    std::shared_ptr<const Node> node_;
};

// f = unit * p^e * prod f_i^{e_i} over the model's boundary; NonFactorable
// when no such factorization exists.
struct BoundaryFactorization {
    mpz_class unit;               // nonzero, prime to p (sign included)
    long p_exp = 0;               // e
    std::vector<long> horizontal; // e_i per horizontal component
};

BoundaryFactorization factor_over_boundary(const Poly& f, const SchemeModel& model);

// Checks n prime to p and the invertibility of all symbol entries on U.
void validate_for_model(const ClassExpr& expr, const SchemeModel& model);

// u^*(expr) as an element of Q/Z.
BrauerInvariant evaluate(const ClassExpr& expr, const SchemeModel& model, const OPoint& x);

/**
 * Residue datum of a symbol class along one boundary component: the tame
 * exponents a = ord_i(f), b = ord_i(g) and the factored residue function
 * (-1)^{ab} f^b g^{-a} restricted to the component, with the component's own
 * factor cancelled.
 */
struct ResidueDescriptor {
    int component = 0;
    long n = 0;       // order of the class
    long a = 0;       // ord_i(f)
    long b = 0;       // ord_i(g)
    long p = 0;

    int sign = 1;           // (-1)^{ab}
    mpz_class unit_num = 1; // |w_f|^b with sign folded into `sign`
    mpz_class unit_den = 1; // |w_g|^a
    long p_exp = 0;         // exponent of p in the restricted function
    std::vector<std::pair<Poly, long>> factors; // other components' polynomials

    std::string function_string() const;
};

// One descriptor per boundary component carrying nonzero tame exponents;
// only quaternion and cyclic classes have tame residue data.
std::vector<ResidueDescriptor> residues(const ClassExpr& expr, const SchemeModel& model);

// Value in Z/n of the pulled-back residue character: Kummer index, inside
// F_p(zeta_n), of the residue function evaluated at the reduction point.
// ResidueFunctionVanishes when that value is zero or undefined.
long pullback_residue(const ResidueDescriptor& rd, const IntersectionData& data);

struct Diagram4Report {
    long n = 1;    // order at which both sides are compared
    long lhs = 0;  // residue character of u^*(expr)
    long rhs = 0;  // sum of m_i * (pulled-back residue_i)
    bool equal = false;
    std::vector<std::pair<std::string, long>> contributions; // label -> term mod n
};

// Both routes around Diagram (4); requires gcd(n, p-1) = gcd(n, p) = 1 and a
// model whose boundary contains the vertical component.
Diagram4Report check_diagram_4(const ClassExpr& expr, const SchemeModel& model, const OPoint& x);

// A finite family of classes on the given model whose evaluations separate
// points with distinct intersection data, for valuations up to l_bound:
// one unramified cup of order > 2*l_bound per component, plus cyclic symbol
// classes of order p-1 pairing each f_i against p and against a primitive
// root lift.
std::vector<ClassExpr> spanning_classes(const SchemeModel& model, long l_bound);

struct Theorem01Entry {
    std::string class_name;
    BrauerInvariant inv1, inv2;
    bool equal = false;
};

struct Theorem01Report {
    bool strong_equivalent = false;
    std::vector<Theorem01Entry> entries;
    int violations = 0; // strong-equivalent pair with differing evaluations
    IntersectionData data1, data2;
};

// If the intersection data agree, every class must evaluate equally; a
// violation would falsify the implementation, not the theorem.
Theorem01Report theorem_0_1_check(const SchemeModel& model, const OPoint& x1, const OPoint& x2,
                                  const std::vector<ClassExpr>& classes);

} // namespace tbl
