#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tbl/errors.hpp"

namespace tbl {

/** Dense integer matrix, row major. */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

    // Exact determinant (square matrices), fraction-free elimination.
    mpz_class det() const;

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

/** U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... */
struct SnfResult {
    IntMatrix u, d, v;
    std::vector<mpz_class> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/**
 * Finitely generated abelian group in canonical form: invariant factors
 * d1 | d2 | ... (each >= 2) plus a free rank.  Equality of groups is
 * equality of this data.
 */
class FinAbGroup {
  public:
    FinAbGroup() = default;
    FinAbGroup(std::vector<long> invariant_factors, long free_rank);

    static FinAbGroup trivial() { return FinAbGroup(); }
    static FinAbGroup cyclic(long n); // Z/n, trivial for n = 1
    // Group presented as Z^k / (diagonal relations); 1-entries drop out,
    // 0-entries contribute free rank.
    static FinAbGroup from_diagonal_relations(const std::vector<mpz_class>& diag, int ambient_rank);

    const std::vector<long>& invariant_factors() const { return factors_; }
    long free_rank() const { return free_rank_; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    mpz_class order() const; // requires finite

    // Generator orders in presentation order: invariant factors, then 0 for
    // each free generator.
    std::vector<long> generator_orders() const;
    int generator_count() const { return static_cast<int>(factors_.size()) + static_cast<int>(free_rank_); }

    bool operator==(const FinAbGroup& rhs) const {
        return factors_ == rhs.factors_ && free_rank_ == rhs.free_rank_;
    }
    bool operator!=(const FinAbGroup& rhs) const { return !(*this == rhs); }

    std::string to_string() const; // "0", "Z/2 + Z/4 + Z^3", ...

  private:
    std::vector<long> factors_;
    long free_rank_ = 0;
};

/**
 * Homomorphism between groups in canonical form; the matrix columns give the
 * images of the source generators in terms of the target generators.
 */
struct GroupHom {
    FinAbGroup source, target;
    IntMatrix matrix; // target.generator_count() x source.generator_count()

    GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m);
};

FinAbGroup hom_kernel(const GroupHom& h);
FinAbGroup hom_cokernel(const GroupHom& h);

// Localisation model behind example_3_13_kernel: Z/g included diagonally into the unit
// parts of (Z/n + Z/g)^2, g = gcd(n, p-1); returns the contribution to the
// kernel of the componentwise map, a group of order g.
FinAbGroup example_3_13_kernel(long p, long n);

struct SncComponent {
    std::string label;
    int residue_degree = 1;
};

struct SncCrossing {
    int i = 0, j = 0;       // component indices, i != j
    int residue_degree = 1; // of the intersection point
};

struct LerayOrders {
    std::vector<mpz_class> point_orders; // |Z/n(-1)(point)| per crossing
    mpz_class e2_02;                     // product of point orders
    mpz_class e2_20;                     // gcd(n, q - 1)
    mpz_class e2_21;                     // 1 (the term vanishes)
    mpz_class e2_30;                     // 1 (the term vanishes)
};

LerayOrders leray_e2_orders(const std::vector<SncComponent>& components,
                            const std::vector<SncCrossing>& crossings, long n, long q);

struct Question1Report {
    long p = 0;
    long n = 0;
    int residue_degree = 1;
    mpz_class q;        // p^residue_degree
    long g = 1;         // gcd(n, q - 1)
    FinAbGroup kernel;  // kernel contribution of the modeled map
    bool injective = false;
    bool surjective = true;
    bool isomorphism = false;
};

// Evidence for Question 1 in the modeled baby configuration only.
Question1Report question_1_probe(long p, long n, int residue_degree);

} // namespace tbl
