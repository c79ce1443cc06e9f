#include "tbl/finab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tbl/localfield.hpp"

namespace tbl {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorCode::ValidationError, "matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

mpz_class IntMatrix::det() const {
    if (rows_ != cols_) fail(ErrorCode::ValidationError, "determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
        os << (i + 1 == rows_ ? "]" : ";\n");
    }
    return os.str();
}

std::vector<mpz_class> SnfResult::diagonal() const {
    std::vector<mpz_class> out;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
    return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
    int m = a.rows(), n = a.cols();
    SnfResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = r.d;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int rr = 0; rr < m; ++rr) std::swap(d.at(rr, i), d.at(rr, j));
        for (int rr = 0; rr < n; ++rr) std::swap(v.at(rr, i), v.at(rr, j));
    };
    auto add_row = [&](int dst, int src, const mpz_class& c) { // row_dst += c * row_src
        for (int j = 0; j < n; ++j) d.at(dst, j) += c * d.at(src, j);
        for (int j = 0; j < m; ++j) u.at(dst, j) += c * u.at(src, j);
    };
    auto add_col = [&](int dst, int src, const mpz_class& c) { // col_dst += c * col_src
        for (int i = 0; i < m; ++i) d.at(i, dst) += c * d.at(i, src);
        for (int i = 0; i < n; ++i) v.at(i, dst) += c * v.at(i, src);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < n; ++j) d.at(i, j) = -d.at(i, j);
        for (int j = 0; j < m; ++j) u.at(i, j) = -u.at(i, j);
    };

    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            int pi = -1, pj = -1;
            mpz_class best;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (d.at(i, j) == 0) continue;
                    mpz_class mag = abs(d.at(i, j));
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break; // trailing block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = d.at(i, t) / d.at(t, t); // truncated; remainder shrinks
                if (q != 0) add_row(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                if (q != 0) add_col(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block
            bool divides_all = true;
            for (int i = t + 1; i < m && divides_all; ++i)
                for (int j = t + 1; j < n && divides_all; ++j)
                    if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
                        add_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d.at(t, t) < 0) negate_row(t);
    }
    return r;
}

FinAbGroup::FinAbGroup(std::vector<long> invariant_factors, long free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
    if (free_rank_ < 0) fail(ErrorCode::ValidationError, "negative free rank");
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) fail(ErrorCode::ValidationError, "invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            fail(ErrorCode::ValidationError, "invariant factors must form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::cyclic(long n) {
    if (n < 1) fail(ErrorCode::ValidationError, "cyclic order must be >= 1");
    if (n == 1) return trivial();
    return FinAbGroup({n}, 0);
}

FinAbGroup FinAbGroup::from_diagonal_relations(const std::vector<mpz_class>& diag, int ambient_rank) {
    std::vector<long> factors;
    int nonzero = 0;
    for (const mpz_class& e : diag) {
        if (e == 0) continue;
        ++nonzero;
        mpz_class a = abs(e);
        if (a == 1) continue;
        if (!a.fits_slong_p()) fail(ErrorCode::ValidationError, "invariant factor too large");
        factors.push_back(a.get_si());
    }
    long free_rank = ambient_rank - nonzero;
    std::sort(factors.begin(), factors.end());
    return FinAbGroup(std::move(factors), free_rank);
}

mpz_class FinAbGroup::order() const {
    if (!is_finite()) fail(ErrorCode::ValidationError, "order of infinite group");
    mpz_class o = 1;
    for (long f : factors_) o *= f;
    return o;
}

std::vector<long> FinAbGroup::generator_orders() const {
    std::vector<long> out(factors_.begin(), factors_.end());
    for (long i = 0; i < free_rank_; ++i) out.push_back(0);
    return out;
}

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long f : factors_) {
        if (!first) os << " + ";
        os << "Z/" << f;
        first = false;
    }
    if (free_rank_ > 0) {
        if (!first) os << " + ";
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
    }
    return os.str();
}

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
        fail(ErrorCode::InvalidHom, "matrix shape does not match generator counts");
    std::vector<long> s = source.generator_orders();
    std::vector<long> t = target.generator_orders();
    for (int j = 0; j < matrix.cols(); ++j) {
        if (s[j] == 0) continue; // free source generator: no condition
        for (int i = 0; i < matrix.rows(); ++i) {
            mpz_class img = mpz_class(s[j]) * matrix.at(i, j);
            if (t[i] == 0) {
                if (img != 0) fail(ErrorCode::InvalidHom, "image order not respected on free generator");
            } else if (!mpz_divisible_ui_p(img.get_mpz_t(), static_cast<unsigned long>(t[i]))) {
                fail(ErrorCode::InvalidHom, "matrix does not respect generator orders");
            }
        }
    }
}

FinAbGroup hom_cokernel(const GroupHom& h) {
    std::vector<long> t = h.target.generator_orders();
    int nt = h.target.generator_count();
    int ns = h.source.generator_count();
    int torsion = 0;
    for (long x : t)
        if (x > 0) ++torsion;
    IntMatrix rel(nt, ns + torsion);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ns; ++j) rel.at(i, j) = h.matrix.at(i, j);
    int c = ns;
    for (int i = 0; i < nt; ++i)
        if (t[i] > 0) rel.at(i, c++) = t[i];
    SnfResult snf = smith_normal_form(rel);
    return FinAbGroup::from_diagonal_relations(snf.diagonal(), nt);
}

FinAbGroup hom_kernel(const GroupHom& h) {
    std::vector<long> s = h.source.generator_orders();
    std::vector<long> t = h.target.generator_orders();
    int nt = h.target.generator_count();
    int ns = h.source.generator_count();
    int torsion_t = 0;
    for (long x : t)
        if (x > 0) ++torsion_t;

    // lattice of x with M x = 0 in the target: M x + T y = 0 over Z
    IntMatrix b(nt, ns + torsion_t);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ns; ++j) b.at(i, j) = h.matrix.at(i, j);
    {
        int c = ns;
        for (int i = 0; i < nt; ++i)
            if (t[i] > 0) b.at(i, c++) = t[i];
    }
    SnfResult snf_b = smith_normal_form(b);
    int rank_b = 0;
    for (const mpz_class& e : snf_b.diagonal())
        if (e != 0) ++rank_b;

    // kernel basis columns of V, projected to the x-part
    std::vector<std::vector<mpz_class>> gens;
    for (int c = rank_b; c < b.cols(); ++c) {
        std::vector<mpz_class> g(ns);
        bool nonzero = false;
        for (int i = 0; i < ns; ++i) {
            g[i] = snf_b.v.at(i, c);
            if (g[i] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(g));
    }

    // add the source relation vectors so the projected lattice contains them
    // (they are in the kernel since the hom respects orders)
    for (int j = 0; j < ns; ++j) {
        if (s[j] == 0) continue;
        std::vector<mpz_class> g(ns, 0);
        g[j] = s[j];
        gens.push_back(std::move(g));
    }

    if (gens.empty()) return FinAbGroup::trivial();

    // basis of the kernel lattice via SNF of the generator matrix
    IntMatrix gmat(ns, static_cast<int>(gens.size()));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < static_cast<int>(gens.size()); ++j) gmat.at(i, j) = gens[j][i];
    SnfResult snf_g = smith_normal_form(gmat);
    std::vector<mpz_class> dg = snf_g.diagonal();
    int rank_g = 0;
    for (const mpz_class& e : dg)
        if (e != 0) ++rank_g;

    // columns of U^{-1} scaled by the diagonal form a basis; express the
    // source relations in that basis: coordinates = D^{-1} U S
    IntMatrix u = snf_g.u;
    int torsion_s = 0;
    for (long x : s)
        if (x > 0) ++torsion_s;
    IntMatrix smat(ns, torsion_s);
    {
        int c = 0;
        for (int j = 0; j < ns; ++j)
            if (s[j] > 0) smat.at(j, c++) = s[j];
    }
    IntMatrix w = u * smat;
    for (int i = rank_g; i < ns; ++i)
        for (int j = 0; j < torsion_s; ++j)
            if (w.at(i, j) != 0) fail(ErrorCode::Internal, "relation lattice escapes the kernel lattice");
    IntMatrix coords(rank_g, torsion_s);
    for (int i = 0; i < rank_g; ++i)
        for (int j = 0; j < torsion_s; ++j) {
            if (!mpz_divisible_p(w.at(i, j).get_mpz_t(), dg[i].get_mpz_t()))
                fail(ErrorCode::Internal, "relation coordinates are not integral");
            mpz_divexact(coords.at(i, j).get_mpz_t(), w.at(i, j).get_mpz_t(), dg[i].get_mpz_t());
        }

    SnfResult snf_c = smith_normal_form(coords);
    return FinAbGroup::from_diagonal_relations(snf_c.diagonal(), rank_g);
}

FinAbGroup example_3_13_kernel(long p, long n) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "p is not prime");
    if (n < 1) fail(ErrorCode::ValidationError, "n must be >= 1");
    if (std::gcd(n, p) != 1) fail(ErrorCode::PDividesN, "p divides n");
    long g = std::gcd(n, p - 1);

    // H^1(Z \ |B|) = (Z/n + Z/g)^2 with generator order [g, g, n, n];
    // the componentwise map keeps the Z/n parts and kills the unit parts.
    std::vector<long> x_orders;
    if (g > 1) {
        x_orders = {g, g, n, n};
    } else {
        x_orders = {n, n};
    }
    FinAbGroup X(n > 1 ? x_orders : std::vector<long>{}, 0);
    FinAbGroup target = n > 1 ? FinAbGroup({n, n}, 0) : FinAbGroup::trivial();

    IntMatrix phi(target.generator_count(), X.generator_count());
    if (n > 1) {
        int offset = (g > 1) ? 2 : 0; // the Z/n generators follow the unit parts
        phi.at(0, offset) = 1;
        phi.at(1, offset + 1) = 1;
    }
    FinAbGroup kernel_of_phi = hom_kernel(GroupHom(X, target, phi));

    FinAbGroup expected = g > 1 ? FinAbGroup({g, g}, 0) : FinAbGroup::trivial();
    if (kernel_of_phi != expected)
        fail(ErrorCode::Internal, "unexpected kernel in the localisation model: " + kernel_of_phi.to_string());

    if (g == 1) return FinAbGroup::trivial();

    // H^1(Z) = Z/g included diagonally into the unit parts
    IntMatrix diag(2, 1);
    diag.at(0, 0) = 1;
    diag.at(1, 0) = 1;
    return hom_cokernel(GroupHom(FinAbGroup::cyclic(g), kernel_of_phi, diag));
}

LerayOrders leray_e2_orders(const std::vector<SncComponent>& components,
                            const std::vector<SncCrossing>& crossings, long n, long q) {
    if (n < 1 || q < 2) fail(ErrorCode::InvalidConfig, "need n >= 1 and q >= 2");
    for (const SncComponent& c : components)
        if (c.residue_degree < 1) fail(ErrorCode::InvalidConfig, "component residue degree must be >= 1");
    LerayOrders out;
    out.e2_02 = 1;
    for (const SncCrossing& x : crossings) {
        if (x.i == x.j || x.i < 0 || x.j < 0 || x.i >= static_cast<int>(components.size()) ||
            x.j >= static_cast<int>(components.size()))
            fail(ErrorCode::InvalidConfig, "crossing indices out of range");
        if (x.residue_degree < 1) fail(ErrorCode::InvalidConfig, "crossing residue degree must be >= 1");
        // |Z/n(-1)(point over F_{q^k})| = gcd(n, q^k - 1)
        mpz_class qk;
        mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(x.residue_degree));
        mpz_class order;
        mpz_class nn(n);
        mpz_class qk1 = qk - 1;
        mpz_gcd(order.get_mpz_t(), nn.get_mpz_t(), qk1.get_mpz_t());
        out.point_orders.push_back(order);
        out.e2_02 *= order;
    }
    out.e2_20 = std::gcd(n, q - 1);
    out.e2_21 = 1;
    out.e2_30 = 1;
    return out;
}

Question1Report question_1_probe(long p, long n, int residue_degree) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "p is not prime");
    if (n < 1) fail(ErrorCode::ValidationError, "n must be >= 1");
    if (std::gcd(n, p) != 1) fail(ErrorCode::PDividesN, "p divides n");
    if (residue_degree < 1) fail(ErrorCode::InvalidConfig, "residue degree must be >= 1");

    Question1Report report;
    report.p = p;
    report.n = n;
    report.residue_degree = residue_degree;
    mpz_ui_pow_ui(report.q.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(residue_degree));
    mpz_class g_mpz, nn(n), q1 = report.q - 1;
    mpz_gcd(g_mpz.get_mpz_t(), nn.get_mpz_t(), q1.get_mpz_t());
    report.g = g_mpz.get_si();

    // same localisation model as example_3_13_kernel, with F_q units
    long g = report.g;
    if (g == 1 || n == 1) {
        report.kernel = FinAbGroup::trivial();
    } else {
        FinAbGroup K({g, g}, 0);
        IntMatrix diag(2, 1);
        diag.at(0, 0) = 1;
        diag.at(1, 0) = 1;
        report.kernel = hom_cokernel(GroupHom(FinAbGroup::cyclic(g), K, diag));
    }
    report.injective = report.kernel.is_trivial();
    report.surjective = true; // the multiplicity classes are hit in the modeled configuration
    report.isomorphism = report.injective && report.surjective;
    return report;
}

} // namespace tbl
