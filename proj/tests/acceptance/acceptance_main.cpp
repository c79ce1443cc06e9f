// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 1-5 are precision-parameterized so that criterion 9 can
// rerun them at doubled precision and compare the machine summaries byte for
// byte.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "tbl/runner.hpp"

using namespace tbl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    std::string machine;
};

Poly x1() { return Poly::variable(1, 0); }
Poly cst(long c) { return Poly::constant(1, c); }

SchemeModel gm(long p) {
    return SchemeModel(p, 1, {x1()}, true);
}

OPoint pt(long p, int precision, const mpz_class& v) {
    return OPoint({PAdic::make(p, precision, v)});
}

// ---- criterion 1: the end-of-section-1 counterexample -----------------

Outcome criterion1(int precision) {
    Outcome out;
    std::ostringstream machine, detail;
    bool ok = true;
    for (long p : {3L, 7L, 11L, 19L, 23L, 31L}) {
        SchemeModel model = gm(p);
        ClassExpr alpha = ClassExpr::quaternion(cst(p), x1());
        BrauerInvariant at_p = evaluate(alpha, model, pt(p, precision, p));
        BrauerInvariant at_mp = evaluate(alpha, model, pt(p, precision, -p));
        bool good = at_p == BrauerInvariant(1, 2) && at_mp == BrauerInvariant();
        ok = ok && good;
        machine << "c1.p" << p << "\t" << at_p.to_string() << "," << at_mp.to_string() << "\n";
    }
    detail << "quaternion (p,t) evaluates to 1/2 at p and 0 at -p for all p = 3 mod 4, p <= 31";
    out.pass = ok;
    out.detail = detail.str();
    out.machine = machine.str();
    return out;
}

// ---- criterion 2: Example 1.1 equivalence, exhaustively ----------------

Outcome criterion2(int precision) {
    Outcome out;
    std::ostringstream machine;
    bool ok = true;
    long total_pairs = 0;
    for (long p : {3L, 5L, 7L}) {
        SchemeModel model = gm(p);
        std::vector<ClassExpr> classes = spanning_classes(model, 3);

        // fixed 20-element unit sample: first 20 positive integers prime to p
        std::vector<long> units;
        for (long v = 1; static_cast<long>(units.size()) < 20; ++v)
            if (v % p != 0) units.push_back(v);

        struct P {
            OPoint x;
            std::vector<BrauerInvariant> evals;
            IntersectionData data;
        };
        std::vector<P> points;
        for (long v : units) {
            for (long l = 0; l <= 3; ++l) {
                mpz_class u = v;
                for (long i = 0; i < l; ++i) u *= p;
                OPoint x = pt(p, precision, u);
                std::vector<BrauerInvariant> evals;
                for (const ClassExpr& c : classes) evals.push_back(evaluate(c, model, x));
                points.push_back({x, std::move(evals), intersection_data(model, x)});
            }
        }

        long mismatches = 0;
        for (size_t i = 0; i < points.size(); ++i) {
            for (size_t j = i + 1; j < points.size(); ++j) {
                bool evals_eq = points[i].evals == points[j].evals;
                bool ideal_eq =
                    ideal_equality_a1(points[i].x.coords()[0], points[j].x.coords()[0]);
                bool se = strong_equiv(points[i].data, points[j].data);
                if (evals_eq != ideal_eq || ideal_eq != se) ++mismatches;
                ++total_pairs;
            }
        }
        ok = ok && mismatches == 0;
        machine << "c2.p" << p << ".mismatches\t" << mismatches << "\n";
    }
    machine << "c2.pairs\t" << total_pairs << "\n";
    out.pass = ok;
    out.detail = "evaluations agree iff (pX, X-u1) = (pX, X-u2) iff intersection data agree, " +
                 std::to_string(total_pairs) + " pairs";
    out.machine = machine.str();
    return out;
}

// ---- criterion 3: the Example 1.2 residue formula ----------------------

Outcome criterion3(int precision) {
    Outcome out;
    std::ostringstream machine;
    long failures = 0;
    uint64_t checksum = 1469598103934665603ULL;
    Sampler rng(2024);
    const long total = 1000;
    const std::vector<long> primes = {3, 7, 13};
    for (long s = 0; s < total; ++s) {
        long p = primes[static_cast<size_t>(s) % primes.size()];
        long mf = rng.below(5), mg = rng.below(5);
        long vf = 1 + rng.below(p - 1) + p * rng.below(7);
        long vg = 1 + rng.below(p - 1) + p * rng.below(7);
        mpz_class fv = vf, gv = vg;
        for (long i = 0; i < mf; ++i) fv *= p;
        for (long i = 0; i < mg; ++i) gv *= p;
        long got = tame_symbol(PAdic::make(p, precision, fv), PAdic::make(p, precision, gv));

        // residue of (-1)^(mf mg) vf^mg / vg^mf by plain modular arithmetic
        auto pw = [&](long base, long e) {
            long r = 1;
            base %= p;
            for (long i = 0; i < e; ++i) r = (r * base) % p;
            return r;
        };
        long expected = (pw(vf, mg) * pw(pw(vg, mf), p - 2)) % p;
        if (mf % 2 == 1 && mg % 2 == 1) expected = (p - expected) % p;
        if (got != expected) ++failures;
        checksum = (checksum ^ static_cast<uint64_t>(got)) * 1099511628211ULL;
    }
    machine << "c3.samples\t" << total << "\nc3.failures\t" << failures << "\nc3.checksum\t"
            << checksum << "\n";
    out.pass = failures == 0;
    out.detail = "tame symbol equals the (-1)^(mf mg) vf^mg vg^(-mf) residue on 1000 decompositions";
    out.machine = machine.str();
    return out;
}

// ---- criterion 4: Diagram (4) over samples ------------------------------

Outcome criterion4(int precision) {
    Outcome out;
    bool ok = true;
    std::ostringstream detail;
    Report rep;
    for (auto [p, n] : {std::pair<long, long>{5, 3}, {2, 3}, {3, 5}}) {
        Thm16Stats stats = run_thm16_harness(gm(p), precision, n, 100, 7771, &rep);
        ok = ok && stats.equal == stats.checked && stats.checked == 100;
        detail << "(" << p << "," << n << "): " << stats.equal << "/" << stats.checked << "  ";
    }
    out.pass = ok;
    out.detail = "both routes around Diagram (4) agree: " + detail.str();
    out.machine = rep.machine_text();
    return out;
}

// ---- criterion 5: the Theorem 0.1 property suite ------------------------

Outcome criterion5(int precision) {
    Outcome out;
    bool ok = true;
    long pairs = 0, violations = 0;
    Report rep;
    long p = 7;
    std::vector<Poly> boundaries = {x1(), Poly::parse("x1 - 1", 1), Poly::parse("x1^2 - 2", 1)};
    for (size_t i = 0; i < boundaries.size(); ++i) {
        SchemeModel model(p, 1, {boundaries[i]}, true);
        std::vector<ClassExpr> extra = {ClassExpr::quaternion(cst(p), boundaries[i])};
        EquivStats stats =
            run_equiv_harness(model, precision, 3, 1000, 42 + static_cast<uint64_t>(i), extra, &rep);
        pairs += stats.constructed_pairs;
        violations += stats.violations + stats.contrapositive_failures;
    }
    ok = pairs >= 3000 && violations == 0;
    out.pass = ok;
    out.detail = std::to_string(pairs) + " strong-equivalent pairs across three models, " +
                 std::to_string(violations) + " violations";
    out.machine = rep.machine_text();
    return out;
}

// ---- criterion 6: Hilbert symbol vs the conic oracle --------------------

bool conic_solvable(long p, long a, long b) {
    long m = p * p * p;
    std::vector<char> is_square(m, 0);
    for (long z = 0; z < m; ++z)
        is_square[static_cast<long>((static_cast<__int128>(z) * z) % m)] = 1;
    a = ((a % m) + m) % m;
    b = ((b % m) + m) % m;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            long rhs = static_cast<long>((static_cast<__int128>(a) * x % m * x % m +
                                          static_cast<__int128>(b) * y % m * y % m) %
                                         m);
            if (is_square[rhs]) return true;
        }
    return false;
}

Outcome criterion6() {
    Outcome out;
    std::ostringstream machine;
    long checked = 0, failures = 0;
    for (long p : {3L, 5L, 7L, 11L}) {
        // full set of residue classes: units and uniformizer multiples
        std::vector<long> reps;
        for (long v = 1; v < p; ++v) {
            reps.push_back(v);
            reps.push_back(v * p);
        }
        for (long a : reps)
            for (long b : reps) {
                bool trivial =
                    hilbert_symbol(PAdic::make(p, 24, a), PAdic::make(p, 24, b)).is_zero();
                bool solvable = conic_solvable(p, a, b);
                if (trivial != solvable) ++failures;
                ++checked;
            }
        machine << "c6.p" << p << ".checked\t" << (p - 1) * (p - 1) * 4 << "\n";
    }
    machine << "c6.failures\t" << failures << "\n";
    out.pass = failures == 0;
    out.detail = "hilbert symbol matches z^2 = ax^2 + by^2 solvability mod p^3 on " +
                 std::to_string(checked) + " residue-class pairs";
    out.machine = machine.str();
    return out;
}

// ---- criterion 7: the Example 3.13 sweep --------------------------------

Outcome criterion7() {
    Outcome out;
    long checked = 0, failures = 0;
    for (long p = 2; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        for (long n = 1; n <= 12; ++n) {
            if (std::gcd(n, p) != 1) continue;
            long g = std::gcd(n, p - 1);
            FinAbGroup k = example_3_13_kernel(p, n);
            bool good = (k.order() % g == 0) && (k.is_trivial() == (g == 1)) && k.order() == g;
            if (!good) ++failures;
            ++checked;
        }
    }
    out.pass = failures == 0;
    out.detail = "kernel contribution has order gcd(n, p-1), trivial exactly when the gcd is 1 (" +
                 std::to_string(checked) + " cases)";
    out.machine = "c7.checked\t" + std::to_string(checked) + "\nc7.failures\t" +
                  std::to_string(failures) + "\n";
    return out;
}

// ---- criterion 8: Example 1.4 / Proposition 1.3 orders ------------------

Outcome criterion8() {
    Outcome out;
    long failures = 0, checked = 0;
    std::vector<SncComponent> comps{{"V(p)", 1}, {"V(t)", 1}};
    std::vector<SncCrossing> one_point{{0, 1, 1}};
    for (long p : {3L, 5L, 7L, 13L}) {
        for (long n = 2; n <= 12; ++n) {
            if (std::gcd(n, p) != 1) continue;
            long h = std::gcd(n, p - 1);
            LerayOrders orders = leray_e2_orders(comps, one_point, n, p);
            bool good = orders.e2_02 == h && orders.e2_20 == h && orders.e2_21 == 1 &&
                        orders.e2_30 == 1 && ((h == 1) == (orders.e2_02 == 1));
            if (!good) ++failures;
            ++checked;
        }
    }
    out.pass = failures == 0;
    out.detail = "|E2^{0,2}| = |E2^{2,0}| = gcd(n, p-1), vanishing exactly at gcd 1 (" +
                 std::to_string(checked) + " cases)";
    out.machine = "c8.checked\t" + std::to_string(checked) + "\nc8.failures\t" +
                  std::to_string(failures) + "\n";
    return out;
}

// ---- criterion 9: precision stability -----------------------------------

Outcome criterion9() {
    Outcome out;
    bool ok = true;
    std::string which;
    std::vector<std::pair<std::string, std::function<Outcome(int)>>> reruns = {
        {"c1", criterion1}, {"c2", criterion2}, {"c3", criterion3},
        {"c4", criterion4}, {"c5", criterion5},
    };
    for (auto& [name, fn] : reruns) {
        Outcome base = fn(32);
        Outcome doubled = fn(64);
        if (base.machine != doubled.machine || !base.pass || !doubled.pass) {
            ok = false;
            which += name + " ";
        }
    }
    out.pass = ok;
    out.detail = ok ? "criteria 1-5 machine summaries byte-identical at doubled precision"
                    : "summaries differ for: " + which;
    out.machine = std::string("c9.stable\t") + (ok ? "true" : "false") + "\n";
    return out;
}

} // namespace

int main() {
    struct Entry {
        int number;
        std::string name;
        std::function<Outcome()> run;
        double budget_ms;
    };
    const int N = PAdic::kDefaultPrecision;
    std::vector<Entry> entries = {
        {1, "section-1 counterexample", [&] { return criterion1(N); }, 1000},
        {2, "Example 1.1 equivalence", [&] { return criterion2(N); }, 30000},
        {3, "Example 1.2 residue formula", [&] { return criterion3(N); }, 5000},
        {4, "Theorem 1.6 diagram", [&] { return criterion4(N); }, 60000},
        {5, "Theorem 0.1 property suite", [&] { return criterion5(N); }, 120000},
        {6, "Hilbert symbol oracle", [] { return criterion6(); }, 60000},
        {7, "Example 3.13 kernel orders", [] { return criterion7(); }, 10000},
        {8, "Leray E2 orders", [] { return criterion8(); }, 1000},
        {9, "precision stability", [] { return criterion9(); }, 300000},
    };

    int failed = 0;
    for (Entry& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = e.run();
        } catch (const std::exception& ex) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + ex.what();
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_budget = ms <= e.budget_ms;
        bool pass = outcome.pass && in_budget;
        if (!pass) ++failed;
        std::printf("criterion %d (%s): %s (%.0f ms%s) %s\n", e.number, e.name.c_str(),
                    pass ? "PASS" : "FAIL", ms, in_budget ? "" : ", OVER BUDGET",
                    outcome.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
