#include "tbl/runner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tbl {

std::string Report::machine_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : machine_) os << k << '\t' << v << '\n';
    return os.str();
}

std::string Report::render() const {
    std::ostringstream os;
    os << human_.str();
    if (!machine_.empty()) {
        os << "== summary ==\n";
        os << machine_text();
    }
    return os.str();
}

namespace {

void header(Report& rep, const std::string& subcommand) {
    rep.line("tamebrauer " + std::string(kVersion) + " — " + subcommand);
}

// A coordinate v * p^l with v a lifted unit; rejects nothing by itself.
PAdic sample_coordinate(Sampler& rng, long p, int precision, long l_bound) {
    long r = 1 + rng.below(p - 1);
    long t = rng.below(4);
    long l = rng.below(l_bound + 1);
    mpz_class v = mpz_class(r) + mpz_class(t) * p;
    mpz_class value = v;
    for (long i = 0; i < l; ++i) value *= p;
    return PAdic::make(p, precision, value);
}

// Point with well-defined intersection data (generic in U).
OPoint sample_point(Sampler& rng, const SchemeModel& model, int precision, long l_bound) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<PAdic> coords;
        for (int i = 0; i < model.dim(); ++i)
            coords.push_back(sample_coordinate(rng, model.p(), precision, l_bound));
        try {
            OPoint x(std::move(coords));
            intersection_data(model, x);
            return x;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::PointOnBoundaryGenerically) continue;
            throw;
        }
    }
    fail(ErrorCode::InvalidConfig, "could not sample a point generic in U");
}

// Partner with identical intersection data: shift by p^(M+1) past every
// multiplicity.
OPoint perturb_point(Sampler& rng, const SchemeModel& model, const OPoint& x) {
    IntersectionData data = intersection_data(model, x);
    long max_m = 1;
    for (long m : data.multiplicity) max_m = std::max(max_m, m);
    std::vector<PAdic> coords;
    for (const PAdic& c : x.coords()) {
        long s = 1 + rng.below(model.p() - 1);
        mpz_class shift = s;
        for (long i = 0; i < max_m + 1; ++i) shift *= model.p();
        coords.push_back(c + PAdic::make(model.p(), c.precision(), shift));
    }
    return OPoint(std::move(coords));
}

// precision-independent rendering: valuation and unit residue only
std::string point_string(const OPoint& x) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < x.coords().size(); ++i) {
        if (i) os << ", ";
        const PAdic& c = x.coords()[i];
        if (c.is_zero()) {
            os << "0";
        } else {
            os << c.p() << "^" << c.valuation() << "*u" << c.unit_residue();
        }
    }
    os << ")";
    return os.str();
}

} // namespace

EquivStats run_equiv_harness(const SchemeModel& model, int precision, long l_bound, long pairs,
                             uint64_t seed, const std::vector<ClassExpr>& extra_classes,
                             Report* report) {
    Sampler rng(seed);
    std::vector<ClassExpr> classes = spanning_classes(model, l_bound);
    for (const ClassExpr& c : extra_classes) classes.push_back(c);

    EquivStats stats;
    for (long i = 0; i < pairs; ++i) {
        OPoint x1 = sample_point(rng, model, precision, l_bound);
        OPoint x2 = perturb_point(rng, model, x1);
        Theorem01Report check = theorem_0_1_check(model, x1, x2, classes);
        ++stats.constructed_pairs;
        if (!check.strong_equivalent) ++stats.violations; // constructed pairs must be equivalent
        stats.violations += check.violations;
        if (report && check.violations > 0)
            report->line("VIOLATION at pair " + std::to_string(i) + ": " + point_string(x1) + " vs " +
                         point_string(x2));

        // independent pair: evaluations may differ, and when they do the
        // points must not be strongly equivalent
        OPoint y1 = sample_point(rng, model, precision, l_bound);
        OPoint y2 = sample_point(rng, model, precision, l_bound);
        Theorem01Report indep = theorem_0_1_check(model, y1, y2, classes);
        ++stats.independent_pairs;
        bool evals_differ =
            std::any_of(indep.entries.begin(), indep.entries.end(), [](const Theorem01Entry& e) {
                return !e.equal;
            });
        if (evals_differ && indep.strong_equivalent) ++stats.contrapositive_failures;
        stats.violations += indep.violations;
    }
    if (report) {
        report->kv("equiv.pairs", stats.constructed_pairs);
        report->kv("equiv.violations", stats.violations);
        report->kv("equiv.independent_pairs", stats.independent_pairs);
        report->kv("equiv.contrapositive_failures", stats.contrapositive_failures);
    }
    return stats;
}

namespace {

// Class pool for the Diagram (4) harness: symbol entries supported on the
// boundary, unramified cups, constants and small products.
ClassExpr sample_class(Sampler& rng, const SchemeModel& model, long n) {
    long p = model.p();
    int dim = model.dim();
    auto sample_entry = [&]() {
        long w;
        do {
            w = 1 + rng.below(5);
        } while (w % p == 0);
        if (rng.below(2) == 0) w = -w;
        long e = rng.below(2);
        Poly f = Poly::constant(dim, w);
        for (long i = 0; i < e; ++i) f = f * Poly::constant(dim, p);
        for (const Poly& comp : model.horizontal()) {
            long a = rng.below(3);
            for (long i = 0; i < a; ++i) f = f * comp;
        }
        return f;
    };

    std::function<ClassExpr(bool)> make = [&](bool allow_product) -> ClassExpr {
        long kind = rng.below(allow_product ? 4 : 3);
        switch (kind) {
            case 0: return ClassExpr::cyclic(sample_entry(), sample_entry(), n);
            case 1: return ClassExpr::cup_unram(sample_entry(), n, 1 + rng.below(n - 1));
            case 2: return ClassExpr::constant(BrauerInvariant(rng.below(n), n));
            default: {
                std::vector<ClassExpr> parts;
                parts.push_back(make(false));
                parts.push_back(make(false));
                return ClassExpr::product(std::move(parts));
            }
        }
    };
    return make(true);
}

} // namespace

Thm16Stats run_thm16_harness(const SchemeModel& model, int precision, long n, long samples,
                             uint64_t seed, Report* report) {
    if (n < 2) fail(ErrorCode::InvalidConfig, "diagram check needs n >= 2");
    Sampler rng(seed);
    Thm16Stats stats;
    long max_attempts = samples * 200;
    while (stats.checked < samples && stats.attempts < max_attempts) {
        ++stats.attempts;
        ClassExpr expr = sample_class(rng, model, n);
        OPoint x = sample_point(rng, model, precision, 3);
        try {
            Diagram4Report check = check_diagram_4(expr, model, x);
            ++stats.checked;
            if (check.equal) ++stats.equal;
            if (report) {
                std::string key = "thm16.n" + std::to_string(n) + ".s" + std::to_string(stats.checked);
                std::ostringstream val;
                val << "lhs=" << check.lhs << " rhs=" << check.rhs << " class=" << expr.to_string()
                    << " point=" << point_string(x);
                report->kv(key, val.str());
                if (!check.equal)
                    report->line("MISMATCH: " + expr.to_string() + " at " + point_string(x) + ": lhs " +
                                 std::to_string(check.lhs) + " != rhs " + std::to_string(check.rhs));
            }
        } catch (const Error& e) {
            // samples violating the pullback preconditions are skipped
            if (e.code() == ErrorCode::ResidueFunctionVanishes ||
                e.code() == ErrorCode::PointOnBoundaryGenerically ||
                e.code() == ErrorCode::PrecisionExhausted)
                continue;
            throw;
        }
    }
    if (stats.checked < samples)
        fail(ErrorCode::InvalidConfig, "could not draw enough admissible diagram samples");
    if (report) {
        report->kv("thm16.n" + std::to_string(n) + ".checked", stats.checked);
        report->kv("thm16.n" + std::to_string(n) + ".equal", stats.equal);
    }
    return stats;
}

namespace {

int run_eval(const Scenario& sc, int precision, Report& rep) {
    SchemeModel model = sc.model();
    rep.line("model: p = " + std::to_string(sc.p) + ", dim = " + std::to_string(sc.dim));
    for (size_t i = 0; i < sc.points.size(); ++i) {
        OPoint x = sc.make_point(sc.points[i], precision);
        rep.line("point " + sc.points[i].text + ":");
        for (size_t j = 0; j < sc.classes.size(); ++j) {
            BrauerInvariant inv = evaluate(sc.classes[j], model, x);
            rep.line("  " + sc.classes[j].to_string() + " -> " + inv.to_string());
            rep.kv("eval.p" + std::to_string(i) + ".c" + std::to_string(j), inv.to_string());
        }
    }
    return 0;
}

int run_intersect(const Scenario& sc, int precision, Report& rep) {
    SchemeModel model = sc.model();
    std::vector<IntersectionData> all;
    for (size_t i = 0; i < sc.points.size(); ++i) {
        OPoint x = sc.make_point(sc.points[i], precision);
        IntersectionData data = intersection_data(model, x);
        rep.line("point " + sc.points[i].text + ": " + data.to_string());
        rep.kv("intersect.p" + std::to_string(i), data.to_string());
        all.push_back(std::move(data));
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            rep.kv("intersect.equiv.p" + std::to_string(i) + ".p" + std::to_string(j),
                   strong_equiv(all[i], all[j]) ? "true" : "false");
    return 0;
}

int run_equiv(const Scenario& sc, int precision, const RunOptions& opts, Report& rep) {
    if (!sc.seed && !opts.seed)
        fail(ErrorCode::ValidationError, "equiv requires a seed ([options] seed = ... or --seed)");
    uint64_t seed = opts.seed ? *opts.seed : *sc.seed;
    long samples = opts.samples ? *opts.samples : sc.samples;
    EquivStats stats =
        run_equiv_harness(sc.model(), precision, sc.l_bound, samples, seed, sc.classes, &rep);
    rep.line("checked " + std::to_string(stats.constructed_pairs) + " strong-equivalent pairs, " +
             std::to_string(stats.violations) + " violations");
    return (stats.violations == 0 && stats.contrapositive_failures == 0) ? 0 : 1;
}

int run_verify_thm16(const Scenario& sc, int precision, const RunOptions& opts, Report& rep) {
    if (!sc.seed && !opts.seed)
        fail(ErrorCode::ValidationError, "verify-thm16 requires a seed");
    if (sc.n_values.empty())
        fail(ErrorCode::ValidationError, "verify-thm16 requires at least one n in [options]");
    uint64_t seed = opts.seed ? *opts.seed : *sc.seed;
    long samples = opts.samples ? *opts.samples : sc.samples;
    bool ok = true;
    for (long n : sc.n_values) {
        if (std::gcd(n, sc.p - 1) != 1) {
            rep.line("n = " + std::to_string(n) + ": skipped, gcd(n, p-1) != 1 (hypothesis)");
            rep.kv("thm16.n" + std::to_string(n) + ".skipped", "hypothesis");
            continue;
        }
        Thm16Stats stats = run_thm16_harness(sc.model(), precision, n, samples, seed, &rep);
        rep.line("n = " + std::to_string(n) + ": " + std::to_string(stats.equal) + "/" +
                 std::to_string(stats.checked) + " diagram checks commute");
        ok = ok && stats.equal == stats.checked;
    }
    return ok ? 0 : 1;
}

int run_cohom(const Scenario& sc, Report& rep) {
    if (sc.n_values.empty())
        fail(ErrorCode::ValidationError, "cohom requires at least one n in [options]");
    for (long n : sc.n_values) {
        std::string tag = "n" + std::to_string(n);
        FinAbGroup kernel = example_3_13_kernel(sc.p, n);
        rep.line("example 3.13 kernel contribution (p = " + std::to_string(sc.p) +
                 ", n = " + std::to_string(n) + "): " + kernel.to_string());
        rep.kv("cohom." + tag + ".kernel", kernel.to_string());
        rep.kv("cohom." + tag + ".kernel_order", kernel.order().get_str());

        std::vector<SncComponent> comps{{"V(p)", 1}, {"V(f1)", 1}};
        std::vector<SncCrossing> crossings{{0, 1, 1}};
        LerayOrders orders = leray_e2_orders(comps, crossings, n, sc.p);
        rep.kv("cohom." + tag + ".e2_02", orders.e2_02.get_str());
        rep.kv("cohom." + tag + ".e2_20", orders.e2_20.get_str());
        rep.kv("cohom." + tag + ".e2_21", orders.e2_21.get_str());

        Question1Report probe = question_1_probe(sc.p, n, sc.q1_degree);
        rep.line("question 1 probe at residue degree " + std::to_string(sc.q1_degree) +
                 ": kernel " + probe.kernel.to_string() + ", injective " +
                 (probe.injective ? "yes" : "no") + " (modeled configuration only)");
        rep.kv("cohom." + tag + ".q1_injective", probe.injective ? "true" : "false");
        rep.kv("cohom." + tag + ".q1_kernel", probe.kernel.to_string());
    }
    return 0;
}

// ---- named reproductions ----

Poly x1_poly() { return Poly::variable(1, 0); }

SchemeModel gm_model(long p) {
    return SchemeModel(p, 1, {x1_poly()}, true);
}

int repro_example_1_1(int precision, Report& rep) {
    long p = 5;
    SchemeModel model = gm_model(p);
    std::vector<ClassExpr> classes = spanning_classes(model, 3);

    auto mk = [&](long value) { return OPoint({PAdic::make(p, precision, value)}); };
    struct Case {
        std::string label;
        long value;
    };
    std::vector<Case> pts = {{"5", 5},      {"5*(1+5)", 30}, {"2*5", 10}, {"5^2", 25},
                             {"3", 3},      {"3+5", 8},      {"7", 7},    {"5*(1+25)", 130}};

    rep.line("Example 1.1 over Q_" + std::to_string(p) + ": evaluations agree iff the ideals");
    rep.line("(pX, X - u1) = (pX, X - u2) agree iff the intersection data agree");

    int failures = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            OPoint x1 = mk(pts[i].value);
            OPoint x2 = mk(pts[j].value);
            bool ideal_eq = ideal_equality_a1(x1.coords()[0], x2.coords()[0]);
            Theorem01Report check = theorem_0_1_check(model, x1, x2, classes);
            bool evals_eq = std::all_of(check.entries.begin(), check.entries.end(),
                                        [](const Theorem01Entry& e) { return e.equal; });
            bool consistent = (ideal_eq == check.strong_equivalent) && (ideal_eq == evals_eq);
            if (!consistent) ++failures;
            rep.kv("ex11." + pts[i].label + "." + pts[j].label,
                   std::string(ideal_eq ? "equiv" : "distinct") + (consistent ? "" : " INCONSISTENT"));
        }
    }
    // the headline pair of the example
    bool headline = ideal_equality_a1(mk(5).coords()[0], mk(30).coords()[0]);
    rep.kv("ex11.headline_pair", headline ? "equiv" : "distinct");
    rep.line(failures == 0 ? "all pairs consistent" : "INCONSISTENT pairs found");
    return (failures == 0 && headline) ? 0 : 1;
}

int repro_example_1_2(int precision, Report& rep) {
    long p = 7;
    Sampler rng(12);
    int failures = 0;
    const int samples = 500;
    for (int s = 0; s < samples; ++s) {
        long mf = rng.below(4), mg = rng.below(4);
        long vf = 1 + rng.below(p - 1) + p * rng.below(5);
        long vg = 1 + rng.below(p - 1) + p * rng.below(5);
        mpz_class fv = vf, gv = vg;
        for (long i = 0; i < mf; ++i) fv *= p;
        for (long i = 0; i < mg; ++i) gv *= p;
        long got = tame_symbol(PAdic::make(p, precision, fv), PAdic::make(p, precision, gv));

        // independent route: (-1)^(mf mg) vf^mg vg^(-mf) via plain modular
        // arithmetic
        auto pw = [&](long base, long e) {
            long r = 1;
            base %= p;
            if (base < 0) base += p;
            for (long i = 0; i < e; ++i) r = (r * base) % p;
            return r;
        };
        auto inv = [&](long a) { return pw(a, p - 2); };
        long expected = (pw(vf, mg) * inv(pw(vg, mf))) % p;
        if (mf % 2 == 1 && mg % 2 == 1) expected = (p - expected) % p;
        if (got != expected) ++failures;
    }
    rep.line("Example 1.2 residue formula on " + std::to_string(samples) + " decompositions: " +
             std::to_string(samples - failures) + " exact matches");
    rep.kv("ex12.samples", samples);
    rep.kv("ex12.failures", failures);
    return failures == 0 ? 0 : 1;
}

int repro_counterexample_s1(int precision, Report& rep) {
    int failures = 0;
    // p = 3 mod 4: the two points have different evaluations
    for (long p : {7L, 11L, 19L}) {
        SchemeModel model = gm_model(p);
        ClassExpr alpha = ClassExpr::quaternion(Poly::constant(1, p), x1_poly());
        OPoint up({PAdic::make(p, precision, p)});
        OPoint um({PAdic::make(p, precision, -p)});
        BrauerInvariant i1 = evaluate(alpha, model, up);
        BrauerInvariant i2 = evaluate(alpha, model, um);
        IntersectionData d1 = intersection_data(model, up);
        IntersectionData d2 = intersection_data(model, um);
        bool ok = i1 == BrauerInvariant(1, 2) && i2 == BrauerInvariant() &&
                  d1.reduction == d2.reduction && d1.multiplicity == d2.multiplicity &&
                  !strong_equiv(d1, d2);
        if (!ok) ++failures;
        if (p == 7) {
            rep.line("p = 7: inv (p,t) at u = p is " + i1.to_string() + ", at u = -p is " +
                     i2.to_string());
            rep.line("both points reduce to 0 and meet V(p), V(t) with multiplicity 1;");
            rep.line("the unit residues along V(t) differ: " +
                     std::to_string(*d1.unit_residue[0]) + " vs " + std::to_string(*d2.unit_residue[0]));
        }
        rep.kv("cs1.p" + std::to_string(p) + ".inv_at_p", i1.to_string());
        rep.kv("cs1.p" + std::to_string(p) + ".inv_at_minus_p", i2.to_string());
    }
    // p = 1 mod 4: -1 is a square, so the two invariants coincide; reported separately
    for (long p : {5L, 13L}) {
        SchemeModel model = gm_model(p);
        ClassExpr alpha = ClassExpr::quaternion(Poly::constant(1, p), x1_poly());
        BrauerInvariant i1 = evaluate(alpha, model, OPoint({PAdic::make(p, precision, p)}));
        BrauerInvariant i2 = evaluate(alpha, model, OPoint({PAdic::make(p, precision, -p)}));
        if (!(i1 == i2)) ++failures;
        rep.kv("cs1.p" + std::to_string(p) + ".coincide", i1 == i2 ? "true" : "false");
    }
    return failures == 0 ? 0 : 1;
}

int repro_example_1_4(Report& rep) {
    std::vector<SncComponent> comps{{"V(p)", 1}, {"V(t)", 1}};
    std::vector<SncCrossing> crossings{{0, 1, 1}};
    int failures = 0;

    // gcd(n, p-1) != 1: E2^{0,2} and E2^{2,0} are nonzero of that order
    {
        LerayOrders orders = leray_e2_orders(comps, crossings, 3, 7);
        if (orders.e2_02 != 3 || orders.e2_20 != 3 || orders.e2_21 != 1 || orders.e2_30 != 1)
            ++failures;
        rep.line("p = 7, n = 3: |E2^{0,2}| = " + orders.e2_02.get_str() + ", |E2^{2,0}| = " +
                 orders.e2_20.get_str() + ", E2^{2,1} and E2^{3,0} vanish");
        rep.kv("ex14.p7n3.e2_02", orders.e2_02.get_str());
        rep.kv("ex14.p7n3.e2_20", orders.e2_20.get_str());
    }
    // gcd(n, p-1) = 1: E2^{0,2} vanishes
    {
        LerayOrders orders = leray_e2_orders(comps, crossings, 3, 5);
        if (orders.e2_02 != 1 || orders.e2_20 != 1) ++failures;
        rep.kv("ex14.p5n3.e2_02", orders.e2_02.get_str());
    }
    return failures == 0 ? 0 : 1;
}

int repro_example_3_13(Report& rep) {
    int failures = 0;
    {
        FinAbGroup k = example_3_13_kernel(7, 3);
        if (k.order() % 3 != 0) ++failures;
        rep.line("p = 7, n = 3: kernel contribution " + k.to_string() + " (order divisible by 3)");
        rep.kv("ex313.p7n3.kernel", k.to_string());
    }
    {
        FinAbGroup k = example_3_13_kernel(5, 3);
        if (!k.is_trivial()) ++failures;
        rep.line("p = 5, n = 3: kernel contribution trivial (gcd(3, 4) = 1)");
        rep.kv("ex313.p5n3.kernel", k.to_string());
    }
    {
        FinAbGroup k = example_3_13_kernel(3, 2);
        if (k.order() % 2 != 0) ++failures;
        rep.kv("ex313.p3n2.kernel", k.to_string());
    }
    return failures == 0 ? 0 : 1;
}

int repro_remark_3_14(int precision, Report& rep) {
    // A^1 in P^1 over Z_p: every evaluation map is the same (Br(A^1) comes
    // from the base), yet the boundary intersections differ.
    long p = 5;
    struct P1Point {
        std::string label;
        PAdic u; // coordinate on the A^1 chart (may have negative valuation)
    };
    PAdic one = PAdic::make(p, precision, 1);
    std::vector<P1Point> pts;
    pts.push_back({"0", PAdic::zero(p, precision)});
    pts.push_back({"3", PAdic::make(p, precision, 3)});
    pts.push_back({"1/5", one / PAdic::make(p, precision, 5)});
    pts.push_back({"2/25", PAdic::make(p, precision, 2) / PAdic::make(p, precision, 25)});
    pts.push_back({"7", PAdic::make(p, precision, 7)});

    struct Data {
        long red_num, red_den; // reduction in P^1(F_p), normalized
        long m_infinity;
    };
    std::vector<Data> data;
    for (const P1Point& pt : pts) {
        Data d{};
        if (pt.u.is_zero() || pt.u.valuation() >= 0) {
            d.red_num = pt.u.is_zero() || pt.u.valuation() > 0 ? 0 : pt.u.unit_residue();
            d.red_den = 1;
            d.m_infinity = 0;
        } else {
            d.red_num = 1;
            d.red_den = 0; // the point at infinity
            d.m_infinity = -pt.u.valuation();
        }
        data.push_back(d);
        rep.kv("rm314." + pt.label + ".reduction",
               "[" + std::to_string(d.red_num) + ":" + std::to_string(d.red_den) + "]");
        rep.kv("rm314." + pt.label + ".m_infinity", d.m_infinity);
    }

    // Br(A^1_{Q_p}) = Br(Q_p): constant classes evaluate identically everywhere.
    std::vector<BrauerInvariant> constants{BrauerInvariant(1, 3), BrauerInvariant(1, 2)};
    bool evals_equal = true;
    for (const BrauerInvariant& q : constants) {
        // pullback along any point of the structure map is the identity on
        // constants; exercised through the evaluator on the integral chart
        SchemeModel chart(p, 1, {}, true);
        ClassExpr c = ClassExpr::constant(q);
        BrauerInvariant reference = q;
        for (const P1Point& pt : pts) {
            PAdic coord = (!pt.u.is_zero() && pt.u.valuation() < 0) ? one / pt.u : pt.u;
            BrauerInvariant got = evaluate(c, chart, OPoint({coord}));
            if (got != reference) evals_equal = false;
        }
    }

    bool data_differ = false;
    for (size_t i = 0; i < data.size() && !data_differ; ++i)
        for (size_t j = i + 1; j < data.size() && !data_differ; ++j)
            if (data[i].red_num != data[j].red_num || data[i].red_den != data[j].red_den ||
                data[i].m_infinity != data[j].m_infinity)
                data_differ = true;

    rep.line(std::string("evaluations all equal: ") + (evals_equal ? "yes" : "NO"));
    rep.line(std::string("intersection data all equal: ") + (data_differ ? "no" : "YES"));
    rep.line("equal evaluation maps do not imply equal boundary intersections");
    rep.kv("rm314.evals_equal", evals_equal ? "true" : "false");
    rep.kv("rm314.data_differ", data_differ ? "true" : "false");
    return (evals_equal && data_differ) ? 0 : 1;
}

} // namespace

const std::vector<std::string>& repro_names() {
    static const std::vector<std::string> names = {
        "example-1-1", "example-1-2", "counterexample-s1", "example-1-4", "example-3-13",
        "remark-3-14"};
    return names;
}

RunResult run_repro(const std::string& name, const RunOptions& opts) {
    Report rep;
    header(rep, "repro " + name);
    int precision = opts.precision ? *opts.precision : PAdic::kDefaultPrecision;
    int code;
    if (name == "example-1-1") code = repro_example_1_1(precision, rep);
    else if (name == "example-1-2") code = repro_example_1_2(precision, rep);
    else if (name == "counterexample-s1") code = repro_counterexample_s1(precision, rep);
    else if (name == "example-1-4") code = repro_example_1_4(rep);
    else if (name == "example-3-13") code = repro_example_3_13(rep);
    else if (name == "remark-3-14") code = repro_remark_3_14(precision, rep);
    else fail(ErrorCode::ValidationError, "unknown repro target '" + name + "'");
    rep.kv("repro." + name, code == 0 ? "pass" : "FAIL");
    return {rep.render(), code};
}

RunResult run(const std::string& subcommand, const Scenario& scenario, const RunOptions& opts) {
    Report rep;
    header(rep, subcommand);
    int precision = opts.precision ? *opts.precision : scenario.precision;
    int code;
    if (subcommand == "eval") code = run_eval(scenario, precision, rep);
    else if (subcommand == "intersect") code = run_intersect(scenario, precision, rep);
    else if (subcommand == "equiv") code = run_equiv(scenario, precision, opts, rep);
    else if (subcommand == "verify-thm16") code = run_verify_thm16(scenario, precision, opts, rep);
    else if (subcommand == "cohom") code = run_cohom(scenario, rep);
    else fail(ErrorCode::ValidationError, "unknown subcommand '" + subcommand + "'");
    return {rep.render(), code};
}

} // namespace tbl
