"""Smoke tests for the _tamebrauer extension module."""

import _tamebrauer as tb

GM_SCENARIO = """
[field]
p = 5
precision = 16

[scheme]
dim = 1
boundary = x1
vertical = true

[classes]
class = (cup-unram x1 7 1)

[points]
point = 5
point = 25

[options]
seed = 3
n = 3
samples = 25
"""


def test_padic():
    a = tb.PAdic.make(7, 16, 343)
    assert a.valuation() == 3
    assert a.unit_residue() == 1
    b = tb.PAdic.make(7, 16, -7)
    assert (a * b).valuation() == 4
    assert b.unit_residue() == 6
    assert tb.unit_class_equal(tb.PAdic.make(5, 8, 5), tb.PAdic.make(5, 8, 30))
    try:
        tb.PAdic.make(6, 8, 1)
        raise AssertionError("expected TblError")
    except tb.TblError:
        pass


def test_symbols():
    p7 = lambda v: tb.PAdic.make(7, 16, v)
    assert tb.tame_symbol(p7(7), p7(7)) == 6
    assert tb.hilbert_symbol(p7(7), p7(7)) == tb.BrauerInvariant(1, 2)
    assert tb.hilbert_symbol(p7(7), p7(-7)).is_zero()
    assert tb.norm_residue_invariant(p7(7), p7(7), 2) == tb.BrauerInvariant(1, 2)
    assert tb.residue_character_index(6, 2, 7) == 1


def test_finite_fields():
    f25 = tb.FqField.cyclotomic(5, 3)
    assert f25.q == 25
    zeta = tb.primitive_nth_root(f25, 3)
    assert tb.dlog_mu_n(zeta.pow(2), zeta, 3) == 2
    assert tb.kummer_class_index(f25.from_int(2), 3) == 0
    assert tb.norm_to_prime_field(f25.from_int(2)) == 4


def test_scheme_and_evaluation():
    model = tb.SchemeModel(7, 1, ["x1"], True)
    x = tb.OPoint(7, 16, [(7, 1)])
    data = tb.intersection_data(model, x)
    assert data.multiplicity == [1, 1]
    assert data.reduction == [0]

    alpha = tb.ClassExpr.parse("(quat p x1)", 1, 7)
    assert tb.evaluate(alpha, model, x) == tb.BrauerInvariant(1, 2)
    y = tb.OPoint(7, 16, [(-7, 1)])
    assert tb.evaluate(alpha, model, y).is_zero()
    assert not tb.strong_equiv(data, tb.intersection_data(model, y))
    assert tb.ideal_equality_a1(tb.PAdic.make(5, 16, 5), tb.PAdic.make(5, 16, 30))

    report = tb.theorem_0_1_check(model, x, tb.OPoint(7, 16, [(7 * 8, 1)]),
                                  tb.spanning_classes(model, 3))
    assert report.strong_equivalent
    assert report.violations == 0


def test_diagram_4():
    model = tb.SchemeModel(5, 1, ["x1"], True)
    c = tb.ClassExpr.parse("(cup-unram (* 2 (^ x1 2)) 3 1)", 1, 5)
    rep = tb.check_diagram_4(c, model, tb.OPoint(5, 16, [(25, 1)]))
    assert rep.equal
    assert rep.lhs == 1


def test_residues():
    model = tb.SchemeModel(5, 1, ["x1"], True)
    c = tb.ClassExpr.parse("(cyclic p x1 3)", 1, 5)
    rds = tb.residues(c, model)
    assert len(rds) == 2
    assert (rds[0].a, rds[0].b) == (0, 1)
    assert (rds[1].a, rds[1].b) == (1, 0)
    data = tb.intersection_data(model, tb.OPoint(5, 16, [(3, 1)]))
    assert tb.pullback_residue(rds[1], data) == 0


def test_finab():
    u, d, v = tb.smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]
    k = tb.example_3_13_kernel(7, 3)
    assert k.order() == 3
    assert tb.example_3_13_kernel(5, 3).is_trivial()
    orders = tb.leray_e2_orders(n=3, q=7)
    assert orders["e2_02"] == 3 and orders["e2_20"] == 3
    probe = tb.question_1_probe(7, 3)
    assert not probe.injective
    g = tb.hom_cokernel(tb.FinAbGroup([3], 0), tb.FinAbGroup([3, 3], 0), [[1], [1]])
    assert g == tb.FinAbGroup([3], 0)


def test_runner():
    report, code = tb.run_scenario("eval", GM_SCENARIO)
    assert code == 0
    assert "eval.p0.c0\t1/7" in report
    assert "eval.p1.c0\t2/7" in report
    report, code = tb.run_scenario("verify-thm16", GM_SCENARIO)
    assert code == 0
    for name in ("example-1-1", "counterexample-s1", "remark-3-14"):
        _, code = tb.run_repro(name)
        assert code == 0


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for fn in tests:
        fn()
        print(f"{fn.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
