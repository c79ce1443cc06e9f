#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tbl/runner.hpp"

namespace py = pybind11;
using namespace tbl;

namespace {

long mpz_to_long(const mpz_class& v) {
    if (!v.fits_slong_p()) throw py::value_error("value does not fit in a machine integer");
    return v.get_si();
}

IntMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows) {
    int m = static_cast<int>(rows.size());
    int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw py::value_error("ragged matrix");
        for (int j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
    }
    return a;
}

std::vector<std::vector<long>> matrix_to_rows(const IntMatrix& a) {
    std::vector<std::vector<long>> rows(a.rows(), std::vector<long>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) rows[i][j] = mpz_to_long(a.at(i, j));
    return rows;
}

SchemeModel model_from_args(long p, int dim, const std::vector<std::string>& boundary, bool vertical) {
    std::vector<Poly> polys;
    for (const std::string& text : boundary) polys.push_back(Poly::parse(text, dim));
    return SchemeModel(p, dim, std::move(polys), vertical);
}

OPoint point_from_args(long p, int precision, const std::vector<std::pair<long, long>>& coords) {
    std::vector<PAdic> c;
    for (const auto& [num, den] : coords)
        c.push_back(PAdic::make_rational(p, precision, mpz_class(num), mpz_class(den)));
    return OPoint(std::move(c));
}

} // namespace

PYBIND11_MODULE(_tamebrauer, m) {
    m.doc() = "Evaluations of tame Brauer classes of open varieties over Q_p";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "TblError");

    py::class_<PAdic>(m, "PAdic")
        .def_static("make",
                    [](long p, int precision, long value) {
                        return PAdic::make(p, precision, mpz_class(value));
                    },
                    py::arg("p"), py::arg("precision"), py::arg("value"))
        .def_static("make_rational",
                    [](long p, int precision, long num, long den) {
                        return PAdic::make_rational(p, precision, mpz_class(num), mpz_class(den));
                    })
        .def_static("zero", &PAdic::zero)
        .def_property_readonly("p", &PAdic::p)
        .def_property_readonly("precision", &PAdic::precision)
        .def("is_zero", &PAdic::is_zero)
        .def("valuation", &PAdic::valuation)
        .def("unit_residue", &PAdic::unit_residue)
        .def("__add__", &PAdic::operator+)
        .def("__sub__", static_cast<PAdic (PAdic::*)(const PAdic&) const>(&PAdic::operator-))
        .def("__mul__", &PAdic::operator*)
        .def("__truediv__", &PAdic::operator/)
        .def("__neg__", static_cast<PAdic (PAdic::*)() const>(&PAdic::operator-))
        .def("pow", &PAdic::pow)
        .def("__repr__", &PAdic::to_string);

    m.def("unit_class_equal", &unit_class_equal);

    py::class_<BrauerInvariant>(m, "BrauerInvariant")
        .def(py::init<long, long>(), py::arg("num"), py::arg("order"))
        .def_property_readonly("numerator", &BrauerInvariant::numerator)
        .def_property_readonly("order", &BrauerInvariant::order)
        .def("is_zero", &BrauerInvariant::is_zero)
        .def("numerator_mod", &BrauerInvariant::numerator_mod)
        .def("__add__", &BrauerInvariant::operator+)
        .def("__eq__", &BrauerInvariant::operator==)
        .def("__repr__", &BrauerInvariant::to_string);

    m.def("tame_symbol", &tame_symbol);
    m.def("hilbert_symbol", &hilbert_symbol);
    m.def("norm_residue_invariant", &norm_residue_invariant);
    m.def("residue_character_index", &residue_character_index, py::arg("t"), py::arg("n"),
          py::arg("p"));

    struct PyFqField {
        FqFieldPtr ptr;
    };
    py::class_<PyFqField>(m, "FqField")
        .def_static("make", [](long p, int f) { return PyFqField{FqField::make(p, f)}; })
        .def_static("cyclotomic",
                    [](long p, long n) { return PyFqField{FqField::cyclotomic(p, n)}; })
        .def_property_readonly("p", [](const PyFqField& f) { return f.ptr->p(); })
        .def_property_readonly("degree", [](const PyFqField& f) { return f.ptr->degree(); })
        .def_property_readonly("q", [](const PyFqField& f) { return f.ptr->q(); })
        .def("element", [](const PyFqField& f, uint64_t i) { return f.ptr->element(i); })
        .def("from_int", [](const PyFqField& f, long v) { return f.ptr->from_int(v); })
        .def("element_order",
             [](const PyFqField& f, const FqElem& t) { return f.ptr->element_order(t); })
        .def("__repr__", [](const PyFqField& f) { return f.ptr->to_string(); });

    py::class_<FqElem>(m, "FqElem")
        .def("is_zero", &FqElem::is_zero)
        .def_property_readonly("index", &FqElem::index)
        .def("__add__", &FqElem::operator+)
        .def("__sub__", &FqElem::operator-)
        .def("__mul__", &FqElem::operator*)
        .def("__truediv__", &FqElem::operator/)
        .def("pow", &FqElem::pow)
        .def("__eq__", &FqElem::operator==)
        .def("__repr__", &FqElem::to_string);

    m.def("primitive_nth_root",
          [](const PyFqField& f, long n) { return primitive_nth_root(f.ptr, n); });
    m.def("dlog_mu_n", &dlog_mu_n);
    m.def("kummer_class_index", &kummer_class_index);
    m.def("norm_to_prime_field", &norm_to_prime_field);

    py::class_<SchemeModel>(m, "SchemeModel")
        .def(py::init(&model_from_args), py::arg("p"), py::arg("dim"), py::arg("boundary"),
             py::arg("vertical") = true)
        .def_property_readonly("p", &SchemeModel::p)
        .def_property_readonly("dim", &SchemeModel::dim)
        .def("component_count", &SchemeModel::component_count)
        .def("component_label", &SchemeModel::component_label);

    py::class_<OPoint>(m, "OPoint")
        .def(py::init(&point_from_args), py::arg("p"), py::arg("precision"), py::arg("coords"))
        .def_property_readonly("dim", &OPoint::dim);

    py::class_<IntersectionData>(m, "IntersectionData")
        .def_readonly("reduction", &IntersectionData::reduction)
        .def_readonly("multiplicity", &IntersectionData::multiplicity)
        .def_readonly("unit_residue", &IntersectionData::unit_residue)
        .def("__repr__", &IntersectionData::to_string);

    m.def("eval_poly", [](const std::string& f, int dim, const OPoint& x) {
        return eval_poly(Poly::parse(f, dim), x);
    });
    m.def("multiplicity", &multiplicity);
    m.def("intersection_data", &intersection_data);
    m.def("strong_equiv", &strong_equiv);
    m.def("ideal_equality_a1", &ideal_equality_a1);

    py::class_<ClassExpr>(m, "ClassExpr")
        .def_static("parse", &ClassExpr::parse, py::arg("text"), py::arg("dim"), py::arg("p"))
        .def_property_readonly("order", &ClassExpr::order)
        .def("__repr__", &ClassExpr::to_string);

    m.def("evaluate", &evaluate);

    py::class_<Diagram4Report>(m, "Diagram4Report")
        .def_readonly("n", &Diagram4Report::n)
        .def_readonly("lhs", &Diagram4Report::lhs)
        .def_readonly("rhs", &Diagram4Report::rhs)
        .def_readonly("equal", &Diagram4Report::equal)
        .def_readonly("contributions", &Diagram4Report::contributions);

    py::class_<ResidueDescriptor>(m, "ResidueDescriptor")
        .def_readonly("component", &ResidueDescriptor::component)
        .def_readonly("n", &ResidueDescriptor::n)
        .def_readonly("a", &ResidueDescriptor::a)
        .def_readonly("b", &ResidueDescriptor::b)
        .def("__repr__", &ResidueDescriptor::function_string);

    m.def("residues", &residues);
    m.def("pullback_residue", &pullback_residue);
    m.def("check_diagram_4", &check_diagram_4);
    m.def("spanning_classes", &spanning_classes);

    py::class_<Theorem01Entry>(m, "Theorem01Entry")
        .def_readonly("class_name", &Theorem01Entry::class_name)
        .def_readonly("inv1", &Theorem01Entry::inv1)
        .def_readonly("inv2", &Theorem01Entry::inv2)
        .def_readonly("equal", &Theorem01Entry::equal);

    py::class_<Theorem01Report>(m, "Theorem01Report")
        .def_readonly("strong_equivalent", &Theorem01Report::strong_equivalent)
        .def_readonly("entries", &Theorem01Report::entries)
        .def_readonly("violations", &Theorem01Report::violations);

    m.def("theorem_0_1_check", &theorem_0_1_check);

    m.def("smith_normal_form", [](const std::vector<std::vector<long>>& rows) {
        SnfResult r = smith_normal_form(matrix_from_rows(rows));
        return py::make_tuple(matrix_to_rows(r.u), matrix_to_rows(r.d), matrix_to_rows(r.v));
    });

    py::class_<FinAbGroup>(m, "FinAbGroup")
        .def(py::init<std::vector<long>, long>(), py::arg("invariant_factors"), py::arg("free_rank") = 0)
        .def_property_readonly("invariant_factors", &FinAbGroup::invariant_factors)
        .def_property_readonly("free_rank", &FinAbGroup::free_rank)
        .def("is_trivial", &FinAbGroup::is_trivial)
        .def("order", [](const FinAbGroup& g) { return mpz_to_long(g.order()); })
        .def("__eq__", &FinAbGroup::operator==)
        .def("__repr__", &FinAbGroup::to_string);

    m.def("hom_kernel", [](const FinAbGroup& src, const FinAbGroup& tgt,
                           const std::vector<std::vector<long>>& rows) {
        return hom_kernel(GroupHom(src, tgt, matrix_from_rows(rows)));
    });
    m.def("hom_cokernel", [](const FinAbGroup& src, const FinAbGroup& tgt,
                             const std::vector<std::vector<long>>& rows) {
        return hom_cokernel(GroupHom(src, tgt, matrix_from_rows(rows)));
    });
    m.def("example_3_13_kernel", &example_3_13_kernel);

    m.def("leray_e2_orders", [](long n, long q, int crossings, int crossing_degree) {
        std::vector<SncComponent> comps{{"V(p)", 1}, {"V(f)", 1}};
        std::vector<SncCrossing> xs;
        for (int i = 0; i < crossings; ++i) xs.push_back({0, 1, crossing_degree});
        LerayOrders orders = leray_e2_orders(comps, xs, n, q);
        py::dict out;
        out["e2_02"] = mpz_to_long(orders.e2_02);
        out["e2_20"] = mpz_to_long(orders.e2_20);
        out["e2_21"] = mpz_to_long(orders.e2_21);
        out["e2_30"] = mpz_to_long(orders.e2_30);
        return out;
    },
          py::arg("n"), py::arg("q"), py::arg("crossings") = 1, py::arg("crossing_degree") = 1);

    py::class_<Question1Report>(m, "Question1Report")
        .def_readonly("p", &Question1Report::p)
        .def_readonly("n", &Question1Report::n)
        .def_readonly("g", &Question1Report::g)
        .def_readonly("kernel", &Question1Report::kernel)
        .def_readonly("injective", &Question1Report::injective)
        .def_readonly("surjective", &Question1Report::surjective)
        .def_readonly("isomorphism", &Question1Report::isomorphism);

    m.def("question_1_probe", &question_1_probe, py::arg("p"), py::arg("n"),
          py::arg("residue_degree") = 1);

    m.def("run_scenario", [](const std::string& subcommand, const std::string& text,
                             std::optional<uint64_t> seed, std::optional<int> precision,
                             std::optional<long> samples) {
        Scenario sc = parse_scenario(text);
        RunOptions opts;
        opts.seed = seed;
        opts.precision = precision;
        opts.samples = samples;
        RunResult r = run(subcommand, sc, opts);
        return py::make_tuple(r.report, r.exit_code);
    },
          py::arg("subcommand"), py::arg("scenario_text"), py::arg("seed") = std::nullopt,
          py::arg("precision") = std::nullopt, py::arg("samples") = std::nullopt);

    m.def("run_repro", [](const std::string& name) {
        RunResult r = run_repro(name, RunOptions{});
        return py::make_tuple(r.report, r.exit_code);
    });
}
