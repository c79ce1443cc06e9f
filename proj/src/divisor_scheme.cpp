#include "tbl/divisor_scheme.hpp"

#include <sstream>

namespace tbl {

SchemeModel::SchemeModel(long p, int dim, std::vector<Poly> horizontal, bool include_vertical)
    : p_(p), dim_(dim), horizontal_(std::move(horizontal)), include_vertical_(include_vertical) {
    if (!is_prime(p_)) fail(ErrorCode::NotPrime, "p = " + std::to_string(p_) + " is not prime");
    if (dim_ < 1) fail(ErrorCode::InvalidModel, "dimension must be >= 1");
    for (const Poly& f : horizontal_) {
        if (f.dim() != dim_) fail(ErrorCode::InvalidModel, "boundary polynomial dimension mismatch");
        if (f.is_zero()) fail(ErrorCode::InvalidModel, "boundary polynomial is zero");
        mpz_class c = f.content();
        if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p_)))
            fail(ErrorCode::InvalidModel,
                 "boundary polynomial " + f.to_string() + " has content divisible by p");
        if (f.is_constant())
            fail(ErrorCode::InvalidModel, "boundary polynomial " + f.to_string() + " is constant");
        if (dim_ == 1 && !squarefree_mod_p(f, p_))
            fail(ErrorCode::InvalidModel,
                 "boundary polynomial " + f.to_string() + " is not squarefree mod " + std::to_string(p_));
    }
}

std::string SchemeModel::component_label(int i) const {
    if (is_vertical(i)) return "V(" + std::to_string(p_) + ")";
    return "V(" + horizontal_.at(i).to_string() + ")";
}

bool SchemeModel::operator==(const SchemeModel& rhs) const {
    if (p_ != rhs.p_ || dim_ != rhs.dim_ || include_vertical_ != rhs.include_vertical_) return false;
    if (horizontal_.size() != rhs.horizontal_.size()) return false;
    for (size_t i = 0; i < horizontal_.size(); ++i)
        if (!(horizontal_[i] == rhs.horizontal_[i])) return false;
    return true;
}

OPoint::OPoint(std::vector<PAdic> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) fail(ErrorCode::ValidationError, "point needs at least one coordinate");
    for (const PAdic& c : coords_) {
        if (c.p() != coords_.front().p()) fail(ErrorCode::ValidationError, "mixed primes in point");
        if (!c.is_zero() && c.valuation() < 0)
            fail(ErrorCode::ValidationError, "point coordinate has negative valuation");
    }
}

int OPoint::precision() const {
    int n = coords_.front().precision();
    for (const PAdic& c : coords_) n = std::min(n, c.precision());
    return n;
}

PAdic eval_poly(const Poly& f, const OPoint& x) {
    return f.eval(x.coords(), x.p(), x.precision());
}

long multiplicity(const SchemeModel& model, int component, const OPoint& x) {
    if (component < 0 || component >= model.component_count())
        fail(ErrorCode::ValidationError, "component index out of range");
    if (model.is_vertical(component)) return 1;
    PAdic value = [&] {
        try {
            return eval_poly(model.horizontal()[component], x);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::PrecisionExhausted)
                fail(ErrorCode::PointOnBoundaryGenerically,
                     "f_" + std::to_string(component) + "(u) indistinguishable from zero: " + e.what());
            throw;
        }
    }();
    if (value.is_zero())
        fail(ErrorCode::PointOnBoundaryGenerically,
             "point lies on boundary component " + model.component_label(component));
    return value.valuation();
}

IntersectionData intersection_data(const SchemeModel& model, const OPoint& x) {
    if (x.p() != model.p()) fail(ErrorCode::ValidationError, "point prime differs from model prime");
    if (x.dim() != model.dim()) fail(ErrorCode::ValidationError, "point dimension differs from model");

    IntersectionData data;
    for (const PAdic& c : x.coords())
        data.reduction.push_back(c.is_zero() || c.valuation() > 0 ? 0 : c.unit_residue());

    int h = static_cast<int>(model.horizontal().size());
    for (int i = 0; i < h; ++i) {
        PAdic value = [&] {
            try {
                return eval_poly(model.horizontal()[i], x);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::PrecisionExhausted)
                    fail(ErrorCode::PointOnBoundaryGenerically,
                         "f_" + std::to_string(i) + "(u) indistinguishable from zero: " + e.what());
                throw;
            }
        }();
        if (value.is_zero())
            fail(ErrorCode::PointOnBoundaryGenerically,
                 "point lies on boundary component " + model.component_label(i));
        data.multiplicity.push_back(value.valuation());
        data.unit_residue.push_back(value.unit_residue());
    }
    if (model.include_vertical()) {
        data.multiplicity.push_back(1);
        data.unit_residue.push_back(std::nullopt);
    }
    return data;
}

bool strong_equiv(const IntersectionData& d1, const IntersectionData& d2) {
    return d1.reduction == d2.reduction && d1.multiplicity == d2.multiplicity &&
           d1.unit_residue == d2.unit_residue;
}

bool ideal_equality_a1(const PAdic& u1, const PAdic& u2) {
    if (u1.is_zero() || u2.is_zero()) fail(ErrorCode::ExactZero, "ideal comparison at exact zero");
    if (u1.valuation() < 0 || u2.valuation() < 0)
        fail(ErrorCode::ValidationError, "ideal comparison requires integral points");

    long l1 = u1.valuation();
    bool congruent;
    try {
        PAdic diff = u1 - u2;
        congruent = diff.is_zero() || diff.valuation() >= l1 + 1;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PrecisionExhausted) throw;
        // cancellation exceeded the tracked digits: the difference already
        // has valuation >= min valuation + 1 >= l1 + 1
        congruent = true;
    }

    bool via_units = (u1.valuation() == u2.valuation()) && unit_class_equal(u1, u2);
    if (congruent != via_units)
        fail(ErrorCode::Internal, "ideal-equality routes disagree");
    return congruent;
}

std::string IntersectionData::to_string() const {
    std::ostringstream os;
    os << "xbar=(";
    for (size_t i = 0; i < reduction.size(); ++i) {
        if (i) os << ",";
        os << reduction[i];
    }
    os << ")";
    for (size_t i = 0; i < multiplicity.size(); ++i) {
        os << " m" << i << "=" << multiplicity[i];
        if (unit_residue[i]) os << " r" << i << "=" << *unit_residue[i];
    }
    return os.str();
}

} // namespace tbl
