#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbl/localfield.hpp"
#include "tbl/polynomial.hpp"

namespace tbl {

/**
 * X = affine d-space over Z_p with boundary divisor Z given by horizontal
 * components V(f_i) and, when include_vertical is set, the vertical
 * component V(p).  Horizontal polynomials must be nonzero with content prime
 * to p; in dimension 1 they are additionally checked to be squarefree mod p
 * (a desk-scale stand-in for the reducedness of Z).
 *
 * Components are indexed horizontally first (0..h-1), with the vertical
 * component last when present.
 */
class SchemeModel {
  public:
    SchemeModel(long p, int dim, std::vector<Poly> horizontal, bool include_vertical);

    long p() const { return p_; }
    int dim() const { return dim_; }
    const std::vector<Poly>& horizontal() const { return horizontal_; }
    bool include_vertical() const { return include_vertical_; }

    int component_count() const {
        return static_cast<int>(horizontal_.size()) + (include_vertical_ ? 1 : 0);
    }
    bool is_vertical(int i) const {
        return include_vertical_ && i == static_cast<int>(horizontal_.size());
    }
    std::string component_label(int i) const;

    bool operator==(const SchemeModel& rhs) const;

  private:
    long p_;
    int dim_;
    std::vector<Poly> horizontal_;
    bool include_vertical_;
};

/** A point of X(O_v): coordinates with nonnegative valuation. */
class OPoint {
  public:
    explicit OPoint(std::vector<PAdic> coords);

    const std::vector<PAdic>& coords() const { return coords_; }
    long p() const { return coords_.front().p(); }
    int dim() const { return static_cast<int>(coords_.size()); }
    int precision() const;

  private:
    std::vector<PAdic> coords_;
};

/**
 * The computable proxy for cl(Z \cap x): the reduction of x together with,
 * for every boundary component, the intersection multiplicity m_i and (for
 * horizontal components) the unit residue r_i of f_i at the point.  The r_i
 * depend on the chosen defining polynomials; since strong equivalence also
 * fixes the reduction, rescaling f_i by a unit changes both sides of any
 * comparison by the same factor.
 */
struct IntersectionData {
    std::vector<long> reduction;           // coordinates of x mod p
    std::vector<long> multiplicity;        // per component
    std::vector<std::optional<long>> unit_residue; // per component; horizontal only

    std::string to_string() const;
};

PAdic eval_poly(const Poly& f, const OPoint& x);

// ord_v(f_i(u)); 1 for the vertical component.  PointOnBoundaryGenerically
// when f_i(u) is exactly zero or indistinguishable from zero at the working
// precision.
long multiplicity(const SchemeModel& model, int component, const OPoint& x);

IntersectionData intersection_data(const SchemeModel& model, const OPoint& x);

// Proxy equality: equal reductions, multiplicities and unit residues.
// Both data must come from the same model.
bool strong_equiv(const IntersectionData& d1, const IntersectionData& d2);

// Ideal criterion on the affine line: (pX, X - u1) = (pX, X - u2),
// i.e. u1 = u2 mod p^(l+1) with l the common valuation.
bool ideal_equality_a1(const PAdic& u1, const PAdic& u2);

} // namespace tbl
