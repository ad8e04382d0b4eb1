#pragma once

// Exact rational polyhedral queries backed by a small simplex solver.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace rootqca {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

/// Some x >= 0 with A x = b, or nullopt. Phase-I simplex, Bland's rule.
std::optional<QVec> lp_feasible(const QMat& A, const QVec& b);

/// Maximize c.x subject to A x = b, x >= 0. nullopt when infeasible;
/// `unbounded` set when the objective has no upper bound.
struct LpResult {
  bool feasible = false;
  bool unbounded = false;
  mpq_class value;
  QVec x;
};
LpResult lp_maximize(const QMat& A, const QVec& b, const QVec& c);

using IVec = std::vector<long>;

/// p lies in the convex hull of pts.
bool in_convex_hull(const std::vector<IVec>& pts, const IVec& p);
/// Subset of pts that are vertices of their convex hull.
std::vector<IVec> hull_vertices(const std::vector<IVec>& pts);

/// p is a nonnegative rational combination of gens.
bool in_cone(const std::vector<IVec>& gens, const IVec& p);
/// Generators spanning extreme rays of a pointed cone, primitive, deduplicated.
std::vector<IVec> extreme_rays(const std::vector<IVec>& gens);
/// Generators g with -g also in the cone.
std::vector<IVec> lineality_generators(const std::vector<IVec>& gens);
/// Integer w with w.g >= 1 for every nonzero generator g, if the cone is pointed.
std::optional<IVec> pointed_witness(const std::vector<IVec>& gens);

/// Halfspace cone {x : forms[i].x >= 0}. True iff it contains a nonzero x with extra.x > 0.
bool cone_has_positive(const std::vector<IVec>& forms, const IVec& extra);
/// True iff the cone {forms >= 0, extra.x == 0} is {0}.
bool cone_face_trivial(const std::vector<IVec>& forms, const IVec& extra);

IVec primitive(const IVec& v);

}  // namespace rootqca
