#pragma once

#include <string>
#include <vector>

#include "lgm/laurent.hpp"
#include "lgm/numeric.hpp"

namespace lgm::polytope {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Facet inequality <normal, x> >= offset with primitive integer normal.
struct Facet {
  IntVec normal;
  Rat offset;
};

// Full-dimensional bounded rational polytope carrying both representations.
// Vertices are exactly the extreme points, ascending lexicographic; facets are
// irredundant, sorted by (normal, offset). Degenerate input (points that do
// not affinely span the ambient space) is an error, never a silent
// lower-dimensional answer.
class RationalPolytope {
 public:
  static RationalPolytope convex_hull(const std::vector<RatVec>& points);

  int dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RatVec& x) const;
  bool on_boundary(const RatVec& x) const;  // contained and tight on a facet
  bool is_integral() const;                 // all vertices integral

  // Cross-checks the two representations; throws on violation. Run by the
  // factory functions, public so tests can hammer it on derived polytopes.
  void validate() const;

 private:
  RationalPolytope() = default;
  friend RationalPolytope polar_dual(const RationalPolytope&);

  int dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Facet> facets_;
};

// {x : <x,y> >= -1 for all y in P}. Requires the origin strictly interior
// (every facet offset negative); vertices of the dual are the facet normals
// of P scaled so the offset becomes -1, and the facets of the dual come from
// the vertices of P.
RationalPolytope polar_dual(const RationalPolytope& p);

// P and its polar dual both integral. Same interiority precondition.
bool is_reflexive(const RationalPolytope& p);

// Integer points of P (respectively of its boundary), ascending
// lexicographic. Bounding-box scan filtered by the facet inequalities.
std::vector<IntVec> integral_points(const RationalPolytope& p);
std::vector<IntVec> integral_boundary_points(const RationalPolytope& p);

// Convex hull of the support exponents. Zero polynomial or a support that
// does not span are errors.
RationalPolytope newton_polytope(const laurent::LaurentPolynomial& f);

// Sum of one monomial per ray, coefficient 1. Rays must be distinct primitive
// integer vectors of equal dimension.
laurent::LaurentPolynomial givental_toric_polynomial(const std::vector<IntVec>& rays);

}  // namespace lgm::polytope
