#include "lgm/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>

#include "lgm/errors.hpp"

namespace lgm::polytope {

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = rat_ll(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row rank over Q by Gaussian elimination. Rows are consumed.
int rank_of(std::vector<RatVec> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size());
       ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Scales a nonzero rational vector by a positive factor to a primitive
// integer vector; returns the vector and the factor applied.
std::pair<IntVec, Rat> primitive_scale(const RatVec& v) {
  Int denom_lcm = 1;
  for (const auto& x : v)
    denom_lcm = boost::multiprecision::lcm(denom_lcm, rat_den(x));
  IntVec scaled;
  Int common = 0;
  for (const auto& x : v) {
    Int entry = rat_num(x) * (denom_lcm / rat_den(x));
    common = boost::multiprecision::gcd(common, entry);
    scaled.push_back(entry);
  }
  if (common == 0) throw InvalidInput("cannot scale the zero vector");
  for (auto& e : scaled) e /= common;
  return {scaled, make_rat(denom_lcm, common)};
}

// Tight-constraint bitsets for the double description rays.
struct Bits {
  std::vector<std::uint64_t> blocks;

  explicit Bits(size_t n) : blocks((n + 63) / 64, 0) {}
  void set(size_t i) { blocks[i / 64] |= std::uint64_t(1) << (i % 64); }
  bool subset_of(const Bits& o) const {
    for (size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b] & ~o.blocks[b]) return false;
    return true;
  }
  static Bits intersect(const Bits& a, const Bits& b) {
    Bits out(0);
    out.blocks.resize(a.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i)
      out.blocks[i] = a.blocks[i] & b.blocks[i];
    return out;
  }
};

struct Ray {
  RatVec vec;
  Bits tight;
};

void make_ray_primitive(RatVec& v) {
  IntVec ints = primitive_scale(v).first;
  for (size_t i = 0; i < v.size(); ++i) v[i] = rat_int(ints[i]);
}

// Double description of the polar cone {y : <a_i, y> >= 0} of the
// homogenization cone, a_i = (1, p_i). The lineality space shrinks as
// constraints arrive; the input spans iff it ends empty, and the surviving
// extreme rays are exactly the facets of conv(p_i).
std::vector<RatVec> polar_cone_rays(const std::vector<RatVec>& points) {
  size_t n = points[0].size();
  size_t hdim = n + 1;
  size_t m = points.size();

  std::vector<RatVec> lineality;
  for (size_t i = 0; i < hdim; ++i) {
    RatVec e(hdim, rat_ll(0));
    e[i] = rat_ll(1);
    lineality.push_back(e);
  }
  std::vector<Ray> rays;

  for (size_t ci = 0; ci < m; ++ci) {
    RatVec a(hdim, rat_ll(0));
    a[0] = rat_ll(1);
    for (size_t j = 0; j < n; ++j) a[j + 1] = points[ci][j];

    size_t pivot = lineality.size();
    for (size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) {
        pivot = i;
        break;
      }

    if (pivot < lineality.size()) {
      RatVec l0 = lineality[pivot];
      Rat d0 = dot(a, l0);
      lineality.erase(lineality.begin() + pivot);
      for (auto& l : lineality) {
        Rat d = dot(a, l);
        if (d == 0) continue;
        for (size_t j = 0; j < hdim; ++j) l[j] -= (d / d0) * l0[j];
      }
      for (auto& r : rays) {
        Rat d = dot(a, r.vec);
        if (d != 0)
          for (size_t j = 0; j < hdim; ++j) r.vec[j] -= (d / d0) * l0[j];
        make_ray_primitive(r.vec);
        r.tight.set(ci);
      }
      Ray fresh{l0, Bits(m)};
      if (d0 < 0)
        for (auto& x : fresh.vec) x = -x;
      make_ray_primitive(fresh.vec);
      for (size_t prev = 0; prev < ci; ++prev) fresh.tight.set(prev);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rat> value(rays.size());
    bool any_negative = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].vec);
      if (value[i] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].tight.set(ci);
      continue;
    }

    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0) continue;
      Ray keep = rays[i];
      if (value[i] == 0) keep.tight.set(ci);
      next.push_back(std::move(keep));
    }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        Bits common = Bits::intersect(rays[p].tight, rays[q].tight);
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && common.subset_of(rays[o].tight))
            adjacent = false;
        if (!adjacent) continue;
        Ray combo{RatVec(hdim), common};
        for (size_t j = 0; j < hdim; ++j)
          combo.vec[j] = value[p] * rays[q].vec[j] - value[q] * rays[p].vec[j];
        make_ray_primitive(combo.vec);
        combo.tight.set(ci);
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
  }

  if (!lineality.empty())
    throw InvalidInput("points do not affinely span the ambient space");

  std::vector<RatVec> out;
  for (auto& r : rays) out.push_back(std::move(r.vec));
  return out;
}

Facet facet_from_ray(const RatVec& ray) {
  RatVec normal_part(ray.begin() + 1, ray.end());
  bool zero = true;
  for (const auto& x : normal_part)
    if (x != 0) zero = false;
  if (zero)
    throw InvalidInput("unbounded direction in a convex hull computation");
  auto [normal, scale] = primitive_scale(normal_part);
  return {normal, -(scale * ray[0])};
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

Rat facet_eval(const Facet& f, const RatVec& x) {
  Rat s = rat_ll(0);
  for (size_t i = 0; i < x.size(); ++i) s += rat_int(f.normal[i]) * x[i];
  return s;
}

}  // namespace

RationalPolytope RationalPolytope::convex_hull(const std::vector<RatVec>& input) {
  if (input.empty()) throw InvalidInput("convex hull of no points");
  size_t n = input[0].size();
  if (n == 0) throw InvalidInput("zero-dimensional ambient space");
  for (const auto& p : input)
    if (p.size() != n) throw InvalidInput("points of mixed dimension");

  std::vector<RatVec> points = input;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Facet> facets;
  for (const auto& ray : polar_cone_rays(points))
    facets.push_back(facet_from_ray(ray));
  std::sort(facets.begin(), facets.end(), facet_less);

  RationalPolytope out;
  out.dim_ = static_cast<int>(n);
  out.facets_ = std::move(facets);
  for (const auto& p : points) {
    std::vector<RatVec> tight_normals;
    for (const auto& f : out.facets_)
      if (facet_eval(f, p) == f.offset) {
        RatVec row;
        for (const auto& c : f.normal) row.push_back(rat_int(c));
        tight_normals.push_back(std::move(row));
      }
    if (rank_of(std::move(tight_normals)) == out.dim_)
      out.vertices_.push_back(p);
  }
  out.validate();
  return out;
}

bool RationalPolytope::contains(const RatVec& x) const {
  if (x.size() != static_cast<size_t>(dim_))
    throw InvalidInput("point of wrong dimension");
  for (const auto& f : facets_)
    if (facet_eval(f, x) < f.offset) return false;
  return true;
}

bool RationalPolytope::on_boundary(const RatVec& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets_)
    if (facet_eval(f, x) == f.offset) return true;
  return false;
}

bool RationalPolytope::is_integral() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (!is_integer(c)) return false;
  return true;
}

void RationalPolytope::validate() const {
  auto violated = [](const std::string& what) {
    throw InvalidInput("polytope invariant violated: " + what);
  };
  if (dim_ < 1) violated("dimension");
  if (vertices_.size() < static_cast<size_t>(dim_) + 1) violated("vertex count");
  if (facets_.size() < static_cast<size_t>(dim_) + 1) violated("facet count");
  for (size_t i = 1; i < vertices_.size(); ++i)
    if (!(vertices_[i - 1] < vertices_[i])) violated("vertex order");
  for (size_t i = 1; i < facets_.size(); ++i)
    if (!facet_less(facets_[i - 1], facets_[i])) violated("facet order");

  for (const auto& f : facets_) {
    Int g = 0;
    for (const auto& c : f.normal) g = boost::multiprecision::gcd(g, c);
    if (g != 1) violated("facet normal not primitive");

    std::vector<RatVec> tangent;
    const RatVec* base = nullptr;
    for (const auto& v : vertices_) {
      Rat lhs = facet_eval(f, v);
      if (lhs < f.offset) violated("vertex outside a facet");
      if (lhs != f.offset) continue;
      if (!base) {
        base = &v;
        continue;
      }
      RatVec diff;
      for (size_t j = 0; j < v.size(); ++j) diff.push_back(v[j] - (*base)[j]);
      tangent.push_back(std::move(diff));
    }
    if (!base || rank_of(std::move(tangent)) != dim_ - 1)
      violated("facet is not spanned by tight vertices");
  }

  for (const auto& v : vertices_) {
    std::vector<RatVec> tight;
    for (const auto& f : facets_)
      if (facet_eval(f, v) == f.offset) {
        RatVec row;
        for (const auto& c : f.normal) row.push_back(rat_int(c));
        tight.push_back(std::move(row));
      }
    if (rank_of(std::move(tight)) != dim_) violated("vertex is not extreme");
  }
}

RationalPolytope polar_dual(const RationalPolytope& p) {
  for (const auto& f : p.facets())
    if (!(f.offset < 0))
      throw OriginNotInterior(
          "polar dual requires the origin strictly inside the polytope");

  RationalPolytope out;
  out.dim_ = p.dim();
  for (const auto& f : p.facets()) {
    RatVec v;
    for (const auto& c : f.normal) v.push_back(rat_int(c) / -f.offset);
    out.vertices_.push_back(std::move(v));
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  for (const auto& v : p.vertices()) {
    auto [normal, scale] = primitive_scale(v);
    out.facets_.push_back({std::move(normal), -scale});
  }
  std::sort(out.facets_.begin(), out.facets_.end(), facet_less);
  out.validate();
  return out;
}

bool is_reflexive(const RationalPolytope& p) {
  return p.is_integral() && polar_dual(p).is_integral();
}

namespace {

void scan_lattice(const RationalPolytope& p, bool boundary_only,
                  std::vector<IntVec>& out) {
  int n = p.dim();
  IntVec lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Rat min = p.vertices()[0][j], max = min;
    for (const auto& v : p.vertices()) {
      if (v[j] < min) min = v[j];
      if (v[j] > max) max = v[j];
    }
    lo[j] = rat_ceil(min);
    hi[j] = rat_floor(max);
  }
  IntVec point(n);
  RatVec rat_point(n);
  auto emit = [&](auto&& self, int j) -> void {
    if (j == n) {
      for (int k = 0; k < n; ++k) rat_point[k] = rat_int(point[k]);
      if (boundary_only ? p.on_boundary(rat_point) : p.contains(rat_point))
        out.push_back(point);
      return;
    }
    for (Int x = lo[j]; x <= hi[j]; ++x) {
      point[j] = x;
      self(self, j + 1);
    }
  };
  emit(emit, 0);
}

}  // namespace

std::vector<IntVec> integral_points(const RationalPolytope& p) {
  std::vector<IntVec> out;
  scan_lattice(p, false, out);
  return out;
}

std::vector<IntVec> integral_boundary_points(const RationalPolytope& p) {
  std::vector<IntVec> out;
  scan_lattice(p, true, out);
  return out;
}

RationalPolytope newton_polytope(const laurent::LaurentPolynomial& f) {
  if (f.is_zero())
    throw InvalidInput("newton polytope of the zero polynomial");
  std::vector<RatVec> points;
  for (const auto& e : f.support()) {
    RatVec p;
    for (auto x : e) p.push_back(rat_ll(x));
    points.push_back(std::move(p));
  }
  return RationalPolytope::convex_hull(points);
}

laurent::LaurentPolynomial givental_toric_polynomial(
    const std::vector<IntVec>& rays) {
  if (rays.empty()) throw InvalidInput("no fan rays");
  size_t n = rays[0].size();
  if (n == 0) throw InvalidInput("zero-dimensional fan rays");
  std::set<IntVec> seen;
  std::vector<laurent::Term> terms;
  for (const auto& r : rays) {
    if (r.size() != n) throw InvalidInput("fan rays of mixed dimension");
    Int g = 0;
    for (const auto& c : r) g = boost::multiprecision::gcd(g, c);
    if (g != 1) throw InvalidInput("fan ray is not primitive");
    if (!seen.insert(r).second) throw InvalidInput("duplicate fan ray");
    laurent::Exponents e;
    for (const auto& c : r) {
      if (c < std::numeric_limits<std::int64_t>::min() ||
          c > std::numeric_limits<std::int64_t>::max())
        throw InvalidInput("fan ray exponent out of range");
      e.push_back(static_cast<std::int64_t>(c));
    }
    terms.push_back({std::move(e), rat_ll(1)});
  }
  return laurent::LaurentPolynomial::from_terms(static_cast<int>(n),
                                                std::move(terms));
}

}  // namespace lgm::polytope
