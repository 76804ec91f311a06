#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgm/numeric.hpp"
#include "lgm/wci.hpp"

namespace lgm::pencil {

struct Component {
  std::string id;
  long long mult;
};

// Codimension-2 (and, on threefolds, codimension-3) pieces of the base set
// where the central fiber meets the boundary.
struct Stratum {
  enum class Kind { surface_point, threefold_curve, threefold_point };
  Kind kind;
  std::string id;                     // p1.., B0.., P01..
  std::string central_id;
  long long central_mult;             // M
  std::vector<std::string> inf_ids;   // one or, for threefold points, two
  std::vector<long long> inf_mults;   // matching; threefold points (p, q), p >= q
};

// The anticanonical pencil {numerator = lambda * denominator monomial} on the
// ambient product of projective spaces, before resolution: component lists of
// the fibers over 0 and infinity plus the base strata feeding the counting
// rules. Counting is enabled only for ambient dimension <= 3.
struct PencilModel {
  int ambient_dim = 0;
  std::vector<long long> factor_dims;
  std::vector<Component> central;
  std::vector<Component> infinity;
  std::vector<Stratum> strata;
  bool counting_enabled = false;
  std::optional<std::pair<long long, long long>> covering;  // (a, d) if built from one
};

// Requires an index-one model and a nice partition. Threefolds and higher
// with more than one central component are unsupported.
PencilModel compactified_pencil(const wci::WeightedCIModel& model,
                                const wci::NefPartition& p);
PencilModel compactified_pencil(const wci::CoveringModel& c);

// Resolving a stratum with central multiplicity M and one transverse boundary
// component of multiplicity m takes M/m blow-ups and leaves M/m - 1
// exceptional divisors in the central fiber. m must divide M.
struct CurveCount {
  long long blowups;
  long long exceptionals;
};
CurveCount curve_stratum_count(long long M, long long m);

// Threefold point stratum with boundary multiplicities (p, 1), p | M:
// sum over s = 1..M/p-1 of (M - s*p - 1) exceptional divisors over the point.
long long point_stratum_count_threefold(long long M, long long p);

struct Edge {
  std::string a;
  std::string b;
};

struct CentralReport {
  long long components = 0;
  // ("strict", k) first, then one entry per stratum id.
  std::vector<std::pair<std::string, long long>> breakdown;
  std::vector<long long> arms;  // surfaces: chain lengths, zero arms skipped
  std::string dynkin;           // "E6~" / "E7~" / "E8~" when the arms match
  std::vector<std::pair<std::string, long long>> nodes;  // id, multiplicity
  std::vector<Edge> edges;
};
CentralReport central_fiber_report(const PencilModel& pm);

struct InfinityReport {
  long long components = 0;           // multiplicity-1 components survive
  std::vector<std::string> contracted;  // mult s > 1: s blow-ups, then contracted
  bool singular = false;              // covering rule: a > 2 (ambient dim >= 3)
  std::string singularity_type;       // "1/(a-1)(1,...,1)" when singular
};
InfinityReport infinity_fiber_report(const PencilModel& pm);

// Three independently computed counts that the component conjecture predicts
// agree: surviving infinity components; integral boundary points of the polar
// dual of the Newton polytope; anticanonical sections minus one.
struct ComponentsCheck {
  std::vector<long long> routes;
  bool holds = false;
};
ComponentsCheck verify_conjecture_components(const wci::WeightedCIModel& model,
                                             const wci::NefPartition& p);

// kappa = central components - 1 against the supplied Hodge input
// (h^{1,1} - 1 on surfaces, h^{1,dim-1} from dimension 3 up).
struct HodgeCheck {
  long long kappa = 0;
  long long expected = 0;
  bool holds = false;
  std::string assumption;  // fixed wording, see implementation
  std::string note;        // surface normalization remark
};
HodgeCheck verify_conjecture_hodge(const PencilModel& pm, long long h_input);

struct LabeledRay {
  std::string label;  // v0..valpha, u1..ua
  std::vector<long long> vec;
};

// Rays of the resolved covering compactification fan in dimension alpha:
// v0..v_{alpha-1} the unit vectors, v_alpha all minus one, u_i = (i,1,0,..).
// Checks the contraction relation (a-1) v0 = u_a + v2 + ... + v_alpha.
std::vector<LabeledRay> covering_fan_rays(long long a, long long d);

enum class FlopVerdict { obstructed, not_obstructed, not_obstructed_by_certificate };

// Non-projectivity certificate: the hyperplane <c,x> = 1 with
// c = (alpha/(a-1), (a - alpha*a - 1)/(a-1), 1, ..., 1) must contain exactly
// v2..v_alpha and u_a. Applicable only for a > 2.
struct FlopCertificate {
  std::vector<Rat> hyperplane;
  std::vector<std::string> on_hyperplane;
  FlopVerdict verdict = FlopVerdict::not_obstructed;
};
FlopCertificate flop_obstruction(long long a, long long d);

}  // namespace lgm::pencil
