#pragma once

#include <string>
#include <vector>

#include "lgm/laurent.hpp"
#include "lgm/numeric.hpp"

namespace lgm::wci {

// Smooth well-formedness is the caller's business; this type only enforces
// the numeric shape: positive weights, every degree >= 2, positive index.
struct WeightedCIModel {
  std::vector<long long> weights;  // a_0..a_N
  std::vector<long long> degrees;  // d_1..d_k

  long long weight_sum() const;
  long long degree_sum() const;
  long long index() const;  // d_0 = sum(a) - sum(d), always >= 1 here
  int dim() const;          // N - k
  bool operator==(const WeightedCIModel& o) const {
    return weights == o.weights && degrees == o.degrees;
  }
};

WeightedCIModel make_model(std::vector<long long> weights,
                           std::vector<long long> degrees);

// Partition of the weight indices into I_0 (pencil part, sums to the index)
// and I_1..I_k (one per degree, part i sums to d_i). Each part lists its
// distinguished element first, then the variable slots ascending by
// (weight, index). Partitions are enumerated up to permutation of equal
// weights within parts.
struct NefPartition {
  std::vector<std::vector<int>> parts;
  bool nice = false;    // I_0 owns a unit weight (its distinguished element)
  bool strong = false;  // nice, unit non-distinguished I_0 weights, and every
                        // weight in part i >= 1 divides d_i
};

// All partition classes in a fixed deterministic order. Empty when none
// exist. Models with more than max_weights weights exceed the search cap.
std::vector<NefPartition> find_nef_partitions(const WeightedCIModel& model,
                                              int max_weights = 20);

// Variable slot bookkeeping shared by the polynomial, the matrix and the
// pencil: slots of parts 1..k first, then the I_0 slots; inside a part,
// ascending (weight, index).
struct VarSlot {
  int part;       // 0..k, matching NefPartition::parts
  int index;      // index into weights
  long long weight;
};
std::vector<VarSlot> variable_slots(const WeightedCIModel& model,
                                    const NefPartition& p);

// Product over parts i>=1 of (1 + sum of part-i slot variables)^{d_i},
// divided by the product over all slots of x^{weight}, plus the sum of the
// I_0 slot variables. Requires a nice partition (the distinguished I_0
// element, weight 1, is the pencil variable and is set to 1).
laurent::LaurentPolynomial givental_polynomial(const WeightedCIModel& model,
                                               const NefPartition& p);

// prod_{r=0..k} (d_r u)! / prod_{s=0..N} (a_s u)!  with d_0 = index.
Rat closed_form_period(const WeightedCIModel& model, long long u);

// Sequence of length n_terms with closed_form_period(model, j) at position
// d_0 * j and zeros elsewhere.
std::vector<Rat> iseries(const WeightedCIModel& model, int n_terms);

// Rows spanning the polytope dual to the Newton polytope of the Givental
// polynomial: for each part i>=1 a slot-diagonal block i_X/a_{ij} plus one
// row repeating -i_X/a_{i0} across the part, all carrying -1 in every I_0
// column; then one row per I_0 slot with i_X/a_{0j} - 1 on the diagonal and
// -1 elsewhere in the I_0 block. Requires a nice partition.
std::vector<std::vector<Rat>> dual_matrix(const WeightedCIModel& model,
                                          const NefPartition& p);

// Count of weights equal to 1. Index-one models only; anything else is an
// unsupported configuration.
long long anticanonical_sections(const WeightedCIModel& model);

// m_i = |I_i| - 1 for i = 1..k: the factor dimensions of the ambient product.
std::vector<long long> ambient_factors(const NefPartition& p);

// a-to-1 cover of P^alpha branched in degree a*d, alpha = (a-1)d: degree a*d
// hypersurface with weights (1,...,1,d), alpha+1 ones.
struct CoveringModel {
  long long a = 0;
  long long d = 0;
  WeightedCIModel model;
};
CoveringModel covering_model(long long a, long long d);

// The covering family has exactly one partition class; this returns it.
NefPartition covering_partition(const CoveringModel& c);

}  // namespace lgm::wci
