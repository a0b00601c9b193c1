#pragma once

#include <vector>

#include "dclust/core.hpp"

namespace dclust::oracle {

// Exhaustive enumeration cap; larger candidate sets are refused outright.
constexpr std::size_t kMaxCandidates = 18;

constexpr double kTol = 1e-9;  // relative, for all oracle comparisons

struct OracleResult {
  Clustering clustering;
  double cost = 0.0;
  double power_sum = 0.0;
  bool centers_from_data = true;
};

// OPT_{k,z,p}(V): enumerate every k-subset of candidate centers, assign each
// point to its nearest chosen center, drop the z largest point costs as
// outliers, return the global minimizer. Subsets are scanned in
// lexicographic order and only strict improvements are kept, so the result
// is deterministic.
OracleResult brute_force_opt(const Dataset& ds, std::int64_t k, std::int64_t z, double p);

// OPT(A,B): points from `points`, centers from `center_candidates`.
OracleResult brute_force_opt(const Dataset& ds, std::span<const Index> points,
                             std::span<const Index> center_candidates, std::int64_t k,
                             std::int64_t z, double p);

struct LemmaCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// sum_i OPT_{k+z}(V_i)^p <= 2^p OPT_{k,z}^p (max-form for p = inf).
LemmaCheck check_local_opt_lemma(const Dataset& ds,
                                 const std::vector<std::vector<Index>>& partition,
                                 std::int64_t k, std::int64_t z, double p);

struct WeightedOracleResult {
  WeightedAssignment assignment;
  double cost = 0.0;
  double power_sum = 0.0;
};

// Exact optimum over a weighted point set with centers drawn from the
// entries. Given centers, dropping the z largest-cost units is optimal for
// the separable sum-of-d^p objective (exchange argument: swapping a kept
// unit of larger cost with a dropped unit of smaller cost never increases
// the sum), and for p = inf only whole-unit removal of the largest
// distances lowers the max; both reduce to greedy unit dropping.
WeightedOracleResult weighted_brute_force(const Dataset& ds, const WeightedPointSet& in,
                                          std::int64_t k, std::int64_t z, double p);

}  // namespace dclust::oracle
