#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dclust {

using Index = std::int64_t;

constexpr std::int32_t kOutlier = -1;
constexpr double kPInf = std::numeric_limits<double>::infinity();

enum class Metric { euclidean, explicit_matrix };

// A cluster center or free point. id >= 0 ties it to a dataset point
// (mandatory in explicit-matrix mode); id < 0 marks a free euclidean point.
struct Point {
  Index id = -1;
  std::vector<double> coords;
};

// Point set with ids dense in [0, n). Euclidean mode stores row-major
// coordinates; explicit-matrix mode stores the full n x n distance matrix,
// validated on construction (symmetric, nonnegative, zero diagonal,
// triangle inequality: exhaustive for n <= 512, sampled above).
class Dataset {
 public:
  static Dataset euclidean(std::size_t d, std::vector<double> coords);
  static Dataset euclidean(const std::vector<std::vector<double>>& points);
  static Dataset from_matrix(const std::vector<std::vector<double>>& m);

  Metric metric() const { return metric_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }

  std::span<const double> coords_of(Index u) const;
  Point point(Index u) const;

  double distance(Index u, Index v) const;
  double distance_to(Index u, const Point& c) const;
  double point_distance(const Point& a, const Point& b) const;

  const std::vector<double>& raw_coords() const { return coords_; }

 private:
  Metric metric_ = Metric::euclidean;
  std::size_t n_ = 0, d_ = 0;
  std::vector<double> coords_;  // n*d, euclidean
  std::vector<double> matrix_;  // n*n, explicit
  void check_id(Index u) const;
};

struct WeightedEntry {
  Point point;
  std::int64_t weight = 1;
};

// Weighted summary of (part of) a dataset; entries reference the metric of
// the originating Dataset for distance lookups.
struct WeightedPointSet {
  std::vector<WeightedEntry> entries;
  std::int64_t total_weight() const;
};

WeightedPointSet unit_weighted(const Dataset& ds);
WeightedPointSet unit_weighted(const Dataset& ds, std::span<const Index> ids);
void validate_weighted(const WeightedPointSet& w, const Dataset& ds);

struct Clustering {
  std::vector<Point> centers;
  std::vector<std::int32_t> assignment;  // per id: [0, k) or kOutlier
  double p = 2.0;
  std::int64_t z_declared = 0;

  std::int64_t k() const { return static_cast<std::int64_t>(centers.size()); }
  std::int64_t outlier_count() const;
};

struct CostReport {
  double cost = 0.0;
  double power_sum = 0.0;  // sum of d^p over non-outliers; equals cost for p = inf
  bool empty_nonoutlier = false;
  bool centers_from_data = true;
};

CostReport evaluate_cost(const Dataset& ds, const Clustering& c);
double lp_cost(const Dataset& ds, const Clustering& c);
// cost(C)^p, the un-rooted sum; identical to lp_cost for p = inf.
double power_mean_cost(const Dataset& ds, const Clustering& c);

// min over label permutations of sum_i |C_i \ C'_sigma(i)| / n; outliers form
// a distinguished class matched only to itself. Throws on mismatched id sets.
double closeness_error(const Clustering& a, const Clustering& b, std::int64_t n);

std::int32_t nearest_center(const Dataset& ds, Index v,
                            std::span<const Point> centers,
                            double* dist = nullptr);

// Nearest-center assignment with the z largest point costs dropped as
// outliers (ties: larger distance first, then lower id).
Clustering induced_clustering(const Dataset& ds, std::vector<Point> centers,
                              double p, std::int64_t z = 0);

// Solution over a weighted point set. Outliers are tracked at unit
// granularity: outlier_units[e] of entry e's weight are dropped from the
// objective (a weighted entry is a stack of identical unit points).
struct WeightedAssignment {
  std::vector<Point> centers;
  std::vector<std::int32_t> label;          // per entry; kOutlier if fully dropped
  std::vector<std::int64_t> outlier_units;  // per entry, in [0, weight]
  double p = 1.0;
};

CostReport weighted_cost(const Dataset& ds, const WeightedPointSet& in,
                         const WeightedAssignment& wa);

// Declared factors of a pluggable sequential subroutine.
struct AlgorithmProfile {
  std::string name;
  double center_factor = 1.0;  // gamma or delta
  double ratio = 1.0;          // alpha or beta, declared or measured
  bool handles_weights = false;
  bool handles_outliers = false;
  bool handles_capacity = false;
};

namespace detail {

// Square min-cost assignment (Hungarian); returns column for each row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

std::int64_t ceil_log2(std::int64_t v);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace detail

}  // namespace dclust
