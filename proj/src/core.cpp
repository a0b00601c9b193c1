#include "dclust/core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dclust/kernels.hpp"

namespace dclust {

namespace {

void validate_matrix(const std::vector<double>& m, std::size_t n) {
  constexpr double tol = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m[i * n + i]) > tol)
      throw std::invalid_argument("explicit matrix: nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i * n + j] < 0)
        throw std::invalid_argument("explicit matrix: negative entry");
      if (std::abs(m[i * n + j] - m[j * n + i]) > tol)
        throw std::invalid_argument("explicit matrix: not symmetric");
    }
  }
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t l) {
    if (m[i * n + j] > m[i * n + l] + m[l * n + j] + tol)
      throw std::invalid_argument("explicit matrix: triangle inequality violated at (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(l) + ")");
  };
  if (n <= 512) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) check_triple(i, j, l);
  } else {
    std::mt19937_64 rng(12345);
    for (int s = 0; s < 2000000; ++s) {
      const std::size_t i = rng() % n, j = rng() % n, l = rng() % n;
      check_triple(i, j, l);
    }
  }
}

}  // namespace

Dataset Dataset::euclidean(std::size_t d, std::vector<double> coords) {
  if (d == 0) throw std::invalid_argument("dataset: dimension must be positive");
  if (coords.size() % d != 0) throw std::invalid_argument("dataset: coords size not divisible by d");
  Dataset ds;
  ds.metric_ = Metric::euclidean;
  ds.d_ = d;
  ds.n_ = coords.size() / d;
  ds.coords_ = std::move(coords);
  return ds;
}

Dataset Dataset::euclidean(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw std::invalid_argument("dataset: empty point list");
  const std::size_t d = points[0].size();
  std::vector<double> flat;
  flat.reserve(points.size() * d);
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("dataset: ragged coordinates");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return euclidean(d, std::move(flat));
}

Dataset Dataset::from_matrix(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("dataset: empty matrix");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("dataset: matrix not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  validate_matrix(flat, n);
  Dataset ds;
  ds.metric_ = Metric::explicit_matrix;
  ds.n_ = n;
  ds.d_ = 1;
  ds.matrix_ = std::move(flat);
  return ds;
}

void Dataset::check_id(Index u) const {
  if (u < 0 || static_cast<std::size_t>(u) >= n_)
    throw std::out_of_range("dataset: unknown id " + std::to_string(u));
}

std::span<const double> Dataset::coords_of(Index u) const {
  check_id(u);
  if (metric_ != Metric::euclidean)
    throw std::logic_error("dataset: coords_of on explicit-matrix dataset");
  return {coords_.data() + static_cast<std::size_t>(u) * d_, d_};
}

Point Dataset::point(Index u) const {
  check_id(u);
  Point p;
  p.id = u;
  if (metric_ == Metric::euclidean) {
    auto c = coords_of(u);
    p.coords.assign(c.begin(), c.end());
  }
  return p;
}

double Dataset::distance(Index u, Index v) const {
  check_id(u);
  check_id(v);
  if (metric_ == Metric::explicit_matrix)
    return matrix_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  if (u == v) return 0.0;
  return std::sqrt(kernels::sq_l2(coords_.data() + static_cast<std::size_t>(u) * d_,
                                  coords_.data() + static_cast<std::size_t>(v) * d_, d_));
}

double Dataset::distance_to(Index u, const Point& c) const {
  check_id(u);
  if (metric_ == Metric::explicit_matrix) {
    if (c.id < 0)
      throw std::logic_error("dataset: free point used as center in explicit-matrix mode");
    return distance(u, c.id);
  }
  if (c.coords.size() != d_)
    throw std::invalid_argument("dataset: center dimension mismatch");
  return std::sqrt(kernels::sq_l2(coords_.data() + static_cast<std::size_t>(u) * d_,
                                  c.coords.data(), d_));
}

double Dataset::point_distance(const Point& a, const Point& b) const {
  if (metric_ == Metric::explicit_matrix) {
    if (a.id < 0 || b.id < 0)
      throw std::logic_error("dataset: free point distance in explicit-matrix mode");
    return distance(a.id, b.id);
  }
  if (a.coords.size() != d_ || b.coords.size() != d_)
    throw std::invalid_argument("dataset: point dimension mismatch");
  return std::sqrt(kernels::sq_l2(a.coords.data(), b.coords.data(), d_));
}

std::int64_t WeightedPointSet::total_weight() const {
  std::int64_t w = 0;
  for (const auto& e : entries) w += e.weight;
  return w;
}

WeightedPointSet unit_weighted(const Dataset& ds) {
  WeightedPointSet w;
  w.entries.reserve(ds.n());
  for (std::size_t i = 0; i < ds.n(); ++i)
    w.entries.push_back({ds.point(static_cast<Index>(i)), 1});
  return w;
}

WeightedPointSet unit_weighted(const Dataset& ds, std::span<const Index> ids) {
  WeightedPointSet w;
  w.entries.reserve(ids.size());
  for (Index id : ids) w.entries.push_back({ds.point(id), 1});
  return w;
}

void validate_weighted(const WeightedPointSet& w, const Dataset& ds) {
  for (const auto& e : w.entries)
    if (e.weight < 1) throw std::invalid_argument("weighted set: weight < 1");
  if (w.total_weight() > static_cast<std::int64_t>(ds.n()))
    throw std::invalid_argument("weighted set: total weight exceeds dataset size");
}

std::int64_t Clustering::outlier_count() const {
  std::int64_t z = 0;
  for (auto l : assignment)
    if (l == kOutlier) ++z;
  return z;
}

CostReport evaluate_cost(const Dataset& ds, const Clustering& c) {
  if (c.assignment.size() != ds.n())
    throw std::invalid_argument("clustering: assignment does not cover all ids");
  if (c.p < 1.0) throw std::invalid_argument("clustering: p must be >= 1");
  if (c.outlier_count() > c.z_declared)
    throw std::invalid_argument("clustering: outlier labels exceed declared budget");
  CostReport r;
  const auto k = c.k();
  bool any = false;
  for (const auto& ctr : c.centers)
    if (ctr.id < 0) r.centers_from_data = false;
  for (std::size_t v = 0; v < ds.n(); ++v) {
    const auto l = c.assignment[v];
    if (l == kOutlier) continue;
    if (l < 0 || l >= k) throw std::invalid_argument("clustering: label out of range");
    any = true;
    const double d = ds.distance_to(static_cast<Index>(v), c.centers[l]);
    if (c.p == kPInf) {
      r.power_sum = std::max(r.power_sum, d);
    } else {
      r.power_sum += std::pow(d, c.p);
    }
  }
  if (!any) {
    r.empty_nonoutlier = true;
    r.cost = 0.0;
    r.power_sum = 0.0;
    return r;
  }
  r.cost = (c.p == kPInf) ? r.power_sum : std::pow(r.power_sum, 1.0 / c.p);
  return r;
}

double lp_cost(const Dataset& ds, const Clustering& c) { return evaluate_cost(ds, c).cost; }

double power_mean_cost(const Dataset& ds, const Clustering& c) {
  return evaluate_cost(ds, c).power_sum;
}

double closeness_error(const Clustering& a, const Clustering& b, std::int64_t n) {
  if (a.assignment.size() != b.assignment.size())
    throw std::invalid_argument("closeness_error: mismatched id sets");
  if (n <= 0) throw std::invalid_argument("closeness_error: n must be positive");
  const std::int64_t k = std::max(a.k(), b.k());
  std::vector<std::vector<double>> agree(k, std::vector<double>(k, 0.0));
  std::int64_t assigned_a = 0, za_not_zb = 0;
  for (std::size_t v = 0; v < a.assignment.size(); ++v) {
    const auto la = a.assignment[v], lb = b.assignment[v];
    if (la == kOutlier && lb == kOutlier) continue;
    if (la == kOutlier) {
      ++za_not_zb;
      continue;
    }
    ++assigned_a;
    if (lb != kOutlier) agree[la][lb] += 1.0;
  }
  double best = 0.0;
  if (k > 0) {
    std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t j = 0; j < k; ++j) cost[i][j] = -agree[i][j];
    const auto match = detail::min_cost_assignment(cost);
    for (std::int64_t i = 0; i < k; ++i) best += agree[i][match[i]];
  }
  return (static_cast<double>(assigned_a) - best + static_cast<double>(za_not_zb)) /
         static_cast<double>(n);
}

std::int32_t nearest_center(const Dataset& ds, Index v, std::span<const Point> centers,
                            double* dist) {
  if (centers.empty()) throw std::invalid_argument("nearest_center: no centers");
  std::int32_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const double d = ds.distance_to(v, centers[j]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<std::int32_t>(j);
    }
  }
  if (dist) *dist = best_d;
  return best;
}

Clustering induced_clustering(const Dataset& ds, std::vector<Point> centers, double p,
                              std::int64_t z) {
  Clustering c;
  c.centers = std::move(centers);
  c.p = p;
  c.z_declared = z;
  c.assignment.resize(ds.n());
  std::vector<std::pair<double, Index>> costs(ds.n());
  for (std::size_t v = 0; v < ds.n(); ++v) {
    double d = 0;
    c.assignment[v] = nearest_center(ds, static_cast<Index>(v), c.centers, &d);
    costs[v] = {d, static_cast<Index>(v)};
  }
  if (z > 0) {
    std::sort(costs.begin(), costs.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return x.second < y.second;
    });
    for (std::int64_t i = 0; i < z && i < static_cast<std::int64_t>(costs.size()); ++i)
      c.assignment[costs[i].second] = kOutlier;
  }
  return c;
}

CostReport weighted_cost(const Dataset& ds, const WeightedPointSet& in,
                         const WeightedAssignment& wa) {
  if (wa.label.size() != in.entries.size() || wa.outlier_units.size() != in.entries.size())
    throw std::invalid_argument("weighted_cost: assignment size mismatch");
  CostReport r;
  bool any = false;
  for (const auto& ctr : wa.centers)
    if (ctr.id < 0) r.centers_from_data = false;
  for (std::size_t e = 0; e < in.entries.size(); ++e) {
    const auto& entry = in.entries[e];
    const std::int64_t kept = entry.weight - wa.outlier_units[e];
    if (kept < 0 || wa.outlier_units[e] < 0)
      throw std::invalid_argument("weighted_cost: outlier units out of range");
    if (kept == 0) continue;
    const auto l = wa.label[e];
    if (l < 0 || l >= static_cast<std::int32_t>(wa.centers.size()))
      throw std::invalid_argument("weighted_cost: label out of range");
    any = true;
    const double d = ds.point_distance(entry.point, wa.centers[l]);
    if (wa.p == kPInf) {
      r.power_sum = std::max(r.power_sum, d);
    } else {
      r.power_sum += static_cast<double>(kept) * std::pow(d, wa.p);
    }
  }
  if (!any) {
    r.empty_nonoutlier = true;
    return r;
  }
  r.cost = (wa.p == kPInf) ? r.power_sum : std::pow(r.power_sum, 1.0 / wa.p);
  return r;
}

namespace detail {

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  const int m = static_cast<int>(a[0].size());
  if (m != n) throw std::invalid_argument("min_cost_assignment: matrix not square");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> ans(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j] > 0) ans[p[j] - 1] = j - 1;
  return ans;
}

std::int64_t ceil_log2(std::int64_t v) {
  std::int64_t b = 0;
  while ((std::int64_t{1} << b) < v) ++b;
  return b;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 over seed ^ golden-ratio-scrambled salt
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

}  // namespace dclust
