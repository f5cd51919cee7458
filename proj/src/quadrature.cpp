#include "epf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>

namespace epf {

// generated table, see src/gauss_patterson_table.cpp
namespace patterson_table {
extern const int max_level;
const double* nodes(int level);
const double* weights(int level);
int count(int level);
}  // namespace patterson_table

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::gauss_chebyshev: return "gauss_chebyshev";
    case RuleKind::clenshaw_curtis: return "clenshaw_curtis";
    case RuleKind::gauss_patterson: return "gauss_patterson";
  }
  return "?";
}

RuleKind rule_kind_from_string(const std::string& name) {
  if (name == "gauss_chebyshev") return RuleKind::gauss_chebyshev;
  if (name == "clenshaw_curtis") return RuleKind::clenshaw_curtis;
  if (name == "gauss_patterson") return RuleKind::gauss_patterson;
  throw structural_error("unknown quadrature rule '" + name + "'");
}

int Rule1D::level_to_count(int level) const {
  if (level < 1) throw domain_error("quadrature level must be >= 1");
  switch (kind) {
    case RuleKind::gauss_patterson: return (1 << level) - 1;
    case RuleKind::clenshaw_curtis:
    case RuleKind::gauss_chebyshev: return level == 1 ? 1 : (1 << (level - 1)) + 1;
  }
  return 0;
}

int Rule1D::max_level() const {
  return kind == RuleKind::gauss_patterson ? patterson_table::max_level : 20;
}

namespace {

void chebyshev_points(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw domain_error("gauss_chebyshev requires n >= 1");
  nodes.resize(static_cast<std::size_t>(n));
  weights.assign(static_cast<std::size_t>(n), M_PI / n);
  for (int i = 1; i <= n; ++i) {
    // ascending order; cos is decreasing, so fill from the back
    nodes[static_cast<std::size_t>(n - i)] = std::cos((i - 0.5) * M_PI / n);
  }
}

void clenshaw_curtis_points(int level, std::vector<double>& nodes, std::vector<double>& weights) {
  if (level < 1) throw domain_error("clenshaw_curtis requires level >= 1");
  if (level == 1) {
    nodes = {0.0};
    weights = {2.0};
    return;
  }
  const int n = 1 << (level - 1);  // N = n + 1 nodes
  const int N = n + 1;
  nodes.resize(static_cast<std::size_t>(N));
  weights.resize(static_cast<std::size_t>(N));
  for (int j = 0; j <= n; ++j) {
    nodes[static_cast<std::size_t>(n - j)] = std::cos(j * M_PI / n);
    double s = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      s += b * std::cos(2.0 * k * j * M_PI / n) / (4.0 * k * k - 1.0);
    }
    const double c = (j == 0 || j == n) ? 1.0 : 2.0;
    weights[static_cast<std::size_t>(n - j)] = (c / n) * (1.0 - s);
  }
  // enforce exact symmetry of the computed weights
  for (int j = 0; j < N / 2; ++j) {
    const double w = 0.5 * (weights[static_cast<std::size_t>(j)] + weights[static_cast<std::size_t>(N - 1 - j)]);
    weights[static_cast<std::size_t>(j)] = w;
    weights[static_cast<std::size_t>(N - 1 - j)] = w;
  }
}

void patterson_points(int level, std::vector<double>& nodes, std::vector<double>& weights) {
  if (level < 1) throw domain_error("gauss_patterson requires level >= 1");
  if (level > patterson_table::max_level)
    throw capability_error("gauss_patterson tabulated up to level " +
                           std::to_string(patterson_table::max_level));
  const int n = patterson_table::count(level);
  nodes.assign(patterson_table::nodes(level), patterson_table::nodes(level) + n);
  weights.assign(patterson_table::weights(level), patterson_table::weights(level) + n);
}

}  // namespace

void Rule1D::points(int level, std::vector<double>& nodes, std::vector<double>& weights) const {
  switch (kind) {
    case RuleKind::gauss_chebyshev: chebyshev_points(level_to_count(level), nodes, weights); return;
    case RuleKind::clenshaw_curtis: clenshaw_curtis_points(level, nodes, weights); return;
    case RuleKind::gauss_patterson: patterson_points(level, nodes, weights); return;
  }
}

QuadratureGrid gauss_chebyshev(int n) {
  std::vector<double> nodes, weights;
  chebyshev_points(n, nodes, weights);
  QuadratureGrid grid;
  grid.dim = 1;
  grid.nodes = Eigen::Map<const Vec>(nodes.data(), n);
  grid.weights = Eigen::Map<const Vec>(weights.data(), n);
  grid.provenance = {"gauss_chebyshev", 0, n, false, true};
  return grid;
}

QuadratureGrid clenshaw_curtis(int level) {
  std::vector<double> nodes, weights;
  clenshaw_curtis_points(level, nodes, weights);
  QuadratureGrid grid;
  grid.dim = 1;
  grid.nodes = Eigen::Map<const Vec>(nodes.data(), static_cast<Index>(nodes.size()));
  grid.weights = Eigen::Map<const Vec>(weights.data(), static_cast<Index>(weights.size()));
  grid.provenance = {"clenshaw_curtis", level, static_cast<int>(nodes.size()), false, false};
  return grid;
}

QuadratureGrid gauss_patterson(int level) {
  std::vector<double> nodes, weights;
  patterson_points(level, nodes, weights);
  QuadratureGrid grid;
  grid.dim = 1;
  grid.nodes = Eigen::Map<const Vec>(nodes.data(), static_cast<Index>(nodes.size()));
  grid.weights = Eigen::Map<const Vec>(weights.data(), static_cast<Index>(weights.size()));
  grid.provenance = {"gauss_patterson", level, static_cast<int>(nodes.size()), false, false};
  return grid;
}

namespace {

// Enumerates level vectors k >= 1 with |k|_1 == total.
void level_vectors(int dim, int total, std::vector<int>& cur, int axis,
                   std::vector<std::vector<int>>& out) {
  if (axis == dim - 1) {
    const int rest = total - std::accumulate(cur.begin(), cur.begin() + axis, 0);
    if (rest >= 1) {
      cur[static_cast<std::size_t>(axis)] = rest;
      out.push_back(cur);
    }
    return;
  }
  const int used = std::accumulate(cur.begin(), cur.begin() + axis, 0);
  for (int k = 1; k <= total - used - (dim - 1 - axis); ++k) {
    cur[static_cast<std::size_t>(axis)] = k;
    level_vectors(dim, total, cur, axis + 1, out);
  }
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

}  // namespace

QuadratureGrid smolyak(const Rule1D& rule, int dim, int level, bool elide_boundary,
                       std::int64_t node_cap) {
  if (dim < 1) throw domain_error("smolyak requires dim >= 1");
  if (level < 1) throw domain_error("smolyak requires level >= 1");
  const int q = level + 2 * (dim - 1);  // |k|_1 bound; see header
  const int max_1d_level = q - (dim - 1);
  if (max_1d_level > rule.max_level())
    throw capability_error("smolyak level " + std::to_string(level) + " needs 1-D level " +
                           std::to_string(max_1d_level) + " beyond " + to_string(rule.kind) +
                           " capability");

  // Canonical 1-D node list across levels: merging tensor nodes by integer id
  // is exact regardless of float noise between levels (tolerance 1e-12 pairs
  // up nested nodes).
  const double tol = 1e-12;
  std::vector<std::vector<double>> nodes1(static_cast<std::size_t>(max_1d_level) + 1);
  std::vector<std::vector<double>> weights1(static_cast<std::size_t>(max_1d_level) + 1);
  std::vector<std::pair<double, std::pair<int, int>>> pool;  // value -> (level, pos)
  for (int l = 1; l <= max_1d_level; ++l) {
    rule.points(l, nodes1[static_cast<std::size_t>(l)], weights1[static_cast<std::size_t>(l)]);
    for (std::size_t i = 0; i < nodes1[static_cast<std::size_t>(l)].size(); ++i) {
      pool.push_back({nodes1[static_cast<std::size_t>(l)][i], {l, static_cast<int>(i)}});
    }
  }
  std::sort(pool.begin(), pool.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> canonical;                                   // representative values
  std::vector<std::vector<int>> id_of(static_cast<std::size_t>(max_1d_level) + 1);  // per level: pos -> id
  for (int l = 1; l <= max_1d_level; ++l) {
    id_of[static_cast<std::size_t>(l)].resize(nodes1[static_cast<std::size_t>(l)].size());
  }
  for (const auto& [value, where] : pool) {
    if (canonical.empty() || value - canonical.back() > tol) canonical.push_back(value);
    id_of[static_cast<std::size_t>(where.first)][static_cast<std::size_t>(where.second)] =
        static_cast<int>(canonical.size()) - 1;
  }

  // combination formula: sum over q-d+1 <= |k| <= q of
  //   (-1)^(q-|k|) C(d-1, q-|k|) (Q_{k_1} x ... x Q_{k_d})
  std::map<std::vector<int>, double> accum;  // canonical id vector -> weight
  std::int64_t upper_bound = 0;
  std::vector<int> ids(static_cast<std::size_t>(dim));
  for (int total = std::max(dim, q - dim + 1); total <= q; ++total) {
    std::vector<std::vector<int>> ks;
    std::vector<int> cur(static_cast<std::size_t>(dim), 1);
    level_vectors(dim, total, cur, 0, ks);
    const int diff = q - total;
    const double sign_coeff = ((diff % 2) ? -1.0 : 1.0) * binomial(dim - 1, diff);
    for (const auto& k : ks) {
      std::int64_t prod = 1;
      for (int a = 0; a < dim; ++a)
        prod *= static_cast<std::int64_t>(nodes1[static_cast<std::size_t>(k[static_cast<std::size_t>(a)])].size());
      upper_bound += prod;
      if (upper_bound > node_cap)
        throw capability_error("smolyak grid would exceed the node cap of " + std::to_string(node_cap));
      std::vector<std::size_t> it(static_cast<std::size_t>(dim), 0);
      while (true) {
        double w = sign_coeff;
        for (int a = 0; a < dim; ++a) {
          const auto la = static_cast<std::size_t>(k[static_cast<std::size_t>(a)]);
          const auto pos = it[static_cast<std::size_t>(a)];
          ids[static_cast<std::size_t>(a)] = id_of[la][pos];
          w *= weights1[la][pos];
        }
        accum[ids] += w;
        int a = dim - 1;
        for (; a >= 0; --a) {
          const auto la = static_cast<std::size_t>(k[static_cast<std::size_t>(a)]);
          if (++it[static_cast<std::size_t>(a)] < nodes1[la].size()) break;
          it[static_cast<std::size_t>(a)] = 0;
        }
        if (a < 0) break;
      }
    }
  }

  std::vector<std::pair<std::vector<int>, double>> merged(accum.begin(), accum.end());
  if (elide_boundary) {
    std::erase_if(merged, [&](const auto& entry) {
      return std::any_of(entry.first.begin(), entry.first.end(), [&](int id) {
        return std::abs(canonical[static_cast<std::size_t>(id)]) >= 1.0 - tol;
      });
    });
  }

  QuadratureGrid grid;
  grid.dim = dim;
  grid.nodes = Mat(static_cast<Index>(merged.size()), dim);
  grid.weights = Vec(static_cast<Index>(merged.size()));
  for (Index i = 0; i < grid.size(); ++i) {
    for (int a = 0; a < dim; ++a)
      grid.nodes(i, a) = canonical[static_cast<std::size_t>(merged[static_cast<std::size_t>(i)].first[static_cast<std::size_t>(a)])];
    grid.weights[i] = merged[static_cast<std::size_t>(i)].second;
  }
  grid.provenance = {to_string(rule.kind), level, static_cast<int>(grid.size()), elide_boundary,
                     rule.kind == RuleKind::gauss_chebyshev};
  return grid;
}

namespace {

double radical_inverse(std::int64_t index, int base) {
  double inv = 1.0 / base;
  double factor = inv;
  double value = 0.0;
  while (index > 0) {
    value += factor * static_cast<double>(index % base);
    index /= base;
    factor *= inv;
  }
  return value;
}

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  for (int p = 2; static_cast<int>(primes.size()) < count; ++p) {
    bool ok = true;
    for (int d : primes) {
      if (d * d > p) break;
      if (p % d == 0) {
        ok = false;
        break;
      }
    }
    if (ok) primes.push_back(p);
  }
  return primes;
}

}  // namespace

QuadratureGrid halton(int dim, int count) {
  if (dim < 1) throw domain_error("halton requires dim >= 1");
  if (count < 1) throw domain_error("halton requires count >= 1");
  const auto bases = first_primes(dim);
  QuadratureGrid grid;
  grid.dim = dim;
  grid.nodes = Mat(count, dim);
  for (int i = 0; i < count; ++i) {
    for (int a = 0; a < dim; ++a) {
      grid.nodes(i, a) = 2.0 * radical_inverse(i + 1, bases[static_cast<std::size_t>(a)]) - 1.0;
    }
  }
  grid.weights = Vec::Constant(count, std::pow(2.0, dim) / count);
  grid.provenance = {"halton", 0, count, false, false};
  return grid;
}

void write_csv(const QuadratureGrid& grid, std::ostream& os) {
  char buf[40];
  for (Index i = 0; i < grid.size(); ++i) {
    for (int a = 0; a < grid.dim; ++a) {
      std::snprintf(buf, sizeof(buf), "%.17g", grid.nodes(i, a));
      os << buf << ',';
    }
    std::snprintf(buf, sizeof(buf), "%.17g", grid.weights[i]);
    os << buf << '\n';
  }
}

}  // namespace epf
