#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "epf/types.hpp"

namespace epf {

enum class RuleKind { gauss_chebyshev, clenshaw_curtis, gauss_patterson };

std::string to_string(RuleKind kind);
RuleKind rule_kind_from_string(const std::string& name);

/// Unidimensional interpolatory rule family with a level-to-count map.
/// Clenshaw-Curtis and Gauss-Patterson are nested with positive weights;
/// Gauss-Chebyshev (first kind) integrates against w(x) = (1-x^2)^{-1/2}.
struct Rule1D {
  RuleKind kind = RuleKind::gauss_patterson;

  bool nested() const { return kind != RuleKind::gauss_chebyshev; }
  int level_to_count(int level) const;
  int max_level() const;
  void points(int level, std::vector<double>& nodes, std::vector<double>& weights) const;
};

struct GridProvenance {
  std::string rule;             // rule kind or "halton"
  int level = 0;                // 0 when count-based
  int count = 0;                // direct node count for chebyshev/halton
  bool boundary_elided = false;
  bool chebyshev_weighted = false;  // weights include the (1-x^2)^{-1/2} factor
};

/// Immutable set of quadrature nodes in (-1,1)^d (closed cube for
/// non-elided Clenshaw-Curtis grids) with one weight per node.
struct QuadratureGrid {
  int dim = 0;
  Mat nodes;    // N x dim
  Vec weights;  // N
  GridProvenance provenance;

  Index size() const { return weights.size(); }
};

/// n-point Gauss-Chebyshev rule of the first kind: nodes cos((i-1/2)pi/n),
/// all weights pi/n, exact for f of degree <= 2n-1 against the Chebyshev
/// weight. Callers integrating against unit weight fold in w^{-1}.
QuadratureGrid gauss_chebyshev(int n);

/// Nested Clenshaw-Curtis rule: 1 node at level 1, 2^(level-1)+1 nodes
/// afterwards, including the endpoints +-1.
QuadratureGrid clenshaw_curtis(int level);

/// Nested Gauss-Patterson rule, tabulated levels 1..9 with 2^level - 1 nodes.
QuadratureGrid gauss_patterson(int level);

/// Smolyak sparse grid over tensor differences of the 1-D family:
/// combines tensor rules with |k|_1 <= level + 2 (dim - 1) over 1-based level
/// vectors k. In one dimension this telescopes to the 1-D rule at `level`;
/// in two dimensions the Gauss-Patterson node counts at levels 1,2,3,... are
/// 5, 17, 49, 129, 321, 769, 1793, 4097. Coincident nodes are merged
/// (tolerance 1e-12); with elide_boundary, nodes on the cube boundary are
/// dropped and their weight discarded.
QuadratureGrid smolyak(const Rule1D& rule, int dim, int level, bool elide_boundary = false,
                       std::int64_t node_cap = 1 << 22);

/// First `count` points of the Halton sequence (bases = first d primes),
/// mapped affinely to (-1,1)^d, with equal weights 2^d / count.
QuadratureGrid halton(int dim, int count);

/// One node per row: coordinates then weight.
void write_csv(const QuadratureGrid& grid, std::ostream& os);

}  // namespace epf
