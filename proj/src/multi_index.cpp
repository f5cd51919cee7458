#include "epf/multi_index.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace epf {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw structural_error("multi-index must have dimension >= 1");
  for (int e : exps_) {
    if (e < 0) throw structural_error("multi-index exponents must be non-negative");
  }
}

MultiIndex MultiIndex::zero(int dim) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0)); }

MultiIndex MultiIndex::axis(int dim, int axis, int power) {
  if (axis < 0 || axis >= dim) throw structural_error("axis out of range");
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(axis)] = power;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim() != other.dim()) throw structural_error("multi-index dimension mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::lowered(int axis) const {
  if (axis < 0 || axis >= dim()) throw structural_error("axis out of range");
  if (exps_[static_cast<std::size_t>(axis)] == 0) throw structural_error("cannot lower zero exponent");
  std::vector<int> e(exps_);
  e[static_cast<std::size_t>(axis)] -= 1;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ',';
    os << exps_[i];
  }
  return os.str();
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<int> e;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw structural_error("bad multi-index token '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw structural_error("bad multi-index token '" + tok + "'");
    e.push_back(v);
  }
  if (e.empty()) throw structural_error("empty multi-index '" + text + "'");
  return MultiIndex(std::move(e));
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw structural_error("comparing multi-indices of different dimension");
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

namespace {

void enumerate_rec(int dim, int axis, int remaining, std::vector<int>& cur,
                   std::vector<MultiIndex>& out) {
  if (axis == dim - 1) {
    cur[static_cast<std::size_t>(axis)] = remaining;
    out.push_back(MultiIndex(cur));
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(axis)] = e;
    enumerate_rec(dim, axis + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_degrees(int dim, int min_degree, int max_degree) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  for (int deg = min_degree; deg <= max_degree; ++deg) {
    std::vector<MultiIndex> of_degree;
    enumerate_rec(dim, 0, deg, cur, of_degree);
    std::sort(of_degree.begin(), of_degree.end());
    out.insert(out.end(), of_degree.begin(), of_degree.end());
  }
  return out;
}

}  // namespace epf
