#include "epf/polynomial.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace epf {

Polynomial Polynomial::constant(int dim, double value) {
  Polynomial p(dim);
  p.add_term(MultiIndex::zero(dim), value);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& index, double coeff) {
  Polynomial p(index.dim());
  p.add_term(index, coeff);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [idx, coeff] : terms_) d = std::max(d, idx.degree());
  return d;
}

void Polynomial::add_term(const MultiIndex& index, double coeff) {
  if (index.dim() != dim_) throw structural_error("term dimension mismatch");
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::constant_term() const { return coefficient(MultiIndex::zero(dim_)); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  char buf[40];
  for (const auto& [idx, coeff] : terms_) {
    if (!first) os << "; ";
    first = false;
    std::snprintf(buf, sizeof(buf), "%.17g", coeff);
    os << buf << '@' << idx.to_string();
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text, int dim) {
  Polynomial p(dim);
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '\n', ';');
  std::istringstream is(normalized);
  std::string term;
  while (std::getline(is, term, ';')) {
    const auto begin = term.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = term.find_last_not_of(" \t\r");
    term = term.substr(begin, end - begin + 1);
    if (term == "0") continue;
    const auto at = term.find('@');
    double coeff = 0.0;
    std::size_t pos = 0;
    try {
      coeff = std::stod(term.substr(0, at), &pos);
    } catch (const std::exception&) {
      throw structural_error("bad polynomial term '" + term + "'");
    }
    if (at == std::string::npos) {
      // bare number = constant term
      if (pos != term.size()) throw structural_error("bad polynomial term '" + term + "'");
      p.add_term(MultiIndex::zero(dim), coeff);
      continue;
    }
    MultiIndex idx = MultiIndex::parse(term.substr(at + 1));
    if (idx.dim() != dim) {
      throw structural_error("term '" + term + "' has dimension " + std::to_string(idx.dim()) +
                             ", expected " + std::to_string(dim));
    }
    p.add_term(idx, coeff);
  }
  return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  if (p.dim() != q.dim()) throw structural_error("polynomial dimension mismatch in +");
  Polynomial out = p;
  for (const auto& [idx, coeff] : q.terms()) out.add_term(idx, coeff);
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-1.0) * q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.dim() != q.dim()) throw structural_error("polynomial dimension mismatch in *");
  Polynomial out(p.dim());
  for (const auto& [ip, cp] : p.terms()) {
    for (const auto& [iq, cq] : q.terms()) out.add_term(ip + iq, cp * cq);
  }
  return out;
}

Polynomial operator*(double a, const Polynomial& p) {
  Polynomial out(p.dim());
  for (const auto& [idx, coeff] : p.terms()) out.add_term(idx, a * coeff);
  return out;
}

Polynomial diff(const Polynomial& p, int axis) {
  if (axis < 0 || axis >= p.dim()) throw structural_error("differentiation axis out of range");
  Polynomial out(p.dim());
  for (const auto& [idx, coeff] : p.terms()) {
    const int e = idx[axis];
    if (e == 0) continue;
    out.add_term(idx.lowered(axis), coeff * e);
  }
  return out;
}

}  // namespace epf
