#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace epf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Eigen::Index;

/// Library-wide error with a coarse classification mirroring the failure
/// modes the callers care about: bad structure (shapes, unknown names),
/// bad values (domain), exceeded capability (tables, caps), and numerical
/// breakdown (factorizations, overflow).
class Error : public std::runtime_error {
 public:
  enum class Kind { structural, domain, capability, numerical };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Error structural_error(const std::string& what) { return Error(Error::Kind::structural, what); }
inline Error domain_error(const std::string& what) { return Error(Error::Kind::domain, what); }
inline Error capability_error(const std::string& what) { return Error(Error::Kind::capability, what); }
inline Error numerical_error(const std::string& what) { return Error(Error::Kind::numerical, what); }

}  // namespace epf
