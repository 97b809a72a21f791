#include "vstoch/bistochastic.hpp"

#include <string>

#include "vstoch/errors.hpp"

namespace vstoch {

Bistochastic::Bistochastic(Eigen::MatrixXd entries, double tol)
    : m_(std::move(entries)), tol_(tol) {
  if (m_.rows() < 1 || m_.rows() != m_.cols())
    throw InvalidInputError("bistochastic matrix must be square and nonempty");
  if (tol_ < 0.0) throw InvalidInputError("tolerance must be nonnegative");
  const int n = static_cast<int>(m_.rows());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m_(r, c) < -tol_)
        throw InvalidInputError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") = " + std::to_string(m_(r, c)) + " is negative beyond tol");
  for (int r = 0; r < n; ++r) {
    const double s = m_.row(r).sum();
    if (std::abs(s - 1.0) > tol_)
      throw InvalidInputError("row " + std::to_string(r) + " sums to " + std::to_string(s));
  }
  for (int c = 0; c < n; ++c) {
    const double s = m_.col(c).sum();
    if (std::abs(s - 1.0) > tol_)
      throw InvalidInputError("column " + std::to_string(c) + " sums to " + std::to_string(s));
  }
}

bool Bistochastic::is_symmetric(double tol) const {
  return (m_ - m_.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Bistochastic Bistochastic::identity(int n) {
  return Bistochastic(Eigen::MatrixXd::Identity(n, n));
}

Bistochastic Bistochastic::uniform(int n) {
  return Bistochastic(Eigen::MatrixXd::Constant(n, n, 1.0 / n));
}

}  // namespace vstoch
