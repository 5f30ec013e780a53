#include "kql/support.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace kql {

namespace {

Eigen::MatrixXcd toEigen(const Matrix<Cx>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j);
  return out;
}

Cx blockMean(const Eigen::MatrixXcd& m) {
  return m.diagonal().sum() / static_cast<double>(m.rows());
}

// Splits along the spectrum of `primary`; commuting operators restrict to
// each generalized eigenspace. When no split remains on either operator the
// block contributes one joint point with the block dimension as multiplicity.
void splitRecurse(const Eigen::MatrixXcd& b1, const Eigen::MatrixXcd& b2,
                  double tol, SupportCycle& out) {
  const int n = static_cast<int>(b1.rows());
  if (n == 0) return;
  const double radius =
      10.0 * tol * std::max({1.0, b1.norm(), b2.norm()});
  for (int which = 0; which < 2; ++which) {
    const Eigen::MatrixXcd& op = which == 0 ? b1 : b2;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(op, false);
    std::vector<Cx> evs(es.eigenvalues().data(),
                        es.eigenvalues().data() + n);
    // cluster eigenvalues
    std::vector<Cx> centers;
    for (const Cx& e : evs) {
      bool found = false;
      for (const Cx& c : centers)
        if (std::abs(e - c) <= radius) {
          found = true;
          break;
        }
      if (!found) centers.push_back(e);
    }
    if (centers.size() <= 1) continue;
    for (const Cx& c : centers) {
      // generalized eigenspace: kernel of (op - c)^n
      Eigen::MatrixXcd shifted =
          op - c * Eigen::MatrixXcd::Identity(n, n);
      Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
      for (int t = 0; t < n; ++t) power = power * shifted;
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(power);
      cod.setThreshold(tol * std::max(1.0, power.norm()));
      const int kdim = n - static_cast<int>(cod.rank());
      if (kdim == 0) continue;
      // orthonormal kernel basis via SVD
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
          power, Eigen::ComputeFullV);
      Eigen::MatrixXcd basis = svd.matrixV().rightCols(kdim);
      auto restrict = [&](const Eigen::MatrixXcd& m) {
        return (basis.adjoint() * m * basis).eval();
      };
      splitRecurse(restrict(b1), restrict(b2), tol, out);
    }
    return;
  }
  out.push_back({blockMean(b1), blockMean(b2), n});
}

}  // namespace

SupportCycle support_cycle_pair(const Matrix<Cx>& b1, const Matrix<Cx>& b2,
                                double tol) {
  if (b1.rows() != b1.cols() || !b1.sameShape(b2))
    throw PreconditionError("support_cycle: square pair required");
  SupportCycle out;
  splitRecurse(toEigen(b1), toEigen(b2), tol, out);
  // merge clusters that ended up at the same joint point
  const double radius = 10.0 * tol * std::max({1.0, b1.maxMagnitude(),
                                               b2.maxMagnitude()});
  SupportCycle merged;
  for (const SupportPoint& p : out) {
    bool found = false;
    for (SupportPoint& q : merged)
      if (std::abs(p.x - q.x) <= radius && std::abs(p.y - q.y) <= radius) {
        q.multiplicity += p.multiplicity;
        found = true;
        break;
      }
    if (!found) merged.push_back(p);
  }
  std::sort(merged.begin(), merged.end(),
            [](const SupportPoint& a, const SupportPoint& b) {
              if (a.x.real() != b.x.real()) return a.x.real() < b.x.real();
              if (a.x.imag() != b.x.imag()) return a.x.imag() < b.x.imag();
              if (a.y.real() != b.y.real()) return a.y.real() < b.y.real();
              return a.y.imag() < b.y.imag();
            });
  return merged;
}

}  // namespace kql
