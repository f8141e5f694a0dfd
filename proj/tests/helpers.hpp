#ifndef PTM_TESTS_HELPERS_HPP
#define PTM_TESTS_HELPERS_HPP

#include <complex>

#include <unsupported/Eigen/KroneckerProduct>

#include "ptm/pauli.hpp"
#include "ptm/random.hpp"
#include "ptm/types.hpp"

namespace ptm::testing {

inline const complexd kI{0.0, 1.0};

inline CMat sigma(int k) {
  return pauli_operator(MultiIndex(k, QubitCount(1)), QubitCount(1));
}

inline CMat mat2(complexd a, complexd b, complexd c, complexd d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const RMat& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const RVec& v) { return v.cwiseAbs().maxCoeff(); }

inline double diff(const CMat& a, const CMat& b) { return max_abs(CMat(a - b)); }
inline double diff(const RMat& a, const RMat& b) { return max_abs(RMat(a - b)); }
inline double diff(const RVec& a, const RVec& b) { return max_abs(RVec(a - b)); }

inline CMat hadamard() {
  return (sigma(1) + sigma(3)) / std::sqrt(2.0);
}

inline CMat projector_plus() { return 0.5 * (sigma(0) + sigma(3)); }
inline CMat projector_minus() { return 0.5 * (sigma(0) - sigma(3)); }

}  // namespace ptm::testing

#endif  // PTM_TESTS_HELPERS_HPP
