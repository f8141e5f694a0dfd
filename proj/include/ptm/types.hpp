#ifndef PTM_TYPES_HPP
#define PTM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ptm {

using complexd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Tolerance budget. Algebraic identities (hermiticity, trace, reality of
// gate matrices) are held to kAlgebraTol; anything that goes through an
// eigensolver gets the looser kSpectralTol.
inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kSpectralTol = 1e-9;
inline constexpr double kZeroBranchEps = 1e-12;
inline constexpr double kClosureRankRel = 1e-8;
inline constexpr double kProductStateTol = 1e-8;

// Dense 4^n matrices: keep n small enough that everything stays desk scale.
inline constexpr int kMaxQubits = 4;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct NotAState : Error {
  using Error::Error;
};
struct NonUnitary : Error {
  using Error::Error;
};
struct NotTraceDecreasing : Error {
  using Error::Error;
};
struct ImaginaryResidue : Error {
  using Error::Error;
};
struct ZeroProbabilityBranch : Error {
  using Error::Error;
};
struct NotRotation : Error {
  using Error::Error;
};

/// Number of qubits (equivalently ququats). Derives the Hilbert and
/// operator-space dimensions 2^n and 4^n.
class QubitCount {
 public:
  explicit QubitCount(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits)
      throw DimensionError("qubit count must be in [1," +
                           std::to_string(kMaxQubits) + "], got " +
                           std::to_string(n));
  }
  int value() const { return n_; }
  int hilbert_dim() const { return 1 << n_; }
  int operator_dim() const { return 1 << (2 * n_); }
  friend bool operator==(QubitCount a, QubitCount b) { return a.n_ == b.n_; }

 private:
  int n_;
};

/// Operator-space index mu in [0, 4^n), with its base-4 digit expansion
/// mu = mu_1 4^{n-1} + ... + mu_n. Digit 1 is the leftmost Kronecker factor.
class MultiIndex {
 public:
  MultiIndex(int mu, QubitCount n) : mu_(mu), n_(n.value()) {
    if (mu < 0 || mu >= n.operator_dim())
      throw std::out_of_range("index " + std::to_string(mu) +
                              " out of range for n=" +
                              std::to_string(n.value()));
  }
  static MultiIndex from_digits(const std::vector<int>& digits) {
    int mu = 0;
    for (int d : digits) {
      if (d < 0 || d > 3) throw std::out_of_range("base-4 digit out of range");
      mu = 4 * mu + d;
    }
    return MultiIndex(mu, QubitCount(static_cast<int>(digits.size())));
  }
  int value() const { return mu_; }
  int qubits() const { return n_; }
  std::vector<int> digits() const {
    std::vector<int> d(n_);
    int m = mu_;
    for (int i = n_ - 1; i >= 0; --i) {
      d[i] = m & 3;
      m >>= 2;
    }
    return d;
  }
  int digit(int i) const { return (mu_ >> (2 * (n_ - 1 - i))) & 3; }

 private:
  int mu_;
  int n_;
};

inline void require_square(const CMat& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace ptm

#endif  // PTM_TYPES_HPP
