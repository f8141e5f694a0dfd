#include "ptm/pseudo_gate.hpp"

#include <cmath>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace ptm {

namespace {

QubitCount qubits_for_hilbert_dim(Eigen::Index dim, const char* what) {
  for (int n = 1; n <= kMaxQubits; ++n)
    if ((Eigen::Index(1) << n) == dim) return QubitCount(n);
  throw DimensionError(std::string(what) + ": dimension is not 2^n");
}

// Rows (Left) and columns (Right) of the pseudo-gate matrices are the Pauli
// coefficients of sigma_idx * A:
//   L_{mu alpha} = (1/2^n) Tr(sigma_alpha sigma_mu A)
//   R_{alpha nu} = (1/2^n) Tr(sigma_alpha sigma_nu A)
CMat multiplication_matrix(const CMat& a, Side side) {
  const QubitCount n = qubits_for_hilbert_dim(a.rows(), "pseudo-gate");
  const int dim_op = n.operator_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(n.hilbert_dim());
  CMat out(dim_op, dim_op);
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < dim_op; ++idx) {
    const CMat x = basis[idx] * a;
    for (int alpha = 0; alpha < dim_op; ++alpha) {
      const complexd c = scale * (basis[alpha] * x).trace();
      if (side == Side::Left)
        out(idx, alpha) = c;
      else
        out(alpha, idx) = c;
    }
  }
  return out;
}

}  // namespace

PseudoGateMatrix left_matrix(const CMat& a) {
  require_square(a, "left_matrix");
  const QubitCount n = qubits_for_hilbert_dim(a.rows(), "left_matrix");
  return {n, Side::Left, multiplication_matrix(a, Side::Left), a};
}

PseudoGateMatrix right_matrix(const CMat& a) {
  require_square(a, "right_matrix");
  const QubitCount n = qubits_for_hilbert_dim(a.rows(), "right_matrix");
  return {n, Side::Right, multiplication_matrix(a, Side::Right), a};
}

TransferGate gate_from_lr(const KrausSet& ch) {
  const GateClass cls = classify_kraus(ch);
  const int dim_op = ch.qubits().operator_dim();
  CMat total = CMat::Zero(dim_op, dim_op);
  for (const auto& a : ch.ops())
    total += multiplication_matrix(a, Side::Left) *
             multiplication_matrix(a.adjoint().eval(), Side::Right);
  const double residue = total.imag().cwiseAbs().maxCoeff();
  if (residue > kAlgebraTol)
    throw ImaginaryResidue("gate_from_lr: imaginary residue " +
                           std::to_string(residue));
  return {ch.qubits(), total.real(), cls};
}

LieGenerator weyl_generator(int mu, int nu, int dim) {
  if (mu < 0 || nu < 0 || mu >= dim || nu >= dim)
    throw std::out_of_range("weyl_generator: index out of range");
  CMat m = CMat::Zero(dim, dim);
  m(mu, nu) = 1.0;
  return {dim, std::move(m), GeneratorKind::Weyl, mu, nu};
}

CMat commutator(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("commutator: dimension mismatch");
  return a * b - b * a;
}

CMat commutator(const LieGenerator& a, const LieGenerator& b) {
  return commutator(a.matrix, b.matrix);
}

std::vector<LieGenerator> hermitian_basis(int dim) {
  std::vector<LieGenerator> gens;
  gens.reserve(dim * dim);
  for (int a = 0; a < dim; ++a) {
    CMat m = CMat::Zero(dim, dim);
    m(a, a) = 1.0;
    gens.push_back({dim, std::move(m), GeneratorKind::Diag, a, a});
  }
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      CMat m = CMat::Zero(dim, dim);
      m(a, b) = 1.0;
      m(b, a) = 1.0;
      gens.push_back({dim, std::move(m), GeneratorKind::SymReal, a, b});
    }
  const complexd i(0.0, 1.0);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      CMat m = CMat::Zero(dim, dim);
      m(a, b) = -i;
      m(b, a) = i;
      gens.push_back({dim, std::move(m), GeneratorKind::SymImag, a, b});
    }
  return gens;
}

namespace {

CMat matrix_power(CMat base, long exponent) {
  CMat result = CMat::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

CMat commutator_limit(const CMat& a, const CMat& b, double t, int steps) {
  if (steps < 1) throw std::invalid_argument("commutator_limit: steps >= 1");
  if (t < 0.0) throw std::invalid_argument("commutator_limit: t >= 0");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("commutator_limit: dimension mismatch");
  const complexd is(0.0, std::sqrt(t / double(steps)));
  const CMat factor = CMat((-is * a).exp()) * CMat((is * b).exp()) *
                      CMat((is * a).exp()) * CMat((-is * b).exp());
  return matrix_power(factor, steps);
}

CMat combination_limit(const CMat& a, const CMat& b, complexd ca, complexd cb,
                       int steps) {
  if (steps < 1) throw std::invalid_argument("combination_limit: steps >= 1");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("combination_limit: dimension mismatch");
  const complexd i(0.0, 1.0);
  const CMat factor = CMat((i * ca / double(steps) * a).exp()) *
                      CMat((i * cb / double(steps) * b).exp());
  return matrix_power(factor, steps);
}

CMat swap_pseudo_gate() {
  CMat sw = CMat::Zero(16, 16);
  for (int m1 = 0; m1 < 4; ++m1)
    for (int m2 = 0; m2 < 4; ++m2) sw(4 * m2 + m1, 4 * m1 + m2) = 1.0;
  return sw;
}

CMat conjugate_by_swap(const CMat& g) {
  if (g.rows() != 16 || g.cols() != 16)
    throw DimensionError("conjugate_by_swap: expected a 16x16 matrix");
  const CMat sw = swap_pseudo_gate();
  return sw * g * sw;
}

PrimitivityVerdict is_primitive(const TransferGate& g, int trials,
                                std::uint64_t seed) {
  if (g.n.value() != 2)
    throw DimensionError("is_primitive: two-ququat gates only");
  Rng rng(seed);
  std::vector<RVec> inputs;
  inputs.reserve(trials);
  const QubitCount one(1);
  for (int i = 0; i < trials; ++i) {
    const RVec c1 = density_to_pauli(random_density(one, rng)).coeffs();
    const RVec c2 = density_to_pauli(random_density(one, rng)).coeffs();
    RVec prod(16);
    for (int m1 = 0; m1 < 4; ++m1)
      for (int m2 = 0; m2 < 4; ++m2) prod[4 * m1 + m2] = c1[m1] * c2[m2];
    inputs.push_back(std::move(prod));
  }
  std::vector<double> second_sv(trials, 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < trials; ++i) {
    const RVec out = g.matrix * inputs[i];
    RMat reshaped(4, 4);
    for (int m1 = 0; m1 < 4; ++m1)
      for (int m2 = 0; m2 < 4; ++m2) reshaped(m1, m2) = out[4 * m1 + m2];
    Eigen::JacobiSVD<RMat> svd(reshaped);
    second_sv[i] = svd.singularValues()[1];
  }
  for (int i = 0; i < trials; ++i)
    if (second_sv[i] > kProductStateTol)
      return {false, i, inputs[i], second_sv[i]};
  return {true};
}

namespace {

// Incremental orthonormal basis of the real span of complex matrices,
// treating real and imaginary parts as independent directions.
class RealSpan {
 public:
  explicit RealSpan(int matrix_dim, int capacity)
      : vec_len_(2 * matrix_dim * matrix_dim),
        basis_(capacity, 2 * matrix_dim * matrix_dim),
        rows_(0) {}

  int dimension() const { return rows_; }

  bool try_add(const CMat& m) {
    RVec v(vec_len_);
    const int half = vec_len_ / 2;
    Eigen::Map<const CVec> flat(m.data(), half);
    v.head(half) = flat.real();
    v.tail(half) = flat.imag();
    const double norm0 = v.norm();
    if (norm0 < 1e-14) return false;
    for (int pass = 0; pass < 2; ++pass)
      if (rows_ > 0)
        v -= basis_.topRows(rows_).transpose() * (basis_.topRows(rows_) * v);
    if (v.norm() <= kClosureRankRel * norm0) return false;
    if (rows_ >= basis_.rows()) return false;
    basis_.row(rows_++) = v.normalized();
    return true;
  }

 private:
  int vec_len_;
  RMat basis_;
  int rows_;
};

}  // namespace

ClosureResult lie_closure(const std::vector<CMat>& gens, int max_dim,
                          int max_rounds) {
  if (gens.empty()) return {0, {0}};
  const int d = int(gens.front().rows());
  for (const auto& g : gens) {
    require_square(g, "lie_closure");
    if (g.rows() != d) throw DimensionError("lie_closure: mixed dimensions");
  }
  const int cap = std::min(max_dim, 2 * d * d);
  RealSpan span(d, cap);
  std::vector<CMat> accepted;
  std::vector<CMat> frontier;
  for (const auto& g : gens)
    if (span.try_add(g)) {
      accepted.push_back(g);
      frontier.push_back(g);
    }
  ClosureResult result{span.dimension(), {span.dimension()}};

  constexpr int kChunk = 2048;
  int rounds = 0;
  while (!frontier.empty() && span.dimension() < cap &&
         rounds++ < max_rounds) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(frontier.size() * accepted.size());
    for (int f = 0; f < int(frontier.size()); ++f)
      for (int b = 0; b < int(accepted.size()); ++b) pairs.emplace_back(f, b);
    std::vector<CMat> new_frontier;
    for (std::size_t start = 0;
         start < pairs.size() && span.dimension() < cap; start += kChunk) {
      const int count = int(std::min<std::size_t>(kChunk, pairs.size() - start));
      std::vector<CMat> candidates(count);
#pragma omp parallel for schedule(static)
      for (int i = 0; i < count; ++i) {
        const auto& [f, b] = pairs[start + i];
        candidates[i] = commutator(frontier[f], accepted[b]);
      }
      for (int i = 0; i < count && span.dimension() < cap; ++i)
        if (span.try_add(candidates[i])) {
          accepted.push_back(candidates[i]);
          new_frontier.push_back(std::move(candidates[i]));
        }
    }
    frontier = std::move(new_frontier);
    result.trajectory.push_back(span.dimension());
    result.dimension = span.dimension();
  }
  result.dimension = span.dimension();
  result.basis = std::move(accepted);
  return result;
}

namespace serial {

CMat left_matrix_ref(const CMat& a) {
  const QubitCount n = qubits_for_hilbert_dim(a.rows(), "left_matrix_ref");
  const int dim_op = n.operator_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(n.hilbert_dim());
  CMat out(dim_op, dim_op);
  for (int mu = 0; mu < dim_op; ++mu)
    for (int alpha = 0; alpha < dim_op; ++alpha)
      out(mu, alpha) = scale * (basis[alpha] * basis[mu] * a).trace();
  return out;
}

CMat right_matrix_ref(const CMat& a) {
  const QubitCount n = qubits_for_hilbert_dim(a.rows(), "right_matrix_ref");
  const int dim_op = n.operator_dim();
  const auto& basis = pauli_basis(n);
  const double scale = 1.0 / double(n.hilbert_dim());
  CMat out(dim_op, dim_op);
  for (int alpha = 0; alpha < dim_op; ++alpha)
    for (int nu = 0; nu < dim_op; ++nu)
      out(alpha, nu) = scale * (basis[alpha] * basis[nu] * a).trace();
  return out;
}

ClosureResult lie_closure(const std::vector<CMat>& gens, int max_dim,
                          int max_rounds) {
  if (gens.empty()) return {0, {0}};
  const int d = int(gens.front().rows());
  const int cap = std::min(max_dim, 2 * d * d);
  RealSpan span(d, cap);
  std::vector<CMat> accepted;
  for (const auto& g : gens)
    if (span.try_add(g)) accepted.push_back(g);
  ClosureResult result{span.dimension(), {span.dimension()}};
  bool grew = true;
  int rounds = 0;
  while (grew && span.dimension() < cap && rounds++ < max_rounds) {
    grew = false;
    const std::size_t end = accepted.size();
    for (std::size_t i = 0; i < end && span.dimension() < cap; ++i)
      for (std::size_t j = 0; j < end && span.dimension() < cap; ++j) {
        if (i == j) continue;
        CMat c = commutator(accepted[i], accepted[j]);
        if (span.try_add(c)) {
          accepted.push_back(std::move(c));
          grew = true;
        }
      }
    result.trajectory.push_back(span.dimension());
    result.dimension = span.dimension();
  }
  result.basis = std::move(accepted);
  return result;
}

}  // namespace serial

}  // namespace ptm
