#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "helpers.hpp"
#include "ptm/pseudo_gate.hpp"

using namespace ptm;
using namespace ptm::testing;

TEST_SUITE_BEGIN("pseudo_gate");

TEST_CASE("identity operator gives identity pseudo-gates") {
  const CMat id = CMat::Identity(4, 4);
  CHECK(diff(left_matrix(id).matrix, CMat(CMat::Identity(16, 16))) < 1e-14);
  CHECK(diff(right_matrix(id).matrix, CMat(CMat::Identity(16, 16))) < 1e-14);
}

TEST_CASE("left matrix of sigma_1 against the multiplication table") {
  // sigma_1 sigma_0 = sigma_1, sigma_1 sigma_1 = sigma_0,
  // sigma_1 sigma_2 = i sigma_3, sigma_1 sigma_3 = -i sigma_2.
  const CMat l = left_matrix(sigma(1)).matrix;
  CMat expected = CMat::Zero(4, 4);
  expected(1, 0) = 1.0;
  expected(0, 1) = 1.0;
  expected(3, 2) = kI;
  expected(2, 3) = -kI;
  CHECK(diff(l, expected) < 1e-14);
}

TEST_CASE("left and right actions move pauli coefficients correctly") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const QubitCount n(1 + trial % 2);
    const int d = n.hilbert_dim();
    const CMat a = ginibre(d, d, rng), b = ginibre(d, d, rng);
    const CVec vb = operator_to_pauli_complex(b, n);
    CHECK(max_abs(CMat((left_matrix(a).matrix * vb -
                        operator_to_pauli_complex(a * b, n))
                           .eval())) < 1e-11);
    CHECK(max_abs(CMat((right_matrix(a).matrix * vb -
                        operator_to_pauli_complex(b * a, n))
                           .eval())) < 1e-11);
  }
}

TEST_CASE("conjugation identity between left and right") {
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const QubitCount n(1 + trial % 2);
    const int d = n.hilbert_dim();
    const CMat a = ginibre(d, d, rng);
    CHECK(diff(CMat(left_matrix(a).matrix.conjugate()),
               right_matrix(CMat(a.adjoint())).matrix) < 1e-12);
  }
}

TEST_CASE("left/right homomorphism and commutation") {
  Rng rng(107);
  const CMat a = ginibre(2, 2, rng), b = ginibre(2, 2, rng);
  CHECK(diff(CMat(left_matrix(a).matrix * left_matrix(b).matrix),
             left_matrix(CMat(a * b)).matrix) < 1e-12);
  CHECK(diff(CMat(right_matrix(a).matrix * right_matrix(b).matrix),
             right_matrix(CMat(b * a)).matrix) < 1e-12);
  CHECK(max_abs(commutator(left_matrix(a).matrix, right_matrix(b).matrix)) <
        1e-12);
}

TEST_CASE("gate_from_lr matches kraus_to_gate") {
  const QubitCount one(1);
  CHECK(diff(gate_from_lr(KrausSet(one, {sigma(0)})).matrix,
             RMat(RMat::Identity(4, 4))) < 1e-14);

  RMat expected = RMat::Identity(4, 4);
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(diff(gate_from_lr(KrausSet(one, {sigma(1)})).matrix, expected) <
        1e-14);

  Rng rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    const QubitCount n(2);
    KrausSet ch(n, random_trace_preserving_kraus(n, 2, rng));
    CHECK(diff(gate_from_lr(ch).matrix, kraus_to_gate(ch).matrix) < 1e-10);
  }
}

TEST_CASE("weyl commutator identity, matrix-computed form") {
  // [H_{mu nu}, H_{alpha beta}] = d_{nu alpha} H_{mu beta}
  //                             - d_{beta mu} H_{alpha nu}
  const int dim = 4;
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = 0; nu < dim; ++nu)
      for (int alpha = 0; alpha < dim; ++alpha)
        for (int beta = 0; beta < dim; ++beta) {
          const CMat lhs = commutator(weyl_generator(mu, nu, dim).matrix,
                                      weyl_generator(alpha, beta, dim).matrix);
          CMat rhs = CMat::Zero(dim, dim);
          if (nu == alpha) rhs += weyl_generator(mu, beta, dim).matrix;
          if (beta == mu) rhs -= weyl_generator(alpha, nu, dim).matrix;
          CHECK(diff(lhs, rhs) == 0.0);
        }
}

TEST_CASE("commutator special cases") {
  const CMat h01 = weyl_generator(0, 1, 4).matrix;
  const CMat h10 = weyl_generator(1, 0, 4).matrix;
  const CMat h23 = weyl_generator(2, 3, 4).matrix;
  CMat diag = CMat::Zero(4, 4);
  diag(0, 0) = 1.0;
  diag(1, 1) = -1.0;
  CHECK(diff(commutator(h01, h10), diag) == 0.0);
  CHECK(max_abs(commutator(h01, h23)) == 0.0);
  CHECK(max_abs(commutator(h01, h01)) == 0.0);
}

TEST_CASE("hermitian basis counts and properties") {
  const auto basis4 = hermitian_basis(4);
  CHECK(basis4.size() == 16);
  int diag = 0, sym = 0, imag = 0;
  for (const auto& g : basis4) {
    CHECK(diff(g.matrix, CMat(g.matrix.adjoint())) == 0.0);
    switch (g.kind) {
      case GeneratorKind::Diag: ++diag; break;
      case GeneratorKind::SymReal: ++sym; break;
      case GeneratorKind::SymImag: ++imag; break;
      default: break;
    }
  }
  CHECK(diag == 4);
  CHECK(sym == 6);
  CHECK(imag == 6);
}

TEST_CASE("hermitian basis of dim 16 spans 256 dimensions") {
  const auto basis = hermitian_basis(16);
  CHECK(basis.size() == 256);
  RMat gram(256, 256);
  for (int i = 0; i < 256; ++i)
    for (int j = 0; j < 256; ++j)
      gram(i, j) = hs_inner(basis[i].matrix, basis[j].matrix).real();
  Eigen::FullPivLU<RMat> lu(gram);
  lu.setThreshold(1e-9);
  CHECK(lu.rank() == 256);
}

TEST_CASE("one-parameter pseudo-gates of hermitian generators are unitary") {
  Rng rng(113);
  std::uniform_real_distribution<double> time(-2.0, 2.0);
  const auto basis = hermitian_basis(4);
  for (int i = 0; i < 10; ++i) {
    const auto& h = basis[rng() % basis.size()];
    const double t = time(rng);
    const CMat l = (kI * t * h.matrix).exp();
    CHECK(diff(CMat(l.adjoint() * l), CMat(CMat::Identity(4, 4))) < 1e-10);
  }
}

TEST_CASE("commutator limit converges to the exponential") {
  const CMat a = weyl_generator(0, 1, 4).matrix;
  const CMat b = weyl_generator(1, 0, 4).matrix;
  const CMat target = CMat(CMat(0.5 * commutator(a, b)).exp());

  CHECK(diff(commutator_limit(a, a, 0.7, 5), CMat(CMat::Identity(4, 4))) <
        1e-12);

  double previous = 1e100;
  for (int steps : {10, 100, 1000}) {
    const double err = diff(commutator_limit(a, b, 0.5, steps), target);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("commutator limit rate on random hermitian pairs") {
  Rng rng(127);
  for (int trial = 0; trial < 5; ++trial) {
    CMat ga = ginibre(4, 4, rng), gb = ginibre(4, 4, rng);
    const CMat a = 0.5 * (ga + ga.adjoint());
    const CMat b = 0.5 * (gb + gb.adjoint());
    const CMat target = CMat(CMat(0.4 * commutator(a, b)).exp());
    const double e100 = diff(commutator_limit(a, b, 0.4, 100), target);
    const double e400 = diff(commutator_limit(a, b, 0.4, 400), target);
    CHECK(e400 < e100);
    // O(1/sqrt(steps)): quadrupling the steps should halve the error.
    CHECK(e400 < 0.65 * e100);
  }
}

TEST_CASE("combination limit") {
  Rng rng(131);
  CMat ga = ginibre(4, 4, rng), gb = ginibre(4, 4, rng);
  const CMat a = 0.5 * (ga + ga.adjoint());
  const CMat b = 0.5 * (gb + gb.adjoint());
  const complexd ca(0.8, 0.1), cb(0.4, -0.2);

  // cb = 0 is exact at any step count.
  CHECK(diff(combination_limit(a, b, ca, 0.0, 3),
             CMat(CMat(kI * ca * a).exp())) < 1e-12);

  // Commuting pair is exact as well.
  CMat d1 = CMat::Zero(4, 4), d2 = CMat::Zero(4, 4);
  d1(0, 0) = 1.0;
  d2(1, 1) = 1.0;
  CHECK(diff(combination_limit(d1, d2, ca, cb, 2),
             CMat(CMat(kI * (ca * d1 + cb * d2)).exp())) < 1e-12);

  const CMat target = CMat(CMat(kI * (ca * a + cb * b)).exp());
  double previous = 1e100;
  std::vector<double> errs;
  for (int steps : {16, 64, 256}) {
    const double err = diff(combination_limit(a, b, ca, cb, steps), target);
    CHECK(err < previous);
    errs.push_back(err);
    previous = err;
  }
  // First-order Trotter: error drops about 4x per quadrupling.
  CHECK(errs[1] / errs[0] < 0.35);
  CHECK(errs[2] / errs[1] < 0.35);
}

TEST_CASE("swap pseudo-gate") {
  const CMat sw = swap_pseudo_gate();
  CHECK(diff(CMat(sw * sw), CMat(CMat::Identity(16, 16))) == 0.0);

  const CMat id2 = CMat::Identity(2, 2);
  CHECK(diff(conjugate_by_swap(left_matrix(kron(sigma(1), id2)).matrix),
             left_matrix(kron(id2, sigma(1))).matrix) < 1e-13);

  Rng rng(137);
  const RVec c1 = density_to_pauli(random_density(QubitCount(1), rng)).coeffs();
  const RVec c2 = density_to_pauli(random_density(QubitCount(1), rng)).coeffs();
  CVec prod(16), swapped(16);
  for (int m1 = 0; m1 < 4; ++m1)
    for (int m2 = 0; m2 < 4; ++m2) {
      prod[4 * m1 + m2] = c1[m1] * c2[m2];
      swapped[4 * m1 + m2] = c2[m1] * c1[m2];
    }
  CHECK(max_abs(CMat((sw * prod - swapped).eval())) < 1e-14);
}

TEST_CASE("primitivity of local and entangling gates") {
  CHECK(is_primitive(TransferGate::identity(QubitCount(2)), 50, 7).primitive);

  CMat cnot = CMat::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const TransferGate cnot_gate = unitary_to_gate(cnot);
  const PrimitivityVerdict verdict = is_primitive(cnot_gate, 200, 7);
  CHECK_FALSE(verdict.primitive);
  CHECK(verdict.second_singular_value > kProductStateTol);

  // The |+><+| x |0><0| witness produces a Bell state; its coefficient
  // matrix has second singular value 1/2.
  RVec plus(4), zero(4);
  const double c = 1.0 / std::sqrt(2.0);
  plus << c, c, 0, 0;
  zero << c, 0, 0, c;
  RVec prod(16);
  for (int m1 = 0; m1 < 4; ++m1)
    for (int m2 = 0; m2 < 4; ++m2) prod[4 * m1 + m2] = plus[m1] * zero[m2];
  const RVec out = cnot_gate.matrix * prod;
  RMat reshaped(4, 4);
  for (int m1 = 0; m1 < 4; ++m1)
    for (int m2 = 0; m2 < 4; ++m2) reshaped(m1, m2) = out[4 * m1 + m2];
  Eigen::JacobiSVD<RMat> svd(reshaped);
  CHECK(svd.singularValues()[1] > 0.4);

  Rng rng(139);
  const TransferGate local{
      QubitCount(2),
      RMat(Eigen::kroneckerProduct(unitary_to_gate(random_unitary(2, rng)).matrix,
                                   unitary_to_gate(random_unitary(2, rng)).matrix)),
      GateClass::TracePreserving};
  CHECK(is_primitive(local, 200, 11).primitive);
}

TEST_CASE("closure of trivial and one-parameter generator sets") {
  const CMat h = weyl_generator(0, 1, 4).matrix;
  CHECK(lie_closure({h}, 32).dimension == 1);

  // Matrix units are real matrices: their real commutator closure is
  // gl(4,R), dimension 16.
  std::vector<CMat> units;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      units.push_back(weyl_generator(mu, nu, 4).matrix);
  CHECK(lie_closure(units, 32).dimension == 16);

  // Commutators are traceless, so brackets of the subgroup tangents i H
  // reach everything except the remaining trace direction: 31 of 32.
  std::vector<CMat> tangents;
  for (const auto& u : units) tangents.push_back(kI * u);
  CHECK(lie_closure(tangents, 32).dimension == 31);

  // A seed whose trace points in a new complex direction supplies the
  // missing dimension.
  std::vector<CMat> lifted = tangents;
  lifted.push_back(weyl_generator(0, 0, 4).matrix);
  CHECK(lie_closure(lifted, 32).dimension == 32);
}

TEST_CASE("closure dimension is monotone in the generator set") {
  Rng rng(149);
  std::vector<CMat> gens;
  int previous = 0;
  for (int i = 0; i < 5; ++i) {
    CMat g = ginibre(4, 4, rng);
    gens.push_back(0.5 * (g + g.adjoint()));
    const int dim = lie_closure(gens, 32).dimension;
    CHECK(dim >= previous);
    previous = dim;
  }
}

TEST_CASE("closure trajectory is recorded") {
  // Hermitian seeds span 16 dimensions; brackets add the 15 traceless
  // anti-Hermitian directions and stop there (i I is unreachable).
  std::vector<CMat> gens;
  for (const auto& h : hermitian_basis(4)) gens.push_back(h.matrix);
  const ClosureResult result = lie_closure(gens, 32);
  CHECK(result.dimension == 31);
  CHECK(result.trajectory.front() == 16);
  CHECK(result.trajectory.back() == 31);
  CHECK(result.basis.size() == 31);
}

TEST_SUITE_END();
