#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qr/states.hpp"
#include "qr/tensor.hpp"

using namespace qr;

TEST_CASE("kron matches hand-computed blocks") {
  Mat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  const Mat k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 1) - cxd(5)) < 1e-15);   // a00*b01
  CHECK(std::abs(k(2, 1) - cxd(15)) < 1e-15);  // a10*b01
  CHECK(std::abs(k(3, 3) - cxd(28)) < 1e-15);  // a11*b11

  Vec u(2), v(2);
  u << 1, 2;
  v << 3, 4;
  const Vec kv = kron_vec(u, v);
  CHECK(std::abs(kv(0) - cxd(3)) < 1e-15);
  CHECK(std::abs(kv(3) - cxd(8)) < 1e-15);
}

TEST_CASE("qubit 0 is the most significant bit") {
  // X on qubit 0 of |00> must give |10> = index 2
  Vec s = Vec::Zero(4);
  s(0) = 1.0;
  const Vec t = apply_on_qubits(s, pauli_x(), {0}, 2);
  CHECK(std::abs(t(2) - cxd(1)) < 1e-15);
  // X on qubit 1 gives |01> = index 1
  const Vec t2 = apply_on_qubits(s, pauli_x(), {1}, 2);
  CHECK(std::abs(t2(1) - cxd(1)) < 1e-15);
}

TEST_CASE("apply_on_qubits equals explicit kron embedding") {
  Vec s(8);
  for (int i = 0; i < 8; ++i) s(i) = cxd(0.1 * i, 0.05 * i - 0.2);
  // operator on qubit 1 of 3: I (x) U (x) I
  Mat2 u;
  u << cxd(0.3, 0.1), cxd(-0.2, 0.4), cxd(0.9, 0), cxd(0, -0.5);
  const Mat big = kron(kron(Mat2::Identity(), u), Mat2::Identity());
  const Vec got = apply_on_qubits(s, u, {1}, 3);
  const Vec want = big * s;
  CHECK((got - want).norm() < 1e-14);
  // two-target operator on (0,2): targets[0] is the operator MSB
  Mat u2 = kron(u, pauli_x());
  Vec got2 = apply_on_qubits(s, u2, {0, 2}, 3);
  Vec step = apply_on_qubits(s, pauli_x(), {2}, 3);
  step = apply_on_qubits(step, u, {0}, 3);
  CHECK((got2 - step).norm() < 1e-14);
}

TEST_CASE("project_out keeps the rest in ascending order") {
  // |psi> = |0>_0 |1>_1 |+>_2 ; projecting qubit 1 on <1| leaves |0>|+>
  Vec zero = Vec::Zero(2), one = Vec::Zero(2), plus(2);
  zero(0) = 1;
  one(1) = 1;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Vec psi = kron_vec(kron_vec(zero, one), plus);
  const Vec r = project_out(psi, one, {1}, 3);
  const Vec want = kron_vec(zero, plus);
  CHECK((r - want).norm() < 1e-14);
  // Bell projection of a Bell pair gives unit amplitude
  const Vec bell = bell_basis()[kPhiPlus];
  const Vec scalarish = project_out(bell, bell, {0, 1}, 2);
  CHECK(scalarish.size() == 1);
  CHECK(std::abs(scalarish(0) - cxd(1)) < 1e-14);
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  const Vec bell = bell_basis()[kPsiMinus];
  const Mat rho = bell * bell.adjoint();
  const Mat red = partial_trace(rho, {0}, 2);
  CHECK((red - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(partial_trace(rho, {0, 1}, 2).trace() - cxd(1)) < 1e-14);
}

TEST_CASE("measure branches are complete and orthonormality is enforced") {
  Vec psi(4);
  psi << 0.5, cxd(0, 0.5), -0.5, cxd(0.5, 0);
  std::vector<Vec> basis(bell_basis().begin(), bell_basis().end());
  const auto branches = measure(psi, basis, {0, 1}, 2);
  double total = 0.0;
  for (const auto& b : branches) total += b.probability;
  CHECK(std::abs(total - 1.0) < kTolNorm);

  std::vector<Vec> bad = basis;
  bad[1] = basis[0];  // not orthonormal
  CHECK_THROWS_AS(measure(psi, bad, {0, 1}, 2), std::invalid_argument);
}

TEST_CASE("density-matrix overload agrees with the pure-state routine") {
  Vec psi(4);
  psi << 0.6, 0, cxd(0, 0.8), 0;
  const Mat rho = psi * psi.adjoint();
  Mat2 u;
  u << 0, cxd(0, -1), cxd(0, 1), 0;  // sigma_y
  const Mat r1 = apply_on_qubits(rho, Mat(u), {1}, 2);
  const Vec p1 = apply_on_qubits(psi, Mat(u), {1}, 2);
  CHECK((r1 - p1 * p1.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}
