#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mtk/exterior.hpp"

using namespace mtk;

namespace {
std::mt19937 rng(7);
std::normal_distribution<double> gauss;
Vec4 rand4() { return Vec4(gauss(rng), gauss(rng), gauss(rng), gauss(rng)); }
Mat4 rand_mat4() {
  Mat4 A;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) A(i, j) = gauss(rng);
  return A;
}
}  // namespace

TEST_CASE("symplectic matrices and omega") {
  CHECK((sympJ4() * sympJ4() + Mat4::Identity()).norm() == 0);
  CHECK((sympJ2() * sympJ2() + Eigen::Matrix2d::Identity()).norm() == 0);
  CHECK((omega2() - Vec6(0, 1, 0, 0, 1, 0)).norm() == 0);
}

TEST_CASE("hamiltonian_A reproduces the standard layout") {
  // B = diag(-b1, b2) for n = 1 gives A = [[0, b2], [b1, 0]].
  Eigen::MatrixXd B(2, 2);
  B << -3, 0, 0, 5;
  Eigen::MatrixXd A = hamiltonian_A(B);
  CHECK(A(0, 0) == 0);
  CHECK(A(0, 1) == 5);
  CHECK(A(1, 0) == 3);
  CHECK(A(1, 1) == 0);
  // J A = B and A = -J B for symmetric B.
  Mat4 B4;
  B4 << 2, 1, 0, -1, 1, 3, 2, 0, 0, 2, -1, 1, -1, 0, 1, 4;
  Eigen::MatrixXd A4 = hamiltonian_A(B4);
  CHECK((sympJ4() * A4 - B4).norm() < 1e-14);
}

TEST_CASE("induced matrix equals the derivation-rule oracle") {
  for (int k = 0; k < 50; ++k) {
    const Mat4 A = rand_mat4();
    CHECK((induced_matrix_2(A) - induced_matrix_2_oracle(A)).norm() < 1e-13);
  }
}

TEST_CASE("induced matrix functoriality and trace") {
  for (int k = 0; k < 10; ++k) {
    const Mat4 A = rand_mat4();
    // Trace of the induced matrix is 3 Trace A (each eigen-sum counted).
    CHECK(induced_matrix_2(A).trace() ==
          doctest::Approx(3 * A.trace()).epsilon(1e-12));
    // Commutation with wedge: A2 (u ^ v) = Au ^ v + u ^ Av.
    const Vec4 u = rand4(), v = rand4();
    const Vec6 lhs = induced_matrix_2(A) * wedge_vectors(u, v);
    const Vec6 rhs = wedge_vectors(A * u, v) + wedge_vectors(u, A * v);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("compound matrix is multiplicative and exponentiates the induced") {
  for (int k = 0; k < 10; ++k) {
    const Mat4 A = rand_mat4(), B = rand_mat4();
    CHECK((compound_matrix_2(A * B) -
           compound_matrix_2(A) * compound_matrix_2(B))
              .norm() < 1e-12);
    // C2 maps wedges of images: C2(M)(u ^ v) = Mu ^ Mv.
    const Vec4 u = rand4(), v = rand4();
    CHECK((compound_matrix_2(A) * wedge_vectors(u, v) -
           wedge_vectors(A * u, A * v))
              .norm() < 1e-12);
  }
  CHECK((compound_matrix_2(Mat4::Identity()) - Mat6::Identity()).norm() == 0);
}

TEST_CASE("wedge coordinates and vol pairing") {
  const Vec4 e1 = Vec4::Unit(0), e2 = Vec4::Unit(1), e3 = Vec4::Unit(2),
             e4 = Vec4::Unit(3);
  CHECK((wedge_vectors(e1, e2) - Vec6::Unit(0)).norm() == 0);
  CHECK((wedge_vectors(e3, e4) - Vec6::Unit(5)).norm() == 0);
  CHECK((wedge_vectors(e2, e1) + Vec6::Unit(0)).norm() == 0);
  // vol pairing: E1 ^ E6 = vol, E2 ^ E5 = -vol, E3 ^ E4 = vol.
  CHECK(vol_pairing(Vec6::Unit(0), Vec6::Unit(5)) == 1);
  CHECK(vol_pairing(Vec6::Unit(1), Vec6::Unit(4)) == -1);
  CHECK(vol_pairing(Vec6::Unit(2), Vec6::Unit(3)) == 1);
  // Symmetry of the pairing on 2-forms.
  for (int k = 0; k < 10; ++k) {
    const Vec6 U = wedge_vectors(rand4(), rand4());
    const Vec6 V = wedge_vectors(rand4(), rand4());
    CHECK(vol_pairing(U, V) == doctest::Approx(vol_pairing(V, U)).epsilon(1e-12));
  }
}

TEST_CASE("plucker invariants cut out the Lagrangian Grassmannian") {
  for (int k = 0; k < 20; ++k) {
    const Vec4 u = rand4(), v = rand4();
    const Vec6 U = wedge_vectors(u, v);
    auto [i1, i2] = plucker_invariants(U);
    CHECK(std::abs(i1) < 1e-12 * U.squaredNorm());  // decomposable
    // I2 = omega pairing: vanishes iff the plane is Lagrangian.
    const double om = u(0) * v(2) + u(1) * v(3) - u(2) * v(0) - u(3) * v(1);
    CHECK(i2 == doctest::Approx(om).epsilon(1e-12));
  }
  // A generic (non-decomposable) 2-form has I1 != 0.
  const Vec6 gen = Vec6::Unit(0) + Vec6::Unit(5);
  CHECK(plucker_invariants(gen).first == 1);
  CHECK(!is_lagrangian(gen));
}

TEST_CASE("wedge_frame matches wedge_vectors and rejects rank deficiency") {
  for (int k = 0; k < 20; ++k) {
    Frame42 Z;
    Z.col(0) = rand4();
    Z.col(1) = rand4();
    CHECK((wedge_frame(Z) - wedge_vectors(Z.col(0), Z.col(1))).norm() < 1e-12);
  }
  Frame42 bad;
  bad.col(0) = Vec4::Unit(0);
  bad.col(1) = 2 * Vec4::Unit(0);
  CHECK_THROWS(wedge_frame(bad));
}

TEST_CASE("induced inner product equals the Gram determinant") {
  for (int k = 0; k < 20; ++k) {
    const Vec4 u = rand4(), v = rand4(), w = rand4(), z = rand4();
    Eigen::Matrix2d G;
    G << u.dot(w), u.dot(z), v.dot(w), v.dot(z);
    CHECK(induced_inner_product(wedge_vectors(u, v), wedge_vectors(w, z)) ==
          doctest::Approx(G.determinant()).epsilon(1e-10));
  }
}

TEST_CASE("3-form pairing: U ^ xi vanishes exactly on the plane") {
  for (int k = 0; k < 20; ++k) {
    const Vec4 u = rand4(), v = rand4(), w = rand4();
    const Vec6 U = wedge_vectors(u, v);
    CHECK(wedge_2form_vector(U, u).norm() < 1e-12);
    CHECK(wedge_2form_vector(U, v).norm() < 1e-12);
    CHECK(wedge_2form_vector(U, 0.5 * u - 2.0 * v).norm() < 1e-12);
    CHECK(wedge_2form_vector(U, w).norm() > 1e-8);
  }
}

TEST_CASE("crossing form: omega ^ xi ^ A xi equals the bilinear form") {
  for (int k = 0; k < 30; ++k) {
    Mat4 B;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= i; ++j) B(i, j) = B(j, i) = gauss(rng);
    const Vec4 xi = rand4();
    CHECK(omega_wedge_xi_Axi(xi, hamiltonian_A(B)) ==
          doctest::Approx(xi.dot(B * xi)).epsilon(1e-10));
  }
}

TEST_CASE("omega wedge sign is the sign of I2") {
  CHECK(omega_wedge_sign(Vec6::Unit(1)) == 1);
  CHECK(omega_wedge_sign(-Vec6::Unit(4)) == -1);
}

TEST_CASE("Lagrangian frame test") {
  // Graph frames [X; S X] with S symmetric are Lagrangian.
  for (int k = 0; k < 10; ++k) {
    Eigen::Matrix2d X, S;
    X << gauss(rng), gauss(rng), gauss(rng), gauss(rng);
    S << 1.5, -0.25, -0.25, 0.5;
    Frame42 Z;
    Z << X, S * X;
    CHECK(frame_is_lagrangian(Z));
    CHECK(is_lagrangian(wedge_frame(Z), 1e-9));
  }
  Frame42 notlag;
  notlag << 1, 0, 0, 1, 0, 1, -1, 0;  // span{e1 + e4, e2 - e3}: omega = -2
  CHECK(!frame_is_lagrangian(notlag));
}
