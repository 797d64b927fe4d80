#include "mtk/exterior.hpp"

#include <cmath>

namespace mtk {

namespace {
// Basis index pairs of E1..E6 (0-based vector indices).
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
// Basis triples of wedge^3(R^4).
constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}  // namespace

Mat4 sympJ4() {
  Mat4 J = Mat4::Zero();
  J(0, 2) = -1;
  J(1, 3) = -1;
  J(2, 0) = 1;
  J(3, 1) = 1;
  return J;
}

Eigen::Matrix2d sympJ2() {
  Eigen::Matrix2d J;
  J << 0, -1, 1, 0;
  return J;
}

Eigen::MatrixXd hamiltonian_A(const Eigen::MatrixXd& B) {
  const auto m = B.rows();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  const auto n = m / 2;
  J.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  J.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  // J^{-1} = -J for the standard symplectic matrix.
  return -J * B;
}

Vec6 omega2() {
  Vec6 w = Vec6::Zero();
  w(1) = 1;
  w(4) = 1;
  return w;
}

Mat6 induced_matrix_2(const Mat4& A) {
  const auto& a = A;  // a(i,j) zero-based; the table below is 1-based in comments.
  Mat6 M;
  // Explicit entry table of the induced matrix on wedge^2(R^4).
  M << a(0, 0) + a(1, 1), a(1, 2), a(1, 3), -a(0, 2), -a(0, 3), 0,
       a(2, 1), a(0, 0) + a(2, 2), a(2, 3), a(0, 1), 0, -a(0, 3),
       a(3, 1), a(3, 2), a(0, 0) + a(3, 3), 0, a(0, 1), a(0, 2),
       -a(2, 0), a(1, 0), 0, a(1, 1) + a(2, 2), a(2, 3), -a(1, 3),
       -a(3, 0), 0, a(1, 0), a(3, 2), a(1, 1) + a(3, 3), a(1, 2),
       0, -a(3, 0), a(2, 0), -a(3, 1), a(2, 1), a(2, 2) + a(3, 3);
  return M;
}

Mat6 induced_matrix_2_oracle(const Mat4& A) {
  Mat6 M = Mat6::Zero();
  for (int J = 0; J < 6; ++J) {
    const Vec4 ek = Vec4::Unit(kPairs[J][0]);
    const Vec4 el = Vec4::Unit(kPairs[J][1]);
    // Derivation rule: A^(2)(u^v) = (Au)^v + u^(Av).
    const Vec6 img = wedge_vectors(A * ek, el) + wedge_vectors(ek, A * el);
    M.col(J) = img;
  }
  return M;
}

Mat6 compound_matrix_2(const Mat4& M) {
  Mat6 C;
  for (int J = 0; J < 6; ++J)
    C.col(J) = wedge_vectors(M.col(kPairs[J][0]), M.col(kPairs[J][1]));
  return C;
}

Vec6 wedge_vectors(const Vec4& u, const Vec4& v) {
  Vec6 w;
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    w(k) = u(i) * v(j) - u(j) * v(i);
  }
  return w;
}

Vec6 wedge_frame(const Frame42& Z) {
  const Vec6 w = wedge_vectors(Z.col(0), Z.col(1));
  if (w.norm() < 1e-12 * (1.0 + Z.norm() * Z.norm()))
    throw std::runtime_error("degenerate frame");
  return w;
}

std::pair<double, double> plucker_invariants(const Vec6& U) {
  const double I1 = U(0) * U(5) - U(1) * U(4) + U(2) * U(3);
  const double I2 = U(1) + U(4);
  return {I1, I2};
}

double induced_inner_product(const Vec6& U, const Vec6& V) { return U.dot(V); }

int omega_wedge_sign(const Vec6& U) {
  const double I2 = U(1) + U(4);
  if (I2 > 0) return 1;
  if (I2 < 0) return -1;
  return 0;
}

double vol_pairing(const Vec6& U, const Vec6& V) {
  // E1^E6 = vol, E2^E5 = -vol, E3^E4 = vol, and symmetric counterparts.
  return U(0) * V(5) - U(1) * V(4) + U(2) * V(3) + U(3) * V(2) -
         U(4) * V(1) + U(5) * V(0);
}

Vec4 wedge_2form_vector(const Vec6& U, const Vec4& xi) {
  Vec4 out = Vec4::Zero();
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    for (int m = 0; m < 4; ++m) {
      if (m == i || m == j) continue;
      // Sort (i, j, m) and track the permutation sign.
      int t0 = i, t1 = j, t2 = m, s = 1;
      if (t0 > t1) { std::swap(t0, t1); s = -s; }
      if (t1 > t2) { std::swap(t1, t2); s = -s; }
      if (t0 > t1) { std::swap(t0, t1); s = -s; }
      for (int T = 0; T < 4; ++T) {
        if (kTriples[T][0] == t0 && kTriples[T][1] == t1 && kTriples[T][2] == t2) {
          out(T) += s * U(k) * xi(m);
          break;
        }
      }
    }
  }
  return out;
}

double omega_wedge_xi_Axi(const Vec4& xi, const Mat4& A) {
  // omega ^ xi ^ (A xi): pair the 3-form omega^xi with the vector A xi.
  // (e_{i}^e_{j}^e_{k}) ^ e_m = sign * vol with m the missing index.
  const Vec4 t = wedge_2form_vector(omega2(), xi);
  const Vec4 v = A * xi;
  // Triple T misses index: T0={0,1,2} misses 3 (+), T1={0,1,3} misses 2 (-),
  // T2={0,2,3} misses 1 (+), T3={1,2,3} misses 0 (-).
  return t(0) * v(3) - t(1) * v(2) + t(2) * v(1) - t(3) * v(0);
}

bool is_lagrangian(const Vec6& U, double tol) {
  const auto [I1, I2] = plucker_invariants(U);
  const double s = tol * (1.0 + U.squaredNorm());
  return std::abs(I1) <= s && std::abs(I2) <= s;
}

bool frame_is_lagrangian(const Frame42& Z, double tol) {
  const Eigen::Matrix2d X = Z.topRows<2>();
  const Eigen::Matrix2d Y = Z.bottomRows<2>();
  return (Y.transpose() * X - X.transpose() * Y).norm() <=
         tol * (1.0 + Z.squaredNorm());
}

}  // namespace mtk
