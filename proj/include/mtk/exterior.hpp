// Exterior-algebra kernel for 2-forms on R^4.
//
// Coordinates on wedge^2(R^4) use the fixed basis
//   E1 = e1^e2, E2 = e1^e3, E3 = e1^e4, E4 = e2^e3, E5 = e2^e4, E6 = e3^e4,
// so a 2-form U is a 6-vector (U1..U6).  The symplectic matrix is
//   J = [ 0 -I ; I 0 ]  and  A = J^{-1} B = -J B  for symmetric B.
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>

namespace mtk {

using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Frame42 = Eigen::Matrix<double, 4, 2>;

// Standard symplectic matrices J (4x4 and 2x2 blocks).
Mat4 sympJ4();
Eigen::Matrix2d sympJ2();

// A = J^{-1} B for a symmetric B of size 2 or 4 (works for any square B).
Eigen::MatrixXd hamiltonian_A(const Eigen::MatrixXd& B);

// omega = E2 + E5, the 2-form of the symplectic structure.
Vec6 omega2();

// Induced matrix of A on wedge^2(R^4): the explicit 6x6 entry table.
Mat6 induced_matrix_2(const Mat4& A);

// Brute-force oracle for the same map: apply A to each factor of every
// basis 2-form via the derivation rule and re-expand.  Used in tests.
Mat6 induced_matrix_2_oracle(const Mat4& A);

// Second compound matrix (the group action on 2-forms): columns are
// M ek ^ M el, i.e. the 2x2 minors of M.  Multiplicative in M, unlike the
// derivation-rule matrix above.
Mat6 compound_matrix_2(const Mat4& M);

// Wedge of two vectors, coordinates of u^v.
Vec6 wedge_vectors(const Vec4& u, const Vec4& v);

// Plucker coordinates of the column span of a rank-2 frame (the 2x2
// minors, in the E-basis order).  Throws on a degenerate frame.
Vec6 wedge_frame(const Frame42& Z);

// (I1, I2) with I1 = U1*U6 - U2*U5 + U3*U4 (decomposability) and
// I2 = U2 + U5 (Lagrangian condition).
std::pair<double, double> plucker_invariants(const Vec6& U);

// Induced inner product: the plain 6-dimensional dot product; on
// decomposables it equals the Gram determinant of the factors.
double induced_inner_product(const Vec6& U, const Vec6& V);

// Sign of omega ^ U against vol, i.e. sign of I2; the Krein signature
// for eigenplanes of elliptic eigenvalue pairs.
int omega_wedge_sign(const Vec6& U);

// Coefficient of vol in U ^ V for two 2-forms.
double vol_pairing(const Vec6& U, const Vec6& V);

// Coordinates of U ^ xi on the basis (e1^e2^e3, e1^e2^e4, e1^e3^e4, e2^e3^e4).
Vec4 wedge_2form_vector(const Vec6& U, const Vec4& xi);

// Coefficient of vol in omega ^ xi ^ (A xi): the crossing form in its
// wedge formulation.
double omega_wedge_xi_Axi(const Vec4& xi, const Mat4& A);

// Scale-invariant Lagrangian-membership test: |I1|, |I2| <= tol*(1+|U|^2).
bool is_lagrangian(const Vec6& U, double tol = 1e-9);

// Lagrangian-frame symmetry test: Y^T X = X^T Y for Z = [X; Y].
bool frame_is_lagrangian(const Frame42& Z, double tol = 1e-12);

}  // namespace mtk
