#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qhopf/qrat.hpp"

namespace qhopf {

// Dense matrix over Q(q).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static Mat identity(int n);
  static Mat diag(const std::vector<QRat>& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  QRat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
  const QRat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const QRat& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const;
  Mat inverse() const;
  int rank() const;
  bool is_zero() const;
  int nonzeros() const;
  // Entrywise q -> qv.
  std::vector<mpq_class> eval(const mpq_class& qv) const;
  // Plain Kronecker product.
  Mat kron(const Mat& b) const;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<QRat> a_;
};

// Constant tensors of the q-quaternion algebra.
// Quaternionic indices are 0, 1 (standing for 1, 2); a pair (a, a') has
// position 2a + a'. Vector indices use positions 0..3 for the labels
// (-2, -1, 1, 2) (equivalently 1..4).
namespace tensors {

// epsilon_{ab} = [[0, 1], [-q, 0]]
Mat eps();
// epsilon^{ab} = eps()^{-1} = [[0, -1/q], [1, 0]]
Mat eps_up();
// Rhat^{ab}_{cd} as a 4x4 matrix, row (a, b), column (c, d).
Mat rhat();
Mat rhat_inv();
Mat proj_s();
Mat proj_a();
// Q = -eps^{-1} eps^T
Mat qmat();

// (A (x) B) in the pair basis: row (i, j), column (h, k) with
// i = (a, a'), j = (b, b'), entry A^{ab}_{cd} B^{a'b'}_{c'd'}.
Mat pair_kron(const Mat& a, const Mat& b);
// Diagonal B on pair positions: (q, 1, -q, 1).
Mat bmat();
// B (x) B on pair-of-pair positions.
Mat bmat2();
// q^{-1} B2 (Rhat (x) Rhat) B2^{-1}
Mat rhat4();
struct Projectors {
  Mat s, a, ap, A, t;
};
Projectors projectors4();
// Same projectors in the quaternionic pair basis (no B conjugation).
Projectors projectors_pair();
// g_{ab} and its inverse g^{ab}.
Mat metric();
Mat metric_inv();

// Four-index q-epsilon with the constant k supplied; 256 entries at
// position ((a * 4 + b) * 4 + c) * 4 + d.
std::vector<QRat> eps4(const QRat& k);
// Number of listed nonzero table entries (without the k entries).
int eps4_listed();
struct KResolution {
  QRat k;
  bool unique = false;
  // Entries of the 16x16 comparison that differ at the resolved k.
  int raw_mismatches = 0;
};
// Solves (1/[2]_q) g g eps4 = P_a - P_a' entrywise as 16x16 matrices.
KResolution resolve_k();
// (P_s + P_t) annihilates the table in each adjacent slot pair.
bool eps4_antisymmetric(const std::vector<QRat>& e);
// Hodge coefficient matrix (1/[2]_q) eps_{kh}^{ij} with the given k, row (i, j), column (h, k).
Mat hodge_from_eps4(const QRat& k);

}  // namespace tensors

// Canonical JSON-ready strings of a matrix, row major.
std::vector<std::string> mat_strings(const Mat& m);

}  // namespace qhopf
