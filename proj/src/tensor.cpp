#include "qhopf/tensor.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = QRat(1);
  return m;
}

Mat Mat::diag(const std::vector<QRat>& d) {
  int n = static_cast<int>(d.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat r(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const QRat& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const QRat& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Mat operator*(const QRat& s, const Mat& a) {
  Mat r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::inverse() const {
  if (r_ != c_) fail(ErrorKind::NotInvertible, "non-square matrix");
  int n = r_;
  Mat a = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) fail(ErrorKind::NotInvertible, "singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    QRat s = a(col, col).inv();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      QRat f = a(i, col);
      for (int j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

int Mat::rank() const {
  Mat a = *this;
  int rank = 0;
  for (int col = 0; col < c_ && rank < r_; ++col) {
    int piv = -1;
    for (int i = rank; i < r_; ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < c_; ++j) std::swap(a(piv, j), a(rank, j));
    QRat s = a(rank, col).inv();
    for (int i = rank + 1; i < r_; ++i) {
      if (a(i, col).is_zero()) continue;
      QRat f = a(i, col) * s;
      for (int j = col; j < c_; ++j)
        if (!a(rank, j).is_zero()) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

int Mat::nonzeros() const {
  int n = 0;
  for (const auto& x : a_)
    if (!x.is_zero()) ++n;
  return n;
}

std::vector<mpq_class> Mat::eval(const mpq_class& qv) const {
  std::vector<mpq_class> out;
  out.reserve(a_.size());
  for (const auto& x : a_) out.push_back(x.eval(qv));
  return out;
}

Mat Mat::kron(const Mat& b) const {
  Mat r(r_ * b.r_, c_ * b.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if ((*this)(i, j).is_zero()) continue;
      for (int k = 0; k < b.r_; ++k)
        for (int l = 0; l < b.c_; ++l) r(i * b.r_ + k, j * b.c_ + l) = (*this)(i, j) * b(k, l);
    }
  return r;
}

std::vector<std::string> mat_strings(const Mat& m) {
  std::vector<std::string> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j).str());
  return out;
}

namespace tensors {

Mat eps() {
  Mat e(2, 2);
  e(0, 1) = QRat(1);
  e(1, 0) = -QRat::q();
  return e;
}

Mat eps_up() {
  Mat e(2, 2);
  e(0, 1) = -QRat::q(-1);
  e(1, 0) = QRat(1);
  return e;
}

Mat rhat() {
  static const Mat m = [] {
    Mat e = eps(), eu = eps_up();
    Mat r(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            QRat v = eu(a, b) * e(c, d);
            if (a == c && b == d) v += QRat::q();
            r(2 * a + b, 2 * c + d) = v;
          }
    return r;
  }();
  return m;
}

Mat rhat_inv() {
  static const Mat m = rhat() - (QRat::q() - QRat::q(-1)) * Mat::identity(4);
  return m;
}

Mat proj_a() {
  static const Mat m = [] {
    Mat e = eps(), eu = eps_up();
    Mat r(4, 4);
    QRat s = -QRat::qint(2).inv();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) r(2 * a + b, 2 * c + d) = s * eu(a, b) * e(c, d);
    return r;
  }();
  return m;
}

Mat proj_s() {
  static const Mat m = Mat::identity(4) - proj_a();
  return m;
}

Mat qmat() { return QRat(-1) * (eps_up() * eps().transpose()); }

Mat pair_kron(const Mat& a, const Mat& b) {
  Mat r(16, 16);
  for (int al = 0; al < 2; ++al)
    for (int alp = 0; alp < 2; ++alp)
      for (int be = 0; be < 2; ++be)
        for (int bep = 0; bep < 2; ++bep)
          for (int ga = 0; ga < 2; ++ga)
            for (int gap = 0; gap < 2; ++gap)
              for (int de = 0; de < 2; ++de)
                for (int dep = 0; dep < 2; ++dep) {
                  const QRat& x = a(2 * al + be, 2 * ga + de);
                  if (x.is_zero()) continue;
                  const QRat& y = b(2 * alp + bep, 2 * gap + dep);
                  if (y.is_zero()) continue;
                  int i = 2 * al + alp, j = 2 * be + bep, h = 2 * ga + gap, k = 2 * de + dep;
                  r(4 * i + j, 4 * h + k) = x * y;
                }
  return r;
}

Mat bmat() { return Mat::diag({QRat::q(), QRat(1), -QRat::q(), QRat(1)}); }

Mat bmat2() {
  static const Mat m = bmat().kron(bmat());
  return m;
}

Mat rhat4() {
  static const Mat m = QRat::q(-1) * (bmat2() * pair_kron(rhat(), rhat()) * bmat2().inverse());
  return m;
}

Projectors projectors_pair() {
  static const Projectors p = [] {
    Projectors r;
    r.s = pair_kron(proj_s(), proj_s());
    r.a = pair_kron(proj_s(), proj_a());
    r.ap = pair_kron(proj_a(), proj_s());
    r.t = pair_kron(proj_a(), proj_a());
    r.A = r.a + r.ap;
    return r;
  }();
  return p;
}

Projectors projectors4() {
  static const Projectors p = [] {
    const Projectors& q = projectors_pair();
    Mat b = bmat2(), bi = bmat2().inverse();
    Projectors r;
    r.s = b * q.s * bi;
    r.a = b * q.a * bi;
    r.ap = b * q.ap * bi;
    r.t = b * q.t * bi;
    r.A = r.a + r.ap;
    return r;
  }();
  return p;
}

Mat metric() {
  static const Mat m = [] {
    Mat e = eps(), bi = bmat().inverse();
    Mat g(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        int al = a / 2, alp = a % 2, be = b / 2, bep = b % 2;
        g(a, b) = bi(a, a) * bi(b, b) * e(al, be) * e(alp, bep);
      }
    return g;
  }();
  return m;
}

Mat metric_inv() {
  static const Mat m = metric().inverse();
  return m;
}

namespace {

struct Eps4Entry {
  int a, b, c, d;
  int sign;
  int qexp;
};

// Labels in the alphabet (-2, -1, 1, 2).
const Eps4Entry kEps4Table[] = {
    {-2, -1, 1, 2, 1, -2},  {-2, 1, -1, 2, -1, -2}, {-2, -1, 2, 1, -1, -1}, {-2, 1, 2, -1, 1, -1},
    {-2, 2, -1, 1, 1, 0},   {-2, 2, 1, -1, -1, 0},  {-1, -2, 1, 2, -1, -1}, {-1, 1, -2, 2, 1, 0},
    {-1, -2, 2, 1, 1, 0},   {-1, 2, -2, 1, -1, 0},  {-1, 2, 1, -2, 1, 1},   {-1, 1, 2, -2, -1, 0},
    {1, -1, -2, 2, -1, 0},  {1, -2, -1, 2, 1, -1},  {1, -1, 2, -2, 1, 0},   {1, 2, -1, -2, -1, 1},
    {1, 2, -2, -1, 1, 0},   {1, -2, 2, -1, -1, 0},  {2, -2, -1, 1, -1, 0},  {2, -1, -2, 1, 1, 1},
    {2, 1, -2, -1, -1, 1},  {2, -2, 1, -1, 1, 0},   {2, -1, 1, -2, -1, 2},  {2, 1, -1, -2, 1, 2},
};

int pos(int label) {
  switch (label) {
    case -2: return 0;
    case -1: return 1;
    case 1: return 2;
    default: return 3;
  }
}

std::size_t e4(int a, int b, int c, int d) { return static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d); }

}  // namespace

int eps4_listed() { return static_cast<int>(sizeof(kEps4Table) / sizeof(kEps4Table[0])); }

std::vector<QRat> eps4(const QRat& k) {
  std::vector<QRat> t(256);
  for (const auto& e : kEps4Table) {
    QRat v = QRat::q(e.qexp);
    if (e.sign < 0) v = -v;
    t[e4(pos(e.a), pos(e.b), pos(e.c), pos(e.d))] = v;
  }
  t[e4(pos(-1), pos(1), pos(-1), pos(1))] = k;
  t[e4(pos(1), pos(-1), pos(1), pos(-1))] = -k;
  return t;
}

Mat hodge_from_eps4(const QRat& k) {
  std::vector<QRat> e = eps4(k);
  const Mat& g = metric();
  QRat s = QRat::qint(2).inv();
  Mat m(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int h = 0; h < 4; ++h)
        for (int kk = 0; kk < 4; ++kk) {
          QRat v;
          for (int a = 0; a < 4; ++a) {
            if (g(kk, a).is_zero()) continue;
            for (int b = 0; b < 4; ++b) {
              if (g(h, b).is_zero()) continue;
              const QRat& x = e[e4(a, b, i, j)];
              if (!x.is_zero()) v += g(kk, a) * g(h, b) * x;
            }
          }
          m(4 * i + j, 4 * h + kk) = s * v;
        }
  return m;
}

KResolution resolve_k() {
  const Projectors& p = projectors4();
  Mat target = p.a - p.ap;
  Mat m0 = hodge_from_eps4(QRat(0));
  Mat m1 = hodge_from_eps4(QRat(1)) - m0;
  KResolution res;
  bool have = false;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      QRat c0 = m0(i, j) - target(i, j);
      const QRat& c1 = m1(i, j);
      if (c1.is_zero()) {
        if (!c0.is_zero()) fail(ErrorKind::NoSolution, "no k makes the Hodge identity hold");
        continue;
      }
      QRat kv = -c0 / c1;
      if (!have) {
        res.k = kv;
        have = true;
      } else if (kv != res.k) {
        fail(ErrorKind::NoSolution, "inconsistent values of k");
      }
    }
  if (!have) fail(ErrorKind::NoSolution, "k does not enter the Hodge identity (not unique)");
  res.unique = true;
  res.raw_mismatches = (hodge_from_eps4(res.k) - target).nonzeros();
  return res;
}

bool eps4_antisymmetric(const std::vector<QRat>& e) {
  const Projectors& p = projectors4();
  Mat sym = p.s + p.t;
  for (int slot = 0; slot < 3; ++slot)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            int ind[4] = {a, b, c, d};
            QRat v;
            for (int m = 0; m < 4; ++m)
              for (int n = 0; n < 4; ++n) {
                const QRat& s = sym(4 * ind[slot] + ind[slot + 1], 4 * m + n);
                if (s.is_zero()) continue;
                int j[4] = {a, b, c, d};
                j[slot] = m;
                j[slot + 1] = n;
                const QRat& x = e[e4(j[0], j[1], j[2], j[3])];
                if (!x.is_zero()) v += s * x;
              }
            if (!v.is_zero()) return false;
          }
  return true;
}

}  // namespace tensors
}  // namespace qhopf
