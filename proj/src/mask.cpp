#include "hermite/mask.hpp"

#include <cassert>
#include <cstdlib>

namespace hermite {

Matrix2 Matrix2::identity() {
  Matrix2 m;
  m(0, 0) = 1;
  m(1, 1) = 1;
  return m;
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a[i][j] + o.a[i][j];
  return r;
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a[i][j] - o.a[i][j];
  return r;
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
  return r;
}

Matrix2 Matrix2::scaled(const Rational& s) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a[i][j] * s;
  return r;
}

bool Matrix2::is_zero() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a[i][j] != 0) return false;
  return true;
}

Rational Matrix2::det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Matrix2 Matrix2::inverse() const {
  Rational d = det();
  if (d == 0) throw std::domain_error("Matrix2::inverse: singular matrix");
  Matrix2 r;
  r(0, 0) = a[1][1] / d;
  r(0, 1) = -a[0][1] / d;
  r(1, 0) = -a[1][0] / d;
  r(1, 1) = a[0][0] / d;
  return r;
}

Vec2 operator*(const Matrix2& m, const Vec2& x) {
  Vec2 r;
  r[0] = m(0, 0) * x[0] + m(0, 1) * x[1];
  r[1] = m(1, 0) * x[0] + m(1, 1) * x[1];
  return r;
}

HermiteSequence::HermiteSequence(int offset, std::vector<Vec2> values)
    : offset_(offset), values_(std::move(values)) {
  trim();
}

void HermiteSequence::trim() {
  auto is_zero = [](const Vec2& v) { return v[0] == 0 && v[1] == 0; };
  size_t drop = 0;
  while (drop < values_.size() && is_zero(values_[drop])) ++drop;
  if (drop > 0) {
    values_.erase(values_.begin(), values_.begin() + static_cast<long>(drop));
    offset_ += static_cast<int>(drop);
  }
  while (!values_.empty() && is_zero(values_.back())) values_.pop_back();
  if (values_.empty()) offset_ = 0;
}

int HermiteSequence::support_min() const {
  assert(!values_.empty());
  return offset_;
}

int HermiteSequence::support_max() const {
  assert(!values_.empty());
  return offset_ + static_cast<int>(values_.size()) - 1;
}

Vec2 HermiteSequence::at(int j) const {
  if (values_.empty()) return {};
  int i = j - offset_;
  if (i < 0 || i >= static_cast<int>(values_.size())) return {};
  return values_[static_cast<size_t>(i)];
}

void HermiteSequence::set(int j, const Vec2& v) {
  if (values_.empty()) {
    offset_ = j;
    values_.push_back(v);
  } else if (j < offset_) {
    values_.insert(values_.begin(), static_cast<size_t>(offset_ - j), Vec2{});
    offset_ = j;
    values_[0] = v;
  } else if (j > support_max()) {
    values_.resize(static_cast<size_t>(j - offset_) + 1);
    values_.back() = v;
  } else {
    values_[static_cast<size_t>(j - offset_)] = v;
  }
  trim();
}

MatrixMask::MatrixMask(int offset, std::vector<Matrix2> matrices, std::int64_t dilation)
    : offset_(offset), matrices_(std::move(matrices)), dilation_(dilation) {
  if (dilation_ < 2) throw std::invalid_argument("MatrixMask: dilation must be >= 2");
  trim();
}

void MatrixMask::trim() {
  size_t drop = 0;
  while (drop < matrices_.size() && matrices_[drop].is_zero()) ++drop;
  if (drop > 0) {
    matrices_.erase(matrices_.begin(), matrices_.begin() + static_cast<long>(drop));
    offset_ += static_cast<int>(drop);
  }
  while (!matrices_.empty() && matrices_.back().is_zero()) matrices_.pop_back();
  if (matrices_.empty()) offset_ = 0;
}

int MatrixMask::support_min() const {
  assert(!matrices_.empty());
  return offset_;
}

int MatrixMask::support_max() const {
  assert(!matrices_.empty());
  return offset_ + static_cast<int>(matrices_.size()) - 1;
}

Matrix2 MatrixMask::at(int j) const {
  if (matrices_.empty()) return {};
  int i = j - offset_;
  if (i < 0 || i >= static_cast<int>(matrices_.size())) return {};
  return matrices_[static_cast<size_t>(i)];
}

MatrixMask MatrixMask::scaled(const Rational& s) const {
  MatrixMask r = *this;
  for (auto& m : r.matrices_) m = m.scaled(s);
  r.trim();
  return r;
}

HermiteSequence apply_subdivision(const MatrixMask& A, const HermiteSequence& c) {
  if (A.is_zero() || c.is_zero()) return {};
  const std::int64_t dil = A.dilation();
  int out_lo = static_cast<int>(dil) * c.support_min() + A.support_min();
  int out_hi = static_cast<int>(dil) * c.support_max() + A.support_max();
  std::vector<Vec2> out(static_cast<size_t>(out_hi - out_lo + 1));
  for (int k = c.support_min(); k <= c.support_max(); ++k) {
    Vec2 ck = c.at(k);
    if (ck[0] == 0 && ck[1] == 0) continue;
    for (int e = A.support_min(); e <= A.support_max(); ++e) {
      Matrix2 Ae = A.at(e);
      if (Ae.is_zero()) continue;
      int j = static_cast<int>(dil) * k + e;
      Vec2 add = Ae * ck;
      auto& slot = out[static_cast<size_t>(j - out_lo)];
      slot[0] += add[0];
      slot[1] += add[1];
    }
  }
  return HermiteSequence(out_lo, std::move(out));
}

MatrixSymbol symbol(const MatrixMask& A) {
  MatrixSymbol s;
  if (A.is_zero()) return s;
  for (int j = A.support_min(); j <= A.support_max(); ++j) {
    Matrix2 m = A.at(j);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (m(r, c) != 0) s.at(r, c) += Laurent::term(j, m(r, c));
  }
  return s;
}

MatrixMask mask_from_symbol(const MatrixSymbol& s, std::int64_t dilation) {
  if (s.is_zero()) return MatrixMask(0, {}, dilation);
  int lo = 0, hi = 0;
  bool first = true;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const Laurent& e = s.at(r, c);
      if (e.is_zero()) continue;
      if (first) {
        lo = e.min_exp();
        hi = e.max_exp();
        first = false;
      } else {
        lo = std::min(lo, e.min_exp());
        hi = std::max(hi, e.max_exp());
      }
    }
  std::vector<Matrix2> mats(static_cast<size_t>(hi - lo + 1));
  for (int j = lo; j <= hi; ++j)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        mats[static_cast<size_t>(j - lo)](r, c) = s.at(r, c).coeff(j);
  return MatrixMask(lo, std::move(mats), dilation);
}

IterateLimits iterate_limits_from_env() {
  IterateLimits limits;
  if (const char* env = std::getenv("HERMITE_MAX_SUPPORT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) limits.max_matrices = static_cast<size_t>(v);
  }
  return limits;
}

namespace {

// mask convolution for (S_B S_A c) = (S_M c) with M(z) = B(z) A(z^dil_B);
// dil_M = dil_B * dil_A
MatrixMask compose(const MatrixMask& B, const MatrixMask& A, size_t max_matrices) {
  if (B.is_zero() || A.is_zero())
    return MatrixMask(0, {}, B.dilation() * A.dilation());
  std::int64_t dilB = B.dilation();
  long long lo = B.support_min() + dilB * A.support_min();
  long long hi = B.support_max() + dilB * A.support_max();
  size_t size = static_cast<size_t>(hi - lo + 1);
  if (size > max_matrices)
    throw ResourceLimitError(
        "iterate_mask: support of the iterated mask exceeds the limit of " +
        std::to_string(max_matrices) +
        " matrices (set HERMITE_MAX_SUPPORT to raise it)");
  std::vector<Matrix2> out(size);
  for (int i = B.support_min(); i <= B.support_max(); ++i) {
    Matrix2 Bi = B.at(i);
    if (Bi.is_zero()) continue;
    for (int k = A.support_min(); k <= A.support_max(); ++k) {
      Matrix2 Ak = A.at(k);
      if (Ak.is_zero()) continue;
      long long j = i + dilB * k;
      Matrix2 prod = Bi * Ak;
      auto& slot = out[static_cast<size_t>(j - lo)];
      slot = slot + prod;
    }
  }
  return MatrixMask(static_cast<int>(lo), std::move(out), dilB * A.dilation());
}

}  // namespace

MatrixMask iterate_mask(const MatrixMask& A, unsigned N, const IterateLimits& limits) {
  if (N == 0) throw std::invalid_argument("iterate_mask: N must be positive");
  MatrixMask cur = A;
  if (cur.support_size() > limits.max_matrices)
    throw ResourceLimitError("iterate_mask: mask larger than the support limit");
  for (unsigned step = 1; step < N; ++step) cur = compose(cur, A, limits.max_matrices);
  return cur;
}

Rational operator_norm(const MatrixMask& A) {
  if (A.is_zero()) return Rational(0);
  const std::int64_t dil = A.dilation();
  Rational best(0);
  for (std::int64_t eps = 0; eps < dil; ++eps) {
    Rational row0(0), row1(0);
    // first index in the residue class intersecting the support
    long long start = A.support_min();
    long long rem = ((start - eps) % dil + dil) % dil;
    if (rem != 0) start += dil - rem;
    for (long long j = start; j <= A.support_max(); j += dil) {
      Matrix2 m = A.at(static_cast<int>(j));
      row0 += abs(m(0, 0)) + abs(m(0, 1));
      row1 += abs(m(1, 0)) + abs(m(1, 1));
    }
    if (row0 > best) best = row0;
    if (row1 > best) best = row1;
  }
  return best;
}

ContractivityCertificate contractivity_certificate(const MatrixMask& A,
                                                   unsigned maxN,
                                                   const IterateLimits& limits) {
  if (maxN == 0)
    throw std::invalid_argument("contractivity_certificate: maxN must be positive");
  ContractivityCertificate cert;
  MatrixMask cur = A;
  if (cur.support_size() > limits.max_matrices)
    throw ResourceLimitError(
        "contractivity_certificate: mask larger than the support limit");
  for (unsigned N = 1; N <= maxN; ++N) {
    if (N > 1) cur = compose(cur, A, limits.max_matrices);
    cert.norm = operator_norm(cur);
    cert.iterations = N;
    if (cert.norm < 1) {
      cert.contractive = true;
      return cert;
    }
  }
  cert.contractive = false;
  return cert;
}

RefinedData hermite_refine(const MatrixMask& A, const HermiteSequence& data,
                           unsigned levels) {
  RefinedData out;
  out.level = levels;
  if (data.is_zero() || A.is_zero()) return out;
  if (A.dilation() != 2)
    throw std::invalid_argument("hermite_refine: mask must have dilation 2");

  // iterate on u^[n] = D^n c^[n], for which the recursion is plain
  // subdivision u^[n+1] = S_A u^[n]; then c^[level] = D^-level u^[level]
  HermiteSequence u = data;
  long long valid_lo = data.support_min();
  long long valid_hi = data.support_max();
  for (unsigned n = 0; n < levels; ++n) {
    u = apply_subdivision(A, u);
    valid_lo = 2 * valid_lo + A.support_max();
    valid_hi = 2 * valid_hi + A.support_min();
  }

  Rational unscale = rational_pow(Rational(2), levels);
  HermiteSequence c;
  if (!u.is_zero()) {
    for (int j = u.support_min(); j <= u.support_max(); ++j) {
      Vec2 v = u.at(j);
      v[1] *= unscale;
      c.set(j, v);
    }
  }
  out.values = c;
  if (valid_lo <= valid_hi) {
    out.valid_min = static_cast<int>(valid_lo);
    out.valid_max = static_cast<int>(valid_hi);
  } else {
    out.valid_min = 0;
    out.valid_max = -1;
  }
  return out;
}

}  // namespace hermite
