#include "semiholes/integer.hpp"

#include <ostream>
#include <sstream>

#include "semiholes/errors.hpp"

namespace semiholes {

IntVec::IntVec(std::initializer_list<long> init) {
  entries_.reserve(init.size());
  for (long x : init) entries_.emplace_back(x);
}

IntVec IntVec::from_int64(const std::vector<std::int64_t>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

bool IntVec::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

bool IntVec::is_nonnegative() const {
  for (const auto& x : entries_)
    if (x < 0) return false;
  return true;
}

Integer IntVec::sum() const {
  Integer s = 0;
  for (const auto& x : entries_) s += x;
  return s;
}

Integer IntVec::dot(const IntVec& other) const {
  if (other.size() != size()) throw DimensionMismatch("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += entries_[i] * other.entries_[i];
  return s;
}

std::vector<std::int64_t> IntVec::to_int64() const {
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = to_int64_checked(entries_[i]);
  return out;
}

IntVec& IntVec::operator+=(const IntVec& other) {
  if (other.size() != size()) throw DimensionMismatch("vector addition: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
  if (other.size() != size()) throw DimensionMismatch("vector subtraction: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVec& IntVec::operator*=(const Integer& k) {
  for (auto& x : entries_) x *= k;
  return *this;
}

IntVec IntVec::operator-() const {
  IntVec out(*this);
  for (auto& x : out.entries_) x = -x;
  return out;
}

bool operator<(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntVec::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os << ']';
}

bool dominated_by(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dominated_by: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec primitive(IntVec v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& columns, std::size_t rows) {
  IntMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMat::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVec IntMat::row(std::size_t r) const {
  IntVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void IntMat::set_column(std::size_t c, const IntVec& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMat IntMat::select_columns(const std::vector<std::size_t>& idx) const {
  IntMat m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, idx[k]);
  return m;
}

IntVec IntMat::operator*(const IntVec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) s += (*this)(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (other.rows_ != cols_) throw DimensionMismatch("matrix product: shape mismatch");
  IntMat out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "\n" : "") << m.row(r);
  }
  return os;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::int64_t to_int64_checked(const Integer& x) {
  if (!x.fits_slong_p()) throw OverflowError("integer " + x.get_str() + " exceeds 64-bit fast path");
  return static_cast<std::int64_t>(x.get_si());
}

std::size_t IntVecHash::operator()(const IntVec& v) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (const auto& x : v) {
    std::size_t e = x.fits_slong_p() ? static_cast<std::size_t>(x.get_si())
                                     : std::hash<std::string>{}(x.get_str());
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace semiholes
