#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace semiholes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Fixed-length vector of arbitrary-precision integers.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t n) : entries_(n) {}
  IntVec(std::initializer_list<long> init);
  explicit IntVec(std::vector<Integer> entries) : entries_(std::move(entries)) {}

  static IntVec from_int64(const std::vector<std::int64_t>& v);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Integer& operator[](std::size_t i) { return entries_[i]; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  Integer sum() const;
  Integer dot(const IntVec& other) const;

  /// Checked conversion; throws OverflowError when an entry does not fit.
  std::vector<std::int64_t> to_int64() const;

  IntVec& operator+=(const IntVec& other);
  IntVec& operator-=(const IntVec& other);
  IntVec& operator*=(const Integer& k);

  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  friend IntVec operator*(const Integer& k, IntVec a) { return a *= k; }
  IntVec operator-() const;

  friend bool operator==(const IntVec& a, const IntVec& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }
  /// Lexicographic order; shorter vectors first.
  friend bool operator<(const IntVec& a, const IntVec& b);

  std::string str() const;

 private:
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);

/// Coordinatewise a <= b.
bool dominated_by(const IntVec& a, const IntVec& b);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVec& v);

/// Divides by the content; zero stays zero.
IntVec primitive(IntVec v);

/// Dense row-major integer matrix; columns are the semigroup generators.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_columns(const std::vector<IntVec>& columns, std::size_t rows);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec column(std::size_t c) const;
  IntVec row(std::size_t r) const;
  std::vector<IntVec> columns() const;
  void set_column(std::size_t c, const IntVec& v);

  IntMat transpose() const;
  IntMat select_columns(const std::vector<std::size_t>& idx) const;

  IntVec operator*(const IntVec& x) const;
  IntMat operator*(const IntMat& other) const;

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// floor(a / b) and ceil(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

std::int64_t to_int64_checked(const Integer& x);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const;
};

}  // namespace semiholes
