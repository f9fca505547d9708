#include "semiholes/linalg.hpp"

#include <utility>

#include "semiholes/errors.hpp"

namespace semiholes {

void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

namespace {

// (col_i, col_j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
void combine_columns(IntMat& M, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                     const Integer& r, const Integer& s) {
  for (std::size_t row = 0; row < M.rows(); ++row) {
    Integer a = M(row, i);
    Integer b = M(row, j);
    M(row, i) = p * a + q * b;
    M(row, j) = r * a + s * b;
  }
}

void swap_columns(IntMat& M, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t row = 0; row < M.rows(); ++row) std::swap(M(row, i), M(row, j));
}

void negate_column(IntMat& M, std::size_t i) {
  for (std::size_t row = 0; row < M.rows(); ++row) M(row, i) = -M(row, i);
}

// col_j -= k * col_i
void subtract_multiple(IntMat& M, std::size_t j, std::size_t i, const Integer& k) {
  for (std::size_t row = 0; row < M.rows(); ++row) M(row, j) -= k * M(row, i);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMat& M) {
  HermiteForm out{M, IntMat::identity(M.cols()), {}};
  IntMat& H = out.H;
  IntMat& U = out.U;
  const std::size_t n = M.cols();
  std::size_t c = 0;
  for (std::size_t row = 0; row < M.rows() && c < n; ++row) {
    // Move a nonzero entry (smallest magnitude) into the pivot column first.
    std::size_t best = n;
    for (std::size_t j = c; j < n; ++j)
      if (H(row, j) != 0 && (best == n || abs(H(row, j)) < abs(H(row, best)))) best = j;
    if (best == n) continue;
    swap_columns(H, c, best);
    swap_columns(U, c, best);
    for (std::size_t j = c + 1; j < n; ++j) {
      if (H(row, j) == 0) continue;
      Integer a = H(row, c), b = H(row, j), g, s, t;
      extended_gcd(a, b, g, s, t);
      Integer ag = a / g, bg = b / g;
      // det [[s, -bg], [t, ag]] = s*ag + t*bg = 1
      combine_columns(H, c, j, s, t, -bg, ag);
      combine_columns(U, c, j, s, t, -bg, ag);
    }
    if (H(row, c) < 0) {
      negate_column(H, c);
      negate_column(U, c);
    }
    const Integer pivot = H(row, c);
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = floor_div(H(row, j), pivot);
      if (q != 0) {
        subtract_multiple(H, j, c, q);
        subtract_multiple(U, j, c, q);
      }
    }
    out.pivot_rows.push_back(row);
    ++c;
  }
  return out;
}

std::optional<IntVec> solve_integer(const HermiteForm& hnf, const IntVec& b) {
  const IntMat& H = hnf.H;
  if (b.size() != H.rows()) throw DimensionMismatch("solve_integer: rhs length differs from row count");
  const std::size_t r = hnf.rank();
  IntVec y(H.cols());
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t row = hnf.pivot_rows[k];
    Integer rest = b[row];
    for (std::size_t j = 0; j < k; ++j) rest -= H(row, j) * y[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), H(row, k).get_mpz_t())) return std::nullopt;
    y[k] = rest / H(row, k);
  }
  if (H * y != b) return std::nullopt;
  IntVec x = hnf.U * y;
  return x;
}

std::optional<IntVec> solve_integer(const IntMat& M, const IntVec& b) {
  if (b.size() != M.rows()) throw DimensionMismatch("solve_integer: rhs length differs from row count");
  auto x = solve_integer(hermite_normal_form(M), b);
  if (x && M * *x != b) throw Error("solve_integer: internal witness check failed");
  return x;
}

LatticeRankIndex lattice_rank_index(const IntMat& M) {
  HermiteForm hnf = hermite_normal_form(M);
  LatticeRankIndex out;
  out.rank = hnf.rank();
  if (out.rank == M.rows()) {
    Integer idx = 1;
    for (std::size_t k = 0; k < out.rank; ++k) idx *= hnf.H(hnf.pivot_rows[k], k);
    out.index = idx;
  }
  return out;
}

Integer determinant(const IntMat& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMat A = M;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = v;
      }
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

std::size_t rank(const IntMat& M) { return hermite_normal_form(M).rank(); }

IntMat integer_kernel(const IntMat& M) {
  HermiteForm hnf = hermite_normal_form(M);
  std::vector<std::size_t> idx;
  for (std::size_t c = hnf.rank(); c < M.cols(); ++c) idx.push_back(c);
  return hnf.U.select_columns(idx);
}

IntMat column_lattice_basis(const IntMat& M) {
  HermiteForm hnf = hermite_normal_form(M);
  std::vector<std::size_t> idx(hnf.rank());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return hnf.H.select_columns(idx);
}

IntMat span_lattice_basis(const IntMat& M) {
  const IntMat W = integer_kernel(M.transpose());
  if (W.cols() == 0) return IntMat::identity(M.rows());
  return column_lattice_basis(integer_kernel(W.transpose()));
}

IntMat adjugate(const IntMat& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch("adjugate of a non-square matrix");
  const std::size_t n = M.rows();
  IntMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = M(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

}  // namespace semiholes
