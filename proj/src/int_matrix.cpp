#include "surgeon/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "surgeon/error.hpp"

namespace surgeon {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix dimensions do not match");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix d = a, u = IntMatrix::identity(rows), v = IntMatrix::identity(cols);
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
            found = true;
            pi = i;
            pj = j;
          }
      if (!found) return {d, u, v};
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer f = -floor_div(d(i, t), d(t, t));
        add_row(d, i, t, f);
        add_row(u, i, t, f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer f = -floor_div(d(t, j), d(t, t));
        add_col(d, j, t, f);
        add_col(v, j, t, f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(d(t, t), d(i, j))) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(d, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {d, u, v};
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "trivial";
  std::string out;
  if (free_rank == 1) out = "Z";
  else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const Integer& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

AbelianGroup cokernel_of_relations(const IntMatrix& relations) {
  SmithForm s = smith_normal_form(relations);
  AbelianGroup g;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
    const Integer& x = s.d(i, i);
    if (x == 0) continue;
    ++rank;
    if (x > 1) g.torsion.push_back(x);
  }
  g.free_rank = relations.cols() - rank;
  return g;
}

}  // namespace surgeon
