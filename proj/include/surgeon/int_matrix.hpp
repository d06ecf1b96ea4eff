#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "surgeon/integer.hpp"

namespace surgeon {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant (fraction-free elimination). Square input only.
Integer determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix d, u, v;  // d = u * a * v
};

// Diagonal entries are nonnegative and form a divisibility chain.
SmithForm smith_normal_form(const IntMatrix& a);

// Finitely generated abelian group Z^free_rank + sum Z/torsion[i],
// torsion[i] >= 2 dividing torsion[i+1].
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  // "trivial", "Z", "Z/3", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of the map Z^cols -> Z^rows given by a^T, i.e. the group with
// generators indexed by columns and relations given by rows.
AbelianGroup cokernel_of_relations(const IntMatrix& relations);

}  // namespace surgeon
