#ifndef COVHOM_INT_MATRIX_HPP
#define COVHOM_INT_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace covhom {

/// Dense matrix with arbitrary-precision integer entries. Covers in scope
/// stay below a few hundred rows, so density is fine.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  IntMatrix pow(unsigned long e) const;

  bool is_identity() const;
  bool operator==(const IntMatrix&) const = default;

  /// Largest |entry|.
  mpz_class max_abs() const;

  /// Exact determinant (Bareiss fraction-free elimination).
  mpz_class det() const;
  /// Rank over Q, exact.
  std::size_t rank() const;
  /// Rank over Z/p, exact (p a prime below 2^31).
  std::size_t rank_mod_p(long p) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace covhom

#endif
