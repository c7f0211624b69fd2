#include "covhom/int_matrix.hpp"

#include "covhom/error.hpp"

namespace covhom {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::rank_mismatch, "matrix product shape mismatch");
  IntMatrix r(rows_, rhs.cols_);
  mpz_class acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        acc = a * rhs.at(k, j);
        r.at(i, j) += acc;
      }
    }
  }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(errc::rank_mismatch, "matrix sum shape mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(errc::rank_mismatch, "matrix difference shape mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= rhs.data_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
  if (!square()) fail(errc::not_square, "pow of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool IntMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

mpz_class IntMatrix::max_abs() const {
  mpz_class m = 0;
  for (const auto& v : data_) {
    mpz_class a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

mpz_class IntMatrix::det() const {
  if (!square()) fail(errc::not_square, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix work = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // pivot search
    std::size_t piv = k;
    while (piv < n && work.at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work.at(k, j), work.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = work.at(i, j) * work.at(k, k) - work.at(i, k) * work.at(k, j);
        mpz_divexact(work.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      work.at(i, k) = 0;
    }
    prev = work.at(k, k);
  }
  return sign > 0 ? work.at(n - 1, n - 1) : mpz_class(-work.at(n - 1, n - 1));
}

std::size_t IntMatrix::rank() const {
  IntMatrix work = *this;
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && work.at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = col; j < cols_; ++j) std::swap(work.at(rank, j), work.at(piv, j));
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        mpz_class num = work.at(i, j) * work.at(rank, col) - work.at(i, col) * work.at(rank, j);
        mpz_divexact(work.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      work.at(i, col) = 0;
    }
    prev = work.at(rank, col);
    ++rank;
  }
  return rank;
}

std::size_t IntMatrix::rank_mod_p(long p) const {
  std::vector<std::vector<long>> work(rows_, std::vector<long>(cols_));
  mpz_class tmp;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      tmp = at(i, j) % p;
      long v = tmp.get_si();
      work[i][j] = v < 0 ? v + p : v;
    }
  auto inv_mod = [&](long a) {
    long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      long q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    return t < 0 ? t + p : t;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && work[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(work[piv], work[rank]);
    long inv = inv_mod(work[rank][col]);
    for (std::size_t j = col; j < cols_; ++j)
      work[rank][j] = static_cast<long>((static_cast<__int128>(work[rank][j]) * inv) % p);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || work[i][col] == 0) continue;
      long f = work[i][col];
      for (std::size_t j = col; j < cols_; ++j) {
        long v = static_cast<long>((work[i][j] - static_cast<__int128>(f) * work[rank][j]) % p);
        work[i][j] = v < 0 ? v + p : v;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace covhom
