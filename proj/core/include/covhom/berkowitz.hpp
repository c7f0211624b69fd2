#ifndef COVHOM_BERKOWITZ_HPP
#define COVHOM_BERKOWITZ_HPP

#include <cstddef>
#include <vector>

namespace covhom {

/// Division-free characteristic polynomial over any commutative ring
/// (Berkowitz / Samuelson). `at(i, j)` yields the entry; R needs +, *,
/// unary -, and value semantics. Returns coefficients low degree first,
/// monic of degree n. O(n^4) ring multiplications; used where fraction-free
/// elimination is unavailable (rings with zero divisors) and as an
/// independent route in tests.
template <typename R, typename MatAt>
std::vector<R> berkowitz_char_poly(std::size_t n, MatAt at, const R& zero, const R& one) {
  // C holds coefficients from the leading one downward.
  std::vector<R> c{one};
  for (std::size_t r = 1; r <= n; ++r) {
    // first column of the Toeplitz factor: 1, -a, -R S, -R A S, -R A^2 S, ...
    std::vector<R> col;
    col.reserve(r + 1);
    col.push_back(one);
    col.push_back(-at(r - 1, r - 1));
    std::vector<R> v(r - 1, zero);  // v = A_{r-1}^k S
    for (std::size_t i = 0; i + 1 < r; ++i) v[i] = at(i, r - 1);
    for (std::size_t k = 2; k <= r; ++k) {
      R dot = zero;
      for (std::size_t i = 0; i + 1 < r; ++i) dot = dot + at(r - 1, i) * v[i];
      col.push_back(-dot);
      if (k == r) break;
      std::vector<R> next(r - 1, zero);
      for (std::size_t i = 0; i + 1 < r; ++i) {
        R acc = zero;
        for (std::size_t j = 0; j + 1 < r; ++j) acc = acc + at(i, j) * v[j];
        next[i] = acc;
      }
      v = std::move(next);
    }
    std::vector<R> out(r + 1, zero);
    for (std::size_t i = 0; i < col.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out[i + j] = out[i + j] + col[i] * c[j];
    c = std::move(out);
  }
  std::vector<R> low_first(c.rbegin(), c.rend());
  return low_first;
}

}  // namespace covhom

#endif
