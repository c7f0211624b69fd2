#include "covhom/int_polynomial.hpp"

#include <mutex>

#include "covhom/error.hpp"
#include "covhom/int_matrix.hpp"

namespace covhom {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(unsigned degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

const mpz_class& IntPolynomial::coeff(std::size_t d) const {
  static const mpz_class zero = 0;
  return d < coeffs_.size() ? coeffs_[d] : zero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - rhs.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& rhs) const {
  if (rhs.is_zero()) fail(errc::invalid_params, "division by zero polynomial");
  if (!rhs.is_monic()) fail(errc::invalid_params, "divide_exact expects a monic divisor");
  if (is_zero()) return IntPolynomial{};
  if (degree() < rhs.degree()) return std::nullopt;
  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> quot(static_cast<std::size_t>(degree() - rhs.degree()) + 1);
  for (int d = degree(); d >= rhs.degree(); --d) {
    mpz_class c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    std::size_t shift = static_cast<std::size_t>(d - rhs.degree());
    quot[shift] = c;
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
      rem[shift + i] -= c * rhs.coeffs_[i];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntMatrix IntPolynomial::eval(const IntMatrix& m) const {
  if (!m.square()) fail(errc::not_square, "polynomial evaluation needs a square matrix");
  IntMatrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc.at(i, i) += *it;
  }
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    mpz_class a = abs(c);
    bool show_coeff = (a != 1 || d == 0);
    if (show_coeff) out += a.get_str();
    if (d > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(unsigned d) {
  static std::map<unsigned, IntPolynomial> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
  std::vector<mpz_class> num(d + 1);
  num[0] = -1;
  num[d] = 1;
  IntPolynomial p(std::move(num));
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = p.divide_exact(cyclotomic(e));
    if (!q) fail(errc::internal_error, "cyclotomic recurrence failed");
    p = *q;
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, p);
  return p;
}

CyclotomicSplit split_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) fail(errc::invalid_params, "cyclotomic split of zero polynomial");
  CyclotomicSplit out;
  out.remainder = p;
  unsigned deg = static_cast<unsigned>(std::max(p.degree(), 0));
  // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2*deg^2.
  unsigned limit = 2 * deg * deg + 6;
  for (unsigned d = 1; d <= limit && out.remainder.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned long>(out.remainder.degree())) continue;
    IntPolynomial phi_d = cyclotomic(d);
    while (true) {
      auto q = out.remainder.divide_exact(phi_d);
      if (!q) break;
      out.remainder = *q;
      ++out.factors[d];
    }
  }
  return out;
}

}  // namespace covhom
