#ifndef COVHOM_INT_POLYNOMIAL_HPP
#define COVHOM_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace covhom {

class IntMatrix;

/// Univariate polynomial over Z, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// t^d
  static IntPolynomial monomial(unsigned degree, const mpz_class& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(std::size_t d) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial&) const = default;

  /// Quotient when rhs (monic) divides exactly; nullopt otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& rhs) const;

  mpz_class eval(const mpz_class& x) const;
  /// p(M) by Horner; M square.
  IntMatrix eval(const IntMatrix& m) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// d-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned d);

/// Euler totient.
unsigned long euler_phi(unsigned long n);

/// Splits p into cyclotomic factors and a non-cyclotomic remainder:
/// p = remainder * prod Phi_d^multiplicity. Checks all d with
/// phi(d) <= deg p. p must be nonzero.
struct CyclotomicSplit {
  std::map<unsigned, unsigned> factors;  // d -> multiplicity
  IntPolynomial remainder;
  bool all_cyclotomic() const { return remainder.degree() <= 0; }
};
CyclotomicSplit split_cyclotomic(const IntPolynomial& p);

}  // namespace covhom

#endif
