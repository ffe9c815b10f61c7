#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sl2q {

// Dense polynomial over Z, coefficient i is the x^i term.  Always trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(long c);
  static IntPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int i) const;
  mpz_class eval(const mpz_class& at) const;
  std::string str(const std::string& var = "x") const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(long k, const IntPoly& a);
  bool operator==(const IntPoly&) const = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Polynomial over F_p (p prime, p < 2^31).  Coefficients in [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(long p, std::vector<long> coeffs);
  static FpPoly reduce(const IntPoly& f, long p);
  static FpPoly constant(long p, long c);
  static FpPoly x_minus(long p, long d, int power = 1);

  long prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }
  const std::vector<long>& coeffs() const { return c_; }
  long leading() const { return c_.empty() ? 0 : c_.back(); }
  FpPoly monic() const;
  std::string str(const std::string& var = "x") const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly operator-() const;
  bool operator==(const FpPoly&) const = default;

  // Quotient and remainder; divisor must be nonzero.
  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

 private:
  void trim();
  long p_ = 2;
  std::vector<long> c_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);  // monic, gcd(0,0) = 0

long mod_inverse(long a, long p);
bool is_prime(long n);
std::vector<long> primes_up_to(long bound);

}  // namespace sl2q
