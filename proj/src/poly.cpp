#include "sl2q/poly.hpp"

#include <algorithm>

#include "sl2q/error.hpp"

namespace sl2q {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(long c) { return IntPoly({mpz_class(c)}); }

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0);
}

mpz_class IntPoly::eval(const mpz_class& at) const {
  mpz_class v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * at + *it;
  return v;
}

std::string IntPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1 || i == 0) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(long k, const IntPoly& a) { return IntPoly::constant(k) * a; }

namespace {

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long mulmod(long a, long b, long p) {
  return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

}  // namespace

long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    const long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw InvalidInput("element not invertible mod " + std::to_string(p));
  return mod(t, p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  for (long n = 2; n <= bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  for (auto& x : c_) x = mod(x, p_);
  trim();
}

FpPoly FpPoly::reduce(const IntPoly& f, long p) {
  std::vector<long> c;
  const mpz_class mp(p);
  for (const auto& a : f.coeffs()) {
    mpz_class r = a % mp;
    c.push_back(r.get_si());
  }
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(long p, long c) { return FpPoly(p, {c}); }

FpPoly FpPoly::x_minus(long p, long d, int power) {
  FpPoly base(p, {-d, 1});
  FpPoly out = constant(p, 1);
  for (int i = 0; i < power; ++i) out = out * base;
  return out;
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  const long inv = mod_inverse(c_.back(), p_);
  FpPoly out = *this;
  for (auto& x : out.c_) x = mulmod(x, inv, p_);
  return out;
}

std::string FpPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (o.p_ != p_ && !o.c_.empty() && !c_.empty()) throw InvalidInput("mixed characteristics");
  if (c_.empty()) p_ = o.p_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = mod(c_[i] + o.c_[i], p_);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) { return *this += -o; }

FpPoly FpPoly::operator-() const {
  FpPoly out = *this;
  for (auto& x : out.c_) x = mod(-x, p_);
  return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.is_zero() ? a.p_ : b.p_, {});
  if (a.p_ != b.p_) throw InvalidInput("mixed characteristics");
  std::vector<long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const long p = b.p_;
  std::vector<long> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {FpPoly(p, {}), FpPoly(p, r)};
  std::vector<long> q(a.degree() - db + 1, 0);
  const long inv = mod_inverse(b.leading(), p);
  for (int i = a.degree(); i >= db; --i) {
    const long f = mulmod(r[i], inv, p);
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - mulmod(f, b.c_[j], p), p);
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace sl2q
