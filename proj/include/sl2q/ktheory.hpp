#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2q/euclidean.hpp"
#include "sl2q/orbits.hpp"
#include "sl2q/poly.hpp"
#include "sl2q/root_data.hpp"
#include "sl2q/sl2restrict.hpp"

namespace sl2q {

// Which representation classes generate I_u.  `exterior` uses exterior powers
// of the natural module plus (semi)spin modules and only exists for classical
// groups; `fundamental` restricts every V(varpi_i) via Freudenthal.  The two
// sets differ by a unitriangular change of generators.
enum class GeneratorRoute { automatic, exterior, fundamental };

struct PrimeReduction {
  long p = 0;
  FpPoly gcd;                   // monic; zero when degenerate
  std::optional<int> exponent;  // gcd = (x - d)^exponent; nullopt when degenerate
  bool degenerate() const { return !exponent.has_value(); }
};

struct IdealProfile {
  Side side = Side::SL2;
  long d = 2;  // evaluation point: 2 (SL2, variable x) or 3 (PSL2, variable x')
  std::vector<std::string> labels;
  std::vector<IntPoly> generators;  // ybar_i - dim, in the side's variable
  long prime_bound = 0;
  std::map<long, PrimeReduction> per_prime;

  std::string variable() const { return side == Side::SL2 ? "x" : "x'"; }
};

IdealProfile ideal_generators(const RootSystem& rs, const UnipotentClass& c,
                              GeneratorRoute route = GeneratorRoute::automatic);

// gcd of the reduced generators, checked to be a power of (x - d).
PrimeReduction reduce_gcd_mod_p(const IdealProfile& prof, long p);

IdealProfile ideal_profile(const RootSystem& rs, const UnipotentClass& c, long prime_bound = 97,
                           GeneratorRoute route = GeneratorRoute::automatic);

// Smallest prime <= bound at which both profiles are non-degenerate and the
// exponents differ.  Profiles on different sides are not comparable.
std::optional<long> first_separating_prime(const IdealProfile& a, const IdealProfile& b);

// Koszul homology of the reduced generators at p by both routes.
struct KoszulCheck {
  long p = 0;
  std::vector<ModuleDesc<FpPoly>> by_lemma;  // empty when degenerate
  std::vector<ModuleDesc<FpPoly>> by_snf;
  bool agree() const { return by_lemma.empty() || by_lemma == by_snf; }
};
KoszulCheck koszul_check(const IdealProfile& prof, long p);

}  // namespace sl2q
