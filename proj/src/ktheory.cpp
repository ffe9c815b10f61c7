#include "sl2q/ktheory.hpp"

#include "sl2q/error.hpp"
#include "sl2q/invariants.hpp"

namespace sl2q {

namespace {

std::vector<std::pair<std::string, WeightMultiset>> exterior_route(const UnipotentClass& c) {
  const GroupType g = c.group();
  const int r = g.rank;
  const auto v = natural_weights(c);
  std::vector<std::pair<std::string, WeightMultiset>> out;
  int top = r;
  if (g.series == Series::B) top = r - 1;
  if (g.series == Series::D) top = r - 2;
  for (int k = 1; k <= top; ++k) out.emplace_back("L" + std::to_string(k), exterior_power(v, k));
  if (g.series == Series::B) out.emplace_back("spin", spin_weights(c));
  if (g.series == Series::D) {
    out.emplace_back("spin+", semispin_weights(c, Parity::even));
    out.emplace_back("spin-", semispin_weights(c, Parity::odd));
  }
  return out;
}

std::vector<std::pair<std::string, WeightMultiset>> fundamental_route(const RootSystem& rs,
                                                                      const UnipotentClass& c) {
  std::vector<std::pair<std::string, WeightMultiset>> out;
  for (int i = 1; i <= rs.rank(); ++i)
    out.emplace_back("w" + std::to_string(i), restrict_fundamental(rs, c, i));
  return out;
}

}  // namespace

IdealProfile ideal_generators(const RootSystem& rs, const UnipotentClass& c, GeneratorRoute route) {
  if (c.group() != rs.group()) throw InvalidInput("class does not belong to " + rs.group().name());
  if (c.is_trivial()) throw InvalidInput("I_u is defined for nontrivial classes");
  if (route == GeneratorRoute::automatic)
    route = c.is_classical() ? GeneratorRoute::exterior : GeneratorRoute::fundamental;
  if (route == GeneratorRoute::exterior && !c.is_classical())
    throw InvalidInput("exterior-power generators need a classical group");

  IdealProfile prof;
  if (quite_even(rs, c)) {
    prof.side = Side::PSL2;
    prof.d = 3;
  }
  const auto modules = route == GeneratorRoute::exterior ? exterior_route(c) : fundamental_route(rs, c);
  for (const auto& [label, w] : modules) {
    CharacterPoly ch = char_poly(w);
    if (ch.dimension() != w.total()) throw DataError("character of " + label + " has the wrong dimension");
    if (prof.side == Side::PSL2) ch = to_psl2_variable(ch);
    IntPoly gen = ch.poly - IntPoly::constant(w.total());
    if (gen.eval(prof.d) != 0) throw DataError("generator " + label + " does not vanish at the augmentation point");
    prof.labels.push_back(label);
    prof.generators.push_back(std::move(gen));
  }
  return prof;
}

PrimeReduction reduce_gcd_mod_p(const IdealProfile& prof, long p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  PrimeReduction out;
  out.p = p;
  FpPoly g(p, {});
  for (const auto& gen : prof.generators) g = gcd(g, FpPoly::reduce(gen, p));
  out.gcd = g;
  if (g.is_zero()) return out;
  const FpPoly expected = FpPoly::x_minus(p, prof.d, g.degree());
  if (g != expected)
    throw DataError("gcd mod " + std::to_string(p) + " is " + g.str(prof.variable()) + ", not a power of (" +
                    prof.variable() + " - " + std::to_string(prof.d) + ")");
  out.exponent = g.degree();
  return out;
}

IdealProfile ideal_profile(const RootSystem& rs, const UnipotentClass& c, long prime_bound, GeneratorRoute route) {
  if (prime_bound < 2) throw InvalidInput("prime bound must be at least 2");
  IdealProfile prof = ideal_generators(rs, c, route);
  prof.prime_bound = prime_bound;
  for (long p : primes_up_to(prime_bound)) prof.per_prime.emplace(p, reduce_gcd_mod_p(prof, p));
  return prof;
}

std::optional<long> first_separating_prime(const IdealProfile& a, const IdealProfile& b) {
  if (a.side != b.side) throw InvalidInput("profiles on different sides are not comparable");
  for (const auto& [p, ra] : a.per_prime) {
    auto it = b.per_prime.find(p);
    if (it == b.per_prime.end() || ra.degenerate() || it->second.degenerate()) continue;
    if (*ra.exponent != *it->second.exponent) return p;
  }
  return std::nullopt;
}

KoszulCheck koszul_check(const IdealProfile& prof, long p) {
  const FpPolyRing R(p);
  std::vector<FpPoly> gens;
  for (const auto& g : prof.generators) gens.push_back(FpPoly::reduce(g, p));
  KoszulCheck out;
  out.p = p;
  out.by_snf = koszul_snf_homology(R, gens);
  const FpPoly a = ring_gcd(R, gens);
  if (!a.is_zero()) out.by_lemma = koszul_homology_lemma(R, a, static_cast<int>(gens.size()));
  return out;
}

}  // namespace sl2q
