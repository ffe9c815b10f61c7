#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sl2q/orbits.hpp"
#include "sl2q/poly.hpp"
#include "sl2q/root_data.hpp"

namespace sl2q {

// sl2 weight -> multiplicity.  Zero counts are never stored.
struct WeightMultiset {
  std::map<long, std::int64_t> counts;

  void add(long weight, std::int64_t mult = 1);
  std::int64_t total() const;
  std::int64_t count(long weight) const;
  bool is_symmetric() const;
  bool all_even() const;
  bool all_odd() const;
  std::string str() const;  // "{-2:1, 0:11, 2:1}"
  bool operator==(const WeightMultiset&) const = default;
};

// dimension d of an irreducible constituent -> multiplicity
struct SL2Decomposition {
  std::map<int, std::int64_t> irreps;

  std::int64_t dimension() const;
  bool all_odd() const;
  WeightMultiset weights() const;
  bool operator==(const SL2Decomposition&) const = default;
};

// x = [V_2] on the SL2 side (evaluates to 2 on dimensions); x' = x^2 - 1 =
// [V_3] on the PSL2 side (evaluates to 3).
enum class Side { SL2, PSL2 };

struct CharacterPoly {
  IntPoly poly;
  Side side = Side::SL2;

  long eval_point() const { return side == Side::SL2 ? 2 : 3; }
  mpz_class dimension() const { return poly.eval(eval_point()); }
  std::string str() const { return poly.str(side == Side::SL2 ? "x" : "x'"); }
  bool operator==(const CharacterPoly&) const = default;
};

enum class Parity { even, odd };

WeightMultiset natural_weights(const Partition& p);
WeightMultiset natural_weights(const UnipotentClass& c);

// All k-element sub-multiset sums of the underlying weight list.
WeightMultiset exterior_power(const WeightMultiset& w, int k);

// Sign sums (±D_1 ± ... ± D_r)/2.  The halving is the only place where the
// doubled convention of HVector is undone; odd sums are a DataError.
WeightMultiset spin_weights(const HVector& h);
WeightMultiset spin_weights(const UnipotentClass& c);  // type B
// Sign sums with an even (odd) number of '+' signs.
WeightMultiset semispin_weights(const HVector& h, Parity parity);
WeightMultiset semispin_weights(const UnipotentClass& c, Parity parity);  // type D

// h as a coweight: varpi_i(h) = (C^{-1}[u])_i, integral for genuine classes.
std::vector<long> fundamental_coweight_values(const RootSystem& rs, const WeightedDiagram& wd);

// Restriction of V(hw) along phi_u (Freudenthal route; any type).
WeightMultiset restrict_highest_weight(const RootSystem& rs, const UnipotentClass& c, const Weight& hw);
// Restriction of V(varpi_i), i = 1..rank.
WeightMultiset restrict_fundamental(const RootSystem& rs, const UnipotentClass& c, int i);
// Restriction of the adjoint module (weights alpha(h) over all roots plus r zeros).
WeightMultiset restrict_adjoint(const RootSystem& rs, const WeightedDiagram& wd);

// Peel-off decomposition; DataError if w is not an sl2 character.
SL2Decomposition sl2_decompose(const WeightMultiset& w);

IntPoly chebyshev_class(int d);  // [V_d] in Z[x]
CharacterPoly char_poly(const SL2Decomposition& dec);
CharacterPoly char_poly(const WeightMultiset& w);
// Rewrite an even polynomial in x as a polynomial in x' = x^2 - 1.
CharacterPoly to_psl2_variable(const CharacterPoly& p);

// Per-part formula: A/C sum d(d^2-1)/6, B/D half of it.
long dynkin_index_partition(GroupType g, const Partition& p);
// Root-sum formula: sum over all roots of alpha(h)^2, divided by 4 h^vee.
long dynkin_index_roots(const RootSystem& rs, const WeightedDiagram& wd);
// Both routes where both apply (and the published cross-check for table
// entries); any disagreement is a DataError.
long dynkin_index(const RootSystem& rs, const UnipotentClass& c);

}  // namespace sl2q
