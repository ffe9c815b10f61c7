#include "sl2q/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "sl2q/error.hpp"
#include "sl2q/sl2restrict.hpp"

namespace sl2q {

FiniteAbelianGroupDesc FiniteAbelianGroupDesc::cyclic(long n) {
  if (n < 0) throw InvalidInput("cyclic group order must be non-negative");
  if (n == 0) return infinite_cyclic();
  if (n == 1) return trivial();
  return {Kind::cyclic, {n}};
}

FiniteAbelianGroupDesc FiniteAbelianGroupDesc::sum(std::vector<long> orders) {
  std::erase(orders, 1);
  if (std::any_of(orders.begin(), orders.end(), [](long n) { return n < 1; }))
    throw InvalidInput("summand orders must be positive");
  std::sort(orders.begin(), orders.end());
  if (orders.empty()) return trivial();
  if (orders.size() == 1) return cyclic(orders[0]);
  return {Kind::sum, std::move(orders)};
}

std::string FiniteAbelianGroupDesc::str() const {
  switch (kind_) {
    case Kind::trivial: return "0";
    case Kind::infinite_cyclic: return "Z";
    case Kind::order4_undetermined: return "Z/4|Z/2+Z/2";
    case Kind::cyclic: return "Z/" + std::to_string(orders_[0]);
    case Kind::sum: {
      std::string s;
      for (long n : orders_) s += (s.empty() ? "Z/" : "+Z/") + std::to_string(n);
      return s;
    }
  }
  return "?";
}

FiniteAbelianGroupDesc FiniteAbelianGroupDesc::parse(const std::string& text) {
  if (text == "0") return trivial();
  if (text == "Z") return infinite_cyclic();
  if (text == "Z/4|Z/2+Z/2") return order4_undetermined();
  std::vector<long> orders;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok.rfind("Z/", 0) != 0) throw InvalidInput("cannot parse group '" + text + "'");
    try {
      orders.push_back(std::stol(tok.substr(2)));
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse group '" + text + "'");
    }
  }
  return orders.size() == 1 ? cyclic(orders[0]) : sum(orders);
}

int dim_X(GroupType g) { return g.dimension() - 3; }

bool even_partition(const Partition& p) { return p.all_odd() || p.all_even(); }

bool quite_even_partition(GroupType g, const Partition& p) {
  if (validate_partition(g, p) == 0) throw InvalidInput(p.str() + " is not a class of " + g.name());
  if (p.is_trivial()) throw InvalidInput("quite-even status of the trivial class is a convention, not a criterion");
  if (!p.all_odd()) return false;
  if (g.series == Series::A || g.series == Series::C) return true;
  long prod = 1;
  for (int d : p.parts) prod = prod * d % 8;
  return prod == 1 || prod == 7;
}

bool quite_even_cartan(const RootSystem& rs, const WeightedDiagram& wd) {
  if (wd.is_zero()) throw InvalidInput("quite-even status of the trivial class is a convention, not a criterion");
  const auto v = fundamental_coweight_values(rs, wd);
  return std::all_of(v.begin(), v.end(), [](long x) { return x % 2 == 0; });
}

SpinParity spin_parity_check(const Partition& p) {
  if (!p.all_odd()) throw InvalidInput("spin parity needs all parts odd, got " + p.str());
  long s = 0;
  for (int d : p.parts) {
    const long c = (d - 1) / 2;
    s += c * (c + 1) / 2;
  }
  return s % 2 == 0 ? SpinParity::all_even : SpinParity::all_odd;
}

bool quite_even(const RootSystem& rs, const UnipotentClass& c) {
  if (c.is_trivial()) return false;
  const bool by_cartan = quite_even_cartan(rs, c.diagram());
  if (c.is_classical() && quite_even_partition(c.group(), c.partition()) != by_cartan)
    throw DataError("quite-even criteria disagree for " + c.name());
  return by_cartan;
}

LowHomotopy low_homotopy(const RootSystem& rs, const UnipotentClass& c) {
  LowHomotopy out;
  if (c.is_trivial()) {
    out.pi3 = GroupDesc::infinite_cyclic();
    return out;
  }
  if (quite_even(rs, c)) out.pi2 = GroupDesc::cyclic(2);
  out.pi3 = GroupDesc::cyclic(dynkin_index(rs, c));
  return out;
}

HigherHomotopy higher_pi_BC(Series series, long nu, int rank) {
  if (series != Series::B && series != Series::C) throw InvalidInput("higher homotopy table covers types B and C");
  if (nu <= 0) throw InvalidInput("higher homotopy table needs a nontrivial class");
  HigherHomotopy out;
  if (series == Series::B && rank >= 3) {
    out.pi5 = GroupDesc::cyclic(2);
    out.pi6 = GroupDesc::cyclic(2);
    return out;
  }
  // b4 = b5 = nu mod 2
  if (nu % 2 == 0) {
    out.pi4 = GroupDesc::cyclic(2);
    out.pi6 = GroupDesc::cyclic(2);
  } else {
    out.pi5 = GroupDesc::order4_undetermined();
  }
  return out;
}

std::vector<int> rational_type(GroupType g, bool trivial) {
  const auto rs = build_root_system(g);
  std::vector<int> out;
  for (std::size_t i = trivial ? 0 : 1; i < rs.degrees().size(); ++i) out.push_back(2 * rs.degrees()[i] - 1);
  return out;
}

bool quotient_image_psl(QuotientCase which, const RootSystem& rs, const UnipotentClass& c, long s) {
  if (c.is_trivial() || !c.is_classical() || !c.diagram().is_even() || quite_even(rs, c))
    throw InvalidInput("needs an even, not quite even, nontrivial classical class");
  const GroupType g = c.group();
  const Partition& p = c.partition();
  switch (which) {
    case QuotientCase::type_A_center: {
      if (g.series != Series::A || g.rank % 2 == 0) throw InvalidInput("needs type A_{2k-1}");
      const long n = g.rank + 1;
      if (s < 1 || n % s != 0) throw InvalidInput("s must divide " + std::to_string(n));
      return (n / s) % 2 == 0;
    }
    case QuotientCase::SO_even:
      if (g.series != Series::D) throw InvalidInput("needs type D");
      return p.all_odd();
    case QuotientCase::semispin: {
      if (g.series != Series::D || g.rank % 2 != 0) throw InvalidInput("needs type D_{2k}");
      long prod = 1;
      for (int d : p.parts) prod = prod * d % 8;
      return prod == 1 || prod == 7;
    }
  }
  return false;
}

HomotopyReport homotopy_report(const RootSystem& rs, const UnipotentClass& c) {
  HomotopyReport r;
  const GroupType g = c.group();
  r.trivial_class = c.is_trivial();
  // u = 1 gives X = G itself
  r.dim_X = r.trivial_class ? g.dimension() : dim_X(g);
  r.even = c.diagram().is_even();
  r.quite_even = quite_even(rs, c);
  r.dynkin_index = r.trivial_class ? 0 : dynkin_index(rs, c);
  const auto low = low_homotopy(rs, c);
  r.pi1 = low.pi1;
  r.pi2 = low.pi2;
  r.pi3 = low.pi3;
  if (!r.trivial_class && (g.series == Series::B || g.series == Series::C)) {
    const auto hi = higher_pi_BC(g.series, r.dynkin_index, g.rank);
    r.pi4 = hi.pi4;
    r.pi5 = hi.pi5;
    r.pi6 = hi.pi6;
    if (g.rank == 2) r.notes.push_back("Spin5 = Sp4: B2 and C2 spaces are compared as type C");
  }
  r.sphere_degrees = rational_type(g, r.trivial_class);
  if (r.trivial_class) r.notes.push_back("trivial class: X = G, reported as not quite even");
  return r;
}

}  // namespace sl2q
