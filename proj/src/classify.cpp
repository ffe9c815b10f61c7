#include "sl2q/classify.hpp"

#include <algorithm>

#include "sl2q/error.hpp"
#include "sl2q/sl2restrict.hpp"

namespace sl2q {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Distinct: return "Distinct";
    case Outcome::Undetermined: return "Undetermined";
    case Outcome::Identical: return "Identical";
  }
  return "?";
}

std::string to_string(Witness w) {
  switch (w) {
    case Witness::none: return "none";
    case Witness::dimension: return "dimension";
    case Witness::rational_spheres: return "rational_spheres";
    case Witness::BC_separation: return "BC_separation";
    case Witness::pi2_quite_even: return "pi2_quite_even";
    case Witness::pi3_dynkin_index: return "pi3_dynkin_index";
    case Witness::higher_pi: return "higher_pi";
    case Witness::ktheory_profile: return "ktheory_profile";
  }
  return "?";
}

DossierCache::DossierCache(long prime_bound) : prime_bound_(prime_bound) {
  if (prime_bound < 2) throw InvalidInput("prime bound must be at least 2");
}

const RootSystem& DossierCache::root_system(GroupType g) {
  std::lock_guard guard(lock_);
  auto& slot = systems_[g.name()];
  if (!slot) slot = std::make_unique<RootSystem>(g);
  return *slot;
}

const HomotopyReport& DossierCache::homotopy(const SpaceId& s) {
  const RootSystem& rs = root_system(s.group);
  const std::string key = s.str();
  {
    std::lock_guard guard(lock_);
    if (auto it = homotopy_.find(key); it != homotopy_.end()) return *it->second;
  }
  auto report = std::make_unique<HomotopyReport>(homotopy_report(rs, s.cls));
  std::lock_guard guard(lock_);
  auto& slot = homotopy_[key];
  if (!slot) slot = std::move(report);
  return *slot;
}

const IdealProfile& DossierCache::ktheory(const SpaceId& s) {
  const RootSystem& rs = root_system(s.group);
  const std::string key = s.str();
  {
    std::lock_guard guard(lock_);
    if (auto it = ktheory_.find(key); it != ktheory_.end()) return *it->second;
  }
  auto prof = std::make_unique<IdealProfile>(ideal_profile(rs, s.cls, prime_bound_));
  std::lock_guard guard(lock_);
  auto& slot = ktheory_[key];
  if (!slot) slot = std::move(prof);
  return *slot;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

bool is_bc(Series s) { return s == Series::B || s == Series::C; }

}  // namespace

Verdict distinguish(const SpaceId& a, const SpaceId& b, DossierCache& cache) {
  Verdict v;
  auto distinct = [&](Witness w, std::string detail) {
    v.outcome = Outcome::Distinct;
    v.witness = w;
    v.detail = std::move(detail);
    return v;
  };
  if (a == b) {
    v.outcome = Outcome::Identical;
    v.detail = "same space";
    return v;
  }
  const auto& ha = cache.homotopy(a);
  const auto& hb = cache.homotopy(b);

  if (ha.trivial_class != hb.trivial_class) {
    v.stages_run.push_back("rational_spheres");
    return distinct(Witness::rational_spheres,
                    "trivial vs nontrivial class: " + join(ha.sphere_degrees) + " vs " + join(hb.sphere_degrees));
  }

  v.stages_run.push_back("dimension");
  if (ha.dim_X != hb.dim_X)
    return distinct(Witness::dimension, std::to_string(ha.dim_X) + " vs " + std::to_string(hb.dim_X));

  v.stages_run.push_back("rational_spheres");
  if (ha.sphere_degrees != hb.sphere_degrees)
    return distinct(Witness::rational_spheres, join(ha.sphere_degrees) + " vs " + join(hb.sphere_degrees));

  const Series sa = a.group.series, sb = b.group.series;
  if (is_bc(sa) && is_bc(sb) && sa != sb && a.group.rank == b.group.rank) {
    v.stages_run.push_back("BC_separation");
    if (a.group.rank >= 3) return distinct(Witness::BC_separation, a.group.name() + " vs " + b.group.name());
    v.notes.push_back("B2 and C2 are the same group (Spin5 = Sp4); B/C separation does not apply");
  }

  v.stages_run.push_back("pi2_quite_even");
  if (ha.quite_even != hb.quite_even)
    return distinct(Witness::pi2_quite_even, "pi2 = " + ha.pi2.str() + " vs " + hb.pi2.str());

  v.stages_run.push_back("pi3_dynkin_index");
  if (ha.dynkin_index != hb.dynkin_index)
    return distinct(Witness::pi3_dynkin_index,
                    "index " + std::to_string(ha.dynkin_index) + " vs " + std::to_string(hb.dynkin_index));

  if (ha.pi4 && hb.pi4) {
    v.stages_run.push_back("higher_pi");
    // order-4 descriptors are equal to each other by construction
    const bool same = ha.pi4 == hb.pi4 && ha.pi5 == hb.pi5 && ha.pi6 == hb.pi6;
    if (!same)
      return distinct(Witness::higher_pi, "(pi4,pi5,pi6) = (" + ha.pi4->str() + "," + ha.pi5->str() + "," +
                                              ha.pi6->str() + ") vs (" + hb.pi4->str() + "," + hb.pi5->str() +
                                              "," + hb.pi6->str() + ")");
  }

  if (!ha.trivial_class) {
    v.stages_run.push_back("ktheory_profile");
    const auto& ka = cache.ktheory(a);
    const auto& kb = cache.ktheory(b);
    if (ka.side != kb.side) throw DataError("quite-even agreement but different K-theory sides");
    if (auto p = first_separating_prime(ka, kb)) {
      v.prime = *p;
      v.exponent_a = *ka.per_prime.at(*p).exponent;
      v.exponent_b = *kb.per_prime.at(*p).exponent;
      return distinct(Witness::ktheory_profile, "p=" + std::to_string(*p) + ": (" + ka.variable() + "-" +
                                                    std::to_string(ka.d) + ")^" + std::to_string(*v.exponent_a) +
                                                    " vs ^" + std::to_string(*v.exponent_b));
    }
    v.detail = "no separating prime <= " + std::to_string(cache.prime_bound());
  }

  v.outcome = Outcome::Undetermined;
  if (a.cls.is_classical() && b.cls.is_classical() && a.group == b.group &&
      a.cls.partition() == b.cls.partition() && a.cls.classical().label && b.cls.classical().label)
    v.flags.push_back("same_invariants_diagram_swap");
  if (is_bc(sa) && is_bc(sb) && sa != sb && a.group.rank == 2) v.flags.push_back("isomorphic_groups_B2_C2");
  return v;
}

Verdict distinguish(const SpaceId& a, const SpaceId& b, long prime_bound) {
  DossierCache cache(prime_bound);
  return distinguish(a, b, cache);
}

std::vector<const PairVerdict*> ClassificationReport::undetermined() const {
  std::vector<const PairVerdict*> out;
  for (const auto& p : pairs)
    if (p.verdict.outcome == Outcome::Undetermined) out.push_back(&p);
  return out;
}

std::map<Witness, int> ClassificationReport::witness_counts() const {
  std::map<Witness, int> out;
  for (const auto& p : pairs)
    if (p.verdict.outcome == Outcome::Distinct) ++out[p.verdict.witness];
  return out;
}

std::vector<GroupType> groups_of_dimension(int dim_g) {
  std::vector<GroupType> out;
  for (int r = 1; r * (r + 2) <= dim_g; ++r)
    if (r * (r + 2) == dim_g) out.push_back({Series::A, r});
  for (int r = 2; r * (2 * r + 1) <= dim_g; ++r)
    if (r * (2 * r + 1) == dim_g) {
      out.push_back({Series::B, r});
      out.push_back({Series::C, r});
    }
  for (int r = 4; r * (2 * r - 1) <= dim_g; ++r)
    if (r * (2 * r - 1) == dim_g) out.push_back({Series::D, r});
  for (GroupType g : {GroupType{Series::E, 6}, GroupType{Series::E, 7}, GroupType{Series::E, 8},
                      GroupType{Series::F, 4}, GroupType{Series::G, 2}})
    if (g.dimension() == dim_g) out.push_back(g);
  return out;
}

ClassificationReport classify_dimension(int dim_x, long prime_bound, const OrbitCatalog& catalog) {
  if (dim_x < 0) throw InvalidInput("dimension must be non-negative");
  ClassificationReport rep;
  rep.dim_x = dim_x;
  rep.prime_bound = prime_bound;
  for (GroupType g : groups_of_dimension(dim_x + 3)) {
    if (g == GroupType{Series::B, 2}) {
      rep.notes.push_back("B2 omitted: Spin5 = Sp4, its spaces are those of C2");
      continue;
    }
    rep.groups.push_back(g);
  }
  if (rep.groups.empty())
    throw InvalidInput("no supported simple group has dimension " + std::to_string(dim_x + 3));
  for (GroupType g : rep.groups)
    for (auto& c : catalog.enumerate_classes(g)) rep.spaces.emplace_back(std::move(c));

  DossierCache cache(prime_bound);
  for (std::size_t i = 0; i < rep.spaces.size(); ++i)
    for (std::size_t j = i + 1; j < rep.spaces.size(); ++j)
      rep.pairs.push_back({i, j, distinguish(rep.spaces[i], rep.spaces[j], cache)});
  return rep;
}

D4Report d4_report(long prime_bound) {
  const GroupType d4{Series::D, 4};
  const RootSystem rs(d4);
  D4Report rep;
  std::vector<SpaceId> spaces;
  for (const char* text : {"[2^2,1^4]", "[3,1^5]", "[3^2,1^2]", "[3,2^2,1]", "[5,1^3]", "[5,3]"}) {
    const auto c = make_classical_class(d4, Partition::parse(text));
    D4Row row;
    row.partition = c.partition();
    row.diagram = c.diagram();
    row.dynkin_index = dynkin_index(rs, c);
    row.even = c.diagram().is_even();
    row.quite_even = quite_even(rs, c);
    rep.rows.push_back(row);
    spaces.emplace_back(c);
  }
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
      const auto &x = rep.rows[i], &y = rep.rows[j];
      if (x.dynkin_index == y.dynkin_index && x.quite_even != y.quite_even)
        rep.ties_resolved_by_pi2.emplace_back(x.partition.str(), y.partition.str());
    }
  DossierCache cache(prime_bound);
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i + 1; j < spaces.size(); ++j)
      rep.verdicts.push_back({i, j, distinguish(spaces[i], spaces[j], cache)});
  return rep;
}

}  // namespace sl2q
