#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sl2q/invariants.hpp"
#include "sl2q/ktheory.hpp"
#include "sl2q/orbits.hpp"
#include "sl2q/root_data.hpp"

namespace sl2q {

struct SpaceId {
  GroupType group;
  UnipotentClass cls;

  SpaceId(UnipotentClass c) : group(c.group()), cls(std::move(c)) {}
  std::string str() const { return group.name() + " " + cls.name(); }
  bool operator==(const SpaceId& o) const { return group == o.group && cls == o.cls; }
};

enum class Outcome { Distinct, Undetermined, Identical };
enum class Witness {
  none,
  dimension,
  rational_spheres,
  BC_separation,
  pi2_quite_even,
  pi3_dynkin_index,
  higher_pi,
  ktheory_profile,
};

std::string to_string(Outcome o);
std::string to_string(Witness w);

struct Verdict {
  Outcome outcome = Outcome::Undetermined;
  Witness witness = Witness::none;
  std::string detail;                  // human-readable witness payload
  std::optional<long> prime;           // ktheory_profile witness
  std::optional<int> exponent_a, exponent_b;
  std::vector<std::string> stages_run;  // in order
  std::vector<std::string> flags;       // e.g. same_invariants_diagram_swap
  std::vector<std::string> notes;
};

// Per-space invariants, computed once.  Thread-safe.
class DossierCache {
 public:
  explicit DossierCache(long prime_bound = 97);

  long prime_bound() const { return prime_bound_; }
  const RootSystem& root_system(GroupType g);
  const HomotopyReport& homotopy(const SpaceId& s);
  const IdealProfile& ktheory(const SpaceId& s);

 private:
  long prime_bound_;
  std::mutex lock_;
  std::map<std::string, std::unique_ptr<RootSystem>> systems_;
  std::map<std::string, std::unique_ptr<HomotopyReport>> homotopy_;
  std::map<std::string, std::unique_ptr<IdealProfile>> ktheory_;
};

Verdict distinguish(const SpaceId& a, const SpaceId& b, DossierCache& cache);
Verdict distinguish(const SpaceId& a, const SpaceId& b, long prime_bound = 97);

struct PairVerdict {
  std::size_t a = 0, b = 0;  // indices into ClassificationReport::spaces
  Verdict verdict;
};

struct ClassificationReport {
  int dim_x = 0;
  long prime_bound = 97;
  std::vector<GroupType> groups;
  std::vector<SpaceId> spaces;
  std::vector<PairVerdict> pairs;
  std::vector<std::string> notes;

  std::vector<const PairVerdict*> undetermined() const;
  std::map<Witness, int> witness_counts() const;
};

// Every supported simple group with dim G = dim_x + 3 (B2 is dropped in
// favour of C2), their nontrivial classes, and all pairwise verdicts.
// dim_x = 0 gives the single space SL2/SL2.
ClassificationReport classify_dimension(int dim_x, long prime_bound, const OrbitCatalog& catalog);

std::vector<GroupType> groups_of_dimension(int dim_g);

struct D4Row {
  Partition partition;
  WeightedDiagram diagram;
  long dynkin_index = 0;
  bool even = false;
  bool quite_even = false;
};

struct D4Report {
  std::vector<D4Row> rows;
  std::vector<PairVerdict> verdicts;
  // partitions sharing an index whose quite-even flags differ
  std::vector<std::pair<std::string, std::string>> ties_resolved_by_pi2;
};

// The six D4 partitions left after identifying triality orbits.
D4Report d4_report(long prime_bound = 97);

}  // namespace sl2q
