#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sl2q/root_data.hpp"

namespace sl2q {

struct Partition {
  std::vector<int> parts;  // non-increasing, all >= 1

  static Partition from_parts(std::vector<int> parts);
  // Accepts "[5,2^4]", "[5,2,2,2,2]", "5,2^4".
  static Partition parse(std::string_view text);

  int size() const;
  int multiplicity(int d) const;
  bool all_odd() const;
  bool all_even() const;
  bool is_trivial() const;
  // Exponent notation, e.g. "[5,2^4]".
  std::string str() const;

  auto operator<=>(const Partition&) const = default;
};

enum class VeryEvenLabel { I, II };

struct WeightedDiagram {
  std::vector<int> weights;

  bool is_zero() const;
  bool is_even() const;
  std::string str() const;  // "(2,1,0,0,0,1)"
  bool operator==(const WeightedDiagram&) const = default;
};

// Non-negative half of the natural-module h-eigenvalues, non-increasing.
// Entries are the eigenvalues themselves (a part d contributes d-1, d-3, ...),
// so spin weights are sign sums divided by two.
struct HVector {
  std::vector<long> entries;
  bool operator==(const HVector&) const = default;
};

struct ClassicalData {
  Partition partition;
  std::optional<VeryEvenLabel> label;
};

struct ExceptionalData {
  std::string label;
  std::optional<long> published_index;
};

class UnipotentClass {
 public:
  UnipotentClass(GroupType group, std::variant<ClassicalData, ExceptionalData> data,
                 WeightedDiagram diagram);

  GroupType group() const { return group_; }
  const WeightedDiagram& diagram() const { return diagram_; }
  bool is_classical() const { return std::holds_alternative<ClassicalData>(data_); }
  bool is_trivial() const { return diagram_.is_zero(); }

  // Throw InvalidInput for the wrong kind of class.
  const ClassicalData& classical() const;
  const ExceptionalData& exceptional() const;
  const Partition& partition() const { return classical().partition; }

  // "[5,2^4]", "[4^2]II", "E6(a1)".
  std::string name() const;

  bool operator==(const UnipotentClass& o) const {
    return group_ == o.group_ && name() == o.name();
  }

 private:
  GroupType group_;
  std::variant<ClassicalData, ExceptionalData> data_;
  WeightedDiagram diagram_;
};

// Number of classes carried by p in a classical group (0 if invalid, 2 for
// very even partitions in type D).  Exceptional groups always give 0.
int validate_partition(GroupType g, const Partition& p);

// All partitions of n in descending lexicographic order (a linear extension
// of the dominance order).
std::vector<Partition> partitions_of(int n);

// Eigenvalues of h on the natural module, non-increasing.
std::vector<long> natural_eigenvalues(const Partition& p);

HVector h_vector(const Partition& p, int half_rank);
HVector h_vector(const UnipotentClass& c);

WeightedDiagram classical_diagram(GroupType g, const Partition& p,
                                  std::optional<VeryEvenLabel> label = std::nullopt);
WeightedDiagram weighted_diagram_classical(const UnipotentClass& c);

UnipotentClass make_classical_class(GroupType g, const Partition& p,
                                    std::optional<VeryEvenLabel> label = std::nullopt);
UnipotentClass trivial_class(GroupType g);

// Parse a table document ({"group": ..., "classes": [...]}); the trivial
// class is not part of the document and is not returned.
std::vector<UnipotentClass> load_exceptional_table(std::string_view raw);

// Exceptional tables loaded eagerly from a directory; immutable afterwards.
class OrbitCatalog {
 public:
  explicit OrbitCatalog(const std::filesystem::path& data_dir);

  // ORBIT_DATA_DIR, else the directory compiled into the library.
  static std::filesystem::path default_data_dir();

  bool has_table(GroupType g) const;
  std::vector<UnipotentClass> enumerate_classes(GroupType g, bool include_trivial = false) const;
  // Partition text (optionally suffixed I/II) for classical groups, a label
  // for exceptional ones; "1" or "0" names the trivial class everywhere.
  UnipotentClass find_class(GroupType g, std::string_view text) const;
  const std::filesystem::path& data_dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::map<std::string, std::vector<UnipotentClass>> tables_;
};

}  // namespace sl2q
