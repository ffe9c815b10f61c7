#include "sl2q/orbits.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sl2q/error.hpp"

#ifndef SL2Q_DATA_DIR
#define SL2Q_DATA_DIR "data/exceptional"
#endif

namespace sl2q {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view tok, std::string_view whole) {
  std::string t = trim(tok);
  if (!t.empty() && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw InvalidInput("cannot parse partition '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Partition Partition::from_parts(std::vector<int> parts) {
  if (parts.empty()) throw InvalidInput("empty partition");
  for (int d : parts)
    if (d < 1) throw InvalidInput("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

Partition Partition::parse(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InvalidInput("unbalanced brackets in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto caret = tok.find('^');
    const int d = parse_int(std::string_view(tok).substr(0, caret), text);
    const int k = caret == std::string::npos ? 1 : parse_int(std::string_view(tok).substr(caret + 1), text);
    if (k < 1 || k > 10000) throw InvalidInput("bad exponent in '" + std::string(text) + "'");
    parts.insert(parts.end(), k, d);
  }
  return from_parts(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int d) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), d));
}

bool Partition::all_odd() const {
  return std::all_of(parts.begin(), parts.end(), [](int d) { return d % 2 == 1; });
}

bool Partition::all_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int d) { return d % 2 == 0; });
}

bool Partition::is_trivial() const {
  return std::all_of(parts.begin(), parts.end(), [](int d) { return d == 1; });
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i) out += ",";
    out += std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

bool WeightedDiagram::is_zero() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0; });
}

bool WeightedDiagram::is_even() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w % 2 == 0; });
}

std::string WeightedDiagram::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights[i]);
  }
  return out + ")";
}

UnipotentClass::UnipotentClass(GroupType group, std::variant<ClassicalData, ExceptionalData> data,
                               WeightedDiagram diagram)
    : group_(group), data_(std::move(data)), diagram_(std::move(diagram)) {
  if (static_cast<int>(diagram_.weights.size()) != group_.rank)
    throw InvalidInput("diagram length does not match rank of " + group_.name());
  for (int w : diagram_.weights)
    if (w < 0 || w > 2) throw InvalidInput("diagram entries must lie in {0,1,2}");
}

const ClassicalData& UnipotentClass::classical() const {
  if (auto* c = std::get_if<ClassicalData>(&data_)) return *c;
  throw InvalidInput("class " + name() + " is not classical");
}

const ExceptionalData& UnipotentClass::exceptional() const {
  if (auto* e = std::get_if<ExceptionalData>(&data_)) return *e;
  throw InvalidInput("class " + name() + " is not exceptional");
}

std::string UnipotentClass::name() const {
  if (auto* c = std::get_if<ClassicalData>(&data_)) {
    std::string s = c->partition.str();
    if (c->label) s += *c->label == VeryEvenLabel::I ? "I" : "II";
    return s;
  }
  return std::get<ExceptionalData>(data_).label;
}

int validate_partition(GroupType g, const Partition& p) {
  if (!g.is_classical() || p.size() != g.natural_dimension()) return 0;
  for (int d : p.parts) {
    const int m = p.multiplicity(d);
    if (g.series == Series::C && d % 2 == 1 && m % 2 == 1) return 0;
    if ((g.series == Series::B || g.series == Series::D) && d % 2 == 0 && m % 2 == 1) return 0;
  }
  if (g.series == Series::D && p.all_even()) return 2;
  return 1;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> cur{n};
  while (true) {
    out.push_back(Partition{cur});
    // next partition in reverse lexicographic order
    int ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) break;
    const int k = --cur.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int take = std::min(k, rest);
      cur.push_back(take);
      rest -= take;
    }
  }
  return out;
}

std::vector<long> natural_eigenvalues(const Partition& p) {
  std::vector<long> ev;
  for (int d : p.parts)
    for (int k = d - 1; k >= -(d - 1); k -= 2) ev.push_back(k);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

HVector h_vector(const Partition& p, int half_rank) {
  const auto ev = natural_eigenvalues(p);
  if (half_rank < 0 || 2 * half_rank > static_cast<int>(ev.size()))
    throw InvalidInput("half rank too large for partition " + p.str());
  return HVector{std::vector<long>(ev.begin(), ev.begin() + half_rank)};
}

HVector h_vector(const UnipotentClass& c) {
  const auto g = c.group();
  if (g.series == Series::A) throw InvalidInput("h_vector is defined for types B, C, D");
  return h_vector(c.partition(), g.rank);
}

WeightedDiagram classical_diagram(GroupType g, const Partition& p,
                                  std::optional<VeryEvenLabel> label) {
  const int count = validate_partition(g, p);
  if (count == 0) throw InvalidInput("partition " + p.str() + " is not valid for " + g.name());
  if ((count == 2) != label.has_value())
    throw InvalidInput(count == 2 ? "very even partition " + p.str() + " needs label I or II"
                                  : "only very even partitions carry a label");
  const int r = g.rank;
  const auto ev = natural_eigenvalues(p);
  std::vector<int> w(r);
  if (g.series == Series::A) {
    for (int i = 0; i < r; ++i) w[i] = static_cast<int>(ev[i] - ev[i + 1]);
  } else {
    const std::vector<long> d(ev.begin(), ev.begin() + r);
    for (int i = 0; i + 1 < r; ++i) w[i] = static_cast<int>(d[i] - d[i + 1]);
    switch (g.series) {
      case Series::B: w[r - 1] = static_cast<int>(d[r - 1]); break;
      case Series::C: w[r - 1] = static_cast<int>(2 * d[r - 1]); break;
      default: w[r - 1] = static_cast<int>(d[r - 2] + d[r - 1]); break;
    }
    if (label == VeryEvenLabel::II) std::swap(w[r - 2], w[r - 1]);
  }
  return WeightedDiagram{w};
}

WeightedDiagram weighted_diagram_classical(const UnipotentClass& c) {
  const auto& data = c.classical();
  return classical_diagram(c.group(), data.partition, data.label);
}

UnipotentClass make_classical_class(GroupType g, const Partition& p,
                                    std::optional<VeryEvenLabel> label) {
  return UnipotentClass(g, ClassicalData{p, label}, classical_diagram(g, p, label));
}

UnipotentClass trivial_class(GroupType g) {
  WeightedDiagram zero{std::vector<int>(g.rank, 0)};
  if (g.is_classical())
    return UnipotentClass(g, ClassicalData{Partition{std::vector<int>(g.natural_dimension(), 1)}, {}},
                          zero);
  return UnipotentClass(g, ExceptionalData{"0", {}}, zero);
}

std::vector<UnipotentClass> load_exceptional_table(std::string_view raw) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(raw);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("orbit table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("group") || !doc["group"].is_string() ||
      !doc.contains("classes") || !doc["classes"].is_array())
    throw DataError("orbit table must have string 'group' and array 'classes'");
  const GroupType g = GroupType::parse(doc["group"].get<std::string>());
  if (g.is_classical()) throw DataError("orbit tables are only for exceptional groups");
  if (doc["classes"].empty()) throw DataError("orbit table for " + g.name() + " has no classes");

  std::vector<UnipotentClass> out;
  std::set<std::string> labels;
  std::set<std::vector<int>> diagrams;
  for (const auto& entry : doc["classes"]) {
    if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string() ||
        !entry.contains("diagram") || !entry["diagram"].is_array())
      throw DataError("orbit table entry needs string 'label' and array 'diagram'");
    const auto label = entry["label"].get<std::string>();
    std::vector<int> w;
    for (const auto& x : entry["diagram"]) {
      if (!x.is_number_integer()) throw DataError("diagram entries must be integers");
      w.push_back(x.get<int>());
    }
    if (static_cast<int>(w.size()) != g.rank)
      throw DataError("diagram of " + label + " has length " + std::to_string(w.size()) +
                      ", expected rank " + std::to_string(g.rank));
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0 || x > 2; }))
      throw DataError("diagram of " + label + " has entries outside {0,1,2}");
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
      throw DataError("table lists the trivial class");
    if (!labels.insert(label).second) throw DataError("duplicate label " + label);
    if (!diagrams.insert(w).second) throw DataError("duplicate diagram for " + label);
    std::optional<long> index;
    if (entry.contains("index")) {
      if (!entry["index"].is_number_integer()) throw DataError("index must be an integer");
      index = entry["index"].get<long>();
    }
    out.emplace_back(g, ExceptionalData{label, index}, WeightedDiagram{w});
  }
  return out;
}

OrbitCatalog::OrbitCatalog(const std::filesystem::path& data_dir) : dir_(data_dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir_))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    auto classes = load_exceptional_table(buf.str());
    const std::string name = classes.front().group().name();
    if (tables_.count(name)) throw DataError("two orbit tables for " + name);
    tables_.emplace(name, std::move(classes));
  }
}

std::filesystem::path OrbitCatalog::default_data_dir() {
  if (const char* env = std::getenv("ORBIT_DATA_DIR"); env && *env) return env;
  return SL2Q_DATA_DIR;
}

bool OrbitCatalog::has_table(GroupType g) const { return tables_.count(g.name()) > 0; }

std::vector<UnipotentClass> OrbitCatalog::enumerate_classes(GroupType g, bool include_trivial) const {
  std::vector<UnipotentClass> out;
  if (g.is_classical()) {
    for (const auto& p : partitions_of(g.natural_dimension())) {
      if (p.is_trivial() && !include_trivial) continue;
      const int n = validate_partition(g, p);
      if (n == 1) out.push_back(make_classical_class(g, p));
      if (n == 2) {
        out.push_back(make_classical_class(g, p, VeryEvenLabel::I));
        out.push_back(make_classical_class(g, p, VeryEvenLabel::II));
      }
    }
    return out;
  }
  auto it = tables_.find(g.name());
  if (it == tables_.end())
    throw DataError("no orbit table for " + g.name() + " in " + dir_.string());
  if (include_trivial) out.push_back(trivial_class(g));
  out.insert(out.end(), it->second.begin(), it->second.end());
  return out;
}

UnipotentClass OrbitCatalog::find_class(GroupType g, std::string_view text) const {
  const std::string t = trim(text);
  if (t == "1" || t == "0") return trivial_class(g);
  if (!g.is_classical()) {
    for (const auto& c : enumerate_classes(g))
      if (c.name() == t) return c;
    throw InvalidInput("no class labelled '" + t + "' in " + g.name());
  }
  std::string body = t;
  std::optional<VeryEvenLabel> label;
  auto strip_suffix = [&](std::string_view suffix) {
    if (body.size() > suffix.size() && body.ends_with(suffix)) {
      body = trim(body.substr(0, body.size() - suffix.size()));
      return true;
    }
    return false;
  };
  if (strip_suffix("II"))
    label = VeryEvenLabel::II;
  else if (strip_suffix("I"))
    label = VeryEvenLabel::I;
  const Partition p = Partition::parse(body);
  if (p.size() != g.natural_dimension())
    throw InvalidInput("partition " + p.str() + " has size " + std::to_string(p.size()) + ", " +
                       g.name() + " needs " + std::to_string(g.natural_dimension()));
  return make_classical_class(g, p, label);
}

}  // namespace sl2q
