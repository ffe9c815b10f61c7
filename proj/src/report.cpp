#include "sl2q/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sl2q/error.hpp"
#include "sl2q/sl2restrict.hpp"

namespace sl2q {

using nlohmann::json;

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "md" || text == "markdown") return Format::markdown;
  if (text == "csv") return Format::csv;
  throw InvalidInput("unknown format '" + text + "' (json, md, csv)");
}

Dossier make_dossier(DossierCache& cache, const UnipotentClass& c) {
  const SpaceId s(c);
  Dossier d{c, cache.homotopy(s), std::nullopt};
  if (!c.is_trivial()) d.ktheory = cache.ktheory(s);
  return d;
}

namespace {

json poly_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    if (!c.fits_slong_p()) throw DataError("polynomial coefficient does not fit in 64 bits");
    arr.push_back(c.get_si());
  }
  return arr;
}

IntPoly poly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (const auto& x : j) c.emplace_back(x.get<long>());
  return IntPoly(std::move(c));
}

json opt_group(const std::optional<GroupDesc>& g) { return g ? json(g->str()) : json(nullptr); }

std::optional<GroupDesc> opt_group_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return GroupDesc::parse(j.get<std::string>());
}

std::string yn(bool b) { return b ? "Y" : "N"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

bool same_profile(const IdealProfile& a, const IdealProfile& b) {
  if (a.side != b.side || a.d != b.d || a.labels != b.labels || a.generators != b.generators ||
      a.prime_bound != b.prime_bound || a.per_prime.size() != b.per_prime.size())
    return false;
  for (const auto& [p, ra] : a.per_prime) {
    auto it = b.per_prime.find(p);
    if (it == b.per_prime.end() || ra.exponent != it->second.exponent || ra.gcd.coeffs() != it->second.gcd.coeffs())
      return false;
  }
  return true;
}

}  // namespace

std::string format_reduced_ideal(const std::string& var, long d, long p, int a) {
  if (a == 0) return "1";
  const long r = ((d % p) + p) % p;
  const std::string base = r == 0 ? var : "(" + var + "-" + std::to_string(r) + ")";
  return a == 1 ? base : base + "^" + std::to_string(a);
}

json to_json(const UnipotentClass& c) {
  json j;
  j["group"] = c.group().name();
  j["class"] = c.name();
  j["diagram"] = c.diagram().weights;
  j["trivial"] = c.is_trivial();
  if (c.is_classical()) {
    const auto& cd = c.classical();
    j["kind"] = "classical";
    j["partition"] = cd.partition.parts;
    j["very_even_label"] = cd.label ? json(*cd.label == VeryEvenLabel::I ? "I" : "II") : json(nullptr);
  } else {
    const auto& ed = c.exceptional();
    j["kind"] = "exceptional";
    j["label"] = ed.label;
    j["published_index"] = ed.published_index ? json(*ed.published_index) : json(nullptr);
  }
  return j;
}

json to_json(const HomotopyReport& h) {
  json j;
  j["dim_X"] = h.dim_X;
  j["trivial_class"] = h.trivial_class;
  j["even"] = h.even;
  j["quite_even"] = h.quite_even;
  j["dynkin_index"] = h.dynkin_index;
  j["pi1"] = h.pi1.str();
  j["pi2"] = h.pi2.str();
  j["pi3"] = h.pi3.str();
  j["pi4"] = opt_group(h.pi4);
  j["pi5"] = opt_group(h.pi5);
  j["pi6"] = opt_group(h.pi6);
  j["sphere_degrees"] = h.sphere_degrees;
  j["notes"] = h.notes;
  return j;
}

json to_json(const IdealProfile& k) {
  json j;
  j["side"] = k.side == Side::SL2 ? "SL2" : "PSL2";
  j["d"] = k.d;
  j["variable"] = k.variable();
  j["generators"] = json::array();
  for (std::size_t i = 0; i < k.generators.size(); ++i)
    j["generators"].push_back(
        {{"label", k.labels[i]}, {"coefficients", poly_json(k.generators[i])}, {"text", k.generators[i].str(k.variable())}});
  j["prime_bound"] = k.prime_bound;
  j["per_prime"] = json::array();
  for (const auto& [p, r] : k.per_prime) {
    json e{{"p", p}, {"degenerate", r.degenerate()}, {"gcd", r.gcd.coeffs()}};
    e["exponent"] = r.exponent ? json(*r.exponent) : json(nullptr);
    e["ideal"] = r.exponent ? json(format_reduced_ideal(k.variable(), k.d, p, *r.exponent)) : json("0");
    j["per_prime"].push_back(e);
  }
  return j;
}

json to_json(const Dossier& d) {
  return {{"space", to_json(d.cls)},
          {"homotopy", to_json(d.homotopy)},
          {"ktheory", d.ktheory ? to_json(*d.ktheory) : json(nullptr)}};
}

json to_json(const SpaceId& a, const SpaceId& b, const Verdict& v) {
  json j{{"a", a.str()},
         {"b", b.str()},
         {"outcome", to_string(v.outcome)},
         {"witness", to_string(v.witness)},
         {"detail", v.detail},
         {"stages_run", v.stages_run},
         {"flags", v.flags},
         {"notes", v.notes}};
  j["prime"] = v.prime ? json(*v.prime) : json(nullptr);
  j["exponents"] = v.prime ? json::array({*v.exponent_a, *v.exponent_b}) : json(nullptr);
  return j;
}

UnipotentClass class_from_json(const json& j) {
  const GroupType g = GroupType::parse(j.at("group").get<std::string>());
  WeightedDiagram wd{j.at("diagram").get<std::vector<int>>()};
  if (j.at("kind") == "classical") {
    std::optional<VeryEvenLabel> label;
    if (!j.at("very_even_label").is_null())
      label = j.at("very_even_label") == "I" ? VeryEvenLabel::I : VeryEvenLabel::II;
    auto c = make_classical_class(g, Partition::from_parts(j.at("partition").get<std::vector<int>>()), label);
    if (c.diagram() != wd) throw DataError("diagram in document does not match partition");
    return c;
  }
  std::optional<long> idx;
  if (!j.at("published_index").is_null()) idx = j.at("published_index").get<long>();
  return UnipotentClass(g, ExceptionalData{j.at("label").get<std::string>(), idx}, wd);
}

HomotopyReport homotopy_from_json(const json& j) {
  HomotopyReport h;
  h.dim_X = j.at("dim_X").get<int>();
  h.trivial_class = j.at("trivial_class").get<bool>();
  h.even = j.at("even").get<bool>();
  h.quite_even = j.at("quite_even").get<bool>();
  h.dynkin_index = j.at("dynkin_index").get<long>();
  h.pi1 = GroupDesc::parse(j.at("pi1").get<std::string>());
  h.pi2 = GroupDesc::parse(j.at("pi2").get<std::string>());
  h.pi3 = GroupDesc::parse(j.at("pi3").get<std::string>());
  h.pi4 = opt_group_from(j.at("pi4"));
  h.pi5 = opt_group_from(j.at("pi5"));
  h.pi6 = opt_group_from(j.at("pi6"));
  h.sphere_degrees = j.at("sphere_degrees").get<std::vector<int>>();
  h.notes = j.at("notes").get<std::vector<std::string>>();
  return h;
}

IdealProfile ideal_profile_from_json(const json& j) {
  IdealProfile k;
  k.side = j.at("side") == "SL2" ? Side::SL2 : Side::PSL2;
  k.d = j.at("d").get<long>();
  for (const auto& g : j.at("generators")) {
    k.labels.push_back(g.at("label").get<std::string>());
    k.generators.push_back(poly_from_json(g.at("coefficients")));
  }
  k.prime_bound = j.at("prime_bound").get<long>();
  for (const auto& e : j.at("per_prime")) {
    PrimeReduction r;
    r.p = e.at("p").get<long>();
    r.gcd = FpPoly(r.p, e.at("gcd").get<std::vector<long>>());
    if (!e.at("exponent").is_null()) r.exponent = e.at("exponent").get<int>();
    k.per_prime.emplace(r.p, r);
  }
  return k;
}

Dossier dossier_from_json(const json& j) {
  Dossier d{class_from_json(j.at("space")), homotopy_from_json(j.at("homotopy")), std::nullopt};
  if (!j.at("ktheory").is_null()) d.ktheory = ideal_profile_from_json(j.at("ktheory"));
  return d;
}

bool same_dossier(const Dossier& a, const Dossier& b) {
  if (!(a.cls == b.cls) || a.cls.diagram() != b.cls.diagram() || !(a.homotopy == b.homotopy)) return false;
  if (a.ktheory.has_value() != b.ktheory.has_value()) return false;
  return !a.ktheory || same_profile(*a.ktheory, *b.ktheory);
}

std::string Table::render(Format f) const {
  std::ostringstream out;
  switch (f) {
    case Format::json: {
      json arr = json::array();
      for (const auto& row : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = row[i];
        arr.push_back(o);
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::markdown: {
      out << "|";
      for (const auto& c : columns) out << " " << md_field(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < columns.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : rows) {
        out << "|";
        for (const auto& v : row) out << " " << md_field(v) << " |";
        out << "\n";
      }
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string render_dossier(const Dossier& d, Format f) {
  if (f == Format::json) return to_json(d).dump(2) + "\n";
  Table t{{"section", "field", "value"}, {}};
  auto add = [&](const std::string& s, const std::string& k, const std::string& v) { t.rows.push_back({s, k, v}); };
  add("space", "group", d.cls.group().name());
  add("space", "class", d.cls.name());
  add("space", "diagram", d.cls.diagram().str());
  const auto& h = d.homotopy;
  add("homotopy", "dim_X", std::to_string(h.dim_X));
  add("homotopy", "trivial_class", yn(h.trivial_class));
  add("homotopy", "even", yn(h.even));
  add("homotopy", "quite_even", yn(h.quite_even));
  add("homotopy", "dynkin_index", std::to_string(h.dynkin_index));
  add("homotopy", "pi1", h.pi1.str());
  add("homotopy", "pi2", h.pi2.str());
  add("homotopy", "pi3", h.pi3.str());
  if (h.pi4) add("homotopy", "pi4", h.pi4->str());
  if (h.pi5) add("homotopy", "pi5", h.pi5->str());
  if (h.pi6) add("homotopy", "pi6", h.pi6->str());
  add("homotopy", "sphere_degrees", join_ints(h.sphere_degrees));
  for (const auto& n : h.notes) add("homotopy", "note", n);
  if (d.ktheory) {
    const auto& k = *d.ktheory;
    add("ktheory", "side", k.side == Side::SL2 ? "SL2 (d=2)" : "PSL2 (d=3)");
    for (std::size_t i = 0; i < k.generators.size(); ++i)
      add("ktheory", "generator " + k.labels[i], k.generators[i].str(k.variable()));
    for (const auto& [p, r] : k.per_prime)
      add("ktheory", "p=" + std::to_string(p),
          r.exponent ? format_reduced_ideal(k.variable(), k.d, p, *r.exponent) : "degenerate");
  }
  return t.render(f);
}

std::string render_verdict(const SpaceId& a, const SpaceId& b, const Verdict& v, Format f) {
  if (f == Format::json) return to_json(a, b, v).dump(2) + "\n";
  std::string stages, flags;
  for (const auto& s : v.stages_run) stages += (stages.empty() ? "" : " > ") + s;
  for (const auto& s : v.flags) flags += (flags.empty() ? "" : ";") + s;
  Table t{{"a", "b", "outcome", "witness", "detail", "stages_run", "flags"},
          {{a.str(), b.str(), to_string(v.outcome), to_string(v.witness), v.detail, stages, flags}}};
  return t.render(f);
}

std::string render_classification(const ClassificationReport& r, Format f) {
  if (f == Format::json) {
    json j;
    j["dim_x"] = r.dim_x;
    j["prime_bound"] = r.prime_bound;
    j["groups"] = json::array();
    for (auto g : r.groups) j["groups"].push_back(g.name());
    j["space_count"] = r.spaces.size();
    j["pair_count"] = r.pairs.size();
    j["notes"] = r.notes;
    j["witness_counts"] = json::object();
    for (const auto& [w, n] : r.witness_counts()) j["witness_counts"][to_string(w)] = n;
    j["undetermined"] = json::array();
    for (const auto* p : r.undetermined())
      j["undetermined"].push_back(to_json(r.spaces[p->a], r.spaces[p->b], p->verdict));
    j["pairs"] = json::array();
    for (const auto& p : r.pairs)
      j["pairs"].push_back({{"a", r.spaces[p.a].str()},
                            {"b", r.spaces[p.b].str()},
                            {"outcome", to_string(p.verdict.outcome)},
                            {"witness", to_string(p.verdict.witness)},
                            {"detail", p.verdict.detail}});
    return j.dump(2) + "\n";
  }
  if (f == Format::csv) {
    Table t{{"a", "b", "outcome", "witness", "detail"}, {}};
    for (const auto& p : r.pairs)
      t.rows.push_back({r.spaces[p.a].str(), r.spaces[p.b].str(), to_string(p.verdict.outcome),
                        to_string(p.verdict.witness), p.verdict.detail});
    return t.render(f);
  }
  std::ostringstream out;
  std::string groups;
  for (auto g : r.groups) groups += (groups.empty() ? "" : ", ") + g.name();
  out << "# Spaces of dimension " << r.dim_x << "\n\n";
  out << "Groups: " << groups << "; " << r.spaces.size() << " spaces, " << r.pairs.size()
      << " pairs; prime bound " << r.prime_bound << ".\n\n";
  for (const auto& n : r.notes) out << "Note: " << n << "\n\n";
  Table w{{"witness", "pairs"}, {}};
  for (const auto& [k, n] : r.witness_counts()) w.rows.push_back({to_string(k), std::to_string(n)});
  w.rows.push_back({"undetermined", std::to_string(r.undetermined().size())});
  out << w.render(Format::markdown) << "\n## Undetermined pairs\n\n";
  Table u{{"a", "b", "index", "quite even", "detail"}, {}};
  DossierCache cache(r.prime_bound);
  for (const auto* p : r.undetermined()) {
    const auto& ha = cache.homotopy(r.spaces[p->a]);
    u.rows.push_back({r.spaces[p->a].str(), r.spaces[p->b].str(), std::to_string(ha.dynkin_index),
                      yn(ha.quite_even), p->verdict.detail});
  }
  out << u.render(Format::markdown);
  return out.str();
}

Table enumerate_table(DossierCache& cache, const std::vector<UnipotentClass>& classes) {
  Table t{{"class", "diagram", "dynkin_index", "even", "quite_even"}, {}};
  for (const auto& c : classes) {
    const auto& h = cache.homotopy(SpaceId(c));
    t.rows.push_back({c.name(), c.diagram().str(), std::to_string(h.dynkin_index), yn(h.even),
                      h.trivial_class ? "-" : yn(h.quite_even)});
  }
  return t;
}

namespace {

// classes sharing their index with another class, by index descending
Table shared_index_table(DossierCache& cache, const OrbitCatalog& catalog, GroupType g) {
  const auto classes = catalog.enumerate_classes(g);
  std::map<long, int> count;
  for (const auto& c : classes) ++count[cache.homotopy(SpaceId(c)).dynkin_index];
  std::vector<std::pair<long, const UnipotentClass*>> keep;
  for (const auto& c : classes) {
    const long nu = cache.homotopy(SpaceId(c)).dynkin_index;
    if (count[nu] > 1) keep.emplace_back(nu, &c);
  }
  std::stable_sort(keep.begin(), keep.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  Table t{{"partition", "diagram", "dynkin_index", "quite_even"}, {}};
  for (const auto& [nu, c] : keep)
    t.rows.push_back({c->name(), c->diagram().str(), std::to_string(nu),
                      yn(cache.homotopy(SpaceId(*c)).quite_even)});
  return t;
}

}  // namespace

Table b6_orbits_table(DossierCache& cache, const OrbitCatalog& catalog) {
  return shared_index_table(cache, catalog, {Series::B, 6});
}

Table c6_orbits_table(DossierCache& cache, const OrbitCatalog& catalog) {
  return shared_index_table(cache, catalog, {Series::C, 6});
}

Table iu_mod_p_table(DossierCache& cache, const OrbitCatalog& catalog) {
  const auto classes = catalog.enumerate_classes({Series::B, 6});
  std::map<std::pair<long, bool>, std::vector<const UnipotentClass*>> buckets;
  for (const auto& c : classes) {
    const auto& h = cache.homotopy(SpaceId(c));
    buckets[{h.dynkin_index, h.quite_even}].push_back(&c);
  }
  std::vector<std::pair<long, const UnipotentClass*>> keep;
  for (const auto& c : classes) {
    const auto& h = cache.homotopy(SpaceId(c));
    if (buckets[{h.dynkin_index, h.quite_even}].size() > 1) keep.emplace_back(h.dynkin_index, &c);
  }
  std::stable_sort(keep.begin(), keep.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  Table t{{"partition", "dynkin_index", "char", "ideal"}, {}};
  for (const auto& [nu, c] : keep) {
    const auto& h = cache.homotopy(SpaceId(*c));
    const auto& mine = cache.ktheory(SpaceId(*c));
    std::vector<const IdealProfile*> others;
    for (const auto* o : buckets[{nu, h.quite_even}])
      if (o != c) others.push_back(&cache.ktheory(SpaceId(*o)));
    // smallest prime at which this class differs from every other class of its bucket
    std::optional<long> found;
    for (const auto& [p, r] : mine.per_prime) {
      if (r.degenerate()) continue;
      const bool all = std::all_of(others.begin(), others.end(), [&](const IdealProfile* o) {
        const auto& ro = o->per_prime.at(p);
        return !ro.degenerate() && *ro.exponent != *r.exponent;
      });
      if (all) {
        found = p;
        break;
      }
    }
    if (found)
      t.rows.push_back({c->name(), std::to_string(nu), std::to_string(*found),
                        "(" + format_reduced_ideal(mine.variable(), mine.d, *found, *mine.per_prime.at(*found).exponent) +
                            ")"});
    else
      t.rows.push_back({c->name(), std::to_string(nu), "-",
                        "no suitable p found"});
  }
  return t;
}

Table d4_table(long prime_bound) {
  const auto rep = d4_report(prime_bound);
  Table t{{"partition", "diagram", "dynkin_index", "quite_even", "distinct_from_all_others"}, {}};
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    bool all = true;
    for (const auto& v : rep.verdicts)
      if ((v.a == i || v.b == i) && v.verdict.outcome != Outcome::Distinct) all = false;
    const auto& r = rep.rows[i];
    t.rows.push_back({r.partition.str(), r.diagram.str(), std::to_string(r.dynkin_index), yn(r.quite_even), yn(all)});
  }
  return t;
}

}  // namespace sl2q
