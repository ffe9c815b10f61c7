#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sl2q/error.hpp"
#include "sl2q/report.hpp"

using namespace sl2q;

namespace {

struct Options {
  std::string format = "md";
  long prime_bound = 97;
  std::string data_dir;
};

std::filesystem::path data_dir(const Options& o) {
  if (!o.data_dir.empty()) return o.data_dir;
  return OrbitCatalog::default_data_dir();
}

std::string extension(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::markdown: return "md";
    case Format::csv: return "csv";
  }
  return "txt";
}

UnipotentClass lookup(const OrbitCatalog& cat, const std::string& group, const std::string& cls) {
  std::string note;
  const GroupType g = GroupType::parse(group, &note);
  if (!note.empty()) std::cerr << "note: " << note << "\n";
  return cat.find_class(g, cls);
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of the spaces G/phi_u(SL2) for unipotent classes u"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: json, md or csv")
      ->check(CLI::IsMember({"json", "md", "markdown", "csv"}));
  app.add_option("--prime-bound", opt.prime_bound, "Largest prime tried for the K-theory profile")
      ->check(CLI::Range(2L, 100000L));
  app.add_option("--data-dir", opt.data_dir, "Directory with the exceptional orbit tables")
      ->envname("ORBIT_DATA_DIR");

  std::string g1, c1, g2, c2;
  auto* info = app.add_subcommand("info", "Invariants of one space");
  info->add_option("group", g1, "Group, e.g. B6 or E6")->required();
  info->add_option("class", c1, "Partition such as [5,2^4] or a label such as D4(a1)")->required();

  bool include_trivial = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the unipotent classes of a group");
  enumerate->add_option("group", g1, "Group")->required();
  enumerate->add_flag("--include-trivial", include_trivial, "Also list the trivial class");

  auto* dist = app.add_subcommand("distinguish", "Compare two spaces");
  dist->add_option("group_a", g1)->required();
  dist->add_option("class_a", c1)->required();
  dist->add_option("group_b", g2)->required();
  dist->add_option("class_b", c2)->required();

  int dim = 0;
  auto* cdim = app.add_subcommand("classify-dim", "All spaces of a given dimension, compared pairwise");
  cdim->add_option("n", dim, "Dimension of the spaces")->required();

  std::string out_dir = "tables";
  auto* repro = app.add_subcommand("reproduce-paper", "Write the case-study tables");
  repro->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(opt.format);
    const OrbitCatalog catalog(data_dir(opt));
    DossierCache cache(opt.prime_bound);

    if (*info) {
      std::cout << render_dossier(make_dossier(cache, lookup(catalog, g1, c1)), fmt);
    } else if (*enumerate) {
      std::string note;
      const GroupType g = GroupType::parse(g1, &note);
      if (!note.empty()) std::cerr << "note: " << note << "\n";
      std::cout << enumerate_table(cache, catalog.enumerate_classes(g, include_trivial)).render(fmt);
    } else if (*dist) {
      const SpaceId a(lookup(catalog, g1, c1)), b(lookup(catalog, g2, c2));
      std::cout << render_verdict(a, b, distinguish(a, b, cache), fmt);
    } else if (*cdim) {
      std::cout << render_classification(classify_dimension(dim, opt.prime_bound, catalog), fmt);
    } else if (*repro) {
      std::filesystem::create_directories(out_dir);
      const std::string ext = extension(fmt);
      const std::filesystem::path dir(out_dir);
      write_file(dir / ("b6_orbits." + ext), b6_orbits_table(cache, catalog).render(fmt));
      write_file(dir / ("c6_orbits." + ext), c6_orbits_table(cache, catalog).render(fmt));
      write_file(dir / ("iu_mod_p." + ext), iu_mod_p_table(cache, catalog).render(fmt));
      write_file(dir / ("d4." + ext), d4_table(opt.prime_bound).render(fmt));
      std::cout << "wrote 4 tables to " << dir.string() << "\n";
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
