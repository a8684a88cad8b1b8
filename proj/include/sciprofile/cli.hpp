#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "core.hpp"
#include "fixtures.hpp"
#include "ingest.hpp"
#include "mds.hpp"
#include "pca.hpp"
#include "render.hpp"
#include "report.hpp"
#include "table.hpp"

namespace sciprofile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr const char* kOutEnv = "SCIPROFILE_OUT";
inline constexpr const char* kDefaultOut = "sciprofile-out";

struct RunConfig {
  std::string input;
  std::vector<std::string> fixtures;
  std::string kind = "shares";
  std::string scheme;
  std::string mode = "q_mode";
  std::size_t k = 3;
  bool kaiser = false;
  std::optional<double> min_cumulative;
  bool no_rotate = false;
  double theta = kDefaultTheta;
  std::string metric = "euclidean";
  std::string variant = "smacof";
  std::string space = "loadings";
  bool no_poles = false;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  int width = 800;
  int height = 800;
  int cols = 78;
  int rows = 30;
  std::string model;
  std::string loadings = "annexA_loadings";
  bool loadings_given = false;
  std::string a = "table2_sjr_variance";
  std::string b = "table3_esi_variance";
  std::size_t top = 3;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes only plain file names inside the output directory.
class OutputDir {
public:
  explicit OutputDir(std::filesystem::path root) : root_(std::move(root)) {}

  void write(const std::string& name, const std::string& content) {
    if (name.find('/') != std::string::npos || name.find('\\') != std::string::npos || name == ".." || name.empty())
      throw Error("refusing to write outside the output directory: " + name);
    std::filesystem::create_directories(root_);
    std::ofstream out(root_ / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + (root_ / name).string());
    out << content;
    written_.push_back(name);
  }

  const std::filesystem::path& root() const { return root_; }
  const std::vector<std::string>& written() const { return written_; }

private:
  std::filesystem::path root_;
  std::vector<std::string> written_;
};

inline OutputDir output_dir(const RunConfig& cfg) {
  if (!cfg.out_dir.empty()) return OutputDir(cfg.out_dir);
  if (const char* env = std::getenv(kOutEnv); env && *env) return OutputDir(env);
  return OutputDir(kDefaultOut);
}

inline ValueKind parse_kind(const std::string& s) {
  if (s == "shares") return ValueKind::shares;
  if (s == "counts") return ValueKind::counts;
  throw Error("unknown value kind '" + s + "'");
}

inline std::optional<SubjectScheme> scheme_override(const RunConfig& cfg) {
  if (cfg.scheme.empty()) return std::nullopt;
  if (cfg.scheme == "scopus27") return scopus27();
  if (cfg.scheme == "esi22") return esi22();
  throw Error("unknown scheme '" + cfg.scheme + "' (expected scopus27 or esi22)");
}

inline ProfileMatrix load_matrix(const RunConfig& cfg) {
  if (!cfg.input.empty()) return parse_matrix(read_file(cfg.input), parse_kind(cfg.kind), scheme_override(cfg));
  if (cfg.fixtures.empty()) throw Error("no input: give --input PATH or --fixture NAME");
  std::vector<ProfileMatrix> parts;
  for (const auto& name : cfg.fixtures) parts.push_back(load_fixture_as<ProfileMatrix>(name));
  if (parts.size() == 1) return parts.front();
  // Each table carries its own world row; concatenation keeps the countries only.
  for (auto& p : parts) p = without_world(p);
  return concat(parts);
}

inline std::size_t choose_k(const RunConfig& cfg, const ProfileMatrix& m, Mode mode) {
  if (!cfg.kaiser && !cfg.min_cumulative) return cfg.k;
  const auto probe = extract_factors(m, 1, mode, false);
  return std::max<std::size_t>(1, cfg.kaiser ? kaiser_k(probe.eigenvalues)
                                             : cumulative_k(probe.explained, *cfg.min_cumulative));
}

inline FactorModel fit(const RunConfig& cfg, const ProfileMatrix& countries) {
  const Mode mode = parse_mode(cfg.mode);
  return extract_factors(countries, choose_k(cfg, countries, mode), mode, !cfg.no_rotate);
}

inline bool report_validation(const ProfileMatrix& m, std::ostream& err) {
  const auto rep = validate_profile(m);
  for (const auto& e : rep.errors) err << "error: " << e.row << ": " << e.message << "\n";
  return rep.accepted();
}

inline std::string validation_text(const ValidationReport& rep) {
  std::string s;
  for (const auto& e : rep.errors) s += "error\t" + e.row + "\t" + e.message + "\n";
  for (const auto& w : rep.warnings) s += "warning\t" + w.row + "\t" + w.message + "\n";
  s += std::to_string(rep.errors.size()) + " error(s), " + std::to_string(rep.warnings.size()) + " warning(s)\n";
  return s;
}

struct MapInputs {
  std::map<std::string, std::string> regions;
  std::map<std::string, std::string> names;
};

inline MapInputs map_inputs(const ProfileMatrix& m) {
  MapInputs mi;
  for (const auto& r : m.rows) {
    mi.regions[r.iso2] = r.region;
    mi.names[r.iso2] = r.name;
  }
  return mi;
}

inline Embedding embed(const RunConfig& cfg, const ProfileMatrix& countries, std::ostream& err) {
  LabeledMatrix rows;
  if (cfg.space == "profiles") {
    rows = profile_rows(countries);
  } else if (cfg.space == "loadings") {
    const auto model = fit(cfg, countries);
    rows = (!cfg.no_poles && model.k == 3) ? add_factor_poles(model) : loading_rows(model);
  } else {
    throw Error("unknown embedding space '" + cfg.space + "' (expected loadings or profiles)");
  }
  const auto d = distance_matrix(rows, parse_metric(cfg.metric));
  Embedding e;
  if (cfg.variant == "classical") {
    e = classical_mds(d);
  } else if (cfg.variant == "smacof") {
    e = cfg.seed ? smacof(d, random_init(d, *cfg.seed)) : smacof(d);
  } else {
    throw Error("unknown MDS variant '" + cfg.variant + "' (expected smacof or classical)");
  }
  for (const auto& msg : e.diagnostics) err << "note: " << msg << "\n";
  return e;
}

inline VarianceSummary variance_source(const std::string& ref) {
  for (auto name : kFixtureNames)
    if (ref == name) return load_fixture_as<VarianceSummary>(ref);
  auto model = factor_model_from_json(read_file(ref));
  return summarize_variance(model, std::filesystem::path(ref).stem().string());
}

/// Index of the bundled per-factor profile table each country comes from.
inline std::vector<std::size_t> annex_b_origin(const ProfileMatrix& countries) {
  std::vector<std::size_t> origin;
  const std::array<ProfileMatrix, 3> parts{load_fixture_as<ProfileMatrix>("annexB_f1"),
                                           load_fixture_as<ProfileMatrix>("annexB_f2"),
                                           load_fixture_as<ProfileMatrix>("annexB_f3")};
  for (const auto& row : countries.rows)
    for (std::size_t t = 0; t < parts.size(); ++t)
      if (parts[t].find(row.iso2)) {
        origin.push_back(t);
        break;
      }
  return origin;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto m = detail::load_matrix(cfg);
  const auto rep = validate_profile(m);
  out << detail::validation_text(rep);
  return rep.accepted() ? kExitOk : kExitFailure;
}

inline int cmd_pca(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto m = detail::load_matrix(cfg);
  if (!detail::report_validation(m, err)) return kExitFailure;
  const auto countries = without_world(m);
  const auto model = detail::fit(cfg, countries);
  const auto table = variance_table(model, std::min<std::size_t>(model.eigenvalues.size(), std::max<std::size_t>(3, model.k)));
  auto dir = detail::output_dir(cfg);
  dir.write("factor_model.json", to_json(model));
  dir.write("variance.tsv", to_tsv(table));
  dir.write("loadings.csv", write_loading_table(to_loading_table(model, &countries)));
  out << to_text(table);
  return kExitOk;
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadingTable loadings;
  std::optional<ProfileMatrix> profiles;
  if (!cfg.input.empty() || !cfg.fixtures.empty()) {
    profiles = detail::load_matrix(cfg);
    if (!detail::report_validation(*profiles, err)) return kExitFailure;
  }
  if (!cfg.model.empty()) {
    const auto countries = profiles ? without_world(*profiles) : ProfileMatrix{};
    loadings = to_loading_table(factor_model_from_json(detail::read_file(cfg.model)), profiles ? &countries : nullptr);
  } else if (profiles && !cfg.loadings_given) {
    const auto countries = without_world(*profiles);
    loadings = to_loading_table(detail::fit(cfg, countries), &countries);
  } else {
    loadings = load_fixture_as<LoadingTable>(cfg.loadings);
  }

  auto dir = detail::output_dir(cfg);
  const auto ranks = rankings_table(loadings);
  const auto members = membership_table(loadings, cfg.theta);
  dir.write("rankings.tsv", to_tsv(ranks));
  dir.write("membership.tsv", to_tsv(members));
  out << to_text(members);

  if (profiles) {
    const CountryProfile* world_row = nullptr;
    for (const auto& r : profiles->rows)
      if (r.is_world()) world_row = &r;
    const auto world = world_row ? *world_row : world_profile(without_world(*profiles));
    for (std::size_t f = 0; f < loadings.k; ++f) {
      std::vector<std::string> codes;
      for (const auto& e : membership(loadings, f, cfg.theta))
        if (profiles->find(e.iso2)) codes.push_back(e.iso2);
      const auto t = profile_table(*profiles, codes, world, "Factor " + std::to_string(f + 1) + " profile vs world");
      dir.write("profile_factor" + std::to_string(f + 1) + ".tsv", to_tsv(t));
    }
  }
  return kExitOk;
}

inline int cmd_mds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto m = detail::load_matrix(cfg);
  if (!detail::report_validation(m, err)) return kExitFailure;
  const auto e = detail::embed(cfg, without_world(m), err);
  auto dir = detail::output_dir(cfg);
  dir.write("embedding.csv", write_embedding_csv(e));
  out << "items " << e.size() << ", stress-1 " << fixed(e.stress1, 6) << ", iterations " << e.iterations << "\n";
  return kExitOk;
}

inline int cmd_map(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto m = detail::load_matrix(cfg);
  if (!detail::report_validation(m, err)) return kExitFailure;
  const auto countries = without_world(m);
  const auto e = detail::embed(cfg, countries, err);
  auto style = default_map_style();
  style.width = cfg.width;
  style.height = cfg.height;
  const auto mi = detail::map_inputs(countries);
  const auto svg = render_svg(e, mi.regions, style, mi.names);
  for (const auto& w : svg.warnings) err << "warning: " << w << "\n";
  const auto ascii = render_ascii(e, cfg.cols, cfg.rows);
  auto dir = detail::output_dir(cfg);
  dir.write("embedding.csv", write_embedding_csv(e));
  dir.write("map.svg", svg.text);
  dir.write("map.txt", ascii);
  out << ascii;
  return kExitOk;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto t = compare_schemes(detail::variance_source(cfg.a), detail::variance_source(cfg.b), cfg.top);
  auto dir = detail::output_dir(cfg);
  dir.write("comparison.tsv", to_tsv(t));
  out << to_text(t);
  return kExitOk;
}

/// Full pipeline over the bundled tables; needs nothing but the binary.
inline int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dir = detail::output_dir(cfg);

  dir.write("table1_world.csv", write_matrix(load_fixture_as<ProfileMatrix>("table1_world")));

  const auto annex_a = load_fixture_as<LoadingTable>("annexA_loadings");
  dir.write("annexA_rankings.tsv", to_tsv(rankings_table(annex_a)));
  dir.write("annexA_membership.tsv", to_tsv(membership_table(annex_a, cfg.theta)));

  std::string profile_text;
  for (int f = 1; f <= 3; ++f) {
    const std::string name = "annexB_f" + std::to_string(f);
    const auto m = load_fixture_as<ProfileMatrix>(name);
    const CountryProfile* world = nullptr;
    std::vector<std::string> members;
    for (const auto& r : m.rows) {
      if (r.is_world()) world = &r;
      else members.push_back(r.iso2);
    }
    if (!world) throw Error(name + " has no world row");
    const auto t = profile_table(m, members, *world, "Factor " + std::to_string(f) + " profile vs world");
    dir.write(name + "_profile.tsv", to_tsv(t));
    profile_text += to_text(t) + "\n";
  }
  dir.write("annexB_profiles.txt", profile_text);

  const auto sjr = load_fixture_as<VarianceSummary>("table2_sjr_variance");
  const auto esi = load_fixture_as<VarianceSummary>("table3_esi_variance");
  dir.write("variance_sjr.tsv", to_tsv(variance_table(sjr, sjr.rows.size())));
  dir.write("variance_esi.tsv", to_tsv(variance_table(esi, esi.rows.size())));
  const auto comparison = compare_schemes(sjr, esi, 3);
  dir.write("scheme_comparison.tsv", to_tsv(comparison));
  dir.write("scheme_comparison.txt", to_text(comparison));

  const auto countries = annex_b_countries();
  dir.write("annexB_validation.txt", detail::validation_text(validate_profile(countries)));
  RunConfig pipeline = cfg;
  pipeline.k = 3;
  pipeline.kaiser = false;
  pipeline.min_cumulative.reset();
  const auto model = detail::fit(pipeline, countries);
  dir.write("annexB_factor_model.json", to_json(model));
  dir.write("annexB_variance.tsv", to_tsv(variance_table(model, 3)));
  const auto loadings = to_loading_table(model, &countries);
  dir.write("annexB_rankings.tsv", to_tsv(rankings_table(loadings, "Factor loadings by country (recomputed)")));

  const auto origin = detail::annex_b_origin(countries);
  const auto part = argmax_partition(model.loadings);
  ReportTable pt;
  pt.title = "Largest-loading factor vs source table";
  pt.row_header = "iso2";
  pt.column_labels = {"country", "source table", "argmax factor", "factor 1", "factor 2", "factor 3"};
  for (std::size_t i = 0; i < countries.rows.size(); ++i)
    pt.add_row(countries.rows[i].iso2,
               {countries.rows[i].name, std::to_string(origin[i] + 1), std::to_string(part[i] + 1),
                fixed(model.loadings(i, 0), 5), fixed(model.loadings(i, 1), 5), fixed(model.loadings(i, 2), 5)});
  dir.write("annexB_partition.tsv", to_tsv(pt));

  const auto style = default_map_style();
  const auto triangle = smacof(distance_matrix(factor_poles(3)));
  dir.write("triangle_embedding.csv", write_embedding_csv(triangle));
  dir.write("triangle.svg", render_svg(triangle, {}, style).text);

  const auto e = smacof(distance_matrix(add_factor_poles(model)));
  for (const auto& msg : e.diagnostics) err << "note: " << msg << "\n";
  const auto mi = detail::map_inputs(countries);
  const auto svg = render_svg(e, mi.regions, style, mi.names);
  for (const auto& w : svg.warnings) err << "warning: " << w << "\n";
  dir.write("map_embedding.csv", write_embedding_csv(e));
  dir.write("map.svg", svg.text);
  dir.write("map.txt", render_ascii(e, cfg.cols, cfg.rows));

  out << to_text(comparison) << "\n" << to_text(variance_table(model, 3));
  out << "wrote " << dir.written().size() << " files to " << dir.root().string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

/// Parses `args` (args[0] is the program name) and runs one subcommand.
/// Returns 0 on success, 1 on validation or precondition failures, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Country subject-profile analysis: Q-mode PCA factors, profile tables and MDS maps.", "sciprofile"};
  app.require_subcommand(1);
  app.footer("Exit status: 0 success, 1 validation/precondition failure, 2 usage error.\n"
             "Output directory: --out, else $SCIPROFILE_OUT, else ./sciprofile-out.");

  auto add_input = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", cfg.input, "profile matrix CSV (iso2,name,region,<areas>[,unclassified])");
    auto* fx = sub->add_option("--fixture", cfg.fixtures, "bundled fixture name (repeatable; rows are concatenated)");
    in->excludes(fx);
    fx->excludes(in);
    sub->add_option("--kind", cfg.kind, "cell values: shares or counts")->check(CLI::IsMember({"shares", "counts"}));
    sub->add_option("--scheme", cfg.scheme, "force the subject scheme")->check(CLI::IsMember({"scopus27", "esi22"}));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_dir, "output directory"); };
  auto add_factor_opts = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "q_mode (countries as variables) or r_mode")
        ->check(CLI::IsMember({"q_mode", "r_mode"}));
    auto* k = sub->add_option("--k", cfg.k, "retained factors")->check(CLI::PositiveNumber);
    auto* kaiser = sub->add_flag("--kaiser", cfg.kaiser, "retain components with eigenvalue above the mean");
    auto* cum = sub->add_option("--min-cum", cfg.min_cumulative, "retain components until this cumulative %")
                    ->check(CLI::Range(0.0, 100.0));
    kaiser->excludes(k)->excludes(cum);
    cum->excludes(k);
    sub->add_flag("--no-rotate", cfg.no_rotate, "skip varimax rotation");
  };
  auto add_mds_opts = [&](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric, "euclidean or cosine")->check(CLI::IsMember({"euclidean", "cosine"}));
    sub->add_option("--variant", cfg.variant, "smacof or classical")->check(CLI::IsMember({"smacof", "classical"}));
    sub->add_option("--space", cfg.space, "loadings or profiles")->check(CLI::IsMember({"loadings", "profiles"}));
    sub->add_flag("--no-poles", cfg.no_poles, "do not embed the factor poles");
    sub->add_option("--seed", cfg.seed, "random SMACOF start instead of classical MDS");
  };

  auto* validate = app.add_subcommand("validate", "check a profile matrix and list errors and warnings");
  add_input(validate);

  auto* pca = app.add_subcommand("pca", "factor model (JSON) and explained-variance table");
  add_input(pca);
  add_factor_opts(pca);
  add_out(pca);

  auto* report = app.add_subcommand("report", "factor rankings, membership and profile-vs-world tables");
  add_input(report);
  add_factor_opts(report);
  add_out(report);
  report->add_option("--theta", cfg.theta, "membership threshold")->check(CLI::Range(0.0, 1.0));
  auto* loadings_opt = report->add_option("--loadings", cfg.loadings, "loading fixture (default when no profiles are given)");
  report->add_option("--model", cfg.model, "factor model JSON written by `pca`");

  auto* mds = app.add_subcommand("mds", "2-D embedding CSV (label,x,y)");
  add_input(mds);
  add_factor_opts(mds);
  add_mds_opts(mds);
  add_out(mds);

  auto* map = app.add_subcommand("map", "SVG map and ASCII preview");
  add_input(map);
  add_factor_opts(map);
  add_mds_opts(map);
  add_out(map);
  map->add_option("--width", cfg.width, "SVG width (px)")->check(CLI::PositiveNumber);
  map->add_option("--height", cfg.height, "SVG height (px)")->check(CLI::PositiveNumber);
  map->add_option("--cols", cfg.cols, "ASCII columns")->check(CLI::Range(10, 1000));
  map->add_option("--rows", cfg.rows, "ASCII rows")->check(CLI::Range(10, 1000));

  auto* compare = app.add_subcommand("compare", "explained variance of two analyses side by side");
  compare->add_option("--a", cfg.a, "fixture name or factor model JSON");
  compare->add_option("--b", cfg.b, "fixture name or factor model JSON");
  compare->add_option("--top", cfg.top, "components to compare")->check(CLI::PositiveNumber);
  add_out(compare);

  auto* reproduce = app.add_subcommand("reproduce", "run the whole pipeline on the bundled tables");
  add_out(reproduce);
  reproduce->add_option("--theta", cfg.theta, "membership threshold")->check(CLI::Range(0.0, 1.0));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("sciprofile");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  cfg.loadings_given = loadings_opt->count() > 0;

  try {
    if (validate->parsed()) return cmd_validate(cfg, out, err);
    if (pca->parsed()) return cmd_pca(cfg, out, err);
    if (report->parsed()) return cmd_report(cfg, out, err);
    if (mds->parsed()) return cmd_mds(cfg, out, err);
    if (map->parsed()) return cmd_map(cfg, out, err);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
    if (reproduce->parsed()) return cmd_reproduce(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace sciprofile::cli
