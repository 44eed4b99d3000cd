#include "symvar/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "symvar/bounds.hpp"
#include "symvar/grid.hpp"
#include "symvar/poly_json.hpp"
#include "symvar/repr.hpp"
#include "symvar/symfun.hpp"
#include "symvar/symmetric.hpp"

namespace symvar {

namespace {

using nlohmann::json;

enum class Format { json, csv, pretty };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown format '" + s + "' (json | csv | pretty)");
}

struct RunManifest {
  std::string command;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> wall_clock_ms;
  json params = json::object();
  json result = json::object();
  std::string csv;     // empty when the command has no tabular form
  std::string pretty;  // human-readable rendering
  bool passed = true;  // false turns into exit code 3
};

std::string emit_report(const RunManifest& m, Format format) {
  switch (format) {
    case Format::json: {
      json j = {{"toolkit", "symvar"},
                {"version", SYMVAR_VERSION},
                {"command", m.command},
                {"seed", m.seed},
                {"params", m.params},
                {"result", m.result}};
      if (m.wall_clock_ms) j["wall_clock_ms"] = *m.wall_clock_ms;
      return j.dump(2) + "\n";
    }
    case Format::csv:
      if (m.csv.empty()) throw std::invalid_argument("command '" + m.command + "' has no csv output");
      return m.csv;
    case Format::pretty:
      return m.pretty;
  }
  return {};
}

// ---- input resolution ----------------------------------------------------

struct ResolvedPoly {
  std::optional<MultiAffinePoly> multi_affine;
  std::optional<SparsePoly> sparse;
};

bool looks_like_family(const std::string& spec) {
  for (const char* name : {"sharpness:", "example3:", "sigma:"})
    if (spec.rfind(name, 0) == 0) return true;
  return false;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polynomial file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

ResolvedPoly resolve_poly(const std::string& spec, std::optional<unsigned> n) {
  ResolvedPoly out;
  if (looks_like_family(spec)) {
    const FamilySpec fam = parse_family(spec);
    switch (fam.kind) {
      case FamilySpec::Kind::sharpness: {
        MultiAffinePoly p = sharpness_poly(fam.parameter);
        if (n) {
          if (*n < fam.parameter) throw std::invalid_argument("--n smaller than the sharpness degree");
          p = p.embed(*n);
        }
        out.multi_affine = p;
        break;
      }
      case FamilySpec::Kind::sigma:
        if (!n) throw std::invalid_argument("sigma families need --n");
        out.multi_affine = materialize(fam.sigma, *n);
        break;
      case FamilySpec::Kind::example3:
        throw std::invalid_argument("example3 defines three polynomials; use the 'system' command");
    }
    return out;
  }
  const json j = read_json_file(spec);
  if (is_sparse_json(j))
    out.sparse = sparse_from_json(j);
  else
    out.multi_affine = multi_affine_from_json(j);
  if (n) {
    const unsigned have = out.sparse ? out.sparse->n_vars() : out.multi_affine->n_vars();
    if (have != *n) throw std::invalid_argument("--n disagrees with the polynomial file");
  }
  return out;
}

Box parse_box(const std::string& text, unsigned n) {
  std::vector<Interval> axes;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    const auto comma = piece.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("box must be lo,hi or lo,hi;lo,hi;...");
    axes.push_back({parse_rational(piece.substr(0, comma)), parse_rational(piece.substr(comma + 1))});
  }
  if (axes.size() == 1) return Box(std::vector<Interval>(n, axes.front()));
  if (axes.size() != n) throw std::invalid_argument("box has " + std::to_string(axes.size()) + " axes, expected " + std::to_string(n));
  return Box(std::move(axes));
}

// ---- rendering helpers ---------------------------------------------------

std::string trail_csv(const ComponentReport& r) {
  std::ostringstream os;
  os << "resolution,count\n";
  for (const auto& [res, count] : r.trail) os << res << ',' << count << '\n';
  return os.str();
}

enum class BoundKind { hypersurface, complement, none };

std::string report_pretty(const ComponentReport& r, BoundKind kind) {
  std::ostringstream os;
  os << "count " << r.count << " [" << to_string(r.certified) << "]";
  if (r.bound_context && kind == BoundKind::hypersurface)
    os << "  b0 <= 2^(d-1) = " << r.bound_context->hypersurface.get_str();
  if (r.bound_context && kind == BoundKind::complement)
    os << "  b0 <= 2^d = " << r.bound_context->complement.get_str();
  os << '\n';
  for (const auto& [res, count] : r.trail) os << "  res " << res << ": " << count << '\n';
  if (r.samples) {
    os << "  samples " << r.samples->total << ", degenerate " << r.samples->degenerate << '\n';
    for (const auto& [roots, lines] : r.samples->root_counts) os << "  " << lines << " lines with " << roots << " roots\n";
  }
  if (r.seed) os << "  seed " << *r.seed << '\n';
  for (const auto& note : r.notes) os << "  note: " << note << '\n';
  return os.str();
}

json big_json(const BigInt& z) { return z.fits_slong_p() ? json(z.get_si()) : json(z.get_str()); }

// ---- verification suites -------------------------------------------------

struct Check {
  std::string name;
  bool passed;
};

std::vector<Check> suite_newton() {
  std::vector<Check> out;
  for (unsigned l = 1; l <= 4; ++l)
    for (unsigned n = 1; n <= 6; ++n)
      out.push_back({"newton l=" + std::to_string(l) + " n=" + std::to_string(n), verify_newton_identity(l, n)});
  return out;
}

std::vector<Check> suite_example3() {
  std::vector<Check> out;
  for (auto [k, n] : {std::pair{2u, 5u}, {1u, 4u}, {3u, 6u}}) {
    const auto pts = boolean_slice_points(k, n);
    out.push_back({"slice k=" + std::to_string(k) + " n=" + std::to_string(n), BigInt(pts.size()) == binomial(n, k)});
  }
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned n = k; n <= 5; ++n)
      out.push_back({"sos k=" + std::to_string(k) + " n=" + std::to_string(n), sos_identity_check(k, n)});
  return out;
}

BigInt two_row_closed_form(unsigned n) {
  const unsigned m = n / 2;
  if (n % 2 == 0) return binomial(n, m) / (m + 1);
  return 2 * binomial(n, m) / (m + 2);
}

std::vector<Check> suite_hooks() {
  std::vector<Check> out;
  for (unsigned n = 0; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& p : partitions_of(n)) total += specht_dim(p) * specht_dim(p);
    out.push_back({"sum dim^2 = n! n=" + std::to_string(n), total == factorial(n)});
  }
  for (unsigned n = 2; n <= 12; ++n) {
    out.push_back({"trivial and sign n=" + std::to_string(n),
                   specht_dim(Partition::row(n)) == 1 && specht_dim(Partition::column(n)) == 1});
    out.push_back({"standard n=" + std::to_string(n), specht_dim(Partition{n - 1, 1}) == n - 1});
  }
  out.push_back({"dim (3,3) = 5", specht_dim(Partition{3, 3}) == 5});
  for (unsigned n = 2; n <= 20; ++n)
    out.push_back({"two-row closed form n=" + std::to_string(n), two_row_max_dim(n) == two_row_closed_form(n)});
  for (unsigned n = 10; n <= 30; ++n)
    out.push_back({"two-row > 1.2^n n=" + std::to_string(n),
                   two_row_max_dim(n).get_d() > std::pow(1.2, static_cast<double>(n))});
  return out;
}

std::vector<Check> suite_aux(unsigned samples, std::uint64_t seed) {
  std::vector<Check> out;
  for (unsigned n = 3; n <= 8; ++n)
    out.push_back({"aux inequality n=" + std::to_string(n), aux_inequality_check(n, samples, seed)});
  return out;
}

std::vector<Check> suite_orbit(const GridOptions& opts) {
  std::vector<Check> out;
  const SigmaCombination f{{-1, 0, 1}};
  const SigmaCombination g{{0, -1, 0, 1}};
  for (unsigned n : {4u, 5u})
    out.push_back({"orbit sigma2-1 n=" + std::to_string(n),
                   orbit_stability_check(materialize(f, n), Box::cube(n, -3, 3), n == 4 ? 16 : 12, opts)});
  for (unsigned n : {6u, 7u})
    out.push_back({"orbit sigma3-sigma1 n=" + std::to_string(n),
                   orbit_stability_check(materialize(g, n), Box::cube(n, -2, 2), n == 6 ? 10 : 8, opts)});
  return out;
}

// ---- the command line ----------------------------------------------------

struct Settings {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

GridOptions grid_options(const Settings& s) {
  GridOptions o;
  o.threads = s.threads;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symvar: exact experiments on multi-affine and symmetric hypersurfaces", "symvar"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--format", settings.format, "Output format: json | csv | pretty");
  app.add_option("--threads", settings.threads, "Worker threads for cell marking")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", settings.seed, "Random seed for sampled experiments");
  app.add_flag("--timing", settings.timing, "Record wall-clock time in the JSON manifest");

  RunManifest manifest;
  std::function<void()> action;

  // bounds d n
  unsigned bd = 0, bn = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Component and Betti-sum bounds for degree d in n variables");
  bounds_cmd->add_option("d", bd)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("n", bn)->required()->check(CLI::PositiveNumber);
  bounds_cmd->callback([&] {
    action = [&] {
      const auto b = bounds(bd, bn);
      manifest.params = {{"d", bd}, {"n", bn}};
      manifest.result = to_json(b);
      manifest.csv = "ccez,ccdz,optm\n" + b.hypersurface.get_str() + "," + b.complement.get_str() + "," +
                     b.betti_sum.get_str() + "\n";
      manifest.pretty = "b0 <= 2^(d-1) = " + b.hypersurface.get_str() + "\ncomplement b0 <= 2^d = " +
                        b.complement.get_str() + "\nBetti sum <= d(2d-1)^(n-1) = " + b.betti_sum.get_str() + "\n";
    };
  });

  // components / complement
  struct GridArgs {
    std::string poly;
    std::string box = "-2,2";
    unsigned res = 8;
    std::optional<unsigned> n;
  };
  GridArgs ga;
  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--poly", ga.poly, "Family (sharpness:d, sigma:a0,..,ad) or JSON file")->required();
    cmd->add_option("--box", ga.box, "lo,hi for every axis, or lo,hi;lo,hi;... per axis");
    cmd->add_option("--res", ga.res, "Starting cells per axis")->check(CLI::Range(1u, 1u << 20));
    cmd->add_option("--n", ga.n, "Number of variables (sigma families)");
  };
  auto* comp_cmd = app.add_subcommand("components", "Connected components of Z(P) in a box");
  add_grid_flags(comp_cmd);
  comp_cmd->callback([&] {
    action = [&] {
      const auto poly = resolve_poly(ga.poly, ga.n);
      const unsigned n = poly.sparse ? poly.sparse->n_vars() : poly.multi_affine->n_vars();
      const Box box = parse_box(ga.box, n);
      manifest.params = {{"poly", ga.poly}, {"box", ga.box}, {"res", ga.res}, {"n", n}};
      const ComponentReport r = poly.sparse ? grid_components_general(*poly.sparse, box, ga.res, grid_options(settings))
                                            : grid_components(*poly.multi_affine, box, ga.res, grid_options(settings));
      manifest.result = to_json(r);
      manifest.csv = trail_csv(r);
      manifest.pretty = report_pretty(r, BoundKind::hypersurface);
    };
  });
  auto* compl_cmd = app.add_subcommand("complement", "Connected components of the complement of Z(P) in a box");
  add_grid_flags(compl_cmd);
  compl_cmd->callback([&] {
    action = [&] {
      const auto poly = resolve_poly(ga.poly, ga.n);
      if (!poly.multi_affine) throw std::invalid_argument("complement needs a multi-affine polynomial");
      const Box box = parse_box(ga.box, poly.multi_affine->n_vars());
      manifest.params = {{"poly", ga.poly}, {"box", ga.box}, {"res", ga.res}, {"n", poly.multi_affine->n_vars()}};
      const auto r = complement_components(*poly.multi_affine, box, ga.res, grid_options(settings));
      manifest.result = to_json(r);
      manifest.csv = trail_csv(r);
      manifest.pretty = report_pretty(r, BoundKind::complement);
    };
  });

  // system
  std::string family;
  std::vector<std::string> system_polys;
  std::string sys_box = "-1/2,3/2";
  unsigned sys_res = 8;
  std::optional<unsigned> sys_n;
  auto* sys_cmd = app.add_subcommand("system", "Cell clusters that may hold common zeros of several polynomials");
  sys_cmd->add_option("--family", family, "example3:k");
  sys_cmd->add_option("--poly", system_polys, "Multi-affine polynomials (families or JSON files), repeatable");
  sys_cmd->add_option("--n", sys_n, "Number of variables");
  sys_cmd->add_option("--box", sys_box, "lo,hi for every axis");
  sys_cmd->add_option("--res", sys_res, "Starting cells per axis")->check(CLI::Range(1u, 1u << 20));
  sys_cmd->callback([&] {
    action = [&] {
      std::vector<MultiAffinePoly> ps;
      if (!family.empty()) {
        const auto fam = parse_family(family);
        if (fam.kind != FamilySpec::Kind::example3) throw std::invalid_argument("--family expects example3:k");
        if (!sys_n) throw std::invalid_argument("example3 needs --n");
        const auto trio = example3_family(fam.parameter, *sys_n);
        ps.assign(trio.begin(), trio.end());
      }
      for (const auto& spec : system_polys) {
        auto p = resolve_poly(spec, sys_n);
        if (!p.multi_affine) throw std::invalid_argument("system polynomials must be multi-affine");
        ps.push_back(*p.multi_affine);
      }
      if (ps.empty()) throw std::invalid_argument("system needs --family or at least one --poly");
      const Box box = parse_box(sys_box, ps.front().n_vars());
      manifest.params = {{"family", family}, {"polys", system_polys}, {"box", sys_box}, {"res", sys_res},
                         {"n", ps.front().n_vars()}};
      const auto r = grid_components_system(ps, box, sys_res, grid_options(settings));
      manifest.result = to_json(r);
      manifest.csv = trail_csv(r);
      manifest.pretty = report_pretty(r, BoundKind::none);
    };
  });

  // symmetric-b0
  std::string coeffs;
  unsigned sym_n = 0, samples = 500;
  auto* sym_cmd = app.add_subcommand("symmetric-b0", "Root counts of sum a_i sigma_i along diagonal lines");
  sym_cmd->add_option("--coeffs", coeffs, "a0,a1,...,ad")->required();
  sym_cmd->add_option("--n", sym_n, "Number of variables")->required();
  sym_cmd->add_option("--samples", samples, "Sampled lines")->check(CLI::PositiveNumber);
  sym_cmd->callback([&] {
    action = [&] {
      const auto f = parse_sigma_coeffs(coeffs);
      manifest.params = {{"coeffs", to_json(f)["coeffs"]}, {"n", sym_n}, {"samples", samples}};
      const auto r = symmetric_b0(f, sym_n, samples, settings.seed);
      manifest.result = to_json(r);
      manifest.pretty = report_pretty(r, BoundKind::hypersurface);
    };
  });

  // stability
  std::optional<unsigned> n_min;
  unsigned n_max = 0;
  auto* stab_cmd = app.add_subcommand("stability", "symmetric-b0 over a range of n");
  stab_cmd->add_option("--coeffs", coeffs, "a0,a1,...,ad")->required();
  stab_cmd->add_option("--n-min", n_min, "First n (default max(3, d))");
  stab_cmd->add_option("--n-max", n_max, "Last n")->required();
  stab_cmd->add_option("--samples", samples, "Sampled lines per n")->check(CLI::PositiveNumber);
  stab_cmd->callback([&] {
    action = [&] {
      const auto f = parse_sigma_coeffs(coeffs);
      const unsigned lo = n_min.value_or(std::max(3, f.degree()));
      manifest.params = {{"coeffs", to_json(f)["coeffs"]}, {"n_min", lo}, {"n_max", n_max}, {"samples", samples}};
      const auto scan = stabilization_scan(f, lo, n_max, samples, settings.seed);
      json rows = json::array();
      std::ostringstream csv, pretty;
      csv << "n,count,certified\n";
      for (const auto& [n, r] : scan.rows) {
        rows.push_back({{"n", n}, {"count", r.count}, {"certified", to_string(r.certified)}});
        csv << n << ',' << r.count << ',' << to_string(r.certified) << '\n';
        pretty << "n=" << n << "  count " << r.count << " [" << to_string(r.certified) << "]";
        if (r.bound_context) pretty << "  b0 <= 2^(d-1) = " << r.bound_context->hypersurface.get_str();
        pretty << '\n';
      }
      manifest.result = {{"rows", rows},
                         {"monotone_from", scan.monotone_from},
                         {"stabilized", scan.stabilized_value ? json(*scan.stabilized_value) : json(nullptr)}};
      manifest.csv = csv.str();
      manifest.pretty = pretty.str();
    };
  });

  // specht
  std::string partition_text;
  std::optional<unsigned> two_row;
  auto* specht_cmd = app.add_subcommand("specht", "Specht module dimension by the hook length formula");
  auto* part_opt = specht_cmd->add_option("--partition", partition_text, "Comma-separated parts, e.g. 3,3");
  auto* two_opt = specht_cmd->add_option("--two-row-max", two_row, "Balanced two-row partition of n");
  part_opt->excludes(two_opt);
  specht_cmd->callback([&] {
    action = [&] {
      Partition lambda;
      if (two_row) {
        if (*two_row < 2) throw std::invalid_argument("--two-row-max needs n >= 2");
        lambda = Partition{*two_row - *two_row / 2, *two_row / 2};
      } else if (!partition_text.empty()) {
        lambda = parse_partition(partition_text);
      } else {
        throw std::invalid_argument("specht needs --partition or --two-row-max");
      }
      const BigInt dim = specht_dim(lambda);
      manifest.params = two_row ? json{{"two_row_max", *two_row}} : json{{"partition", to_json(lambda)}};
      manifest.result = {{"partition", to_json(lambda)}, {"n", lambda.size()}, {"dim", big_json(dim)}};
      manifest.csv = "partition,dim\n\"" + lambda.to_string() + "\"," + dim.get_str() + "\n";
      manifest.pretty = "dim S^" + lambda.to_string() + " = " + dim.get_str() + "\n";
    };
  });

  // young
  unsigned yn = 0, yk = 0;
  auto* young_cmd = app.add_subcommand("young", "Isotypic decomposition of the permutation module on k-subsets");
  young_cmd->add_option("--n", yn, "n")->required();
  young_cmd->add_option("--k", yk, "k <= n/2")->required();
  young_cmd->callback([&] {
    action = [&] {
      const auto table = young_module_multiplicities(yn, yk);
      manifest.params = {{"n", yn}, {"k", yk}};
      manifest.result = {{"table", to_json(table)},
                         {"total_dimension", big_json(table.total_dimension())},
                         {"binomial", big_json(binomial(yn, yk))}};
      std::ostringstream csv, pretty;
      csv << "partition,mult\n";
      for (const auto& [lambda, m] : table.mult) {
        csv << '"' << lambda.to_string() << "\"," << m.get_str() << '\n';
        pretty << "S^" << lambda.to_string() << " x " << m.get_str() << "  (dim " << specht_dim(lambda).get_str() << ")\n";
      }
      pretty << "total dimension " << table.total_dimension().get_str() << " = C(" << yn << "," << yk << ")\n";
      manifest.csv = csv.str();
      manifest.pretty = pretty.str();
    };
  });

  // verify
  std::string suite = "all";
  unsigned verify_samples = 10000;
  auto* verify_cmd = app.add_subcommand("verify", "Run a built-in verification suite");
  verify_cmd->add_option("--suite", suite, "newton | example3 | hooks | aux-ineq | orbit | all")
      ->check(CLI::IsMember({"newton", "example3", "hooks", "aux-ineq", "orbit", "all"}));
  verify_cmd->add_option("--samples", verify_samples, "Random points for aux-ineq")->check(CLI::PositiveNumber);
  verify_cmd->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, std::vector<Check>>> results;
      auto want = [&](const char* name) { return suite == "all" || suite == name; };
      if (want("newton")) results.emplace_back("newton", suite_newton());
      if (want("example3")) results.emplace_back("example3", suite_example3());
      if (want("hooks")) results.emplace_back("hooks", suite_hooks());
      if (want("aux-ineq")) results.emplace_back("aux-ineq", suite_aux(verify_samples, settings.seed));
      if (want("orbit")) results.emplace_back("orbit", suite_orbit(grid_options(settings)));
      json suites = json::object();
      std::ostringstream csv, pretty;
      csv << "suite,check,passed\n";
      bool all = true;
      for (const auto& [name, checks] : results) {
        bool ok = true;
        json list = json::array();
        for (const auto& c : checks) {
          ok = ok && c.passed;
          list.push_back({{"check", c.name}, {"passed", c.passed}});
          csv << name << ",\"" << c.name << "\"," << (c.passed ? "true" : "false") << '\n';
          if (!c.passed) pretty << "FAIL " << name << ": " << c.name << '\n';
        }
        suites[name] = {{"passed", ok}, {"checks", list}};
        pretty << (ok ? "PASS " : "FAIL ") << name << " (" << checks.size() << " checks)\n";
        all = all && ok;
      }
      manifest.params = {{"suite", suite}, {"samples", verify_samples}};
      manifest.result = {{"passed", all}, {"suites", suites}};
      manifest.csv = csv.str();
      manifest.pretty = pretty.str();
      manifest.passed = all;
    };
  });

  std::vector<std::string> argv_storage{"symvar"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

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
    return kExitValidation;
  }

  for (auto* sub : app.get_subcommands()) manifest.command = sub->get_name();
  try {
    const Format format = parse_format(settings.format);
    manifest.seed = settings.seed;
    const auto start = std::chrono::steady_clock::now();
    action();
    if (settings.timing)
      manifest.wall_clock_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << emit_report(manifest, format);
  } catch (const InvariantViolation& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::runtime_error& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  if (!manifest.passed) {
    err << "verification failed\n";
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace symvar
