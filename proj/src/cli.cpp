#include "tvgrid/cli.hpp"

#include "tvgrid/complexes.hpp"
#include "tvgrid/grid.hpp"
#include "tvgrid/homology.hpp"
#include "tvgrid/json_io.hpp"
#include "tvgrid/params.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace tvgrid {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  Json json;
  if (path == "-") {
    std::cin >> json;
    return json;
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    in >> json;
  } catch (const Json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
  return json;
}

void write_output(const Json& json, const std::string& path,
                  std::ostream& out) {
  if (path == "-" || path.empty()) {
    out << json.dump(2) << "\n";
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << json.dump(2) << "\n";
}

Caps parse_caps(const std::string& spec) {
  Caps caps = Caps::defaults();
  if (spec.empty()) return caps;
  std::vector<long long> values;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    const long long value = std::stoll(item, &used);
    if (used != item.size() || value < 1) {
      throw UsageError("bad --caps value '" + item + "'");
    }
    values.push_back(value);
  }
  if (values.size() == 1) {
    caps.max_faces = values[0];
  } else if (values.size() == 2) {
    caps.max_vertices = values[0];
    caps.max_faces = values[1];
  } else if (values.size() == 3) {
    caps.max_vertices = values[0];
    caps.max_faces = values[1];
    caps.max_matrix_entries = values[2];
  } else {
    throw UsageError("--caps takes faces | vertices,faces | vertices,faces,matrix");
  }
  return caps;
}

std::vector<Field> parse_fields(const std::string& spec) {
  std::vector<Field> fields;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "Q" || item == "q") {
      fields.push_back(Field::Q());
    } else {
      std::size_t used = 0;
      const long value = std::stol(item, &used);
      if (used != item.size() || value < 2) {
        throw UsageError("bad --field entry '" + item + "'");
      }
      if (!prime_power_decomposition(value) ||
          prime_power_decomposition(value)->exponent != 1) {
        throw UsageError("--field entries must be Q or a prime");
      }
      fields.push_back(Field::GF(static_cast<std::uint32_t>(value)));
    }
  }
  if (fields.empty()) throw UsageError("--field list is empty");
  return fields;
}

// ----------------------------------------------------------------- gen --

int cmd_gen(int d, int m, int p, std::optional<int> n, std::uint64_t seed,
            long long bound, const std::string& out_path, std::ostream& out) {
  Params params = make_params(d, m, p);
  if (n) params.n = *n;
  validate_params(params);
  const PointGrid grid = random_grid(params, seed, bound);
  write_output(grid_to_json(grid), out_path, out);
  return 0;
}

// ---------------------------------------------------------------- find --

int cmd_find(const std::optional<std::string>& grid_path, bool random,
             int d, int m, std::optional<int> n, int p, std::uint64_t seed,
             long long bound, bool timing, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  PointGrid grid;
  Json report;
  report["command"] = "find";
  if (random) {
    Params params = make_params(d, m, p);
    if (n) params.n = *n;
    validate_params(params);
    grid = random_grid(params, seed, bound);
    report["seed"] = seed;
  } else if (grid_path) {
    grid = grid_from_json(read_json_file(*grid_path));
    if (p > 0) grid.params.p = p;
  } else {
    throw UsageError("find needs a grid file or --random");
  }
  if (grid.params.p < 2) throw UsageError("p must be >= 2");

  report["params"] = Json{{"d", grid.params.d},
                          {"m", grid.params.m},
                          {"n", grid.params.n},
                          {"p", grid.params.p}};
  const auto witness = find_tverberg_partition(grid, grid.params.p);
  Json outcome;
  outcome["witness_found"] = witness.has_value();
  if (witness) {
    if (!recertify_witness(grid, *witness)) {
      throw std::logic_error("witness failed re-certification");
    }
    outcome["witness"] = witness_to_json(*witness);
    outcome["recertified"] = true;
  } else {
    outcome["witness"] = nullptr;
  }
  report["outcome"] = std::move(outcome);
  if (timing) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
  }
  out << report.dump(2) << "\n";
  return witness ? 0 : 1;
}

// ---------------------------------------------------------------- demo --

std::vector<RationalPoint> points_from_json(const Json& json) {
  std::vector<RationalPoint> points;
  for (const auto& item : json) points.push_back(point_from_json(item));
  return points;
}

int cmd_demo_montejano(const std::optional<std::string>& grid_path,
                       std::uint64_t seed, long long bound,
                       const std::optional<std::string>& sets_path,
                       std::ostream& out) {
  PointGrid grid;
  Json report;
  report["command"] = "demo";
  report["demo"] = "montejano";
  if (grid_path) {
    grid = grid_from_json(read_json_file(*grid_path));
  } else {
    grid = random_grid(Params{3, 2, 2, 3}, seed, bound);
    report["seed"] = seed;
  }
  if (grid.params.d != 3 || grid.params.m != 2 || grid.params.n != 3) {
    throw UsageError("montejano demo requires d=3, m=2, n=3");
  }
  grid.params.p = 2;
  report["params"] = Json{{"d", 3}, {"m", 2}, {"n", 3}, {"p", 2}};

  const MontejanoResult result = montejano_transversal(grid);
  Json outcome;
  outcome["color"] = result.axis == 1 ? "rows" : "columns";
  outcome["axis"] = result.axis;
  outcome["line"] = line_to_json(result.line);
  Json verified = Json::array();
  for (const auto& triangle : result.class_triangles) {
    verified.push_back(line_meets_convex(result.line, triangle));
  }
  outcome["triangles_verified"] = std::move(verified);
  outcome["witness"] = witness_to_json(result.witness);

  bool all_ok = true;
  if (sets_path) {
    const Json sets = read_json_file(*sets_path);
    const std::string key = result.axis == 1 ? "rows" : "columns";
    Json sets_verified = Json::array();
    if (!sets.contains(key) || sets.at(key).size() != 3) {
      throw UsageError("sets file needs three V-representation sets under '" +
                       key + "'");
    }
    for (const auto& entry : sets.at(key)) {
      const bool hit = line_meets_convex(result.line, points_from_json(entry));
      sets_verified.push_back(hit);
      all_ok = all_ok && hit;
    }
    outcome["sets_verified"] = std::move(sets_verified);
  }
  report["outcome"] = std::move(outcome);
  out << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_demo_colorful(const std::optional<std::string>& grid_path, int d,
                      int p, std::uint64_t seed, long long bound,
                      std::ostream& out) {
  PointGrid grid;
  Json report;
  report["command"] = "demo";
  report["demo"] = "colorful-helly";
  if (grid_path) {
    grid = grid_from_json(read_json_file(*grid_path));
    d = grid.params.d;
    p = grid.params.p;
  } else {
    if (d < 1 || p < 2) throw UsageError("colorful-helly needs --d and --p");
    const int m = d + 1;
    const int n = (2 * d + 1) * p / (d + 1);
    grid = random_grid(Params{d, m, p, n}, seed, bound);
    report["seed"] = seed;
  }
  if (grid.params.m != grid.params.d + 1) {
    throw UsageError("colorful-helly demo requires m = d + 1");
  }
  if (grid.params.n != (2 * grid.params.d + 1) * grid.params.p /
                           (grid.params.d + 1)) {
    throw UsageError("colorful-helly demo requires n = floor((2d+1)p/(d+1))");
  }
  report["params"] = Json{{"d", grid.params.d},
                          {"m", grid.params.m},
                          {"n", grid.params.n},
                          {"p", grid.params.p}};

  const auto witness = find_tverberg_partition(grid, grid.params.p);
  if (!witness) {
    throw std::logic_error(
        "colorful-helly demo: no partition found although n meets the bound");
  }
  if (!recertify_witness(grid, *witness)) {
    throw std::logic_error("witness failed re-certification");
  }
  const ColorfulSelection selection = colorful_helly_extract(*witness);

  // The witness point lies in the singleton-face hull for every j in S;
  // re-prove each membership with an independent LP.
  bool recertified = true;
  for (int j : selection.selected) {
    auto vertices = face_vertices(FaceSelector{selection.axis, {j}},
                                  grid.params.n, grid.params.m);
    std::vector<RationalPoint> hull;
    for (const auto& index : vertices) hull.push_back(grid.points.at(index));
    recertified = recertified && point_in_hull(witness->witness.point, hull);
  }

  Json outcome;
  outcome["axis"] = selection.axis;
  outcome["selected"] = selection.selected;
  outcome["size"] = selection.selected.size();
  outcome["lower_bound"] = 2 * grid.params.p - grid.params.n;
  outcome["recertified"] = recertified;
  outcome["witness"] = witness_to_json(*witness);
  report["outcome"] = std::move(outcome);
  out << report.dump(2) << "\n";
  return recertified ? 0 : 1;
}

// -------------------------------------------------------------- verify --

struct CheckResult {
  std::string name;
  std::string status;  // PASS, FAIL, SKIP(cap), VACUOUS
  std::string detail;
  Json extra;
};

long long factorial_quotient(int n, int k) {  // n! / (n-k)!
  long long result = 1;
  for (int i = 0; i < k; ++i) result *= n - i;
  return result;
}

int cmd_verify(int n, int m, int p, std::optional<int> d,
               const Caps& caps, const std::vector<Field>& fields,
               bool as_json, std::ostream& out) {
  std::vector<CheckResult> checks;
  auto run_check = [&](const std::string& name,
                       const std::function<CheckResult()>& body) {
    try {
      CheckResult result = body();
      result.name = name;
      checks.push_back(std::move(result));
    } catch (const CapExceeded& e) {
      checks.push_back({name, "SKIP(cap)", e.what(), {}});
    }
  };

  // 1. Facet counts.
  run_check("facet-count-K", [&]() -> CheckResult {
    const ConfigComplex K = config_complex_K(n, m, p, caps);
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    const long long expected = static_cast<long long>(m) * (pn - p) + p;
    const long long actual = static_cast<long long>(K.complex.facets().size());
    return {"", actual == expected ? "PASS" : "FAIL",
            std::to_string(actual) + " facets (expected m(p^n-p)+p = " +
                std::to_string(expected) + ")",
            {}};
  });
  run_check("facet-count-M", [&]() -> CheckResult {
    const MComplex M = subcomplex_M(n, m, p, caps);
    const long long expected = static_cast<long long>(n) * p;
    const long long actual = static_cast<long long>(M.complex.facets().size());
    return {"", actual == expected ? "PASS" : "FAIL",
            std::to_string(actual) + " facets (expected n*p = " +
                std::to_string(expected) + ")",
            {}};
  });
  for (int axis = 2; axis <= m; ++axis) {
    run_check("facet-count-L" + std::to_string(axis), [&]() -> CheckResult {
      const LComplex L = subcomplex_L(axis, n, p, m, caps);
      const long long expected = n >= p ? factorial_quotient(n, p) : 0;
      const long long actual = static_cast<long long>(L.complex.facets().size());
      return {"", actual == expected ? "PASS" : "FAIL",
              std::to_string(actual) + " facets (expected n!/(n-p)! = " +
                  std::to_string(expected) + ")",
              {}};
    });
  }

  // 2. Group actions: invariance and freeness on K and on the nerve N.
  run_check("action-K", [&]() -> CheckResult {
    const ConfigComplex K = config_complex_K(n, m, p, caps);
    const bool invariant = action_is_invariant(K.complex, K.action);
    const FreenessReport freeness = check_action_free(K.complex, K.action);
    std::string detail = std::string("invariant=") +
                         (invariant ? "yes" : "no") + ", free=" +
                         (freeness.free ? "yes" : "no");
    return {"", invariant && freeness.free ? "PASS" : "FAIL", detail, {}};
  });
  run_check("action-N", [&]() -> CheckResult {
    const ConfigComplex K = config_complex_K(n, m, p, caps);
    std::vector<std::string> labels;
    for (const auto& descriptor : K.facet_descriptors) {
      labels.push_back(descriptor.label());
    }
    const NerveComplex N = nerve_of_facets(K.complex, caps, labels);
    const PermutationAction action = induce_on_nerve(K.complex, K.action, N);
    const bool invariant = action_is_invariant(N.complex, action);
    const FreenessReport freeness = check_action_free(N.complex, action);
    std::string detail = std::string("invariant=") +
                         (invariant ? "yes" : "no") + ", free=" +
                         (freeness.free ? "yes" : "no");
    return {"", invariant && freeness.free ? "PASS" : "FAIL", detail, {}};
  });

  // 3. Isomorphisms B ~ M and C ~ L_i.
  run_check("iso-B-M", [&]() -> CheckResult {
    const IsoReport report = verify_iso_B_M(n, m, p, caps);
    return {"", report.pass ? "PASS" : "FAIL", report.detail, {}};
  });
  for (int axis = 2; axis <= m; ++axis) {
    run_check("iso-C-L" + std::to_string(axis), [&]() -> CheckResult {
      const IsoReport report = verify_iso_C_L(axis, n, p, m, caps);
      return {"", report.pass ? "PASS" : "FAIL", report.detail, {}};
    });
  }

  // 4. T is a subcomplex of N, with explicit witness vertices.
  run_check("T-in-N", [&]() -> CheckResult {
    if (m < 2) {
      return {"", "VACUOUS", "m = 1: T = M is a subcomplex of N by definition",
              {}};
    }
    const TinNReport report = verify_T_in_N(n, m, p, caps);
    Json extra;
    if (!report.failures.empty()) {
      Json failures = Json::array();
      for (const auto& failure : report.failures) {
        failures.push_back(failure.what + ": " + failure.payload);
      }
      extra["failures"] = std::move(failures);
    }
    return {"", report.pass ? "PASS" : "FAIL",
            std::to_string(report.facets_checked) +
                " facets with witness vertices",
            std::move(extra)};
  });

  // 5. The nerve map sd(N) -> sd(K): simplicial and equivariant.
  run_check("nerve-map", [&]() -> CheckResult {
    const NerveMapReport report = verify_nerve_map(n, m, p, caps);
    return {"", report.pass ? "PASS" : "FAIL",
            std::to_string(report.faces_checked) + " faces, " +
                std::to_string(report.chains_checked) + " chains checked",
            {}};
  });

  // 6. Homological connectivity of M, each L_i, and T.
  auto homology_check = [&](const std::string& name,
                            const SimplicialComplex& complex, int target,
                            const std::string& label) {
    run_check(name, [&]() -> CheckResult {
      const ConnectivityCheck check =
          homological_connectivity(complex, target, fields, caps);
      std::string status = check.pass ? (check.vacuous ? "VACUOUS" : "PASS")
                                      : "FAIL";
      if (check.field_disagreement) status = "FAIL";
      std::string detail = label + ", target " + std::to_string(target);
      if (check.vacuous) detail += " (nothing to check)";
      if (check.field_disagreement) detail += " [fields disagree: torsion?]";
      return {"", status, detail, homology_report_to_json(label, check)};
    });
  };
  {
    // Build once outside the per-check guard so a cap shows as a skip.
    try {
      const MComplex M = subcomplex_M(n, m, p, caps);
      homology_check("homology-M", M.complex, n - 2,
                     "M(" + std::to_string(n) + "," + std::to_string(p) + ")");
    } catch (const CapExceeded& e) {
      checks.push_back({"homology-M", "SKIP(cap)", e.what(), {}});
    }
    for (int axis = 2; axis <= m; ++axis) {
      try {
        const LComplex L = subcomplex_L(axis, n, p, m, caps);
        homology_check("homology-L" + std::to_string(axis), L.complex,
                       n - p - 1,
                       "L_" + std::to_string(axis) + "(" + std::to_string(n) +
                           "," + std::to_string(p) + ")");
      } catch (const CapExceeded& e) {
        checks.push_back(
            {"homology-L" + std::to_string(axis), "SKIP(cap)", e.what(), {}});
      }
    }
    try {
      const TComplex T = complex_T(n, m, p, caps);
      const long long lhs = join_connectivity_lhs(m, p, n);
      const int target = static_cast<int>(std::max<long long>(lhs, -1));
      std::string label = "T(" + std::to_string(n) + "," + std::to_string(m) +
                          "," + std::to_string(p) + ")";
      homology_check("homology-T", T.join.complex, target, label);
    } catch (const CapExceeded& e) {
      checks.push_back({"homology-T", "SKIP(cap)", e.what(), {}});
    }
  }

  // 7. The join-connectivity inequality backing the choice of n.
  run_check("join-inequality", [&]() -> CheckResult {
    const long long lhs = join_connectivity_lhs(m, p, n);
    if (d) {
      const int rhs = target_connectivity(*d, p);
      const bool holds = join_connectivity_check(*d, m, p, n);
      return {"", holds ? "PASS" : "FAIL",
              "n-2+(m-1)(n-p+1) = " + std::to_string(lhs) +
                  (holds ? " >= " : " < ") + std::to_string(rhs) +
                  " = (d+1)(p-1)-1 at d = " + std::to_string(*d),
              {}};
    }
    // No ambient dimension given: report the largest d the bound certifies.
    const long long d_max = (lhs + 1) / (p - 1) - 1;
    return {"", "PASS",
            "n-2+(m-1)(n-p+1) = " + std::to_string(lhs) +
                "; certifies targets up to d = " + std::to_string(d_max),
            {}};
  });

  // Assemble the report.
  const auto decomposition = prime_power_decomposition(p);
  bool all_pass = true;
  for (const auto& check : checks) all_pass = all_pass && check.status != "FAIL";

  if (as_json) {
    Json report;
    report["command"] = "verify";
    report["suite"] = "proof";
    Json params = Json{{"n", n}, {"m", m}, {"p", p}};
    if (d) params["d"] = *d;
    report["params"] = std::move(params);
    if (decomposition) {
      report["prime_power"] = Json{{"is", true},
                                   {"base", decomposition->base},
                                   {"exponent", decomposition->exponent}};
    } else {
      report["prime_power"] =
          Json{{"is", false}, {"note", "outside theorem hypothesis"}};
    }
    Json items = Json::array();
    for (const auto& check : checks) {
      Json item;
      item["name"] = check.name;
      item["status"] = check.status;
      item["detail"] = check.detail;
      if (!check.extra.is_null() && !check.extra.empty()) {
        item["extra"] = check.extra;
      }
      items.push_back(std::move(item));
    }
    report["checks"] = std::move(items);
    report["pass"] = all_pass;
    out << report.dump(2) << "\n";
  } else {
    out << "proof suite: n=" << n << " m=" << m << " p=" << p;
    if (d) out << " d=" << *d;
    if (decomposition) {
      out << "  (p = " << decomposition->base << "^"
          << decomposition->exponent << ")";
    } else {
      out << "  (p is not a prime power: outside theorem hypothesis)";
    }
    out << "\n";
    for (const auto& check : checks) {
      out << "[" << check.status << "] " << check.name << ": " << check.detail
          << "\n";
      if (check.extra.contains("failures")) {
        for (const auto& failure : check.extra["failures"]) {
          out << "    " << failure.get<std::string>() << "\n";
        }
      }
    }
    out << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"tvgrid: exact Tverberg partitions of product point grids"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random grid file");
  int gen_d = 0, gen_m = 0, gen_p = 0;
  int gen_n = -1;
  std::uint64_t gen_seed = 1;
  long long gen_bound = 10;
  std::string gen_out = "-";
  gen->add_option("--d", gen_d, "ambient dimension")->required();
  gen->add_option("--m", gen_m, "number of axes")->required();
  gen->add_option("--p", gen_p, "number of parts")->required();
  gen->add_option("--n", gen_n, "side length (default: the theorem bound)");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--bound", gen_bound, "coordinate bound B");
  gen->add_option("--out", gen_out, "output path or - for stdout");

  // find
  auto* find = app.add_subcommand("find", "search for a Tverberg partition");
  std::string find_grid;
  bool find_random = false;
  int find_d = 0, find_m = 0, find_p = 0;
  int find_n = -1;
  std::uint64_t find_seed = 1;
  long long find_bound = 10;
  bool find_timing = false;
  find->add_option("grid", find_grid, "grid JSON file or - for stdin");
  find->add_flag("--random", find_random, "generate the instance instead");
  find->add_option("--d", find_d, "ambient dimension (with --random)");
  find->add_option("--m", find_m, "number of axes (with --random)");
  find->add_option("--n", find_n, "side length (with --random)");
  find->add_option("--p", find_p, "number of parts");
  find->add_option("--seed", find_seed, "PRNG seed (with --random)");
  find->add_option("--bound", find_bound, "coordinate bound (with --random)");
  find->add_flag("--timing", find_timing, "include timing_ms in the report");

  // demo
  auto* demo = app.add_subcommand("demo", "montejano | colorful-helly");
  std::string demo_name;
  std::string demo_grid;
  std::string demo_sets;
  int demo_d = 0, demo_p = 0;
  std::uint64_t demo_seed = 1;
  long long demo_bound = 10;
  demo->add_option("name", demo_name, "montejano or colorful-helly")
      ->required();
  demo->add_option("--grid", demo_grid, "grid JSON file");
  demo->add_option("--sets", demo_sets,
                   "V-representation sets file for final line verification");
  demo->add_option("--d", demo_d, "ambient dimension (colorful-helly)");
  demo->add_option("--p", demo_p, "number of parts (colorful-helly)");
  demo->add_option("--seed", demo_seed, "PRNG seed");
  demo->add_option("--bound", demo_bound, "coordinate bound");

  // verify
  auto* verify = app.add_subcommand("verify", "run the proof object checks");
  std::string verify_suite = "proof";
  int verify_n = 0, verify_m = 0, verify_p = 0;
  int verify_d = -1;
  std::string verify_caps;
  std::string verify_fields = "Q,2,3";
  bool verify_json = false;
  verify->add_option("--suite", verify_suite, "check suite (proof)");
  verify->add_option("--n", verify_n, "side length")->required();
  verify->add_option("--m", verify_m, "number of axes")->required();
  verify->add_option("--p", verify_p, "number of parts")->required();
  verify->add_option("--d", verify_d, "ambient dimension (optional)");
  verify->add_option("--caps", verify_caps,
                     "size caps: faces | vertices,faces | vertices,faces,matrix");
  verify->add_option("--field", verify_fields,
                     "comma list of homology fields, e.g. Q,2,3");
  verify->add_flag("--json", verify_json, "emit a JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_d, gen_m, gen_p,
                     gen_n > 0 ? std::optional<int>(gen_n) : std::nullopt,
                     gen_seed, gen_bound, gen_out, out);
    }
    if (find->parsed()) {
      return cmd_find(find_grid.empty() ? std::nullopt
                                        : std::optional<std::string>(find_grid),
                      find_random, find_d, find_m,
                      find_n > 0 ? std::optional<int>(find_n) : std::nullopt,
                      find_p, find_seed, find_bound, find_timing, out);
    }
    if (demo->parsed()) {
      const auto grid_opt = demo_grid.empty()
                                ? std::nullopt
                                : std::optional<std::string>(demo_grid);
      if (demo_name == "montejano") {
        return cmd_demo_montejano(grid_opt, demo_seed, demo_bound,
                                  demo_sets.empty()
                                      ? std::nullopt
                                      : std::optional<std::string>(demo_sets),
                                  out);
      }
      if (demo_name == "colorful-helly") {
        return cmd_demo_colorful(grid_opt, demo_d, demo_p, demo_seed,
                                 demo_bound, out);
      }
      throw UsageError("unknown demo '" + demo_name + "'");
    }
    if (verify->parsed()) {
      if (verify_suite != "proof") {
        throw UsageError("unknown suite '" + verify_suite + "'");
      }
      if (verify_n < 1 || verify_m < 1 || verify_p < 2) {
        throw UsageError("verify needs n >= 1, m >= 1, p >= 2");
      }
      return cmd_verify(verify_n, verify_m, verify_p,
                        verify_d >= 1 ? std::optional<int>(verify_d)
                                      : std::nullopt,
                        parse_caps(verify_caps), parse_fields(verify_fields),
                        verify_json, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tvgrid
