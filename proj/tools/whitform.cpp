// whitform: exact computations with contravariant forms on Whittaker and
// Verma modules over the supported semisimple Lie algebras.
//
// Subcommands: dim, gram, verify, roots.  All numeric output is exact
// ("p/q" strings); --decimal adds rounded annotations marked as such.

#include "CLI11.hpp"
#include "json.hpp"

#include "whittaker/checks.hpp"
#include "whittaker/serialize.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace whittaker;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPrediction = 3;
constexpr int kExitVerify = 4;
constexpr int kExitDegree = 5;

struct Options {
  std::string config_path;
  std::string algebra;
  std::string eta;
  std::string chi;
  std::string lambda;
  std::string coeffs;
  std::string module;
  std::string suite;
  std::string out;
  std::string format;
  int max_degree = -1;
  int slack = -1;
  int depth = -1;
  int decimal = -1;
  int samples = -1;
  long long seed = -1;
};

struct Job {
  Algebra alg;
  EtaCharacter eta;
  // chi given by name, or positionally in generator order
  std::map<std::string, Rat> chi_named;
  std::vector<Rat> chi_positional;
  std::vector<Rat> lambda;
  std::vector<Rat> coeffs;
  bool has_coeffs = false;
  std::string module = "verma";
  std::string suite;
  std::string out;
  std::string format = "json";
  int max_degree = 6;
  int slack = 0;
  int depth = 2;
  int decimal = -1;
  int samples = 100;
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

// values per simple root from "1,1", {"a1": "1", ...}, or ["1", ...]
std::vector<Rat> simple_values(const json& j, int rank, const std::string& what) {
  std::vector<Rat> v(rank, Rat(0));
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (key.size() < 2 || key[0] != 'a')
        throw AlgebraError(what + ": keys must be a1..a" + std::to_string(rank));
      const int idx = std::stoi(key.substr(1)) - 1;
      if (idx < 0 || idx >= rank) throw AlgebraError(what + ": unknown simple root '" + key + "'");
      v[idx] = rat_from_string(val.get<std::string>());
    }
    return v;
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != rank)
      throw AlgebraError(what + ": expected " + std::to_string(rank) + " values");
    for (int i = 0; i < rank; ++i) v[i] = rat_from_string(j[i].get<std::string>());
    return v;
  }
  throw AlgebraError(what + ": expected an object or an array of rational strings");
}

std::vector<Rat> simple_values(const std::string& flag, int rank, const std::string& what) {
  const auto parts = split(flag, ',');
  if (static_cast<int>(parts.size()) != rank)
    throw AlgebraError(what + ": expected " + std::to_string(rank) + " comma-separated values");
  std::vector<Rat> v(rank);
  for (int i = 0; i < rank; ++i) v[i] = rat_from_string(parts[i]);
  return v;
}

Job resolve(const Options& opt, bool default_eta_ones) {
  json cfg = json::object();
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw AlgebraError("cannot open config file '" + opt.config_path + "'");
    in >> cfg;
  }

  Job job;
  // algebra: flag name, config name, or explicit Cartan matrix
  std::string alg_name = opt.algebra;
  if (alg_name.empty() && cfg.contains("algebra")) alg_name = cfg["algebra"].get<std::string>();
  Eigen::MatrixXi cartan;
  if (cfg.contains("cartan") && alg_name.empty()) {
    const auto& m = cfg["cartan"];
    const int r = static_cast<int>(m.size());
    cartan.resize(r, r);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(m[i].size()) != r) throw AlgebraError("cartan: matrix must be square");
      for (int j = 0; j < r; ++j) cartan(i, j) = m[i][j].get<int>();
    }
  } else {
    if (alg_name.empty()) alg_name = "A1";
    cartan = cartan_matrix_for(alg_name);
  }
  job.alg = chevalley_basis(build_root_system(cartan));

  // eta
  if (!opt.eta.empty()) {
    job.eta = make_eta(job.alg.rs, simple_values(opt.eta, job.alg.r, "eta"));
  } else if (cfg.contains("eta")) {
    job.eta = make_eta(job.alg.rs, simple_values(cfg["eta"], job.alg.r, "eta"));
  } else {
    job.eta =
        make_eta(job.alg.rs, std::vector<Rat>(job.alg.r, default_eta_ones ? Rat(1) : Rat(0)));
  }

  // chi: "name=value,..." or positional "v1,v2"; JSON object or array
  auto parse_chi_string = [&](const std::string& s) {
    if (s.find('=') != std::string::npos) {
      for (const auto& part : split(s, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw AlgebraError("chi: expected name=value pairs");
        job.chi_named[part.substr(0, eq)] = rat_from_string(part.substr(eq + 1));
      }
    } else {
      for (const auto& part : split(s, ',')) job.chi_positional.push_back(rat_from_string(part));
    }
  };
  if (!opt.chi.empty()) {
    parse_chi_string(opt.chi);
  } else if (cfg.contains("chi")) {
    const auto& c = cfg["chi"];
    if (c.is_object()) {
      for (const auto& [key, val] : c.items())
        job.chi_named[key] = rat_from_string(val.get<std::string>());
    } else if (c.is_array()) {
      for (const auto& val : c) job.chi_positional.push_back(rat_from_string(val.get<std::string>()));
    } else {
      throw AlgebraError("chi: expected an object or an array of rational strings");
    }
  }

  if (!opt.lambda.empty())
    job.lambda = simple_values(opt.lambda, job.alg.r, "lambda");
  else if (cfg.contains("lambda"))
    job.lambda = simple_values(cfg["lambda"], job.alg.r, "lambda");

  if (!opt.coeffs.empty()) {
    for (const auto& part : split(opt.coeffs, ',')) job.coeffs.push_back(rat_from_string(part));
    job.has_coeffs = true;
  } else if (cfg.contains("coeffs")) {
    for (const auto& val : cfg["coeffs"]) job.coeffs.push_back(rat_from_string(val.get<std::string>()));
    job.has_coeffs = true;
  }

  auto pick_int = [&](int flag, const char* key, int fallback) {
    if (flag >= 0) return flag;
    if (cfg.contains(key)) return cfg[key].get<int>();
    return fallback;
  };
  job.max_degree = pick_int(opt.max_degree, "max_degree", 6);
  job.slack = pick_int(opt.slack, "slack", 0);
  job.depth = pick_int(opt.depth, "depth", 2);
  job.samples = pick_int(opt.samples, "samples", 100);
  job.decimal =
      opt.decimal >= 0 ? opt.decimal : (cfg.contains("decimal") ? cfg["decimal"].get<int>() : -1);
  if (opt.seed >= 0)
    job.seed = static_cast<std::uint64_t>(opt.seed);
  else if (cfg.contains("seed"))
    job.seed = cfg["seed"].get<std::uint64_t>();

  job.module = !opt.module.empty() ? opt.module : cfg.value("module", std::string("verma"));
  job.suite = !opt.suite.empty() ? opt.suite : cfg.value("suite", std::string());
  job.out = !opt.out.empty() ? opt.out : cfg.value("out", std::string());
  job.format = !opt.format.empty() ? opt.format : cfg.value("format", std::string("json"));
  if (job.format != "json" && job.format != "csv")
    throw AlgebraError("format must be json or csv");
  if (job.max_degree < 0) throw AlgebraError("max_degree must be >= 0");
  return job;
}

std::map<std::string, Rat> resolve_chi(const Job& job, const std::vector<std::string>& names) {
  std::map<std::string, Rat> out = job.chi_named;
  if (!job.chi_positional.empty()) {
    if (job.chi_positional.size() > names.size())
      throw AlgebraError("chi: more positional values than center generators (" +
                         std::to_string(names.size()) + ")");
    for (std::size_t i = 0; i < job.chi_positional.size(); ++i) out[names[i]] = job.chi_positional[i];
  }
  return out;
}

void emit(const Job& job, const json& doc, const std::string& csv) {
  std::string text = job.format == "json" ? doc.dump(2) + "\n" : csv;
  if (job.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(job.out, std::ios::binary);
    if (!f) throw AlgebraError("cannot write output file '" + job.out + "'");
    f << text;
  }
}

json eta_to_json(const Job& job) {
  json out = json::object();
  for (int i = 0; i < job.alg.r; ++i)
    out["a" + std::to_string(i + 1)] = rat_to_string(job.eta.simple_values[i]);
  return out;
}

int cmd_dim(const Job& job) {
  const LeviPipeline probe = make_levi(job.alg, job.eta);
  const auto chi_map = resolve_chi(job, probe.center.names);
  const LeviPipeline levi = make_levi(job.alg, job.eta, chi_map);

  std::map<int, int> dims;
  for (int d = 0; d <= job.max_degree; ++d) dims[d] = mchi_dimension(levi, d, job.slack);

  std::optional<int> stabilized;
  if (job.max_degree >= 2) {
    const int a = dims[job.max_degree - 2], b = dims[job.max_degree - 1], c = dims[job.max_degree];
    if (a == b && b == c) stabilized = c;
  }
  const bool nondeg = job.eta.nondegenerate(job.alg.r);
  const int weyl_order = weyl_group(job.alg.rs).order();
  const int weyl_eta_order = levi.weyl_eta.order();
  const int predicted = weyl_eta_order;
  const bool matches = stabilized && *stabilized == predicted;

  json doc;
  doc["schema"] = 1;
  doc["command"] = "dim";
  doc["algebra"] = job.alg.name;
  doc["eta"] = eta_to_json(job);
  json chi_json = json::object();
  for (int i = 0; i < levi.center.size(); ++i)
    chi_json[levi.center.names[i]] = rat_to_string(levi.center.values[i]);
  doc["chi"] = chi_json;
  doc["max_degree"] = job.max_degree;
  doc["dimensions_by_degree"] = serialize::dims_to_json(dims);
  doc["stabilized_dimension"] = stabilized ? json(*stabilized) : json(nullptr);
  doc["weyl_order"] = weyl_order;
  doc["weyl_eta_order"] = weyl_eta_order;
  doc["predicted_dimension"] = predicted;
  json flags;
  flags["eta_nondegenerate"] = nondeg;
  flags["levi_pipeline"] = !nondeg;
  flags["outside_nondegenerate_theorem"] = !nondeg;
  flags["stabilized"] = stabilized.has_value();
  flags["matches_prediction"] = matches;
  json experimental = json::array();
  for (int i = 0; i < levi.center.size(); ++i)
    if (levi.center.experimental[i]) experimental.push_back(levi.center.names[i]);
  flags["experimental_generators"] = experimental;
  doc["hypothesis_flags"] = flags;

  emit(job, doc, serialize::dims_to_csv(dims));
  return matches ? kExitOk : kExitPrediction;
}

int cmd_roots(const Job& job) {
  const RootSystem& rs = job.alg.rs;
  json doc;
  doc["schema"] = 1;
  doc["command"] = "roots";
  doc["algebra"] = job.alg.name;
  json cart = json::array();
  for (int i = 0; i < rs.rank; ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank; ++j) row.push_back(rs.cartan(i, j));
    cart.push_back(std::move(row));
  }
  doc["cartan"] = cart;
  doc["rank"] = rs.rank;
  json roots = json::array();
  std::string csv = "index,label,height,coords\n";
  for (int b = 0; b < rs.num_positive(); ++b) {
    json r;
    r["index"] = b;
    r["label"] = rs.root_label(b);
    r["height"] = rs.height(b);
    json c = json::array();
    std::string cstr;
    for (int k = 0; k < rs.rank; ++k) {
      c.push_back(rs.positive_roots[b][k]);
      cstr += (k ? " " : "") + std::to_string(rs.positive_roots[b][k]);
    }
    r["coords"] = c;
    roots.push_back(std::move(r));
    csv += std::to_string(b) + "," + rs.root_label(b) + "," + std::to_string(rs.height(b)) + "," +
           cstr + "\n";
  }
  doc["positive_roots"] = roots;
  doc["weyl_order"] = weyl_group(rs).order();
  const RhoWeight rw = rho(rs);
  json rho_json = json::array();
  for (int j = 0; j < rs.rank; ++j) rho_json.push_back(rat_to_string(rw.values[j]));
  doc["rho"] = rho_json;
  emit(job, doc, csv);
  return kExitOk;
}

int cmd_gram(const Job& job) {
  GramMatrix gm;
  json doc;
  doc["schema"] = 1;
  doc["command"] = "gram";
  doc["module"] = job.module;
  doc["algebra"] = job.alg.name;
  doc["depth"] = job.depth;

  if (job.module == "verma") {
    VecQ lambda = VecQ::Zero(job.alg.r);
    for (std::size_t i = 0; i < job.lambda.size(); ++i)
      lambda[static_cast<Eigen::Index>(i)] = job.lambda[i];
    gm = verma_gram(job.alg, lambda, job.depth);
    json lj = json::object();
    for (int i = 0; i < job.alg.r; ++i) lj["a" + std::to_string(i + 1)] = rat_to_string(lambda[i]);
    doc["lambda"] = lj;
  } else if (job.module == "whittaker" || job.module == "induced") {
    if (job.module == "whittaker" && !job.eta.nondegenerate(job.alg.r))
      throw AlgebraError(
          "whittaker gram requires nondegenerate eta; use module=induced for degenerate eta");
    const LeviPipeline probe = make_levi(job.alg, job.eta);
    const auto chi_map = resolve_chi(job, probe.center.names);
    const LeviPipeline levi = make_levi(job.alg, job.eta, chi_map);
    const int d_max = std::max(job.max_degree, 2 * job.depth);
    auto space = build_levi_form_space(levi, d_max);
    VecQ coeffs = VecQ::Zero(space->coinv_dim());
    if (job.has_coeffs) {
      if (static_cast<int>(job.coeffs.size()) != space->coinv_dim())
        throw AlgebraError("coeffs: expected " + std::to_string(space->coinv_dim()) +
                           " values (the coinvariant dimension)");
      for (int i = 0; i < space->coinv_dim(); ++i) coeffs[i] = job.coeffs[i];
    } else {
      coeffs[0] = 1;  // normalized functional
    }
    const InducedFunctional phi = ext_functional(functional_from_coinvariants(space, coeffs));
    gm = induced_gram(phi, job.depth);
    json cj = json::array();
    for (int i = 0; i < coeffs.size(); ++i) cj.push_back(rat_to_string(coeffs[i]));
    doc["coeffs"] = cj;
    doc["eta"] = eta_to_json(job);
    json chi_json = json::object();
    for (int i = 0; i < levi.center.size(); ++i)
      chi_json[levi.center.names[i]] = rat_to_string(levi.center.values[i]);
    doc["chi"] = chi_json;
  } else {
    throw AlgebraError("module must be one of verma, whittaker, induced");
  }

  bool symmetric = true;
  for (Eigen::Index i = 0; i < gm.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < gm.entries.cols(); ++j)
      if (gm.entries(i, j) != gm.entries(j, i)) symmetric = false;
  if (!symmetric) throw AlgebraError("internal: Gram matrix failed the symmetry assertion");
  doc["symmetric"] = true;
  doc.update(serialize::gram_to_json(gm, job.decimal));
  emit(job, doc, serialize::gram_to_csv(gm));
  return kExitOk;
}

int cmd_verify(const Job& job_in) {
  Job job = job_in;
  if (job.suite.empty()) throw AlgebraError("verify: missing suite name");
  json doc;
  doc["schema"] = 1;
  doc["command"] = "verify";
  doc["suite"] = job.suite;
  if (job.suite == "sl2-oracle" && job.alg.name != "A1") {
    job.alg = chevalley_basis(build_root_system(cartan_matrix_for("A1")));
    job.eta = make_eta(job.alg.rs, {Rat(1)});
    doc["note"] = "sl2-oracle always runs on A1";
  }
  doc["algebra"] = job.alg.name;
  doc["eta"] = eta_to_json(job);
  doc["seed"] = job.seed;
  doc["samples"] = job.samples;

  checks::SuiteConfig cfg;
  cfg.seed = job.seed;
  cfg.samples = job.samples;
  cfg.max_degree = job.max_degree;
  const LeviPipeline probe = make_levi(job.alg, job.eta);
  cfg.chi_values = resolve_chi(job, probe.center.names);

  const auto results = checks::run_suite(job.suite, job.alg, job.eta, cfg);
  doc["results"] = serialize::checks_to_json(results);
  const bool ok = checks::all_pass(results);
  doc["all_pass"] = ok;

  std::string csv = "property,pass\n";
  for (const auto& r : results) csv += r.name + "," + (r.pass ? "true" : "false") + "\n";
  emit(job, doc, csv);
  return ok ? kExitOk : kExitVerify;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file");
  cmd->add_option("--algebra", opt.algebra,
                  "algebra type (A1, A2, A3, B2, C2, A1xA1, A2xA1, A1xA1xA1, sl2, sl3, sl4, sp4)");
  cmd->add_option("--eta", opt.eta, "eta values on the simple roots, e.g. 1,1");
  cmd->add_option("--chi", opt.chi, "central character: name=value pairs or positional values");
  cmd->add_option("--max-degree", opt.max_degree, "degree cap");
  cmd->add_option("--out", opt.out, "output file (default stdout)");
  cmd->add_option("--format", opt.format, "json or csv");
  cmd->add_option("--seed", opt.seed, "random seed for sampled properties");
  cmd->add_option("--decimal", opt.decimal, "add decimal annotations with this many digits");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact contravariant forms on Whittaker and Verma modules"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* dim = app.add_subcommand("dim", "dimension of the space of contravariant forms");
  add_common(dim, opt);
  dim->add_option("--slack", opt.slack, "extra degree allowance when generating the projected ideal");

  CLI::App* gram = app.add_subcommand("gram", "Gram matrix of a contravariant form");
  add_common(gram, opt);
  gram->add_option("--module", opt.module, "verma, whittaker, or induced");
  gram->add_option("--depth", opt.depth, "basis depth");
  gram->add_option("--lambda", opt.lambda, "highest weight for verma, e.g. 3 or 1,1");
  gram->add_option("--coeffs", opt.coeffs, "functional coefficients on the coinvariant basis");

  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  add_common(verify, opt);
  verify->add_option("suite", opt.suite,
                     "pbw, tau, center, projections, forms, sl2-oracle, induction");
  verify->add_option("--samples", opt.samples, "sample count for randomized properties");

  CLI::App* roots = app.add_subcommand("roots", "dump the root system and Weyl data");
  add_common(roots, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    const bool default_eta_ones = !roots->parsed();
    const Job job = resolve(opt, default_eta_ones);
    if (dim->parsed()) return cmd_dim(job);
    if (gram->parsed()) return cmd_gram(job);
    if (verify->parsed()) return cmd_verify(job);
    if (roots->parsed()) return cmd_roots(job);
    return kExitConfig;
  } catch (const DegreeOverflow& e) {
    std::cerr << "degree overflow: " << e.what() << "\n";
    return kExitDegree;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
