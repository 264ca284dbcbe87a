// ksz: construct sign matrices and chained ±1 forms, certify their norms,
// and play the switching game. See README.md for the command reference.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ksz/berlekamp.hpp"
#include "ksz/bounds.hpp"
#include "ksz/certificate.hpp"
#include "ksz/chained_form.hpp"
#include "ksz/construct.hpp"
#include "ksz/enumeration.hpp"
#include "ksz/errors.hpp"
#include "ksz/hadamard.hpp"
#include "ksz/io.hpp"
#include "ksz/norms.hpp"
#include "ksz/order_registry.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kMaterializeCap = 1LL << 24;

struct CommonOptions {
  std::string format = "text";
  std::string mode = "strict412";
  std::int64_t limit = 0;  // 0: command-specific default
  std::string out;
};

ksz::RegistryMode parse_mode(const std::string& mode) {
  if (mode == "strict412") return ksz::RegistryMode::Strict412;
  if (mode == "extended") return ksz::RegistryMode::Extended;
  throw std::invalid_argument("unknown registry mode '" + mode + "' (strict412|extended)");
}

std::vector<ksz::Exponent> parse_exponents(const std::vector<std::string>& text,
                                           std::size_t arity) {
  std::vector<ksz::Exponent> out;
  if (text.empty()) {
    out.assign(arity, ksz::Exponent::infinity());
    return out;
  }
  if (text.size() != arity)
    throw std::invalid_argument("need one exponent per dimension (got " +
                                std::to_string(text.size()) + " for " + std::to_string(arity) +
                                " dims)");
  for (const std::string& t : text) out.push_back(ksz::parse_exponent(t));
  return out;
}

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("--dims must not be empty");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("dimensions must be positive");
}

std::int64_t default_limit(const CommonOptions& opt, std::int64_t needed) {
  return opt.limit > 0 ? opt.limit : needed;
}

void write_output(const CommonOptions& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw std::runtime_error("cannot open for writing: " + opt.out);
  file << payload;
}

ksz::SignTensor materialize_guarded(const ksz::ChainedForm& form) {
  std::int64_t total = 1;
  for (int d : form.dims()) total *= d;
  if (total > kMaterializeCap)
    throw std::invalid_argument("refusing to materialize " + std::to_string(total) +
                                " entries (cap " + std::to_string(kMaterializeCap) + ")");
  return form.materialize();
}

json certificate_json(const ksz::NormCertificate& cert) {
  json j;
  j["kind"] = ksz::to_string(cert.kind);
  j["value"] = cert.value;
  j["method"] = ksz::to_string(cert.method);
  if (!cert.witness.empty()) {
    json w = json::array();
    for (const auto& v : cert.witness) w.push_back(ksz::sign_string(v));
    j["witness"] = w;
  }
  if (cert.witness_basis_row) j["witness_basis_row"] = *cert.witness_basis_row;
  if (!cert.formula.empty()) {
    j["formula"] = cert.formula;
    json inputs;
    for (const auto& [name, value] : cert.formula_inputs) inputs[name] = value;
    j["inputs"] = inputs;
  }
  return j;
}

json report_json(const ksz::BoundReport& report) {
  json j;
  j["pattern"] = report.pattern;
  j["dims"] = report.dims;
  json exps = json::array();
  for (const auto& p : report.exponents) exps.push_back(p.to_string());
  j["exponents"] = exps;
  j["permutation"] = report.permutation;
  j["orders"] = report.orders;
  j["delta_realized"] = report.delta_realized;
  j["delta_max"] = report.delta_max;
  j["reference_bound"] = report.reference_bound;
  j["ratio"] = report.ratio;
  j["ratio_limit"] = report.ratio_limit;
  j["relaxed_min_dim"] = report.relaxed_min_dim;
  return j;
}

// ---------------------------------------------------------------- commands

int run_gen_hadamard(std::int64_t order, const CommonOptions& opt) {
  ksz::OrderRegistry registry(parse_mode(opt.mode), order);
  const auto near = registry.nearest(order);
  if (near.order != order)
    throw ksz::RegistryExhausted("order " + std::to_string(order) + " is not achievable in " +
                                 opt.mode + " mode; next achievable order is " +
                                 std::to_string(near.order));
  const auto matrix = registry.realize_order(order);

  if (opt.format == "json") {
    json j;
    j["order"] = matrix->order();
    j["mode"] = opt.mode;
    j["recipe"] = ksz::recipe_to_string(matrix->recipe());
    j["verified"] = matrix->hadamard_certified();
    json rows = json::array();
    for (int i = 0; i < matrix->order(); ++i) {
      std::string row(static_cast<std::size_t>(matrix->order()), '+');
      for (int c = 0; c < matrix->order(); ++c)
        row[static_cast<std::size_t>(c)] = matrix->sign(i, c) > 0 ? '+' : '-';
      rows.push_back(row);
    }
    j["rows"] = rows;
    write_output(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream payload;
    ksz::write_pm1(payload, *matrix);
    write_output(opt, payload.str());
    if (!opt.out.empty())
      std::cout << "order: " << order << "\nrecipe: " << ksz::recipe_to_string(matrix->recipe())
                << "\nverified: true\nfile: " << opt.out << "\n";
  }
  return 0;
}

int run_registry(const CommonOptions& opt) {
  ksz::OrderRegistry registry(parse_mode(opt.mode), default_limit(opt, 100));
  std::ostringstream payload;
  if (opt.format == "json") {
    json j;
    j["mode"] = opt.mode;
    j["limit"] = registry.limit();
    json entries = json::array();
    for (const auto& e : registry.entries())
      entries.push_back({{"order", e.order}, {"recipe", ksz::recipe_to_string(e.recipe)}});
    j["orders"] = entries;
    payload << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    payload << "order,recipe\n";
    for (const auto& e : registry.entries())
      payload << e.order << ',' << ksz::recipe_to_string(e.recipe) << '\n';
  } else {
    payload << "mode: " << opt.mode << "\nlimit: " << registry.limit()
            << "\ncount: " << registry.entries().size() << "\n";
    for (const auto& e : registry.entries())
      payload << e.order << "  " << ksz::recipe_to_string(e.recipe) << '\n';
  }
  write_output(opt, payload.str());
  return 0;
}

int run_nearest(std::int64_t n, const CommonOptions& opt) {
  ksz::OrderRegistry registry(parse_mode(opt.mode), default_limit(opt, 4 * n));
  const auto near = registry.nearest(n);
  std::ostringstream payload;
  if (opt.format == "json") {
    json j;
    j["n"] = n;
    j["order"] = near.order;
    j["delta_realized"] = near.delta;
    j["recipe"] = ksz::recipe_to_string(near.recipe);
    payload << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    payload << "n,order,delta,recipe\n"
            << n << ',' << near.order << ',' << ksz::format_double(near.delta) << ','
            << ksz::recipe_to_string(near.recipe) << '\n';
  } else {
    payload << "n: " << n << "\norder: " << near.order
            << "\ndelta-realized: " << ksz::format_double(near.delta)
            << "\nrecipe: " << ksz::recipe_to_string(near.recipe) << '\n';
  }
  write_output(opt, payload.str());
  return 0;
}

int run_ratios(const CommonOptions& opt) {
  ksz::OrderRegistry registry(parse_mode(opt.mode), default_limit(opt, 1000000));
  const auto ratios = registry.consecutive_ratios();
  std::ostringstream payload;
  if (opt.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < ratios.size(); ++i)
      rows.push_back({{"index", i + 1},
                      {"order", ratios[i].order},
                      {"next_order", ratios[i].next_order},
                      {"ratio", ratios[i].ratio}});
    payload << rows.dump(2) << "\n";
  } else if (opt.format == "csv") {
    payload << "index,order,ratio\n";
    for (std::size_t i = 0; i < ratios.size(); ++i)
      payload << (i + 1) << ',' << ratios[i].order << ',' << ksz::format_double(ratios[i].ratio)
              << '\n';
  } else {
    for (std::size_t i = 0; i < ratios.size(); ++i)
      payload << (i + 1) << "  " << ratios[i].order << "  "
              << ksz::format_double(ratios[i].ratio) << '\n';
  }
  write_output(opt, payload.str());
  return 0;
}

int run_report(const std::vector<int>& dims, const std::vector<std::string>& exponents,
               const CommonOptions& opt, const std::string& tensor_out) {
  check_dims(dims);
  const int max_dim = *std::max_element(dims.begin(), dims.end());
  ksz::OrderRegistry registry(parse_mode(opt.mode),
                              default_limit(opt, 4 * static_cast<std::int64_t>(max_dim)));
  ksz::FormSpec spec(dims, parse_exponents(exponents, dims.size()));
  ksz::KszConstruction built = ksz::construct_ksz(spec, registry);

  if (!tensor_out.empty()) {
    ksz::SignTensor tensor = materialize_guarded(built.form);
    std::ofstream file(tensor_out);
    if (!file) throw std::runtime_error("cannot open for writing: " + tensor_out);
    ksz::write_pmt(file, tensor);
  }

  std::ostringstream payload;
  if (opt.format == "json") {
    json j;
    j["report"] = report_json(built.report);
    j["certificate"] = certificate_json(built.certificate);
    if (!tensor_out.empty()) j["tensor_file"] = tensor_out;
    payload << j.dump(2) << "\n";
  } else {
    payload << built.report.to_text();
    payload << "certificate-value: " << ksz::format_double(built.certificate.value) << '\n';
    payload << "certificate-formula: " << built.certificate.formula << '\n';
    if (!tensor_out.empty()) payload << "tensor-file: " << tensor_out << '\n';
  }
  write_output(opt, payload.str());
  return 0;
}

ksz::SignTensor load_norm_input(const std::string& form, const std::vector<int>& dims,
                                const std::string& in_path, const CommonOptions& opt) {
  if (form == "file") {
    if (in_path.empty()) throw std::invalid_argument("--form file requires --in <path>");
    return ksz::read_pmt_file(in_path);
  }
  check_dims(dims);
  if (form == "ones") return ksz::SignTensor(dims);
  if (form == "chained") {
    const int max_dim = *std::max_element(dims.begin(), dims.end());
    ksz::OrderRegistry registry(parse_mode(opt.mode),
                                default_limit(opt, 4 * static_cast<std::int64_t>(max_dim)));
    return materialize_guarded(ksz::ChainedForm(dims, registry));
  }
  throw std::invalid_argument("unknown --form '" + form + "' (chained|ones|file)");
}

int run_norm(const std::string& form, const std::vector<int>& dims, const std::string& in_path,
             const std::string& method, std::uint64_t budget, int restarts, std::uint64_t seed,
             const CommonOptions& opt) {
  const ksz::SignTensor tensor = load_norm_input(form, dims, in_path, opt);
  ksz::NormCertificate cert;
  if (method == "exact") {
    cert = ksz::linf_exact(tensor, budget);
  } else if (method == "heuristic") {
    cert = ksz::linf_heuristic(tensor, restarts, seed);
  } else if (method == "spectral") {
    if (tensor.arity() != 2)
      throw std::invalid_argument("--method spectral needs a bilinear form");
    ksz::RealMatrix a(tensor.dims()[0], tensor.dims()[1]);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j)
        a.at(i, j) = tensor.sign_at(std::vector<int>{i, j});
    cert = ksz::l2_spectral(a);
  } else {
    throw std::invalid_argument("unknown --method '" + method + "' (exact|heuristic|spectral)");
  }

  if (opt.format == "json")
    write_output(opt, certificate_json(cert).dump(2) + "\n");
  else
    write_output(opt, cert.to_text());
  return 0;
}

int run_bounds(const std::vector<int>& dims, const std::vector<std::string>& exponents,
               const CommonOptions& opt) {
  check_dims(dims);
  ksz::FormSpec spec(dims, parse_exponents(exponents, dims.size()));
  const int m = spec.arity();
  std::vector<int> sorted = dims;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::pair<std::string, double>> rows;
  rows.emplace_back("ksz-mixed-rhs", ksz::ksz_mixed_rhs(spec));
  if (m == 2)
    rows.emplace_back("bennett-rhs",
                      ksz::bennett_rhs(dims[0], dims[1], spec.exponents[0], spec.exponents[1]));
  rows.emplace_back("chain-bound-sorted", ksz::chain_norm_bound(std::span<const int>(sorted)));
  rows.emplace_back("classical-constant", ksz::classical_ksz_constant(m));
  rows.emplace_back("improved-constant-complex", ksz::improved_ksz_constant_complex(m));
  rows.emplace_back("improved-constant-real", ksz::improved_ksz_constant_real(m));
  rows.emplace_back("asymptotic-lower-constant", ksz::asymptotic_lower_constant(m));

  std::ostringstream payload;
  if (opt.format == "json") {
    json j;
    for (const auto& [name, value] : rows) j[name] = value;
    payload << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    payload << "name,value\n";
    for (const auto& [name, value] : rows)
      payload << name << ',' << ksz::format_double(value) << '\n';
  } else {
    for (const auto& [name, value] : rows)
      payload << name << ": " << ksz::format_double(value) << '\n';
  }
  write_output(opt, payload.str());
  return 0;
}

int run_constants(int m_max, const CommonOptions& opt) {
  const auto rows = ksz::constants_table(m_max);
  std::ostringstream payload;
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& row : rows)
      arr.push_back({{"m", row.m},
                     {"classical", row.classical},
                     {"improved_complex", row.improved_complex},
                     {"improved_real", row.improved_real},
                     {"lower_asymptotic", row.lower_asymptotic}});
    payload << arr.dump(2) << "\n";
  } else if (opt.format == "csv") {
    payload << "m,classical,improved_complex,improved_real,lower_asymptotic\n";
    for (const auto& row : rows)
      payload << row.m << ',' << ksz::format_double(row.classical) << ','
              << ksz::format_double(row.improved_complex) << ','
              << ksz::format_double(row.improved_real) << ','
              << ksz::format_double(row.lower_asymptotic) << '\n';
  } else {
    for (const auto& row : rows) {
      payload << "m: " << row.m << "\n  classical: " << ksz::format_double(row.classical)
              << "\n  improved-complex: " << ksz::format_double(row.improved_complex)
              << "\n  improved-real: " << ksz::format_double(row.improved_real)
              << "\n  lower-asymptotic: " << ksz::format_double(row.lower_asymptotic) << '\n';
    }
  }
  write_output(opt, payload.str());
  return 0;
}

json game_report_json(const ksz::HadamardGameReport& report) {
  json j;
  j["dims"] = report.dims;
  j["solver"] = report.result.exact ? "exact" : "heuristic";
  j["imbalance"] = report.result.imbalance;
  j["on_lights"] = report.result.on_lights;
  json switches = json::array();
  for (const auto& s : report.result.switches) switches.push_back(ksz::sign_string(s));
  j["switches"] = switches;
  j["imbalance_upper"] = report.imbalance_upper.value;
  j["on_lights_lower"] = report.on_lights_lower;
  j["reference"] = report.reference;
  j["classical_bound"] = report.classical_bound;
  if (report.asymptotic_lower) j["asymptotic_lower"] = *report.asymptotic_lower;
  return j;
}

int run_berlekamp(std::int64_t hadamard_n, int m, const std::string& in_path,
                  const std::string& method, std::uint64_t budget, int restarts,
                  std::uint64_t seed, const CommonOptions& opt) {
  if (hadamard_n > 0 && !in_path.empty())
    throw std::invalid_argument("--hadamard and --in are mutually exclusive");

  if (hadamard_n > 0) {
    if (m < 2) throw std::invalid_argument("--m must be >= 2");
    std::vector<int> dims(static_cast<std::size_t>(m), static_cast<int>(hadamard_n));
    ksz::OrderRegistry registry(parse_mode(opt.mode), default_limit(opt, 4 * hadamard_n));
    const std::uint64_t effective_budget = method == "heuristic" ? 0 : budget;
    ksz::HadamardGameReport report =
        ksz::hadamard_game_report(dims, registry, effective_budget, restarts, seed);
    if (method == "exact" && !report.result.exact)
      throw ksz::BudgetExceeded("exact imbalance for these dims exceeds --budget " +
                                std::to_string(budget) +
                                "; rerun with --method heuristic or a larger budget");
    if (opt.format == "json")
      write_output(opt, game_report_json(report).dump(2) + "\n");
    else
      write_output(opt, report.to_text());
    return 0;
  }

  if (in_path.empty())
    throw std::invalid_argument("berlekamp needs --hadamard <n> or --in <board.pmt>");
  ksz::GameConfig config(ksz::read_pmt_file(in_path));
  ksz::GameResult result;
  if (method == "heuristic") {
    result = ksz::imbalance_heuristic(config, restarts, seed);
  } else if (method == "exact") {
    result = ksz::imbalance_exact(config, budget);
  } else {
    try {
      result = ksz::imbalance_exact(config, budget);
    } catch (const ksz::BudgetExceeded&) {
      result = ksz::imbalance_heuristic(config, restarts, seed);
    }
  }

  std::ostringstream payload;
  if (opt.format == "json") {
    json j;
    j["dims"] = config.lights.dims();
    j["solver"] = result.exact ? "exact" : "heuristic";
    j["imbalance"] = result.imbalance;
    j["on_lights"] = result.on_lights;
    json switches = json::array();
    for (const auto& s : result.switches) switches.push_back(ksz::sign_string(s));
    j["switches"] = switches;
    payload << j.dump(2) << "\n";
  } else {
    payload << "solver: " << (result.exact ? "exact" : "heuristic") << '\n'
            << "imbalance: " << result.imbalance << '\n'
            << "on-lights: " << result.on_lights << '\n';
    for (std::size_t k = 0; k < result.switches.size(); ++k)
      payload << "switches[" << k << "]: " << ksz::sign_string(result.switches[k]) << '\n';
  }
  write_output(opt, payload.str());
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_registry = true) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opt.out, "Write output to a file instead of stdout");
  if (with_registry) {
    cmd->add_option("--mode", opt.mode, "Order registry mode")
        ->check(CLI::IsMember({"strict412", "extended"}));
    cmd->add_option("--limit", opt.limit, "Order registry limit");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard-built ±1 multilinear forms, norm certificates and the switching game"};
  app.require_subcommand(1);

  // gen-hadamard
  auto* gen = app.add_subcommand("gen-hadamard", "Construct and verify a Hadamard matrix");
  std::int64_t gen_order = 0;
  CommonOptions gen_opt;
  gen->add_option("--order", gen_order, "Matrix order")->required();
  add_common(gen, gen_opt);

  // registry
  auto* reg = app.add_subcommand("registry", "List achievable orders with recipes");
  CommonOptions reg_opt;
  add_common(reg, reg_opt);

  // nearest-order
  auto* near = app.add_subcommand("nearest-order", "Smallest achievable order >= n");
  std::int64_t near_n = 0;
  CommonOptions near_opt;
  near->add_option("--n", near_n, "Requested dimension")->required()->check(CLI::PositiveNumber);
  add_common(near, near_opt);

  // ratios
  auto* ratios = app.add_subcommand("ratios", "Consecutive order ratios (plot data)");
  CommonOptions ratios_opt;
  add_common(ratios, ratios_opt);

  // build-form
  auto* build = app.add_subcommand("build-form", "Construct a chained ±1 form and write it");
  std::vector<int> build_dims;
  std::vector<std::string> build_exps;
  std::string build_tensor_out;
  CommonOptions build_opt;
  build->add_option("--dims", build_dims, "Dimensions n_1,...,n_m")
      ->required()
      ->delimiter(',');
  build->add_option("--p", build_exps, "Exponents p_1,...,p_m (numbers or 'inf')")
      ->delimiter(',');
  build->add_option("--tensor-out", build_tensor_out, "Write the materialized tensor (.pmt)");
  add_common(build, build_opt);

  // report
  auto* report = app.add_subcommand("report", "Certify a construction against its envelope");
  std::vector<int> report_dims;
  std::vector<std::string> report_exps;
  CommonOptions report_opt;
  report->add_option("--dims", report_dims, "Dimensions n_1,...,n_m")
      ->required()
      ->delimiter(',');
  report->add_option("--p", report_exps, "Exponents p_1,...,p_m (numbers or 'inf')")
      ->delimiter(',');
  add_common(report, report_opt);

  // norm
  auto* norm = app.add_subcommand("norm", "Certify the norm of a ±1 form");
  std::string norm_form = "chained";
  std::vector<int> norm_dims;
  std::string norm_in;
  std::string norm_method = "exact";
  std::uint64_t norm_budget = ksz::kDefaultEnumerationBudget;
  int norm_restarts = 64;
  std::uint64_t norm_seed = 0;
  CommonOptions norm_opt;
  norm->add_option("--form", norm_form, "Input form: chained|ones|file");
  norm->add_option("--dims", norm_dims, "Dimensions for chained/ones")->delimiter(',');
  norm->add_option("--in", norm_in, "Input tensor file (.pmt) for --form file");
  norm->add_option("--method", norm_method, "exact|heuristic|spectral");
  norm->add_option("--budget", norm_budget, "Enumeration budget (assignments)");
  norm->add_option("--restarts", norm_restarts, "Heuristic restarts");
  norm->add_option("--seed", norm_seed, "Heuristic seed");
  add_common(norm, norm_opt);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bound factors");
  std::vector<int> bounds_dims;
  std::vector<std::string> bounds_exps;
  CommonOptions bounds_opt;
  bounds->add_option("--dims", bounds_dims, "Dimensions n_1,...,n_m")
      ->required()
      ->delimiter(',');
  bounds->add_option("--p", bounds_exps, "Exponents p_1,...,p_m (numbers or 'inf')")
      ->delimiter(',');
  add_common(bounds, bounds_opt, /*with_registry=*/false);

  // constants
  auto* constants = app.add_subcommand("constants", "Constant table per arity");
  int constants_m_max = 5;
  CommonOptions constants_opt;
  constants->add_option("--m-max", constants_m_max, "Largest arity")->check(CLI::PositiveNumber);
  add_common(constants, constants_opt, /*with_registry=*/false);

  // berlekamp
  auto* game = app.add_subcommand("berlekamp", "Switching game solver and reports");
  std::int64_t game_hadamard = 0;
  int game_m = 2;
  std::string game_in;
  std::string game_method = "auto";
  std::uint64_t game_budget = ksz::kDefaultEnumerationBudget;
  int game_restarts = 64;
  std::uint64_t game_seed = 0;
  CommonOptions game_opt;
  game->add_option("--hadamard", game_hadamard, "Build the chained board of this size");
  game->add_option("--m", game_m, "Board dimension for --hadamard");
  game->add_option("--in", game_in, "Solve a board from a .pmt file");
  game->add_option("--method", game_method, "auto|exact|heuristic");
  game->add_option("--budget", game_budget, "Enumeration budget (assignments)");
  game->add_option("--restarts", game_restarts, "Heuristic restarts");
  game->add_option("--seed", game_seed, "Heuristic seed");
  add_common(game, game_opt);

  try {
    app.parse(argc, argv);

    if (gen->parsed()) return run_gen_hadamard(gen_order, gen_opt);
    if (reg->parsed()) return run_registry(reg_opt);
    if (near->parsed()) return run_nearest(near_n, near_opt);
    if (ratios->parsed()) return run_ratios(ratios_opt);
    if (build->parsed()) return run_report(build_dims, build_exps, build_opt, build_tensor_out);
    if (report->parsed()) return run_report(report_dims, report_exps, report_opt, "");
    if (norm->parsed())
      return run_norm(norm_form, norm_dims, norm_in, norm_method, norm_budget, norm_restarts,
                      norm_seed, norm_opt);
    if (bounds->parsed()) return run_bounds(bounds_dims, bounds_exps, bounds_opt);
    if (constants->parsed()) return run_constants(constants_m_max, constants_opt);
    if (game->parsed())
      return run_berlekamp(game_hadamard, game_m, game_in, game_method, game_budget,
                           game_restarts, game_seed, game_opt);
    std::cerr << "error: usage: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const ksz::BudgetExceeded& e) {
    std::cerr << "error: budget: " << e.what() << "\n";
    return 3;
  } catch (const ksz::RegistryExhausted& e) {
    std::cerr << "error: registry: " << e.what() << "\n";
    return 4;
  } catch (const ksz::ConvergenceFailure& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 5;
  }
}
