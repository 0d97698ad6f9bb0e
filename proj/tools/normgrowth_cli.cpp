#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <random>

#include "normgrowth/acceptance.hpp"
#include "normgrowth/distribution.hpp"
#include "normgrowth/error.hpp"
#include "normgrowth/growth.hpp"
#include "normgrowth/report.hpp"
#include "normgrowth/spectral.hpp"
#include "normgrowth/subset_expr.hpp"

namespace fs = std::filesystem;
using namespace normgrowth;

namespace {

constexpr const char* kOutDirEnv = "NORMGROWTH_OUT_DIR";

struct RunConfig {
  std::string group = "A:5";
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::size_t order_cap = GroupLimits{}.order_cap;
  std::size_t dense_cap = SpectralOptions{}.dense_cap;
  std::size_t sweep_cap = SweepOptions{}.exhaustive_cap;
  std::string out;
  std::string format = "json";
  std::string profile = "quick";
};

struct ChartableArgs {
  bool compute = false;
  bool verify = false;
  std::string export_path;
  std::string import_path;
};

struct GrowthArgs {
  std::string check = "2step";
  std::string subset;
  std::string subset_b;
  std::string words = "xx,yy";
  int trials = 100;
};

struct DistArgs {
  std::string check = "bnp";
  int trials = 100;
};

GroupData load_group(const RunConfig& cfg) {
  GroupLimits limits;
  limits.order_cap = cfg.order_cap;
  return analyze(cfg.group, limits);
}

ReportDocument new_document(const std::string& command, const RunConfig& cfg, const GroupData* D) {
  ReportDocument doc;
  doc.header.command = command;
  doc.header.seed = cfg.seed;
  doc.header.timestamp = current_timestamp();
  if (D) {
    doc.header.group_label = D->label();
    doc.header.n = D->n();
    doc.header.class_count = D->CT.count();
  }
  return doc;
}

CheckResult record(const GroupData& D, std::string check, std::string inputs, double lhs, double rhs, bool ok,
                   std::string note = {}) {
  CheckResult r;
  r.check = std::move(check);
  r.group = D.label();
  r.n = D.n();
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.status = ok ? Status::Pass : Status::Fail;
  r.note = std::move(note);
  return r;
}

NormalSubset normal_from_expr(const std::string& text, const GroupData& D) {
  return NormalSubset::from_subset(D.CT, evaluate(parse_subset_expr(text), D));
}

std::vector<NormalSubset> single_classes(const GroupData& D, bool with_identity) {
  std::vector<NormalSubset> out;
  for (std::size_t c = with_identity ? 0 : 1; c < D.CT.count(); ++c)
    out.push_back(NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(c)}));
  return out;
}

std::string class_list(const NormalSubset& A) {
  std::string s;
  for (auto c : A.classes()) s += (s.empty() ? "" : ",") + std::to_string(c);
  return "classes:" + s;
}

void emit(const ReportDocument& doc, const RunConfig& cfg) {
  std::string body = cfg.format == "csv" ? to_csv(doc) : to_json(doc).dump(2) + "\n";
  fs::path target;
  if (!cfg.out.empty()) {
    target = cfg.out;
  } else if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
    std::string stem = doc.header.command + (doc.header.group_label.empty() ? "" : "-" + doc.header.group_label);
    for (char& ch : stem)
      if (ch == '/' || ch == ':' || ch == '(' || ch == ')' || ch == ',') ch = '_';
    target = fs::path(dir) / (stem + (cfg.format == "csv" ? ".csv" : ".json"));
  }
  if (target.empty()) {
    std::cout << body;
    return;
  }
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream out(target, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + target.string());
  out << body;
  auto s = doc.summary();
  std::cout << fmt::format("{}: {} pass, {} fail, {} skipped, {} info -> {}\n", s.status, s.pass_count, s.fail_count,
                           s.skipped_count, s.info_count, target.string());
}

int cmd_group(const RunConfig& cfg) {
  auto D = load_group(cfg);
  auto doc = new_document("group", cfg, &D);
  auto census = real_census(D.G, D.CT);
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < D.CT.count(); ++c)
    classes.push_back({{"index", c},
                       {"size", D.CT.sizes[c]},
                       {"order", D.CT.element_orders[c]},
                       {"real", static_cast<bool>(D.CT.is_real[c])}});
  doc.data = {{"order", D.n()},
              {"degree", D.G.degree()},
              {"class_count", D.CT.count()},
              {"classes", classes},
              {"real_classes", census.real_classes},
              {"real_elements", census.real_elements},
              {"nonreal_classes", census.nonreal_classes}};
  if (census.characteristic) {
    doc.data["characteristic"] = *census.characteristic;
    doc.data["semisimple_elements"] = census.semisimple_elements;
    doc.data["nonreal_semisimple_classes"] = census.nonreal_semisimple_classes;
  }
  emit(doc, cfg);
  return 0;
}

int cmd_chartable(const RunConfig& cfg, const ChartableArgs& args) {
  if (!args.import_path.empty()) {
    auto tab = load_table(args.import_path, cfg.tolerance > 1e-6 ? cfg.tolerance : 1e-6);
    ReportDocument doc;
    doc.header.command = "chartable";
    doc.header.seed = cfg.seed;
    doc.header.timestamp = current_timestamp();
    doc.header.group_label = tab.group_label;
    doc.header.n = tab.n;
    doc.header.class_count = tab.classes();
    double res = verify_orthogonality(tab);
    CheckResult r;
    r.check = "orthogonality";
    r.group = tab.group_label;
    r.n = tab.n;
    r.inputs = "import=" + args.import_path;
    r.lhs = res;
    r.rhs = 1e-6;
    r.margin = r.rhs - r.lhs;
    r.status = res <= 1e-6 ? Status::Pass : Status::Fail;
    doc.records.push_back(r);
    doc.data = nlohmann::json::parse(table_to_json(tab));
    emit(doc, cfg);
    return doc.passed() ? 0 : 1;
  }
  auto D = load_group(cfg);
  auto doc = new_document("chartable", cfg, &D);
  if (!args.export_path.empty()) save_table(D.tab, args.export_path);
  if (args.verify || !args.compute) {
    double res = verify_orthogonality(D.tab);
    const double tol = std::max(cfg.tolerance, 1e-8);
    doc.records.push_back(record(D, "orthogonality", "computed", res, tol, res <= tol));
    doc.records.push_back(
        record(D, "degree_integrality", "computed", D.tab.degree_deviation, 1e-6, D.tab.degree_deviation <= 1e-6));
  }
  doc.data = nlohmann::json::parse(table_to_json(D.tab));
  emit(doc, cfg);
  return doc.passed() ? 0 : 1;
}

int cmd_lambda(const RunConfig& cfg, const std::string& subset) {
  auto D = load_group(cfg);
  auto doc = new_document("lambda", cfg, &D);
  auto expr = parse_subset_expr(subset);
  auto cay = make_cayley(D.G, D.CT, evaluate(expr, D));
  SpectralOptions opts;
  opts.dense_cap = cfg.dense_cap;
  opts.tolerance = cfg.tolerance;
  opts.seed = cfg.seed;
  auto rep = spectral_report(cay, D.tab, opts);
  nlohmann::json eig = nlohmann::json::array();
  for (auto z : rep.eigenvalues) eig.push_back({z.real(), z.imag()});
  doc.data = {{"subset", to_string(expr)},
              {"valency", cay.valency()},
              {"normal", cay.normal()},
              {"lambda_direct", rep.lambda_direct},
              {"dense", rep.dense},
              {"iterations", rep.iterations},
              {"eigenvalues", eig}};
  if (cay.normal()) {
    doc.data["lambda_char"] = rep.lambda_char;
    double dev = std::abs(rep.lambda_char - rep.lambda_direct);
    doc.records.push_back(record(D, "lambda_routes_agree", to_string(expr), dev, 1e-6, dev <= 1e-6));
    double bound = r_extremes(D.tab, *cay.normal_set).max;
    doc.records.push_back(record(D, "lambda_ratio_bound", to_string(expr), rep.lambda_direct, bound + 1e-6,
                                 rep.lambda_direct <= bound + 1e-6));
  }
  if (!std::isnan(rep.commutator_residual)) doc.data["commutator_residual"] = rep.commutator_residual;
  emit(doc, cfg);
  return doc.passed() ? 0 : 1;
}

std::vector<Word> parse_words(const std::string& text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(parse_word(text.substr(start, end - start)));
    start = end + 1;
  }
  if (out.size() == 1) out.push_back(out.front());
  if (out.size() != 2) throw Error(ErrorCode::ParseError, "--words takes one or two words separated by a comma");
  return out;
}

int cmd_growth(const RunConfig& cfg, const GrowthArgs& args) {
  auto D = load_group(cfg);
  auto doc = new_document("growth:" + args.check, cfg, &D);
  SweepOptions sweep;
  sweep.exhaustive_cap = cfg.sweep_cap;
  sweep.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  auto sets_a = args.subset.empty() ? single_classes(D, true) : std::vector{normal_from_expr(args.subset, D)};
  auto sets_b = args.subset_b.empty() ? sets_a : std::vector{normal_from_expr(args.subset_b, D)};
  GrowthReport rep;

  if (args.check == "2step") {
    for (const auto& A : sets_a)
      for (int t = 0; t < args.trials; ++t) {
        auto r = check_2step(D, A, random_subset(D.n(), rng, std::uniform_real_distribution<double>(0, 1)(rng)));
        r.inputs = class_list(A) + " trial=" + std::to_string(t) + " " + r.inputs;
        rep.records.push_back(std::move(r));
      }
  } else if (args.check == "gowers2") {
    for (const auto& A : sets_a)
      for (const auto& B : sets_b)
        for (std::size_t k = 1; k < D.CT.count(); ++k) rep.records.push_back(check_gowers2(D, A, B, k));
  } else if (args.check == "asymp") {
    for (const auto& A : sets_a)
      for (const auto& B : sets_b) rep.append(check_asymp(D, A, B));
  } else if (args.check == "dichotomy") {
    if (!args.subset.empty()) {
      rep.records.push_back(dichotomy_check(D, sets_a.front()));
    } else {
      for (const auto& cls : enumerate_normal_subsets(D.CT.count(), sweep))
        rep.records.push_back(dichotomy_check(D, NormalSubset::from_classes(D.CT, cls)));
    }
  } else if (args.check == "survey") {
    rep = square_growth_survey(D, sweep);
  } else if (args.check == "pyber") {
    rep = pyber_report(D, sweep);
  } else if (args.check == "words") {
    auto w = parse_words(args.words);
    rep = word_growth_report(D, w[0], w[1]);
  } else if (args.check == "gluck") {
    auto g = gluck_report(D);
    rep.records.push_back(record(D, "gluck", fmt::format("q={}", g.q), g.r_max, 19.0 / 20.0, g.nineteen_twentieths_ok,
                                 fmt::format("sqrt(q)*R_max={:.9g}", g.scaled)));
    doc.data = {{"r_max", g.r_max}, {"q", g.q}, {"sqrt_q_r_max", g.scaled}};
  } else {
    throw Error(ErrorCode::ParseError, "unknown growth check: " + args.check);
  }
  doc.records = std::move(rep.records);
  emit(doc, cfg);
  return doc.passed() ? 0 : 1;
}

int cmd_dist(const RunConfig& cfg, const DistArgs& args) {
  auto D = load_group(cfg);
  auto doc = new_document("dist:" + args.check, cfg, &D);
  const int m = min_nontrivial_degree(D.tab);
  doc.data = {{"m", m}};
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](int t) { return t % 2 ? random_sparse_distribution(D.n(), rng) : random_distribution(D.n(), rng); };
  for (int t = 0; t < args.trials; ++t) {
    CheckResult r;
    if (args.check == "bnp") {
      auto X = draw(t);
      auto Y = draw(t);
      r = check_bnp_star(D.G, m, X, Y);
    } else if (args.check == "bnp2step") {
      std::uniform_real_distribution<double> density(0, 1);
      auto A = random_subset(D.n(), rng, density(rng));
      auto B = random_subset(D.n(), rng, density(rng));
      r = check_bnp_two_step(D.G, m, A, B);
    } else if (args.check == "wlambda") {
      auto w = weighted_cayley_lambda(D.G, draw(t), m, cfg.dense_cap);
      r = record(D, "weighted_lambda", "", w.lambda, w.bound, w.bound_holds);
    } else {
      throw Error(ErrorCode::ParseError, "unknown dist check: " + args.check);
    }
    r.inputs = fmt::format("seed={} trial={}{}", cfg.seed, t, r.inputs.empty() ? "" : " " + r.inputs);
    doc.records.push_back(std::move(r));
  }
  emit(doc, cfg);
  return doc.passed() ? 0 : 1;
}

int cmd_acceptance(const RunConfig& cfg, bool seed_given) {
  AcceptanceOptions opts;
  opts.profile = parse_profile(cfg.profile);
  if (seed_given) opts.seed = cfg.seed;
  opts.progress = &std::cout;
  auto run = run_acceptance(opts);
  std::size_t passed = 0;
  for (const auto& c : run.criteria) passed += c.pass ? 1 : 0;
  std::cout << fmt::format("acceptance ({}): {}/{} criteria passed\n", to_string(opts.profile), passed, run.criteria.size());
  if (!cfg.out.empty() || std::getenv(kOutDirEnv)) {
    run.report.data = nlohmann::json::array();
    for (const auto& c : run.criteria)
      run.report.data.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"checks", c.checks}, {"detail", c.detail}});
    RunConfig quiet = cfg;
    emit(run.report, quiet);
  }
  return run.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character-theoretic growth and expansion checks on small finite groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("-g,--group", cfg.group, "S:n, A:n, PSL2:q, PSL3:q, or a generator file")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--order-cap", cfg.order_cap, "largest group order to enumerate")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--dense-cap", cfg.dense_cap, "largest order for dense eigensolves")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--sweep-cap", cfg.sweep_cap, "largest exhaustive subset sweep")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("-o,--out", cfg.out, std::string("output file (default stdout, or $") + kOutDirEnv + ")");
  app.add_option("--format", cfg.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--profile", cfg.profile, "acceptance profile: quick or full")
      ->capture_default_str()
      ->check(CLI::IsMember({"quick", "full"}));

  auto* group = app.add_subcommand("group", "order, classes and real census");

  ChartableArgs ct;
  auto* chartable = app.add_subcommand("chartable", "compute, verify, export or import a character table");
  chartable->add_flag("--compute", ct.compute, "compute and print the table");
  chartable->add_flag("--verify", ct.verify, "check orthogonality and degree integrality");
  chartable->add_option("--export", ct.export_path, "write the table as JSON");
  chartable->add_option("--import", ct.import_path, "load and verify a JSON table");

  std::string subset = "all-nonid";
  auto* lambda = app.add_subcommand("lambda", "spectral expansion of a Cayley graph by both routes");
  lambda->add_option("-s,--subset", subset, "class:i, classes:i,j, all-nonid, complement-real, word:<w>")->capture_default_str();

  GrowthArgs ga;
  auto* growth = app.add_subcommand("growth", "growth inequalities for normal subsets");
  growth->add_option("-c,--check", ga.check, "check name")
      ->capture_default_str()
      ->check(CLI::IsMember({"2step", "gowers2", "asymp", "dichotomy", "survey", "pyber", "words", "gluck"}));
  growth->add_option("-s,--subset", ga.subset, "normal subset A (default: every class)");
  growth->add_option("--subset-b", ga.subset_b, "normal subset B (default: same as A)");
  growth->add_option("--words", ga.words, "two words over x,y,X,Y separated by a comma")->capture_default_str();
  growth->add_option("--trials", ga.trials, "random B per A for 2step")->capture_default_str()->check(CLI::NonNegativeNumber);

  DistArgs da;
  auto* dist = app.add_subcommand("dist", "convolution inequalities for distributions");
  dist->add_option("-c,--check", da.check, "check name")->capture_default_str()->check(CLI::IsMember({"bnp", "bnp2step", "wlambda"}));
  dist->add_option("--trials", da.trials, "number of random trials")->capture_default_str()->check(CLI::NonNegativeNumber);

  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*group) return cmd_group(cfg);
    if (*chartable) return cmd_chartable(cfg, ct);
    if (*lambda) return cmd_lambda(cfg, subset);
    if (*growth) return cmd_growth(cfg, ga);
    if (*dist) return cmd_dist(cfg, da);
    if (*acceptance) return cmd_acceptance(cfg, seed_opt->count() > 0);
  } catch (const Error& e) {
    std::cerr << fmt::format("error: {}\n  group={} seed={}\n", e.what(), cfg.group, cfg.seed);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
