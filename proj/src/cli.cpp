#include "linhash/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "linhash/adversarial.hpp"
#include "linhash/claims.hpp"
#include "linhash/effective_modulus.hpp"
#include "linhash/maxload.hpp"
#include "linhash/numtheory.hpp"
#include "linhash/serialize.hpp"
#include "linhash/twobin.hpp"

namespace linhash {

namespace {

struct OutputOptions {
  std::string format = "json";
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
  }

  /// Returns the stream to write to; opens the file lazily.
  std::ostream& stream(std::ostream& fallback, std::ofstream& file) const {
    if (out_path.empty()) return fallback;
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    return file;
  }
};

struct FamilyFlags {
  std::string family;
  int64_t modulus = 0;
  int64_t bins = 2;
  int64_t real_denominator = 0;

  void attach(CLI::App* cmd, bool required = true) {
    auto* fam = cmd->add_option("--family", family,
                                "Hash family (blocked-int, strided-int, "
                                "smart-blocked, random-modulus, real-blocked, "
                                "twobin-mult, twobin-affine)");
    auto* mod = cmd->add_option("-m,--modulus,--p", modulus,
                                "Modulus / universe size");
    if (required) {
      fam->required();
      mod->required();
    }
    cmd->add_option("--bins", bins, "Number of bins (default 2)");
    cmd->add_option("--real-denominator", real_denominator,
                    "Grid denominator N for real-blocked (0 = default)");
  }

  FamilyConfig config() const {
    FamilyConfig cfg;
    cfg.kind = family_kind_from_name(family);
    cfg.modulus = modulus;
    cfg.bins = bins;
    cfg.real_denominator = real_denominator;
    if (cfg.kind == FamilyKind::RealBlocked && cfg.real_denominator == 0)
      cfg.real_denominator = default_real_denominator(cfg.bins, cfg.modulus);
    cfg.validate();
    return cfg;
  }
};

struct SetFlags {
  std::string recipe = "interval";
  int64_t n = 0;
  int64_t universe = 0;  // defaults to the family modulus
  int64_t start = 0;
  int64_t stride = 1;
  int64_t step = 1;
  int64_t ratio = 2;
  int64_t multiplier = 1;
  std::optional<uint64_t> set_seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--set", recipe,
                    "Item-set recipe (interval, strided, arithmetic, "
                    "geometric, random, inverse-image)");
    cmd->add_option("--n", n, "Item-set size")->required();
    cmd->add_option("--universe", universe,
                    "Universe for set generation (default: the modulus)");
    cmd->add_option("--start", start, "Recipe start");
    cmd->add_option("--stride", stride, "Recipe stride");
    cmd->add_option("--step", step, "Recipe step");
    cmd->add_option("--ratio", ratio, "Recipe ratio");
    cmd->add_option("--multiplier", multiplier, "Recipe multiplier");
    cmd->add_option_function<uint64_t>(
        "--set-seed", [this](uint64_t v) { set_seed = v; },
        "Seed for the random recipe");
  }

  ItemSet build(int64_t default_universe) const {
    SetRecipe r;
    r.kind = recipe_kind_from_name(recipe);
    r.start = start;
    r.stride = stride;
    r.step = step;
    r.ratio = ratio;
    r.multiplier = multiplier;
    r.seed = set_seed;
    const int64_t u = universe > 0 ? universe : default_universe;
    return generate(r, n, u);
  }
};

void emit(const Json& j, std::ostream& os) { os << j.dump(2) << "\n"; }

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"linhash: exact-arithmetic laboratory for linear hashing"};
  app.require_subcommand(1);
  auto exit_code = std::make_shared<int>(0);

  // --- farey ---------------------------------------------------------------
  auto* farey = app.add_subcommand("farey", "List the Farey sequence F_m");
  auto farey_m = std::make_shared<int64_t>(0);
  farey->add_option("-m,--m,--order", *farey_m, "Farey order")->required();
  auto farey_out = std::make_shared<OutputOptions>();
  farey_out->attach(farey);
  farey->callback([farey_m, farey_out, &out]() {
    std::ofstream file;
    std::ostream& os = farey_out->stream(out, file);
    if (farey_out->format == "csv") {
      os << "num,den\n";
      farey_walk(*farey_m, [&](int64_t c, int64_t k) { os << c << "," << k << "\n"; });
    } else {
      Json arr = Json::array();
      farey_walk(*farey_m, [&](int64_t c, int64_t k) {
        arr.push_back(std::to_string(c) + "/" + std::to_string(k));
      });
      emit(Json{{"schema", 1}, {"m", *farey_m}, {"fractions", arr}}, os);
    }
  });

  // --- maxload -------------------------------------------------------------
  auto* ml = app.add_subcommand(
      "maxload", "Histogram and maxload of one parameter on one set");
  auto ml_family = std::make_shared<FamilyFlags>();
  ml_family->attach(ml);
  auto ml_set = std::make_shared<SetFlags>();
  ml_set->attach(ml);
  auto ml_a = std::make_shared<int64_t>(0);
  auto ml_b = std::make_shared<int64_t>(0);
  auto ml_k = std::make_shared<int64_t>(0);
  auto ml_seed = std::make_shared<uint64_t>(0);
  auto* ml_a_opt = ml->add_option("--a", *ml_a, "Multiplier");
  ml->add_option("--b", *ml_b, "Shift (twobin-affine)");
  ml->add_option("--inner-modulus", *ml_k, "Inner modulus k (random-modulus)");
  auto* ml_seed_opt =
      ml->add_option("--seed", *ml_seed, "Sample the parameter from this seed");
  ml_seed_opt->excludes(ml_a_opt);
  auto ml_out = std::make_shared<OutputOptions>();
  ml_out->attach(ml);
  ml->callback([=, &out]() {
    const FamilyConfig cfg = ml_family->config();
    const ItemSet X = ml_set->build(cfg.modulus);
    HashParam param{*ml_a, *ml_b, *ml_k};
    if (ml_seed_opt->count() > 0) {
      CounterRng rng(*ml_seed, 0);
      param = sample_param(cfg, rng);
    } else if (ml_a_opt->count() == 0) {
      throw CLI::ValidationError("maxload", "need --a or --seed");
    }
    std::ofstream file;
    std::ostream& os = ml_out->stream(out, file);
    const auto hist = histogram(X, cfg, param);
    if (ml_out->format == "csv") {
      os << "bin,count\n";
      for (std::size_t i = 0; i < hist.size(); ++i)
        os << i << "," << hist[i] << "\n";
    } else {
      emit(Json{{"schema", 1},
                {"config", to_json(cfg)},
                {"param", Json{{"a", param.a}, {"b", param.b},
                               {"inner_modulus", param.inner_modulus}}},
                {"histogram", hist},
                {"maxload", maxload(X, cfg, param)},
                {"collisions", collision_count(X, cfg, param)}},
           os);
    }
  });

  // --- sweep ---------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Expected maxload over the parameter space (exact or MC)");
  auto sw_family = std::make_shared<FamilyFlags>();
  sw_family->attach(sweep);
  auto sw_set = std::make_shared<SetFlags>();
  sw_set->attach(sweep);
  auto sw_budget = std::make_shared<uint64_t>(kDefaultSweepBudget);
  auto sw_trials = std::make_shared<int64_t>(0);
  auto sw_seed = std::make_shared<uint64_t>(0);
  sweep->add_option("--budget", *sw_budget, "Bin-evaluation budget for exact sweeps");
  auto* sw_trials_opt =
      sweep->add_option("--trials", *sw_trials, "Monte Carlo trials");
  auto* sw_seed_opt = sweep->add_option("--seed", *sw_seed, "Monte Carlo seed");
  sw_trials_opt->needs(sw_seed_opt);
  sw_seed_opt->needs(sw_trials_opt);
  auto sw_out = std::make_shared<OutputOptions>();
  sw_out->attach(sweep);
  sweep->callback([=, &out]() {
    const FamilyConfig cfg = sw_family->config();
    const ItemSet X = sw_set->build(cfg.modulus);
    const MaxloadDistribution dist =
        *sw_trials > 0 ? mc_expected_maxload(X, cfg, *sw_trials, *sw_seed)
                       : exact_expected_maxload(X, cfg, *sw_budget);
    std::ofstream file;
    std::ostream& os = sw_out->stream(out, file);
    if (sw_out->format == "csv") {
      write_csv(dist, os);
    } else {
      Json j{{"schema", 1}, {"config", to_json(cfg)}};
      j.update(to_json(dist));
      emit(j, os);
    }
  });

  // --- pairprob ------------------------------------------------------------
  auto* pp = app.add_subcommand("pairprob",
                                "Exact collision probability of a pair");
  auto pp_family = std::make_shared<FamilyFlags>();
  pp_family->attach(pp);
  auto pp_x = std::make_shared<int64_t>(0);
  auto pp_y = std::make_shared<int64_t>(0);
  auto pp_budget = std::make_shared<uint64_t>(kDefaultSweepBudget);
  pp->add_option("--x", *pp_x, "First element")->required();
  pp->add_option("--y", *pp_y, "Second element")->required();
  pp->add_option("--budget", *pp_budget, "Bin-evaluation budget");
  auto pp_out = std::make_shared<OutputOptions>();
  pp_out->attach(pp);
  pp->callback([=, &out]() {
    const FamilyConfig cfg = pp_family->config();
    const Rational prob = pair_collision_prob(*pp_x, *pp_y, cfg, *pp_budget);
    std::ofstream file;
    std::ostream& os = pp_out->stream(out, file);
    if (pp_out->format == "csv") {
      os << "x,y,prob_num,prob_den\n"
         << *pp_x << "," << *pp_y << "," << prob.num().get_str() << ","
         << prob.den().get_str() << "\n";
    } else {
      os << prob.str() << "\n";
    }
  });

  // --- fdist ---------------------------------------------------------------
  auto* fd = app.add_subcommand(
      "fdist", "Exact distribution of the effective integer modulus F");
  auto fd_n = std::make_shared<int64_t>(0);
  auto fd_u = std::make_shared<int64_t>(0);
  auto fd_budget = std::make_shared<int64_t>(kDefaultFDistBudget);
  fd->add_option("--n", *fd_n, "Bin count n")->required();
  fd->add_option("--universe", *fd_u, "Universe size u")->required();
  fd->add_option("--budget", *fd_budget, "Maximum nu");
  auto fd_out = std::make_shared<OutputOptions>();
  fd_out->attach(fd);
  fd->callback([=, &out]() {
    const FDistribution dist = f_distribution(*fd_n, *fd_u, *fd_budget);
    std::ofstream file;
    std::ostream& os = fd_out->stream(out, file);
    if (fd_out->format == "csv") {
      write_csv(dist, os);
    } else {
      Json j{{"schema", 1}};
      j.update(to_json(dist));
      emit(j, os);
    }
  });

  // --- overlap -------------------------------------------------------------
  auto* ov = app.add_subcommand(
      "overlap", "Two-bin overlap / excess-overlap report over a set");
  auto ov_p = std::make_shared<int64_t>(0);
  auto ov_x = std::make_shared<int64_t>(0);
  ov->add_option("-m,--modulus,--p", *ov_p, "Prime modulus")->required();
  auto* ov_x_opt = ov->add_option("--x", *ov_x, "Single element");
  auto ov_n = std::make_shared<int64_t>(0);
  auto* ov_n_opt = ov->add_option("--n", *ov_n, "Report over X = [1, n]");
  ov_x_opt->excludes(ov_n_opt);
  auto ov_out = std::make_shared<OutputOptions>();
  ov_out->attach(ov);
  ov->callback([=, &out]() {
    std::ofstream file;
    std::ostream& os = ov_out->stream(out, file);
    if (ov_x_opt->count() > 0) {
      const Rational e = excess_overlap(*ov_x, *ov_p);
      if (ov_out->format == "csv") {
        os << "x,overlap,excess_num,excess_den\n"
           << *ov_x << "," << overlap(*ov_x, *ov_p) << ","
           << e.num().get_str() << "," << e.den().get_str() << "\n";
      } else {
        emit(Json{{"schema", 1},
                  {"x", *ov_x},
                  {"overlap", overlap(*ov_x, *ov_p)},
                  {"excess_num", json_big(e.num())},
                  {"excess_den", json_big(e.den())}},
             os);
      }
      return;
    }
    if (ov_n_opt->count() == 0)
      throw CLI::ValidationError("overlap", "need --x or --n");
    SetRecipe interval;
    interval.start = 1;
    const ItemSet X = generate(interval, *ov_n, *ov_p);
    const OverlapReport report = sum_excess(X, *ov_p);
    if (ov_out->format == "csv") {
      write_csv(report, os);
    } else {
      Json j{{"schema", 1}};
      j.update(to_json(report));
      emit(j, os);
    }
  });

  // --- search --------------------------------------------------------------
  auto* se = app.add_subcommand(
      "search", "Local-search probe for high expected-maxload sets");
  auto se_family = std::make_shared<FamilyFlags>();
  se_family->attach(se);
  auto se_set = std::make_shared<SetFlags>();
  se_set->attach(se);
  auto se_budget = std::make_shared<int64_t>(100);
  auto se_seed = std::make_shared<uint64_t>(0);
  auto se_trials = std::make_shared<int64_t>(1024);
  se->add_option("--budget", *se_budget, "Move evaluations");
  se->add_option("--seed", *se_seed, "Search seed")->required();
  se->add_option("--trials", *se_trials, "MC trials per score when not exact");
  auto se_out = std::make_shared<OutputOptions>();
  se_out->attach(se);
  se->callback([=, &out]() {
    const FamilyConfig cfg = se_family->config();
    const ItemSet init = se_set->build(cfg.modulus);
    std::ofstream file;
    std::ostream& os = se_out->stream(out, file);
    SearchOptions opts;
    opts.mc_trials = *se_trials;
    // JSONL trace: one line per evaluated move, then a final summary line.
    const SearchResult result = local_search_worst(
        init, cfg, *se_budget, *se_seed, opts,
        [&os](int64_t step, const Rational& score, bool accepted) {
          os << Json{{"step", step},
                     {"score", score.to_double()},
                     {"accepted", accepted}}
                    .dump()
             << "\n";
        });
    os << Json{{"schema", 1},
               {"best", result.best.elements()},
               {"score_num", json_big(result.score.num())},
               {"score_den", json_big(result.score.den())},
               {"score_mode",
                result.score_mode == SweepMode::Exact ? "exact" : "monte-carlo"},
               {"mc_trials", result.mc_trials},
               {"accepted", result.accepted}}
              .dump()
       << "\n";
  });

  // --- verify --------------------------------------------------------------
  auto* ve = app.add_subcommand("verify", "Re-check registered claims");
  auto ve_ids = std::make_shared<std::vector<std::string>>();
  auto ve_all = std::make_shared<bool>(false);
  auto ve_seed = std::make_shared<uint64_t>(0);
  auto ve_registry = std::make_shared<std::string>();
  auto ve_list = std::make_shared<bool>(false);
  ve->add_option("ids", *ve_ids, "Claim ids");
  ve->add_flag("--all", *ve_all, "Verify every registered claim");
  ve->add_flag("--list", *ve_list, "List claim ids and exit");
  ve->add_option("--seed", *ve_seed, "Seed for randomized experiments")
      ->required();
  ve->add_option("--registry", *ve_registry,
                 "Registry config path (default: embedded config/claims.json)");
  auto ve_out = std::make_shared<OutputOptions>();
  ve_out->attach(ve);
  ve->callback([=, &out]() {
    const ClaimRegistry registry = ve_registry->empty()
                                       ? ClaimRegistry()
                                       : ClaimRegistry::from_file(*ve_registry);
    std::ofstream file;
    std::ostream& os = ve_out->stream(out, file);
    if (*ve_list) {
      for (const auto& id : registry.ids()) os << id << "\n";
      return;
    }
    std::vector<std::string> ids = *ve_ids;
    if (*ve_all) ids = registry.ids();
    if (ids.empty())
      throw CLI::ValidationError("verify", "need claim ids or --all");
    Json reports = Json::array();
    bool any_fail = false;
    for (const auto& id : ids) {
      const ClaimReport report = registry.verify(id, *ve_seed);
      any_fail = any_fail || report.status == ClaimReport::Status::Fail;
      reports.push_back(report.to_json());
    }
    emit(Json{{"schema", 1}, {"seed", *ve_seed}, {"reports", reports}}, os);
    if (any_fail) *exit_code = 1;
  });

  // Parse and dispatch.
  std::vector<const char*> argv;
  argv.push_back("linhash");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return *exit_code;
}

}  // namespace linhash
