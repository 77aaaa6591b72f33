#include "linhash/adversarial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "linhash/numtheory.hpp"
#include "linhash/rng.hpp"

namespace linhash {

namespace {

constexpr const char* kRecipeNames[] = {
    "interval", "strided", "arithmetic", "geometric", "random", "inverse-image",
};

}  // namespace

const char* recipe_kind_name(RecipeKind kind) {
  return kRecipeNames[static_cast<int>(kind)];
}

RecipeKind recipe_kind_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kRecipeNames[i]) return static_cast<RecipeKind>(i);
  }
  throw std::domain_error("unknown set recipe: " + name);
}

ItemSet generate(const SetRecipe& recipe, int64_t n, int64_t universe) {
  if (n < 1) throw std::domain_error("generate: set size must be >= 1");
  if (universe < 1) throw std::domain_error("generate: universe must be >= 1");
  if (n > universe) throw std::domain_error("generate: set larger than universe");
  std::vector<int64_t> xs;
  xs.reserve(static_cast<std::size_t>(n));
  switch (recipe.kind) {
    case RecipeKind::Interval:
      if (recipe.start < 0 || recipe.start + n - 1 >= universe)
        throw std::domain_error("generate: interval does not fit the universe");
      for (int64_t i = 0; i < n; ++i) xs.push_back(recipe.start + i);
      break;
    case RecipeKind::Strided:
      if (recipe.stride < 1 || (n - 1) * recipe.stride >= universe)
        throw std::domain_error("generate: stride does not fit the universe");
      for (int64_t i = 0; i < n; ++i) xs.push_back(i * recipe.stride);
      break;
    case RecipeKind::Arithmetic:
      if (recipe.start < 0 || recipe.step < 1 ||
          recipe.start + (n - 1) * recipe.step >= universe)
        throw std::domain_error("generate: progression does not fit the universe");
      for (int64_t i = 0; i < n; ++i) xs.push_back(recipe.start + i * recipe.step);
      break;
    case RecipeKind::Geometric: {
      if (recipe.start < 1 || recipe.ratio < 2)
        throw std::domain_error("generate: geometric needs start >= 1, ratio >= 2");
      int64_t v = recipe.start;
      for (int64_t i = 0; i < n; ++i) {
        if (v >= universe)
          throw std::domain_error("generate: geometric does not fit the universe");
        xs.push_back(v);
        if (i + 1 < n && v > universe / recipe.ratio)
          throw std::domain_error("generate: geometric does not fit the universe");
        v *= recipe.ratio;
      }
      break;
    }
    case RecipeKind::Random: {
      if (!recipe.seed)
        throw std::domain_error("generate: random recipe needs a seed");
      CounterRng rng(*recipe.seed, 0);
      std::set<int64_t> chosen;
      while (static_cast<int64_t>(chosen.size()) < n)
        chosen.insert(rng.below(universe));
      xs.assign(chosen.begin(), chosen.end());
      break;
    }
    case RecipeKind::InverseImage: {
      const int64_t c = mod_reduce(recipe.multiplier, universe);
      if (universe < 2 || gcd64(c, universe) != 1)
        throw std::domain_error("generate: inverse-image multiplier must be a unit");
      const int64_t inv = mod_inverse(c, universe);
      for (int64_t i = 0; i < n; ++i) xs.push_back(inv * (i % universe) % universe);
      break;
    }
  }
  return ItemSet::from_values(std::move(xs));
}

namespace {

struct Scorer {
  const FamilyConfig& cfg;
  SweepMode mode;
  int64_t trials;
  uint64_t seed;
  uint64_t sweep_budget;

  Rational operator()(const ItemSet& X) const {
    if (mode == SweepMode::Exact)
      return exact_expected_maxload(X, cfg, sweep_budget).mean;
    // Common random numbers: every candidate is scored on the same trial
    // stream, so comparisons are deterministic.
    return mc_expected_maxload(X, cfg, trials, seed).mean;
  }
};

}  // namespace

SearchResult local_search_worst(const ItemSet& initial, const FamilyConfig& cfg,
                                int64_t budget, uint64_t seed,
                                const SearchOptions& options,
                                const SearchTrace& trace) {
  cfg.validate();
  if (initial.empty()) throw std::domain_error("local_search_worst: empty initial set");
  if (initial.max_element() >= cfg.modulus)
    throw std::domain_error("local_search_worst: element outside the universe");
  if (initial.size() >= cfg.modulus)
    throw std::domain_error("local_search_worst: no non-members to swap in");
  if (budget < 0) throw std::domain_error("local_search_worst: negative budget");

  const ParamSpace space(cfg);
  const auto exact_cost = static_cast<unsigned __int128>(space.size()) *
                          static_cast<uint64_t>(initial.size());
  const bool exact = exact_cost <= options.exact_eval_budget;
  const Scorer score{cfg, exact ? SweepMode::Exact : SweepMode::MonteCarlo,
                     options.mc_trials, splitmix64(seed ^ 0x5ca1ab1eULL),
                     options.sweep_budget};

  SearchResult result;
  result.best = initial;
  result.score = score(initial);
  result.score_mode = exact ? SweepMode::Exact : SweepMode::MonteCarlo;
  result.mc_trials = exact ? 0 : options.mc_trials;

  const int64_t universe = cfg.modulus;
  const int64_t n = initial.size();
  for (int64_t step = 0; step < budget; ++step) {
    CounterRng rng(seed, static_cast<uint64_t>(step));
    std::vector<int64_t> xs = result.best.elements();
    const int64_t drop = rng.below(n);
    int64_t replacement;
    do {
      replacement = rng.below(universe);
    } while (std::binary_search(xs.begin(), xs.end(), replacement));
    xs.erase(xs.begin() + drop);
    xs.push_back(replacement);
    const ItemSet candidate = ItemSet::from_values(std::move(xs));
    const Rational cand_score = score(candidate);
    const bool accept = cand_score >= result.score;  // plateaus accepted
    if (trace) trace(step, cand_score, accept);
    if (accept) {
      result.best = candidate;
      result.score = cand_score;
      ++result.accepted;
    }
    ++result.steps;
  }
  return result;
}

}  // namespace linhash
