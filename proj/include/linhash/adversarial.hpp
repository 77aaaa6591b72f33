#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "linhash/families.hpp"
#include "linhash/maxload.hpp"
#include "linhash/rational.hpp"

namespace linhash {

enum class RecipeKind {
  Interval,      // {start, ..., start + n - 1}
  Strided,       // {0, s, 2s, ...}; s = n gives the n*[n] worst case for strided hashing
  Arithmetic,    // {start, start + step, ...}
  Geometric,     // {start, start*ratio, ...}
  Random,        // n distinct uniform draws from [0, universe)
  InverseImage,  // {m_u(c^{-1} * i) : i in [n]} for a unit c
};

const char* recipe_kind_name(RecipeKind kind);
RecipeKind recipe_kind_from_name(const std::string& name);

struct SetRecipe {
  RecipeKind kind = RecipeKind::Interval;
  int64_t start = 0;       // Interval, Arithmetic, Geometric
  int64_t stride = 1;      // Strided
  int64_t step = 1;        // Arithmetic
  int64_t ratio = 2;       // Geometric
  int64_t multiplier = 1;  // InverseImage
  std::optional<uint64_t> seed;  // Random
};

/// Deterministic for a fixed recipe (and seed); always sorted and
/// duplicate-free, exactly n elements inside [0, universe).
ItemSet generate(const SetRecipe& recipe, int64_t n, int64_t universe);

struct SearchOptions {
  uint64_t exact_eval_budget = 20'000'000;  // bin evals per exact score
  int64_t mc_trials = 1024;                 // trials per MC score
  uint64_t sweep_budget = kDefaultSweepBudget;
};

struct SearchResult {
  ItemSet best;
  Rational score;       // expected maxload of the returned set
  SweepMode score_mode; // how scores were computed
  int64_t mc_trials;    // 0 when exact
  int64_t steps = 0;
  int64_t accepted = 0;
};

using SearchTrace =
    std::function<void(int64_t step, const Rational& score, bool accepted)>;

/// Hill climbing over single-element swaps; accepts any move that does not
/// decrease the score, so the result never scores below the initial set.
/// Deterministic for a fixed seed.
SearchResult local_search_worst(const ItemSet& initial, const FamilyConfig& cfg,
                                int64_t budget, uint64_t seed,
                                const SearchOptions& options = {},
                                const SearchTrace& trace = nullptr);

}  // namespace linhash
