#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linhash/adversarial.hpp"
#include "linhash/claims.hpp"
#include "linhash/effective_modulus.hpp"
#include "linhash/families.hpp"
#include "linhash/maxload.hpp"
#include "linhash/numtheory.hpp"
#include "linhash/serialize.hpp"
#include "linhash/twobin.hpp"

namespace py = pybind11;
using namespace linhash;

namespace {

// Rationals cross the boundary as (num, den) decimal-string pairs; the
// python wrapper turns them into fractions.Fraction.
py::tuple rat(const Rational& r) {
  return py::make_tuple(r.num().get_str(), r.den().get_str());
}

Rational rat_from(int64_t num, int64_t den) { return Rational(num, den); }

FamilyConfig make_config(const std::string& kind, int64_t modulus, int64_t bins,
                         int64_t real_denominator) {
  FamilyConfig cfg;
  cfg.kind = family_kind_from_name(kind);
  cfg.modulus = modulus;
  cfg.bins = bins;
  cfg.real_denominator = real_denominator;
  if (cfg.kind == FamilyKind::RealBlocked && cfg.real_denominator == 0)
    cfg.real_denominator = default_real_denominator(bins, modulus);
  cfg.validate();
  return cfg;
}

SetRecipe make_recipe(const std::string& kind, int64_t start, int64_t stride,
                      int64_t step, int64_t ratio, int64_t multiplier,
                      std::optional<uint64_t> seed) {
  SetRecipe r;
  r.kind = recipe_kind_from_name(kind);
  r.start = start;
  r.stride = stride;
  r.step = step;
  r.ratio = ratio;
  r.multiplier = multiplier;
  r.seed = seed;
  return r;
}

py::dict dist_to_dict(const MaxloadDistribution& d) {
  py::dict counts;
  for (const auto& [v, c] : d.counts) counts[py::int_(v)] = c;
  py::dict out;
  out["mode"] = d.mode == SweepMode::Exact ? "exact" : "monte-carlo";
  out["total"] = d.total;
  out["counts"] = counts;
  out["mean"] = rat(d.mean);
  out["stderr"] = d.stderr_value;
  return out;
}

}  // namespace

PYBIND11_MODULE(_linhash, m) {
  m.doc() = "Exact-arithmetic laboratory for linear hashing (C++ core)";

  py::register_exception<NotAUnit>(m, "NotAUnitError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError",
                                         PyExc_RuntimeError);

  py::class_<FamilyConfig>(m, "FamilyConfig")
      .def(py::init(&make_config), py::arg("kind"), py::arg("modulus"),
           py::arg("bins"), py::arg("real_denominator") = 0)
      .def_readonly("modulus", &FamilyConfig::modulus)
      .def_readonly("bins", &FamilyConfig::bins)
      .def_readonly("real_denominator", &FamilyConfig::real_denominator)
      .def_property_readonly(
          "kind", [](const FamilyConfig& c) { return family_kind_name(c.kind); })
      .def("__repr__", [](const FamilyConfig& c) {
        std::ostringstream os;
        os << "FamilyConfig(" << to_json(c).dump() << ")";
        return os.str();
      });

  py::class_<HashParam>(m, "HashParam")
      .def(py::init([](int64_t a, int64_t b, int64_t inner_modulus) {
             return HashParam{a, b, inner_modulus};
           }),
           py::arg("a"), py::arg("b") = 0, py::arg("inner_modulus") = 0)
      .def_readonly("a", &HashParam::a)
      .def_readonly("b", &HashParam::b)
      .def_readonly("inner_modulus", &HashParam::inner_modulus);

  py::class_<ItemSet>(m, "ItemSet")
      .def(py::init(
          [](std::vector<int64_t> xs) { return ItemSet::from_values(std::move(xs)); }))
      .def_property_readonly("elements", &ItemSet::elements)
      .def("__len__", &ItemSet::size);

  // numtheory
  m.def("mod_reduce", [](int64_t x, int64_t p) { return mod_reduce(x, p); });
  m.def("mod_reduce_rational", [](int64_t num, int64_t den, int64_t p) {
    return rat(mod_reduce(rat_from(num, den), p));
  });
  m.def("signed_distance",
        [](int64_t x, int64_t p) { return signed_distance(x, p); });
  m.def("signed_distance_rational", [](int64_t num, int64_t den, int64_t p) {
    return rat(signed_distance(rat_from(num, den), p));
  });
  m.def("mod_inverse", &mod_inverse);
  m.def("totient", &totient);
  m.def("divisor_count", &divisor_count);
  m.def("divisors", &divisors);
  m.def("is_prime", [](uint64_t n) { return is_prime(n); });
  m.def("prime_in_range", [](int64_t lo, int64_t hi) {
    return prime_in_range(lo, hi);  // None when the range has no prime
  });
  m.def("units", &units);
  m.def("farey_sequence", [](int64_t order) {
    std::vector<py::tuple> out;
    for (const auto& f : farey_sequence(order)) out.push_back(rat(f));
    return out;
  });
  m.def("farey_successor", [](int64_t num, int64_t den, int64_t order) {
    return rat(farey_successor(rat_from(num, den), order));
  });

  // families
  m.def("bin_of", [](int64_t x, const HashParam& p, const FamilyConfig& cfg) {
    return bin_of(x, p, cfg);
  });
  m.def("bin_real_rational", [](int64_t x, int64_t num, int64_t den, int64_t beta) {
    return bin_real_rational(x, rat_from(num, den), beta);
  });
  m.def("param_space_size",
        [](const FamilyConfig& cfg) { return param_space(cfg).size(); });
  m.def("sample_param", [](const FamilyConfig& cfg, uint64_t seed, uint64_t counter) {
    CounterRng rng(seed, counter);
    return sample_param(cfg, rng);
  });
  m.def("generate_set", [](const std::string& kind, int64_t n, int64_t universe,
                           int64_t start, int64_t stride, int64_t step,
                           int64_t ratio, int64_t multiplier,
                           std::optional<uint64_t> seed) {
          return generate(make_recipe(kind, start, stride, step, ratio,
                                      multiplier, seed), n, universe);
        },
        py::arg("kind"), py::arg("n"), py::arg("universe"), py::arg("start") = 0,
        py::arg("stride") = 1, py::arg("step") = 1, py::arg("ratio") = 2,
        py::arg("multiplier") = 1, py::arg("seed") = std::nullopt);

  // maxload
  m.def("histogram", &histogram);
  m.def("maxload", &maxload);
  m.def("collision_count", &collision_count);
  m.def("exact_expected_maxload",
        [](const ItemSet& X, const FamilyConfig& cfg, uint64_t budget) {
          return dist_to_dict(exact_expected_maxload(X, cfg, budget));
        },
        py::arg("items"), py::arg("config"), py::arg("budget") = kDefaultSweepBudget);
  m.def("mc_expected_maxload",
        [](const ItemSet& X, const FamilyConfig& cfg, int64_t trials, uint64_t seed) {
          return dist_to_dict(mc_expected_maxload(X, cfg, trials, seed));
        });
  m.def("pair_collision_prob",
        [](int64_t x, int64_t y, const FamilyConfig& cfg) {
          return rat(pair_collision_prob(x, y, cfg));
        });
  m.def("expected_collisions", [](const ItemSet& X, const FamilyConfig& cfg) {
    return rat(expected_collisions(X, cfg).expected_collisions);
  });
  m.def("close_pairs", &close_pairs);

  // effective modulus
  m.def("effective_modulus_of", [](int64_t num, int64_t den, int64_t n, int64_t u) {
    return effective_modulus_of(rat_from(num, den), n, u);
  });
  m.def("claimed_intervals", [](int64_t k, int64_t n, int64_t u) {
    std::vector<py::tuple> out;
    for (const auto& iv : claimed_intervals(k, n, u).intervals())
      out.push_back(py::make_tuple(rat(iv.lo), rat(iv.hi)));
    return out;
  });
  m.def("f_distribution", [](int64_t n, int64_t u, int64_t budget_nu) {
          py::dict out;
          for (const auto& [k, v] : f_distribution(n, u, budget_nu).measure_by_k)
            out[py::int_(k)] = rat(v);
          return out;
        },
        py::arg("n"), py::arg("u"), py::arg("budget_nu") = kDefaultFDistBudget);
  m.def("crowding_index", [](int64_t num, int64_t den, int64_t n) {
    return crowding_index(rat_from(num, den), n);
  });
  m.def("residue_injectivity_check", &residue_injectivity_check);

  // two bins
  m.def("overlap", &overlap);
  m.def("excess_overlap",
        [](int64_t x, int64_t p) { return rat(excess_overlap(x, p)); });
  m.def("pigeon_rep", [](int64_t x, int64_t p, int64_t n) {
    const PigeonRep rep = pigeon_rep(x, p, n);
    return py::make_tuple(rep.sigma, rep.m, rep.k);
  });
  m.def("epicbound_rhs", [](int64_t mm, int64_t k, int64_t p) {
    return rat(epicbound_rhs(mm, k, p));
  });
  m.def("sum_excess", [](const ItemSet& X, int64_t p) {
    return rat(sum_excess(X, p).total_excess);
  });
  m.def("jensen_maxload_bound", [](int64_t num, int64_t den, int64_t n) {
    return rat(jensen_maxload_bound(rat_from(num, den), n));
  });

  // adversarial search
  m.def("local_search_worst",
        [](const ItemSet& initial, const FamilyConfig& cfg, int64_t budget,
           uint64_t seed) {
          const SearchResult result = local_search_worst(initial, cfg, budget, seed);
          py::dict out;
          out["best"] = result.best.elements();
          out["score"] = rat(result.score);
          out["score_mode"] =
              result.score_mode == SweepMode::Exact ? "exact" : "monte-carlo";
          out["mc_trials"] = result.mc_trials;
          out["accepted"] = result.accepted;
          return out;
        });

  // claim registry
  m.def("claim_ids", []() { return ClaimRegistry().ids(); });
  m.def("verify_claim", [](const std::string& id, uint64_t seed) {
    const ClaimReport report = ClaimRegistry().verify(id, seed);
    return py::module_::import("json").attr("loads")(report.to_json().dump());
  });
}
