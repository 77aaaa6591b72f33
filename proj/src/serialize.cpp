#include "linhash/serialize.hpp"

#include <ostream>

namespace linhash {

Json json_big(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const FamilyConfig& cfg) {
  return Json{{"kind", family_kind_name(cfg.kind)},
              {"modulus", cfg.modulus},
              {"bins", cfg.bins},
              {"real_denominator", cfg.real_denominator}};
}

FamilyConfig family_config_from_json(const Json& j) {
  FamilyConfig cfg;
  cfg.kind = family_kind_from_name(j.at("kind").get<std::string>());
  cfg.modulus = j.at("modulus").get<int64_t>();
  cfg.bins = j.at("bins").get<int64_t>();
  cfg.real_denominator = j.value("real_denominator", int64_t{0});
  cfg.validate();
  return cfg;
}

Json to_json(const SetRecipe& recipe) {
  Json j{{"kind", recipe_kind_name(recipe.kind)}};
  switch (recipe.kind) {
    case RecipeKind::Interval:
      j["start"] = recipe.start;
      break;
    case RecipeKind::Strided:
      j["stride"] = recipe.stride;
      break;
    case RecipeKind::Arithmetic:
      j["start"] = recipe.start;
      j["step"] = recipe.step;
      break;
    case RecipeKind::Geometric:
      j["start"] = recipe.start;
      j["ratio"] = recipe.ratio;
      break;
    case RecipeKind::Random:
      if (recipe.seed) j["seed"] = *recipe.seed;
      break;
    case RecipeKind::InverseImage:
      j["multiplier"] = recipe.multiplier;
      break;
  }
  return j;
}

SetRecipe set_recipe_from_json(const Json& j) {
  SetRecipe r;
  r.kind = recipe_kind_from_name(j.at("kind").get<std::string>());
  r.start = j.value("start", int64_t{0});
  r.stride = j.value("stride", int64_t{1});
  r.step = j.value("step", int64_t{1});
  r.ratio = j.value("ratio", int64_t{2});
  r.multiplier = j.value("multiplier", int64_t{1});
  if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
  return r;
}

Json to_json(const MaxloadDistribution& dist) {
  Json counts = Json::object();
  for (const auto& [value, count] : dist.counts)
    counts[std::to_string(value)] = count;
  Json j{{"mode", dist.mode == SweepMode::Exact ? "exact" : "monte-carlo"},
         {"total", dist.total},
         {"counts", counts},
         {"mean_num", json_big(dist.mean.num())},
         {"mean_den", json_big(dist.mean.den())}};
  if (dist.mode == SweepMode::MonteCarlo) j["stderr"] = dist.stderr_value;
  return j;
}

void write_csv(const MaxloadDistribution& dist, std::ostream& out) {
  out << "value,count\n";
  for (const auto& [value, count] : dist.counts)
    out << value << "," << count << "\n";
}

Json to_json(const FDistribution& dist) {
  Json measures = Json::array();
  for (const auto& [k, m] : dist.measure_by_k) {
    measures.push_back(Json{{"k", k},
                            {"measure_num", json_big(m.num())},
                            {"measure_den", json_big(m.den())}});
  }
  return Json{{"n", dist.n}, {"u", dist.u}, {"measures", measures}};
}

void write_csv(const FDistribution& dist, std::ostream& out) {
  out << "k,measure_num,measure_den\n";
  for (const auto& [k, m] : dist.measure_by_k)
    out << k << "," << m.num().get_str() << "," << m.den().get_str() << "\n";
}

Json to_json(const OverlapReport& report) {
  Json elems = Json::array();
  for (const auto& e : report.per_element) {
    elems.push_back(Json{{"x", e.x},
                         {"overlap", e.overlap},
                         {"excess_num", json_big(e.excess.num())},
                         {"excess_den", json_big(e.excess.den())},
                         {"sigma", e.rep.sigma},
                         {"m", e.rep.m},
                         {"k", e.rep.k},
                         {"rhs_num", json_big(e.bound_rhs.num())},
                         {"rhs_den", json_big(e.bound_rhs.den())}});
  }
  return Json{{"per_element", elems},
              {"total_excess_num", json_big(report.total_excess.num())},
              {"total_excess_den", json_big(report.total_excess.den())}};
}

void write_csv(const OverlapReport& report, std::ostream& out) {
  out << "x,overlap,excess_num,excess_den,sigma,m,k,rhs_num,rhs_den\n";
  for (const auto& e : report.per_element) {
    out << e.x << "," << e.overlap << "," << e.excess.num().get_str() << ","
        << e.excess.den().get_str() << "," << e.rep.sigma << "," << e.rep.m
        << "," << e.rep.k << "," << e.bound_rhs.num().get_str() << ","
        << e.bound_rhs.den().get_str() << "\n";
  }
}

}  // namespace linhash
