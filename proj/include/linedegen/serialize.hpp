#pragma once

#include <json.hpp>

#include <string>

#include "linedegen/degeneration.hpp"
#include "linedegen/witness.hpp"

namespace linedegen {

using nlohmann::json;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) {
  if (s.empty()) throw ArgumentError("empty integer literal");
  return BigInt(s);
}

/// [{"partition": [p, q], "coefficient": "27"}, ...] in ascending partition order.
inline json chow_to_json(const ChowElement& x) {
  json out = json::array();
  for (const auto& [part, c] : x.coeffs())
    out.push_back({{"partition", {part.p(), part.q()}}, {"coefficient", to_decimal(c)}});
  return out;
}

inline ChowElement chow_from_json(const json& j, const GrassmannianContext& ctx) {
  ChowElement out(ctx);
  for (const auto& entry : j) {
    const auto& part = entry.at("partition");
    out.accumulate(Partition2(part.at(0).get<unsigned>(), part.at(1).get<unsigned>()),
                   from_decimal(entry.at("coefficient").get<std::string>()));
  }
  return out;
}

inline json report_to_json(const DegenerationReport& r) {
  json out{{"n", r.n},
           {"d", r.d},
           {"k", r.k},
           {"l", r.l},
           {"class_k", chow_to_json(r.class_k)},
           {"class_l", chow_to_json(r.class_l)},
           {"total", chow_to_json(r.total)},
           {"sum_matches", r.sum_matches},
           {"counts", nullptr}};
  if (r.counts)
    out["counts"] = {{"k_lines", to_decimal(r.counts->k_lines)},
                     {"l_lines", to_decimal(r.counts->l_lines)},
                     {"total", to_decimal(r.counts->total)}};
  return out;
}

inline DegenerationReport report_from_json(const json& j) {
  const GrassmannianContext ctx(j.at("n").get<unsigned>());
  DegenerationReport r{ctx.n(),
                       j.at("d").get<unsigned>(),
                       j.at("k").get<unsigned>(),
                       j.at("l").get<unsigned>(),
                       chow_from_json(j.at("class_k"), ctx),
                       chow_from_json(j.at("class_l"), ctx),
                       chow_from_json(j.at("total"), ctx),
                       j.at("sum_matches").get<bool>(),
                       std::nullopt};
  if (const auto& c = j.at("counts"); !c.is_null())
    r.counts = DegenerationCounts{from_decimal(c.at("k_lines").get<std::string>()),
                                  from_decimal(c.at("l_lines").get<std::string>()),
                                  from_decimal(c.at("total").get<std::string>())};
  return r;
}

inline json witness_to_json(const WitnessReport& w) {
  return {{"phi_surjective", w.phi_surjective},
          {"kernel_dim", w.kernel_dim},
          {"expected_kernel_dim", w.expected_kernel_dim},
          {"restriction_surjective", w.restriction_surjective},
          {"nodes_distinct", w.nodes_distinct}};
}

inline WitnessReport witness_from_json(const json& j) {
  return {j.at("phi_surjective").get<bool>(), j.at("kernel_dim").get<std::size_t>(),
          j.at("expected_kernel_dim").get<std::size_t>(), j.at("restriction_surjective").get<bool>(),
          j.at("nodes_distinct").get<bool>()};
}

inline json normal_types_to_json(const NormalTypesResult& r) {
  json types = json::array();
  for (const auto& t : r.types) types.push_back(t.entries);
  return {{"types", types}, {"advisory", r.advisory ? json(*r.advisory) : json(nullptr)}};
}

inline NormalTypesResult normal_types_from_json(const json& j) {
  NormalTypesResult r;
  for (const auto& t : j.at("types")) r.types.push_back({t.get<std::vector<int>>()});
  if (const auto& a = j.at("advisory"); !a.is_null()) r.advisory = a.get<std::string>();
  return r;
}

}  // namespace linedegen
