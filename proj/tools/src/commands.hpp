#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hnlab/scalar.hpp"
#include "report.hpp"

namespace hnlab::cli {

/// "q" (or "Q", "rationals") for the rationals, otherwise an odd prime below 2^31, written
/// as "101", "F101" or "F_101".
Field parse_field(const std::string& text);

/// "1/3:2,0" is {(1/3, mult 2), (0, mult 1)}; returns the JSON slope-multiset schema.
json parse_compact_slopes(const std::string& text);

struct Common {
  std::string field = "q";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
};

/// op is one of info, dual, tensor, pdiv, isocrystal. doc = {"slopes": ..., "with": ...}.
Report hn_command(const std::string& op, const json& doc);

Report p1_kernel(const Common& c, const json& doc);
Report p1_modify(const Common& c, const json& doc);

struct QuarticParams {
  std::size_t variables = 3;
  long form_degree = 1;
  unsigned poly_degree = 4;
  long bound = 1;
};
/// With no document the instance is drawn from the seed until D_g P is fiberwise surjective.
Report p1_jacobian(const Common& c, const QuarticParams& q, const std::optional<json>& doc);
Report p1_sample(const Common& c, const QuarticParams& q);

Report minor_check(const Common& c, std::optional<std::size_t> n, std::optional<std::size_t> r);
Report trace_check(const Common& c, std::optional<std::size_t> n);
Report tor_check(const Common& c, bool general, const std::optional<json>& doc);

Report local_model_check(const Common& c, const json& doc);
Report local_model_factor(const Common& c, const json& doc);

Report rz_enumerate(long height, long dim, const std::optional<std::string>& slope_min,
                    const std::optional<std::string>& slope_max);

}  // namespace hnlab::cli
