#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "plradon/analysis.hpp"
#include "plradon/construction.hpp"
#include "plradon/sobolev.hpp"

namespace plradon {

inline constexpr const char* kSchemaVersion = "1";

// QS3 as the 4-integer tuple [a_num, a_den, b_num, b_den]; the integers are
// decimal strings because construction coordinates outgrow 64 bits.
nlohmann::json qs3_to_json(const QS3& x);
QS3 qs3_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& p);

// {centroid: [QS3, QS3], side: QS3, orientation: "up"|"down"} plus float
// shadows for plotting.
nlohmann::json triangle_to_json(const StandardTriangle& t);
StandardTriangle triangle_from_json(const nlohmann::json& j);

nlohmann::json meta_json(int levels, const std::string& mode, std::uint64_t seed);

nlohmann::json truncation_to_json(const Truncation& tr);

template <class T>
nlohmann::json profile_to_json(const PLFunction<T>& f);

// CSV with `# key=value` metadata lines and the header
// omega_rad,lip,support,sup,integral (lip printed as inf when infinite).
std::string sweep_to_csv(const SweepTable& table, std::uint64_t seed);

std::string estimates_to_csv(const std::vector<SeminormEstimate>& rows, int levels,
                             const std::string& mode, std::uint64_t seed);

// Deterministic shortest round-trip formatting for binary64.
std::string format_double(double v);

}  // namespace plradon
