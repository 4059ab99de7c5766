#pragma once

#include "hpit/assignment.hpp"
#include "hpit/cost_matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace hpit {

// Plain text: first line C, then C lines of C whitespace-separated decimals.
// Parse errors carry "line L, column K" of the offending token.
[[nodiscard]] CostMatrix parse_cost_matrix_text(std::string_view text);
[[nodiscard]] std::string format_cost_matrix_text(const CostMatrix& matrix);

// JSON: {"size": C, "entries": [[...], ...]}
[[nodiscard]] CostMatrix cost_matrix_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json cost_matrix_to_json(const CostMatrix& matrix);

/// Detects the format from the first non-blank character ('{' means JSON).
[[nodiscard]] CostMatrix parse_cost_matrix(std::string_view text);
[[nodiscard]] CostMatrix load_cost_matrix(const std::string& path);

/// {"permutation": [...], "total_cost": x, "iterations": n, "elapsed_ns": t}
[[nodiscard]] nlohmann::json assignment_to_json(const AssignmentResult& result);

}  // namespace hpit
