#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "chenfliess.hpp"
#include "hopf.hpp"
#include "series2.hpp"

namespace fpg {

// Shared wire formats:
//   Series   {"max_degree": D, "terms": {"<word>": "<rational>"}}
//   Series2  {"max_degree": D, "e1": {...terms...}, "e2": {...terms...}}
//   Signal   {"h": float, "values": [floats]}
//   Trajectory  {"t": [...], "y": [...]}
// Words are strings over '0','1' ("" = empty word); rationals are "p" or
// "p/q" in decimal. Hopf tables use "word:channel" generator tokens and
// monomials as sorted token lists.

Series series_from_json(const nlohmann::json& j);
Series series_from_json_text(std::string_view text);
nlohmann::json series_to_json(const Series& s);

Series2 series2_from_json(const nlohmann::json& j);
Series2 series2_from_json_text(std::string_view text);
nlohmann::json series2_to_json(const Series2& s);

Signal signal_from_json_text(std::string_view text);
nlohmann::json trajectory_to_json(const Trajectory& t);

nlohmann::json word_tensor_to_json(const WordTensor& t);
nlohmann::json monomial_to_json(const Monomial& m);
nlohmann::json helement_to_json(const HElement& h);
nlohmann::json tensor_to_json(const TensorElement& t);

/// Per-generator coproduct/antipode table rows for all generators of degree
/// <= max_degree.
nlohmann::json hopf_table_json(int max_degree);

}  // namespace fpg
