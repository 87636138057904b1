#ifndef LRC_JSON_IO_HPP
#define LRC_JSON_IO_HPP

#include <json.hpp>

#include "lrc/lrcopt.hpp"

namespace lrc {

using ordered_json = nlohmann::ordered_json;

// {"p": int, "m": int, "modulus": [int,...]} (ascending degree)
ordered_json field_to_json(const Field& f);
const Field& field_from_json(const nlohmann::json& j);

// {"field": {...}, "kind": "single"|"pair", "eta": int, "s": int,
//  "lambda0": int, "i": int, "j": int (pair only)}
ordered_json code_to_json(const CodeSpec& code);
CodeSpec code_from_json(const nlohmann::json& j);

ordered_json profile_to_json(const LrcProfile& p);
ordered_json class_to_json(const ClassLabel& c);
ordered_json report_to_json(const OptimalityReport& r);

ordered_json poly_to_json(const Polynomial& p);

// row-major nested arrays
ordered_json matrix_to_json(const std::vector<std::vector<int>>& rows);

}  // namespace lrc

#endif
