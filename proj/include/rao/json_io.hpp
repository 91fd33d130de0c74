#pragma once

#include "rao/cocycle.hpp"
#include "rao/matrix.hpp"

#include <json.hpp>

namespace rao {

using Json = nlohmann::ordered_json;

// Matrices travel as row-major arrays of "num/den" strings; nested row arrays
// are accepted on input.
Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j, int rows, int cols);

// Word letters: {"type":"parabolic","matrix":[...]} | {"type":"sigma","S":[1,3]}.
Json word_to_json(const FactoredWord& w);
FactoredWord word_from_json(const SympSpace& sp, const Json& j);

}  // namespace rao
