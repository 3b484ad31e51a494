#pragma once
// JSON persistence for sampled bundles.  Canonical key order and [re, im]
// pairs; matrices are stored column-major.

#include "iqpv/spaces.hpp"

#include <json.hpp>

namespace iqpv {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json bundle_to_json(const SampledBundle& b);
SampledBundle bundle_from_json(const Json& j);

void save_bundle(const std::string& path, const SampledBundle& b);
// Re-validates the loaded data (membership, equivariance, continuity) and
// throws std::runtime_error on violations.
SampledBundle load_bundle(const std::string& path);

}  // namespace iqpv
