#pragma once

#include "polyalg/ladder.hpp"
#include "polyalg/polynomial.hpp"

#include <Eigen/Dense>
#include <json.hpp>

namespace polyalg::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
// Matrices up to this size are written dense; larger ones as (i, j, v) triplets.
inline constexpr Eigen::Index kDenseLimit = 64;

json to_json(const VerificationReport& report);
json to_json(const Polynomial& p);
json to_json(const Labels& labels);
json matrix_json(const Eigen::MatrixXd& m);

// with_matrices adds the N0, N+ and N- matrices.
json rep_json(const LadderRep& rep, bool with_matrices);

// Inverse of rep_json; throws std::invalid_argument on malformed input.
LadderRep rep_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);

}  // namespace polyalg::cli
