#pragma once

// JSON encodings shared by the CLI. F_q elements are written as residue
// vectors; vectors of F_q elements are flattened to n*r residues.

#include "symmul/bounds.hpp"
#include "symmul/chud.hpp"
#include "symmul/curvecheck.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace symmul::serialize {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integers fitting in 64 bits as numbers, larger ones as decimal strings.
Json to_json(const BigInt& v);
Json to_json(const towers::TowerStep& step);
Json to_json(const bounds::BoundReport& r);
Json to_json(const curvecheck::ShimuraReport& r);
Json to_json(const chud::SymmetricAlgorithm& alg);

/// Throws FormatError on malformed documents.
chud::SymmetricAlgorithm algorithm_from_json(const Json& j);

}  // namespace symmul::serialize
