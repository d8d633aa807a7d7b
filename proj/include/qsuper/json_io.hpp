#pragma once

#include <json.hpp>

#include "qsuper/hc.hpp"

namespace qsuper {

using json = nlohmann::json;

constexpr int kJsonSchemaVersion = 1;

// "3", "-1/2"; throws std::invalid_argument otherwise.
Rat parse_rat(const std::string& s);
std::string rat_string(const Rat& r);

// Scalars travel as rendered text ("q^2-1", "(q)/(q^2+1)"), weights as lists
// of rational strings, K exponents as integer lists.

json scalar_to_json(const Algebra& A, const Scalar& s);
json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

// {"expr": ..., "terms": [{"coeff", "f_word", "k", "e_word"}, ...]};
// words are 1-based generator indices.
json element_to_json(const Element& e);
Element element_from_json(const Algebra& A, const json& j);

// [[exponent, coeff], ...]
json laurent_to_json(const Algebra& A, const LaurentInvariant& h);
LaurentInvariant laurent_from_json(const Algebra& A, const json& j);

// [[weight, multiplicity], ...]
json character_to_json(const Character& c);

json datum_to_json(const RootDatum& rd);
json module_to_json(const WeightModule& M);

// Adds schema_version and the datum name to a command result.
json envelope(const RootDatum& rd, const std::string& command, json result);

}  // namespace qsuper
