#pragma once

#include <string>

#include "coxkit/linalg.hpp"
#include "coxkit/trigscalar.hpp"
#include "json.hpp"

namespace coxkit {

using ojson = nlohmann::ordered_json;

// 12 significant digits, non-authoritative hint next to an exact value.
std::string approx12(double x);

// Exact rendering; with hint=true an {exact, approx} object instead.
ojson scalar_json(const TrigScalar& t, bool hint);
ojson vec_json(const Vec& v, bool hint);

// Fixed report envelope. The key order {verb, inputs, result,
// certificates, undecided} is part of the output contract.
ojson report(const std::string& verb, ojson inputs, ojson result,
             ojson certificates, bool undecided);

// Two-space indent plus trailing newline. No floating-point values are
// ever emitted, so parsing the output and re-rendering it reproduces the
// same bytes.
std::string render(const ojson& j);

}  // namespace coxkit
