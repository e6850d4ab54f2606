#pragma once

// JSON encodings. Every rational is written as an "a/b" string.

#include "germ/blowup.hpp"
#include "germ/divisor.hpp"
#include "germ/lctpoly.hpp"
#include "germ/newton.hpp"
#include "germ/resolve.hpp"

#include "json.hpp"

namespace germ {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json rational_json(const Rational& q);
Json integer_json(long v);  // as "v/1"

// {"parts":[{"coeff":"<rational>","poly":"<expr>"}]}; coeff may also be a JSON integer.
GermDivisor divisor_from_json(const Json& j, int degree_cap = kDefaultDegreeCap);
Json divisor_to_json(const GermDivisor& d);

Json to_json(const Witness& w);
Json to_json(const LctResult& r);
Json to_json(const MldResult& r);
Json to_json(const FiberResult& r);
Json to_json(const NewtonData& n);
Json to_json(const LctBounds& b);
Json to_json(const WeightedBlowupData& d);
Json to_json(const WeightLct& w);
Json to_json(const PuiseuxPair& p);
Json to_json(const Certificate& c);
Json to_json(const ResolutionTree& t);

}  // namespace germ
