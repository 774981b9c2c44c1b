#pragma once

// JSON encodings shared by the CLI and the certificate format. Integers that
// fit in a signed 64-bit value are written as numbers, larger ones as
// decimal strings; both forms are accepted on input.

#include <string>

#include <json.hpp>

#include "prettygood/intlin.hpp"
#include "prettygood/isogeny.hpp"
#include "prettygood/primes.hpp"
#include "prettygood/rootdatum.hpp"
#include "prettygood/standardness.hpp"

namespace prettygood {

using Json = nlohmann::ordered_json;

struct JsonFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

Json to_json(const RootDatum& r);
RootDatum datum_from_json(const Json& j);

Json to_json(const RootSubset& s);
RootSubset subset_from_json(const Json& j);

Json to_json(const PrimeReport& rep);
PrimeReport report_from_json(const Json& j);

Json to_json(const Decomposition& d);
Json to_json(const GluingCheck& g);

Json to_json(const Isogeny& f);
Isogeny isogeny_from_json(const Json& j);

/// Preset string, inline JSON, or a path to a JSON file holding either a
/// datum object or a preset string.
RootDatum load_datum(const std::string& input);

/// Inline JSON or a path to a JSON file.
Json load_json(const std::string& input);

}  // namespace prettygood
