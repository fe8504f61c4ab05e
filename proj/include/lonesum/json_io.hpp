#ifndef LONESUM_JSON_IO_HPP
#define LONESUM_JSON_IO_HPP

#include "json.hpp"

#include "lonesum/classify.hpp"
#include "lonesum/oracle.hpp"

namespace lonesum {

// Key order in every document is fixed (ordered_json) so output is stable
// and diffable. Schemas are documented in docs/json.md.
using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Json to_json(const Decomposition& d);

/// {"rows","cols","decomposable", then "order","lonesum","ferrers" or
/// "witness", then "pair_class"}.
Json classification_json(const BitMatrix& a, const Classification& c);

/// Counts as JSON numbers; "elapsed_seconds" only when include_timing.
Json to_json(const OracleReport& r, bool include_timing);

}  // namespace lonesum

#endif  // LONESUM_JSON_IO_HPP
