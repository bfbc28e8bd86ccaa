#ifndef G2LAB_JSON_IO_HPP
#define G2LAB_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "g2lab/complex.hpp"

namespace g2lab {

/// Parse {"facets": [[int,...],...], "name"?: str}. Throws invalid_input on
/// anything malformed (bad JSON, duplicate vertices, negative ids, no facets).
SimplicialComplex complex_from_json(const nlohmann::json& j);
SimplicialComplex complex_from_json_text(const std::string& text);
SimplicialComplex read_complex(std::istream& in);

/// Canonical form: facets sorted lexicographically, vertices ascending.
/// Byte-stable for a given complex.
nlohmann::json complex_to_json(const SimplicialComplex& k);
std::string canonical_json(const SimplicialComplex& k);

} // namespace g2lab

#endif
