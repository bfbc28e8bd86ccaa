#include "g2lab/json_io.hpp"

#include <istream>
#include <sstream>

#include "g2lab/errors.hpp"

namespace g2lab {

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw invalid_input("complex JSON needs a \"facets\" array");
    std::vector<Face> facets;
    for (const auto& jf : j["facets"]) {
        if (!jf.is_array()) throw invalid_input("each facet must be an array of vertex ids");
        std::vector<Vertex> vs;
        for (const auto& jv : jf) {
            if (!jv.is_number_integer())
                throw invalid_input("vertex ids must be integers");
            long long v = jv.get<long long>();
            if (v < 0 || v > 1'000'000'000)
                throw invalid_input("vertex id out of range");
            vs.push_back(static_cast<Vertex>(v));
        }
        facets.emplace_back(std::move(vs)); // throws on duplicates
    }
    std::optional<std::string> name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw invalid_input("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    return SimplicialComplex::from_facets(std::move(facets), std::move(name));
}

SimplicialComplex complex_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_input("not valid JSON");
    return complex_from_json(j);
}

SimplicialComplex read_complex(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return complex_from_json_text(buf.str());
}

nlohmann::json complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    auto& facets = j["facets"] = nlohmann::json::array();
    for (const Face& f : k.facets()) facets.push_back(f.verts());
    if (k.name()) j["name"] = *k.name();
    return j;
}

std::string canonical_json(const SimplicialComplex& k) {
    return complex_to_json(k).dump();
}

} // namespace g2lab
