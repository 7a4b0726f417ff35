#ifndef AUGMENTAL_IO_HPP
#define AUGMENTAL_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "augmental/complex.hpp"
#include "augmental/constructions.hpp"

#include "json.hpp"

namespace augmental {

/**
 * Complex JSON format:
 *   {"facets": [["a","b"],["c"]]}           a complex from its facet list
 *   {"facets": []}                          the void complex
 *   {"facets": [[]]}                        the complex {emptyface}
 * An optional "order": ["a","b","c"] declares the vertex linear order.
 */
struct ParsedComplex {
    SimplicialComplex complex;
    std::vector<std::string> order;  // empty when the file declares none

    OrderedComplex ordered() const {
        if (!order.empty()) return OrderedComplex(complex, order);
        return OrderedComplex::by_label_order(complex);
    }
};

inline ParsedComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw std::invalid_argument("complex JSON must be an object with a \"facets\" array");
    std::vector<Face> facets;
    for (const auto& jf : j["facets"]) {
        if (!jf.is_array()) throw std::invalid_argument("each facet must be an array of labels");
        Face f;
        for (const auto& v : jf) {
            if (!v.is_string()) throw std::invalid_argument("vertex labels must be strings");
            f.push_back(v.get<std::string>());
        }
        facets.push_back(std::move(f));
    }
    ParsedComplex out;
    out.complex = SimplicialComplex::from_facets(facets);
    if (j.contains("order")) {
        if (!j["order"].is_array()) throw std::invalid_argument("\"order\" must be an array");
        for (const auto& v : j["order"]) out.order.push_back(v.get<std::string>());
        OrderedComplex check(out.complex, out.order);  // validates coverage
        (void)check;
    }
    return out;
}

inline ParsedComplex parse_complex(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return complex_from_json(j);
}

inline ParsedComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

inline nlohmann::ordered_json complex_to_json(const SimplicialComplex& c,
                                              const std::vector<std::string>& order = {}) {
    nlohmann::ordered_json j;
    j["facets"] = nlohmann::ordered_json::array();
    if (!c.is_void()) {
        std::vector<Face> fs = c.facets();
        std::sort(fs.begin(), fs.end());
        for (const Face& f : fs) j["facets"].push_back(f);
    }
    if (!order.empty()) j["order"] = order;
    return j;
}

inline std::string render_complex(const SimplicialComplex& c,
                                  const std::vector<std::string>& order = {}) {
    return complex_to_json(c, order).dump();
}

}  // namespace augmental

#endif
