#pragma once

// JSON machine format and the text tableau rendering.
//
// One solution serializes to an object {p, q, n, alpha_p, alpha_q, kind,
// height, rows} with rows listed bottom (b = 0) to top, each row left
// (a = 0) to right. The tableau prints rows top-first, space-separated.

#include <sstream>
#include <string>

#include "json.hpp"
#include "model.hpp"

namespace pqfrac {

namespace detail {

inline long json_int(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value too large for the JSON format");
    return v.get_si();
}

inline Int int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing or non-integer field: ") + key);
    return Int(j[key].get<long>());
}

}  // namespace detail

inline nlohmann::json grid_to_json(const SolutionGrid& g) {
    nlohmann::json j;
    j["p"] = detail::json_int(g.params.p);
    j["q"] = detail::json_int(g.params.q);
    j["n"] = detail::json_int(g.params.n);
    j["alpha_p"] = detail::json_int(g.params.alpha_p);
    j["alpha_q"] = detail::json_int(g.alpha_q());
    j["kind"] = kind_name(g.kind());
    j["height"] = detail::json_int(g.height());
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& row : g.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (const Int& k : row) jr.push_back(detail::json_int(k));
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline SolutionGrid grid_from_json(const nlohmann::json& j) {
    SolutionGrid g;
    g.params.p = detail::int_field(j, "p");
    g.params.q = detail::int_field(j, "q");
    g.params.n = detail::int_field(j, "n");
    g.params.alpha_p = detail::int_field(j, "alpha_p");
    g.params.validate();
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw std::invalid_argument("missing or empty rows");
    for (const auto& jr : j["rows"]) {
        if (!jr.is_array()) throw std::invalid_argument("rows must be arrays");
        Row row;
        for (const auto& v : jr) {
            if (!v.is_number_integer()) throw std::invalid_argument("row entries must be integers");
            row.push_back(Int(v.get<long>()));
        }
        g.rows.push_back(std::move(row));
    }
    // Derived fields, when present, must agree with the rows.
    if (j.contains("alpha_q") && Int(j["alpha_q"].get<long>()) != g.alpha_q())
        throw std::invalid_argument("alpha_q does not match the rows");
    if (j.contains("kind") && j["kind"].get<std::string>() != kind_name(g.kind()))
        throw std::invalid_argument("kind does not match the rows");
    if (j.contains("height") && Int(j["height"].get<long>()) != g.height())
        throw std::invalid_argument("height does not match the rows");
    return g;
}

inline nlohmann::json grids_to_json(const std::vector<SolutionGrid>& grids) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SolutionGrid& g : grids) arr.push_back(grid_to_json(g));
    return arr;
}

inline std::vector<SolutionGrid> grids_from_json(const nlohmann::json& j) {
    std::vector<SolutionGrid> out;
    if (j.is_array()) {
        for (const auto& jg : j) out.push_back(grid_from_json(jg));
    } else {
        out.push_back(grid_from_json(j));
    }
    return out;
}

inline std::string tableau(const SolutionGrid& g) {
    std::ostringstream os;
    for (std::size_t b = g.rows.size(); b-- > 0;) {
        const Row& row = g.rows[b];
        for (std::size_t a = 0; a < row.size(); ++a) {
            if (a) os << ' ';
            os << row[a];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace pqfrac
