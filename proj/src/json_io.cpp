#include "qhcf/json_io.hpp"

namespace qhcf {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"minDegree", p.min_degree()}, {"coeffs", coeffs}};
}

json to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.dim(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.dim(); ++j) row.push_back(to_json(m.entry(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const BorderStrip& strip) {
    json cells = json::array();
    for (auto [r, c] : strip.cells()) cells.push_back(json::array({r, c}));
    return json{{"terms", strip.terms().terms()}, {"cells", cells}};
}

json to_json(const SeriesPrefix& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(c.str());
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

}  // namespace qhcf
