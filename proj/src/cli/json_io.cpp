#include "qi/cli/json_io.hpp"

#include "qi/errors.hpp"

namespace qi::json_io {

namespace {

long integer_value(const json& v, const std::string& what) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        try {
            std::size_t used = 0;
            long x = std::stol(s, &used);
            if (used == s.size()) return x;
        } catch (const std::exception&) {
        }
    }
    throw InputError(what + " must be an integer");
}

std::vector<long> vertex_map(const Quiver& q, const json& j, const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be a JSON object mapping vertices to integers");
    std::vector<long> out(q.vertex_count(), 0);
    for (const auto& [key, value] : j.items()) {
        auto idx = q.index_of(key);
        if (!idx) throw InputError(what + " names unknown vertex '" + key + "'");
        out[*idx] = integer_value(value, what + " entry '" + key + "'");
    }
    return out;
}

}  // namespace

std::string decimal(long v) { return std::to_string(v); }

json parse(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + what + ": " + e.what());
    }
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) throw InputError("quiver JSON needs a \"vertices\" array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw InputError("vertex identifiers must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> arrows;
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) throw InputError("quiver \"arrows\" must be an array");
        for (const auto& a : j["arrows"]) {
            if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a["from"].is_string() || !a["to"].is_string())
                throw InputError("each arrow needs string fields \"from\" and \"to\"");
            arrows.emplace_back(a["from"].get<std::string>(), a["to"].get<std::string>());
        }
    }
    return Quiver(std::move(vertices), arrows);
}

json to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertex_names();
    j["arrows"] = json::array();
    for (const auto& a : q.arrows()) j["arrows"].push_back({{"from", q.name(a.source)}, {"to", q.name(a.target)}});
    return j;
}

DimVector dim_from_json(const Quiver& q, const json& j) {
    auto v = vertex_map(q, j, "dimension vector");
    std::vector<int> d;
    for (long x : v) {
        if (x < 0) throw InputError("dimension vector entries must be nonnegative");
        if (x > 1000000) throw InputError("dimension vector entry too large");
        d.push_back(static_cast<int>(x));
    }
    return DimVector(std::move(d));
}

json to_json(const Quiver& q, const DimVector& d) {
    json j = json::object();
    for (std::size_t i = 0; i < d.size(); ++i) j[q.name(i)] = d[i];
    return j;
}

Stability stability_from_json(const Quiver& q, const json& j) { return Stability(vertex_map(q, j, "stability")); }

json to_json(const Quiver& q, const Stability& s) {
    json j = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) j[q.name(i)] = s[i];
    return j;
}

std::vector<DimVector> dims_from_json(const Quiver& q, const json& j) {
    if (!j.is_array()) throw InputError("expected a JSON array of dimension vectors");
    std::vector<DimVector> out;
    for (const auto& x : j) out.push_back(dim_from_json(q, x));
    return out;
}

json to_json(const Quiver& q, const std::vector<DimVector>& parts) {
    json j = json::array();
    for (const auto& p : parts) j.push_back(to_json(q, p));
    return j;
}

json to_json(const LaurentPoly& p, const std::string& variable) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
    return {{"variable", variable}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) throw InputError("polynomial JSON needs a \"terms\" array");
    std::vector<std::pair<int, Integer>> terms;
    for (const auto& t : j["terms"]) {
        if (!t.contains("exp") || !t.contains("coeff")) throw InputError("polynomial terms need \"exp\" and \"coeff\"");
        Integer c;
        const auto& cj = t["coeff"];
        if (cj.is_string()) {
            if (c.set_str(cj.get<std::string>(), 10) != 0) throw InputError("polynomial coefficient is not a decimal integer");
        } else {
            c = Integer(integer_value(cj, "polynomial coefficient"));
        }
        terms.emplace_back(static_cast<int>(integer_value(t["exp"], "polynomial exponent")), c);
    }
    return LaurentPoly::from_terms(terms);
}

json to_json(const RationalFunc& f, const std::string& variable) {
    return {{"variable", variable}, {"numerator", to_json(f.numerator(), variable)}, {"denominator", to_json(f.denominator(), variable)}};
}

json coefficient_list(const LaurentPoly& p) {
    json out = json::array();
    if (p.is_zero()) return out;
    if (p.low_degree() < 0) throw InputError("coefficient list of a polynomial with negative exponents");
    for (int k = 0; k <= p.high_degree(); ++k) out.push_back(p.coefficient(k).get_str());
    return out;
}

oracle::Mat matrix_from_json(const json& j, int p) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("a matrix is a nonempty array of rows");
    oracle::Mat m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != m.cols) throw InputError("matrix rows must have equal length");
        for (int c = 0; c < m.cols; ++c) {
            long x = integer_value(row[static_cast<std::size_t>(c)], "matrix entry") % p;
            if (x < 0) x += p;
            m(r, c) = static_cast<std::uint8_t>(x);
        }
    }
    return m;
}

std::vector<oracle::Mat> matrices_from_json(const json& j, int p) {
    if (!j.is_array()) throw InputError("expected a JSON array of matrices");
    std::vector<oracle::Mat> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m, p));
    return out;
}

}  // namespace qi::json_io
