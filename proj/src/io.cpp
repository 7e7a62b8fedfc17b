#include "freesum/io.hpp"

#include <set>

#include "freesum/volume.hpp"

namespace freesum {

using nlohmann::json;

namespace {

// 1-based line on which the k-th row of the "vertices" array starts, or 0 when
// it cannot be located.
std::size_t line_of_row(std::string_view text, std::size_t row) {
    auto key = text.find("\"vertices\"");
    if (key == std::string_view::npos) return 0;
    std::size_t line = 1;
    for (std::size_t i = 0; i < key; ++i)
        if (text[i] == '\n') ++line;
    int depth = 0;
    std::size_t seen = 0;
    bool in_string = false;
    for (std::size_t i = key + 10; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') ++line;
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') in_string = true;
        else if (c == '[') {
            if (++depth == 2 && seen++ == row) return line;
        } else if (c == ']') {
            if (--depth == 0) break;
        }
    }
    return 0;
}

std::string where(std::string_view text, std::size_t row) {
    std::string s = "vertex " + std::to_string(row);
    if (auto line = line_of_row(text, row)) s += " (line " + std::to_string(line) + ")";
    return s;
}

Rational coordinate(const json& value, std::string_view text, std::size_t row, std::size_t col) {
    const std::string loc = where(text, row) + ", coordinate " + std::to_string(col);
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const DomainError& e) {
            throw ParseError(loc + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return parse_rational(value.dump());
    throw ParseError(loc + ": expected a rational string such as \"3/4\"");
}

}  // namespace

PointDocument parse_point_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("polytope document must be a JSON object");
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_unsigned())
        throw ValidationError("\"ambient_dim\" must be a positive integer");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ValidationError("\"vertices\" must be an array of coordinate rows");

    PointDocument out;
    out.ambient_dim = doc["ambient_dim"].get<std::size_t>();
    if (out.ambient_dim == 0) throw ValidationError("\"ambient_dim\" must be a positive integer");
    const auto& rows = doc["vertices"];
    if (rows.empty()) throw ValidationError("\"vertices\" is empty");
    std::set<RatVector> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array()) throw ValidationError(where(text, r) + ": expected an array of coordinates");
        if (rows[r].size() != out.ambient_dim)
            throw ValidationError(where(text, r) + ": has " + std::to_string(rows[r].size()) +
                                  " coordinates, ambient_dim is " + std::to_string(out.ambient_dim));
        RatVector v;
        for (std::size_t c = 0; c < rows[r].size(); ++c) v.push_back(coordinate(rows[r][c], text, r, c));
        if (seen.insert(v).second)
            out.points.push_back(std::move(v));
        else
            ++out.duplicates_removed;
    }
    return out;
}

Polytope parse_polytope(std::string_view text, std::vector<std::string>* warnings) {
    auto doc = parse_point_document(text);
    if (warnings && doc.duplicates_removed)
        warnings->push_back(std::to_string(doc.duplicates_removed) + " duplicate vertex row(s) removed");
    try {
        auto p = convex_hull(doc.points);
        if (warnings && p.vertices().size() < doc.points.size())
            warnings->push_back(std::to_string(doc.points.size() - p.vertices().size()) +
                                " listed point(s) are not vertices and were dropped");
        return p;
    } catch (const LowerDimensionalError& e) {
        throw ValidationError(e.what());
    }
}

json rational_json(const Rational& q) { return to_string(q); }

json integers_json(const std::vector<Integer>& v) {
    json arr = json::array();
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw ValidationError("integer " + x.get_str() + " does not fit in a JSON number");
        arr.push_back(x.get_si());
    }
    return arr;
}

json points_json(std::size_t ambient_dim, const PointSet& points) {
    json rows = json::array();
    for (const auto& p : points) {
        json row = json::array();
        for (const auto& x : p) row.push_back(to_string(x));
        rows.push_back(std::move(row));
    }
    return json{{"ambient_dim", ambient_dim}, {"vertices", std::move(rows)}};
}

json polytope_json(const Polytope& p) { return points_json(p.ambient_dim(), p.vertices()); }

json to_json(const EhrhartData& data) {
    json ehrhart = json::array();
    for (std::size_t i = 0; i <= data.dim; ++i) ehrhart.push_back(to_string(data.ehrhart.coefficient(i)));
    Integer volume = 0;
    for (const auto& h : data.h_star) volume += h;
    return json{{"dim", data.dim},
                {"ehrhart", std::move(ehrhart)},
                {"h_star", integers_json(trim_trailing_zeros(data.h_star))},
                {"volume_check", volume.get_str()}};
}

json to_json(const BraunReport& r) {
    return json{{"h_star_p", integers_json(r.h_p)},
                {"h_star_q", integers_json(r.h_q)},
                {"product", integers_json(r.product)},
                {"direct", integers_json(r.direct)},
                {"equal", r.equal},
                {"hypotheses", {{"p_reflexive", r.p_reflexive}, {"q_origin_interior", r.q_origin_interior}}},
                {"hypotheses_met", r.hypotheses_met()}};
}

json to_json(const ProductFormulaReport& r) {
    return json{{"vol_p", to_string(r.vol_p)},
                {"vol_q", to_string(r.vol_q)},
                {"vol_sum", to_string(r.vol_sum)},
                {"holds", r.holds},
                {"preconditions",
                 {{"p_full_dim", r.p_full_dim},
                  {"q_full_dim", r.q_full_dim},
                  {"p_contains_origin", r.p_contains_origin},
                  {"q_contains_origin", r.q_contains_origin}}}};
}

json to_json(const LaurentSystem& sys) {
    json polys = json::array();
    for (const auto& p : sys.polynomials) {
        json terms = json::array();
        for (const auto& t : p.terms)
            terms.push_back(json{{"coeff", format_coefficient(t.coeff)}, {"exponents", integers_json(t.exponents)}});
        polys.push_back(json{{"terms", std::move(terms)}});
    }
    return json{{"seed", sys.seed}, {"variables", sys.variables}, {"polynomials", std::move(polys)}};
}

json to_json(const FaceConditionReport& r) {
    json faces = json::array();
    for (const auto& f : r.faces) {
        json witness = json::array();
        for (auto c : f.witness) witness.push_back(c + 1);
        json meets = json::array();
        for (std::size_t i = 0; i < f.intersection_sizes.size(); ++i)
            if (f.intersection_sizes[i]) meets.push_back(i + 1);
        faces.push_back(json{{"dim", f.face.dim},
                             {"vertices", f.face.vertices},
                             {"meets", std::move(meets)},
                             {"intersection_sizes", f.intersection_sizes},
                             {"verdict", to_string(f.verdict)},
                             {"witness", std::move(witness)}});
    }
    json hull = points_json(r.hull_vertices.front().size(), r.hull_vertices);
    return json{{"hull", std::move(hull)}, {"faces", std::move(faces)}, {"passes", r.passes()}};
}

json to_json(const CertificateReport& r) {
    return json{{"certificate_passes", r.certificate_passes},
                {"mv", to_string(r.mv)},
                {"vol", to_string(r.vol)},
                {"equal", r.equal},
                {"conditions", to_json(r.conditions)}};
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace freesum
