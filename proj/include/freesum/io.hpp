#ifndef FREESUM_IO_HPP
#define FREESUM_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "freesum/bkk.hpp"
#include "freesum/ehrhart.hpp"
#include "freesum/errors.hpp"
#include "freesum/polytope.hpp"
#include "freesum/sums.hpp"

namespace freesum {

// Malformed JSON or rational text (CLI exit code 2).
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed document with inconsistent content (CLI exit code 3).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Raw contents of a polytope document: {"ambient_dim": n, "vertices": [[...]]}.
// Coordinates are rational strings ("a" or "a/b"); plain JSON integers are
// accepted too. Extra keys are ignored.
struct PointDocument {
    std::size_t ambient_dim = 0;
    PointSet points;  // duplicates removed, first occurrence order
    std::size_t duplicates_removed = 0;
};

PointDocument parse_point_document(std::string_view text);

// Hull of the document's points. `warnings` receives notes about dropped
// duplicates or non-extreme points. Lower-dimensional input is a
// ValidationError.
Polytope parse_polytope(std::string_view text, std::vector<std::string>* warnings = nullptr);

nlohmann::json rational_json(const Rational& q);
nlohmann::json integers_json(const std::vector<Integer>& v);
nlohmann::json points_json(std::size_t ambient_dim, const PointSet& points);
nlohmann::json polytope_json(const Polytope& p);

nlohmann::json to_json(const EhrhartData& data);
nlohmann::json to_json(const BraunReport& r);
nlohmann::json to_json(const ProductFormulaReport& r);
nlohmann::json to_json(const LaurentSystem& sys);
nlohmann::json to_json(const FaceConditionReport& r);
nlohmann::json to_json(const CertificateReport& r);

std::string dump(const nlohmann::json& j, bool pretty);

}  // namespace freesum

#endif  // FREESUM_IO_HPP
