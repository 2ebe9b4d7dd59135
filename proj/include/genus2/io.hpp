#pragma once

// Serialization: JSONL for representations (one object per line), CSV for
// moment point clouds. Numbers are written with 17 significant digits so a
// round trip through text is exact.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "genus2/polytope.hpp"
#include "genus2/repvar.hpp"

namespace genus2 {

using Json = nlohmann::ordered_json;

Json to_json(const GroupElement& g);  // [w, x, y, z]
GroupElement group_element_from_json(const Json& j);
Json to_json(const SimplexPoint& p);  // {"x": [..], "region": "...", "polytope": "..."}
std::string region_name(const Region& r);  // Interior, Face(i), Edge(i), Vertex(i)

struct RepresentationRecord {
  Representation rep;
  Json extra = Json::object();  // every key other than the four slots
};

// {"g1": [...], "h1": [...], "g2": [...], "h2": [...], "residual": r, extra...}
std::string jsonl_line(const Representation& rho, const Json& extra = Json::object());
// Throws ParseError on malformed input.
RepresentationRecord parse_jsonl_line(const std::string& line);
// Skips blank lines. Throws ParseError naming the offending line number.
std::vector<RepresentationRecord> read_jsonl(std::istream& in);

std::string format_double(double v);

// index,mu1,mu2,mu3,mu_region,lambda1,lambda2,lambda3,lambda_region,residual
std::string moment_csv_header();
std::string moment_csv_row(std::size_t index, const Representation& rho, const Tolerances& tol = kDefaultTolerances);

}  // namespace genus2
