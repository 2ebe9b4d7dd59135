#include "genus2/io.hpp"

#include <cstdio>
#include <istream>

#include "genus2/errors.hpp"
#include "genus2/moment.hpp"

namespace genus2 {

namespace {

constexpr const char* kSlots[] = {"g1", "h1", "g2", "h2"};

Json vec_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const GroupElement& g) { return Json::array({g.w(), g.vec().x(), g.vec().y(), g.vec().z()}); }

GroupElement group_element_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("group element must be an array of 4 numbers");
  double c[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number()) throw ParseError("group element entries must be numbers");
    c[i] = j[i].get<double>();
  }
  try {
    return GroupElement::from_quaternion(c[0], c[1], c[2], c[3]);
  } catch (const ZeroVector&) {
    throw ParseError("group element has zero norm");
  }
}

std::string region_name(const Region& r) {
  if (r.kind == RegionKind::Interior) return "Interior";
  return std::string(to_string(r.kind)) + "(" + std::to_string(r.id) + ")";
}

Json to_json(const SimplexPoint& p) {
  Json j = Json::object();
  j["x"] = vec_json(p.x);
  j["region"] = region_name(p.region);
  j["polytope"] = to_string(p.tag);
  return j;
}

std::string jsonl_line(const Representation& rho, const Json& extra) {
  Json j = Json::object();
  const auto xs = rho.elements();
  for (std::size_t i = 0; i < 4; ++i) j[kSlots[i]] = to_json(xs[i]);
  j["residual"] = relation_residual(rho);
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j.dump();
}

RepresentationRecord parse_jsonl_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("representation line must be a JSON object");
  RepresentationRecord rec;
  GroupElement slots[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j.contains(kSlots[i])) throw ParseError(std::string("missing slot ") + kSlots[i]);
    slots[i] = group_element_from_json(j[kSlots[i]]);
  }
  rec.rep = {slots[0], slots[1], slots[2], slots[3]};
  for (const auto& [key, value] : j.items()) {
    if (key != "g1" && key != "h1" && key != "g2" && key != "h2") rec.extra[key] = value;
  }
  return rec;
}

std::vector<RepresentationRecord> read_jsonl(std::istream& in) {
  std::vector<RepresentationRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_jsonl_line(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string moment_csv_header() {
  return "index,mu1,mu2,mu3,mu_region,lambda1,lambda2,lambda3,lambda_region,residual";
}

std::string moment_csv_row(std::size_t index, const Representation& rho, const Tolerances& tol) {
  const SimplexPoint mu = moment_mu(rho, tol);
  const SimplexPoint lam = mu_lambda_from_mu(mu.x, tol);
  std::string row = std::to_string(index);
  for (int i = 0; i < 3; ++i) row += "," + format_double(mu.x[i]);
  row += "," + region_name(mu.region);
  for (int i = 0; i < 3; ++i) row += "," + format_double(lam.x[i]);
  row += "," + region_name(lam.region);
  row += "," + format_double(relation_residual(rho));
  return row;
}

}  // namespace genus2
