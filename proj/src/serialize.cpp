#include "ssw/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace ssw {

nlohmann::json poly_to_json(const IntPoly& f) {
  nlohmann::json a = nlohmann::json::array();
  for (const BigInt& c : f.coeffs()) a.push_back(c.get_str());
  return a;
}

IntPoly poly_from_json(const nlohmann::json& a) {
  if (!a.is_array()) throw std::runtime_error("polynomial: expected JSON array");
  std::vector<BigInt> c;
  for (const auto& v : a) {
    if (!v.is_string()) throw std::runtime_error("polynomial: expected string coefficients");
    c.emplace_back(v.get<std::string>());
  }
  return IntPoly(std::move(c));
}

nlohmann::json class_to_json(const IsogenyClass& c) {
  nlohmann::json j;
  j["h"] = poly_to_json(c.h);
  j["e"] = c.e;
  j["P"] = poly_to_json(c.P);
  j["order_L"] = c.L;
  j["local"] = {{"d", c.local.d}, {"r", c.local.r}};
  return j;
}

nlohmann::json enumeration_to_json(const EnumerationResult& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["q"] = {{"p", r.q.p()}, {"n", r.q.n()}};
  j["g"] = r.g;
  j["classes"] = nlohmann::json::array();
  for (const IsogenyClass& c : r.classes) j["classes"].push_back(class_to_json(c));
  return j;
}

EnumerationResult enumeration_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1)
    throw std::runtime_error("enumeration JSON: missing or unsupported schema");
  if (!j.contains("q") || !j["q"].is_object())
    throw std::runtime_error("enumeration JSON: missing q");
  EnumerationResult r{
      PrimePower(j["q"].at("p").get<std::uint64_t>(), j["q"].at("n").get<unsigned>()),
      j.at("g").get<unsigned>(),
      {},
      {}};
  for (const auto& cj : j.at("classes")) {
    IsogenyClass c;
    c.h = poly_from_json(cj.at("h"));
    c.e = cj.at("e").get<unsigned>();
    c.P = poly_from_json(cj.at("P"));
    c.L = cj.at("order_L").get<unsigned>();
    c.local.d = cj.at("local").at("d").get<unsigned>();
    c.local.r = cj.at("local").at("r").get<unsigned>();
    c.g = r.g;
    r.classes.push_back(std::move(c));
  }
  return r;
}

namespace {

struct FlatRow {
  std::string p, n, g, order_L, e, d, r, h, P;
};

std::vector<FlatRow> flatten(const EnumerationResult& res) {
  std::vector<FlatRow> rows;
  for (const IsogenyClass& c : res.classes) {
    FlatRow row;
    row.p = std::to_string(res.q.p());
    row.n = std::to_string(res.q.n());
    row.g = std::to_string(res.g);
    row.order_L = std::to_string(c.L);
    row.e = std::to_string(c.e);
    row.d = std::to_string(c.local.d);
    row.r = std::to_string(c.local.r);
    row.h = c.h.to_coeff_string();
    row.P = c.P.to_coeff_string();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string enumeration_to_csv(const EnumerationResult& r) {
  std::ostringstream out;
  out << "p,n,g,order_L,e,d,r,h,P\n";
  for (const FlatRow& row : flatten(r)) {
    out << row.p << ',' << row.n << ',' << row.g << ',' << row.order_L << ','
        << row.e << ',' << row.d << ',' << row.r << ",\"" << row.h << "\",\""
        << row.P << "\"\n";
  }
  return out.str();
}

std::string enumeration_to_md(const EnumerationResult& r) {
  std::ostringstream out;
  out << "| p | n | g | order_L | e | d | r | h | P |\n";
  out << "|---|---|---|---------|---|---|---|---|---|\n";
  for (const FlatRow& row : flatten(r)) {
    out << "| " << row.p << " | " << row.n << " | " << row.g << " | "
        << row.order_L << " | " << row.e << " | " << row.d << " | " << row.r
        << " | `" << row.h << "` | `" << row.P << "` |\n";
  }
  return out.str();
}

bool serialized_equal(const EnumerationResult& a, const EnumerationResult& b) {
  return enumeration_to_json(a) == enumeration_to_json(b);
}

}  // namespace ssw
