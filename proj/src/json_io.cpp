#include "json_io.hpp"

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace fpg {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

int read_max_degree(const json& j) {
  if (!j.is_object() || !j.contains("max_degree") ||
      !j["max_degree"].is_number_integer())
    throw ParseError("expected an object with integer \"max_degree\"");
  return j["max_degree"].get<int>();
}

void read_terms_into(const json& terms, Series& s) {
  if (!terms.is_object()) throw ParseError("\"terms\" must be an object");
  for (const auto& [key, value] : terms.items()) {
    if (!value.is_string())
      throw ParseError("coefficient of '" + key + "' must be a string rational");
    Word w = Word::from_string(key);
    if (w.wdeg() > s.max_degree())
      throw ParseError("word '" + key + "' exceeds max_degree " +
                       std::to_string(s.max_degree()));
    Rational r = rational_from_string(value.get<std::string>());
    if (r != 0) {
      if (s.at(w) != 0)
        throw ParseError("duplicate word '" + key + "'");
      s.set(w, r);
    }
  }
}

}  // namespace

Series series_from_json(const json& j) {
  Series s(read_max_degree(j));
  if (j.contains("terms")) read_terms_into(j["terms"], s);
  return s;
}

Series series_from_json_text(std::string_view text) {
  return series_from_json(parse_text(text));
}

json series_to_json(const Series& s) {
  json terms = json::object();
  for (const auto& [w, r] : s.terms())
    terms[w.to_string()] = rational_to_string(r);
  return json{{"max_degree", s.max_degree()}, {"terms", std::move(terms)}};
}

Series2 series2_from_json(const json& j) {
  const int degree = read_max_degree(j);
  if (degree < 1) throw ParseError("two-channel series need max_degree >= 1");
  Series c1(degree), c2(degree - 1);
  if (j.contains("e1")) read_terms_into(j["e1"], c1);
  if (j.contains("e2")) read_terms_into(j["e2"], c2);
  return Series2(std::move(c1), std::move(c2));
}

Series2 series2_from_json_text(std::string_view text) {
  return series2_from_json(parse_text(text));
}

json series2_to_json(const Series2& s) {
  json e1 = json::object(), e2 = json::object();
  for (const auto& [w, r] : s.c1().terms())
    e1[w.to_string()] = rational_to_string(r);
  for (const auto& [w, r] : s.c2().terms())
    e2[w.to_string()] = rational_to_string(r);
  return json{{"max_degree", s.max_degree()},
              {"e1", std::move(e1)},
              {"e2", std::move(e2)}};
}

Signal signal_from_json_text(std::string_view text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("h") || !j.contains("values"))
    throw ParseError("signal needs {\"h\": float, \"values\": [...]}");
  Signal s;
  if (!j["h"].is_number()) throw ParseError("signal \"h\" must be a number");
  s.step = j["h"].get<double>();
  if (!j["values"].is_array())
    throw ParseError("signal \"values\" must be an array");
  for (const auto& v : j["values"]) {
    if (!v.is_number()) throw ParseError("signal values must be numbers");
    s.values.push_back(v.get<double>());
  }
  s.validate();
  return s;
}

json trajectory_to_json(const Trajectory& t) {
  return json{{"t", t.t}, {"y", t.y}};
}

json word_tensor_to_json(const WordTensor& t) {
  json out = json::array();
  for (const auto& [k, r] : t)
    out.push_back(json::array({k.first.to_string(), k.second.to_string(),
                               rational_to_string(r)}));
  return out;
}

json monomial_to_json(const Monomial& m) {
  json out = json::array();
  for (const auto& g : m.factors()) out.push_back(g.to_string());
  return out;
}

json helement_to_json(const HElement& h) {
  json out = json::array();
  for (const auto& [m, r] : h.terms())
    out.push_back(json::array({monomial_to_json(m), rational_to_string(r)}));
  return out;
}

json tensor_to_json(const TensorElement& t) {
  json out = json::array();
  for (const auto& [k, r] : t.terms())
    out.push_back(json::array({monomial_to_json(k.first),
                               monomial_to_json(k.second),
                               rational_to_string(r)}));
  return out;
}

json hopf_table_json(int max_degree) {
  HopfAlgebra algebra(max_degree);
  json rows = json::array();
  for (const Generator& g : algebra.generators_up_to(max_degree)) {
    rows.push_back(json{{"generator", g.to_string()},
                        {"degree", g.degree()},
                        {"delta", tensor_to_json(algebra.delta(g))},
                        {"rho", tensor_to_json(algebra.rho(g))},
                        {"coproduct", tensor_to_json(algebra.coproduct(g))},
                        {"antipode", helement_to_json(algebra.antipode(g))}});
  }
  return json{{"max_degree", max_degree}, {"generators", std::move(rows)}};
}

}  // namespace fpg
