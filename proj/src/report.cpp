#include "starkit/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace starkit {

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(to_string(x));
}

Json to_json(const Rational& x) { return Json::array({to_json(Integer(numerator(x))), to_json(Integer(denominator(x)))}); }

Json to_json(const Real& x, int digits) { return Json(x.str(digits, std::ios_base::scientific)); }

Json to_json(const Cx& x, int digits) { return Json::array({to_json(x.re, digits), to_json(x.im, digits)}); }

Json to_json(const Components& c, int digits) {
  Json j = Json::array();
  for (auto& x : c) j.push_back(to_json(x, digits));
  return j;
}

Json to_json(const IVec& v) {
  Json j = Json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(to_json(v(i)));
  return j;
}

Json to_json(const IMat& A) {
  Json j = Json::array();
  for (int i = 0; i < A.rows(); ++i) j.push_back(to_json(IVec(A.row(i).transpose())));
  return j;
}

Json to_json(const IntElement& x) {
  const auto& G = x.group();
  Json coeffs = Json::array();
  for (int g = 0; g < G->size(); ++g)
    if (x[g] != 0) coeffs.push_back(Json::array({G->exps(g), to_json(x[g]), 1}));
  return Json{{"group", G->orders()}, {"coeffs", coeffs}};
}

Json to_json(const MultElement& x) {
  Json terms = Json::array();
  for (auto& [a, e] : x.terms) terms.push_back(Json::array({a, to_json(e)}));
  return Json{{"level", x.level}, {"terms", terms}, {"scalar", to_json(x.scalar)}};
}

Json to_json(const QuadElement& x) { return Json{{"a", to_json(x.a)}, {"b", to_json(x.b)}}; }

Json to_json(const AlgebraInstance& inst) {
  Json f = Json::array();
  for (auto& v : inst.f) f.push_back(to_json(v));
  Json j{{"group", inst.orders}, {"stabilizers", inst.stabilizers}, {"P", to_json(inst.P)}, {"h", inst.h},
         {"r", inst.r},          {"d", inst.d},                     {"m", to_json(inst.m)}, {"f", f}};
  if (inst.Y.size() > 0) j["Y"] = to_json(inst.Y);
  j["seed"] = inst.seed;
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

IVec ivec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array");
  IVec v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i)) = integer_from_json(j[i]);
  return v;
}

IMat imat_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix");
  if (j.empty()) return IMat(0, 0);
  IMat A(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    IVec r = ivec_from_json(j[i]);
    if (r.size() != A.cols()) throw std::invalid_argument("ragged matrix");
    A.row(static_cast<int>(i)) = r.transpose();
  }
  return A;
}

IntElement int_element_from_json(const Json& j) {
  auto G = make_group(j.at("group").get<std::vector<int>>());
  IntElement x(G);
  for (auto& t : j.at("coeffs")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("group ring term must be [exps, num, den]");
    Integer num = integer_from_json(t[1]), den = integer_from_json(t[2]);
    if (den != 1) throw std::invalid_argument("integral group ring element expected");
    x[G->index(t[0].get<std::vector<int>>())] += num;
  }
  return x;
}

MultElement mult_element_from_json(const Json& j) {
  MultElement x;
  x.level = j.at("level").get<std::int64_t>();
  if (x.level < 1) throw std::invalid_argument("level must be positive");
  for (auto& t : j.at("terms")) {
    auto a = mod(t.at(0).get<std::int64_t>(), x.level);
    if (a == 0) throw std::invalid_argument("symbol index must be nonzero mod the level");
    x.terms[a] += integer_from_json(t.at(1));
  }
  const auto& s = j.at("scalar");
  x.scalar = Rational(integer_from_json(s.at(0)), integer_from_json(s.at(1)));
  return x;
}

AlgebraInstance algebra_instance_from_json(const Json& j) {
  static const std::vector<std::string> keys = {"group", "stabilizers", "P", "h", "r", "d", "m", "f", "Y", "seed"};
  for (auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw std::invalid_argument("unknown instance field " + k);
  AlgebraInstance inst;
  inst.orders = j.at("group").get<std::vector<int>>();
  inst.stabilizers = j.value("stabilizers", std::vector<int>{});
  if (j.contains("P")) inst.P = imat_from_json(j["P"]);
  inst.h = j.at("h").get<int>();
  inst.r = j.at("r").get<int>();
  inst.d = j.at("d").get<int>();
  if (j.contains("m")) inst.m = ivec_from_json(j["m"]);
  if (j.contains("f"))
    for (auto& v : j["f"]) inst.f.push_back(ivec_from_json(v));
  if (j.contains("Y")) inst.Y = imat_from_json(j["Y"]);
  inst.seed = j.value("seed", std::uint64_t{0});
  return inst;
}

Json to_json(const CheckRecord& r) {
  Json j{{"statement", r.statement}, {"instance", r.instance}, {"lhs", r.lhs},      {"rhs", r.rhs},
         {"verdict", r.verdict},     {"mode", r.mode},         {"tolerance", r.tolerance}};
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

CheckRecord record_from(const AlgebraRecord& a) {
  CheckRecord r;
  r.statement = a.statement;
  r.instance = to_json(a.inst);
  r.lhs = to_json(a.lhs);
  r.rhs = to_json(a.rhs);
  r.verdict = a.verdict;
  r.mode = "exact";
  r.tolerance = nullptr;
  return r;
}

}  // namespace starkit
