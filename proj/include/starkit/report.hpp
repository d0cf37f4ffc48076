#pragma once

#include "starkit/darmon.hpp"
#include "starkit/explore.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace starkit {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);  // a number when it fits in 64 bits, else a string
Json to_json(const Rational& x);  // [num, den]
Json to_json(const Real& x, int digits = 30);
Json to_json(const Cx& x, int digits = 30);
Json to_json(const Components& c, int digits = 30);
Json to_json(const IVec& v);
Json to_json(const IMat& A);
// {"group":[d1,...],"coeffs":[[[exps...],num,den],...]}, nonzero terms only
Json to_json(const IntElement& x);
// {"level":N,"terms":[[a,exp],...],"scalar":[num,den]}
Json to_json(const MultElement& x);
Json to_json(const QuadElement& x);
Json to_json(const AlgebraInstance& inst);

Integer integer_from_json(const Json& j);
IVec ivec_from_json(const Json& j);
IMat imat_from_json(const Json& j);
IntElement int_element_from_json(const Json& j);
MultElement mult_element_from_json(const Json& j);
AlgebraInstance algebra_instance_from_json(const Json& j);

// One verified statement. tolerance is null for exact checks.
struct CheckRecord {
  std::string statement;
  Json instance = Json::object();
  Json lhs, rhs;
  std::string verdict;  // pass | fail | trivial
  std::string mode;     // exact | numeric
  Json tolerance;
  Json witnesses = Json::object();
};

Json to_json(const CheckRecord& r);
CheckRecord record_from(const AlgebraRecord& a);

}  // namespace starkit
