#pragma once

#include <json.hpp>

#include "ramseycert/certificate.hpp"
#include "ramseycert/colouring.hpp"
#include "ramseycert/construct.hpp"

namespace ramsey {

// All integers are serialized as decimal strings so arbitrary-precision
// values survive JSON round-trips losslessly.
using Json = nlohmann::ordered_json;

Json to_json(const EquationSpec& eq);
Json to_json(const Certificate& cert);
Json to_json(const Witness& w);
Json to_json(const ConditionReport& report);
Json to_json(const Triple& t);
Json to_json(const MonoSolution& s);
Json to_json(const Violation& v);
Json to_json(const ScalingStep& step);

}  // namespace ramsey
