#include "ramseycert/io.hpp"

namespace ramsey {

namespace {
std::string sign_char(int s) { return s == 1 ? "+" : "-"; }
}  // namespace

Json to_json(const EquationSpec& eq) {
  return Json{{"a", to_string(eq.a)},
              {"b", to_string(eq.b)},
              {"poly", eq.p.coefficient_string()}};
}

Json to_json(const Certificate& cert) {
  return Json{{"d", to_string(cert.d)},
              {"u", to_string(cert.u)},
              {"t", to_string(cert.t)},
              {"v", to_string(cert.v)}};
}

Json to_json(const Witness& w) {
  Json out = Json::object();
  if (w.k) out["k"] = to_string(*w.k);
  if (w.q) out["q"] = to_string(*w.q);
  if (w.j) out["j"] = to_string(*w.j);
  return out;
}

Json to_json(const ConditionReport& report) {
  Json conditions = Json::array();
  for (const auto& entry : report.conditions) {
    Json witnesses = Json::array();
    for (const auto& w : entry.witnesses) witnesses.push_back(to_json(w));
    conditions.push_back(Json{{"index", entry.index},
                              {"status", entry.status == ConditionStatus::pass
                                             ? "pass"
                                             : "fail"},
                              {"witnesses", std::move(witnesses)}});
  }
  return Json{{"overall", report.overall ? "pass" : "fail"},
              {"conditions", std::move(conditions)}};
}

Json to_json(const Triple& t) {
  return Json{{"x", to_string(t.x)}, {"y", to_string(t.y)}, {"z", to_string(t.z)}};
}

Json to_json(const MonoSolution& s) {
  return Json{{"x", to_string(s.x)},
              {"y", to_string(s.y)},
              {"z", to_string(s.z)},
              {"colour", sign_char(s.colour)}};
}

Json to_json(const Violation& v) {
  Json out{{"x", to_string(v.triple.x)},
           {"y", to_string(v.triple.y)},
           {"z", to_string(v.triple.z)},
           {"colour", sign_char(v.colour)}};
  if (v.lift) {
    out["lift"] = to_json(*v.lift);
    out["lift_status"] = "found";
  } else {
    out["lift"] = nullptr;
    out["lift_status"] = "none-within-budget";
  }
  return out;
}

Json to_json(const ScalingStep& step) {
  return Json{{"factor", to_string(step.factor)},
              {"original", to_json(step.original)},
              {"reduced", to_json(step.reduced)}};
}

}  // namespace ramsey
