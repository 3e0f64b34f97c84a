#include "stanley/json_io.hpp"

#include "stanley/errors.hpp"

namespace stanley {

BigInt count_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw invalid_input("count must be a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw invalid_input("count must be a decimal string, got '" + s + "'");
  }
  return BigInt(s);
}

nlohmann::json position_json(const Position& p) {
  return nlohmann::json(std::vector<Pile>(p.piles().begin(), p.piles().end()));
}

nlohmann::json play_json(const Play& play) {
  auto out = nlohmann::json::array();
  for (const auto& p : play) out.push_back(position_json(p));
  return out;
}

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json bounds = nlohmann::json::object();
  for (const auto& [key, value] : report.bounds) bounds[key] = value;
  auto witnesses = nlohmann::json::array();
  for (const auto& m : report.witnesses) {
    witnesses.push_back({{"input", m.input}, {"expected", m.expected}, {"actual", m.actual}});
  }
  return {{"sweep", report.name},
          {"bounds", bounds},
          {"cases", report.cases},
          {"mismatches", report.mismatches},
          {"witnesses", witnesses},
          {"ok", report.ok()}};
}

nlohmann::json fitted_json(const FittedForm& form) {
  auto terms = nlohmann::json::array();
  for (const auto& t : form.terms) {
    terms.push_back({{"x_exp", t.x_exp}, {"y_exp", t.y_exp}, {"coefficient", t.coefficient.str()}});
  }
  return {{"template", form.tmpl.shape()},
          {"constraint", form.tmpl.constraint()},
          {"p", form.p},
          {"q", form.q},
          {"degree", form.degree},
          {"terms", terms},
          {"expression", form.to_string()}};
}

}  // namespace stanley
