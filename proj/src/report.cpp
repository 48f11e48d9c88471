#include "pathdepth/report.hpp"

#include <algorithm>
#include <iomanip>
#include <tuple>

namespace pathdepth {

nlohmann::json ClaimParams::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (n) j["n"] = *n;
  if (t) j["t"] = *t;
  if (trial) j["trial"] = *trial;
  if (field) j["field"] = *field;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

bool operator<(const ClaimParams& a, const ClaimParams& b) {
  return std::tie(a.n, a.t, a.trial, a.field, a.detail) < std::tie(b.n, b.t, b.trial, b.field, b.detail);
}

ClaimCheck::ClaimCheck(std::string id_, ClaimParams params_, nlohmann::json expected_, nlohmann::json computed_)
    : id(std::move(id_)),
      params(std::move(params_)),
      expected(std::move(expected_)),
      computed(std::move(computed_)),
      pass(expected == computed) {}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const ClaimCheck& a, const ClaimCheck& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.params < b.params;
  });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"id", c.id},
                    {"params", c.params.to_json()},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"pass", c.pass}});
  }
  return {{"config", config}, {"checks", std::move(list)}, {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

namespace {

std::string compact(const nlohmann::json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string params_text(const ClaimParams& p) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (p.n) add("n=" + std::to_string(*p.n));
  if (p.t) add("t=" + std::to_string(*p.t));
  if (p.trial) add("trial=" + std::to_string(*p.trial));
  if (p.field) add(*p.field);
  if (!p.detail.empty()) add(p.detail);
  return out;
}

}  // namespace

void VerificationReport::print_table(std::ostream& out) const {
  std::size_t id_width = 5, param_width = 6;
  for (const auto& c : checks) {
    id_width = std::max(id_width, c.id.size());
    param_width = std::max(param_width, std::min<std::size_t>(params_text(c.params).size(), 48));
  }
  out << std::left << std::setw(static_cast<int>(id_width)) << "claim" << "  "
      << std::setw(static_cast<int>(param_width)) << "params" << "  expected -> computed\n";
  for (const auto& c : checks) {
    out << std::left << std::setw(static_cast<int>(id_width)) << c.id << "  "
        << std::setw(static_cast<int>(param_width)) << params_text(c.params) << "  "
        << compact(c.expected) << " -> " << compact(c.computed) << "  " << (c.pass ? "PASS" : "FAIL")
        << '\n';
  }
  out << "summary: " << passed() << " passed, " << failed() << " failed\n";
}

}  // namespace pathdepth
