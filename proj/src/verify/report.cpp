#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "stcalc/verify.hpp"

namespace stcalc::verify {

namespace {

using nlohmann::json;

json run_to_json(const RunRecord& r) {
  json j = {{"mode", r.mode}, {"outcome", r.outcome}};
  if (r.index) j["index"] = *r.index;
  if (!r.lhs.empty()) j["lhs"] = r.lhs;
  if (!r.rhs.empty()) j["rhs"] = r.rhs;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

RunRecord run_from_json(const json& j) {
  RunRecord r;
  r.mode = j.at("mode").get<std::string>();
  r.outcome = j.at("outcome").get<std::string>();
  if (j.contains("index")) r.index = j.at("index").get<std::size_t>();
  r.lhs = j.value("lhs", "");
  r.rhs = j.value("rhs", "");
  r.detail = j.value("detail", "");
  return r;
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw DomainError("unknown status '" + s + "'");
}

Expectation expectation_from(const std::string& s) {
  if (s == "holds") return Expectation::holds;
  if (s == "refuted") return Expectation::refuted;
  throw DomainError("unknown expectation '" + s + "'");
}

json case_to_json(const CaseResult& c) {
  json j = {{"id", c.id},
            {"section", c.section},
            {"citation", c.citation},
            {"note", c.note},
            {"ring", c.ring},
            {"expectation", expectation_name(c.expect)},
            {"status", status_name(c.status)},
            {"reason", c.reason},
            {"items", c.items},
            {"millis", c.millis}};
  if (c.witness) {
    j["witness"] = {{"mode", c.witness->mode},
                    {"index", c.witness->index},
                    {"lhs", c.witness->lhs},
                    {"rhs", c.witness->rhs}};
  } else {
    j["witness"] = nullptr;
  }
  j["error"] = c.error ? json(*c.error) : json(nullptr);
  j["runs"] = json::array();
  for (const auto& r : c.runs) j["runs"].push_back(run_to_json(r));
  return j;
}

CaseResult case_from_json(const json& j) {
  CaseResult c;
  c.id = j.at("id").get<std::string>();
  c.section = j.at("section").get<std::string>();
  c.citation = j.at("citation").get<std::string>();
  c.note = j.at("note").get<std::string>();
  c.ring = j.at("ring").get<std::string>();
  c.expect = expectation_from(j.at("expectation").get<std::string>());
  c.status = status_from(j.at("status").get<std::string>());
  c.reason = j.at("reason").get<std::string>();
  c.items = j.at("items").get<std::size_t>();
  c.millis = j.at("millis").get<double>();
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    c.witness = Witness{w.at("mode").get<std::string>(), w.at("index").get<std::size_t>(),
                        w.at("lhs").get<std::string>(), w.at("rhs").get<std::string>()};
  }
  if (!j.at("error").is_null()) c.error = j.at("error").get<std::string>();
  for (const auto& r : j.at("runs")) c.runs.push_back(run_from_json(r));
  return c;
}

std::string fmt_millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

}  // namespace

std::string to_json_string(const VerifyReport& r, int indent) {
  json j = {{"tool", "st-calc"},
            {"kind", "verify"},
            {"order", r.order},
            {"seed", r.seed},
            {"filter", r.filter},
            {"threads", r.threads},
            {"summary",
             {{"total", r.cases.size()},
              {"pass", r.count(Status::pass)},
              {"fail", r.count(Status::fail)},
              {"skipped", r.count(Status::skipped)}}},
            {"total_millis", r.total_millis}};
  j["cases"] = json::array();
  for (const auto& c : r.cases) j["cases"].push_back(case_to_json(c));
  return j.dump(indent);
}

VerifyReport from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed report: ") + ex.what());
  }
  try {
    VerifyReport r;
    r.order = j.at("order").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.filter = j.at("filter").get<std::string>();
    r.threads = j.at("threads").get<unsigned>();
    r.total_millis = j.at("total_millis").get<double>();
    for (const auto& c : j.at("cases")) r.cases.push_back(case_from_json(c));
    return r;
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed report: ") + ex.what());
  }
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verify: order " << r.order << ", seed " << r.seed;
  if (!r.filter.empty()) os << ", filter '" << r.filter << "'";
  os << ", " << r.cases.size() << " cases\n";
  for (const auto& c : r.cases) {
    std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
    os << tag << "  " << c.id;
    if (c.expect == Expectation::refuted) os << "  [printed form, expected to fail]";
    os << "  (" << fmt_millis(c.millis) << ")\n";
    if (!c.reason.empty() && (c.status != Status::pass || c.expect == Expectation::refuted)) {
      os << "      " << c.reason << "\n";
    }
    if (c.witness && c.status == Status::fail) {
      os << "      at " << c.witness->mode << ": lhs = " << c.witness->lhs << "\n"
         << "      " << std::string(c.witness->mode.size() + 3, ' ') << "rhs = " << c.witness->rhs << "\n";
    }
    if (c.error) os << "      error: " << *c.error << "\n";
  }
  os << "passed " << r.count(Status::pass) << ", failed " << r.count(Status::fail) << ", skipped "
     << r.count(Status::skipped) << " in " << fmt_millis(r.total_millis) << "\n";
  return os.str();
}

}  // namespace stcalc::verify
