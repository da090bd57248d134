#include <sstream>

#include <json.hpp>

#include "mellin/verify.hpp"

namespace mellin::verify {
namespace {

using Json = nlohmann::ordered_json;

Json cell_json(const Cell& c) {
  Json params = Json::object();
  for (const auto& [key, value] : c.params) params[key] = value;
  Json out;
  out["params"] = params;
  out["pass"] = c.pass;
  out["expected"] = c.expected;
  out["actual"] = c.actual;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

std::string describe_params(const Cell& c) {
  std::string out;
  for (const auto& [key, value] : c.params) out += (out.empty() ? "" : ", ") + key + "=" + value;
  return out;
}

}  // namespace

bool VerifyReport::ok() const { return failed() == 0; }

std::size_t VerifyReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.pass ? 1 : 0;
  return n;
}

std::size_t VerifyReport::failed() const { return cells.size() - passed(); }

const Cell* VerifyReport::first_counterexample() const {
  for (const auto& c : cells) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

std::string VerifyReport::to_json(bool include_timing) const {
  Json out;
  out["family"] = family;
  out["range"] = {{"lo", range.lo}, {"hi", range.hi}};
  out["precision_digits"] = precision_digits ? Json(*precision_digits) : Json(nullptr);
  out["tolerance"] = tolerance.empty() ? Json(nullptr) : Json(tolerance);
  out["passed"] = passed();
  out["failed"] = failed();
  out["ok"] = ok();
  const Cell* first = first_counterexample();
  out["first_counterexample"] = first ? cell_json(*first) : Json(nullptr);
  Json list = Json::array();
  for (const auto& c : cells) list.push_back(cell_json(c));
  out["cells"] = list;
  if (include_timing) out["timing_seconds"] = seconds;
  return out.dump(2);
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& c : cells) {
    if (c.pass) continue;
    os << "  FAIL " << family << " [" << describe_params(c) << "] expected " << c.expected << ", got " << c.actual;
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << '\n';
  }
  os << family << ": " << passed() << "/" << cells.size() << " cells pass";
  if (precision_digits) os << " at " << *precision_digits << " digits";
  os << '\n';
  return os.str();
}

}  // namespace mellin::verify
