#include "gmalg/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gmalg {

void Report::append(const Report& other, const std::string& prefix) {
  for (auto line : other.lines_) {
    line.id = prefix + line.id;
    lines_.push_back(std::move(line));
  }
  for (const auto& [k, v] : other.facts_) facts_.emplace_back(prefix + k, v);
}

bool Report::all_pass() const {
  return std::all_of(lines_.begin(), lines_.end(), [](const CheckLine& l) { return l.pass; });
}

const CheckLine* Report::first_failure() const {
  for (const auto& l : lines_)
    if (!l.pass) return &l;
  return nullptr;
}

const CheckLine* Report::find(const std::string& id) const {
  for (const auto& l : lines_)
    if (l.id == id) return &l;
  return nullptr;
}

std::string Report::json(int indent) const {
  nlohmann::ordered_json doc;
  doc["schema"] = "gmalg.report/1";
  doc["title"] = title_;
  doc["all_pass"] = all_pass();
  auto facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : facts_) facts[k] = v;
  doc["facts"] = facts;
  auto lines = nlohmann::ordered_json::array();
  for (const auto& l : lines_) {
    nlohmann::ordered_json j;
    j["id"] = l.id;
    j["anchor"] = l.anchor;
    j["pass"] = l.pass;
    j["witness"] = l.witness;
    lines.push_back(std::move(j));
  }
  doc["checks"] = std::move(lines);
  return doc.dump(indent) + "\n";
}

namespace {

std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string Report::markdown() const {
  std::ostringstream os;
  if (!title_.empty()) os << "## " << cell(title_) << "\n\n";
  for (const auto& [k, v] : facts_) os << "- " << cell(k) << ": " << cell(v) << "\n";
  if (!facts_.empty()) os << "\n";
  os << "| condition | identity | result | witness |\n";
  os << "|---|---|---|---|\n";
  for (const auto& l : lines_) {
    os << "| " << cell(l.id) << " | " << cell(l.anchor) << " | " << (l.pass ? "pass" : "FAIL") << " | "
       << cell(l.witness) << " |\n";
  }
  return os.str();
}

}  // namespace gmalg
