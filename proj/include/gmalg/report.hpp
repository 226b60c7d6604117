#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gmalg {

/// One checked condition. `anchor` is the identity being tested, written out.
struct CheckLine {
  std::string id;
  std::string anchor;
  bool pass = true;
  std::string witness;
};

/// Ordered list of checks plus free-form facts. Rendering is deterministic.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<CheckLine>& lines() const { return lines_; }
  const std::vector<std::pair<std::string, std::string>>& facts() const { return facts_; }

  void add(CheckLine line) { lines_.push_back(std::move(line)); }
  void check(const std::string& id, const std::string& anchor, bool pass, const std::string& witness = {}) {
    lines_.push_back({id, anchor, pass, pass ? std::string{} : witness});
  }
  void fact(const std::string& key, const std::string& value) { facts_.emplace_back(key, value); }
  void append(const Report& other, const std::string& prefix = {});

  bool all_pass() const;
  const CheckLine* first_failure() const;
  const CheckLine* find(const std::string& id) const;

  std::string json(int indent = 2) const;
  std::string markdown() const;

 private:
  std::string title_;
  std::vector<CheckLine> lines_;
  std::vector<std::pair<std::string, std::string>> facts_;
};

}  // namespace gmalg
