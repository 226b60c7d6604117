#include "gmalg/io.hpp"

#include <fstream>
#include <sstream>

namespace gmalg {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::BadInput, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << text;
}

RingSpec ring_from_json(const Json& j) {
  const auto kind = detail::field(j, "kind").get<std::string>();
  if (kind == "Zmod") return RingSpec::zmod(detail::field(j, "n").get<std::int64_t>());
  if (kind == "Q") return RingSpec::rationals();
  fail(ErrorKind::BadInput, "unknown ring kind \"" + kind + "\"");
}

Json ring_to_json(const RingSpec& spec) {
  Json j;
  if (spec.kind == RingKind::Zmod) {
    j["kind"] = "Zmod";
    j["n"] = spec.n;
  } else {
    j["kind"] = "Q";
  }
  return j;
}

RingSpec document_ring(const Json& doc) { return ring_from_json(detail::field(doc, "ring")); }

void expect_schema(const Json& doc, const char* expected) {
  if (!doc.is_object()) fail(ErrorKind::BadInput, "document must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != expected) {
    fail(ErrorKind::BadInput, "expected schema " + std::string(expected) + ", got " + doc.at("schema").dump());
  }
}

}  // namespace gmalg
