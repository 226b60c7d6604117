#include "gmalg/families.hpp"

namespace gmalg {

std::optional<MatrixUnit> parse_unit_label(const std::string& label) {
  auto s = label.substr(label.find(':') == std::string::npos ? 0 : label.find(':') + 1);
  if (const auto star = s.find('*'); star != std::string::npos) s = s.substr(0, star);
  if (s.size() < 3 || s[0] != 'E') return std::nullopt;
  s = s.substr(1);
  try {
    if (const auto comma = s.find(','); comma != std::string::npos) {
      return MatrixUnit{std::stoi(s.substr(0, comma)) - 1, std::stoi(s.substr(comma + 1)) - 1};
    }
    if (s.size() != 2 || !std::isdigit(static_cast<unsigned char>(s[0])) ||
        !std::isdigit(static_cast<unsigned char>(s[1])))
      return std::nullopt;
    return MatrixUnit{s[0] - '1', s[1] - '1'};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace gmalg
