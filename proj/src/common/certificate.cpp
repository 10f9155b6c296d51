#include "concord/certificate.hpp"

#include <algorithm>

#include "concord/errors.hpp"

namespace concord {

std::string to_string(Origin origin) {
  switch (origin) {
    case Origin::computed:
      return "computed";
    case Origin::published:
      return "published";
    case Origin::user_supplied:
      return "user_supplied";
  }
  return "computed";
}

Origin parse_origin(const std::string& text) {
  if (text == "computed") return Origin::computed;
  if (text == "published") return Origin::published;
  if (text == "user-supplied" || text == "user_supplied") return Origin::user_supplied;
  throw ValidationError("unknown provenance origin '" + text + "'");
}

bool all_passed(const std::vector<Check>& checks) {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> failed_checks(const std::vector<Check>& checks) {
  std::vector<std::string> names;
  for (const auto& c : checks)
    if (!c.passed) names.push_back(c.name);
  return names;
}

}  // namespace concord
