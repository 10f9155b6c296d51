#pragma once

#include <string>
#include <vector>

namespace concord {

/// Where a datum came from. Published values are transcribed, never computed.
enum class Origin { computed, published, user_supplied };

struct Provenance {
  Origin origin = Origin::computed;
  std::string source;
};

std::string to_string(Origin origin);
Origin parse_origin(const std::string& text);

/// One named hypothesis of a certificate together with the value that decided it.
struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

/// True iff every check passed (and there is at least one).
bool all_passed(const std::vector<Check>& checks);

/// Names of the failed checks, in order.
std::vector<std::string> failed_checks(const std::vector<Check>& checks);

}  // namespace concord
