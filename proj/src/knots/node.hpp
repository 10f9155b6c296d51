#pragma once

#include <string>
#include <vector>

#include "concord/knots.hpp"

namespace concord::knots {

struct KnotExpression::Node {
  Kind kind = Kind::unknot;
  int p = 0;
  int q = 0;
  std::vector<KnotExpression> children;
  std::string text;
};

}  // namespace concord::knots
