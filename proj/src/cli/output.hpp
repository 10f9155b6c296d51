#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "concord/certificate.hpp"
#include "concord/factor.hpp"
#include "concord/upsilon.hpp"

namespace concord::cli {

using nlohmann::json;

json to_json(const Rational& value);
json to_json(const Check& check);
json to_json(const std::vector<Check>& checks);
json to_json(const Provenance& provenance);
json to_json(const laurent::Factor& factor);
json to_json(const laurent::FoxMilnorResult& result);

void write_text(const std::string& path, const std::string& text);
void write_json(const std::string& path, const json& document);

/// "t,value" header, then one exact row per breakpoint.
std::string pl_csv(const upsilon::PiecewiseLinearFunction& f);
/// Static plot: one polyline through the breakpoints, coordinates at 1e-6.
std::string pl_svg(const upsilon::PiecewiseLinearFunction& f, const std::string& title);

/// Pads cells into aligned columns.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// Table of named checks with PASS/FAIL marks.
std::string check_table(const std::vector<Check>& checks);

}  // namespace concord::cli
