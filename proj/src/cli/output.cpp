#include "cli/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "concord/errors.hpp"

namespace concord::cli {

json to_json(const Rational& value) { return to_string(value); }

json to_json(const Check& check) {
  return {{"name", check.name}, {"passed", check.passed}, {"witness", check.witness}};
}

json to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

json to_json(const Provenance& provenance) {
  return {{"origin", to_string(provenance.origin)}, {"source", provenance.source}};
}

json to_json(const laurent::Factor& factor) {
  json out{{"polynomial", factor.polynomial.to_string()},
           {"pretty", factor.polynomial.pretty()},
           {"multiplicity", factor.multiplicity},
           {"cyclotomic_index", nullptr}};
  if (factor.cyclotomic_index) out["cyclotomic_index"] = *factor.cyclotomic_index;
  return out;
}

json to_json(const laurent::FoxMilnorResult& result) {
  json unpaired = json::array();
  for (const auto& f : result.unpaired) unpaired.push_back(to_json(f));
  return {{"passes", result.passes},
          {"witness", result.witness ? json(result.witness->to_string()) : json(nullptr)},
          {"unpaired", unpaired}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

void write_json(const std::string& path, const json& document) { write_text(path, document.dump(2) + "\n"); }

std::string pl_csv(const upsilon::PiecewiseLinearFunction& f) {
  std::ostringstream out;
  out << "t,value\n";
  for (const auto& p : f.points()) out << to_string(p.t) << "," << to_string(p.value) << "\n";
  return out.str();
}

namespace {

std::string fixed6(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", v == 0 ? 0.0 : v);
  return buffer;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string pl_svg(const upsilon::PiecewiseLinearFunction& f, const std::string& title) {
  double lo = 0;
  double hi = 0;
  for (const auto& p : f.points()) {
    lo = std::min(lo, to_double(p.value));
    hi = std::max(hi, to_double(p.value));
  }
  double span = std::max(hi - lo, 1.0);
  double pad = 0.05 * span;
  // Plot coordinates: x = t, y = -value, so that larger values are drawn higher.
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" preserveAspectRatio=\"none\" viewBox=\""
      << fixed6(-0.05) << " " << fixed6(-hi - pad) << " " << fixed6(2.1) << " " << fixed6(span + 2 * pad) << "\">\n";
  out << "  <title>" << escape_xml(title) << "</title>\n";
  out << "  <line x1=\"0\" y1=\"0\" x2=\"2\" y2=\"0\" stroke=\"#999\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\" points=\"";
  bool first = true;
  for (const auto& p : f.points()) {
    if (!first) out << " ";
    first = false;
    out << fixed6(to_double(p.t)) << "," << fixed6(-to_double(p.value));
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    return s + "\n";
  };
  std::string out = line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  out += line(rule);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string check_table(const std::vector<Check>& checks) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : checks) rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.witness});
  return table({"result", "check", "witness"}, rows);
}

}  // namespace concord::cli
