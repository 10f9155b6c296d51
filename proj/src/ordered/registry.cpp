#include <fstream>
#include <sstream>

#include <json.hpp>

#include "concord/errors.hpp"
#include "concord/ordered.hpp"

namespace concord::ordered {

using nlohmann::json;

namespace {

constexpr int kDefaultMax = 64;

Provenance published(std::string source) { return {Origin::published, std::move(source)}; }

std::optional<TaggedFlag> read_flag(const json& record, const char* key) {
  if (!record.contains(key)) return std::nullopt;
  const json& f = record.at(key);
  TaggedFlag flag;
  if (f.is_boolean()) {
    flag.value = f.get<bool>();
    return flag;
  }
  flag.value = f.at("value").get<bool>();
  if (f.contains("origin")) flag.provenance = Provenance{parse_origin(f.at("origin").get<std::string>()), f.value("source", "")};
  return flag;
}

json write_flag(const TaggedFlag& flag) {
  json f{{"value", flag.value}};
  if (flag.provenance) {
    f["origin"] = to_string(flag.provenance->origin);
    f["source"] = flag.provenance->source;
  }
  return f;
}

template <typename T>
std::optional<T> read_optional(const json& record, const char* key) {
  if (!record.contains(key) || record.at(key).is_null()) return std::nullopt;
  return record.at(key).get<T>();
}

}  // namespace

Registry Registry::defaults() {
  Registry r;
  for (int n = 2; n <= kDefaultMax; ++n) {
    EpsilonClass j;
    j.label = family_label(knots::Family::J, n);
    j.epsilon_sign = 1;
    j.a1 = 1;
    j.a2 = n;
    j.property_A = TaggedFlag{true, published("[J_n] satisfies Property A for n >= 2")};
    j.dominated_by_next = TaggedFlag{true, published("0 < [J_n] << [J_{n+1}] for n >= 2")};
    j.provenance = published("a+(J_n) = (1, n, ...)");
    r.add(std::move(j));
  }
  for (int n = 2; n <= kDefaultMax; ++n) {
    EpsilonClass l;
    l.label = family_label(knots::Family::L, n);
    l.epsilon_sign = 1;
    l.a1 = 1;
    l.a2 = n;
    l.provenance = published("a1(L_n) = 1, a2(L_n) = n");
    r.add(std::move(l));
  }
  return r;
}

Registry Registry::parse(std::string_view json_text) {
  Registry r;
  try {
    json doc = json::parse(json_text);
    for (const json& rec : doc.at("records")) {
      EpsilonClass e;
      e.label = rec.at("label").get<std::string>();
      e.epsilon_sign = rec.at("epsilon").get<int>();
      e.a1 = read_optional<long>(rec, "a1");
      e.a2 = read_optional<long>(rec, "a2");
      e.genus_bound = read_optional<long>(rec, "genus_bound");
      e.tau_bound = read_optional<long>(rec, "tau_bound");
      e.property_A = read_flag(rec, "property_A");
      e.dominated_by_next = read_flag(rec, "dominated_by_next");
      e.provenance = Provenance{parse_origin(rec.value("origin", "user_supplied")), rec.value("source", "")};
      r.add(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed registry: ") + e.what());
  }
  return r;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open registry '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void Registry::add(EpsilonClass record) {
  for (auto& r : records_) {
    if (r.label == record.label) {
      r = std::move(record);
      return;
    }
  }
  records_.push_back(std::move(record));
}

const EpsilonClass* Registry::find(std::string_view label) const {
  for (const auto& r : records_)
    if (r.label == label) return &r;
  return nullptr;
}

std::string Registry::to_json() const {
  json records = json::array();
  for (const auto& r : records_) {
    json rec{{"label", r.label}, {"epsilon", r.epsilon_sign}};
    if (r.a1) rec["a1"] = *r.a1;
    if (r.a2) rec["a2"] = *r.a2;
    if (r.genus_bound) rec["genus_bound"] = *r.genus_bound;
    if (r.tau_bound) rec["tau_bound"] = *r.tau_bound;
    if (r.property_A) rec["property_A"] = write_flag(*r.property_A);
    if (r.dominated_by_next) rec["dominated_by_next"] = write_flag(*r.dominated_by_next);
    rec["origin"] = to_string(r.provenance.origin);
    rec["source"] = r.provenance.source;
    records.push_back(std::move(rec));
  }
  return json{{"records", records}}.dump(2) + "\n";
}

}  // namespace concord::ordered
