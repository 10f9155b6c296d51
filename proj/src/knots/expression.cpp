#include <algorithm>
#include <numeric>

#include "concord/errors.hpp"
#include "knots/node.hpp"

namespace concord::knots {

namespace {

// Sort key for summands: positive terms before their mirrors, otherwise by text.
std::pair<std::string_view, bool> summand_key(const KnotExpression& k) {
  std::string_view text = k.to_string();
  bool mirrored = k.kind() == KnotExpression::Kind::mirror;
  if (mirrored) text.remove_prefix(1);
  return {text, mirrored};
}

}  // namespace

KnotExpression KnotExpression::unknot() {
  static const KnotExpression u(std::make_shared<const Node>(Node{Kind::unknot, 0, 0, {}, "U"}));
  return u;
}

KnotExpression KnotExpression::torus(int p, int q) {
  if (p < 2 || q < 2) throw ValidationError("torus knot T(p,q) requires p, q >= 2");
  if (std::gcd(p, q) != 1) throw ValidationError("torus knot T(p,q) requires gcd(p,q) = 1");
  if (p > q) std::swap(p, q);
  std::string text = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return KnotExpression(std::make_shared<const Node>(Node{Kind::torus, p, q, {}, std::move(text)}));
}

KnotExpression KnotExpression::cable(const KnotExpression& companion, int p, int q) {
  if (p < 1) throw ValidationError("cable requires p >= 1");
  if (q < 0) throw ValidationError("negative cable parameter q is not supported");
  if (std::gcd(p, q) != 1) throw ValidationError("cable requires gcd(p,q) = 1");
  if (p == 1) return companion;
  if (companion.kind() == Kind::unknot) return q >= 2 ? torus(p, q) : unknot();
  std::string text = "Cable(" + companion.to_string() + ";" + std::to_string(p) + "," + std::to_string(q) + ")";
  return KnotExpression(std::make_shared<const Node>(Node{Kind::cable, p, q, {companion}, std::move(text)}));
}

KnotExpression KnotExpression::whitehead_double(const KnotExpression& companion) {
  std::string text = "Wh(" + companion.to_string() + ")";
  return KnotExpression(std::make_shared<const Node>(Node{Kind::whitehead, 0, 0, {companion}, std::move(text)}));
}

KnotExpression KnotExpression::mirror(const KnotExpression& knot) {
  switch (knot.kind()) {
    case Kind::unknot:
      return knot;
    case Kind::mirror:
      return knot.inner();
    case Kind::sum: {
      std::vector<KnotExpression> mirrored;
      for (const auto& t : knot.terms()) mirrored.push_back(mirror(t));
      return sum(mirrored);
    }
    default:
      break;
  }
  std::string text = "-" + knot.to_string();
  return KnotExpression(std::make_shared<const Node>(Node{Kind::mirror, 0, 0, {knot}, std::move(text)}));
}

KnotExpression KnotExpression::sum(const std::vector<KnotExpression>& terms) {
  std::vector<KnotExpression> flat;
  for (const auto& t : terms) {
    if (t.kind() == Kind::sum)
      flat.insert(flat.end(), t.terms().begin(), t.terms().end());
    else if (t.kind() != Kind::unknot)
      flat.push_back(t);
  }
  if (flat.empty()) return unknot();
  if (flat.size() == 1) return flat.front();
  std::stable_sort(flat.begin(), flat.end(),
                   [](const KnotExpression& a, const KnotExpression& b) { return summand_key(a) < summand_key(b); });
  std::string text;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) text += " # ";
    text += flat[i].to_string();
  }
  return KnotExpression(std::make_shared<const Node>(Node{Kind::sum, 0, 0, std::move(flat), std::move(text)}));
}

KnotExpression::Kind KnotExpression::kind() const { return node_->kind; }
int KnotExpression::p() const { return node_->p; }
int KnotExpression::q() const { return node_->q; }

const KnotExpression& KnotExpression::inner() const {
  if (node_->kind != Kind::cable && node_->kind != Kind::whitehead && node_->kind != Kind::mirror)
    throw ValidationError("expression '" + node_->text + "' has no inner knot");
  return node_->children.front();
}

const std::vector<KnotExpression>& KnotExpression::terms() const {
  if (node_->kind != Kind::sum) throw ValidationError("expression '" + node_->text + "' is not a sum");
  return node_->children;
}

const std::string& KnotExpression::to_string() const { return node_->text; }

}  // namespace concord::knots
