#include "cli/commands.hpp"

#include <numeric>
#include <sstream>

#include "cli/output.hpp"
#include "concord/errors.hpp"
#include "concord/factor.hpp"
#include "concord/knots.hpp"
#include "concord/ordered.hpp"
#include "concord/signature.hpp"
#include "concord/upsilon.hpp"

namespace concord::cli::commands {

namespace {

using knots::KnotExpression;
using laurent::LaurentPolynomial;

CommandResult result(std::string command, Status status, json payload, std::vector<Provenance> provenance = {}) {
  return {status, std::move(command), std::move(payload), std::move(provenance)};
}

std::string factored(const laurent::Factorization& f) {
  if (f.factors.empty()) return f.sign < 0 ? "-1" : "1";
  std::string s = f.sign < 0 ? "-" : "";
  if (f.shift != 0) s += "t^" + std::to_string(f.shift) + " ";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& factor = f.factors[i];
    if (i > 0) s += " ";
    s += "(" + factor.polynomial.pretty() + ")";
    if (factor.multiplicity > 1) s += "^" + std::to_string(factor.multiplicity);
  }
  return s;
}

json factor_list(const std::vector<laurent::Factor>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back(to_json(f));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::pair<int, int> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("pair '" + text + "' must look like p,q");
  try {
    std::size_t used_p = 0;
    std::size_t used_q = 0;
    int p = std::stoi(text.substr(0, comma), &used_p);
    int q = std::stoi(text.substr(comma + 1), &used_q);
    if (used_p != comma || used_q != text.size() - comma - 1) throw std::invalid_argument("trailing");
    return {p, q};
  } catch (const std::logic_error&) {
    throw ValidationError("pair '" + text + "' must look like p,q");
  }
}

ordered::Registry load_registry(const Options& o) {
  return o.registry ? ordered::Registry::load(*o.registry) : ordered::Registry::defaults();
}

json hint_json(const std::optional<knots::SliceGenusHint>& hint) {
  if (!hint) return nullptr;
  return {{"value", hint->value}, {"provenance", to_json(hint->provenance)}};
}

}  // namespace

CommandResult alexander(const Options& o, std::ostream& out) {
  KnotExpression knot = KnotExpression::parse(o.expression);
  LaurentPolynomial delta = knots::alexander(knot);
  laurent::Factorization fz = laurent::factor(delta);
  json payload{{"knot", knot.to_string()},
               {"polynomial", delta.to_string()},
               {"pretty", delta.pretty()},
               {"factored", factored(fz)},
               {"breadth", laurent::breadth(delta)}};
  out << "knot        " << knot.to_string() << "\n"
      << "alexander   " << delta.pretty() << "\n"
      << "factored    " << factored(fz) << "\n"
      << "breadth     " << laurent::breadth(delta) << "\n";
  if (o.fox_milnor) {
    auto fm = laurent::fox_milnor(delta);
    payload["fox_milnor"] = to_json(fm);
    out << "fox-milnor  " << (fm.passes ? "passes" : "fails");
    if (fm.witness) out << ", witness f(t) = " << fm.witness->pretty();
    for (const auto& f : fm.unpaired) out << ", unpaired (" << f.polynomial.pretty() << ")^" << f.multiplicity;
    out << "\n";
  }
  return result("alexander", Status::ok, payload);
}

CommandResult genus(const Options& o, std::ostream& out) {
  KnotExpression knot = KnotExpression::parse(o.expression);
  auto g = knots::genus(knot);
  out << "knot               " << knot.to_string() << "\n"
      << "seifert genus      " << g.seifert_genus << "\n"
      << "max summand genus  " << g.summand_max_genus << "\n";
  return result("genus", Status::ok,
                {{"knot", knot.to_string()},
                 {"seifert_genus", g.seifert_genus},
                 {"summand_max_genus", g.summand_max_genus},
                 {"slice_genus_hint", hint_json(g.slice_genus_hint)}});
}

CommandResult gsp_bound(const Options& o, std::ostream& out) {
  KnotExpression knot = KnotExpression::parse(o.expression);
  auto range = knots::gsp_bound_of_knot(knot);
  auto lower = laurent::gsp_lower_bound(knots::alexander(knot));
  out << "knot   " << knot.to_string() << "\n"
      << "lower  " << to_string(range.lower);
  if (lower.witness) out << "  (odd-multiplicity factor " << lower.witness->polynomial.pretty() << ")";
  out << "\nupper  " << to_string(range.upper) << "  (largest summand genus)\n";
  return result("gsp-bound", Status::ok,
                {{"knot", knot.to_string()},
                 {"lower", to_json(range.lower)},
                 {"upper", to_json(range.upper)},
                 {"witness_factor", lower.witness ? to_json(*lower.witness) : json(nullptr)}});
}

CommandResult fox_milnor(const Options& o, std::ostream& out) {
  LaurentPolynomial f = LaurentPolynomial::parse(o.polynomial);
  auto fm = laurent::fox_milnor(f);
  out << "polynomial  " << f.pretty() << "\n"
      << "factored    " << factored(fm.factorization) << "\n"
      << "fox-milnor  " << (fm.passes ? "passes" : "fails") << "\n";
  if (fm.witness) out << "witness     " << fm.witness->pretty() << "\n";
  for (const auto& u : fm.unpaired) out << "unpaired    (" << u.polynomial.pretty() << ")^" << u.multiplicity << "\n";
  json payload = to_json(fm);
  payload["polynomial"] = f.to_string();
  return result("fox-milnor", Status::ok, payload);
}

CommandResult factor(const Options& o, std::ostream& out) {
  LaurentPolynomial f = LaurentPolynomial::parse(o.polynomial);
  laurent::FactorOptions options;
  options.cyclotomic_bound = o.cyclotomic_bound;
  auto fz = laurent::factor(f, options);
  std::vector<std::vector<std::string>> rows;
  for (const auto& x : fz.factors)
    rows.push_back({x.polynomial.pretty(), std::to_string(x.multiplicity),
                    x.cyclotomic_index ? "Phi_" + std::to_string(*x.cyclotomic_index) : "-"});
  out << "polynomial  " << f.pretty() << "\nunit        " << (fz.sign < 0 ? "-" : "+") << "t^" << fz.shift << "\n\n"
      << table({"factor", "multiplicity", "cyclotomic"}, rows);
  return result("factor", Status::ok,
                {{"polynomial", f.to_string()},
                 {"sign", fz.sign},
                 {"shift", fz.shift},
                 {"factors", factor_list(fz.factors)}});
}

CommandResult sig_jumps(const Options& o, std::ostream& out) {
  KnotExpression knot = KnotExpression::parse(o.expression);
  auto jumps = signature::expression_jumps(knot);
  json list = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& [x, j] : jumps.jumps()) {
    list.push_back({{"x", to_json(x)}, {"jump", j}});
    rows.push_back({to_string(x), std::to_string(j)});
  }
  out << "knot  " << knot.to_string() << "\n\n" << table({"x", "jump"}, rows);
  json payload{{"knot", knot.to_string()}, {"jumps", list}};
  if (o.at) {
    Rational x = parse_rational(*o.at);
    try {
      int value = signature::signature_at(jumps, x);
      payload["signature"] = {{"x", to_json(x)}, {"value", value}, {"left", nullptr}, {"right", nullptr}};
      out << "\nsignature at x = " << to_string(x) << ": " << value << "\n";
    } catch (const signature::JumpPointError& e) {
      payload["signature"] = {{"x", to_json(x)}, {"value", nullptr}, {"left", e.left()}, {"right", e.right()}};
      out << "\nx = " << to_string(x) << " is a jump point: left limit " << e.left() << ", right limit " << e.right()
          << "\n";
    }
  }
  return result("sig-jumps", Status::ok, payload);
}

CommandResult sig_certify(const Options& o, std::ostream& out) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : o.pairs) pairs.push_back(parse_pair(p));
  auto cert = signature::torus_independence_certificate(pairs, o.k);
  json generators = json::array();
  for (auto [p, q] : cert.generators) generators.push_back({p, q});
  out << check_table(cert.checks) << "\ncertificate " << (cert.valid() ? "VALID" : "INVALID") << "\n";
  return result("sig-certify", cert.valid() ? Status::ok : Status::invalid,
                {{"generators", generators}, {"k", cert.k}, {"valid", cert.valid()}, {"checks", to_json(cert.checks)}});
}

CommandResult upsilon(const Options& o, std::ostream& out) {
  KnotExpression knot = KnotExpression::parse(o.expression);
  auto f = upsilon::upsilon_of(knot);
  json points = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : f.points()) {
    points.push_back({{"t", to_json(p.t)}, {"value", to_json(p.value)}});
    rows.push_back({to_string(p.t), to_string(p.value)});
  }
  json singularities = json::array();
  for (const auto& t : f.singularities()) {
    Rational jump = upsilon::delta_prime(f, t);
    Rational hom = upsilon::oss_hom(f, t.get_num().get_si(), t.get_den().get_si());
    singularities.push_back({{"t", to_json(t)}, {"delta_prime", to_json(jump)}, {"oss_hom", to_json(hom)}});
  }
  out << "knot  " << knot.to_string() << "\n\n" << table({"t", "Upsilon(t)"}, rows);
  out << "\nslope at 0+: " << to_string(f.right_slope(0)) << "\n";
  if (o.csv_path) write_text(*o.csv_path, pl_csv(f));
  if (o.svg_path) write_text(*o.svg_path, pl_svg(f, "Upsilon of " + knot.to_string()));
  return result("upsilon", Status::ok,
                {{"knot", knot.to_string()},
                 {"breakpoints", points},
                 {"singularities", singularities},
                 {"slope_at_zero", to_json(f.right_slope(0))}});
}

CommandResult upsilon_obstruct(const Options& o, std::ostream& out) {
  std::string source;
  std::vector<Provenance> provenance;
  upsilon::UpsilonSource data = upsilon::PiecewiseLinearFunction();
  if (o.jprime) {
    auto germ = upsilon::jprime_germ(*o.jprime);
    source = "J'_" + std::to_string(*o.jprime) + " (germ)";
    provenance.push_back(germ.provenance);
    data = germ;
  } else {
    KnotExpression knot = KnotExpression::parse(o.expression);
    source = knot.to_string();
    data = upsilon::upsilon_of(knot);
  }
  auto r = upsilon::obstruct_Gn(data, o.n);
  out << "source   " << source << "\nagainst  G_" << o.n << "\nverdict  " << upsilon::to_string(r.verdict) << "\nreason   "
      << r.reason << "\n";
  return result("upsilon-obstruct", r.verdict == upsilon::Verdict::inconclusive ? Status::inconclusive : Status::ok,
                {{"source", source},
                 {"n", o.n},
                 {"verdict", upsilon::to_string(r.verdict)},
                 {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
                 {"reason", r.reason}},
                provenance);
}

CommandResult upsilon_certify(const Options& o, std::ostream& out) {
  auto cert = upsilon::summand_certificate_upsilon(o.k, o.max_index);
  json rows = json::array();
  json columns = json::array();
  json points = json::array();
  json matrix = json::array();
  std::vector<std::string> header{"knot \\ phi_m"};
  std::vector<std::vector<std::string>> text_rows;
  for (int m = cert.k; m <= cert.max_index; ++m) {
    columns.push_back("phi_" + std::to_string(m));
    points.push_back(to_string(make_rational(2, 2L * m - 1)));
    header.push_back("m=" + std::to_string(m));
  }
  for (std::size_t i = 0; i < cert.matrix.size(); ++i) {
    std::string label = "J'_" + std::to_string(cert.k + static_cast<int>(i));
    rows.push_back(label);
    json row = json::array();
    std::vector<std::string> cells{label};
    for (const auto& e : cert.matrix[i]) {
      row.push_back(e ? to_json(*e) : json(nullptr));
      cells.push_back(e ? to_string(*e) : "?");
    }
    matrix.push_back(row);
    text_rows.push_back(cells);
  }
  out << table(header, text_rows) << "\n" << check_table(cert.checks) << "\ncertificate "
      << (cert.valid() ? "VALID" : "INVALID") << "\n";
  return result("upsilon-certify", cert.valid() ? Status::ok : Status::invalid,
                {{"k", cert.k},
                 {"max", cert.max_index},
                 {"valid", cert.valid()},
                 {"rows", rows},
                 {"columns", columns},
                 {"evaluation_points", points},
                 {"matrix", matrix},
                 {"checks", to_json(cert.checks)}},
                cert.provenance);
}

CommandResult ordered_demo(const Options& o, std::ostream& out) {
  if (o.rank < 2) throw ValidationError("rank must be >= 2");
  if (o.trials < 1) throw ValidationError("trials must be >= 1");
  std::mt19937_64 rng(o.seed);
  auto suites = ordered::quotient_property_suite(o.rank, o.trials, rng);
  bool clean = true;
  json suite_list = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : suites) {
    clean = clean && s.failures == 0;
    suite_list.push_back(
        {{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"first_failure", s.first_failure}});
    rows.push_back({s.name, std::to_string(s.cases), std::to_string(s.failures)});
  }

  json examples = json::array();
  std::vector<std::vector<std::string>> example_rows;
  for (const auto& a : {ordered::LexElement{1, -4, 2}, ordered::LexElement{2, 0}, ordered::LexElement{-1, 3}}) {
    auto r = ordered::property_A_check(a, rng);
    examples.push_back({{"element", a.to_string()},
                        {"holds", r.holds},
                        {"counterexample", r.counterexample ? json(r.counterexample->to_string()) : json(nullptr)},
                        {"confirmations", r.confirmations},
                        {"samples", r.samples}});
    example_rows.push_back({a.to_string(), yes_no(r.holds), r.counterexample ? r.counterexample->to_string() : "-"});
  }

  std::vector<ordered::LexElement> chain;
  for (std::size_t i = o.rank; i-- > 0;) chain.push_back(ordered::LexElement::unit(i));
  auto verdict = ordered::chain_independence(chain, o.trials, rng);
  clean = clean && verdict.status() == "verified";

  out << "lex model rank " << o.rank << ", seed " << o.seed << "\n\n"
      << table({"suite", "cases", "failures"}, rows) << "\n"
      << table({"element", "Property A", "counterexample"}, example_rows) << "\nchain of unit vectors: "
      << verdict.status() << " over " << verdict.trials_run << " combinations\n";
  return result("ordered-demo", clean ? Status::ok : Status::invalid,
                {{"rank", o.rank},
                 {"trials", o.trials},
                 {"seed", o.seed},
                 {"suites", suite_list},
                 {"property_A", examples},
                 {"chain", {{"status", verdict.status()}, {"trials", verdict.trials_run}}}});
}

CommandResult eps_obstruct(const Options& o, std::ostream& out) {
  ordered::EpsilonClass record;
  if (o.label) {
    auto registry = load_registry(o);
    const auto* found = registry.find(*o.label);
    if (!found) throw InsufficientData("no registry record for '" + *o.label + "'");
    record = *found;
  } else {
    if (!o.a1) throw ValidationError("give --label or --a1 (with --a2)");
    record.label = "user record";
    record.epsilon_sign = 1;
    record.a1 = o.a1;
    record.a2 = o.a2;
    record.provenance = {Origin::user_supplied, "command line"};
  }
  auto r = ordered::epsilon_obstruction(record, o.n);
  out << "record   " << record.label << " a1 = " << (record.a1 ? std::to_string(*record.a1) : "?")
      << ", a2 = " << (record.a2 ? std::to_string(*record.a2) : "?") << "\nagainst  G_" << o.n << "\nverdict  "
      << ordered::to_string(r.verdict) << "\nreason   " << r.reason << "\n";
  return result("eps-obstruct", r.verdict == ordered::EpsilonVerdict::obstructs ? Status::ok : Status::inconclusive,
                {{"label", record.label},
                 {"a1", record.a1 ? json(*record.a1) : json(nullptr)},
                 {"a2", record.a2 ? json(*record.a2) : json(nullptr)},
                 {"n", o.n},
                 {"a2_upper_bound", ordered::a2_upper_bound(o.n)},
                 {"verdict", ordered::to_string(r.verdict)},
                 {"reason", r.reason}},
                {record.provenance});
}

CommandResult eps_certify(const Options& o, std::ostream& out) {
  auto registry = load_registry(o);
  knots::Family fam = knots::parse_family(o.family);
  auto cert = ordered::summand_certificate_epsilon(o.k, o.max_index, registry, fam, o.seed);
  json records = json::array();
  for (const auto& r : cert.records) {
    json rec{{"label", r.label},
             {"epsilon", r.epsilon_sign},
             {"a1", r.a1 ? json(*r.a1) : json(nullptr)},
             {"a2", r.a2 ? json(*r.a2) : json(nullptr)},
             {"property_A", nullptr},
             {"provenance", to_json(r.provenance)}};
    if (r.property_A) rec["property_A"] = r.property_A->value;
    records.push_back(rec);
  }
  out << "family " << knots::to_string(fam) << ", members " << cert.first_index << ".." << cert.max_index
      << " against G_" << cert.obstruction_level << "\n\n"
      << check_table(cert.checks) << "\ncertificate " << (cert.valid() ? "VALID" : "INVALID") << "\n";
  return result("eps-certify", cert.valid() ? Status::ok : Status::invalid,
                {{"family", knots::to_string(fam)},
                 {"k", cert.k},
                 {"first_index", cert.first_index},
                 {"max", cert.max_index},
                 {"obstruction_level", cert.obstruction_level},
                 {"valid", cert.valid()},
                 {"records", records},
                 {"checks", to_json(cert.checks)}},
                cert.provenance);
}

CommandResult family(const Options& o, std::ostream& out) {
  auto member = knots::family(knots::parse_family(o.family), o.n);
  auto g = knots::genus(member);
  LaurentPolynomial delta = knots::alexander(member.knot);
  out << member.label << " = " << member.knot.to_string() << "\nalexander          " << delta.pretty()
      << "\nseifert genus      " << g.seifert_genus << "\nmax summand genus  " << g.summand_max_genus << "\n";
  std::vector<Provenance> provenance;
  if (g.slice_genus_hint) {
    out << "slice genus        " << g.slice_genus_hint->value << " (" << to_string(g.slice_genus_hint->provenance.origin)
        << ")\n";
    provenance.push_back(g.slice_genus_hint->provenance);
  }
  return result("family", Status::ok,
                {{"family", knots::to_string(member.family)},
                 {"n", member.n},
                 {"label", member.label},
                 {"knot", member.knot.to_string()},
                 {"alexander", delta.to_string()},
                 {"seifert_genus", g.seifert_genus},
                 {"summand_max_genus", g.summand_max_genus},
                 {"slice_genus_hint", hint_json(g.slice_genus_hint)}},
                provenance);
}

}  // namespace concord::cli::commands
