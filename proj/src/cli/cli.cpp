#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "concord/errors.hpp"

namespace concord::cli {

std::string to_string(Status status) {
  switch (status) {
    case Status::ok:
      return "ok";
    case Status::invalid:
      return "invalid";
    case Status::inconclusive:
      return "inconclusive";
    case Status::error:
      return "error";
  }
  return "error";
}

int exit_code(Status status) {
  switch (status) {
    case Status::ok:
      return 0;
    case Status::invalid:
    case Status::inconclusive:
      return 1;
    case Status::error:
      return 2;
  }
  return 2;
}

json CommandResult::document() const {
  json provenance_list = json::array();
  for (const auto& p : provenance) provenance_list.push_back(to_json(p));
  return {{"command", command}, {"status", to_string(status)}, {"provenance", provenance_list}, {"result", payload}};
}

namespace {

using Handler = std::function<CommandResult(const Options&, std::ostream&)>;

// Library errors caused by the input: reported as validation failures.
std::optional<std::string> input_error_kind(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const UndefinedError*>(&e)) return "undefined";
  if (dynamic_cast<const NormalizationRequired*>(&e)) return "normalization_required";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const UnsupportedExpression*>(&e)) return "unsupported_expression";
  if (dynamic_cast<const InsufficientData*>(&e)) return "insufficient_data";
  if (dynamic_cast<const RuleNotApplicable*>(&e)) return "rule_not_applicable";
  if (dynamic_cast<const NotLSpacePolynomial*>(&e)) return "not_lspace_polynomial";
  if (dynamic_cast<const NumericalError*>(&e)) return "numerical";
  return std::nullopt;
}

CommandResult failure(const std::string& command, Status status, const std::string& kind, const std::string& message) {
  CommandResult r;
  r.status = status;
  r.command = command;
  r.payload = {{"error", {{"kind", kind}, {"message", message}}}};
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Knot concordance obstructions: Alexander/Fox-Milnor bounds, signature jumps, Upsilon and epsilon "
               "certificates.",
               "concord"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json", o.json_path, "Write the result document as JSON");
  app.add_option("--csv", o.csv_path, "Write Upsilon breakpoints as CSV (upsilon only)");
  app.add_option("--svg", o.svg_path, "Write an SVG plot of Upsilon (upsilon only)");

  std::map<std::string, Handler> handlers;
  auto command = [&](const std::string& name, const std::string& description, Handler handler) {
    handlers[name] = std::move(handler);
    return app.add_subcommand(name, description);
  };
  auto expression = [&](CLI::App* sub) {
    sub->add_option("expression", o.expression, "Knot expression, e.g. \"T(2,3) # -T(2,3)\"")->required();
  };
  auto polynomial = [&](CLI::App* sub) {
    sub->add_option("polynomial", o.polynomial, "Laurent polynomial, e.g. \"t - 1 + t^-1\"")->required();
  };

  auto* alexander = command("alexander", "Alexander polynomial of a knot expression", commands::alexander);
  expression(alexander);
  alexander->add_flag("--fox-milnor", o.fox_milnor, "Also run the Fox-Milnor test");

  expression(command("genus", "Seifert genus and largest summand genus", commands::genus));
  expression(command("gsp-bound", "Lower and upper bounds on the splitting concordance genus", commands::gsp_bound));
  polynomial(command("fox-milnor", "Fox-Milnor factorization test", commands::fox_milnor));

  auto* factor = command("factor", "Irreducible factorization over the integers", commands::factor);
  polynomial(factor);
  factor->add_option("--cyclotomic-bound", o.cyclotomic_bound, "Largest d tried when stripping Phi_d");

  auto* sig_jumps = command("sig-jumps", "Tristram-Levine signature jumps", commands::sig_jumps);
  expression(sig_jumps);
  sig_jumps->add_option("--at", o.at, "Evaluate the signature at x in (0,1), e.g. 1/2");

  auto* sig_certify = command("sig-certify", "Torus-knot independence certificate modulo G_k", commands::sig_certify);
  sig_certify->add_option("--pair", o.pairs, "Torus parameters p,q (repeatable)")->required();
  sig_certify->add_option("--k", o.k, "Genus filtration level")->required();

  auto* ups = command("upsilon", "Upsilon of torus knots, mirrors and sums", commands::upsilon);
  expression(ups);

  auto* ups_obstruct = command("upsilon-obstruct", "Upsilon obstruction to membership in G_n", commands::upsilon_obstruct);
  ups_obstruct->add_option("expression", o.expression, "Knot expression");
  ups_obstruct->add_option("--jprime", o.jprime, "Use the published germ of J'_n instead of an expression");
  ups_obstruct->add_option("--n", o.n, "Filtration index")->required();

  auto* ups_certify = command("upsilon-certify", "Summand certificate for J'_k..J'_N", commands::upsilon_certify);
  ups_certify->add_option("--k", o.k, "First index (>= 2)")->required();
  ups_certify->add_option("--max", o.max_index, "Last index N")->required();

  auto* demo = command("ordered-demo", "Randomized quotient-order checks in the lex model", commands::ordered_demo);
  demo->add_option("--rank", o.rank, "Lex model rank")->capture_default_str();
  demo->add_option("--trials", o.trials, "Cases per suite")->capture_default_str();
  demo->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* eps_obstruct = command("eps-obstruct", "Epsilon obstruction from a+ = (1, a2)", commands::eps_obstruct);
  eps_obstruct->add_option("--label", o.label, "Registry label, e.g. J_6 or L_4");
  eps_obstruct->add_option("--a1", o.a1, "User-supplied a1");
  eps_obstruct->add_option("--a2", o.a2, "User-supplied a2");
  eps_obstruct->add_option("--n", o.n, "Filtration index")->required();
  eps_obstruct->add_option("--registry", o.registry, "Registry JSON file (default: built-in published data)");

  auto* eps_certify = command("eps-certify", "Epsilon summand/independence certificate", commands::eps_certify);
  eps_certify->add_option("--k", o.k, "Index k")->required();
  eps_certify->add_option("--max", o.max_index, "Last index N")->required();
  eps_certify->add_option("--family", o.family, "J (summand) or L (independence)")->capture_default_str();
  eps_certify->add_option("--registry", o.registry, "Registry JSON file (default: built-in published data)");
  eps_certify->add_option("--seed", o.seed, "Seed for the lex-model witness")->capture_default_str();

  auto* fam = command("family", "Members of the J, J' and L families", commands::family);
  fam->add_option("name", o.family, "J, Jprime or L")->required();
  fam->add_option("n", o.n, "Index (>= 2)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {Status::ok, "help", {{"help", true}}, {}};
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'concord --help' for usage\n";
    return failure("", Status::error, "usage", e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  CommandResult result;
  if ((o.csv_path || o.svg_path) && name != "upsilon") {
    err << "usage error: --csv and --svg apply to the upsilon command only\n";
    return failure(name, Status::error, "usage", "--csv and --svg apply to the upsilon command only");
  }
  try {
    result = handlers.at(name)(o, out);
  } catch (const std::exception& e) {
    auto kind = input_error_kind(e);
    err << "error[" << kind.value_or("internal") << "]: " << e.what() << "\n";
    result = failure(name, kind ? Status::invalid : Status::error, kind.value_or("internal"), e.what());
  }
  if (o.json_path) {
    try {
      write_json(*o.json_path, result.document());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return failure(name, Status::error, "io", e.what());
    }
  }
  return result;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return exit_code(run(args, std::cout, std::cerr).status);
}

}  // namespace concord::cli
