#include "rtea/cli.hpp"

#include "rtea/json_export.hpp"
#include "rtea/matrix.hpp"
#include "rtea/model.hpp"
#include "rtea/omega.hpp"
#ifdef RTEA_HAVE_ORACLES
#include "rtea/oracles.hpp"
#endif

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace rtea::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational number_arg(const std::string& flag, const std::string& text) {
  auto v = parse_rational(text);
  if (!v) throw UsageError(flag + ": not a number: " + text);
  return *v;
}

Duration time_arg(const std::string& text) {
  if (text == "inf") return Duration::infinity();
  Rational v = number_arg("--time", text);
  if (sgn(v) < 0) throw UsageError("--time must be >= 0");
  return Duration::finite(std::move(v));
}

Energy energy_arg(const std::string& text) {
  if (text == "inf") return Energy::infinity();
  Rational v = number_arg("--x0", text);
  if (sgn(v) < 0) throw UsageError("--x0 must be >= 0");
  return Energy::finite(std::move(v));
}

RteaModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read model file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str());
}

Atom atom_arg(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw UsageError("atom must be RATE,PRICE,BOUND: " + text);
  Atom a{number_arg("atom", parts[0]), number_arg("atom", parts[1]), number_arg("atom", parts[2])};
  try {
    a.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return a;
}

struct Options {
  std::string kind;
  std::string model;
  std::string x0 = "0";
  std::string time = "0";
  std::optional<std::string> target;
  std::string what = "behavior";
  bool verify = false;
  std::vector<std::string> atoms;
};

json query_echo(const std::string& command, const Options& o) {
  json q{{"command", command}};
  if (command == "check") q["kind"] = o.kind;
  if (command == "dump") {
    q["what"] = o.what;
  } else if (command != "normalize") {
    q["x0"] = o.x0;
    q["time"] = o.time;
  }
  if (command != "normalize") q["model"] = o.model;
  if (o.target) q["target"] = *o.target;
  return q;
}

#ifdef RTEA_HAVE_ORACLES
json verify_reach(const RteaModel& m, const Energy& x0, const Duration& t) {
  if (t.is_infinite() || !x0.is_finite()) return {{"oracle", "unavailable"}};
  constexpr std::size_t kSteps = 64;
  oracles::DpConfig cfg{is_zero(t.value()) ? Rational(1) : t.value() / kSteps,
                        is_zero(t.value()) ? 0 : kSteps};
  Energy lb = oracles::dp_lower_bound(m, x0.value(), t.value(), cfg);
  return {{"oracle", "dp_lower_bound"}, {"delta", to_string(cfg.delta)}, {"value", to_string(lb)}};
}

json verify_buchi(const RteaModel& m, const Energy& x0, const Duration& t) {
  if (t.is_infinite() || !x0.is_finite()) return {{"oracle", "unavailable"}};
  bool found = oracles::buchi_unroll(m, x0.value(), t.value(), 50);
  return {{"oracle", "buchi_unroll"}, {"lasso_found", found}};
}
#endif

int run_check(const Options& o, std::ostream& out) {
  const RteaModel m = load_model(o.model);
  const Energy x0 = energy_arg(o.x0);
  const Duration t = time_arg(o.time);
  const AutomatonRep rep = to_matrix_rep(m);
  json report{{"query", query_echo("check", o)}};
  bool answer = false;

  if (o.kind == "buchi") {
    answer = eval_omega(buchi_behavior(rep), x0, t);
    if (t.is_finite()) report["note"] = "zeno";
#ifdef RTEA_HAVE_ORACLES
    if (o.verify) report["verify"] = verify_buchi(m, x0, t);
#endif
  } else {
    Energy value = eval(finite_behavior(rep), x0, t);
    report["value"] = to_string(value);
    if (o.kind == "reach") {
      answer = !value.is_bottom();
    } else {
      if (!o.target) throw UsageError("check cover requires --target");
      Rational target = number_arg("--target", *o.target);
      answer = !value.is_bottom() && (value.is_infinite() || value.value() >= target);
    }
#ifdef RTEA_HAVE_ORACLES
    if (o.verify) report["verify"] = verify_reach(m, x0, t);
#endif
  }
  report["answer"] = answer;
  out << report.dump(2) << '\n';
  return answer ? Yes : No;
}

int run_eval(const Options& o, std::ostream& out) {
  const RteaModel m = load_model(o.model);
  Energy value = eval(finite_behavior(to_matrix_rep(m)), energy_arg(o.x0), time_arg(o.time));
  json report{{"query", query_echo("eval", o)}, {"value", to_string(value)}};
  out << report.dump(2) << '\n';
  return Yes;
}

int run_dump(const Options& o, std::ostream& out) {
  const RteaModel m = load_model(o.model);
  const AutomatonRep rep = to_matrix_rep(m);
  json report{{"query", query_echo("dump", o)}};
  if (o.what == "behavior") {
    report["function"] = to_json(finite_behavior(rep));
  } else {
    const std::vector<std::size_t> order = matrix_order(m);
    const RtefMatrix star_m = mat_star(rep.m);
    json entries = json::array();
    for (std::size_t i = 0; i < star_m.rows(); ++i) {
      for (std::size_t j = 0; j < star_m.cols(); ++j) {
        if (star_m(i, j).is_bottom()) continue;
        entries.push_back({{"from", m.states[order[i]].name},
                           {"to", m.states[order[j]].name},
                           {"function", to_json(star_m(i, j))}});
      }
    }
    report["entries"] = std::move(entries);
  }
  out << report.dump(2) << '\n';
  return Yes;
}

int run_normalize(const Options& o, std::ostream& out) {
  std::vector<Atom> atoms;
  for (const std::string& text : o.atoms) atoms.push_back(atom_arg(text));
  json report{{"query", query_echo("normalize", o)}};
  report["input"] = o.atoms;
  report["function"] = to_json(normalize(atoms));
  out << report.dump(2) << '\n';
  return Yes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for real-time energy automata", "rtea"};
  app.require_subcommand(1);
  Options o;

  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "model file")->required();
    sub->add_option("--x0", o.x0, "initial energy")->required();
    sub->add_option("--time", o.time, "time budget, or inf")->required();
  };

  CLI::App* check = app.add_subcommand("check", "decide reach, cover or buchi");
  check->add_option("kind", o.kind, "reach|cover|buchi")
      ->required()
      ->check(CLI::IsMember({"reach", "cover", "buchi"}));
  add_point(check);
  check->add_option("--target", o.target, "energy to cover");
  check->add_flag("--verify", o.verify, "also run the reference oracles");

  CLI::App* eval_cmd = app.add_subcommand("eval", "value of the finite behavior");
  add_point(eval_cmd);

  CLI::App* dump = app.add_subcommand("dump", "export functions as JSON");
  dump->add_option("--model", o.model, "model file")->required();
  dump->add_option("--what", o.what, "behavior|star")->check(CLI::IsMember({"behavior", "star"}));

  CLI::App* norm = app.add_subcommand("normalize", "normal form of an atom sequence");
  norm->add_option("atoms", o.atoms, "atoms as RATE,PRICE,BOUND")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Yes;
    }
    err << "rtea: " << e.what() << '\n';
    return Usage;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (eval_cmd->parsed()) return run_eval(o, out);
    if (dump->parsed()) return run_dump(o, out);
    return run_normalize(o, out);
  } catch (const ModelError& e) {
    err << "rtea: " << o.model << ":" << e.what() << " [" << to_string(e.code()) << "]\n";
  } catch (const UsageError& e) {
    err << "rtea: " << e.what() << '\n';
  }
  return Usage;
}

}  // namespace rtea::cli
