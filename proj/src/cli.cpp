#include "knotoid/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knotoid/bracket.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/examples.hpp"
#include "knotoid/io.hpp"
#include "knotoid/mixed.hpp"

namespace knotoid {

namespace {

Diagram load(const std::string& ref) {
  Diagram d = parse_diagram(load_diagram_text(ref));
  require_valid(d);
  return d;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) fail(ErrorCode::BadArgument, "cannot write '" + path + "'");
  file << content;
}

std::string state_line(const StateRecord& record, BracketFlavor flavor, bool trace) {
  std::ostringstream os;
  const StateSummary& s = record.summary;
  os << record.choice.to_string() << " sigma=" << s.sigma << " k=" << s.k << " m=" << s.m
     << " n=" << s.n << " l=" << s.l;
  if (s.torus_class) os << " pq=(" << s.torus_class->p << "," << s.torus_class->q << ")";
  if (trace) os << " w=" << canonical_string(state_weight(s, flavor));
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multi-knotoid diagrams and bracket invariants on the plane, annulus and torus"};
  app.require_subcommand(1);

  int jobs = 1;
  std::uint64_t seed = 0;
  app.add_option("--jobs", jobs, "state-partition width")->capture_default_str();
  app.add_option("--seed", seed, "ray-perturbation randomness (results are seed-independent)")
      ->capture_default_str();

  std::string file_a, file_b, flavor_name_arg = "planar", output, to_kind, example_name;
  bool trace = false;

  auto* cmd_crossings = app.add_subcommand("crossings", "list canonical crossing keys");
  cmd_crossings->add_option("file", file_a)->required();

  auto* cmd_bracket = app.add_subcommand("bracket", "bracket polynomial of a diagram");
  cmd_bracket->add_option("file", file_a)->required();
  cmd_bracket->add_option("--flavor", flavor_name_arg)->required();

  auto* cmd_jones = app.add_subcommand("jones", "normalized bracket polynomial");
  cmd_jones->add_option("file", file_a)->required();
  cmd_jones->add_option("--flavor", flavor_name_arg)->required();

  auto* cmd_states = app.add_subcommand("states", "per-state census lines");
  cmd_states->add_option("file", file_a)->required();
  cmd_states->add_option("--flavor", flavor_name_arg);
  cmd_states->add_flag("--trace", trace, "append each state's weight monomial");

  auto* cmd_translate = app.add_subcommand("translate", "rewrite as a planar mixed diagram");
  cmd_translate->add_option("file", file_a)->required();
  cmd_translate->add_option("--to", to_kind, "o-mixed or h-mixed")->required();
  cmd_translate->add_option("-o,--output", output);

  auto* cmd_render = app.add_subcommand("render", "render the diagram as SVG");
  cmd_render->add_option("file", file_a)->required();
  cmd_render->add_option("-o,--output", output)->required();

  auto* cmd_examples = app.add_subcommand("examples", "built-in example library");
  auto* cmd_examples_list = cmd_examples->add_subcommand("list", "list example names");
  auto* cmd_examples_show = cmd_examples->add_subcommand("show", "print an example file");
  cmd_examples_show->add_option("name", example_name)->required();
  cmd_examples_show->add_option("-o,--output", output);
  cmd_examples->require_subcommand(1);

  auto* cmd_verify = app.add_subcommand("verify-equal", "exit 0 iff brackets are equal");
  cmd_verify->add_option("fileA", file_a)->required();
  cmd_verify->add_option("fileB", file_b)->required();
  cmd_verify->add_option("--flavor", flavor_name_arg)->required();

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  try {
    app.parse(cli_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: BadArgument: " << e.what() << "\n";
    return 2;
  }

  const EvalOptions options{jobs, seed};
  try {
    if (cmd_crossings->parsed()) {
      const Diagram d = load(file_a);
      for (const Crossing& c : detect_crossings(d)) {
        out << c.key.to_string();
        if (c.over) out << " " << (c.over == Over::First ? "first" : "second");
        else out << " unassigned";
        out << "\n";
      }
      return 0;
    }
    if (cmd_bracket->parsed()) {
      const Diagram d = load(file_a);
      out << canonical_string(bracket(d, flavor_from_name(flavor_name_arg), options)) << "\n";
      return 0;
    }
    if (cmd_jones->parsed()) {
      const Diagram d = load(file_a);
      out << canonical_string(jones(d, flavor_from_name(flavor_name_arg), options)) << "\n";
      return 0;
    }
    if (cmd_states->parsed()) {
      const Diagram d = load(file_a);
      const BracketFlavor flavor = flavor_from_name(flavor_name_arg);
      require_flavor_match(d, flavor);
      LaurentPoly total;
      for (const StateRecord& record : enumerate_states(d, options)) {
        out << state_line(record, flavor, trace) << "\n";
        total += state_weight(record.summary, flavor);
      }
      out << "bracket = " << canonical_string(total) << "\n";
      return 0;
    }
    if (cmd_translate->parsed()) {
      const Diagram d = load(file_a);
      MixedDiagram mixed;
      if (to_kind == "o-mixed") mixed = to_o_mixed(d);
      else if (to_kind == "h-mixed") mixed = to_h_mixed(d);
      else fail(ErrorCode::BadArgument, "--to expects o-mixed or h-mixed");
      std::ostringstream os;
      os << "# " << mixed.provenance() << "\n";
      os << serialize_diagram(mixed.diagram);
      write_output(output, os.str(), out);
      return 0;
    }
    if (cmd_render->parsed()) {
      const Diagram d = load(file_a);
      write_output(output, render_svg(d), out);
      return 0;
    }
    if (cmd_examples_list->parsed()) {
      for (const std::string& name : example_names()) out << name << "\n";
      return 0;
    }
    if (cmd_examples_show->parsed()) {
      write_output(output, example_text(example_name), out);
      return 0;
    }
    if (cmd_verify->parsed()) {
      const Diagram da = load(file_a);
      const Diagram db = load(file_b);
      const BracketFlavor flavor = flavor_from_name(flavor_name_arg);
      require_flavor_match(da, flavor);
      require_flavor_match(db, flavor);
      const LaurentPoly pa = bracket(da, flavor, options);
      const LaurentPoly pb = bracket(db, flavor, options);
      if (pa == pb) {
        out << "equal: " << canonical_string(pa) << "\n";
        return 0;
      }
      out << "different: " << canonical_string(pa) << " vs " << canonical_string(pb) << "\n";
      return 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 4;
  }
  err << "error: BadArgument: no subcommand\n";
  return 2;
}

}  // namespace knotoid
