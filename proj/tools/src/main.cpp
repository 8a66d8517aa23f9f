#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "report.hpp"

using namespace hnlab;
using namespace hnlab::cli;

namespace {

struct Settings {
  Common common;
  std::string format = "table";
  bool json_flag = false;
  std::string input_path;
  std::string inline_json;

  // hn
  std::string slopes;
  std::string with;
  // p1 jacobian / sample
  QuarticParams quartic;
  // checks
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  bool general = false;
  // rz
  long height = 0;
  long dim = 0;
  std::optional<std::string> slope_min;
  std::optional<std::string> slope_max;

  Format output() const { return json_flag || format == "json" ? Format::json : Format::table; }
};

/// Parsed input document, or nothing when neither --input nor --inline was given.
std::optional<json> load_input(const Settings& s) {
  if (!s.input_path.empty() && !s.inline_json.empty()) throw InputError("give either --input or --inline, not both");
  std::string text, source;
  if (!s.inline_json.empty()) {
    text = s.inline_json;
    source = "--inline";
  } else if (!s.input_path.empty()) {
    source = s.input_path;
    if (s.input_path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(s.input_path);
      if (!in) throw InputError("cannot open input file " + s.input_path);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
  } else {
    return std::nullopt;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + source + ": " + e.what());
  }
}

json require_input(const Settings& s) {
  auto doc = load_input(s);
  if (!doc) throw InputError("this subcommand needs --input FILE or --inline JSON");
  return *doc;
}

/// hn takes --slopes / --with as shorthand for the JSON document.
json hn_document(const Settings& s) {
  if (auto doc = load_input(s)) {
    if (!s.slopes.empty() || !s.with.empty()) throw InputError("give slopes either inline or as JSON, not both");
    return *doc;
  }
  json doc = json::object();
  if (!s.slopes.empty()) doc["slopes"] = parse_compact_slopes(s.slopes);
  if (!s.with.empty()) doc["with"] = parse_compact_slopes(s.with);
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Exact computations with Harder-Narasimhan types, bundles on P^1 and Rapoport-Zink tangent profiles"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--field", s.common.field, "q for the rationals, or an odd prime p < 2^31")->envname("HNLAB_FIELD");
  app.add_option("--seed", s.common.seed, "SplitMix64 seed")->envname("HNLAB_SEED");
  app.add_option("--trials", s.common.trials, "Number of sampled instances")->envname("HNLAB_TRIALS");
  app.add_option("--format", s.format, "table or json")
      ->envname("HNLAB_FORMAT")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--json", s.json_flag, "Shorthand for --format json");
  app.add_option("--input", s.input_path, "JSON input file, - for stdin")->envname("HNLAB_INPUT");
  app.add_option("--inline", s.inline_json, "JSON input given on the command line");

  std::function<Report()> run;
  std::string name;

  auto* hn = app.add_subcommand("hn", "Slope arithmetic for HN types")->require_subcommand(1);
  for (const char* op : {"info", "dual", "tensor", "pdiv", "isocrystal"}) {
    auto* sub = hn->add_subcommand(op);
    sub->add_option("--slopes", s.slopes, "Slopes as d/h[:mult],...");
    sub->add_option("--with", s.with, "Second factor for tensor");
    sub->callback([&, op = std::string(op)] {
      name = "hn " + op;
      run = [&, op] { return hn_command(op, hn_document(s)); };
    });
  }
  hn->get_subcommand("info")->description("Rank, degree, extreme slopes and cohomology");
  hn->get_subcommand("dual")->description("Dual bundle");
  hn->get_subcommand("tensor")->description("Tensor product with --with");
  hn->get_subcommand("pdiv")->description("Bundle attached to a p-divisible group with the given Newton slopes");
  hn->get_subcommand("isocrystal")->description("Bundle attached to an isocrystal with the given Newton slopes");

  auto* p1 = app.add_subcommand("p1", "Splitting types on the projective line")->require_subcommand(1);
  p1->add_subcommand("kernel", "Splitting type of the kernel of a graded map {\"map\": ...}")->callback([&] {
    name = "p1 kernel";
    run = [&] { return p1_kernel(s.common, require_input(s)); };
  });
  p1->add_subcommand("modify", "Elementary modification {\"type\", \"point\", \"basis\"}")->callback([&] {
    name = "p1 modify";
    run = [&] { return p1_modify(s.common, require_input(s)); };
  });
  auto quartic_options = [&](CLI::App* sub) {
    sub->add_option("--n", s.quartic.variables, "Number of variables");
    sub->add_option("--d", s.quartic.form_degree, "Degree of the forms g_i");
    sub->add_option("--delta", s.quartic.poly_degree, "Degree of P");
    sub->add_option("--bound", s.quartic.bound, "Coefficient bound over Q");
  };
  auto* jac = p1->add_subcommand("jacobian", "Kernel of D_g P for {\"polynomial\", \"g\"} or a seeded random instance");
  quartic_options(jac);
  jac->callback([&] {
    name = "p1 jacobian";
    run = [&] { return p1_jacobian(s.common, s.quartic, load_input(s)); };
  });
  auto* sample = p1->add_subcommand("sample", "Kernel splitting-type frequencies over random (P, g)");
  quartic_options(sample);
  sample->callback([&] {
    name = "p1 sample";
    run = [&] { return p1_sample(s.common, s.quartic); };
  });

  auto* minor = app.add_subcommand("minor-check", "Kernel of the minor-map derivative on random maps of fixed rank");
  minor->add_option("--n", s.n, "Matrix size (random in 1..5 when absent)");
  minor->add_option("--r", s.r, "Rank (random when absent)");
  minor->callback([&] {
    name = "minor-check";
    run = [&] { return minor_check(s.common, s.n, s.r); };
  });
  auto* trace = app.add_subcommand("trace-check", "Trace-wedge identity in the top exterior power");
  trace->add_option("--n", s.n, "Dimension (random in 1..5 when absent)");
  trace->callback([&] {
    name = "trace-check";
    run = [&] { return trace_check(s.common, s.n); };
  });
  auto* torc = app.add_subcommand("tor-check", "Homology of the tensor complex of two presentations");
  torc->add_flag("--general", s.general, "Arbitrary torsion orders instead of powers of t");
  torc->callback([&] {
    name = "tor-check";
    run = [&] { return tor_check(s.common, s.general, load_input(s)); };
  });

  auto* lm = app.add_subcommand("local-model", "Matrices over k[t] with det = t^d unit")->require_subcommand(1);
  lm->add_subcommand("check", "Membership {\"d\", \"matrix\"}")->callback([&] {
    name = "local-model check";
    run = [&] { return local_model_check(s.common, require_input(s)); };
  });
  lm->add_subcommand("factor", "Block factorization {\"d\", \"matrix\", \"column_orders\"?}")->callback([&] {
    name = "local-model factor";
    run = [&] { return local_model_factor(s.common, require_input(s)); };
  });

  auto* rzc = app.add_subcommand("rz", "Tangent profiles of basic Rapoport-Zink spaces")->require_subcommand(1);
  auto* en = rzc->add_subcommand("enumerate", "Enumerate and classify tangent HN profiles");
  en->add_option("--height", s.height, "Height n")->required();
  en->add_option("--dim", s.dim, "Dimension d")->required();
  en->add_option("--slope-min", s.slope_min, "Lower slope bound (default 0)");
  en->add_option("--slope-max", s.slope_max, "Upper slope bound (default 1/n when d = 1)");
  en->callback([&] {
    name = "rz enumerate";
    run = [&] { return rz_enumerate(s.height, s.dim, s.slope_min, s.slope_max); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input_error;
  }

  const Format format = s.output();
  try {
    const Report report = run();
    std::cout << render(report, format);
    return report.exit_code();
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (format == Format::json) std::cout << render_error(name, e.what(), exit_input_error);
    return exit_input_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (format == Format::json) std::cout << render_error(name, e.what(), exit_input_error);
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (format == Format::json) std::cout << render_error(name, e.what(), exit_check_failed);
    return exit_check_failed;
  }
}
