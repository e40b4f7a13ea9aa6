#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hnet/io.hpp"
#include "hnet/metrics.hpp"
#include "hnet/oracle.hpp"
#include "hnet/report.hpp"
#include "hnet/routing.hpp"

namespace hnet::cli {

namespace {

struct Options {
  std::string spec;
  std::vector<std::string> specs;
  std::string from, to;
  std::string export_format;
  std::string report_format;
  std::string out_path;
  std::uint64_t max_order = 20000;
  bool suite = false;
  bool show_path = false;
  bool lines = false;
};

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  const RadixSpec spec = RadixSpec::parse(o.spec);
  const ExportFormat format = parse_export_format(o.export_format);
  require_order_within(spec, o.max_order);
  if (o.out_path.empty()) {
    write_graph(out, spec, format, o.max_order);
    return out ? kExitOk : kExitIo;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << o.out_path << "' for writing\n";
    return kExitIo;
  }
  write_graph(file, spec, format, o.max_order);
  file.close();
  if (!file) {
    err << "error: writing '" << o.out_path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
  const RadixSpec spec = RadixSpec::parse(o.spec);
  const Label x = parse_label(o.from, spec);
  const Label y = parse_label(o.to, spec);
  const DistanceResult d = distance(x, y);
  out << d.value << '\n';
  out << "case: " << roman(d.kind) << '\n';
  out << "common_suffix: " << d.common_suffix << '\n';
  if (o.show_path) out << "path: " << format_path(route(x, y)) << '\n';
  return kExitOk;
}

int cmd_route(const Options& o, std::ostream& out) {
  const RadixSpec spec = RadixSpec::parse(o.spec);
  const Path p = route(parse_label(o.from, spec), parse_label(o.to, spec));
  out << format_path(p, o.lines ? "\n" : " -> ") << '\n';
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  out << to_json(make_stats_report(RadixSpec::parse(o.spec), o.max_order)) << '\n';
  return kExitOk;
}

void print_report_text(const VerificationReport& r, std::ostream& out) {
  out << "spec " << r.spec.to_string() << " (N = " << r.order << ", "
      << (r.all_pairs ? "all pairs" : "sampled, seed " + std::to_string(r.seed))
      << "): " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const CheckResult& c : r.checks) {
    out << "  " << std::left << std::setw(8) << to_string(c.status) << std::setw(30)
        << c.name << c.detail << " [" << std::fixed << std::setprecision(1)
        << c.elapsed_ms << " ms]\n";
    for (const std::string& s : c.counterexamples) out << "      " << s << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<RadixSpec> specs;
  if (o.suite) specs = standard_suite();
  for (const std::string& s : o.specs) specs.push_back(RadixSpec::parse(s));
  if (specs.empty()) {
    err << "error: verify needs --spec or --suite\n";
    return kExitUsage;
  }
  const bool json = o.report_format == "json";
  if (!json && o.report_format != "text") {
    err << "error: verify --format must be text or json\n";
    return kExitUsage;
  }

  VerifyOptions options;
  options.max_order = o.max_order;
  for (const RadixSpec& s : specs) require_order_within(s, o.max_order);

  bool all_passed = true;
  std::vector<std::string> documents;
  for (const RadixSpec& s : specs) {
    const VerificationReport r = verify_spec(s, options);
    all_passed = all_passed && r.passed();
    if (json) {
      documents.push_back(to_json(r));
    } else {
      print_report_text(r, out);
    }
  }
  if (json) {
    out << "[\n";
    for (std::size_t i = 0; i < documents.size(); ++i) {
      out << documents[i] << (i + 1 < documents.size() ? ",\n" : "\n");
    }
    out << "]\n";
  } else {
    out << (all_passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical network builder, router, and verifier", "hnet"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Export the edge set of a spec");
  generate->add_option("--spec", o.spec, "Radices n1,n2,...")->required();
  generate->add_option("--format", o.export_format, "edgelist, dot or json")
      ->default_val("edgelist");
  generate->add_option("--out", o.out_path, "Output file (default: stdout)");
  generate->add_option("--max-order", o.max_order, "Largest order to enumerate")
      ->default_val(20000);

  auto* dist = app.add_subcommand("dist", "Closed-form distance between two labels");
  dist->add_option("--spec", o.spec)->required();
  dist->add_option("--from", o.from)->required();
  dist->add_option("--to", o.to)->required();
  dist->add_flag("--path", o.show_path, "Also print the shortest route");

  auto* route_cmd = app.add_subcommand("route", "Shortest route between two labels");
  route_cmd->add_option("--spec", o.spec)->required();
  route_cmd->add_option("--from", o.from)->required();
  route_cmd->add_option("--to", o.to)->required();
  route_cmd->add_flag("--lines", o.lines, "One label per line");

  auto* stats = app.add_subcommand("stats", "Order, size, radius, diameter, histograms");
  stats->add_option("--spec", o.spec)->required();
  stats->add_option("--max-order", o.max_order, "Largest order for enumerated fields")
      ->default_val(20000);

  auto* verify = app.add_subcommand("verify", "Check every closed form against brute force");
  verify->add_option("--spec", o.specs, "Spec to verify (repeatable)");
  verify->add_flag("--suite", o.suite, "Verify the standard ten-spec suite");
  verify->add_option("--max-order", o.max_order, "Largest order to verify")
      ->default_val(20000);
  verify->add_option("--format", o.report_format, "text or json")->default_val("text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out, err);
    if (dist->parsed()) return cmd_dist(o, out);
    if (route_cmd->parsed()) return cmd_route(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hnet::cli
