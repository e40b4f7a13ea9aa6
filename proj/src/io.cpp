#include "hnet/io.hpp"

#include <ostream>

#include "hnet/topology.hpp"
#include "json.hpp"

namespace hnet {

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edgelist") return ExportFormat::edgelist;
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw Error(Errc::malformed_input, "unknown format '" + std::string(name) + "'");
}

void write_edge_list(std::ostream& out, const RadixSpec& spec, std::uint64_t cap) {
  for_each_edge(
      spec,
      [&](const Edge& e) {
        out << format_label(e.u) << '\t' << format_label(e.v) << '\n';
      },
      cap);
}

void write_dot(std::ostream& out, const RadixSpec& spec, std::uint64_t cap) {
  require_order_within(spec, cap);
  out << "graph H {\n";
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    out << "  \"" << format_label(Label::from_index(spec, i)) << "\";\n";
  }
  for_each_edge(
      spec,
      [&](const Edge& e) {
        out << "  \"" << format_label(e.u) << "\" -- \"" << format_label(e.v)
            << "\";\n";
      },
      cap);
  out << "}\n";
}

void write_edges_json(std::ostream& out, const RadixSpec& spec, std::uint64_t cap) {
  nlohmann::ordered_json doc;
  doc["spec"] = std::vector<Digit>(spec.radices().begin(), spec.radices().end());
  doc["order"] = spec.order();
  auto list = nlohmann::ordered_json::array();
  for_each_edge(
      spec,
      [&](const Edge& e) {
        list.push_back({{"u", format_label(e.u)},
                        {"v", format_label(e.v)},
                        {"kind", to_string(e.kind)}});
      },
      cap);
  doc["size"] = list.size();
  doc["edges"] = std::move(list);
  out << doc.dump(2) << '\n';
}

void write_graph(std::ostream& out, const RadixSpec& spec, ExportFormat format,
                 std::uint64_t cap) {
  switch (format) {
    case ExportFormat::edgelist: write_edge_list(out, spec, cap); return;
    case ExportFormat::dot: write_dot(out, spec, cap); return;
    case ExportFormat::json: write_edges_json(out, spec, cap); return;
  }
}

}  // namespace hnet
