#pragma once

#include <iosfwd>
#include <string_view>

#include "hnet/labels.hpp"

namespace hnet {

enum class ExportFormat { edgelist, dot, json };

ExportFormat parse_export_format(std::string_view name);

/// `<label>\t<label>\n` per edge, canonical order.
void write_edge_list(std::ostream& out, const RadixSpec& spec,
                     std::uint64_t cap = kDefaultOrderCap);
/// Undirected DOT graph; node ids are quoted label strings.
void write_dot(std::ostream& out, const RadixSpec& spec,
               std::uint64_t cap = kDefaultOrderCap);
/// {"spec", "order", "size", "edges": [{"u", "v", "kind"}, ...]}
void write_edges_json(std::ostream& out, const RadixSpec& spec,
                      std::uint64_t cap = kDefaultOrderCap);

void write_graph(std::ostream& out, const RadixSpec& spec, ExportFormat format,
                 std::uint64_t cap = kDefaultOrderCap);

}  // namespace hnet
