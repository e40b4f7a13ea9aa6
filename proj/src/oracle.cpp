#include "hnet/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <istream>
#include <map>
#include <random>
#include <sstream>

#include "hnet/io.hpp"
#include "hnet/metrics.hpp"
#include "hnet/routing.hpp"
#include "hnet/topology.hpp"

namespace hnet {

ExplicitGraph::ExplicitGraph(RadixSpec spec, std::vector<std::vector<Vertex>> adjacency)
    : spec_(std::move(spec)), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != spec_.order()) {
    throw Error(Errc::length_mismatch, "adjacency size differs from spec order");
  }
  std::uint64_t degree_sum = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    degree_sum += list.size();
  }
  edge_count_ = degree_sum / 2;
}

ExplicitGraph::Vertex ExplicitGraph::vertex_of(const Label& x) const {
  if (!(x.spec() == spec_)) {
    throw Error(Errc::unknown_vertex, "label is not a vertex of this graph");
  }
  return static_cast<Vertex>(x.index());
}

bool ExplicitGraph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool ExplicitGraph::is_symmetric() const {
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (!has_edge(v, u)) return false;
    }
  }
  return true;
}

bool ExplicitGraph::is_loop_free() const {
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    if (has_edge(u, u)) return false;
  }
  return true;
}

ExplicitGraph build_graph(const RadixSpec& spec, std::uint64_t cap) {
  require_order_within(spec, cap);
  std::vector<std::vector<ExplicitGraph::Vertex>> adjacency(spec.order());
  for (std::uint64_t i = 0; i < spec.order(); ++i) {
    for (const Neighbor& nb : neighbors(Label::from_index(spec, i))) {
      adjacency[i].push_back(static_cast<ExplicitGraph::Vertex>(nb.label.index()));
    }
  }
  return ExplicitGraph(spec, std::move(adjacency));
}

std::vector<std::uint32_t> bfs_from(const ExplicitGraph& g, ExplicitGraph::Vertex s) {
  if (s >= g.vertex_count()) throw Error(Errc::unknown_vertex, "BFS source out of range");
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::deque<ExplicitGraph::Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : g.adjacent(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> bfs_from(const ExplicitGraph& g, const Label& s) {
  return bfs_from(g, g.vertex_of(s));
}

std::vector<std::uint64_t> bfs_layers(const std::vector<std::uint32_t>& dist) {
  std::vector<std::uint64_t> layers;
  for (auto d : dist) {
    if (d == kUnreachable) continue;
    if (d >= layers.size()) layers.resize(d + 1, 0);
    ++layers[d];
  }
  return layers;
}

namespace {

using Adjacency = std::vector<std::vector<ExplicitGraph::Vertex>>;

void add_read_edge(Adjacency& adj, const RadixSpec& spec, std::string_view a,
                   std::string_view b) {
  const auto u = static_cast<ExplicitGraph::Vertex>(parse_label(a, spec).index());
  const auto v = static_cast<ExplicitGraph::Vertex>(parse_label(b, spec).index());
  if (u == v) throw Error(Errc::malformed_input, "self loop in graph input");
  adj[u].push_back(v);
  adj[v].push_back(u);
}

ExplicitGraph finish_read(Adjacency adj, const RadixSpec& spec) {
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(Errc::malformed_input, "duplicate edge in graph input");
    }
  }
  return ExplicitGraph(spec, std::move(adj));
}

// Quoted ids on one DOT line, in order.
std::vector<std::string_view> quoted_ids(std::string_view line) {
  std::vector<std::string_view> ids;
  std::size_t pos = 0;
  while ((pos = line.find('"', pos)) != std::string_view::npos) {
    const std::size_t end = line.find('"', pos + 1);
    if (end == std::string_view::npos) {
      throw Error(Errc::malformed_input, "unterminated quote in DOT input");
    }
    ids.push_back(line.substr(pos + 1, end - pos - 1));
    pos = end + 1;
  }
  return ids;
}

}  // namespace

ExplicitGraph read_edge_list(std::istream& in, const RadixSpec& spec) {
  Adjacency adj(spec.order());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(Errc::malformed_input, "edge list line '" + line + "'");
    }
    add_read_edge(adj, spec, std::string_view(line).substr(0, tab),
                  std::string_view(line).substr(tab + 1));
  }
  return finish_read(std::move(adj), spec);
}

ExplicitGraph read_dot(std::istream& in, const RadixSpec& spec) {
  Adjacency adj(spec.order());
  std::string line;
  while (std::getline(in, line)) {
    const auto ids = quoted_ids(line);
    if (line.find("--") != std::string::npos) {
      if (ids.size() != 2) throw Error(Errc::malformed_input, "DOT edge '" + line + "'");
      add_read_edge(adj, spec, ids[0], ids[1]);
    } else if (ids.size() == 1) {
      (void)parse_label(ids[0], spec);
    } else if (!ids.empty()) {
      throw Error(Errc::malformed_input, "DOT line '" + line + "'");
    }
  }
  return finish_read(std::move(adj), spec);
}

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  });
}

const CheckResult* VerificationReport::find(std::string_view name) const noexcept {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<RadixSpec> standard_suite() {
  std::vector<RadixSpec> suite;
  for (const char* s : {"2,2", "2,3", "3,3", "2,2,2", "2,3,4", "3,2,2", "2,3,3",
                        "4,4", "2,2,2,2,2", "2,2,3,4"}) {
    suite.push_back(RadixSpec::parse(s));
  }
  return suite;
}

namespace {

using Clock = std::chrono::steady_clock;

class Check {
 public:
  Check(std::string name, std::size_t limit)
      : start_(Clock::now()), limit_(limit) {
    result_.name = std::move(name);
  }

  void fail(std::string counterexample) {
    ++failures_;
    if (result_.counterexamples.size() < limit_) {
      result_.counterexamples.push_back(std::move(counterexample));
    }
  }
  void add_info(std::string item) {
    ++infos_;
    if (result_.counterexamples.size() < limit_) {
      result_.counterexamples.push_back(std::move(item));
    }
  }
  void count(std::uint64_t n = 1) { checked_ += n; }
  std::size_t failures() const { return failures_; }

  CheckResult finish(std::string detail = {}) {
    result_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    if (failures_ > 0) {
      result_.status = CheckStatus::fail;
      result_.detail = std::to_string(failures_) + " mismatches in " +
                       std::to_string(checked_) + " cases";
    } else if (informational_) {
      result_.status = CheckStatus::info;
      result_.detail = std::to_string(infos_) + " entries in " +
                       std::to_string(checked_) + " cases";
    } else {
      result_.status = CheckStatus::pass;
      result_.detail = std::to_string(checked_) + " cases";
    }
    if (!detail.empty()) result_.detail += "; " + detail;
    return std::move(result_);
  }

  CheckResult skip(std::string why) {
    result_.status = CheckStatus::skipped;
    result_.detail = std::move(why);
    return std::move(result_);
  }

  void informational() { informational_ = true; }

 private:
  CheckResult result_;
  Clock::time_point start_;
  std::size_t limit_;
  std::size_t failures_ = 0;
  std::size_t infos_ = 0;
  std::uint64_t checked_ = 0;
  bool informational_ = false;
};

std::string edge_text(const Edge& e) {
  return format_label(e.u) + "-" + format_label(e.v) + " (" + to_string(e.kind) + ")";
}

std::string pair_text(const Label& a, const Label& b) {
  return format_label(a) + "," + format_label(b);
}

// alt(x) = k with x_k nonzero: zero-ness alternates from the right end.
Label max_alt_vertex(const RadixSpec& spec) {
  std::vector<Digit> d(spec.k());
  for (std::size_t i = 0; i < spec.k(); ++i) d[i] = (spec.k() - 1 - i) % 2 == 0 ? 1 : 0;
  return Label(spec, std::move(d));
}

void check_edge_alt_law(const Edge& e, Check& c) {
  const auto ax = static_cast<long>(alt(e.u));
  const auto ay = static_cast<long>(alt(e.v));
  const long delta = ax > ay ? ax - ay : ay - ax;
  long expected = 0;
  switch (e.kind) {
    case EdgeKind::first_digit:
      expected = (e.u[0] == 0 || e.v[0] == 0) ? 1 : 0;
      break;
    case EdgeKind::zero_block_flip: expected = 1; break;
    case EdgeKind::root_clique: expected = 0; break;
  }
  c.count();
  if (delta != expected) {
    c.fail(edge_text(e) + ": |alt difference| " + std::to_string(delta) +
           ", expected " + std::to_string(expected));
  }
}

}  // namespace

VerificationReport verify_spec(const RadixSpec& spec, const VerifyOptions& opt) {
  require_order_within(spec, opt.max_order);
  const std::uint64_t n = spec.order();
  const std::size_t limit = opt.max_counterexamples;

  VerificationReport report{spec, n, n <= opt.all_pairs_limit, opt.seed, {}};

  std::vector<Label> labels;
  labels.reserve(n);
  std::vector<std::uint32_t> alts(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    labels.push_back(Label::from_index(spec, i));
    alts[i] = static_cast<std::uint32_t>(alt(labels.back()));
  }

  const EdgeStream stream = edges(spec, opt.max_order);
  const SizeTerms terms = size_closed_form(spec);

  {
    Check c("edge_set_equivalence", limit);
    const EdgeStream recursive = build_recursive(spec, opt.max_order);
    c.count(std::max(stream.size(), recursive.size()));
    if (stream.size() != recursive.size()) {
      c.fail("rules give " + std::to_string(stream.size()) + " edges, recursion " +
             std::to_string(recursive.size()));
    }
    for (std::size_t i = 0; i < std::min(stream.size(), recursive.size()); ++i) {
      if (!(stream[i] == recursive[i])) {
        c.fail("rules " + edge_text(stream[i]) + " vs recursion " +
               edge_text(recursive[i]));
      }
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("size_formulas", limit);
    SizeTerms counted;
    for (const Edge& e : stream) {
      switch (e.kind) {
        case EdgeKind::first_digit: ++counted.first_digit; break;
        case EdgeKind::zero_block_flip: ++counted.zero_block_flip; break;
        case EdgeKind::root_clique: ++counted.root_clique; break;
      }
    }
    const std::uint64_t rec = size_recursive(spec);
    c.count(3);
    if (terms.total() != rec) {
      c.fail("closed form " + std::to_string(terms.total()) + ", recursion " +
             std::to_string(rec));
    }
    if (terms.total() != stream.size()) {
      c.fail("closed form " + std::to_string(terms.total()) + ", enumeration " +
             std::to_string(stream.size()));
    }
    if (!(terms == counted)) {
      c.fail("per-rule terms " + std::to_string(terms.first_digit) + "/" +
             std::to_string(terms.zero_block_flip) + "/" +
             std::to_string(terms.root_clique) + ", enumeration " +
             std::to_string(counted.first_digit) + "/" +
             std::to_string(counted.zero_block_flip) + "/" +
             std::to_string(counted.root_clique));
    }
    report.checks.push_back(c.finish("M = " + std::to_string(terms.total())));
  }

  const ExplicitGraph g = build_graph(spec, opt.max_order);

  {
    Check c("adjacency_lists", limit);
    c.count();
    if (!g.is_symmetric()) c.fail("adjacency lists are not symmetric");
    if (!g.is_loop_free()) c.fail("adjacency lists contain a loop");
    std::uint64_t degree_sum = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto v = static_cast<ExplicitGraph::Vertex>(i);
      degree_sum += g.adjacent(v).size();
      c.count();
      if (g.adjacent(v).size() != degree(labels[i])) {
        c.fail(format_label(labels[i]) + ": " + std::to_string(g.adjacent(v).size()) +
               " neighbors, degree formula " + std::to_string(degree(labels[i])));
      }
    }
    if (degree_sum != 2 * terms.total()) {
      c.fail("degree sum " + std::to_string(degree_sum) + " != 2M = " +
             std::to_string(2 * terms.total()));
    }
    report.checks.push_back(c.finish());
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sampled;
  if (n > 1) {
    while (sampled.size() < opt.sampled_pairs) {
      const auto a = pick(rng), b = pick(rng);
      if (a != b) sampled.emplace_back(a, b);
    }
  }
  const bool exhaustive_pairs = n <= opt.exhaustive_route_limit;

  {
    Check c("adjacency_predicate", limit);
    auto probe = [&](std::uint64_t a, std::uint64_t b) {
      const auto kind = is_adjacent(labels[a], labels[b]);
      const auto back = is_adjacent(labels[b], labels[a]);
      const bool edge = g.has_edge(static_cast<ExplicitGraph::Vertex>(a),
                                   static_cast<ExplicitGraph::Vertex>(b));
      c.count();
      if (kind.has_value() != edge || kind != back) {
        c.fail(pair_text(labels[a], labels[b]) + ": predicate " +
               (kind ? to_string(*kind) : "none") + ", graph " +
               (edge ? "edge" : "non-edge"));
      }
    };
    if (exhaustive_pairs) {
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a + 1; b < n; ++b) probe(a, b);
      }
    } else {
      for (auto [a, b] : sampled) probe(a, b);
      for (const Edge& e : stream) probe(e.u.index(), e.v.index());
    }
    report.checks.push_back(c.finish(exhaustive_pairs ? "all pairs" : "sampled pairs and all edges"));
  }

  {
    Check c("edge_alt_law", limit);
    for (const Edge& e : stream) check_edge_alt_law(e, c);
    report.checks.push_back(c.finish());
  }

  {
    Check c("alt_descent_neighbors", limit);
    for (std::uint64_t i = 0; i < n; ++i) {
      if (alts[i] == 0) continue;
      c.count();
      bool one_less = false;
      for (auto v : g.adjacent(static_cast<ExplicitGraph::Vertex>(i))) {
        if (alts[v] + 1 == alts[i]) one_less = true;
        if (alts[v] + 1 < alts[i]) {
          c.fail(format_label(labels[i]) + " has neighbor " + format_label(labels[v]) +
                 " with alt " + std::to_string(alts[v]));
        }
      }
      if (!one_less) {
        c.fail(format_label(labels[i]) + " has no neighbor with alt " +
               std::to_string(alts[i] - 1));
      }
    }
    report.checks.push_back(c.finish());
  }

  {
    Check c("export_roundtrip", limit);
    auto compare = [&](const char* format, const ExplicitGraph& read) {
      c.count();
      for (std::uint64_t i = 0; i < n; ++i) {
        const auto v = static_cast<ExplicitGraph::Vertex>(i);
        if (read.adjacent(v) != g.adjacent(v)) {
          c.fail(std::string(format) + ": adjacency of " + format_label(labels[i]) +
                 " differs");
          return;
        }
      }
    };
    std::stringstream edge_list, dot;
    write_edge_list(edge_list, spec, opt.max_order);
    write_dot(dot, spec, opt.max_order);
    compare("edgelist", read_edge_list(edge_list, spec));
    compare("dot", read_dot(dot, spec));
    report.checks.push_back(c.finish());
  }

  // BFS-backed checks. Every source is visited when all pairs are checked;
  // otherwise only the sources of sampled pairs, the root, and a vertex of
  // maximal alt.
  const Label root = Label::root(spec);
  const Label far = max_alt_vertex(spec);
  std::map<std::uint64_t, std::vector<std::uint64_t>> route_targets;
  if (exhaustive_pairs) {
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        if (a != b) route_targets[a].push_back(b);
      }
    }
  } else {
    for (auto [a, b] : sampled) {
      route_targets[a].push_back(b);
      route_targets[b].push_back(a);
    }
  }
  std::map<std::uint64_t, std::vector<std::uint64_t>> distance_targets;
  std::vector<std::uint64_t> sources;
  if (report.all_pairs) {
    for (std::uint64_t i = 0; i < n; ++i) sources.push_back(i);
  } else {
    for (auto [a, b] : sampled) {
      distance_targets[a].push_back(b);
      sources.push_back(a);
    }
    for (auto& [s, targets] : route_targets) sources.push_back(s);
    sources.push_back(root.index());
    sources.push_back(far.index());
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  }

  Check connectivity("connectivity", limit);
  Check to_root("dist_to_root", limit);
  Check layers("layer_counts", limit);
  Check pairwise("distance_vs_bfs", limit);
  Check extremes("radius_diameter", limit);
  Check scan("eccentricity_scan", limit);
  Check formula("eccentricity_formula", limit);
  Check census("eccentricity_formula_census", limit);
  census.informational();
  Check routes("routing", limit);
  Check hops("next_hop_locality", limit);

  const std::uint32_t diam = diameter(spec);
  std::uint32_t min_ecc = kUnreachable, max_ecc = 0;
  std::uint64_t route_pairs = 0;
  std::uint64_t unordered_route_pairs = 0;
  if (exhaustive_pairs) {
    unordered_route_pairs = n * (n - 1) / 2;
  } else {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
    for (auto [a, b] : sampled) keys.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(keys.begin(), keys.end());
    unordered_route_pairs = static_cast<std::uint64_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
  }

  for (std::uint64_t s : sources) {
    const auto dist = bfs_from(g, static_cast<ExplicitGraph::Vertex>(s));
    const Label& x = labels[s];
    const std::uint32_t ecc = *std::max_element(dist.begin(), dist.end());

    if (s == root.index()) {
      connectivity.count();
      if (ecc == kUnreachable) {
        const auto it = std::find(dist.begin(), dist.end(), kUnreachable);
        connectivity.fail("root does not reach " +
                          format_label(labels[static_cast<std::size_t>(it - dist.begin())]));
      }
      for (std::uint64_t t = 0; t < n; ++t) {
        to_root.count();
        if (dist_to_root(labels[t]) != dist[t]) {
          to_root.fail(format_label(labels[t]) + ": alt " +
                       std::to_string(dist_to_root(labels[t])) + ", bfs " +
                       std::to_string(dist[t]));
        }
      }
      const auto dp = layer_counts(spec);
      const auto bfs = bfs_layers(dist);
      layers.count();
      if (dp != bfs) {
        std::string a, b;
        for (auto v : dp) a += std::to_string(v) + " ";
        for (auto v : bfs) b += std::to_string(v) + " ";
        layers.fail("dp [" + a + "] bfs [" + b + "]");
      }
      extremes.count();
      if (ecc != radius(spec)) {
        extremes.fail("ecc(root) = " + std::to_string(ecc) + ", expected " +
                      std::to_string(radius(spec)));
      }
    }
    if (s == far.index() && !report.all_pairs) {
      extremes.count();
      if (ecc != diam) {
        extremes.fail("ecc(" + format_label(x) + ") = " + std::to_string(ecc) +
                      ", expected diameter " + std::to_string(diam));
      }
    }

    auto check_pair = [&](std::uint64_t t) {
      const Label& y = labels[t];
      const DistanceResult d = distance(x, y);
      pairwise.count();
      if (d.value != dist[t] || distance(y, x).value != d.value || d.value > diam ||
          (d.value == 0) != (s == t)) {
        pairwise.fail("dist(" + pair_text(x, y) + "): closed form " +
                      std::to_string(d.value) + " (case " + roman(d.kind) + "), bfs " +
                      std::to_string(dist[t]));
      }
    };
    if (report.all_pairs) {
      for (std::uint64_t t = s + 1; t < n; ++t) check_pair(t);
    } else if (auto it = distance_targets.find(s); it != distance_targets.end()) {
      for (std::uint64_t t : it->second) check_pair(t);
    }

    min_ecc = std::min(min_ecc, ecc);
    max_ecc = std::max(max_ecc, ecc);
    if (!report.all_pairs && (ecc < radius(spec) || ecc > diam)) {
      extremes.fail("ecc(" + format_label(x) + ") = " + std::to_string(ecc) +
                    " outside [R, D]");
    }

    scan.count();
    const std::uint32_t scanned = eccentricity(x, opt.max_order);
    if (scanned != ecc) {
      scan.fail(format_label(x) + ": scan " + std::to_string(scanned) + ", bfs " +
                std::to_string(ecc));
    }

    const std::uint32_t published = eccentricity_formula(x);
    const bool short_branch =
        !spec.is_binomial() && x[x.size() - 1] != 0 && uniform_suffix_len(x.digits()) == 1;
    census.count();
    if (published != ecc) {
      const std::string entry = format_label(x) + ": formula " + std::to_string(published) +
                                ", bfs " + std::to_string(ecc);
      if (spec.is_binomial() || short_branch) {
        formula.fail(entry);
      } else {
        census.add_info(entry);
      }
    }
    if (spec.is_binomial() || short_branch) formula.count();

    if (auto it = route_targets.find(s); it != route_targets.end()) {
      for (std::uint64_t t : it->second) {
        const Label& y = labels[t];
        ++route_pairs;
        const Path p = route(x, y);
        routes.count();
        if (auto bad = validate_path(p)) {
          routes.fail("route(" + pair_text(x, y) + ") hop " + std::to_string(*bad) +
                      " is not an edge");
        } else if (p.edge_count() != dist[t] || p.source() != x || p.destination() != y) {
          routes.fail("route(" + pair_text(x, y) + ") has " +
                      std::to_string(p.edge_count()) + " edges, bfs " +
                      std::to_string(dist[t]));
        }
        hops.count();
        Label z = x;
        std::size_t step = 0;
        while (z != y && step < p.edge_count()) {
          z = next_hop(z, y);
          ++step;
          if (z != p.vertices[step]) break;
        }
        if (z != y || step != p.edge_count()) {
          hops.fail("next_hop from " + format_label(x) + " to " + format_label(y) +
                    " leaves the route at step " + std::to_string(step));
        }
      }
    }
  }

  if (report.all_pairs) {
    extremes.count();
    if (min_ecc != radius(spec) || max_ecc != diam) {
      extremes.fail("bfs radius " + std::to_string(min_ecc) + ", diameter " +
                    std::to_string(max_ecc) + "; expected " + std::to_string(radius(spec)) +
                    ", " + std::to_string(diam));
    }
  }

  const std::string mode = report.all_pairs ? "all pairs" : "sampled, seed " + std::to_string(opt.seed);
  report.checks.push_back(connectivity.finish());
  report.checks.push_back(to_root.finish());
  report.checks.push_back(layers.finish());
  report.checks.push_back(pairwise.finish(mode));
  report.checks.push_back(extremes.finish("R = " + std::to_string(radius(spec)) +
                                          ", D = " + std::to_string(diam)));
  report.checks.push_back(scan.finish());
  report.checks.push_back(formula.finish(spec.is_binomial() ? "binomial: every vertex"
                                                            : "short-suffix branch only"));
  report.checks.push_back(census.finish());
  report.checks.push_back(routes.finish(std::to_string(unordered_route_pairs) +
                                      " unordered pairs, both directions (" +
                                      std::to_string(route_pairs) + " routes)"));
  report.checks.push_back(hops.finish());

  {
    Check c("conjugation_automorphism", limit);
    if (!spec.is_binomial()) {
      report.checks.push_back(c.skip("spec is not binomial"));
    } else {
      for (const Edge& e : stream) {
        c.count();
        if (!is_adjacent(conjugate(e.u), conjugate(e.v))) {
          c.fail(edge_text(e) + " maps to a non-edge");
        }
      }
      report.checks.push_back(c.finish());
    }
  }

  return report;
}

}  // namespace hnet
