#include "tecc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace tecc {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) + ": " +
                           what);
}

// Reads the next significant line; comments ('#' first) and blanks skipped.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::pair<long long, long long> parse_int_pair(const std::string& line, int line_no) {
  std::istringstream ss(line);
  long long a = 0, b = 0;
  if (!(ss >> a >> b)) parse_fail(line_no, "expected two integers, got \"" + line + "\"");
  std::string rest;
  if (ss >> rest) parse_fail(line_no, "trailing content \"" + rest + "\"");
  return {a, b};
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!next_data_line(in, line, line_no)) parse_fail(line_no + 1, "missing \"n m\" header");
  const auto [n, m] = parse_int_pair(line, line_no);
  if (n < 0 || m < 0) parse_fail(line_no, "negative count in header");

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no))
      parse_fail(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    const auto [u, v] = parse_int_pair(line, line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(line_no, "endpoint out of range [0," + std::to_string(n) + ")");
    pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (next_data_line(in, line, line_no))
    parse_fail(line_no, "unexpected data after " + std::to_string(m) + " edges");
  return Multigraph::from_edge_list(static_cast<int>(n), pairs);
}

Multigraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

DecompositionDoc::Edge doc_edge(const Multigraph& g, const OutputEdge& e) {
  DecompositionDoc::Edge de;
  if (e.kind == OutputEdge::Kind::Original) {
    const auto [u, v] = g.endpoints(e.id);
    de = {false, e.id, std::min(u, v), std::max(u, v), -1};
  } else {
    de = {true, -1, std::min(e.u, e.v), std::max(e.u, e.v), e.cut_tag};
  }
  return de;
}

// kind, endpoints, then id / tag
std::tuple<int, VertexId, VertexId, EdgeId, int> edge_key(const DecompositionDoc::Edge& e) {
  return {e.aux ? 1 : 0, e.u, e.v, e.id, e.cut};
}

}  // namespace

DecompositionDoc make_doc(const Multigraph& g, const Decomposition& d) {
  DecompositionDoc doc;
  doc.n = g.vertex_count();
  doc.m = g.edge_count();

  for (const auto& comp : d.components) {
    DecompositionDoc::Comp c;
    c.vertices = comp.vertices;
    std::sort(c.vertices.begin(), c.vertices.end());
    for (const auto& e : comp.edges) c.edges.push_back(doc_edge(g, e));
    std::sort(c.edges.begin(), c.edges.end(),
              [](const auto& a, const auto& b) { return edge_key(a) < edge_key(b); });
    doc.components.push_back(std::move(c));
  }
  std::sort(doc.components.begin(), doc.components.end(),
            [](const auto& a, const auto& b) { return a.vertices.front() < b.vertices.front(); });

  for (const EdgeId e : d.bridges) {
    const auto [u, v] = g.endpoints(e);
    doc.bridges.push_back({e, std::min(u, v), std::max(u, v)});
  }
  std::sort(doc.bridges.begin(), doc.bridges.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });

  for (size_t i = 0; i < d.two_cuts.size(); ++i) {
    DecompositionDoc::Cut cut;
    cut.tag = static_cast<int>(i);
    cut.first = doc_edge(g, d.two_cuts[i].first);
    cut.second = doc_edge(g, d.two_cuts[i].second);
    if (edge_key(cut.second) < edge_key(cut.first)) std::swap(cut.first, cut.second);
    doc.two_cuts.push_back(cut);
  }
  return doc;
}

namespace {

void print_edge(std::ostream& out, const DecompositionDoc::Edge& e) {
  if (e.aux)
    out << "auxiliary (" << e.u << "," << e.v << ") cut " << e.cut;
  else
    out << "original " << e.id << " (" << e.u << "," << e.v << ")";
}

}  // namespace

std::string to_text(const DecompositionDoc& doc) {
  std::ostringstream out;
  out << "graph n=" << doc.n << " m=" << doc.m << '\n';
  out << "components " << doc.components.size() << '\n';
  for (size_t i = 0; i < doc.components.size(); ++i) {
    const auto& c = doc.components[i];
    out << "component " << i << '\n';
    out << "  vertices:";
    for (const VertexId v : c.vertices) out << ' ' << v;
    out << '\n';
    out << "  edges: " << c.edges.size() << '\n';
    for (const auto& e : c.edges) {
      out << "    ";
      print_edge(out, e);
      out << '\n';
    }
  }
  out << "bridges: " << doc.bridges.size() << '\n';
  for (const auto& b : doc.bridges)
    out << "  bridge " << b.id << " (" << b.u << "," << b.v << ")\n";
  out << "two-cuts: " << doc.two_cuts.size() << '\n';
  for (const auto& cut : doc.two_cuts) {
    out << "  cut " << cut.tag << ": ";
    print_edge(out, cut.first);
    out << " + ";
    print_edge(out, cut.second);
    out << '\n';
  }
  return out.str();
}

namespace {

using json = nlohmann::ordered_json;

json edge_to_json(const DecompositionDoc::Edge& e) {
  json j;
  if (e.aux) {
    j["kind"] = "auxiliary";
    j["u"] = e.u;
    j["v"] = e.v;
    j["cut"] = e.cut;
  } else {
    j["kind"] = "original";
    j["id"] = e.id;
    j["u"] = e.u;
    j["v"] = e.v;
  }
  return j;
}

DecompositionDoc::Edge edge_from_json(const json& j) {
  DecompositionDoc::Edge e;
  e.aux = j.at("kind").get<std::string>() == "auxiliary";
  e.u = j.at("u").get<VertexId>();
  e.v = j.at("v").get<VertexId>();
  if (e.aux)
    e.cut = j.at("cut").get<int>();
  else
    e.id = j.at("id").get<EdgeId>();
  return e;
}

}  // namespace

std::string to_json(const DecompositionDoc& doc) {
  json j;
  j["n"] = doc.n;
  j["m"] = doc.m;
  j["components"] = json::array();
  for (const auto& c : doc.components) {
    json jc;
    jc["vertices"] = c.vertices;
    jc["edges"] = json::array();
    for (const auto& e : c.edges) jc["edges"].push_back(edge_to_json(e));
    j["components"].push_back(std::move(jc));
  }
  j["bridges"] = json::array();
  for (const auto& b : doc.bridges)
    j["bridges"].push_back(json{{"id", b.id}, {"u", b.u}, {"v", b.v}});
  j["two_cuts"] = json::array();
  for (const auto& cut : doc.two_cuts)
    j["two_cuts"].push_back(json{{"tag", cut.tag},
                                 {"first", edge_to_json(cut.first)},
                                 {"second", edge_to_json(cut.second)}});
  return j.dump(2) + "\n";
}

DecompositionDoc doc_from_json(const std::string& text) {
  const json j = json::parse(text);
  DecompositionDoc doc;
  doc.n = j.at("n").get<int>();
  doc.m = j.at("m").get<int>();
  for (const auto& jc : j.at("components")) {
    DecompositionDoc::Comp c;
    c.vertices = jc.at("vertices").get<std::vector<VertexId>>();
    for (const auto& je : jc.at("edges")) c.edges.push_back(edge_from_json(je));
    doc.components.push_back(std::move(c));
  }
  for (const auto& jb : j.at("bridges"))
    doc.bridges.push_back(
        {jb.at("id").get<EdgeId>(), jb.at("u").get<VertexId>(), jb.at("v").get<VertexId>()});
  for (const auto& jc : j.at("two_cuts")) {
    DecompositionDoc::Cut cut;
    cut.tag = jc.at("tag").get<int>();
    cut.first = edge_from_json(jc.at("first"));
    cut.second = edge_from_json(jc.at("second"));
    doc.two_cuts.push_back(cut);
  }
  return doc;
}

std::string export_dot(const Multigraph& g, const Decomposition& d) {
  std::vector<int> component_of(static_cast<size_t>(g.vertex_count()), -1);
  const auto doc = make_doc(g, d);
  for (size_t c = 0; c < doc.components.size(); ++c)
    for (const VertexId v : doc.components[c].vertices)
      component_of[static_cast<size_t>(v)] = static_cast<int>(c);

  std::ostringstream out;
  out << "graph tecc {\n";
  for (size_t c = 0; c < doc.components.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"component " << c << "\";\n";
    for (const VertexId v : doc.components[c].vertices) out << "    " << v << ";\n";
    for (const auto& e : doc.components[c].edges) {
      out << "    " << e.u << " -- " << e.v;
      if (e.aux) out << " [style=dashed]";
      out << ";\n";
    }
    out << "  }\n";
  }
  // Original edges between components are exactly the bridges and cut
  // members; drawn outside the clusters.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (component_of[static_cast<size_t>(u)] != component_of[static_cast<size_t>(v)])
      out << "  " << u << " -- " << v << " [style=bold, color=red];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tecc
