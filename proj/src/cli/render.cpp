#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ghj/cli.hpp"

namespace ghj::cli {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string matrix_text(const IntMatrix& m, const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols) {
  std::size_t w = 1;
  for (const auto& s : rows) w = std::max(w, s.size());
  std::size_t cw = 1;
  for (const auto& s : cols) cw = std::max(cw, s.size());
  for (auto v : m.data()) cw = std::max(cw, std::to_string(v).size());
  std::ostringstream os;
  os << std::string(w, ' ');
  for (const auto& c : cols) os << ' ' << std::string(cw - c.size(), ' ') << c;
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << rows[r] << std::string(w - rows[r].size(), ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto s = m(r, c) ? std::to_string(m(r, c)) : std::string(".");
      os << ' ' << std::string(cw - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string esspath_text(const EssPathTable& table) {
  const auto& g = table.graph();
  std::ostringstream os;
  os << g.name() << "  h = " << g.coxeter_number() << "  lengths 0.." << table.size() - 1 << "\n";
  for (std::size_t n = 0; n < table.size(); ++n) {
    os << "\nE(" << n << ")\n" << matrix_text(table[n], g.labels(), g.labels());
  }
  return os.str();
}

json esspath_json(const EssPathTable& table) {
  const auto& g = table.graph();
  json out;
  out["schemaVersion"] = kSchemaVersion;
  out["diagram"] = g.name();
  out["coxeterNumber"] = g.coxeter_number();
  out["vertices"] = g.labels();
  json tables = json::array();
  for (std::size_t n = 0; n < table.size(); ++n) {
    json rows = json::array();
    for (std::size_t r = 0; r < table[n].rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < table[n].cols(); ++c) row.push_back(table[n](r, c));
      rows.push_back(std::move(row));
    }
    tables.push_back({{"diagram", g.name()}, {"n", n}, {"rows", std::move(rows)}});
  }
  out["tables"] = std::move(tables);
  return out;
}

std::string graph_dot(const PrincipalGraphData& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  os << "  rankdir=TB;\n  node [shape=circle, fontsize=10];\n";
  int max_depth = 0;
  for (const auto& v : g.evens) max_depth = std::max(max_depth, v.depth);
  for (const auto& v : g.odds) max_depth = std::max(max_depth, v.depth);
  for (std::size_t i = 0; i < g.evens.size(); ++i)
    os << "  e" << i << " [label=" << quote(g.evens[i].label)
       << (i == g.distinguished() ? ", shape=doublecircle" : "") << "];\n";
  for (std::size_t j = 0; j < g.odds.size(); ++j)
    os << "  o" << j << " [label=" << quote(g.odds[j].label) << ", shape=box];\n";
  for (int d = 0; d <= max_depth; ++d) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < g.evens.size(); ++i)
      if (g.evens[i].depth == d) os << " e" << i << ";";
    for (std::size_t j = 0; j < g.odds.size(); ++j)
      if (g.odds[j].depth == d) os << " o" << j << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < g.evens.size(); ++i)
    for (std::size_t j = 0; j < g.odds.size(); ++j)
      for (std::int64_t m = 0; m < g.adjacency(i, j); ++m) os << "  e" << i << " -- o" << j << ";\n";
  os << "}\n";
  return os.str();
}

json graph_json(const PrincipalGraphData& g, const std::string& diagram, const std::string& vertex,
                bool dual) {
  json out;
  out["schemaVersion"] = kSchemaVersion;
  out["diagram"] = diagram;
  out["vertex"] = vertex;
  out["graph"] = dual ? "dual principal" : "principal";
  json evens = json::array(), odds = json::array(), de = json::array(), dodd = json::array();
  for (const auto& v : g.evens) evens.push_back(v.label), de.push_back(v.depth);
  for (const auto& v : g.odds) odds.push_back(v.label), dodd.push_back(v.depth);
  out["evens"] = std::move(evens);
  out["odds"] = std::move(odds);
  json edges = json::array();
  for (std::size_t i = 0; i < g.evens.size(); ++i)
    for (std::size_t j = 0; j < g.odds.size(); ++j)
      if (g.adjacency(i, j)) edges.push_back({g.evens[i].label, g.odds[j].label, g.adjacency(i, j)});
  out["edges"] = std::move(edges);
  out["depths"] = {{"evens", std::move(de)}, {"odds", std::move(dodd)}};
  out["diagnostics"] = g.diagnostics;
  return out;
}

std::string system_text(const ConnectionSystem& sys) {
  const auto& g = sys.graph;
  std::ostringstream os;
  const auto evens = sys.even_indices();
  os << g.name() << "-" << g.name() << " connections: " << sys.size() << " irreducible ("
     << evens.size() << " even, " << sys.size() - evens.size() << " odd)\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& w = sys.irreducibles[i];
    os << "\n" << w.alias << "  d = " << fixed(w.qdim, 6) << "  " << (w.even ? "even" : "odd")
       << "  conjugate " << sys.irreducibles[w.conjugate].alias << "\n";
    os << matrix_text(w.n, g.labels(), g.labels());
  }
  return os.str();
}

std::string product_form(const FusionRing& ring, std::size_t i, std::size_t j) {
  std::string out;
  for (auto [k, m] : ring.product(i, j)) {
    if (!out.empty()) out += ' ';
    out += ring.basis[k];
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

std::string fusion_table_text(const FusionRing& ring) {
  std::ostringstream os;
  const auto verdict = is_commutative(ring);
  os << "fusion table over " << ring.size() << " elements, "
     << (verdict.commutative ? "commutative" : "noncommutative");
  if (verdict.witness)
    os << " (" << ring.basis[verdict.witness->first] << " " << ring.basis[verdict.witness->second]
       << " != " << ring.basis[verdict.witness->second] << " " << ring.basis[verdict.witness->first] << ")";
  os << "\n";
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = 0; j < ring.size(); ++j)
      os << ring.basis[i] << " . " << ring.basis[j] << " = " << product_form(ring, i, j) << "\n";
  return os.str();
}

json system_json(const ConnectionSystem& sys, const FusionRing& ring) {
  json out;
  out["schemaVersion"] = kSchemaVersion;
  out["diagram"] = sys.graph.name();
  out["vertices"] = sys.graph.labels();
  json irr = json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& w = sys.irreducibles[i];
    json rows = json::array();
    for (std::size_t r = 0; r < w.n.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < w.n.cols(); ++c) row.push_back(w.n(r, c));
      rows.push_back(std::move(row));
    }
    irr.push_back({{"id", i},
                   {"alias", w.alias},
                   {"qdim", w.qdim},
                   {"parity", w.even ? "even" : "odd"},
                   {"conjugate", w.conjugate},
                   {"n", std::move(rows)}});
  }
  out["irreducibles"] = std::move(irr);
  if (sys.epsilon) out["epsilon"] = *sys.epsilon;
  const auto verdict = is_commutative(ring);
  out["commutative"] = verdict.commutative;
  json products = json::array();
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = 0; j < ring.size(); ++j) {
      json terms = json::array();
      for (auto [k, m] : ring.product(i, j)) terms.push_back({k, m});
      products.push_back({{"left", i}, {"right", j}, {"terms", std::move(terms)}});
    }
  out["products"] = std::move(products);
  return out;
}

json report_json(const GHJReport& r) {
  json out;
  out["schemaVersion"] = kSchemaVersion;
  out["diagram"] = r.diagram;
  out["vertex"] = r.vertex;
  out["index"] = r.index;
  out["evenCounts"] = {r.principal_evens(), r.dual_evens()};
  out["graphsIsomorphic"] = r.graphs_isomorphic;
  out["ringsIsomorphic"] = r.rings_isomorphic;
  out["nnRing"] = {{"basis", r.rings.nn.basis}, {"commutative", r.nn_commutative}};
  out["mmRing"] = {{"basis", r.rings.mm.basis}, {"commutative", r.mm_commutative}};
  out["principal"] = graph_json(r.principal, r.diagram, r.vertex, false);
  out["dual"] = graph_json(r.dual, r.diagram, r.vertex, true);
  if (r.intermediate)
    out["intermediate"] = {{"base", r.intermediate->base}, {"irreducible", r.intermediate_alias}};
  else
    out["intermediate"] = nullptr;
  return out;
}

std::string report_box(const GHJReport& r) {
  std::vector<std::string> lines;
  lines.push_back("GHJ(" + r.diagram + ", " + r.vertex + ")");
  lines.push_back("index                 " + fixed(r.index, 9));
  lines.push_back("even vertices         " + std::to_string(r.principal_evens()) +
                  (r.principal_evens() == r.dual_evens() ? " = " : " != ") +
                  std::to_string(r.dual_evens()));
  lines.push_back(std::string("graphs                ") +
                  (r.graphs_isomorphic ? "principal = dual" : "principal != dual"));
  lines.push_back("N-N ring              " + std::to_string(r.rings.nn.size()) + " elements, " +
                  (r.nn_commutative ? "commutative" : "noncommutative"));
  lines.push_back("M-M ring              " + std::to_string(r.rings.mm.size()) + " elements, " +
                  (r.mm_commutative ? "commutative" : "noncommutative"));
  lines.push_back(std::string("fusion rules          ") + (r.rings_isomorphic ? "equal" : "different"));
  lines.push_back("intermediate          " +
                  (r.intermediate ? "yes, via " + r.intermediate_alias : std::string("none")));
  std::size_t w = 0;
  for (const auto& l : lines) w = std::max(w, l.size());
  std::ostringstream os;
  os << "+" << std::string(w + 2, '-') << "+\n";
  for (const auto& l : lines) os << "| " << l << std::string(w - l.size(), ' ') << " |\n";
  os << "+" << std::string(w + 2, '-') << "+\n";
  return os.str();
}

std::string subequivalence_text(const SubequivalenceReport& rep) {
  std::ostringstream os;
  os << rep.larger << (rep.holds ? " > " : " ?> ") << rep.smaller << "  (ring-level evidence, marked";
  for (const auto& v : rep.vertices) os << " " << v;
  os << ")\n";
  for (const auto& e : rep.evidence) os << "  " << e << "\n";
  return os.str();
}

}  // namespace ghj::cli
