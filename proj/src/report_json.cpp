#include "binedge/report_json.hpp"

#include <sstream>

namespace binedge {
namespace {

Json interval_json(const Interval& i) { return Json{{"lo", i.lo}, {"hi", i.hi}}; }

std::string interval_text(const Interval& i) {
  if (i.lo == i.hi) return std::to_string(i.lo);
  return std::to_string(i.lo) + " .. " + std::to_string(i.hi);
}

}  // namespace

Json graph_to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json report_to_json(const BoundsReport& r) {
  Json provenance = Json::array();
  for (const auto& p : r.provenance)
    provenance.push_back(Json{{"bound", p.bound}, {"theorem", p.theorem}, {"value", p.value}});
  return Json{
      {"graph", graph_to_json(r.graph)},
      {"m", r.m},
      {"char", r.characteristic},
      {"ht", r.ht},
      {"mu", r.mu},
      {"bounds", Json{{"pd", interval_json(r.pd)}, {"cd", interval_json(r.cd)}, {"ara", interval_json(r.ara)}}},
      {"flags", Json{{"ci", r.ci}, {"aci", r.aci}, {"cci", verdict_name(r.cci)}, {"stci", verdict_name(r.stci)}}},
      {"provenance", std::move(provenance)},
  };
}

std::string format_report_text(const BoundsReport& r) {
  std::ostringstream out;
  out << "graph: n=" << r.graph.vertex_count() << " q=" << r.graph.edge_count();
  if (!r.families.empty()) {
    out << " (";
    for (std::size_t i = 0; i < r.families.size(); ++i) out << (i ? ", " : "") << r.families[i];
    out << ")";
  }
  out << "\n";
  out << "m: " << r.m << "  char: " << r.characteristic << "\n";
  out << "ht: " << r.ht << "\n";
  out << "mu: " << r.mu << "\n";
  out << "pd: " << interval_text(r.pd) << "\n";
  out << "cd: " << interval_text(r.cd) << "\n";
  out << "ara: " << interval_text(r.ara) << "\n";
  out << "ci: " << (r.ci ? "yes" : "no") << "\n";
  out << "aci: " << (r.aci ? "yes" : "no") << "\n";
  out << "cci: " << verdict_name(r.cci) << "  (" << r.cci_reason << ")\n";
  out << "stci: " << verdict_name(r.stci) << "  (" << r.stci_reason << ")\n";
  if (!r.aci_commentary.empty()) out << "note: " << r.aci_commentary << "\n";
  out << "provenance:\n";
  for (const auto& p : r.provenance) out << "  " << p.bound << " = " << p.value << "  [" << p.theorem << "]\n";
  return out.str();
}

}  // namespace binedge
