#ifndef BINEDGE_CATALOG_DATA_HPP
#define BINEDGE_CATALOG_DATA_HPP

#include <string>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// sign * f_{a,b} over template roles a, b (1-based).
struct BinomialRef {
  int a;
  int b;
  int sign = 1;
};

struct ClaimTemplate {
  BinomialRef f;
  int exponent;  ///< exponent the construction guarantees; an upper limit
};

/// Combinatorial description of a radical certificate for m = 2: the target
/// ideal is generated by f_e over `graph_edges` plus `extra_target`, and the
/// witness is a list of sums of f's whose radical equals the target.
struct CertificateTemplate {
  std::string name;
  std::string description;
  std::vector<std::string> roles;
  std::vector<Edge> graph_edges;
  std::vector<Edge> extra_target;
  std::vector<std::vector<BinomialRef>> witness;
  std::vector<ClaimTemplate> claims;

  int role_count() const { return static_cast<int>(roles.size()); }
  /// True when the target is exactly J_2 of the pattern graph.
  bool targets_graph_ideal() const { return extra_target.empty(); }
  SimpleGraph pattern_graph() const { return SimpleGraph(role_count(), graph_edges); }
};

const std::vector<CertificateTemplate>& builtin_templates();
const CertificateTemplate* find_template(const std::string& name);

}  // namespace binedge

#endif  // BINEDGE_CATALOG_DATA_HPP
