#include "binedge/catalog_data.hpp"

namespace binedge {
namespace {

std::vector<CertificateTemplate> make_templates() {
  std::vector<CertificateTemplate> out;

  // Roles 1..4 on the 4-cycle; the target is P_emptyset cap P_{2,4}.
  out.push_back({"c4-two-primes",
                 "intersection of the minimal primes for T = {} and T = {2,4} of the 4-cycle "
                 "is the radical of four binomials",
                 {"1", "2", "3", "4"},
                 {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
                 {{2, 4}},
                 {{{1, 2}, {3, 4}}, {{2, 3}}, {{1, 4}}, {{2, 4}}},
                 {{{1, 2}, 2}, {{3, 4}, 2}}});

  out.push_back({"diamond13-two-pendants",
                 "diamond with chord v1v3 plus pendant edges v1v5 and v2v6 needs 5 binomials",
                 {"v1", "v2", "v3", "v4", "v5", "v6"},
                 {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {1, 5}, {2, 6}},
                 {},
                 {{{1, 3}, {2, 6}}, {{1, 5}, {3, 4}}, {{1, 2}}, {{1, 4}}, {{2, 3}}},
                 {{{1, 3}, 2}, {{2, 6}, 2}, {{1, 5}, 4}, {{3, 4}, 4}}});

  out.push_back({"diamond24-two-pendants",
                 "diamond with chord v2v4 plus pendant edges v1v5 and v2v6 needs 5 binomials",
                 {"v1", "v2", "v3", "v4", "v5", "v6"},
                 {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}, {1, 5}, {2, 6}},
                 {},
                 {{{1, 5}, {2, 4}}, {{2, 6}, {3, 4}}, {{1, 2}}, {{1, 4}}, {{2, 3}}},
                 {{{1, 5}, 2}, {{2, 4}, 2}, {{2, 6}, 4}, {{3, 4}, 4}}});

  out.push_back({"k4-two-pendants",
                 "K4 plus pendant edges v1v5 and v2v6 needs 5 binomials",
                 {"v1", "v2", "v3", "v4", "v5", "v6"},
                 {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {2, 6}},
                 {},
                 {{{1, 3}, {2, 6}}, {{1, 5}, {3, 4}}, {{1, 4}, {2, 3}}, {{1, 2}}, {{2, 4}}},
                 {{{1, 3}, 3}, {{2, 6}, 3}, {{1, 5}, 5}, {{3, 4}, 5}, {{1, 4}, 2}, {{2, 3}, 2}}});

  out.push_back({"triangle-pendant",
                 "triangle u1 v1 w1 with pendant edge u1u2 needs 3 binomials",
                 {"u1", "u2", "v1", "w1"},
                 {{1, 3}, {1, 2}, {3, 4}, {1, 4}},
                 {},
                 {{{1, 2}, {3, 4}}, {{1, 3}}, {{1, 4}}},
                 {{{1, 2}, 2}, {{3, 4}, 2}}});

  out.push_back({"edge-join-edge-vertex",
                 "an edge joined with an edge plus an isolated vertex needs 5 binomials",
                 {"1", "2", "3", "4", "5"},
                 {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}},
                 {},
                 {{{1, 3}, {2, 5}}, {{1, 4}, {2, 3}}, {{1, 5}, {3, 4}}, {{1, 2}}, {{2, 4}}},
                 {{{1, 3}, 3}, {{2, 5}, 3}, {{1, 4}, 2}, {{2, 3}, 2}, {{1, 5}, 5}, {{3, 4}, 5}}});

  // In the joins with 2K1 the two isolated vertices are the last roles i, j.
  out.push_back({"edge-join-2k1",
                 "one edge joined with two isolated vertices needs 4 binomials",
                 {"1", "2", "i", "j"},
                 {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
                 {},
                 {{{1, 3}, {2, 4}}, {{1, 2}}, {{1, 4}}, {{2, 3}}},
                 {{{1, 3}, 2}, {{2, 4}, 2}}});

  out.push_back({"path2-join-2k1",
                 "a path with two edges joined with two isolated vertices needs 6 binomials",
                 {"1", "2", "3", "i", "j"},
                 {{1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
                 {},
                 {{{1, 2}}, {{2, 3}}, {{1, 5}}, {{3, 4}}, {{1, 4}, {2, 5}}, {{2, 4}, {3, 5}}},
                 {{{1, 4}, 2}, {{2, 5}, 2}, {{2, 4}, 2}, {{3, 5}, 2}}});

  out.push_back({"path3-join-2k1",
                 "a path with three edges joined with two isolated vertices needs 8 binomials",
                 {"1", "2", "3", "4", "i", "j"},
                 {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}},
                 {},
                 {{{1, 2}}, {{2, 3}}, {{3, 4}}, {{1, 6}}, {{4, 5}},
                  {{1, 5}, {2, 6}}, {{2, 5}, {3, 6}}, {{3, 5}, {4, 6}}},
                 {{{1, 5}, 2}, {{2, 6}, 2}, {{2, 5}, 4}, {{3, 6}, 4}, {{3, 5}, 2}, {{4, 6}, 2}}});

  out.push_back({"star3-join-2k1",
                 "a star with three edges joined with two isolated vertices needs 8 binomials",
                 {"1", "2", "3", "4", "i", "j"},
                 {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}},
                 {},
                 {{{1, 2}, {3, 6}}, {{1, 5}, {2, 6}}, {{1, 6}, {4, 5}}, {{1, 3}}, {{1, 4}},
                  {{2, 5}}, {{3, 5}}, {{4, 6}}},
                 {{{1, 2}, 2}, {{3, 6}, 2}, {{1, 5}, 3}, {{2, 6}, 3}, {{1, 6}, 2}, {{4, 5}, 2}}});

  out.push_back({"triangle-join-2k1",
                 "a triangle joined with two isolated vertices needs 6 binomials",
                 {"1", "2", "3", "i", "j"},
                 {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
                 {},
                 {{{1, 2}, {3, 4}}, {{1, 3}, {2, 5}}, {{1, 5}, {2, 4}}, {{1, 4}}, {{2, 3}}, {{3, 5}}},
                 {{{1, 2}, 3}, {{3, 4}, 3}, {{1, 3}, 2}, {{2, 5}, 2}, {{1, 5}, 5}, {{2, 4}, 5}}});

  return out;
}

}  // namespace

const std::vector<CertificateTemplate>& builtin_templates() {
  static const std::vector<CertificateTemplate> templates = make_templates();
  return templates;
}

const CertificateTemplate* find_template(const std::string& name) {
  for (const auto& t : builtin_templates())
    if (t.name == name) return &t;
  return nullptr;
}

}  // namespace binedge
