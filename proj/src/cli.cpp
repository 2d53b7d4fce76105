#include "binedge/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "binedge/bei.hpp"
#include "binedge/bounds.hpp"
#include "binedge/cert_io.hpp"
#include "binedge/certificates.hpp"
#include "binedge/errors.hpp"
#include "binedge/graph_io.hpp"
#include "binedge/poly_text.hpp"
#include "binedge/report_json.hpp"

namespace binedge {
namespace {

struct Options {
  int m = 2;
  std::uint32_t characteristic = 0;
  std::string order = "degrevlex";
  bool json = false;
  int k_max = kDefaultPowerSearch;
  double max_gb_seconds = 0;
  std::size_t max_gb_terms = 0;

  GbLimits limits() const { return {max_gb_seconds, max_gb_terms}; }
};

void add_ring_flags(CLI::App* app, Options& o) {
  app->add_option("--m", o.m, "number of matrix rows")->check(CLI::Range(2, 64));
  app->add_option("--char", o.characteristic, "field characteristic (0 or a prime)");
}

void add_budget_flags(CLI::App* app, Options& o) {
  app->add_option("--max-gb-seconds", o.max_gb_seconds, "wall-clock budget per Groebner basis (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--max-gb-terms", o.max_gb_terms, "term budget per Groebner basis (0 = none)");
}

void check_characteristic(std::uint32_t p) {
  if (p != 0 && !is_prime(p)) throw InvalidArgument("--char must be 0 or a prime");
}

/// Evaluates fn(0..count-1) on a few threads; results keep index order and the
/// first failure (by index) is rethrown after all workers finish.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        results[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(count);
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

SimpleGraph load_connected(const std::string& path) {
  SimpleGraph g = read_graph_file(path);
  require_connected(g);
  return g;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Json set_json(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

int cmd_analyze(const std::string& path, const Options& o, std::ostream& out) {
  const SimpleGraph g = load_connected(path);
  const BoundsReport r = bounds_report(o.m, g, o.characteristic);
  if (o.json)
    out << report_to_json(r).dump(2) << "\n";
  else
    out << format_report_text(r);
  return kExitOk;
}

int cmd_cutsets(const std::string& path, const Options& o, std::ostream& out) {
  const SimpleGraph g = load_connected(path);
  const auto primes = minimal_primes(o.m, g, o.characteristic);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& p : primes) {
      Json comps = Json::array();
      for (const auto& c : p.components) comps.push_back(set_json(c));
      rows.push_back(Json{{"T", set_json(p.cut)}, {"components", std::move(comps)}, {"height", p.height}});
    }
    out << Json{{"m", o.m}, {"cut_sets", std::move(rows)}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "cut sets: " << primes.size() << "  (m = " << o.m << ")\n";
  for (const auto& p : primes) {
    out << "T = " << set_text(p.cut) << "  c(T) = " << p.components.size() << "  components:";
    for (const auto& c : p.components) out << " " << set_text(c);
    out << "  ht(P_T) = " << p.height << "\n";
  }
  return kExitOk;
}

int cmd_ideal(const std::string& path, const Options& o, std::ostream& out) {
  const SimpleGraph g = read_graph_file(path);
  if (o.order != "degrevlex" && o.order != "lex") throw InvalidArgument("--order must be degrevlex or lex");
  const auto gbei = build_gbei(o.m, g, o.characteristic);
  const RingSpec& ring = gbei.ideal.ring();
  const MonomialOrder order =
      o.order == "lex" ? MonomialOrder::lex(ring.variable_count()) : MonomialOrder::degrevlex(ring.variable_count());
  const Ideal ideal = gbei.ideal.with_order(order);
  const auto& basis = ideal.groebner_basis(o.limits());

  if (o.json) {
    Json gens = Json::array(), gb = Json::array();
    for (const auto& f : ideal.generators()) gens.push_back(format_polynomial(f, order));
    for (const auto& f : basis) gb.push_back(format_polynomial(f, order));
    out << Json{{"m", o.m},
                {"char", o.characteristic},
                {"order", order.name()},
                {"generators", std::move(gens)},
                {"groebner_basis", std::move(gb)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "ring: " << ring.rows() << " x " << ring.cols() << " matrix  char " << o.characteristic << "\n";
  out << "generators (" << ideal.generators().size() << "):\n";
  for (const auto& f : ideal.generators()) out << "  " << format_polynomial(f, order) << "\n";
  out << "reduced groebner basis, " << order.name() << " (" << basis.size() << "):\n";
  for (const auto& f : basis) out << "  " << format_polynomial(f, order) << "\n";
  return kExitOk;
}

const char* decomposition_name(DecompositionResult::Status s) {
  switch (s) {
    case DecompositionResult::Status::Verified: return "verified";
    case DecompositionResult::Status::Mismatch: return "mismatch";
    case DecompositionResult::Status::NotAttempted: return "not attempted";
  }
  return "not attempted";
}

int cmd_decompose(const std::string& path, const Options& o, std::ostream& out) {
  const SimpleGraph g = load_connected(path);
  const auto result = decompose_verify(o.m, g, o.limits(), o.characteristic);
  if (o.json) {
    out << Json{{"m", o.m},
                {"char", o.characteristic},
                {"primes", result.prime_count},
                {"status", decomposition_name(result.status)},
                {"detail", result.detail}}
               .dump(2)
        << "\n";
  } else {
    out << "m: " << o.m << "  char: " << o.characteristic << "\n";
    out << "minimal primes: " << result.prime_count << "\n";
    out << "status: " << decomposition_name(result.status) << "\n";
    out << "detail: " << result.detail << "\n";
  }
  switch (result.status) {
    case DecompositionResult::Status::Verified: return kExitOk;
    case DecompositionResult::Status::Mismatch: return kExitFailed;
    case DecompositionResult::Status::NotAttempted: return kExitNotAttempted;
  }
  return kExitInternal;
}

Json cert_report_json(const Certificate& c, const CertReport& r) {
  Json claims = Json::array();
  for (const auto& cl : r.claims)
    claims.push_back(Json{{"f", cl.label},
                          {"claimed", cl.claimed},
                          {"found", cl.found ? Json(*cl.found) : Json(nullptr)},
                          {"ok", cl.ok}});
  Json uncovered = Json::array();
  for (const auto& u : r.uncovered) uncovered.push_back(u);
  const std::size_t inside = static_cast<std::size_t>(
      std::count(r.witness_in_target.begin(), r.witness_in_target.end(), true));
  Json j{{"name", c.name},
         {"status", status_name(r.status)},
         {"witness_size", c.witness.size()},
         {"witness_in_target", inside},
         {"claims", std::move(claims)},
         {"uncovered", std::move(uncovered)},
         {"detail", r.detail}};
  return j;
}

void print_cert_report(const Certificate& c, const CertReport& r, std::ostream& out) {
  out << "certificate: " << (c.name.empty() ? "(unnamed)" : c.name) << "\n";
  out << "ring: " << c.ring.rows() << " x " << c.ring.cols() << "  char " << c.ring.characteristic() << "\n";
  const auto inside = std::count(r.witness_in_target.begin(), r.witness_in_target.end(), true);
  out << "witness in target: " << inside << "/" << c.witness.size() << "\n";
  std::size_t width = 5;
  for (const auto& cl : r.claims) width = std::max(width, cl.label.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "claim" << "claimed  found  ok\n";
  for (const auto& cl : r.claims)
    out << std::left << std::setw(static_cast<int>(width) + 2) << cl.label << std::setw(9) << cl.claimed
        << std::setw(7) << (cl.found ? std::to_string(*cl.found) : std::string("-")) << (cl.ok ? "yes" : "no")
        << "\n";
  out << std::right;
  if (r.uncovered.empty()) {
    out << "coverage: every target generator accounted for\n";
  } else {
    out << "uncovered:";
    for (const auto& u : r.uncovered) out << " " << u;
    out << "\n";
  }
  out << "status: " << status_name(r.status) << "\n";
  if (!r.detail.empty() && r.status != CertReport::Status::Pass) out << "detail: " << r.detail << "\n";
}

int cmd_verify(const std::string& file, const std::vector<std::string>& builtin, bool all, const Options& o,
               std::ostream& out) {
  if (o.k_max < 1) throw InvalidArgument("--kmax must be positive");
  std::vector<Certificate> certs;
  if (!file.empty()) certs.push_back(read_certificate_file(file));
  for (const auto& name : builtin) {
    const CertificateTemplate* t = find_template(name);
    if (!t) throw InvalidArgument("no builtin certificate named '" + name + "'");
    certs.push_back(instantiate(*t, o.characteristic));
  }
  if (all)
    for (auto& c : builtin_catalog(o.characteristic)) certs.push_back(std::move(c));
  if (certs.empty()) throw InvalidArgument("nothing to verify: give a file, --builtin or --all");

  const GbLimits limits = o.limits();
  const auto reports = parallel_map<CertReport>(
      certs.size(), [&](std::size_t i) { return verify(certs[i], o.k_max, limits); });

  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.status == CertReport::Status::Fail) code = kExitFailed;
    if (r.status == CertReport::Status::NotAttempted && code == kExitOk) code = kExitNotAttempted;
  }
  if (o.json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < certs.size(); ++i) arr.push_back(cert_report_json(certs[i], reports[i]));
    out << arr.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (i) out << "\n";
      print_cert_report(certs[i], reports[i], out);
    }
  }
  return code;
}

int cmd_catalog(const std::string& dir, const Options& o, std::ostream& out) {
  const auto& templates = builtin_templates();
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (const auto& t : templates) {
      const Certificate c = instantiate(t, o.characteristic);
      std::string graph_file;
      if (c.target_graph) {
        graph_file = t.name + ".graph";
        std::ofstream(std::filesystem::path(dir) / graph_file) << format_graph(*c.target_graph);
      }
      std::ofstream(std::filesystem::path(dir) / (t.name + ".cert")) << format_certificate(c, graph_file);
    }
  }
  if (o.json) {
    Json arr = Json::array();
    for (const auto& t : templates) {
      Json exps = Json::array();
      for (const auto& c : t.claims) exps.push_back(c.exponent);
      arr.push_back(Json{{"name", t.name},
                         {"description", t.description},
                         {"vertices", t.role_count()},
                         {"witness_size", t.witness.size()},
                         {"claim_exponents", std::move(exps)}});
    }
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& t : templates) {
    out << t.name << "  vertices " << t.role_count() << "  witness " << t.witness.size() << "  exponents";
    for (const auto& c : t.claims) out << " " << c.exponent;
    out << "\n    " << t.description << "\n";
  }
  if (!dir.empty()) out << "wrote " << templates.size() << " certificates to " << dir << "\n";
  return kExitOk;
}

struct SweepRow {
  int parameter;
  BoundsReport report;
  std::optional<DecompositionResult> decomposition;
};

int cmd_sweep(const std::string& family, int from, int to, bool decompose, const Options& o, std::ostream& out) {
  if (from > to) throw InvalidArgument("--from must not exceed --to");
  const auto& names = sweep_families();
  if (std::find(names.begin(), names.end(), family) == names.end())
    throw InvalidArgument("unknown family '" + family + "'");
  std::vector<SimpleGraph> graphs;
  for (int p = from; p <= to; ++p) graphs.push_back(sweep_graph(family, p));

  const GbLimits limits = o.limits();
  const auto rows = parallel_map<SweepRow>(graphs.size(), [&](std::size_t i) {
    SweepRow row{from + static_cast<int>(i), bounds_report(o.m, graphs[i], o.characteristic), std::nullopt};
    if (decompose) row.decomposition = decompose_verify(o.m, graphs[i], limits, o.characteristic);
    return row;
  });

  if (o.json) {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j{{"family", family}, {"parameter", row.parameter}, {"report", report_to_json(row.report)}};
      if (row.decomposition) j["decomposition"] = decomposition_name(row.decomposition->status);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  out << "family,parameter,n,q,m,char,ht,mu,pd_lo,pd_hi,cd_lo,cd_hi,ara_lo,ara_hi,ci,aci,cci,stci";
  if (decompose) out << ",decomposition";
  out << "\n";
  for (const auto& row : rows) {
    const BoundsReport& r = row.report;
    out << family << "," << row.parameter << "," << r.graph.vertex_count() << "," << r.graph.edge_count() << ","
        << r.m << "," << r.characteristic << "," << r.ht << "," << r.mu << "," << r.pd.lo << "," << r.pd.hi << ","
        << r.cd.lo << "," << r.cd.hi << "," << r.ara.lo << "," << r.ara.hi << "," << (r.ci ? "yes" : "no") << ","
        << (r.aci ? "yes" : "no") << "," << verdict_name(r.cci) << "," << verdict_name(r.stci);
    if (row.decomposition) out << "," << decomposition_name(row.decomposition->status);
    out << "\n";
  }
  return kExitOk;
}

SimpleGraph core_with_two_paths(SimpleGraph core, int n) {
  if (n < 6) throw InvalidArgument("core plus two paths needs n >= 6");
  const int extra = n - 4;
  const int first = (extra + 1) / 2;
  const int second = extra - first;
  SimpleGraph g = attach_tree(core, 1, path_graph(first + 1)).graph;
  return attach_tree(g, 2, path_graph(second + 1)).graph;
}

}  // namespace

const std::vector<std::string>& sweep_families() {
  static const std::vector<std::string> names = {"path",          "cycle",          "star",
                                                 "complete",      "complete_bipartite", "k4_plus_paths",
                                                 "diamond_plus_paths", "join_2k1"};
  return names;
}

SimpleGraph sweep_graph(const std::string& family, int p) {
  auto need = [&](int least) {
    if (p < least)
      throw InvalidArgument("family " + family + " needs a parameter >= " + std::to_string(least));
  };
  if (family == "path") { need(2); return path_graph(p); }
  if (family == "cycle") { need(3); return cycle_graph(p); }
  if (family == "star") { need(2); return star_graph(p); }
  if (family == "complete") { need(2); return complete_graph(p); }
  if (family == "complete_bipartite") { need(1); return complete_bipartite(2, p); }
  if (family == "k4_plus_paths") return core_with_two_paths(complete_graph(4), p);
  if (family == "diamond_plus_paths") return core_with_two_paths(diamond(), p);
  if (family == "join_2k1") { need(1); return join(path_graph(p), null_graph(2)).graph; }
  throw InvalidArgument("unknown family '" + family + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized binomial edge ideals: bounds, decompositions and radical certificates", "binedge"};
  app.require_subcommand(1);
  Options o;

  std::string graph_path, cert_path, write_dir, family;
  std::vector<std::string> builtin;
  bool all = false, decompose = false;
  int from = 0, to = 0;

  auto* analyze = app.add_subcommand("analyze", "ht, mu and pd/cd/ara bounds of J_m(G)");
  analyze->add_option("graph", graph_path, "graph file")->required();
  add_ring_flags(analyze, o);
  analyze->add_flag("--json", o.json);

  auto* cutsets = app.add_subcommand("cutsets", "cut sets and the minimal primes they index");
  cutsets->add_option("graph", graph_path, "graph file")->required();
  add_ring_flags(cutsets, o);
  cutsets->add_flag("--json", o.json);

  auto* ideal = app.add_subcommand("ideal", "generators and reduced Groebner basis of J_m(G)");
  ideal->add_option("graph", graph_path, "graph file")->required();
  add_ring_flags(ideal, o);
  ideal->add_option("--order", o.order, "degrevlex or lex");
  ideal->add_flag("--json", o.json);
  add_budget_flags(ideal, o);

  auto* decomp = app.add_subcommand("decompose", "check J_m(G) = intersection of the minimal primes");
  decomp->add_option("graph", graph_path, "graph file")->required();
  add_ring_flags(decomp, o);
  decomp->add_flag("--json", o.json);
  add_budget_flags(decomp, o);

  auto* verify_cmd = app.add_subcommand("verify", "verify radical certificates");
  verify_cmd->add_option("certificate", cert_path, "certificate file");
  verify_cmd->add_option("--builtin", builtin, "builtin certificate name (repeatable)");
  verify_cmd->add_flag("--all", all, "every builtin certificate");
  verify_cmd->add_option("--char", o.characteristic, "field characteristic for builtin certificates");
  verify_cmd->add_option("--kmax", o.k_max, "largest power tried per claim");
  verify_cmd->add_flag("--json", o.json);
  add_budget_flags(verify_cmd, o);

  auto* catalog = app.add_subcommand("catalog", "list the builtin certificates");
  catalog->add_option("--write", write_dir, "write <name>.cert (and <name>.graph) files here");
  catalog->add_flag("--json", o.json);

  auto* sweep = app.add_subcommand("sweep", "bounds over a graph family");
  sweep->add_option("family", family, "path, cycle, star, complete, complete_bipartite, k4_plus_paths, "
                                      "diamond_plus_paths or join_2k1")
      ->required();
  sweep->add_option("--from", from, "first parameter")->required();
  sweep->add_option("--to", to, "last parameter")->required();
  add_ring_flags(sweep, o);
  sweep->add_flag("--json", o.json);
  sweep->add_flag("--decompose", decompose, "also run the decomposition check per row");
  add_budget_flags(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    check_characteristic(o.characteristic);
    if (*analyze) return cmd_analyze(graph_path, o, out);
    if (*cutsets) return cmd_cutsets(graph_path, o, out);
    if (*ideal) return cmd_ideal(graph_path, o, out);
    if (*decomp) return cmd_decompose(graph_path, o, out);
    if (*verify_cmd) return cmd_verify(cert_path, builtin, all, o, out);
    if (*catalog) return cmd_catalog(write_dir, o, out);
    if (*sweep) return cmd_sweep(family, from, to, decompose, o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceLimitExceeded& e) {
    err << "not attempted: " << e.what() << "\n";
    return kExitNotAttempted;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace binedge
