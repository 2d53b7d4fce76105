#include "binedge/certificates.hpp"

#include <numeric>

#include "binedge/bei.hpp"
#include "binedge/bounds.hpp"
#include "binedge/errors.hpp"
#include "binedge/poly_text.hpp"

namespace binedge {
namespace {

std::string ref_text(const BinomialRef& r, const std::vector<Vertex>& labels) {
  return "f[" + std::to_string(labels[static_cast<std::size_t>(r.a - 1)]) + "," +
         std::to_string(labels[static_cast<std::size_t>(r.b - 1)]) + "]";
}

}  // namespace

const char* status_name(CertReport::Status s) {
  switch (s) {
    case CertReport::Status::Pass: return "pass";
    case CertReport::Status::Fail: return "fail";
    case CertReport::Status::NotAttempted: return "not attempted";
  }
  return "fail";
}

Certificate instantiate(const CertificateTemplate& t, const std::vector<Vertex>& labels, int n,
                        std::uint32_t characteristic) {
  if (static_cast<int>(labels.size()) != t.role_count())
    throw InvalidArgument("template " + t.name + " needs " + std::to_string(t.role_count()) + " labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > n) throw InvalidArgument("label out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (labels[i] == labels[j]) throw InvalidArgument("labels must be distinct");
  }

  Certificate c{t.name, t.description, RingSpec(2, n, characteristic), std::nullopt, {}, {}, {}, {}, {}};
  auto binomial = [&](const BinomialRef& r) {
    Polynomial f = edge_binomial(c.ring, labels[static_cast<std::size_t>(r.a - 1)],
                                 labels[static_cast<std::size_t>(r.b - 1)]);
    return r.sign < 0 ? -f : f;
  };

  for (const auto& [a, b] : t.graph_edges) {
    c.target.push_back(binomial({a, b}));
    c.target_text.push_back(ref_text({a, b}, labels));
  }
  for (const auto& [a, b] : t.extra_target) {
    c.target.push_back(binomial({a, b}));
    c.target_text.push_back(ref_text({a, b}, labels));
  }
  for (const auto& sum : t.witness) {
    Polynomial w(c.ring);
    std::string text;
    for (const auto& r : sum) {
      w += binomial(r);
      if (!text.empty()) text += r.sign < 0 ? " - " : " + ";
      else if (r.sign < 0) text += "-";
      text += ref_text(r, labels);
    }
    c.witness.push_back(std::move(w));
    c.witness_text.push_back(std::move(text));
  }
  for (const auto& claim : t.claims)
    c.claims.push_back({binomial(claim.f), claim.exponent, ref_text(claim.f, labels)});

  std::vector<Vertex> identity(labels.size());
  std::iota(identity.begin(), identity.end(), 1);
  if (t.targets_graph_ideal() && labels == identity && n == t.role_count()) {
    c.target_graph = t.pattern_graph();
    c.target = gbei_generators(c.ring, *c.target_graph);
    c.target_text.clear();
    for (const auto& [a, b] : c.target_graph->edges())
      c.target_text.push_back("f[" + std::to_string(a) + "," + std::to_string(b) + "]");
  }
  return c;
}

Certificate instantiate(const CertificateTemplate& t, std::uint32_t characteristic) {
  std::vector<Vertex> identity(static_cast<std::size_t>(t.role_count()));
  std::iota(identity.begin(), identity.end(), 1);
  return instantiate(t, identity, t.role_count(), characteristic);
}

std::vector<Certificate> builtin_catalog(std::uint32_t characteristic) {
  std::vector<Certificate> out;
  for (const auto& t : builtin_templates()) out.push_back(instantiate(t, characteristic));
  return out;
}

CertReport verify(const Certificate& cert, int k_max, const GbLimits& limits) {
  if (k_max < 1) throw InvalidArgument("k_max must be positive");
  CertReport report;
  try {
    const Ideal target(cert.ring, cert.target);
    const Ideal witness(cert.ring, cert.witness);

    bool ok = true;
    for (std::size_t i = 0; i < cert.witness.size(); ++i) {
      const bool inside = ideal_membership(cert.witness[i], target, limits);
      report.witness_in_target.push_back(inside);
      if (!inside && ok) {
        ok = false;
        report.detail = "witness " + std::to_string(i + 1) + " is not in the target ideal";
      }
    }

    for (const auto& claim : cert.claims) {
      const auto found = power_membership(claim.f, witness, std::min(k_max, claim.exponent), limits);
      ClaimResult result{claim.label, claim.exponent, found, found.has_value()};
      if (!result.ok && ok) {
        ok = false;
        report.detail = "claim " + claim.label + "^" + std::to_string(claim.exponent) + " not verified";
      }
      report.claims.push_back(std::move(result));
    }

    for (std::size_t i = 0; i < cert.target.size(); ++i) {
      const Polynomial& g = cert.target[i];
      bool covered = false;
      for (const auto& claim : cert.claims)
        if (claim.f == g || claim.f == -g) covered = true;
      if (!covered) covered = ideal_membership(g, witness, limits);
      if (!covered) {
        const std::string name = i < cert.target_text.size() ? cert.target_text[i] : format_polynomial(g);
        report.uncovered.push_back(name);
        if (ok) {
          ok = false;
          report.detail = "target generator " + name + " is not covered";
        }
      }
    }
    report.status = ok ? CertReport::Status::Pass : CertReport::Status::Fail;
  } catch (const ResourceLimitExceeded& e) {
    report.status = CertReport::Status::NotAttempted;
    report.detail = e.what();
  }
  return report;
}

std::optional<bool> certificate_size_vs_bound(const Certificate& cert) {
  if (!cert.target_graph) return std::nullopt;
  const auto report = bounds_report(2, *cert.target_graph, cert.ring.characteristic());
  return static_cast<int>(cert.witness.size()) == report.ara.hi;
}

}  // namespace binedge
