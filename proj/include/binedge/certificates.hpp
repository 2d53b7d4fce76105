#ifndef BINEDGE_CERTIFICATES_HPP
#define BINEDGE_CERTIFICATES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binedge/catalog_data.hpp"
#include "binedge/graph.hpp"
#include "binedge/groebner.hpp"
#include "binedge/ideal.hpp"

namespace binedge {

/// f^exponent is claimed to lie in the witness ideal.
struct Claim {
  Polynomial f;
  int exponent;
  std::string label;
};

/// Witness polynomials W whose radical is claimed to be the target ideal J.
/// Text fields keep the shorthand form for writing files; they may be empty.
struct Certificate {
  std::string name;
  std::string source;
  RingSpec ring;
  std::optional<SimpleGraph> target_graph;  ///< set when J = J_m(target_graph)
  std::vector<Polynomial> target;
  std::vector<Polynomial> witness;
  std::vector<Claim> claims;
  std::vector<std::string> target_text;
  std::vector<std::string> witness_text;

  /// ara(J) <= |W| once the certificate verifies.
  std::size_t established_bound() const { return witness.size(); }
};

/// Instantiates a template with role r mapped to vertex labels[r-1] in a ring
/// with n columns. The target graph is recorded only under the identity map.
Certificate instantiate(const CertificateTemplate& t, const std::vector<Vertex>& labels, int n,
                        std::uint32_t characteristic = 0);
/// Identity labels on role_count() vertices.
Certificate instantiate(const CertificateTemplate& t, std::uint32_t characteristic = 0);

std::vector<Certificate> builtin_catalog(std::uint32_t characteristic = 0);

struct ClaimResult {
  std::string label;
  int claimed;
  std::optional<int> found;  ///< least exponent that works, up to k_max
  bool ok;
};

struct CertReport {
  enum class Status { Pass, Fail, NotAttempted };
  Status status = Status::Fail;
  std::vector<bool> witness_in_target;
  std::vector<ClaimResult> claims;
  /// Target generators that are neither claimed nor members of the witness ideal.
  std::vector<std::string> uncovered;
  std::string detail;
};

const char* status_name(CertReport::Status s);

/// Checks W subset J, f^k in (W) for every claim with k <= claimed and k <= k_max,
/// and that every other target generator lies in (W).
CertReport verify(const Certificate& cert, int k_max = kDefaultPowerSearch, const GbLimits& limits = {});

/// For graph targets: whether |W| equals the ara upper bound of the m = 2
/// report. Empty for other targets.
std::optional<bool> certificate_size_vs_bound(const Certificate& cert);

}  // namespace binedge

#endif  // BINEDGE_CERTIFICATES_HPP
