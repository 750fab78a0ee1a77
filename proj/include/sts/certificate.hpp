#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sts/design.hpp"

namespace sts {

// Witness that no point of `points` lies on any block listed in `blocks`,
// bound to one labeled design by its digest.
struct NonincidenceCertificate {
  std::uint32_t v = 0;
  std::vector<Point> points;       // Y, sorted
  std::vector<BlockIndex> blocks;  // C, sorted
  std::string design_digest;
  nlohmann::json meta = nlohmann::json::object();

  // The s this certificate supports: min(|Y|, |C|).
  std::size_t claimed_size() const { return std::min(points.size(), blocks.size()); }
  bool is_square() const { return points.size() == blocks.size(); }
};

struct CertificateCheck {
  bool well_formed = false;  // sorted, distinct, in range, nonempty
  bool nonincident = false;
  bool square = false;
  std::optional<std::pair<Point, BlockIndex>> offending;
  std::string message;

  bool ok(bool require_square = false) const {
    return well_formed && nonincident && (!require_square || square);
  }
};

// Detailed check. Throws DigestMismatch when the certificate names another
// design (different v or digest).
CertificateCheck check_certificate(const Design& d, const NonincidenceCertificate& cert);

bool verify_certificate(const Design& d, const NonincidenceCertificate& cert, bool require_square = false);

// Builds a certificate with sorted copies of y and c.
NonincidenceCertificate make_certificate(const Design& d, std::vector<Point> y, std::vector<BlockIndex> c,
                                         nlohmann::json meta = nlohmann::json::object());

}  // namespace sts
