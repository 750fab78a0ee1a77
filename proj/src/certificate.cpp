#include "sts/certificate.hpp"

#include <algorithm>

namespace sts {

namespace {

template <class T>
bool strictly_increasing(const std::vector<T>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](T a, T b) { return a >= b; }) == xs.end();
}

}  // namespace

CertificateCheck check_certificate(const Design& d, const NonincidenceCertificate& cert) {
  if (cert.v != d.order() || cert.design_digest != d.digest()) {
    throw DigestMismatch("certificate is bound to design " + cert.design_digest + " (v=" +
                         std::to_string(cert.v) + "), not " + d.digest() + " (v=" +
                         std::to_string(d.order()) + ")");
  }
  CertificateCheck out;
  out.square = cert.is_square();
  if (cert.points.empty() || cert.blocks.empty()) {
    out.message = "empty point or block set";
    return out;
  }
  if (!strictly_increasing(cert.points) || !strictly_increasing(cert.blocks)) {
    out.message = "point and block lists must be sorted without repeats";
    return out;
  }
  if (cert.points.back() >= d.order() || cert.blocks.back() >= d.block_count()) {
    out.message = "point or block index out of range";
    return out;
  }
  out.well_formed = true;

  const BitVector y = point_set(d, cert.points);
  for (BlockIndex b : cert.blocks) {
    if (d.block_mask(b).intersects(y)) {
      for (Point p : d.block(b)) {
        if (y.test(p)) {
          out.offending = std::make_pair(p, b);
          break;
        }
      }
      out.message = "point " + std::to_string(out.offending->first) + " lies on block " + std::to_string(b);
      return out;
    }
  }
  out.nonincident = true;
  if (!out.square) out.message = "not square: |Y| != |C|";
  return out;
}

bool verify_certificate(const Design& d, const NonincidenceCertificate& cert, bool require_square) {
  return check_certificate(d, cert).ok(require_square);
}

NonincidenceCertificate make_certificate(const Design& d, std::vector<Point> y, std::vector<BlockIndex> c,
                                         nlohmann::json meta) {
  std::sort(y.begin(), y.end());
  std::sort(c.begin(), c.end());
  NonincidenceCertificate cert;
  cert.v = d.order();
  cert.points = std::move(y);
  cert.blocks = std::move(c);
  cert.design_digest = d.digest();
  cert.meta = std::move(meta);
  return cert;
}

}  // namespace sts
