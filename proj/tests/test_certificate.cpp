#include <doctest.h>

#include "fixtures.hpp"
#include "sts/certificate.hpp"
#include "sts/constructions.hpp"

using namespace sts;

TEST_CASE("subsystem complement in STS(21) verifies as a square certificate") {
  const EmbeddedDesign e = embed_subsystem(9, 21, 1);
  const NonincidenceCertificate cert = subsystem_complement_certificate(e);
  CHECK(cert.points.size() == 12);
  CHECK(cert.blocks.size() == 12);
  CHECK(verify_certificate(e.design, cert, true));
}

TEST_CASE("a block through a certified point fails with the offending pair") {
  const Design d = sts::testing::fano();
  // Blocks through point 3 in canonical order: {0,3,4} is index 1.
  const NonincidenceCertificate cert = make_certificate(d, {3}, {1});
  CHECK_FALSE(verify_certificate(d, cert));
  const CertificateCheck check = check_certificate(d, cert);
  REQUIRE(check.offending.has_value());
  CHECK(check.offending->first == 3);
  CHECK(check.offending->second == 1);
}

TEST_CASE("non-collinear triple in AG(2,3) and its disjoint blocks") {
  const Design d = sts::testing::ag23();
  const std::vector<Point> y{0, 1, 3};
  std::vector<BlockIndex> c;
  for (BlockIndex b = 0; b < d.block_count(); ++b) {
    if (!d.block_mask(b).intersects(point_set(d, y))) c.push_back(b);
  }
  REQUIRE(c.size() == 3);
  const NonincidenceCertificate cert = make_certificate(d, y, c);
  CHECK(verify_certificate(d, cert, true));
}

TEST_CASE("wrong design is refused") {
  const Design fano = sts::testing::fano();
  const Design other = embed_subsystem(3, 7, 3).design;
  NonincidenceCertificate cert = make_certificate(fano, {0, 1}, {4, 5});
  if (other.digest() != fano.digest()) CHECK_THROWS_AS(check_certificate(other, cert), DigestMismatch);
  CHECK_THROWS_AS(check_certificate(bose(9), cert), DigestMismatch);
}

TEST_CASE("square flag and malformed certificates") {
  const Design d = sts::testing::ag23();
  // Line {0,1,2}; the two parallel lines avoid it.
  std::vector<BlockIndex> parallel;
  for (BlockIndex b = 0; b < d.block_count(); ++b) {
    if (!d.block_mask(b).intersects(point_set(d, std::vector<Point>{0, 1, 2}))) parallel.push_back(b);
  }
  const NonincidenceCertificate rect = make_certificate(d, {0, 1, 2}, parallel);
  CHECK(verify_certificate(d, rect));
  CHECK_FALSE(verify_certificate(d, rect, true));
  CHECK(rect.claimed_size() == 2);

  NonincidenceCertificate empty = make_certificate(d, {}, {});
  CHECK_FALSE(verify_certificate(d, empty));

  NonincidenceCertificate unsorted = rect;
  std::swap(unsorted.points[0], unsorted.points[1]);
  CHECK_FALSE(check_certificate(d, unsorted).well_formed);

  NonincidenceCertificate out_of_range = rect;
  out_of_range.blocks.back() = 12;
  CHECK_FALSE(verify_certificate(d, out_of_range));
}
