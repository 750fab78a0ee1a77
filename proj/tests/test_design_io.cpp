#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "sts/constructions.hpp"
#include "sts/design_io.hpp"
#include "sts/report_io.hpp"

using namespace sts;

TEST_CASE("canonical serialization matches the JSON library's compact form") {
  const Design d = embed_subsystem(3, 13, 4).design;
  const nlohmann::json j = nlohmann::json::parse(d.canonical_serialization());
  CHECK(j.dump() == d.canonical_serialization());
  CHECK(j.at("v") == 13);
  CHECK(j.at("blocks").size() == 26);
}

TEST_CASE("serialize, parse, serialize is stable") {
  Rng rng(11);
  for (std::uint32_t v : {1U, 3U, 7U, 9U, 13U, 15U, 19U, 21U, 25U}) {
    const Design d = construct_design(v, rng.next());
    const Design back = design_from_json(d.canonical_serialization());
    CHECK(back.canonical_serialization() == d.canonical_serialization());
    CHECK(back.digest() == d.digest());

    // A reshuffled, re-spaced file still parses to the same design.
    nlohmann::json j = nlohmann::json::parse(d.canonical_serialization());
    auto& blocks = j["blocks"];
    std::reverse(blocks.begin(), blocks.end());
    for (auto& b : blocks) std::reverse(b.begin(), b.end());
    CHECK(design_from_json(j.dump(2)).digest() == d.digest());
  }
}

TEST_CASE("malformed design files") {
  CHECK_THROWS_AS(design_from_json("{"), InputError);
  CHECK_THROWS_AS(design_from_json(R"({"v": 7})"), InputError);
  CHECK_THROWS_AS(design_from_json(R"({"v": 7, "blocks": [[0,1]]})"), InputError);
  CHECK_THROWS_AS(design_from_json(R"({"v": "7", "blocks": []})"), InputError);
  try {
    design_from_json(R"({"v": 7, "blocks": [[0,1,2],[0,3,4],[0,5,6],[1,3,5],[1,4,6],[2,3,6]]})");
    FAIL("expected InvalidDesign");
  } catch (const InvalidDesign& e) {
    CHECK(e.report().uncovered_pairs.size() == 3);
    CHECK(std::string(e.what()).find("pairs uncovered") != std::string::npos);
  }
}

TEST_CASE("files round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "sts_io_test";
  std::filesystem::create_directories(dir);
  const EmbeddedDesign e = embed_subsystem(9, 21, 7);
  write_design_file(dir / "d.json", e.design);
  const Design d = read_design_file(dir / "d.json");
  CHECK(d.digest() == e.design.digest());

  const NonincidenceCertificate cert = subsystem_complement_certificate(e);
  write_certificate_file(dir / "c.json", cert);
  const NonincidenceCertificate back = read_certificate_file(dir / "c.json");
  CHECK(back.points == cert.points);
  CHECK(back.blocks == cert.blocks);
  CHECK(back.design_digest == d.digest());
  CHECK(back.meta.at("construction") == "embed_subsystem");
  CHECK(back.meta.at("w") == 9);
  CHECK(back.meta.at("seed") == 7);
  CHECK(verify_certificate(d, back, true));

  nlohmann::json j = certificate_to_json(cert);
  CHECK(j.at("digest_algorithm") == "sha256");
  j["digest_algorithm"] = "md5";
  CHECK_THROWS_AS(certificate_from_json(j), InputError);
  j = certificate_to_json(cert);
  j["Y"].push_back(-1);
  CHECK_THROWS_AS(certificate_from_json(j), InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("family records serialize wide integers as strings") {
  EqualityFamilyRecord r;
  r.family = 1;
  r.z = BigInt(1) << 40;
  r.v = 216 * r.z * r.z + 42 * r.z + 1;
  const nlohmann::json j = family_record_to_json(r);
  CHECK(j.at("z").is_number_unsigned());
  CHECK(j.at("v").is_string());
  CHECK(j.at("v").get<std::string>() == r.v.str());
}
