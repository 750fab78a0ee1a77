#include "sts/design_io.hpp"

#include <fstream>
#include <sstream>

#include "sts/digest.hpp"
#include "sts/errors.hpp"

namespace sts {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

template <class T>
std::vector<T> as_index_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    const std::int64_t x = as_int(e, what);
    if (x < 0 || x > static_cast<std::int64_t>(std::numeric_limits<T>::max()))
      throw InputError(std::string(what) + " entry out of range");
    out.push_back(static_cast<T>(x));
  }
  return out;
}

}  // namespace

CandidateDesign parse_candidate_design(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
    throw InputError("design file needs fields \"v\" and \"blocks\"");
  CandidateDesign c;
  c.v = as_int(j.at("v"), "v");
  const json& blocks = j.at("blocks");
  if (!blocks.is_array()) throw InputError("\"blocks\" must be an array");
  c.blocks.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (!b.is_array() || b.size() != 3) throw InputError("each block must be an array of 3 points");
    c.blocks.push_back({as_int(b[0], "block point"), as_int(b[1], "block point"), as_int(b[2], "block point")});
  }
  return c;
}

Design design_from_json(std::string_view text) { return Design::from_candidate(parse_candidate_design(text)); }

Design read_design_file(const std::filesystem::path& path) { return design_from_json(read_text_file(path)); }

void write_design_file(const std::filesystem::path& path, const Design& d) {
  write_text_file(path, d.canonical_serialization() + "\n");
}

json certificate_to_json(const NonincidenceCertificate& cert) {
  return json{{"v", cert.v},
              {"design_digest", cert.design_digest},
              {"digest_algorithm", kDigestAlgorithm},
              {"Y", cert.points},
              {"C", cert.blocks},
              {"meta", cert.meta}};
}

NonincidenceCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InputError("certificate must be a JSON object");
  for (const char* key : {"v", "design_digest", "Y", "C"}) {
    if (!j.contains(key)) throw InputError(std::string("certificate missing field \"") + key + "\"");
  }
  const std::string algo = j.value("digest_algorithm", std::string(kDigestAlgorithm));
  if (algo != kDigestAlgorithm) throw InputError("unsupported digest algorithm " + algo);
  NonincidenceCertificate cert;
  const std::int64_t v = as_int(j.at("v"), "v");
  if (v <= 0 || v > std::numeric_limits<std::uint32_t>::max()) throw InputError("certificate v out of range");
  cert.v = static_cast<std::uint32_t>(v);
  if (!j.at("design_digest").is_string()) throw InputError("design_digest must be a string");
  cert.design_digest = j.at("design_digest").get<std::string>();
  cert.points = as_index_list<Point>(j.at("Y"), "Y");
  cert.blocks = as_index_list<BlockIndex>(j.at("C"), "C");
  if (j.contains("meta")) cert.meta = j.at("meta");
  return cert;
}

NonincidenceCertificate read_certificate_file(const std::filesystem::path& path) {
  return certificate_from_json(parse_json(read_text_file(path)));
}

void write_certificate_file(const std::filesystem::path& path, const NonincidenceCertificate& cert) {
  write_text_file(path, certificate_to_json(cert).dump(2) + "\n");
}

}  // namespace sts
