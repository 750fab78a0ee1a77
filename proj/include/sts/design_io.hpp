#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sts/certificate.hpp"
#include "sts/design.hpp"

namespace sts {

// Design files hold the canonical serialization {"blocks":[...],"v":v}.
// Parsing throws InputError on malformed JSON; design_from_json additionally
// throws InvalidDesign when the blocks do not form an STS.
CandidateDesign parse_candidate_design(std::string_view text);
Design design_from_json(std::string_view text);
Design read_design_file(const std::filesystem::path& path);
void write_design_file(const std::filesystem::path& path, const Design& d);

nlohmann::json certificate_to_json(const NonincidenceCertificate& cert);
NonincidenceCertificate certificate_from_json(const nlohmann::json& j);
NonincidenceCertificate read_certificate_file(const std::filesystem::path& path);
void write_certificate_file(const std::filesystem::path& path, const NonincidenceCertificate& cert);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace sts
