#include "sts/report_io.hpp"

#include "sts/design_io.hpp"
#include "sts/digest.hpp"

namespace sts {

using nlohmann::json;

namespace {

json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

}  // namespace

json report_to_json(const Design& d, const SearchReport& report) {
  json j{{"v", d.order()},
         {"design_digest", d.digest()},
         {"digest_algorithm", kDigestAlgorithm},
         {"method", report.method},
         {"best_s", report.best_s},
         {"exact", report.exact},
         {"nodes_visited", report.nodes_visited},
         {"bound_used", report.bound_used}};
  j["certificate"] = report.certificate ? certificate_to_json(*report.certificate) : json(nullptr);
  std::string note = "best_s is the value for this design only; the ceiling over all STS(" +
                     std::to_string(d.order()) + ") is " + std::to_string(report.bound_used);
  if (report.best_s < report.bound_used) note += " (gap " + std::to_string(report.bound_used - report.best_s) + ")";
  if (!report.exact) {
    note += report.best_s == report.bound_used ? "; meets the ceiling, so optimal for this design"
                                               : "; not proven optimal for this design";
  }
  j["note"] = note;
  return j;
}

json family_record_to_json(const EqualityFamilyRecord& r) {
  return json{{"family", r.family}, {"z", big_to_json(r.z)}, {"v", big_to_json(r.v)}, {"s", big_to_json(r.s)},
              {"w", big_to_json(r.w)},     {"t", big_to_json(r.t)}, {"u", big_to_json(r.u)}};
}

}  // namespace sts
