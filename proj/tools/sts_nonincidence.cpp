// sts-nonincidence: build Steiner triple systems, bound and search for
// nonincident point/block sets, and check certificates.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "sts/bounds.hpp"
#include "sts/certificate.hpp"
#include "sts/constructions.hpp"
#include "sts/design.hpp"
#include "sts/design_io.hpp"
#include "sts/errors.hpp"
#include "sts/report_io.hpp"
#include "sts/search.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,       // validation or verification failure
  kUsage = 2,        // bad flags or inadmissible parameters
  kBudget = 3,       // budget exhausted; retry with a larger budget or another seed
  kDigest = 4,       // certificate names a different design
};

struct ConstructArgs {
  std::uint32_t order = 0;
  std::optional<std::uint32_t> sub;
  std::optional<std::uint32_t> double_from;
  std::uint64_t seed = 0;
  std::uint64_t max_moves = sts::EmbedLimits{}.max_moves;
  fs::path out;
  std::optional<fs::path> cert;
};

struct BoundArgs {
  std::string order;
  bool curve = false;
  std::string format = "csv";
};

struct FamiliesArgs {
  std::optional<std::uint64_t> z_max;
  std::optional<std::string> classify;
};

struct SearchArgs {
  fs::path design;
  bool exact = false;
  bool greedy = false;
  std::uint64_t budget = sts::SearchOptions{}.node_budget;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  fs::path out;
};

struct VerifyArgs {
  fs::path design;
  fs::path cert;
  bool require_square = false;
};

fs::path default_cert_path(const fs::path& out) {
  fs::path p = out;
  p.replace_extension(".cert.json");
  return p;
}

sts::BigInt parse_big(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw sts::InputError("not a non-negative integer: '" + text + "'");
  }
  return sts::BigInt(text);
}

void require_admissible(std::uint32_t v, const char* what) {
  if (!sts::is_admissible_order(static_cast<std::int64_t>(v))) {
    throw sts::InputError(std::string(what) + " " + std::to_string(v) + " is not admissible (need 1 or 3 mod 6)");
  }
}

int run_construct(const ConstructArgs& a) {
  require_admissible(a.order, "order");
  const sts::EmbedLimits limits{a.max_moves};

  if (a.sub && a.double_from) throw sts::InputError("--sub and --double-from are mutually exclusive");

  if (a.double_from) {
    const std::uint32_t w = *a.double_from;
    require_admissible(w, "--double-from");
    if (a.order != 2 * w + 1) {
      throw sts::InputError("doubling STS(" + std::to_string(w) + ") gives order " + std::to_string(2 * w + 1) +
                            ", not " + std::to_string(a.order));
    }
    const sts::DoubledDesign dd = sts::doubling(sts::construct_design(w, a.seed, limits));
    std::vector<sts::BlockIndex> disjoint;
    sts::disjoint_blocks(dd.design, sts::point_set(dd.design, dd.arc)).for_each_set([&](std::size_t b) {
      disjoint.push_back(static_cast<sts::BlockIndex>(b));
    });
    const sts::NonincidenceCertificate cert =
        sts::make_certificate(dd.design, dd.arc, std::move(disjoint),
                              {{"construction", "doubling"}, {"w", w}, {"seed", a.seed}, {"maximal_arc", true}});
    sts::write_design_file(a.out, dd.design);
    const fs::path cert_path = a.cert.value_or(default_cert_path(a.out));
    sts::write_certificate_file(cert_path, cert);
    std::cout << "STS(" << a.order << ") by doubling STS(" << w << "): arc of " << cert.points.size() << " points, "
              << cert.blocks.size() << " disjoint blocks\n"
              << "design " << a.out.string() << "\ncertificate " << cert_path.string() << "\n";
    return kOk;
  }

  if (a.sub) {
    const std::uint32_t w = *a.sub;
    require_admissible(w, "--sub");
    const sts::EmbeddedDesign e = sts::embed_subsystem(w, a.order, a.seed, limits);
    spdlog::info("hill-climbing finished after {} moves", e.moves);
    const sts::NonincidenceCertificate cert = sts::subsystem_complement_certificate(e);
    sts::write_design_file(a.out, e.design);
    const fs::path cert_path = a.cert.value_or(default_cert_path(a.out));
    sts::write_certificate_file(cert_path, cert);
    std::cout << "STS(" << a.order << ") with sub-STS(" << w << ") on points 0.." << w - 1 << ": s=" << cert.claimed_size()
              << " (|Y|=" << cert.points.size() << ", |C|=" << cert.blocks.size() << ")\n"
              << "design " << a.out.string() << "\ncertificate " << cert_path.string() << "\n";
    return kOk;
  }

  const sts::Design d = sts::construct_design(a.order, a.seed, limits);
  sts::write_design_file(a.out, d);
  std::cout << "STS(" << a.order << "), " << d.block_count() << " blocks\ndesign " << a.out.string() << "\n";
  return kOk;
}

int run_bound(const BoundArgs& a) {
  const sts::BigInt v = parse_big(a.order);
  if (!sts::is_admissible_order(v)) throw sts::InputError("order " + v.str() + " is not admissible (need 1 or 3 mod 6)");
  if (!a.curve) {
    std::cout << sts::max_nonincident_bound(v) << "\n";
    return kOk;
  }
  const sts::IntersectionCurve curve = sts::intersection_curve_data(v);
  if (a.format == "csv") {
    std::cout << sts::curve_csv(curve);
    return kOk;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : curve.rows) rows.push_back({{"s", r.s.str()}, {"bound", r.bound.str()}});
  std::cout << nlohmann::json{{"v", v.str()},
                              {"crossing", curve.crossing.str()},
                              {"crossing_integral", curve.crossing_integral},
                              {"rows", rows}}
                   .dump()
            << "\n";
  return kOk;
}

int run_families(const FamiliesArgs& a) {
  if (a.z_max.has_value() == a.classify.has_value()) throw sts::InputError("give exactly one of --zmax or --classify");
  if (a.z_max) {
    for (const auto& r : sts::enumerate_equality_orders(*a.z_max)) {
      std::cout << sts::family_record_to_json(r).dump() << "\n";
    }
    return kOk;
  }
  const auto r = sts::classify_equality_order(parse_big(*a.classify));
  std::cout << (r ? sts::family_record_to_json(*r).dump() : std::string("none")) << "\n";
  return kOk;
}

int run_search(const SearchArgs& a) {
  if (a.exact && a.greedy) throw sts::InputError("--exact and --greedy are mutually exclusive");
  if (a.threads == 0) throw sts::InputError("--threads must be at least 1");
  const sts::Design d = sts::read_design_file(a.design);
  spdlog::info("loaded STS({}) with {} blocks, digest {}", d.order(), d.block_count(), d.digest());

  sts::SearchReport report;
  if (a.greedy) {
    report = sts::greedy_max_nonincident(d, a.seed);
  } else {
    report = sts::exact_max_nonincident(d, {a.budget, a.threads});
  }
  spdlog::info("{} search: best_s={} after {} nodes in {} ms", report.method, report.best_s, report.nodes_visited,
               std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count());

  const nlohmann::json j = sts::report_to_json(d, report);
  sts::write_text_file(a.out, j.dump(2) + "\n");
  std::cout << "best_s=" << report.best_s << " exact=" << (report.exact ? "true" : "false")
            << " ceiling=" << report.bound_used << "\n"
            << j["note"].get<std::string>() << "\n";
  if (!a.greedy && !report.exact) {
    std::cerr << "node budget of " << a.budget << " exhausted; result is a lower bound\n";
    return kBudget;
  }
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  const sts::Design d = sts::read_design_file(a.design);
  const sts::NonincidenceCertificate cert = sts::read_certificate_file(a.cert);
  const sts::CertificateCheck check = sts::check_certificate(d, cert);
  const sts::BigInt ceiling = sts::max_nonincident_bound(sts::BigInt(d.order()));

  if (!check.ok(a.require_square)) {
    std::cout << "FAIL: " << check.message << "\n";
    if (check.offending) {
      const auto [p, b] = *check.offending;
      const sts::Block& blk = d.block(b);
      std::cout << "point " << p << " lies on block " << b << " {" << blk[0] << "," << blk[1] << "," << blk[2] << "}\n";
    }
    return kFailed;
  }
  const std::size_t t = sts::disjoint_block_count(d, std::span<const sts::Point>(cert.points));
  std::cout << "OK: s=" << cert.claimed_size() << " ≤ bound " << ceiling << "\n"
            << "|Y|=" << cert.points.size() << " |C|=" << cert.blocks.size() << " t(Y)=" << t
            << (cert.is_square() ? " square" : " not square") << "\n";
  return kOk;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("sts");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("NONINCIDENCE_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Steiner triple systems: nonincident sets, bounds and certificates"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build an STS(v) and write it as canonical JSON");
  construct->add_option("--order", ca.order, "order v")->required();
  construct->add_option("--sub", ca.sub, "embed a sub-STS(w) on points 0..w-1 and certify its complement");
  construct->add_option("--double-from", ca.double_from, "build STS(2w+1) by doubling an STS(w)");
  construct->add_option("--seed", ca.seed, "random seed");
  construct->add_option("--max-moves", ca.max_moves, "hill-climbing move budget");
  construct->add_option("--out", ca.out, "design output path")->required();
  construct->add_option("--cert", ca.cert, "certificate output path (default: <out>.cert.json)");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "print the ceiling on nonincident sets for order v");
  bound->add_option("--order", ba.order, "order v (any size)")->required();
  bound->add_flag("--curve", ba.curve, "emit the disjoint-block bound against the diagonal");
  bound->add_option("--format", ba.format, "curve format")->check(CLI::IsMember({"csv", "json"}));

  FamiliesArgs fa;
  auto* families = app.add_subcommand("families", "orders where the ceiling is met with equality");
  families->add_option("--zmax", fa.z_max, "enumerate records for z = 0..Z");
  families->add_option("--classify", fa.classify, "classify a single order");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "largest nonincident set of a given design");
  search->add_option("--design", sa.design, "design file")->required();
  search->add_flag("--exact", sa.exact, "branch and bound (default)");
  search->add_flag("--greedy", sa.greedy, "greedy lower bound");
  search->add_option("--budget", sa.budget, "node budget for the exact search");
  search->add_option("--seed", sa.seed, "random seed for the greedy search");
  search->add_option("--threads", sa.threads, "worker threads for the exact search");
  search->add_option("--out", sa.out, "report output path")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a certificate against a design");
  verify->add_option("--design", va.design, "design file")->required();
  verify->add_option("--cert", va.cert, "certificate file")->required();
  verify->add_flag("--require-square", va.require_square, "also require |Y| = |C|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*bound) return run_bound(ba);
    if (*families) return run_families(fa);
    if (*search) return run_search(sa);
    if (*verify) return run_verify(va);
  } catch (const sts::InvalidDesign& e) {
    std::cerr << "invalid design: " << e.what() << "\n";
    return kFailed;
  } catch (const sts::DigestMismatch& e) {
    std::cerr << "digest mismatch: " << e.what() << "\n";
    return kDigest;
  } catch (const sts::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const sts::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
