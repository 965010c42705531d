// Command line surface: exact counting, probability tables, moments of
// inertia, the verification suite, uniform sampling and rendering.
//
// Exit codes: 0 success, 1 usage, 2 verification failure, 3 resource limit.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexamoment/enumdp.hpp"
#include "hexamoment/qcomb.hpp"
#include "hexamoment/render.hpp"
#include "hexamoment/stats.hpp"
#include "hexamoment/verify.hpp"

namespace hm = hexamoment;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json dims_json(const hm::BoxDims& d) { return json{{"a", d.a}, {"b", d.b}, {"c", d.c}}; }

struct DimsArgs {
  int a = 1;
  int b = 1;
  int c = 1;
  hm::BoxDims dims() const { return hm::BoxDims(a, b, c); }
};

// The DP runs over C(a+c, a) column states per column. Boxes whose table
// work exceeds the configured limit are refused unless forced.
void guard_dims(const hm::BoxDims& d, std::int64_t limit, bool force) {
  if (force) return;
  const hm::BigInt cost = hm::binomial(d.a + d.c, d.a) * d.b;
  if (cost > hm::BigInt(static_cast<long>(limit)))
    throw hm::TooLargeError(limit, hm::to_string(cost),
                            "box " + d.str() + " needs " + hm::to_string(cost) +
                                " units of table work, over the limit of " +
                                std::to_string(limit) +
                                "; raise --limit (or HEXAMOMENT_LIMIT) or pass --force");
}

void add_dims(CLI::App* cmd, DimsArgs& args) {
  cmd->add_option("a", args.a, "hexagon side a")->required()->check(CLI::PositiveNumber);
  cmd->add_option("b", args.b, "hexagon side b")->required()->check(CLI::PositiveNumber);
  cmd->add_option("c", args.c, "hexagon side c")->required()->check(CLI::PositiveNumber);
}

int run_count(const DimsArgs& args) {
  std::cout << hm::to_string(hm::count_box(args.dims())) << "\n";
  return 0;
}

int run_prob_table(const DimsArgs& args, const std::string& format, bool with_float) {
  const hm::BoxDims d = args.dims();
  const hm::ProbTable table(d);
  const hm::Rational total = table.sum();
  if (format == "json") {
    json entries = json::array();
    for (int x = 1; x <= d.a + d.b - 1; ++x)
      for (int y = 0; y <= d.a + d.c - 1; ++y) {
        json row{{"x", x}, {"y", y}, {"p", table.p(x, y).str()}};
        if (with_float) row["p_float"] = table.p(x, y).to_double();
        entries.push_back(std::move(row));
      }
    json out{{"version", kSchemaVersion},
             {"dims", dims_json(d)},
             {"entries", std::move(entries)},
             {"sum", total.str()}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "a,b,c,x,y,p_num,p_den\n";
    for (int x = 1; x <= d.a + d.b - 1; ++x)
      for (int y = 0; y <= d.a + d.c - 1; ++y) {
        const hm::Rational p = table.p(x, y);
        std::cout << d.a << "," << d.b << "," << d.c << "," << x << "," << y << ","
                  << hm::to_string(p.num()) << "," << hm::to_string(p.den()) << "\n";
      }
    std::cout << "# sum = " << total.str() << "\n";
  } else {
    for (int x = 1; x <= d.a + d.b - 1; ++x)
      for (int y = 0; y <= d.a + d.c - 1; ++y) {
        std::cout << x << " " << y << " " << table.p(x, y).str();
        if (with_float) std::cout << " " << table.p(x, y).to_double();
        std::cout << "\n";
      }
    std::cout << "sum = " << total.str() << "\n";
  }
  return 0;
}

int run_moments(const DimsArgs& args, const std::string& format, bool with_float) {
  const hm::MomentReport r = hm::verify_moments(args.dims());
  if (format == "json") {
    json out{{"version", kSchemaVersion},
             {"dims", dims_json(r.dims)},
             {"horizontal", r.horizontal.str()},
             {"vertical", r.vertical.str()},
             {"closed_horizontal", r.closed_horizontal.str()},
             {"closed_vertical", r.closed_vertical.str()},
             {"row_term", r.row_term.str()},
             {"cross_term", r.cross_term.str()},
             {"row_term_closed", r.row_term_closed.str()},
             {"cross_term_closed", r.cross_term_closed.str()},
             {"consistent", r.consistent}};
    if (with_float) {
      out["horizontal_float"] = r.horizontal.to_double();
      out["vertical_float"] = r.vertical.to_double();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dims = " << r.dims.str() << "\n"
              << "horizontal = " << r.horizontal.str() << "\n"
              << "vertical = " << r.vertical.str() << "\n"
              << "closed_horizontal = " << r.closed_horizontal.str() << "\n"
              << "closed_vertical = " << r.closed_vertical.str() << "\n"
              << "row_term = " << r.row_term.str() << "\n"
              << "cross_term = " << r.cross_term.str() << "\n"
              << "consistent = " << (r.consistent ? "true" : "false") << "\n";
  }
  return r.consistent ? 0 : 2;
}

int run_verify(const std::vector<int>& dims_args, int max_side, const std::string& format,
               bool inject_fault, std::int64_t limit) {
  hm::VerifyOptions opts;
  opts.enumeration_threshold = std::min<std::int64_t>(limit, 10'000);
  opts.inject_fault = inject_fault;
  std::vector<hm::CheckResult> results;
  if (!dims_args.empty()) {
    results = hm::verify_box(hm::BoxDims(dims_args[0], dims_args[1], dims_args[2]), opts);
  } else {
    results = hm::verify_sweep(max_side, opts);
  }
  const bool ok = hm::all_pass(results);
  if (format == "json") {
    json checks = json::array();
    for (const hm::CheckResult& r : results)
      checks.push_back(json{
          {"name", r.name}, {"scope", r.scope}, {"pass", r.pass}, {"detail", r.detail}});
    json out{{"version", kSchemaVersion}, {"checks", std::move(checks)}, {"all_pass", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    int failed = 0;
    for (const hm::CheckResult& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.scope;
      if (!r.pass) {
        std::cout << ": " << r.detail;
        ++failed;
      }
      std::cout << "\n";
    }
    std::cout << (ok ? "all " + std::to_string(results.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(results.size()) +
                           " checks failed")
              << "\n";
  }
  return ok ? 0 : 2;
}

int run_sample(const DimsArgs& args, std::uint64_t seed, int count, const std::string& render,
               const std::string& format) {
  const hm::BoxDims d = args.dims();
  const hm::DpTables dp(d);
  if (format != "json" && render == "svg" && count != 1)
    throw CLI::ValidationError("--render svg in text output requires --count 1");
  json samples = json::array();
  for (int idx = 0; idx < count; ++idx) {
    hm::SplitMix64 rng = hm::split_stream(seed, static_cast<std::uint64_t>(idx));
    const hm::PlanePartition pp = hm::sample_uniform(dp, rng);
    if (format == "json") {
      json horizontals = json::array();
      for (const hm::ObliquePos& p : hm::horizontal_positions(pp))
        horizontals.push_back(json::array({p.x, p.y}));
      json s{{"index", idx}, {"entries", pp.matrix()}, {"horizontals", std::move(horizontals)}};
      if (render == "ascii") s["ascii"] = hm::render_ascii(pp);
      if (render == "svg") s["svg"] = hm::render_svg(pp);
      samples.push_back(std::move(s));
    } else if (render == "svg") {
      std::cout << hm::render_svg(pp);
    } else {
      for (const auto& row : pp.matrix()) {
        for (std::size_t j = 0; j < row.size(); ++j)
          std::cout << (j ? " " : "") << row[j];
        std::cout << "\n";
      }
      if (render == "ascii") std::cout << hm::render_ascii(pp);
      if (idx + 1 < count) std::cout << "\n";
    }
  }
  if (format == "json") {
    json out{{"version", kSchemaVersion},
             {"dims", dims_json(d)},
             {"seed", seed},
             {"count", count},
             {"samples", std::move(samples)}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact statistics of uniformly random lozenge tilings of an a,b,c,a,b,c hexagon"};
  app.require_subcommand(1);

  std::int64_t limit = hm::kDefaultEnumerationLimit;
  bool force = false;
  app.add_option("--limit", limit, "enumeration size limit")
      ->envname("HEXAMOMENT_LIMIT")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", force, "enumerate even past the limit");

  DimsArgs count_args;
  CLI::App* cmd_count = app.add_subcommand("count", "number of plane partitions in the a*b*c box");
  add_dims(cmd_count, count_args);

  DimsArgs table_args;
  std::string table_format = "text";
  bool table_float = false;
  CLI::App* cmd_table =
      app.add_subcommand("prob-table", "placement probabilities of horizontal lozenges");
  add_dims(cmd_table, table_args);
  cmd_table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_table->add_flag("--float", table_float, "add decimal approximations");

  DimsArgs moments_args;
  std::string moments_format = "text";
  bool moments_float = false;
  CLI::App* cmd_moments =
      app.add_subcommand("moments", "horizontal and vertical moments of inertia");
  add_dims(cmd_moments, moments_args);
  cmd_moments->add_option("--format", moments_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_moments->add_flag("--float", moments_float, "add decimal approximations");

  std::vector<int> verify_dims;
  int verify_max = 3;
  std::string verify_format = "text";
  bool inject_fault = false;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the full invariant suite");
  cmd_verify->add_option("dims", verify_dims, "single box to verify (a b c)")
      ->expected(0, 3)
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max", verify_max, "sweep bound on each side")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_verify->add_flag("--inject-fault", inject_fault)->group("");  // harness self-test

  DimsArgs sample_args;
  std::uint64_t seed = 0;
  int sample_count = 1;
  std::string sample_render;
  std::string sample_format = "text";
  CLI::App* cmd_sample = app.add_subcommand("sample", "draw uniformly random tilings");
  add_dims(cmd_sample, sample_args);
  cmd_sample->add_option("--seed", seed, "random seed");
  cmd_sample->add_option("--count", sample_count, "number of draws")->check(CLI::PositiveNumber);
  cmd_sample->add_option("--render", sample_render, "also render each draw")
      ->check(CLI::IsMember({"ascii", "svg"}));
  cmd_sample->add_option("--format", sample_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
    if (cmd_count->parsed()) {
      guard_dims(count_args.dims(), limit, force);
      return run_count(count_args);
    }
    if (cmd_table->parsed()) {
      guard_dims(table_args.dims(), limit, force);
      return run_prob_table(table_args, table_format, table_float);
    }
    if (cmd_moments->parsed()) {
      guard_dims(moments_args.dims(), limit, force);
      return run_moments(moments_args, moments_format, moments_float);
    }
    if (cmd_verify->parsed()) {
      if (!verify_dims.empty() && verify_dims.size() != 3)
        throw CLI::ValidationError("verify expects either no dims or all three of a b c");
      return run_verify(verify_dims, verify_max, verify_format, inject_fault, limit);
    }
    if (cmd_sample->parsed()) {
      guard_dims(sample_args.dims(), limit, force);
      return run_sample(sample_args, seed, sample_count, sample_render, sample_format);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const hm::TooLargeError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const hm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
