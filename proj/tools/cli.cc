// Copyright 2026 The gf2cube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include "gf2cube/gf2cube.h"
#include <nlohmann/json.hpp>

namespace gf2cube::cli {
namespace {

using Json = nlohmann::ordered_json;

// Malformed arguments that only surface after CLI11 has parsed them.
class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string subcommand;
  int n = 0;
  std::string modulus;
  std::string xi;
  std::string coeffs;
  std::string method = "closed";
  std::string format = "plain";
  std::string n_range;
  bool check_oracle = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  unsigned cubics = 0;
};

std::optional<std::uint64_t> modulus_override(const CommandConfig& cfg) {
  if (cfg.modulus.empty()) return std::nullopt;
  const auto m = parse_hex(cfg.modulus);
  if (!m) throw UsageFailure("--mod: not a hex value: " + cfg.modulus);
  return m;
}

Field make_field(const CommandConfig& cfg, int n) { return Field(n, modulus_override(cfg)); }

FieldElement parse_element(const Field& field, const std::string& text, const char* flag) {
  const auto bits = parse_hex(text);
  if (!bits) throw UsageFailure(std::string(flag) + ": not a hex value: " + text);
  if (*bits >= field.order()) {
    throw UsageFailure(std::string(flag) + ": " + text + " does not fit in " +
                       std::to_string(field.degree()) + " bits");
  }
  return field.element(*bits);
}

std::vector<FieldElement> parse_coeffs(const Field& field, const std::string& text,
                                       std::size_t expected) {
  std::vector<FieldElement> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    out.push_back(parse_element(field, item, "--coeffs"));
  }
  if (out.size() != expected) {
    throw UsageFailure("--coeffs: expected " + std::to_string(expected) + " values, got " +
                       std::to_string(out.size()));
  }
  return out;
}

std::pair<int, int> parse_range(const CommandConfig& cfg) {
  if (cfg.n_range.empty()) {
    if (cfg.n == 0) throw UsageFailure("either --n or --n-range is required");
    return {cfg.n, cfg.n};
  }
  const auto colon = cfg.n_range.find(':');
  if (colon == std::string::npos) throw UsageFailure("--n-range must look like lo:hi");
  int lo = 0, hi = 0;
  const char* s = cfg.n_range.data();
  const auto r1 = std::from_chars(s, s + colon, lo);
  const auto r2 = std::from_chars(s + colon + 1, s + cfg.n_range.size(), hi);
  if (r1.ec != std::errc() || r1.ptr != s + colon || r2.ec != std::errc() ||
      r2.ptr != s + cfg.n_range.size() || lo > hi) {
    throw UsageFailure("--n-range must look like lo:hi with lo <= hi");
  }
  return {lo, hi};
}

Json hex_list(const std::vector<FieldElement>& elements) {
  Json list = Json::array();
  for (FieldElement e : elements) list.push_back(to_hex(e));
  return list;
}

int cmd_field(const CommandConfig& cfg, std::ostream& out) {
  const Field f = make_field(cfg, cfg.n);
  if (cfg.format == "json") {
    Json j;
    j["n"] = f.degree();
    j["modulus"] = to_hex(f.modulus());
    j["order"] = f.order();
    j["trace_of_one"] = f.trace_of_one();
    j["generator"] = to_hex(f.generator());
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "n,modulus,order,trace_of_one,generator\n"
        << f.degree() << ',' << to_hex(f.modulus()) << ',' << f.order() << ','
        << f.trace_of_one() << ',' << to_hex(f.generator()) << '\n';
  } else {
    out << "n=" << f.degree() << " modulus=" << to_hex(f.modulus()) << " order=" << f.order()
        << " trace_of_one=" << f.trace_of_one() << " generator=" << to_hex(f.generator())
        << '\n';
  }
  return kExitOk;
}

int cmd_image(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field f = make_field(cfg, cfg.n);
  std::optional<ImagePartition> closed;
  std::optional<OracleReport> brute;
  if (cfg.method != "brute") closed = image_closed_form(f, cfg.jobs);
  if (cfg.method != "closed") brute = image_bruteforce(f, cfg.jobs);
  const bool match = !(closed && brute) || diff_partitions(*closed, brute->partition).empty();
  const ImagePartition& shown = closed ? *closed : brute->partition;

  if (cfg.format == "json") {
    if (closed && brute) {
      Json j;
      j["n"] = f.degree();
      j["modulus"] = to_hex(f.modulus());
      j["method"] = "both";
      j["match"] = match;
      j["closed"] = Json::parse(to_json(*closed));
      j["bruteforce"] = Json::parse(to_json(*brute));
      out << j.dump() << '\n';
    } else if (brute) {
      out << to_json(*brute) << '\n';
    } else {
      out << to_json(*closed) << '\n';
    }
  } else if (cfg.format == "csv") {
    out << to_csv(shown);
  } else {
    out << to_plain(shown);
  }
  if (!match) {
    err << "closed form and brute force disagree for n = " << f.degree() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_member(const CommandConfig& cfg, std::ostream& out) {
  const Field f = make_field(cfg, cfg.n);
  if (cfg.xi.empty()) throw UsageFailure("member requires --xi");
  const FieldElement xi = parse_element(f, cfg.xi, "--xi");
  const Membership m = member(f, xi);
  if (cfg.format == "json") {
    Json j;
    j["xi"] = to_hex(xi);
    j["in_image"] = m.in_image;
    j["label"] = std::string(to_string(m.label));
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "xi,in_image,label\n"
        << to_hex(xi) << ',' << (m.in_image ? "true" : "false") << ',' << to_string(m.label)
        << '\n';
  } else {
    out << to_hex(xi) << ' ' << to_string(m.label) << ' '
        << (m.in_image ? "in image" : "not in image") << '\n';
  }
  return kExitOk;
}

int cmd_classify(const CommandConfig& cfg, std::ostream& out) {
  const Field f = make_field(cfg, cfg.n);
  FieldElement a = f.one(), b;
  if (!cfg.coeffs.empty()) {
    const auto ab = parse_coeffs(f, cfg.coeffs, 2);
    a = ab[0];
    b = ab[1];
  } else if (!cfg.xi.empty()) {
    b = parse_element(f, cfg.xi, "--xi");
  } else {
    throw UsageFailure("classify requires --coeffs a,b or --xi");
  }
  const CubicClassification kind = classify_williams(f, a, b);
  if (cfg.format == "json") {
    Json j;
    j["a"] = to_hex(a);
    j["b"] = to_hex(b);
    j["kind"] = std::string(to_string(kind));
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "a,b,kind\n" << to_hex(a) << ',' << to_hex(b) << ',' << to_string(kind) << '\n';
  } else {
    out << "X^3 + " << to_hex(a) << "*X + " << to_hex(b) << ": " << to_string(kind) << '\n';
  }
  return kExitOk;
}

int cmd_roots(const CommandConfig& cfg, std::ostream& out) {
  const Field f = make_field(cfg, cfg.n);
  if (cfg.xi.empty()) throw UsageFailure("roots requires --xi");
  const RootReport report = count_field_roots(f, parse_element(f, cfg.xi, "--xi"));
  if (cfg.format == "json") {
    out << to_json(report) << '\n';
  } else if (cfg.format == "csv") {
    out << "xi,label,root\n";
    for (FieldElement r : report.roots) {
      out << to_hex(report.xi) << ',' << to_string(report.label) << ',' << to_hex(r) << '\n';
    }
  } else {
    out << to_hex(report.xi) << ' ' << to_string(report.label);
    for (FieldElement r : report.roots) out << ' ' << to_hex(r);
    if (report.double_root) out << " (0x1 double)";
    out << '\n';
  }
  return kExitOk;
}

int cmd_reduce(const CommandConfig& cfg, std::ostream& out) {
  const Field f = make_field(cfg, cfg.n);
  if (cfg.coeffs.empty()) throw UsageFailure("reduce requires --coeffs a,b,c,d");
  const auto k = parse_coeffs(f, cfg.coeffs, 4);
  const CubicCoeffs coeffs{k[0], k[1], k[2], k[3]};
  const ReducedCubic r = reduce_general_cubic(f, coeffs);
  const char* branch = r.branch == ReducedBranch::kCanonical ? "Canonical" : "Degenerate";
  std::optional<std::vector<FieldElement>> image;
  if (f.degree() <= kMaterializeLimit) image = image_general_cubic(f, coeffs);

  if (cfg.format == "json") {
    Json j;
    j["coeffs"] = hex_list(k);
    j["branch"] = branch;
    j["u"] = to_hex(r.u);
    j["v"] = to_hex(r.v);
    j["a_prime"] = to_hex(r.a_prime);
    j["d_prime"] = to_hex(r.d_prime);
    if (image) {
      j["image_size"] = image->size();
      j["image"] = hex_list(*image);
    }
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "branch,u,v,a_prime,d_prime,image_size\n"
        << branch << ',' << to_hex(r.u) << ',' << to_hex(r.v) << ',' << to_hex(r.a_prime)
        << ',' << to_hex(r.d_prime) << ',' << (image ? std::to_string(image->size()) : "")
        << '\n';
  } else {
    out << branch << " z = " << to_hex(r.u) << "*x + " << to_hex(r.v) << ": "
        << to_hex(r.a_prime)
        << (r.branch == ReducedBranch::kCanonical ? "*(z^3 + z) + " : "*z^3 + ")
        << to_hex(r.d_prime) << '\n';
    if (image) out << "image size " << image->size() << '\n';
  }
  return kExitOk;
}

int cmd_stats(const CommandConfig& cfg, std::ostream& out) {
  const auto [lo, hi] = parse_range(cfg);
  if (cfg.check_oracle && hi > kOracleLimit) {
    throw FeasibilityError("--check-oracle supports n <= 24");
  }
  bool all_match = true;
  Json rows = Json::array();
  if (cfg.format == "csv") {
    out << "n,y1,y3,y0,image,pred_y1,pred_y3,pred_y0,pred_image,match";
    if (cfg.check_oracle) out << ",oracle_match";
    out << '\n';
  } else if (cfg.format != "json") {
    out << "   n            y1            y3         image  formula";
    if (cfg.check_oracle) out << "  oracle";
    out << '\n';
  }
  for (int n = lo; n <= hi; ++n) {
    const Field f = make_field(cfg, n);
    const ImageCounts got = image_counts(f, cfg.jobs);
    const ImageCounts want = predicted_counts(n);
    const bool match = got == want;
    std::optional<bool> oracle_match;
    if (cfg.check_oracle) {
      const OracleReport brute = image_bruteforce(f, cfg.jobs);
      oracle_match = diff_partitions(image_closed_form(f, cfg.jobs), brute.partition).empty();
    }
    all_match = all_match && match && oracle_match.value_or(true);

    if (cfg.format == "json") {
      Json row;
      row["n"] = n;
      row["y1"] = got.y1;
      row["y3"] = got.y3;
      row["y0"] = got.y0;
      row["image"] = got.image;
      row["predicted"] = {{"y1", want.y1}, {"y3", want.y3}, {"y0", want.y0}, {"image", want.image}};
      row["match"] = match;
      if (oracle_match) row["oracle_match"] = *oracle_match;
      rows.push_back(std::move(row));
    } else if (cfg.format == "csv") {
      out << n << ',' << got.y1 << ',' << got.y3 << ',' << got.y0 << ',' << got.image << ','
          << want.y1 << ',' << want.y3 << ',' << want.y0 << ',' << want.image << ','
          << (match ? "true" : "false");
      if (oracle_match) out << ',' << (*oracle_match ? "true" : "false");
      out << '\n';
    } else {
      char line[128];
      std::snprintf(line, sizeof line, "%4d %13llu %13llu %13llu  %-7s", n,
                    static_cast<unsigned long long>(got.y1),
                    static_cast<unsigned long long>(got.y3),
                    static_cast<unsigned long long>(got.image), match ? "match" : "DIFFER");
      out << line;
      if (oracle_match) out << "  " << (*oracle_match ? "match" : "DIFFER");
      out << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return all_match ? kExitOk : kExitMismatch;
}

std::string describe_diff(const PartitionDiff& d) {
  std::ostringstream s;
  auto part = [&](const char* name, const SetDiff& sd) {
    if (!sd.empty()) {
      s << ' ' << name << "(+" << sd.only_closed.size() << "/-" << sd.only_brute.size() << ')';
    }
  };
  part("y0", d.y0);
  part("y1", d.y1);
  part("y3", d.y3);
  part("image", d.image);
  if (!d.count_mismatches.empty()) s << " counts(" << d.count_mismatches.size() << ')';
  return s.str();
}

// Seeded random general cubics checked against the oracle.
std::pair<unsigned, unsigned> check_random_cubics(const Field& f, const ImagePartition& base,
                                                  unsigned count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> any(0, f.order() - 1), nonzero(1, f.order() - 1);
  unsigned passed = 0;
  for (unsigned i = 0; i < count; ++i) {
    const CubicCoeffs k{f.element(nonzero(rng)), f.element(any(rng)), f.element(any(rng)),
                        f.element(any(rng))};
    if (image_general_cubic(f, k, base) == image_bruteforce_general(f, k)) ++passed;
  }
  return {passed, count};
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  const auto [lo, hi] = parse_range(cfg);
  if (hi > kOracleLimit) throw FeasibilityError("verify supports n <= 24");
  std::mt19937_64 rng(cfg.seed);
  bool all_pass = true;
  Json rows = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const Field f = make_field(cfg, n);
    const VerifyReport report = verify_partition(f, cfg.jobs);
    std::pair<unsigned, unsigned> cubics{0, 0};
    if (cfg.cubics > 0) cubics = check_random_cubics(f, image_closed_form(f, cfg.jobs), cfg.cubics, rng);
    const bool pass = report.pass() && cubics.first == cubics.second;
    all_pass = all_pass && pass;

    if (cfg.format == "json") {
      Json row;
      row["n"] = n;
      row["modulus"] = to_hex(f.modulus());
      row["pass"] = pass;
      row["diff_empty"] = report.diff.empty();
      if (report.fibers) {
        Json hist = Json::object();
        for (const auto& [size, values] : report.fibers->size_histogram) {
          hist[std::to_string(size)] = values;
        }
        row["fiber_sizes"] = std::move(hist);
        row["size3_fibers"] = hex_list(report.fibers->size3_locations);
      }
      if (cfg.cubics > 0) row["cubics"] = {{"passed", cubics.first}, {"total", cubics.second}};
      rows.push_back(std::move(row));
    } else {
      out << "n=" << n << " modulus=" << to_hex(f.modulus()) << (pass ? " PASS" : " FAIL");
      if (!report.diff.empty()) out << " diff:" << describe_diff(report.diff);
      if (report.fibers) {
        out << " fiber_sizes={";
        bool first = true;
        for (const auto& [size, values] : report.fibers->size_histogram) {
          out << (first ? "" : ",") << size << ':' << values;
          first = false;
        }
        out << "} size3_fibers=[";
        for (std::size_t i = 0; i < report.fibers->size3_locations.size(); ++i) {
          out << (i ? "," : "") << to_hex(report.fibers->size3_locations[i]);
        }
        out << ']';
      }
      if (cfg.cubics > 0) out << " cubics=" << cubics.first << '/' << cubics.second;
      out << '\n';
    }
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Image of x^3 + x over GF(2^n): closed form, oracle, and cubic tools",
               "gf2cube"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "plain"};
  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* n_opt = sub->add_option("--n", cfg.n, "Extension degree (1..32)")
                      ->check(CLI::Range(1, kMaxDegree));
    if (needs_n) n_opt->required();
    sub->add_option("--mod", cfg.modulus, "Irreducible modulus in hex, e.g. 0x13");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
  };

  auto* field = app.add_subcommand("field", "Describe the field");
  add_common(field, true);

  auto* image = app.add_subcommand("image", "Image partition of x^3 + x");
  add_common(image, true);
  image->add_option("--method", cfg.method, "closed, brute or both")
      ->check(CLI::IsMember({"closed", "brute", "both"}))
      ->capture_default_str();

  auto* member_cmd = app.add_subcommand("member", "Membership of xi in the image");
  add_common(member_cmd, true);
  member_cmd->add_option("--xi", cfg.xi, "Element in hex")->required();

  auto* classify = app.add_subcommand("classify", "Factorization pattern of X^3 + aX + b");
  add_common(classify, true);
  classify->add_option("--coeffs", cfg.coeffs, "a,b in hex");
  classify->add_option("--xi", cfg.xi, "Shorthand for a = 1, b = xi");

  auto* roots = app.add_subcommand("roots", "Roots of x^3 + x + xi");
  add_common(roots, true);
  roots->add_option("--xi", cfg.xi, "Element in hex")->required();

  auto* reduce = app.add_subcommand("reduce", "Affine reduction of a*x^3 + b*x^2 + c*x + d");
  add_common(reduce, true);
  reduce->add_option("--coeffs", cfg.coeffs, "a,b,c,d in hex")->required();

  auto* stats = app.add_subcommand("stats", "Cardinality sweep against the counting formulas");
  add_common(stats, false);
  stats->add_option("--n-range", cfg.n_range, "lo:hi");
  stats->add_flag("--check-oracle", cfg.check_oracle, "Also compare with brute force (n <= 24)");

  auto* verify = app.add_subcommand("verify", "Closed form versus brute force");
  add_common(verify, false);
  verify->add_option("--n-range", cfg.n_range, "lo:hi");
  verify->add_option("--cubics", cfg.cubics, "Random general cubics to check per n");
  verify->add_option("--seed", cfg.seed, "Seed for --cubics sampling")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "field") return cmd_field(cfg, out);
    if (cfg.subcommand == "image") return cmd_image(cfg, out, err);
    if (cfg.subcommand == "member") return cmd_member(cfg, out);
    if (cfg.subcommand == "classify") return cmd_classify(cfg, out);
    if (cfg.subcommand == "roots") return cmd_roots(cfg, out);
    if (cfg.subcommand == "reduce") return cmd_reduce(cfg, out);
    if (cfg.subcommand == "stats") return cmd_stats(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
  } catch (const UsageFailure& e) {
    err << "gf2cube: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "gf2cube: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gf2cube::cli
