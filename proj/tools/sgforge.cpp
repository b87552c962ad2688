#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgf/claims.hpp"
#include "sgf/errors.hpp"
#include "sgf/families.hpp"
#include "sgf/monoid.hpp"
#include "sgf/constructions.hpp"
#include "sgf/report_json.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kExitUsage = 2;

struct Range {
  int lo = 3;
  int hi = 3;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected a chain size like 3 or a range like 3..5");
  }
  if (r.lo < 1 || r.hi < r.lo)
    throw CLI::ValidationError("--n", "chain size range must satisfy 1 <= lo <= hi");
  return r;
}

struct ModeOptions {
  std::string mode = "auto";
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000000;
  bool seed_given = false;
  bool samples_given = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--mode", mode, "sweep mode: auto, exhaustive or sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
        ->capture_default_str();
    cmd.add_option("--seed", seed, "sampling seed (required with --mode sampled)")
        ->trigger_on_parse()
        ->each([this](const std::string&) { seed_given = true; });
    cmd.add_option("--samples", samples, "sample count (required with --mode sampled)")
        ->trigger_on_parse()
        ->each([this](const std::string&) { samples_given = true; });
  }

  void validate() const {
    if (mode == "sampled" && (!seed_given || !samples_given))
      throw CLI::ValidationError("--mode", "sampled mode requires --seed and --samples");
  }

  // Auto mode resolves per chain size: exhaustive at desk scale, sampled
  // from n = 5 up.
  sgf::SweepPolicy policy_for(int n) const {
    sgf::SweepPolicy p;
    p.seed = seed;
    p.samples = samples;
    if (mode == "exhaustive")
      p.mode = sgf::SweepPolicy::Mode::kExhaustive;
    else if (mode == "sampled")
      p.mode = sgf::SweepPolicy::Mode::kSampled;
    else
      p.mode = n <= 4 ? sgf::SweepPolicy::Mode::kExhaustive : sgf::SweepPolicy::Mode::kSampled;
    return p;
  }

  json config_json() const {
    return json{{"mode", mode}, {"seed", seed}, {"samples", samples}};
  }
};

std::optional<sgf::Mutation> parse_mutation(const std::string& tag) {
  if (tag.empty()) return std::nullopt;
  const auto dash = tag.rfind('-');
  if (dash != std::string::npos) {
    const std::string side = tag.substr(dash + 1);
    std::string prefix = tag.substr(0, dash);
    if (side == "left" || side == "right") {
      std::optional<sgf::ConstructionId> cid;
      if (prefix == "poi") cid = sgf::ConstructionId::kPoiBilateral;
      if (prefix == "odp") cid = sgf::ConstructionId::kOdpBilateral;
      if (prefix == "podi") cid = sgf::ConstructionId::kPodiSemidirect;
      if (prefix == "dp") cid = sgf::ConstructionId::kDpSemidirect;
      if (cid)
        return sgf::Mutation{*cid, side == "left" ? sgf::ActionSide::kLeft
                                                  : sgf::ActionSide::kRight};
    }
  }
  throw CLI::ValidationError(
      "--mutate", "expected one of poi-left, poi-right, odp-left, odp-right, podi-left, dp-left");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw sgf::Error("cannot open output file " + out_path);
  os << text;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// report-list rendering shared by claims and verify

json reports_to_json(const std::vector<sgf::VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(sgf::to_json(r));
  return arr;
}

void reports_to_csv(std::ostringstream& os, int n,
                    const std::vector<sgf::VerificationReport>& reports) {
  for (const auto& r : reports) {
    os << n << ',' << csv_quote(r.law) << ',' << (r.holds ? "true" : "false") << ','
       << (r.sampled ? "sampled" : "exhaustive") << ',' << r.checked << ','
       << (r.sampled ? std::to_string(r.seed) : "") << ','
       << csv_quote(join(r.counterexample, " | ")) << ',' << csv_quote(r.note) << '\n';
  }
}

void reports_to_text(std::ostringstream& os, const std::vector<sgf::VerificationReport>& reports) {
  for (const auto& r : reports) {
    os << (r.holds ? "[ ok ] " : "[FAIL] ") << r.law << "  ("
       << (r.sampled ? "sampled seed=" + std::to_string(r.seed) : "exhaustive") << ", checked "
       << r.checked << ")\n";
    if (!r.counterexample.empty()) os << "         counterexample: " << join(r.counterexample, ", ") << '\n';
    if (!r.note.empty()) os << "         note: " << r.note << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_claims(const Range& range, const ModeOptions& mode, const std::string& mutate_tag,
               const std::string& format, const std::string& out_path) {
  if (range.lo < 3)
    throw CLI::ValidationError("--n", "the claims suite asserts laws for n >= 3");
  const auto mutation = parse_mutation(mutate_tag);

  bool all_hold = true;
  std::vector<std::pair<int, std::vector<sgf::VerificationReport>>> sections;
  for (int n = range.lo; n <= range.hi; ++n) {
    sgf::ClaimsOptions options;
    options.policy = mode.policy_for(n);
    options.mutation = mutation;
    sections.emplace_back(n, sgf::run_claims(n, options));
    for (const auto& r : sections.back().second) all_hold = all_hold && r.holds;
  }

  std::ostringstream os;
  if (format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "claims"}};
    doc["config"] = mode.config_json();
    doc["config"]["n"] = std::to_string(range.lo) + ".." + std::to_string(range.hi);
    if (!mutate_tag.empty()) doc["config"]["mutate"] = mutate_tag;
    json secs = json::array();
    for (const auto& [n, reports] : sections) {
      bool section_holds = std::all_of(reports.begin(), reports.end(),
                                       [](const auto& r) { return r.holds; });
      secs.push_back(json{{"n", n}, {"all_hold", section_holds}, {"reports", reports_to_json(reports)}});
    }
    doc["sections"] = secs;
    doc["all_hold"] = all_hold;
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "n,law,holds,mode,checked,seed,counterexample,note\n";
    for (const auto& [n, reports] : sections) reports_to_csv(os, n, reports);
  } else {
    for (const auto& [n, reports] : sections) {
      os << "== claims at n = " << n << " ==\n";
      reports_to_text(os, reports);
    }
    os << (all_hold ? "all laws hold\n" : "COUNTEREXAMPLE FOUND\n");
  }
  emit(os.str(), out_path);
  return all_hold ? 0 : 1;
}

int cmd_verify(const std::string& construction_tag, int n, const ModeOptions& mode,
               const std::string& mutate_tag, const std::string& format,
               const std::string& out_path) {
  const auto cid = sgf::construction_from_tag(construction_tag);
  if (!cid) throw CLI::ValidationError("--construction", "unknown construction tag");
  const auto mutation = parse_mutation(mutate_tag);
  std::optional<sgf::Mutation> applied;
  if (mutation && mutation->construction == *cid) applied = mutation;

  const sgf::Construction c = sgf::make_construction(*cid, n, applied);
  const auto reports = sgf::check_all(c.actions(), mode.policy_for(n), std::string(construction_tag));
  const bool all_hold =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });

  std::ostringstream os;
  if (format == "json") {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "verify"},
             {"construction", construction_tag},
             {"n", n},
             {"all_hold", all_hold},
             {"reports", reports_to_json(reports)}};
    doc["config"] = mode.config_json();
    if (!mutate_tag.empty()) doc["config"]["mutate"] = mutate_tag;
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "n,law,holds,mode,checked,seed,counterexample,note\n";
    reports_to_csv(os, n, reports);
  } else {
    os << "== " << construction_tag << " axioms at n = " << n << " ==\n";
    reports_to_text(os, reports);
    os << (all_hold ? "all laws hold\n" : "COUNTEREXAMPLE FOUND\n");
  }
  emit(os.str(), out_path);
  return all_hold ? 0 : 1;
}

int cmd_table(const std::string& families_arg, const Range& range, const std::string& props_arg,
              const std::string& format, const std::string& out_path) {
  std::vector<sgf::FamilyId> families;
  {
    std::istringstream is(families_arg);
    std::string tag;
    while (std::getline(is, tag, ',')) {
      const auto f = sgf::family_from_tag(tag);
      if (!f) throw CLI::ValidationError("--families", "unknown family tag \"" + tag + "\"");
      families.push_back(*f);
    }
  }
  if (families.empty()) throw CLI::ValidationError("--families", "no families given");

  std::vector<std::string> props;
  if (!props_arg.empty()) {
    std::istringstream is(props_arg);
    std::string p;
    while (std::getline(is, p, ',')) {
      if (p != "inverse" && p != "aperiodic" && p != "jtrivial")
        throw CLI::ValidationError("--props", "unknown property \"" + p + "\"");
      props.push_back(p);
    }
  }

  struct Cell {
    std::size_t size = 0;
    std::map<std::string, bool> props;
  };
  std::vector<std::pair<int, std::vector<Cell>>> rows;
  for (int n = range.lo; n <= range.hi; ++n) {
    std::vector<Cell> cells;
    for (const sgf::FamilyId f : families) {
      Cell cell;
      auto elems = sgf::enumerate(f, n);
      cell.size = elems.size();
      if (!props.empty()) {
        const auto m = sgf::FiniteMonoid<sgf::PartialPerm>::build(
            std::move(elems),
            [](const sgf::PartialPerm& a, const sgf::PartialPerm& b) { return a.compose(b); });
        for (const auto& p : props) {
          if (p == "inverse") cell.props[p] = sgf::is_inverse(m).holds;
          if (p == "aperiodic") cell.props[p] = sgf::is_aperiodic(m).holds;
          if (p == "jtrivial") cell.props[p] = sgf::is_j_trivial(m).holds;
        }
      }
      cells.push_back(std::move(cell));
    }
    rows.emplace_back(n, std::move(cells));
  }

  std::ostringstream os;
  if (format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "table"}};
    json fam_list = json::array();
    for (const auto f : families) fam_list.push_back(std::string(sgf::family_tag(f)));
    doc["families"] = fam_list;
    json out_rows = json::array();
    for (const auto& [n, cells] : rows) {
      json row{{"n", n}};
      json by_family;
      for (std::size_t i = 0; i < families.size(); ++i) {
        json cell{{"size", cells[i].size}};
        for (const auto& [k, v] : cells[i].props) cell[k] = v;
        by_family[std::string(sgf::family_tag(families[i]))] = cell;
      }
      row["families"] = by_family;
      out_rows.push_back(row);
    }
    doc["rows"] = out_rows;
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "n";
    for (const auto f : families) {
      os << ',' << sgf::family_tag(f);
      for (const auto& p : props) os << ',' << sgf::family_tag(f) << '.' << p;
    }
    os << '\n';
    for (const auto& [n, cells] : rows) {
      os << n;
      for (const auto& cell : cells) {
        os << ',' << cell.size;
        for (const auto& p : props) os << ',' << (cell.props.at(p) ? "true" : "false");
      }
      os << '\n';
    }
  } else {
    os << "n";
    for (const auto f : families) {
      os << '\t' << sgf::family_tag(f);
      for (const auto& p : props) os << '\t' << sgf::family_tag(f) << '.' << p;
    }
    os << '\n';
    for (const auto& [n, cells] : rows) {
      os << n;
      for (const auto& cell : cells) {
        os << '\t' << cell.size;
        for (const auto& p : props) os << '\t' << (cell.props.at(p) ? "yes" : "no");
      }
      os << '\n';
    }
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_inspect(const std::string& element_text, int n, const std::string& format,
                const std::string& out_path) {
  sgf::PartialPerm p = [&] {
    try {
      return sgf::PartialPerm::parse(element_text, n);
    } catch (const sgf::InvalidParameter& e) {
      throw CLI::ValidationError("element", e.what());
    }
  }();

  std::vector<std::string> families;
  for (const sgf::FamilyId f : sgf::kAllFamilies)
    if (sgf::member(f, p)) families.push_back(std::string(sgf::family_tag(f)));

  auto points = [](const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "}";
  };

  std::ostringstream os;
  if (format == "json") {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "inspect"},
             {"element", p.str()},
             {"n", n}};
    doc["properties"] = json{{"rank", p.rank()},
                             {"domain", p.dom()},
                             {"image", p.im()},
                             {"order-preserving", p.is_order_preserving()},
                             {"order-reversing", p.is_order_reversing()},
                             {"monotone", p.is_monotone()},
                             {"isometry", p.is_isometry()},
                             {"extensive", p.is_extensive()},
                             {"co-extensive", p.is_coextensive()},
                             {"partial-identity", p.is_partial_identity()},
                             {"inverse", p.inverse().str()},
                             {"families", families}};
    os << doc.dump(2) << '\n';
  } else {
    os << "element: " << p.str() << "\nn: " << n << "\nrank: " << p.rank()
       << "\ndomain: " << points(p.dom()) << "\nimage: " << points(p.im())
       << "\norder-preserving: " << (p.is_order_preserving() ? "true" : "false")
       << "\norder-reversing: " << (p.is_order_reversing() ? "true" : "false")
       << "\nmonotone: " << (p.is_monotone() ? "true" : "false")
       << "\nisometry: " << (p.is_isometry() ? "true" : "false")
       << "\nextensive: " << (p.is_extensive() ? "true" : "false")
       << "\nco-extensive: " << (p.is_coextensive() ? "true" : "false")
       << "\npartial-identity: " << (p.is_partial_identity() ? "true" : "false")
       << "\ninverse: " << p.inverse().str() << "\nfamilies: " << join(families, ", ") << '\n';
  }
  emit(os.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semigroup-forge: builds monoids of partial permutations, their bilateral and "
               "unilateral semidirect products, and machine-checks the algebraic laws they "
               "are claimed to satisfy"};
  app.require_subcommand(1);

  // claims
  auto* claims = app.add_subcommand("claims", "run the full verification suite per chain size");
  std::string claims_n = "3";
  ModeOptions claims_mode;
  std::string claims_mutate, claims_format = "json", claims_out;
  claims->add_option("--n", claims_n, "chain size or range, e.g. 3 or 3..5")->capture_default_str();
  claims_mode.add_to(*claims);
  claims->add_option("--mutate", claims_mutate,
                     "self-test: corrupt one action output (e.g. poi-right)");
  claims->add_option("--format", claims_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  claims->add_option("--out", claims_out, "write output to a file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "run one construction's action axiom suite");
  std::string verify_construction;
  int verify_n = 3;
  ModeOptions verify_mode;
  std::string verify_mutate, verify_format = "json", verify_out;
  verify->add_option("--construction", verify_construction,
                     "poi-bilateral, odp-bilateral, podi-semidirect or dp-semidirect")
      ->required();
  verify->add_option("--n", verify_n, "chain size")->capture_default_str();
  verify_mode.add_to(*verify);
  verify->add_option("--mutate", verify_mutate, "self-test: corrupt one action output");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("--out", verify_out, "write output to a file instead of stdout");

  // table
  auto* table = app.add_subcommand("table", "family cardinalities (and properties) per chain size");
  std::string table_families = "i,poi,podi,odp,dp";
  std::string table_n = "3", table_props, table_format = "text", table_out;
  table->add_option("--families", table_families, "comma-separated family tags")
      ->capture_default_str();
  table->add_option("--n", table_n, "chain size or range")->capture_default_str();
  table->add_option("--props", table_props,
                    "extra boolean columns: inverse, aperiodic, jtrivial (comma-separated)");
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  table->add_option("--out", table_out, "write output to a file instead of stdout");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "parse one element and print its properties");
  std::string inspect_element;
  int inspect_n = 3;
  std::string inspect_format = "text", inspect_out;
  inspect->add_option("element", inspect_element, "two-row rendering, e.g. \"[1 3 / 2 1]\"")
      ->required();
  inspect->add_option("--n", inspect_n, "chain size")->capture_default_str();
  inspect->add_option("--format", inspect_format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  inspect->add_option("--out", inspect_out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*claims) {
      claims_mode.validate();
      return cmd_claims(parse_range(claims_n), claims_mode, claims_mutate, claims_format,
                        claims_out);
    }
    if (*verify) {
      verify_mode.validate();
      if (verify_n < 1) throw CLI::ValidationError("--n", "chain size must be at least 1");
      return cmd_verify(verify_construction, verify_n, verify_mode, verify_mutate, verify_format,
                        verify_out);
    }
    if (*table) return cmd_table(table_families, parse_range(table_n), table_props, table_format,
                                 table_out);
    if (*inspect) {
      if (inspect_n < 1) throw CLI::ValidationError("--n", "chain size must be at least 1");
      return cmd_inspect(inspect_element, inspect_n, inspect_format, inspect_out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const sgf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
