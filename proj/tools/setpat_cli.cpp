#include "setpat_cli.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>

#include <CLI11.hpp>
#include <json.hpp>

#include "setpat/setpat.hpp"

namespace setpat::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Kind { Perm, Partition, Rgf };
enum class Format { Plain, Json };

struct Context {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

// Positional arguments, read from stdin when given as "-".
std::string resolve(const std::string &arg, std::istream &in) {
  if (arg != "-")
    return arg;
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("expected another line on standard input");
  return line;
}

Json to_json(std::span<const int> values) {
  return Json(std::vector<int>(values.begin(), values.end()));
}

Json report_json(const VerificationReport &r) {
  Json mismatches = Json::array();
  for (const auto &m : r.mismatches)
    mismatches.push_back({{"check", m.check},
                          {"text", m.text},
                          {"pattern", m.pattern},
                          {"engine", m.engine},
                          {"oracle", m.oracle}});
  return {{"gate", r.gate},
          {"max_n", r.max_n},
          {"max_k", r.max_k},
          {"pairs_checked", r.pairs_checked},
          {"passed", r.passed()},
          {"mismatches", mismatches},
          {"elapsed_ms", r.elapsed.count()}};
}

const char *notion_name(Notion n) { return n == Notion::Rgf ? "rgf" : "partition"; }

struct Options {
  Format format = Format::Plain;
  Kind kind = Kind::Partition;
  Notion notion = Notion::Partition;
  bool witness = false;
  bool oracle = false;
  bool inverse = false;
  bool force = false;
  int jobs = 1;
  std::optional<int> max_n;
  std::optional<int> max_k;
  int min_n = 1;
  std::string gate = "all";
  std::string first;
  std::string second;
};

void add_format(CLI::App *cmd, Options &o) {
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"plain", Format::Plain},
                                        {"json", Format::Json}}));
}

void add_kind(CLI::App *cmd, Options &o) {
  cmd->add_option("--kind", o.kind, "Structure kind (default partition)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Kind>{
          {"perm", Kind::Perm}, {"partition", Kind::Partition}, {"rgf", Kind::Rgf}}));
}

void add_jobs(CLI::App *cmd, Options &o) {
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--force", o.force, "Override the safety bound on n");
}

int print_relation(const Context &ctx, const Options &o, const char *command,
                   bool holds, std::optional<std::span<const int>> witness) {
  if (o.format == Format::Json) {
    Json j{{"command", command}, {"contains", holds}};
    if (o.witness && witness)
      j["witness"] = to_json(*witness);
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << (holds ? "true" : "false") << '\n';
    if (o.witness && witness)
      ctx.out << join(*witness) << '\n';
  }
  return holds ? kHolds : kDoesNotHold;
}

void print_result(const Context &ctx, const Options &o, const char *command,
                  const std::string &result) {
  if (o.format == Format::Json)
    ctx.out << Json{{"command", command}, {"result", result}}.dump() << '\n';
  else
    ctx.out << result << '\n';
}

template <class W>
std::optional<std::span<const int>> witness_of(const MatchResult<W> &m) {
  if (!m.witness)
    return std::nullopt;
  if constexpr (std::is_same_v<W, SubsetWitness>)
    return m.witness->elements();
  else
    return m.witness->indices();
}

int cmd_contains(const Context &ctx, const Options &o) {
  const std::string text = resolve(o.first, ctx.in);
  const std::string pattern = resolve(o.second, ctx.in);
  switch (o.kind) {
  case Kind::Perm: {
    const auto m = perm_contains(parse_permutation(text), parse_permutation(pattern));
    return print_relation(ctx, o, "contains", m.contains, witness_of(m));
  }
  case Kind::Rgf: {
    const auto m = rgf_contains(parse_rgf(text), parse_rgf(pattern));
    return print_relation(ctx, o, "contains", m.contains, witness_of(m));
  }
  case Kind::Partition:
    break;
  }
  const SetPartition sigma = parse_partition(text);
  const SetPartition tau = parse_partition(pattern);
  if (o.oracle) {
    const auto all = brute_partition_witnesses(sigma, tau);
    std::optional<std::span<const int>> w;
    if (!all.empty())
      w = all.front().elements();
    return print_relation(ctx, o, "contains", !all.empty(), w);
  }
  const auto m = dispatch_contains(sigma, tau);
  return print_relation(ctx, o, "contains", m.contains, witness_of(m));
}

int cmd_count(const Context &ctx, const Options &o) {
  const std::string text = resolve(o.first, ctx.in);
  const std::string pattern = resolve(o.second, ctx.in);
  std::uint64_t count = 0;
  switch (o.kind) {
  case Kind::Perm:
    count = perm_count(parse_permutation(text), parse_permutation(pattern));
    break;
  case Kind::Rgf:
    count = rgf_count(parse_rgf(text), parse_rgf(pattern));
    break;
  case Kind::Partition: {
    const SetPartition sigma = parse_partition(text);
    const SetPartition tau = parse_partition(pattern);
    count = o.oracle ? brute_partition_count(sigma, tau) : partition_count(sigma, tau);
    break;
  }
  }
  if (o.format == Format::Json)
    ctx.out << Json{{"command", "count"}, {"count", count}}.dump() << '\n';
  else
    ctx.out << count << '\n';
  return kHolds;
}

int cmd_reduce(const Context &ctx, const Options &o) {
  const Permutation pi = parse_permutation(resolve(o.first, ctx.in));
  print_result(ctx, o, "reduce", to_string(reduce_perm(pi).partition()));
  return kHolds;
}

int cmd_invert_reduce(const Context &ctx, const Options &o) {
  const SetPartition sigma = parse_partition(resolve(o.first, ctx.in));
  if (!is_matchstick(sigma))
    throw DomainError("'" + to_string(sigma) + "' is not of the form s(pi)");
  print_result(ctx, o, "invert-reduce", to_string(perm_of_matchstick(sigma)));
  return kHolds;
}

int cmd_rgf(const Context &ctx, const Options &o) {
  const std::string arg = resolve(o.first, ctx.in);
  if (o.inverse)
    print_result(ctx, o, "rgf", to_string(partition_of_rgf(parse_rgf(arg))));
  else
    print_result(ctx, o, "rgf", to_string(rgf_of(parse_partition(arg))));
  return kHolds;
}

int cmd_rgf_contains(const Context &ctx, const Options &o) {
  const std::string text = resolve(o.first, ctx.in);
  const std::string pattern = resolve(o.second, ctx.in);
  const auto m = rgf_contains(parse_rgf(text), parse_rgf(pattern));
  return print_relation(ctx, o, "rgf-contains", m.contains, witness_of(m));
}

int cmd_census(const Context &ctx, const Options &o) {
  const SetPartition pattern = parse_partition(resolve(o.first, ctx.in));
  const int max_n = o.max_n.value_or(6);
  const RunOptions run{o.jobs, o.force};
  for (int n = o.min_n; n <= max_n; ++n) {
    const CensusRow row = census(n, pattern, o.notion, run);
    const std::string shown = row.notion == Notion::Rgf
                                  ? to_string(rgf_of(row.pattern))
                                  : to_string(row.pattern);
    if (o.format == Format::Json) {
      ctx.out << Json{{"n", row.n},
                      {"pattern", shown},
                      {"notion", notion_name(row.notion)},
                      {"avoiders", row.avoiders},
                      {"containers", row.containers}}
                     .dump()
              << '\n';
    } else {
      ctx.out << "n=" << row.n << " pattern=" << shown
              << " notion=" << notion_name(row.notion)
              << " avoiders=" << row.avoiders << " containers=" << row.containers
              << '\n';
    }
  }
  return kHolds;
}

int cmd_verify(const Context &ctx, const Options &o) {
  const RunOptions run{o.jobs, o.force};
  std::vector<VerificationReport> reports;
  if (o.gate == "reduction" || o.gate == "all")
    reports.push_back(verify_reduction(o.max_n.value_or(kVerifySafetyBound),
                                       o.max_k.value_or(4), run));
  if (o.gate == "rgf" || o.gate == "all")
    reports.push_back(verify_rgf_coincidence(o.max_n.value_or(kParsimonyMaxN),
                                             o.max_k.value_or(kParsimonyMaxK), run));

  bool passed = true;
  for (const auto &r : reports)
    passed = passed && r.passed();

  if (o.format == Format::Json) {
    Json gates = Json::array();
    for (const auto &r : reports)
      gates.push_back(report_json(r));
    ctx.out << Json{{"command", "verify"}, {"passed", passed}, {"gates", gates}}.dump()
            << '\n';
  } else {
    for (const auto &r : reports) {
      ctx.out << r.gate << ": max_n=" << r.max_n << " max_k=" << r.max_k
              << " pairs=" << r.pairs_checked
              << " mismatches=" << r.mismatches.size() << " ("
              << r.elapsed.count() << " ms) " << (r.passed() ? "PASS" : "FAIL")
              << '\n';
      for (const auto &m : r.mismatches)
        ctx.out << "  " << m.check << " text=" << m.text << " pattern=" << m.pattern
                << " engine=" << m.engine << " oracle=" << m.oracle << '\n';
    }
  }
  return passed ? kHolds : kVerificationMismatch;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::istream &in,
                std::ostream &out, std::ostream &err) {
  CLI::App app{"Pattern containment for permutations, set partitions and RGFs",
               "setpat"};
  app.require_subcommand(1);
  Options o;

  auto *contains = app.add_subcommand("contains", "Does TEXT contain PATTERN?");
  add_kind(contains, o);
  add_format(contains, o);
  contains->add_flag("--witness", o.witness, "Print the least witness");
  contains->add_flag("--oracle", o.oracle,
                     "Partitions only: use brute-force subset enumeration");
  contains->add_option("text", o.first)->required();
  contains->add_option("pattern", o.second)->required();

  auto *count = app.add_subcommand("count", "Number of occurrences of PATTERN");
  add_kind(count, o);
  add_format(count, o);
  count->add_flag("--oracle", o.oracle,
                  "Partitions only: use brute-force subset enumeration");
  count->add_option("text", o.first)->required();
  count->add_option("pattern", o.second)->required();

  auto *reduce = app.add_subcommand("reduce", "Map a permutation to s(pi)");
  add_format(reduce, o);
  reduce->add_option("permutation", o.first)->required();

  auto *invert = app.add_subcommand("invert-reduce",
                                    "Recover pi from a partition s(pi)");
  add_format(invert, o);
  invert->add_option("partition", o.first)->required();

  auto *rgf = app.add_subcommand("rgf", "Encode a partition as its RGF word");
  add_format(rgf, o);
  rgf->add_flag("--inverse", o.inverse, "Decode an RGF word into a partition");
  rgf->add_option("structure", o.first)->required();

  auto *rgf_contains_cmd =
      app.add_subcommand("rgf-contains", "RGF containment of two words");
  add_format(rgf_contains_cmd, o);
  rgf_contains_cmd->add_flag("--witness", o.witness, "Print the least witness");
  rgf_contains_cmd->add_option("text", o.first)->required();
  rgf_contains_cmd->add_option("pattern", o.second)->required();

  auto *census_cmd =
      app.add_subcommand("census", "Count avoiders of PATTERN for each n");
  add_format(census_cmd, o);
  add_jobs(census_cmd, o);
  census_cmd->add_option("--notion", o.notion, "Containment notion")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Notion>{
          {"partition", Notion::Partition}, {"rgf", Notion::Rgf}}));
  census_cmd->add_option("--max-n", o.max_n, "Largest n (default 6)");
  census_cmd->add_option("--min-n", o.min_n, "Smallest n (default 1)")
      ->check(CLI::NonNegativeNumber);
  census_cmd->add_option("pattern", o.first)->required();

  auto *verify = app.add_subcommand("verify", "Run the reduction checks");
  add_format(verify, o);
  add_jobs(verify, o);
  verify->add_option("--gate", o.gate, "reduction, rgf or all")
      ->check(CLI::IsMember({"reduction", "rgf", "all"}));
  verify->add_option("--max-n", o.max_n, "Largest text size");
  verify->add_option("--max-k", o.max_k, "Largest pattern size");

  std::vector<std::string> storage{"setpat"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &s : storage)
    argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kHolds;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Context ctx{in, out, err};
  try {
    if (contains->parsed())
      return cmd_contains(ctx, o);
    if (count->parsed())
      return cmd_count(ctx, o);
    if (reduce->parsed())
      return cmd_reduce(ctx, o);
    if (invert->parsed())
      return cmd_invert_reduce(ctx, o);
    if (rgf->parsed())
      return cmd_rgf(ctx, o);
    if (rgf_contains_cmd->parsed())
      return cmd_rgf_contains(ctx, o);
    if (census_cmd->parsed())
      return cmd_census(ctx, o);
    if (verify->parsed())
      return cmd_verify(ctx, o);
  } catch (const Error &e) {
    err << "setpat: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace setpat::cli
