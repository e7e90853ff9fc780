// hornex: count and enumerate the models of a Horn formula.

#include "hornex/closure.hpp"
#include "hornex/count.hpp"
#include "hornex/engine.hpp"
#include "hornex/errors.hpp"
#include "hornex/io.hpp"
#include "hornex/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using hornex::BigCount;
using hornex::CardinalityFilter;
using hornex::HornInstance;
using hornex::PrunePolicy;
using hornex::to_decimal;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUnsat = 1, kUsage = 2, kInput = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format;
  bool no_merge = false;
  std::string order = "input";
  std::optional<std::string> prune;
  std::string output = "text";
  std::optional<std::uint64_t> cap;

  std::optional<std::size_t> eq, le, ge;
  std::optional<std::size_t> card_k;
  std::optional<std::uint64_t> limit;
  std::string strategy = "direct";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Instance file, '-' for stdin")->required();
  cmd->add_option("-f,--format", o.format, "Input format (default: dimacs for .cnf/.dimacs, else native)")
      ->check(CLI::IsMember({"native", "dimacs"}));
  cmd->add_flag("--no-merge", o.no_merge, "Keep implications with equal premises apart");
  cmd->add_option("--order", o.order, "Constraint order")
      ->check(CLI::IsMember({"input", "size-asc"}));
  cmd->add_option("--output", o.output, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_prune(CLI::App* cmd, Options& o) {
  cmd->add_option("--prune", o.prune, "Pruning policy")
      ->check(CLI::IsMember({"none", "weak", "feasible", "extra-le", "noncover-eq", "ie-eq"}));
}

void add_filter(CLI::App* cmd, Options& o, bool with_ge) {
  auto* eq = cmd->add_option("--eq", o.eq, "Only models with exactly K elements");
  auto* le = cmd->add_option("--le", o.le, "Only models with at most K elements");
  eq->excludes(le);
  if (with_ge) {
    auto* ge = cmd->add_option("--ge", o.ge, "Only models with at least K elements");
    ge->excludes(eq)->excludes(le);
  }
}

CardinalityFilter filter_of(const Options& o) {
  if (o.eq) return CardinalityFilter::eq(*o.eq);
  if (o.le) return CardinalityFilter::le(*o.le);
  if (o.ge) return CardinalityFilter::ge(*o.ge);
  return CardinalityFilter::all();
}

hornex::oracle::SizeFilter oracle_filter(const CardinalityFilter& f) {
  using K = CardinalityFilter::Kind;
  using S = hornex::oracle::SizeFilter;
  switch (f.kind) {
    case K::kLe: return S::kLe;
    case K::kGe: return S::kGe;
    case K::kEq: return S::kEq;
    case K::kAll: break;
  }
  return S::kAll;
}

// Policies that take a size need it from --eq/--le (or --k for rows).
std::optional<PrunePolicy> policy_of(const Options& o, std::optional<std::size_t> k) {
  if (!o.prune) return std::nullopt;
  const std::string& p = *o.prune;
  if (p == "none") return PrunePolicy::none();
  if (p == "weak") return PrunePolicy::weak();
  if (p == "feasible") return PrunePolicy::feasible();
  if (!k) throw UsageError("--prune " + p + " needs a size bound (--eq or --le)");
  if (p == "extra-le") return PrunePolicy::extra_le(*k);
  if (p == "noncover-eq") return PrunePolicy::extra_eq_noncover(*k);
  return PrunePolicy::extra_eq_ie(*k);
}

std::optional<std::size_t> bound_of(const CardinalityFilter& f) {
  if (f.kind == CardinalityFilter::Kind::kAll) return std::nullopt;
  return f.k;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw hornex::InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

hornex::Format format_of(const Options& o) {
  if (o.format == "dimacs") return hornex::Format::kDimacs;
  if (o.format == "native") return hornex::Format::kNative;
  auto ends_with = [&](std::string_view suffix) {
    return o.input.size() >= suffix.size() &&
           o.input.compare(o.input.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".cnf") || ends_with(".dimacs") ? hornex::Format::kDimacs
                                                   : hornex::Format::kNative;
}

HornInstance load(const Options& o) {
  hornex::LoadOptions lo;
  lo.merge_premises = !o.no_merge;
  lo.reorder_by_size = o.order == "size-asc";
  return hornex::load(read_input(o.input), format_of(o), lo);
}

std::uint64_t enumeration_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("HORNEX_ENUM_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("HORNEX_ENUM_CAP is not a number: ") + env);
    }
  }
  return hornex::kDefaultEnumerationCap;
}

json stats_json(const hornex::EngineStats& s) {
  return {{"impositions", s.impositions}, {"deletions", s.deletions},
          {"pruned", s.pruned},           {"max_stack_depth", s.max_stack_depth},
          {"s_max", s.s_max},             {"max_bubble_growth", s.max_bubble_growth}};
}

json filter_json(const CardinalityFilter& f) {
  json k = f.kind == CardinalityFilter::Kind::kAll ? json(nullptr) : json(f.k);
  return {{"filter", f.name()}, {"k", k}};
}

json counts_json(const std::vector<BigCount>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

std::string set_text(const hornex::VarSet& x) { return x.to_string(); }

// Subcommands. Each returns the process exit code.

int cmd_check(const Options& o) {
  bool sat = hornex::satisfiable(load(o));
  if (o.output == "json") {
    std::cout << json{{"satisfiable", sat}}.dump() << '\n';
  } else if (o.output == "csv") {
    std::cout << "satisfiable\n" << (sat ? "true" : "false") << '\n';
  } else {
    std::cout << (sat ? "SAT" : "UNSAT") << '\n';
  }
  return sat ? kOk : kUnsat;
}

void print_count(const Options& o, const BigCount& n, std::optional<std::uint64_t> rows, const CardinalityFilter& f,
                 const std::string& strategy, const hornex::EngineStats* stats) {
  if (o.output == "json") {
    json j = {{"N", to_decimal(n)}};
    if (rows) j["R"] = *rows;
    j.update(filter_json(f));
    j["strategy"] = strategy;
    if (stats) j["stats"] = stats_json(*stats);
    std::cout << j.dump() << '\n';
  } else if (o.output == "csv") {
    std::cout << "N," << (rows ? "R," : "") << "filter,k,strategy";
    if (stats) std::cout << ",impositions,deletions,pruned,max_stack_depth,s_max";
    std::cout << '\n' << to_decimal(n) << ',';
    if (rows) std::cout << *rows << ',';
    std::cout << f.name() << ',';
    if (f.kind != CardinalityFilter::Kind::kAll) std::cout << f.k;
    std::cout << ',' << strategy;
    if (stats) {
      std::cout << ',' << stats->impositions << ',' << stats->deletions << ',' << stats->pruned
                << ',' << stats->max_stack_depth << ',' << stats->s_max;
    }
    std::cout << '\n';
  } else {
    std::cout << "N = " << to_decimal(n) << '\n';
    if (rows) std::cout << "R = " << *rows << '\n';
    std::cout << "filter = " << f.name();
    if (f.kind != CardinalityFilter::Kind::kAll) std::cout << ' ' << f.k;
    std::cout << '\n' << "strategy = " << strategy << '\n';
    if (stats) {
      std::cout << "impositions = " << stats->impositions << '\n'
                << "deletions = " << stats->deletions << '\n'
                << "pruned = " << stats->pruned << '\n'
                << "max_stack_depth = " << stats->max_stack_depth << '\n'
                << "s_max = " << stats->s_max << '\n';
    }
  }
}

int cmd_count(const Options& o) {
  auto filter = filter_of(o);
  auto strategy = hornex::parse_strategy(o.strategy);
  if (!strategy) throw UsageError("unknown strategy " + o.strategy);
  hornex::CountOptions co;
  co.policy = policy_of(o, bound_of(filter));
  if (co.policy && *strategy != hornex::Strategy::kDirect) {
    throw UsageError("--prune only applies to --strategy direct");
  }
  auto inst = load(o);
  if (co.policy) {
    hornex::check_compatible(*co.policy, filter, inst.w());
    hornex::check_policy(inst, *co.policy);
  }
  auto report = hornex::count(inst, filter, *strategy, co);
  print_count(o, report.n, report.stats.final_rows, filter, report.strategy, &report.stats);
  return kOk;
}

PrunePolicy run_policy(const Options& o, const HornInstance& inst, const CardinalityFilter& filter,
                       std::optional<std::size_t> k) {
  auto given = policy_of(o, k);
  PrunePolicy policy = given.value_or(filter.kind == CardinalityFilter::Kind::kLe
                                          ? PrunePolicy::extra_le(filter.k)
                                          : PrunePolicy::feasible());
  hornex::check_compatible(policy, filter, inst.w());
  hornex::check_policy(inst, policy);
  return policy;
}

void print_models(const Options& o, std::size_t w, const std::function<void(
                                                       const hornex::EnumerateModels::Emit&)>& produce) {
  if (o.output == "json") {
    json models = json::array();
    produce([&](const hornex::VarSet& x) {
      json m = json::array();
      for (auto v : x) m.push_back(v);
      models.push_back(std::move(m));
    });
    std::cout << json{{"count", models.size()}, {"models", models}}.dump() << '\n';
  } else if (o.output == "csv") {
    for (std::size_t v = 1; v <= w; ++v) std::cout << (v > 1 ? "," : "") << 'x' << v;
    std::cout << '\n';
    produce([&](const hornex::VarSet& x) {
      std::string line;
      for (std::size_t v = 1; v <= w; ++v) {
        if (v > 1) line += ',';
        line += x.contains(static_cast<hornex::Var>(v)) ? '1' : '0';
      }
      std::cout << line << '\n';
    });
  } else {
    produce([&](const hornex::VarSet& x) { std::cout << set_text(x) << '\n'; });
  }
}

int cmd_enumerate(const Options& o) {
  auto filter = filter_of(o);
  auto cap = enumeration_cap(o);
  auto inst = load(o);
  auto policy = run_policy(o, inst, filter, bound_of(filter));
  print_models(o, inst.w(), [&](const hornex::EnumerateModels::Emit& emit) {
    hornex::enumerate_models(inst, policy, filter, o.limit, cap, emit);
  });
  return kOk;
}

int cmd_rows(const Options& o) {
  auto inst = load(o);
  auto policy = run_policy(o, inst, CardinalityFilter::all(), o.card_k);
  hornex::CollectRows sink;
  auto stats = hornex::run(inst, policy, sink);
  BigCount total = 0;
  BigCount total_k = 0;
  if (o.output == "json") {
    json rows = json::array();
    for (const auto& r : sink.rows()) {
      json row = {{"row", r.render()}, {"cardinality", to_decimal(hornex::cardinality(r))}};
      total += hornex::cardinality(r);
      if (o.card_k) {
        auto c = hornex::card_k(r, *o.card_k);
        row["card_k"] = to_decimal(c);
        total_k += c;
      }
      rows.push_back(std::move(row));
    }
    json j = {{"N", to_decimal(total)}, {"R", sink.rows().size()}};
    if (o.card_k) {
      j["k"] = *o.card_k;
      j["N_k"] = to_decimal(total_k);
    }
    j["policy"] = policy.name();
    j["rows"] = std::move(rows);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  const bool csv = o.output == "csv";
  if (csv) {
    std::cout << "index,row,cardinality" << (o.card_k ? ",card_k" : "") << '\n';
  }
  std::size_t i = 0;
  for (const auto& r : sink.rows()) {
    ++i;
    auto c = hornex::cardinality(r);
    total += c;
    std::optional<BigCount> ck;
    if (o.card_k) {
      ck = hornex::card_k(r, *o.card_k);
      total_k += *ck;
    }
    if (csv) {
      std::cout << i << ',' << r.render() << ',' << to_decimal(c);
      if (ck) std::cout << ',' << to_decimal(*ck);
    } else {
      std::cout << 'r' << i << "  " << r.render() << "  |r| = " << to_decimal(c);
      if (ck) std::cout << "  Card(r," << *o.card_k << ") = " << to_decimal(*ck);
    }
    std::cout << '\n';
  }
  if (!csv) {
    std::cout << "N = " << to_decimal(total);
    if (o.card_k) std::cout << ", N_" << *o.card_k << " = " << to_decimal(total_k);
    std::cout << ", R = " << sink.rows().size() << ", deletions = " << stats.deletions << '\n';
  }
  return kOk;
}

void print_faces(const Options& o, const std::vector<BigCount>& f) {
  BigCount n = 0;
  for (const auto& x : f) n += x;
  if (o.output == "json") {
    std::cout << json{{"N", to_decimal(n)}, {"f", counts_json(f)}}.dump() << '\n';
  } else if (o.output == "csv") {
    std::cout << "k,f_k\n";
    for (std::size_t k = 0; k < f.size(); ++k) std::cout << k << ',' << to_decimal(f[k]) << '\n';
  } else {
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::cout << "f_" << k << " = " << to_decimal(f[k]) << '\n';
    }
    std::cout << "N = " << to_decimal(n) << '\n';
  }
}

int cmd_faces(const Options& o) {
  print_faces(o, hornex::f_vector(load(o)));
  return kOk;
}

int cmd_oracle_check(const Options& o) {
  bool sat = hornex::oracle::count(load(o)) > 0;
  if (o.output == "json") {
    std::cout << json{{"satisfiable", sat}}.dump() << '\n';
  } else {
    std::cout << (sat ? "SAT" : "UNSAT") << '\n';
  }
  return sat ? kOk : kUnsat;
}

int cmd_oracle_count(const Options& o) {
  auto filter = filter_of(o);
  auto n = hornex::oracle::count(load(o), oracle_filter(filter), filter.k);
  print_count(o, n, std::nullopt, filter, "oracle", nullptr);
  return kOk;
}

int cmd_oracle_enumerate(const Options& o) {
  auto filter = filter_of(o);
  auto inst = load(o);
  auto all = hornex::oracle::models(inst);
  print_models(o, inst.w(), [&](const hornex::EnumerateModels::Emit& emit) {
    std::uint64_t n = 0;
    for (const auto& x : all) {
      if (o.limit && n >= *o.limit) break;
      if (!filter.admits(x.size())) continue;
      emit(x);
      ++n;
    }
  });
  return kOk;
}

int cmd_oracle_faces(const Options& o) {
  print_faces(o, hornex::oracle::f_vector(load(o)));
  return kOk;
}

// Empty clause in the input: no models, whatever the subcommand.
int report_unsat(const std::string& name, const Options& o) {
  bool is_check = name == "check";
  if (o.output == "json") {
    if (is_check) {
      std::cout << json{{"satisfiable", false}}.dump() << '\n';
    } else {
      std::cout << json{{"N", "0"}, {"R", 0}, {"satisfiable", false}}.dump() << '\n';
    }
  } else {
    std::cout << (is_check ? "UNSAT" : "UNSAT, N = 0") << '\n';
  }
  return is_check ? kUnsat : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and enumerate models of Horn formulas"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Exit 0 if satisfiable, 1 if not");
  add_common(check, o);

  auto* count = app.add_subcommand("count", "Count models");
  add_common(count, o);
  add_prune(count, o);
  add_filter(count, o, true);
  count->add_option("--strategy", o.strategy, "Counting strategy")
      ->check(CLI::IsMember({"direct", "difference", "noncover-eq", "ie-eq"}));

  auto* enumerate = app.add_subcommand("enumerate", "Print models, one per line");
  add_common(enumerate, o);
  add_prune(enumerate, o);
  add_filter(enumerate, o, false);
  enumerate->add_option("--limit", o.limit, "Stop after M models");
  enumerate->add_option("--cap", o.cap,
                        "Refuse to print more than this many models (env HORNEX_ENUM_CAP)");

  auto* rows = app.add_subcommand("rows", "Print the final rows");
  add_common(rows, o);
  add_prune(rows, o);
  rows->add_option("-k,--k", o.card_k, "Add a column with the number of K-element members");

  auto* faces = app.add_subcommand("faces", "Number of models of each size");
  add_common(faces, o);

  auto* oracle = app.add_subcommand("oracle", "Brute-force answers (w <= 24)");
  oracle->require_subcommand(1);
  auto* o_check = oracle->add_subcommand("check", "Satisfiability by brute force");
  add_common(o_check, o);
  auto* o_count = oracle->add_subcommand("count", "Count by brute force");
  add_common(o_count, o);
  add_filter(o_count, o, true);
  auto* o_enum = oracle->add_subcommand("enumerate", "Models in bitmask order");
  add_common(o_enum, o);
  add_filter(o_enum, o, false);
  o_enum->add_option("--limit", o.limit, "Stop after M models");
  auto* o_faces = oracle->add_subcommand("faces", "f-vector by brute force");
  add_common(o_faces, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const bool via_oracle = oracle->parsed();
  std::string name;
  for (auto* sub : (via_oracle ? oracle : &app)->get_subcommands()) name = sub->get_name();
  try {
    if (via_oracle) {
      if (name == "check") return cmd_oracle_check(o);
      if (name == "count") return cmd_oracle_count(o);
      if (name == "enumerate") return cmd_oracle_enumerate(o);
      return cmd_oracle_faces(o);
    }
    if (name == "check") return cmd_check(o);
    if (name == "count") return cmd_count(o);
    if (name == "enumerate") return cmd_enumerate(o);
    if (name == "rows") return cmd_rows(o);
    return cmd_faces(o);
  } catch (const hornex::UnsatisfiableInput& e) {
    std::cerr << "hornex: " << e.what() << '\n';
    return report_unsat(name, o);
  } catch (const hornex::InputError& e) {
    std::cerr << "hornex: " << e.what() << '\n';
    return kInput;
  } catch (const hornex::PolicyError& e) {
    std::cerr << "hornex: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "hornex: " << e.what() << '\n';
    return kUsage;
  } catch (const hornex::EnumerationCapExceeded& e) {
    std::cerr << "hornex: " << e.what() << "; raise --cap or pass --limit\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hornex: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
