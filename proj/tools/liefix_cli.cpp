// Command-line front end: outer-automorphism/centre table rows, classification
// of finite-order automorphisms per clique, and fixed-point reports.

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "liefix/report.hpp"

namespace {

using liefix::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIncompatible = 4;

struct Options {
  bool json = false;
  std::uint64_t seed = liefix::kDefaultSeed;
  std::string selector;
  std::optional<int> order;
  std::string clique;
  std::string outer;
  bool trivial = false;
  std::string sign;
  std::optional<int> zeta;
  int genus = 2;
  std::string alpha;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const Options& o, const Json& query, const Json& payload, const std::string& markdown,
          const std::vector<liefix::Warning>& warnings) {
  if (o.json) {
    std::cout << liefix::envelope(o.seed, query, payload, warnings).dump(2) << "\n";
  } else {
    std::cout << "# liefix " << liefix::kToolVersion << " (seed 0x" << std::hex << o.seed << std::dec << ")\n\n"
              << markdown << liefix::warnings_markdown(warnings);
  }
}

int run_table(const Options& o) {
  const Json query{{"command", "table"}, {"algebra", o.selector}};
  const auto row = liefix::table_row(o.selector);
  std::vector<liefix::Warning> warnings;
  if (row.out_order != row.out_order_table)
    warnings.push_back({"OUT_ORDER_MISMATCH", "computed |Out| = " + std::to_string(row.out_order) +
                                                  " differs from the table value " +
                                                  std::to_string(row.out_order_table)});
  emit(o, query, liefix::to_json(row), liefix::to_markdown(row), warnings);
  return kExitOk;
}

int run_classify(const Options& o) {
  if (!o.order) throw UsageError("classify needs --order");
  Json query{{"command", "classify"}, {"algebra", o.selector}, {"order", *o.order}};
  query["clique"] = o.clique.empty() ? Json(nullptr) : Json(o.clique);
  const auto spec = liefix::parse_selector(o.selector);
  std::optional<liefix::Permutation> only;
  if (!o.clique.empty()) {
    const auto g = liefix::build_algebra(spec);
    const auto* rs = g->root_system();
    only = liefix::parse_clique(*rs, o.clique);
  }
  if (*o.order < 1) throw UsageError("--order must be positive");
  const auto table = liefix::classification_table(spec, *o.order, o.seed, only);
  emit(o, query, liefix::to_json(table), liefix::to_markdown(table), table.warnings);
  return kExitOk;
}

std::optional<liefix::SurfaceCohomology::Class> parse_alpha(const std::string& text,
                                                            const liefix::FiniteAbelianGroup& z) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) return std::nullopt;
  std::vector<std::string> entries;
  auto split = [](const std::string& str, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(str);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
  };
  if (s.find(';') != std::string::npos) {
    entries = split(s, ';');
  } else if (s.find('(') != std::string::npos) {
    static const std::regex group(R"(\(([^()]*)\))");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), group); it != std::sregex_iterator(); ++it)
      entries.push_back((*it)[1]);
  } else if (z.factors.size() <= 1) {
    entries = split(s, ',');
  } else {
    throw UsageError("for a centre with several factors write alpha as (x,y);(x,y);... or (x,y),(x,y),...");
  }
  liefix::SurfaceCohomology::Class alpha;
  for (auto e : entries) {
    e.erase(std::remove(e.begin(), e.end(), '('), e.end());
    e.erase(std::remove(e.begin(), e.end(), ')'), e.end());
    liefix::FiniteAbelianGroup::Element x;
    if (!z.factors.empty())
      for (const auto& part : split(e, ',')) {
        try {
          x.push_back(std::stol(part));
        } catch (const std::exception&) {
          throw UsageError("alpha entry '" + e + "' is not a tuple of integers");
        }
      }
    else if (e != "0")
      throw UsageError("the centre is trivial; alpha entries must be 0");
    if (x.size() != z.factors.size())
      throw UsageError("alpha entry '" + e + "' needs " + std::to_string(z.factors.size()) + " coordinates");
    alpha.push_back(z.reduce(x));
  }
  return alpha;
}

int run_fixed(const Options& o) {
  const auto spec = liefix::parse_selector(o.selector);
  const auto g = liefix::build_algebra(spec);
  const auto& rs = *g->root_system();
  const int chosen = (!o.outer.empty()) + o.trivial + (!o.clique.empty());
  if (chosen > 1) throw UsageError("give at most one of --outer, --trivial and --clique");
  std::string clique_text = "id";
  if (!o.outer.empty()) clique_text = o.outer;
  if (!o.clique.empty()) clique_text = o.clique;
  const auto clique = liefix::parse_clique(rs, clique_text);
  const int clique_order = liefix::permutation_order(clique);

  if (!o.sign.empty() && o.zeta) throw UsageError("give either --sign or --zeta, not both");
  if (o.sign.empty() && !o.zeta) throw UsageError("fixed needs --sign plus|minus or --zeta k");
  liefix::FixedPointQuery q;
  q.spec = spec;
  q.clique = clique;
  q.genus = o.genus;
  q.seed = o.seed;
  if (!o.sign.empty()) {
    if (o.sign == "plus" || o.sign == "+")
      q.k = 0;
    else if (o.sign == "minus" || o.sign == "-")
      q.k = 1;
    else
      throw UsageError("--sign must be plus or minus");
    if (o.order && *o.order != 2) throw UsageError("--sign fixes the order to 2");
    q.order = 2;
  } else {
    q.k = *o.zeta;
    if (o.order)
      q.order = *o.order;
    else if (clique_order > 1)
      q.order = clique_order;
    else
      throw UsageError("--zeta with the trivial clique needs --order");
  }
  if (q.order > 2 * liefix::kMaxAutomorphismOrder) throw UsageError("--order is too large");
  const auto center = liefix::center_data(spec, clique);
  q.alpha = parse_alpha(o.alpha, center.group);

  Json query{{"command", "fixed"},      {"group", o.selector}, {"clique", liefix::clique_name(rs, clique)},
             {"order", q.order},        {"k", q.k},            {"genus", q.genus}};
  query["sign"] = o.sign.empty() ? Json(nullptr) : Json(q.k == 0 ? "plus" : "minus");
  query["alpha"] = o.alpha.empty() ? Json(nullptr) : Json(o.alpha);

  const auto report = liefix::fixed_point_report(q);
  emit(o, query, liefix::to_json(report), liefix::to_markdown(report), report.warnings);
  return kExitOk;
}

// Echo of the raw options, used when a query fails before it is normalized.
Json raw_query(const std::string& command, const Options& o) {
  Json q{{"command", command}, {"selector", o.selector}};
  q["order"] = o.order ? Json(*o.order) : Json(nullptr);
  q["clique"] = o.clique.empty() ? Json(nullptr) : Json(o.clique);
  if (command == "fixed") {
    q["outer"] = o.outer.empty() ? Json(nullptr) : Json(o.outer);
    q["trivial"] = o.trivial;
    q["sign"] = o.sign.empty() ? Json(nullptr) : Json(o.sign);
    q["zeta"] = o.zeta ? Json(*o.zeta) : Json(nullptr);
    q["genus"] = o.genus;
    q["alpha"] = o.alpha.empty() ? Json(nullptr) : Json(o.alpha);
  }
  return q;
}

int fail(const std::string& command, const Options& o, int code, const std::string& kind,
         const std::string& message) {
  std::cerr << "liefix: " << message << "\n";
  if (o.json) {
    const Json payload{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
    std::cout << liefix::envelope(o.seed, raw_query(command, o), payload, {}).dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-order automorphisms of simple Lie algebras and fixed points on Higgs moduli"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "emit the JSON envelope instead of Markdown");
  app.add_option("--seed", o.seed, "seed for the randomized rank steps");

  auto* table = app.add_subcommand("table", "outer automorphisms and centre of a simple algebra");
  table->add_option("algebra", o.selector, "Dynkin label or matrix algebra, e.g. D4, so8, sl5")->required();

  auto* classify = app.add_subcommand("classify", "classes of automorphisms of order dividing n, per clique");
  classify->add_option("algebra", o.selector, "supported algebra, e.g. sl4, so8, sp6, g2")->required();
  classify->add_option("--order,-n", o.order, "order n")->required();
  classify->add_option("--clique", o.clique, "restrict to one clique (id, flip, rot, rot2, swap34, ...)");

  auto* fixed = app.add_subcommand("fixed", "fixed points of iota(a, alpha, sign or zeta_k)");
  fixed->add_option("group", o.selector, "simply connected group, e.g. SL4, Spin8, Sp6, G2")->required();
  fixed->add_option("--outer", o.outer, "outer clique element: -1 or outer for the unique one, or a name");
  fixed->add_flag("--trivial", o.trivial, "trivial clique");
  fixed->add_option("--clique", o.clique, "clique by name (id, flip, rot, rot2, swap34, ...)");
  fixed->add_option("--sign", o.sign, "plus or minus (order 2)");
  fixed->add_option("--zeta", o.zeta, "k for zeta_k = exp(2 pi i k / n)");
  fixed->add_option("--order,-n", o.order, "order n (defaults to the clique order with --zeta)");
  fixed->add_option("--genus,-g", o.genus, "genus of the curve")->check(CLI::NonNegativeNumber);
  fixed->add_option("--alpha", o.alpha, "class in H^1(X,Z) as 2g centre elements, e.g. 1,0,0,1");

  for (auto* sub : {table, classify, fixed}) {
    sub->add_flag("--json", o.json, "emit the JSON envelope instead of Markdown");
    sub->add_option("--seed", o.seed, "seed for the randomized rank steps");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = table->parsed() ? "table" : classify->parsed() ? "classify" : "fixed";
  try {
    if (table->parsed()) return run_table(o);
    if (classify->parsed()) return run_classify(o);
    return run_fixed(o);
  } catch (const liefix::SearchGuardError& e) {
    return fail(command, o, kExitGuard, "search_guard", e.what());
  } catch (const liefix::IncompatibleQueryError& e) {
    return fail(command, o, kExitIncompatible, "incompatible", e.what());
  } catch (const liefix::UnsupportedAlgebraError& e) {
    return fail(command, o, kExitUsage, "unsupported", e.what());
  } catch (const liefix::CyclotomicOrderError& e) {
    return fail(command, o, kExitUsage, "unsupported", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(command, o, kExitUsage, "usage", e.what());
  }
}
