// Command-line front end: analysis, construction, verification and
// enumeration for partition-preserving transformation monoids and their
// idempotent-generated submonoids.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or parse
// error, 3 budget exhausted.

#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptmon/combinatorics.hpp"
#include "ptmon/element_set.hpp"
#include "ptmon/error.hpp"
#include "ptmon/generators.hpp"
#include "ptmon/maps.hpp"
#include "ptmon/oracle.hpp"
#include "ptmon/partition.hpp"
#include "ptmon/serialization.hpp"
#include "ptmon/transformation.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--blocks: '" + token + "' is not an integer");
    }
    if (pos != token.size() || value <= 0) {
      throw std::invalid_argument("--blocks: '" + token
                                  + "' is not a positive integer");
    }
    out.push_back(value);
  }
  if (out.empty()) {
    throw std::invalid_argument("--blocks: at least one block size required");
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(values[i]);
  }
  return out;
}

json profile_json(const ptmon::Partition& p) {
  ptmon::Profile prof = ptmon::profile(p);
  json out;
  std::vector<int> mu(prof.mu.begin() + 1, prof.mu.end());
  std::vector<int> nu(prof.nu.begin() + 1, prof.nu.end());
  out["mu"] = mu;
  out["nu"] = nu;
  return out;
}

json report_json(const ptmon::Partition& p) {
  json out;
  out["partition"] = {{"block_sizes", p.sizes()},
                      {"m", p.num_blocks()},
                      {"n", p.degree()}};
  out["profile"] = profile_json(p);
  out["counts"] = {{"t_size", ptmon::total_count(p).to_decimal()},
                   {"idempotents", ptmon::idempotent_count(p).to_decimal()}};
  ptmon::RankResult rr = ptmon::rank_and_idrank(p);
  out["rank"] = rr.rank.to_decimal();
  out["idrank"] = rr.idrank.to_decimal();
  out["rho"] = rr.rho.to_decimal();
  out["mu1_special"] = rr.special_mu1_eq_2;
  out["migs_count"] = ptmon::migs_count(p).to_decimal();
  return out;
}

int cmd_analyze(const ptmon::Partition& p, const std::string& format) {
  json report = report_json(p);
  if (format == "tsv") {
    std::cout << "blocks\t" << join_ints(p.sizes()) << '\n'
              << "m\t" << p.num_blocks() << '\n'
              << "n\t" << p.degree() << '\n'
              << "mu\t" << join_ints(report["profile"]["mu"].get<std::vector<int>>()) << '\n'
              << "nu\t" << join_ints(report["profile"]["nu"].get<std::vector<int>>()) << '\n'
              << "t_size\t" << report["counts"]["t_size"].get<std::string>() << '\n'
              << "idempotents\t" << report["counts"]["idempotents"].get<std::string>() << '\n'
              << "rank\t" << report["rank"].get<std::string>() << '\n'
              << "idrank\t" << report["idrank"].get<std::string>() << '\n'
              << "rho\t" << report["rho"].get<std::string>() << '\n'
              << "mu1_special\t" << (report["mu1_special"].get<bool>() ? 1 : 0) << '\n'
              << "migs_count\t" << report["migs_count"].get<std::string>() << '\n';
  } else {
    std::cout << report.dump(2) << '\n';
  }
  return 0;
}

int cmd_generators(const ptmon::Partition& p, const std::string& kind) {
  ptmon::ElementSet gens(p);
  if (kind == "full") {
    gens = ptmon::full_idempotent_generators(p);
  } else if (kind == "minimal") {
    gens = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
  } else {
    gens = ptmon::rank_generating_set(p);
  }
  json out;
  out["partition"] = p.sizes();
  out["kind"] = kind;
  out["size"] = gens.size();
  int idempotent_count = 0;
  json elements = json::array();
  for (const auto& t : gens) {
    json e = ptmon::transformation_to_json(t);
    bool idem = ptmon::is_idempotent(t);
    e["idempotent"] = idem;
    idempotent_count += idem ? 1 : 0;
    elements.push_back(std::move(e));
  }
  out["idempotent_elements"] = idempotent_count;
  out["elements"] = std::move(elements);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_enumerate(const ptmon::Partition& p, const std::string& what,
                  const std::string& mode, const ptmon::SearchBudget& budget,
                  int jobs) {
  if (what == "idempotents") {
    ptmon::write_json_lines(std::cout, ptmon::enumerate_idempotents(p, budget));
    return 0;
  }
  ptmon::MigsResult migs
      = ptmon::exhaustive_migs(p, budget, mode == "structured", jobs);
  for (const auto& set : migs.sets) {
    json line;
    line["size"] = set.size();
    line["mode"] = mode;
    line["assumes_classification"] = migs.assumes_classification;
    line["elements"] = ptmon::element_set_to_json(set);
    std::cout << line.dump() << '\n';
  }
  return 0;
}

int cmd_factorize(const ptmon::Partition& p, const std::string& element_text) {
  json parsed;
  try {
    parsed = json::parse(element_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("element JSON: ") + e.what());
  }
  ptmon::PartTransformation element = ptmon::transformation_from_json(parsed);
  if (!(element.partition() == p)) {
    throw std::invalid_argument("element JSON does not match --blocks");
  }
  ptmon::GeneratorWord word = ptmon::factorize_idempotent(element);
  ptmon::ElementSet gens = ptmon::full_idempotent_generators(p);
  ptmon::PartTransformation check = ptmon::evaluate_word(gens, word);
  json out;
  out["input"] = ptmon::transformation_to_json(element);
  out["word"] = word.letters;
  json letters = json::array();
  for (int index : word.letters) {
    letters.push_back(ptmon::transformation_to_json(gens[index]));
  }
  out["letters"] = std::move(letters);
  out["generators_size"] = gens.size();
  out["evaluates_to_input"] = (check == element);
  std::cout << out.dump(2) << '\n';
  return (check == element) ? 0 : 1;
}

struct VerifyContext {
  ptmon::Partition p;
  ptmon::SearchBudget budget;
  int jobs = 1;
  std::uint64_t seed = 0;
  json checks = json::array();
  bool all_pass = true;

  void record(const std::string& name, bool pass, const std::string& detail) {
    json check;
    check["name"] = name;
    check["pass"] = pass;
    if (!detail.empty()) {
      check["detail"] = detail;
    }
    checks.push_back(std::move(check));
    all_pass = all_pass && pass;
  }
};

void verify_fast(VerifyContext& ctx) {
  const ptmon::Partition& p = ctx.p;
  ptmon::ElementSet idempotents = ptmon::enumerate_idempotents(p, ctx.budget);
  ptmon::BigUint counted = ptmon::idempotent_count(p);
  ctx.record("idempotent_count_matches_enumeration",
             counted == ptmon::BigUint(static_cast<std::uint64_t>(idempotents.size())),
             "formula " + counted.to_decimal() + ", enumerated "
                 + std::to_string(idempotents.size()));

  ptmon::ElementSet s = ptmon::closure(idempotents, ctx.budget);
  ptmon::ElementSet full = ptmon::full_idempotent_generators(p);
  ctx.record("full_generators_generate",
             ptmon::generates(full, s, ctx.budget),
             "closure of " + std::to_string(full.size()) + " generators");

  ptmon::RankResult rr = ptmon::rank_and_idrank(p);
  ptmon::ElementSet minimal
      = ptmon::minimal_generating_set(p, ptmon::default_spec(p));
  bool minimal_idem = true;
  for (const auto& t : minimal) {
    minimal_idem = minimal_idem && ptmon::is_idempotent(t);
  }
  ctx.record("minimal_set_size_is_idrank",
             ptmon::BigUint(static_cast<std::uint64_t>(minimal.size())) == rr.idrank
                 && minimal_idem,
             "size " + std::to_string(minimal.size()) + ", idrank "
                 + rr.idrank.to_decimal());
  ctx.record("minimal_set_generates", ptmon::generates(minimal, s, ctx.budget), "");

  ptmon::ElementSet rank_set = ptmon::rank_generating_set(p);
  int non_idempotent = 0;
  for (const auto& t : rank_set) {
    non_idempotent += ptmon::is_idempotent(t) ? 0 : 1;
  }
  ctx.record("rank_set_size_is_rank",
             ptmon::BigUint(static_cast<std::uint64_t>(rank_set.size())) == rr.rank
                 && non_idempotent == (rr.special_mu1_eq_2 ? 1 : 0),
             "size " + std::to_string(rank_set.size()) + ", non-idempotents "
                 + std::to_string(non_idempotent));
  ctx.record("rank_set_generates", ptmon::generates(rank_set, s, ctx.budget), "");

  bool factorizations_ok = true;
  ptmon::ElementSet gens = ptmon::full_idempotent_generators(p);
  for (const auto& e : idempotents) {
    ptmon::GeneratorWord word = ptmon::factorize_idempotent(e);
    if (!(ptmon::evaluate_word(gens, word) == e)) {
      factorizations_ok = false;
      break;
    }
  }
  ctx.record("factorization_round_trip", factorizations_ok,
             std::to_string(idempotents.size()) + " idempotents");

  bool overline_ok = true;
  for (const auto& f : s) {
    const auto& fbar = f.block_images();
    bool id = fbar == ptmon::identity_map(p.num_blocks());
    if (!id && ptmon::is_permutation(fbar)) {
      overline_ok = false;
      break;
    }
    if (id) {
      for (int i = 0; i < p.num_blocks() && overline_ok; ++i) {
        const auto& component = f.block_map(i);
        if (component != ptmon::identity_map(p.size(i))
            && ptmon::is_permutation(component)) {
          overline_ok = false;
        }
      }
      if (!overline_ok) {
        break;
      }
    }
  }
  ctx.record("induced_block_maps_non_invertible", overline_ok,
             std::to_string(s.size()) + " elements");

  if (p.uniform()) {
    bool membership_ok = true;
    ptmon::for_each_element(
        p,
        [&](const ptmon::PartTransformation& f) {
          if (ptmon::uniform_membership(f) != s.contains(f)) {
            membership_ok = false;
          }
        },
        ctx.budget.max_closure_elements);
    ctx.record("uniform_membership_agrees_with_closure", membership_ok, "");
  }
}

void verify_exhaustive(VerifyContext& ctx) {
  const ptmon::Partition& p = ctx.p;
  ptmon::RankResult rr = ptmon::rank_and_idrank(p);
  int rank = ptmon::exhaustive_rank(p, false, ctx.budget, ctx.jobs);
  ctx.record("exhaustive_rank_unrestricted",
             ptmon::BigUint(static_cast<std::uint64_t>(rank)) == rr.rank,
             "search " + std::to_string(rank) + ", formula " + rr.rank.to_decimal());
  int idrank = ptmon::exhaustive_rank(p, true, ctx.budget, ctx.jobs);
  ctx.record("exhaustive_rank_idempotents",
             ptmon::BigUint(static_cast<std::uint64_t>(idrank)) == rr.idrank,
             "search " + std::to_string(idrank) + ", formula " + rr.idrank.to_decimal());

  ptmon::MigsResult migs = ptmon::exhaustive_migs(p, ctx.budget, false, ctx.jobs);
  ptmon::BigUint expected = ptmon::migs_count(p);
  ctx.record("exhaustive_migs_count",
             expected == ptmon::BigUint(migs.sets.size()),
             "search " + std::to_string(migs.sets.size()) + ", formula "
                 + expected.to_decimal());

  ptmon::ElementSet idempotents = ptmon::enumerate_idempotents(p, ctx.budget);
  ptmon::ElementSet s = ptmon::closure(idempotents, ctx.budget);
  std::mt19937_64 rng(ctx.seed);
  std::vector<ptmon::PartTransformation> pool(idempotents.begin(),
                                              idempotents.end());
  bool subsets_ok = true;
  int found = 0;
  int attempts = 0;
  while (found < 5 && attempts < 5000) {
    ++attempts;
    std::vector<ptmon::PartTransformation> sample;
    for (const auto& t : pool) {
      if (rng() % 2 == 0) {
        sample.push_back(t);
      }
    }
    ptmon::ElementSet candidate(p, std::move(sample));
    if (!ptmon::generates(candidate, s, ctx.budget)) {
      continue;
    }
    ++found;
    if (!ptmon::contains_minimal_subset(candidate, ctx.budget, ctx.jobs)) {
      subsets_ok = false;
      break;
    }
  }
  ctx.record("random_generating_sets_contain_minimal", subsets_ok && found == 5,
             std::to_string(found) + " random sets checked");
}

int cmd_verify(const ptmon::Partition& p, const std::string& level,
               const ptmon::SearchBudget& budget, int jobs,
               std::uint64_t seed) {
  VerifyContext ctx{p, budget, jobs, seed};
  verify_fast(ctx);
  if (level == "exhaustive") {
    verify_exhaustive(ctx);
  }
  json out;
  out["partition"] = p.sizes();
  out["level"] = level;
  out["checks"] = ctx.checks;
  out["all_pass"] = ctx.all_pass;
  std::cout << out.dump(2) << '\n';
  return ctx.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition-preserving transformation monoids: idempotents, "
               "rank, and minimal idempotent generating sets"};
  app.require_subcommand(1);

  std::string blocks_text;
  std::string format = "json";
  std::string kind = "minimal";
  std::string what = "idempotents";
  std::string mode = "raw";
  std::string level = "fast";
  std::string element_text;
  std::uint64_t budget_closure = ptmon::SearchBudget{}.max_closure_elements;
  std::uint64_t budget_subsets = ptmon::SearchBudget{}.max_subsets;
  int jobs = 1;
  std::uint64_t seed = 0;

  auto add_blocks = [&blocks_text](CLI::App* cmd) {
    cmd->add_option("--blocks", blocks_text,
                    "Comma-separated block sizes, e.g. 2,1")
        ->required();
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Profile, counts, rank, idempotent rank and the number of "
                 "minimal idempotent generating sets");
  add_blocks(analyze);
  analyze->add_option("--format", format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* generators = app.add_subcommand(
      "generators", "Emit a generating set of the idempotent-generated "
                    "submonoid");
  add_blocks(generators);
  generators->add_option("--kind", kind, "full, minimal or rank")
      ->check(CLI::IsMember({"full", "minimal", "rank"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the formulas and constructions against "
                "brute-force search");
  add_blocks(verify);
  verify->add_option("--level", level, "fast or exhaustive")
      ->check(CLI::IsMember({"fast", "exhaustive"}));
  verify->add_option("--budget-closure", budget_closure,
                     "Maximum closure size");
  verify->add_option("--budget-subsets", budget_subsets,
                     "Maximum subsets examined");
  verify->add_option("--jobs", jobs, "Worker threads for subset searches");
  verify->add_option("--seed", seed, "Seed for the randomized checks");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Stream idempotents or minimal idempotent generating "
                   "sets as JSON lines");
  add_blocks(enumerate);
  enumerate->add_option("--what", what, "idempotents or migs")
      ->check(CLI::IsMember({"idempotents", "migs"}));
  enumerate->add_option("--mode", mode, "raw or structured (migs only)")
      ->check(CLI::IsMember({"raw", "structured"}));
  enumerate->add_option("--budget-closure", budget_closure,
                        "Maximum closure size");
  enumerate->add_option("--budget-subsets", budget_subsets,
                        "Maximum subsets examined");
  enumerate->add_option("--jobs", jobs, "Worker threads for subset searches");

  CLI::App* factorize = app.add_subcommand(
      "factorize", "Express an idempotent as a word over the full "
                   "idempotent generating set");
  add_blocks(factorize);
  factorize->add_option("--element", element_text,
                        "Transformation JSON (reads stdin when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ptmon::Partition p{parse_blocks(blocks_text)};
    ptmon::SearchBudget budget;
    budget.max_closure_elements = budget_closure;
    budget.max_subsets = budget_subsets;
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(p, format);
    }
    if (app.got_subcommand(generators)) {
      return cmd_generators(p, kind);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(p, level, budget, jobs, seed);
    }
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(p, what, mode, budget, jobs);
    }
    if (app.got_subcommand(factorize)) {
      if (element_text.empty()) {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        element_text = buffer.str();
      }
      return cmd_factorize(p, element_text);
    }
    return 2;
  } catch (const ptmon::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
