#pragma once

// Command-line front end. Every subcommand is a thin shell over the library.
// Exit codes: 0 success / valid / found, 1 invalid / not found / domain
// error, 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "e5proof/bracelets.hpp"
#include "e5proof/cosetenum.hpp"
#include "e5proof/engel.hpp"
#include "e5proof/proofword.hpp"
#include "e5proof/search.hpp"
#include "e5proof/word.hpp"

namespace e5proof::cli {

/// "-" reads standard input.
inline std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// One word per line; blank lines and '#' comments are skipped.
inline std::vector<Word> read_word_list(const std::string& path, Alphabet alphabet) {
  std::vector<Word> out;
  std::istringstream lines(read_text(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_word(line, alphabet));
    } catch (const ParseError& e) {
      throw std::runtime_error(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<Word> read_bases(const std::string& path, Alphabet alphabet) {
  std::vector<Word> bases;
  for (const Word& w : read_word_list(path, alphabet)) {
    const Word core = cyclic_reduce(w).core;
    if (core.empty()) throw std::runtime_error("base word " + to_string(w) + " is trivial");
    bases.push_back(core);
  }
  return bases;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof words for trivial words in groups presented by power relators"};
  app.name("e5proof");
  app.require_subcommand(1);

  // engel
  int engel_n = 5;
  bool engel_cyclic = false;
  auto* engel = app.add_subcommand("engel", "Print the freely reduced Engel word E_n");
  engel->add_option("--n", engel_n, "Engel index")->required()->check(CLI::PositiveNumber);
  engel->add_flag("--cyclic", engel_cyclic, "Print the cyclically reduced core instead");

  // bracelets
  int br_rank = 2;
  std::size_t br_len = 1;
  bool br_lyndon = false, br_count = false, br_upto = false;
  auto* bracelets = app.add_subcommand("bracelets", "List reduced bracelets or Lyndon words");
  bracelets->add_option("--rank", br_rank, "Number of generators")->check(CLI::Range(1, 26));
  bracelets->add_option("--len", br_len, "Word length")->required()->check(CLI::PositiveNumber);
  bracelets->add_flag("--lyndon", br_lyndon, "Only words that are not proper powers");
  bracelets->add_flag("--count", br_count, "Print the number of classes only");
  bracelets->add_flag("--upto", br_upto, "All lengths from 1 to --len");

  // shared proof options
  std::string proof_path, target_path, bases_path, relators_path;
  int target_engel = 0, exponent = 0, rank = 2;
  std::size_t max_base_len = 0;

  auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--rank", rank, "Number of generators")->check(CLI::Range(1, 26));
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check a proof word against a target");
  verify_cmd->add_option("--proof", proof_path, "Proof word file")->required();
  auto* v_target = verify_cmd->add_option("--target", target_path, "Target word file");
  auto* v_engel = verify_cmd->add_option("--engel", target_engel, "Use E_n as the target")
                      ->check(CLI::PositiveNumber);
  v_target->excludes(v_engel);
  verify_cmd->add_option("--exponent", exponent, "Relator exponent")->required()->check(CLI::PositiveNumber);
  auto* v_maxlen = verify_cmd->add_option("--max-base-len", max_base_len,
                                          "Allow bases that are reduced bracelets up to this length")
                       ->check(CLI::PositiveNumber);
  auto* v_bases = verify_cmd->add_option("--bases", bases_path, "Allowed base words, one per line");
  v_maxlen->excludes(v_bases);
  add_rank(verify_cmd);

  std::optional<int> stats_exponent;
  bool stats_presentation = false;
  auto* stats_cmd = app.add_subcommand("stats", "Print proof word statistics");
  stats_cmd->add_option("--proof", proof_path, "Proof word file")->required();
  stats_cmd->add_option("--exponent", stats_exponent, "Relator exponent (inferred if omitted)")
      ->check(CLI::PositiveNumber);
  stats_cmd->add_flag("--presentation", stats_presentation,
                      "Print the distinct relators, one per line, instead");
  add_rank(stats_cmd);

  auto* fold_cmd = app.add_subcommand("fold", "Fold bordering inverse pairs into relators");
  fold_cmd->add_option("--proof", proof_path, "Proof word file")->required();
  add_rank(fold_cmd);

  SearchConfig config;
  std::size_t lyndon_upto = 0;
  std::optional<std::size_t> subset;
  auto* search_cmd = app.add_subcommand("search", "Search for a proof word");
  auto* s_target = search_cmd->add_option("--target", target_path, "Target word file");
  auto* s_engel = search_cmd->add_option("--engel", target_engel, "Use E_n as the target")
                      ->check(CLI::PositiveNumber);
  s_target->excludes(s_engel);
  search_cmd->add_option("--exponent", exponent, "Relator exponent")->required()->check(CLI::PositiveNumber);
  auto* s_bases = search_cmd->add_option("--bases", bases_path, "Base words, one per line");
  auto* s_lyndon = search_cmd->add_option("--lyndon-upto", lyndon_upto,
                                          "Use all Lyndon words up to this length as bases")
                       ->check(CLI::PositiveNumber);
  s_bases->excludes(s_lyndon);
  search_cmd->add_option("--beam", config.beam_width, "Beam width")->check(CLI::PositiveNumber);
  search_cmd->add_option("--restarts", config.restarts, "Additional attempts");
  search_cmd->add_option("--seed", config.seed, "Random seed");
  search_cmd->add_option("--max-moves", config.max_moves, "Relator appends per attempt")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-length", config.max_word_length, "Longest intermediate word (0: 4|T|)");
  search_cmd->add_option("--max-growth", config.max_growth, "Letters one append may add (0: half must cancel)");
  search_cmd->add_option("--subset", subset, "Random base words per attempt")->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", config.threads, "Parallel attempts")->check(CLI::PositiveNumber);
  search_cmd->add_option("--time-limit", config.time_limit_seconds, "Seconds (0: none)");
  add_rank(search_cmd);

  std::size_t max_cosets = 2'000'000;
  auto* order_cmd = app.add_subcommand("order", "Order of a finitely presented group");
  order_cmd->add_option("--relators", relators_path, "Relator file, one word per line")->required();
  order_cmd->add_option("--max-cosets", max_cosets, "Coset table limit")->check(CLI::PositiveNumber);
  add_rank(order_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n";
    return 2;
  };

  try {
    const Alphabet alphabet{rank};

    auto target_word = [&]() -> std::optional<Word> {
      if (target_engel > 0) return engel_word(target_engel);
      if (!target_path.empty()) {
        auto words = read_word_list(target_path, alphabet);
        if (words.size() != 1) throw std::runtime_error("target file must hold exactly one word");
        return free_reduce(words.front());
      }
      return std::nullopt;
    };

    if (engel->parsed()) {
      const Word e = engel_word(engel_n);
      out << to_string(engel_cyclic ? cyclic_reduce(e).core : e) << "\n";
      return 0;
    }

    if (bracelets->parsed()) {
      const Alphabet a{br_rank};
      const auto classes = br_upto ? enumerate_up_to(a, br_len, br_lyndon)
                                   : (br_lyndon ? enumerate_lyndon(a, br_len)
                                                : enumerate_reduced_bracelets(a, br_len));
      if (br_count) {
        out << classes.size() << "\n";
      } else {
        for (const auto& c : classes) out << to_string(c.canonical) << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto target = target_word();
      if (!target) return usage("verify needs --target or --engel");
      const ProofWord proof = parse_proof(read_text(proof_path), alphabet);
      VerifyReport report;
      if (max_base_len > 0) {
        report = verify(proof, *target,
                        symmetrize(canonical_words(enumerate_up_to(alphabet, max_base_len, false)), exponent));
      } else if (!bases_path.empty()) {
        report = verify(proof, *target, symmetrize(read_bases(bases_path, alphabet), exponent));
      } else {
        report = verify(proof, *target, exponent);
      }
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      out << "relators " << proof.relator_count() << "\n";
      out << "flattens to target " << yn(report.flattens_to_target) << "\n";
      out << "every segment is a relator " << yn(report.every_segment_is_relator) << "\n";
      out << "excision trivial " << yn(report.excision_trivial) << "\n";
      out << (report.valid() ? "VALID" : "INVALID") << "\n";
      for (const auto& d : report.diagnostics) err << d << "\n";
      return report.valid() ? 0 : 1;
    }

    if (stats_cmd->parsed()) {
      const ProofWord proof = parse_proof(read_text(proof_path), alphabet);
      const int e = stats_exponent ? *stats_exponent : infer_exponent(proof);
      if (stats_presentation) {
        for (const Word& r : distinct_presentation(proof, e)) out << to_string(r) << "\n";
      } else {
        out << format_stats(stats(proof, e));
      }
      return 0;
    }

    if (fold_cmd->parsed()) {
      out << to_string(fold(parse_proof(read_text(proof_path), alphabet))) << "\n";
      return 0;
    }

    if (search_cmd->parsed()) {
      Word core, outer;
      if (target_engel > 0) {
        auto t = engel_target(target_engel);
        core = std::move(t.core);
        outer = std::move(t.outer_conjugator);
      } else if (auto t = target_word()) {
        auto cr = cyclic_reduce(*t);
        core = std::move(cr.core);
        outer = std::move(cr.conjugator);
      } else {
        return usage("search needs --target or --engel");
      }
      std::vector<Word> bases;
      if (lyndon_upto > 0)
        bases = canonical_words(enumerate_up_to(alphabet, lyndon_upto, true));
      else if (!bases_path.empty())
        bases = read_bases(bases_path, alphabet);
      else
        return usage("search needs --bases or --lyndon-upto");
      config.base_subset_size = subset;
      const RelatorSet relators = symmetrize(bases, exponent);
      const SearchResult result = search(core, relators, config);

      nlohmann::json summary = {{"found", result.found()},
                                {"moves_tried", result.stats.moves_tried},
                                {"states_visited", result.stats.states_visited},
                                {"attempts", result.stats.attempts},
                                {"elapsed_seconds", result.stats.elapsed_seconds},
                                {"base_words", relators.bases().size()}};
      if (result.stats.winning_attempt) summary["winning_attempt"] = *result.stats.winning_attempt;
      if (!result.found()) {
        out << "NOT FOUND\n";
        err << summary.dump() << "\n";
        return 1;
      }
      const ProofWord proof = reconstruct(*result.log, core, outer);
      const ProofStats s = stats(proof, exponent);
      summary["relators"] = s.relator_count;
      summary["overall_length"] = s.overall_length;
      out << to_string(proof) << "\n";
      err << summary.dump() << "\n";
      return 0;
    }

    if (order_cmd->parsed()) {
      Presentation p{alphabet, {}};
      for (const Word& w : read_word_list(relators_path, alphabet)) p.relators.push_back(free_reduce(w));
      const auto result = enumerate_cosets(p, max_cosets);
      nlohmann::json summary = {{"total_defined", result.stats.total_defined},
                                {"max_active", result.stats.max_active},
                                {"lookaheads", result.stats.lookaheads}};
      err << summary.dump() << "\n";
      if (!result.order) {
        out << "OVERFLOW\n";
        return 1;
      }
      out << *result.order << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace e5proof::cli
