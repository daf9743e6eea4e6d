#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bcomb/graphs.hpp"
#include "bcomb/insertion.hpp"
#include "bcomb/json_io.hpp"
#include "bcomb/little.hpp"
#include "bcomb/permutations.hpp"
#include "bcomb/symmetric.hpp"
#include "bcomb/tableaux.hpp"
#include "bcomb/verify.hpp"

using namespace bcomb;

namespace {

int default_jobs() {
  if (const char* env = std::getenv("BWORDS_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0 && v <= 256)
      return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int parse_group(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'B' || digits[0] == 'b'))
    digits = digits.substr(1);
  try {
    size_t used = 0;
    int v = std::stoi(digits, &used);
    if (used == digits.size() && v >= 0 && v <= 12) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("invalid group \"" + text +
                              "\": expected B<rank> with rank 0..12");
}

StrictPartition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      size_t used = 0;
      parts.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid partition \"" + text +
                                  "\": expected comma-separated parts");
    }
  }
  return StrictPartition(parts);
}

// French notation: row 1 at the bottom, shifted rows indented one cell per
// level.
std::string render_rows(const std::vector<std::vector<int>>& rows,
                        bool shifted) {
  if (rows.empty()) return "(empty)\n";
  size_t width = 1;
  for (const auto& row : rows)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (size_t r = rows.size(); r >= 1; --r) {
    std::string line;
    if (shifted) line.assign((r - 1) * (width + 1), ' ');
    const auto& row = rows[r - 1];
    for (size_t c = 0; c < row.size(); ++c) {
      std::string cell = std::to_string(row[c]);
      if (c > 0) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    out << line << '\n';
  }
  return out.str();
}

int run_words(const std::string& window, const std::string& format) {
  SignedPermutation w = parse_signed_permutation(window);
  std::vector<Word> words = reduced_words(w);
  if (format == "json") {
    nlohmann::json j{{"count", words.size()}, {"words", words}};
    std::cout << j.dump() << '\n';
  } else {
    for (const Word& a : words) std::cout << format_word(a) << '\n';
    std::cout << "count " << words.size() << '\n';
  }
  return 0;
}

int run_bump(const std::string& word_text, bool canonical, int i, int j,
             bool down, const std::string& format) {
  Word a = parse_word(word_text);
  BumpTrace trace;
  BumpImage image;
  if (canonical) {
    TransitionData td = transition_data(evaluate(a));
    trace = little_bump(a, td.r, td.s, -1);
    image = bump_image_target(a, td.r, td.s, -1);
  } else {
    int delta = down ? -1 : 1;
    trace = little_bump(a, i, j, delta);
    image = bump_image_target(a, i, j, delta);
  }
  if (format == "json") {
    nlohmann::json out = trace;
    out["crossing"] = nlohmann::json{{"i", image.i}, {"j", image.j}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "start (" << trace.start.i << ',' << trace.start.j << ','
              << (trace.start.delta > 0 ? '+' : '-') << ")\n";
    for (const auto& [pos, change] : trace.pushes)
      std::cout << "push " << pos << ' ' << (change > 0 ? '+' : '-') << '\n';
    std::cout << "result " << format_word(trace.result) << '\n';
    std::cout << "crossing (" << image.i << ',' << image.j << ")\n";
  }
  return 0;
}

int run_insert(const std::string& word_text, const std::string& type,
               const std::string& format) {
  Word a = parse_word(word_text);
  InsertionPair pq = type == "a" ? eg_insert(a) : kraskiewicz_insert(a);
  if (format == "json") {
    nlohmann::json j = pq;
    std::cout << j.dump() << '\n';
  } else {
    bool shifted = type == "b";
    std::cout << "P:\n" << render_rows(pq.p, shifted);
    std::cout << "Q:\n" << render_rows(pq.q, shifted);
  }
  return 0;
}

int run_graph(const std::string& ck_a, const std::string& ck_b,
              const std::string& sg, const std::string& format) {
  SignedColoredGraph g;
  if (!ck_a.empty())
    g = ck_graph_a(parse_signed_permutation(ck_a));
  else if (!ck_b.empty())
    g = ck_graph_b(parse_signed_permutation(ck_b));
  else
    g = sdeg_standard(parse_partition(sg));
  if (format == "json") {
    nlohmann::json j = g;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_dot(g);
  }
  return 0;
}

int run_expand(const std::string& window, const std::string& what, int vars,
               const std::string& format) {
  SignedPermutation w = parse_signed_permutation(window);
  if (what == "transition") {
    std::map<SignedPermutation, long long> leaves = transition_expand(w);
    if (format == "json") {
      std::cout << expansion_json(leaves).dump() << '\n';
    } else {
      for (const auto& [v, mult] : leaves)
        std::cout << format_signed_permutation(v) << ' ' << mult << '\n';
    }
  } else if (what == "g-coefficients") {
    QExpansion g = g_coefficients(w);
    if (format == "json") {
      nlohmann::json j = g;
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& [mu, coeff] : g.terms)
        std::cout << '(' << partition_key(mu) << ") " << coeff << '\n';
    }
  } else {
    int degree = static_cast<int>(w.length());
    int m = vars > 0 ? vars : std::max(degree, 1);
    FinitePolynomial f = stanley_c(w, m);
    if (format == "json") {
      nlohmann::json j = f;
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& [exponents, coeff] : f.coefficients) {
        std::string key;
        for (size_t k = 0; k < exponents.size(); ++k) {
          if (k) key += ',';
          key += std::to_string(exponents[k]);
        }
        std::cout << key << ' ' << coeff << '\n';
      }
    }
  }
  return 0;
}

int run_verify(const std::string& suite, const std::string& group, int len,
               int maxcells, int jobs, const std::string& format) {
  VerifyOptions opts;
  opts.rank = parse_group(group);
  opts.max_length = len;
  opts.max_cells = maxcells;
  opts.jobs = jobs;
  VerificationReport rep = run_suite(suite, opts);
  std::fprintf(stderr, "# %s: %.3fs\n", rep.suite.c_str(), rep.seconds);
  if (format == "json") {
    nlohmann::json j{{"suite", rep.suite},
                     {"instances", rep.instances},
                     {"passes", rep.passes},
                     {"failures", rep.failures},
                     {"status", rep.ok() ? "pass" : "fail"}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "suite: " << rep.suite << '\n'
              << "instances: " << rep.instances << '\n'
              << "passes: " << rep.passes << '\n'
              << "failures: " << rep.failures.size() << '\n';
    for (const std::string& f : rep.failures) std::cout << "  - " << f << '\n';
    std::cout << "status: " << (rep.ok() ? "pass" : "fail") << '\n';
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, bumps, insertion, dual equivalence graphs and "
               "Stanley symmetric functions for signed permutations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option defaults from a file");

  std::string words_window, words_format = "text";
  CLI::App* words_cmd =
      app.add_subcommand("words", "List the reduced words of an element");
  words_cmd->add_option("window", words_window, "Window notation, e.g. \"[2,-1,3]\"")
      ->required();
  words_cmd->add_option("--format", words_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string bump_word, bump_format = "json";
  int bump_i = 0, bump_j = 0;
  bool bump_down = false, bump_up = false, bump_canonical = false;
  CLI::App* bump_cmd =
      app.add_subcommand("bump", "Run a Little bump on a reduced word");
  bump_cmd->add_option("word", bump_word, "Reduced word, e.g. 1021201")
      ->required();
  CLI::Option* opt_i =
      bump_cmd->add_option("--i", bump_i, "Crossing row, e.g. --i=-2");
  CLI::Option* opt_j = bump_cmd->add_option("--j", bump_j, "Crossing column");
  CLI::Option* opt_down =
      bump_cmd->add_flag("--down", bump_down, "Decrement the bumped letters");
  CLI::Option* opt_up =
      bump_cmd->add_flag("--up", bump_up, "Increment the bumped letters");
  bump_cmd
      ->add_flag("--canonical", bump_canonical,
                 "Bump at the transition crossing of the element")
      ->excludes(opt_i)
      ->excludes(opt_j)
      ->excludes(opt_down)
      ->excludes(opt_up);
  opt_down->excludes(opt_up);
  bump_cmd->add_option("--format", bump_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string insert_word, insert_type = "b", insert_format = "text";
  CLI::App* insert_cmd =
      app.add_subcommand("insert", "Insert a reduced word into a tableau pair");
  insert_cmd->add_option("word", insert_word, "Reduced word")->required();
  insert_cmd
      ->add_option("--type", insert_type,
                   "a (letters >= 1) or b (letters >= 0)")
      ->check(CLI::IsMember({"a", "b"}))
      ->capture_default_str();
  insert_cmd->add_option("--format", insert_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string graph_ck_a, graph_ck_b, graph_sg, graph_format = "dot";
  CLI::App* graph_cmd = app.add_subcommand(
      "graph", "Export a Coxeter-Knuth or standard dual equivalence graph");
  CLI::Option* opt_ck_a = graph_cmd->add_option(
      "--ck-a", graph_ck_a, "Type A graph of an unsigned element");
  CLI::Option* opt_ck_b =
      graph_cmd->add_option("--ck-b", graph_ck_b, "Type B graph of an element");
  CLI::Option* opt_sg = graph_cmd->add_option(
      "--sg", graph_sg, "Standard graph of a strict partition, e.g. 3,1");
  opt_ck_a->excludes(opt_ck_b)->excludes(opt_sg);
  opt_ck_b->excludes(opt_sg);
  graph_cmd->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  std::string expand_window, expand_what = "transition",
              expand_format = "json";
  int expand_vars = 0;
  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "Expand an element through the transition recursion");
  expand_cmd->add_option("window", expand_window, "Window notation")
      ->required();
  expand_cmd
      ->add_option("--what", expand_what,
                   "transition, g-coefficients or polynomial")
      ->check(CLI::IsMember({"transition", "g-coefficients", "polynomial"}))
      ->capture_default_str();
  expand_cmd
      ->add_option("--vars", expand_vars,
                   "Variable count for polynomial output (default: degree)")
      ->check(CLI::PositiveNumber);
  expand_cmd->add_option("--format", expand_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string verify_suite, verify_group = "B3", verify_format = "text";
  int verify_len = -1, verify_maxcells = 8, verify_jobs = default_jobs();
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd
      ->add_option("suite", verify_suite,
                   "One of: ckcommute delta insertion-bijection peaks "
                   "qpreserve sdeg-axioms transition")
      ->required();
  verify_cmd->add_option("--group", verify_group, "Group to walk, e.g. B3")
      ->capture_default_str();
  verify_cmd->add_option("--len", verify_len,
                         "Length cap (exact word length for ckcommute)");
  verify_cmd
      ->add_option("--maxcells", verify_maxcells,
                   "Partition size cap for tableau suites")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads ($BWORDS_JOBS)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (words_cmd->parsed()) return run_words(words_window, words_format);
    if (bump_cmd->parsed()) {
      if (!bump_canonical) {
        if (opt_i->count() == 0 || opt_j->count() == 0) {
          std::cerr << "error: bump needs --i and --j (or --canonical)\n";
          return 2;
        }
        if (bump_down == bump_up) {
          std::cerr << "error: bump needs exactly one of --down and --up\n";
          return 2;
        }
      }
      return run_bump(bump_word, bump_canonical, bump_i, bump_j, bump_down,
                      bump_format);
    }
    if (insert_cmd->parsed())
      return run_insert(insert_word, insert_type, insert_format);
    if (graph_cmd->parsed()) {
      if (opt_ck_a->count() + opt_ck_b->count() + opt_sg->count() != 1) {
        std::cerr << "error: graph needs exactly one of --ck-a, --ck-b, --sg\n";
        return 2;
      }
      return run_graph(graph_ck_a, graph_ck_b, graph_sg, graph_format);
    }
    if (expand_cmd->parsed())
      return run_expand(expand_window, expand_what, expand_vars,
                        expand_format);
    if (verify_cmd->parsed())
      return run_verify(verify_suite, verify_group, verify_len,
                        verify_maxcells, verify_jobs, verify_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
