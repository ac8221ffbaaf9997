// Command-line front end: normal forms, products, inverses, equality,
// the relation suite, key-exchange demo sessions, and the multiply benchmark.
//
// Element inputs are inline generator words ("f0 b1 A2", empty = identity)
// or "@path" naming a file in the element text format.
// Exit codes: 0 success / equal / secrets match, 1 semantic negative,
// 2 usage or parse errors.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bv/aag.hpp"
#include "bv/bench.hpp"
#include "bv/element.hpp"
#include "bv/text.hpp"

namespace {

bv::BVElement load_input(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot open file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return bv::parse_element(buf.str());
  }
  return bv::evaluate_word(bv::parse_gen_word(arg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-braid-tree calculator for the braided Thompson group"};
  app.require_subcommand(1);

  std::string arg_a, arg_b;
  int max_index = 3;
  bv::KexParams kex;
  std::string sizes_arg = "16,32,64,128";
  int trials = 5;
  std::string mode = "nf";
  bool csv = false;
  uint64_t bench_seed = 1;

  CLI::App* nf = app.add_subcommand("nf", "Print an element in normal form");
  nf->add_option("input", arg_a, "generator word or @file")->required();

  CLI::App* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("a", arg_a, "left factor")->required();
  mul->add_option("b", arg_b, "right factor")->required();

  CLI::App* inv = app.add_subcommand("inv", "Invert an element");
  inv->add_option("input", arg_a, "generator word or @file")->required();

  CLI::App* eq = app.add_subcommand("eq", "Test two elements for equality");
  eq->add_option("a", arg_a, "left element")->required();
  eq->add_option("b", arg_b, "right element")->required();

  CLI::App* rel = app.add_subcommand("relcheck", "Verify the presentation");
  rel->add_option("--max-index", max_index, "largest generator subscript")
      ->required();

  CLI::App* aag = app.add_subcommand("aag", "Run a key-exchange session");
  aag->add_option("--seed", kex.seed, "session seed");
  aag->add_option("--alice-set", kex.alice_set_size, "alice public set size");
  aag->add_option("--alice-len", kex.alice_key_length, "alice key length");
  aag->add_option("--bob-set", kex.bob_set_size, "bob public set size");
  aag->add_option("--bob-len", kex.bob_key_length, "bob key length");
  aag->add_option("--gen-len", kex.public_gen_word_length,
                  "generator word length for public elements");

  CLI::App* bench = app.add_subcommand("bench", "Time multiplication");
  bench->add_option("--sizes", sizes_arg, "comma-separated sizes");
  bench->add_option("--trials", trials, "trials per size");
  bench->add_option("--mode", mode, "nf or fast");
  bench->add_flag("--csv", csv, "CSV output");
  bench->add_option("--seed", bench_seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (nf->parsed()) {
      std::cout << bv::print_element(load_input(arg_a));
      return 0;
    }
    if (mul->parsed()) {
      std::cout << bv::print_element(
          bv::multiply(load_input(arg_a), load_input(arg_b)));
      return 0;
    }
    if (inv->parsed()) {
      std::cout << bv::print_element(bv::invert(load_input(arg_a)));
      return 0;
    }
    if (eq->parsed()) {
      const bool same = load_input(arg_a) == load_input(arg_b);
      std::cout << (same ? "equal" : "different") << "\n";
      return same ? 0 : 1;
    }
    if (rel->parsed()) {
      if (max_index < 2) {
        std::cerr << "error: --max-index must be at least 2\n";
        return 2;
      }
      bv::RelationReport report = bv::check_relations(max_index);
      std::map<int, std::pair<int, int>> by_family;
      for (const bv::RelationInstance& r : report.instances) {
        ++by_family[r.family].second;
        if (r.pass) ++by_family[r.family].first;
        if (!r.pass) std::cout << "FAIL: " << r.name << "\n";
      }
      for (const auto& [family, counts] : by_family)
        std::cout << "family " << family << ": " << counts.first << "/"
                  << counts.second << " pass\n";
      std::cout << (report.all_pass() ? "all relations hold\n"
                                      : "some relations FAILED\n");
      return report.all_pass() ? 0 : 1;
    }
    if (aag->parsed()) {
      bv::KexSession session;
      try {
        session = bv::run_session(kex);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      std::cout << bv::transcript(session);
      return session.shared_secret_alice == session.shared_secret_bob ? 0 : 1;
    }
    if (bench->parsed()) {
      std::vector<int> sizes;
      std::stringstream ss(sizes_arg);
      std::string item;
      while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
      const std::vector<bv::BenchRow> rows =
          bv::run_bench(sizes, trials, mode, bench_seed);
      if (csv) {
        std::cout << bv::bench_csv(rows);
      } else {
        for (const bv::BenchRow& r : rows)
          std::cout << "size " << r.size << "  mode " << r.mode << "  trials "
                    << r.trials << "  median " << r.median_micros
                    << " us  input " << r.mean_input_bits << " bits\n";
      }
      return 0;
    }
  } catch (const bv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
