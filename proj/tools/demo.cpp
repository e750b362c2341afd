// demo: runs the catalog structures and prints what they produce plus
// allocation counters.
//
// Usage: demo <name> [--take N] [--count N] [--variant V]
//                    [--input csv | --file PATH] [--budget N]
//
// Output: one line of comma-separated elements, then key=value stat lines.
// The bare cells_allocated/forces/executions lines count structure node
// cells only (list, tree, and doubly-linked nodes); the engine_-prefixed
// block counts every cell in the arena, bookkeeping included.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knot/bfs.hpp"
#include "knot/knots.hpp"
#include "knot/selfref.hpp"

namespace {

using i64 = std::int64_t;

struct Options {
  std::string name;
  std::optional<std::size_t> take;
  std::optional<std::size_t> count;
  std::string variant;
  std::string input_csv;
  std::string input_file;
  std::size_t budget = knot::default_build_budget;
};

std::vector<i64> parse_ints(std::istream& in, char sep) {
  std::vector<i64> out;
  std::string item;
  while (std::getline(in, item, sep)) {
    if (item.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not a 64-bit integer: " + item);
    }
    if (item.find_first_not_of(" \t\r\n", used) != std::string::npos) {
      throw std::invalid_argument("trailing junk in number: " + item);
    }
  }
  return out;
}

std::vector<i64> input_list(const Options& opt, std::vector<i64> fallback) {
  if (!opt.input_csv.empty()) {
    std::istringstream in(opt.input_csv);
    return parse_ints(in, ',');
  }
  if (!opt.input_file.empty()) {
    std::ifstream in(opt.input_file);
    if (!in) throw std::runtime_error("cannot open " + opt.input_file);
    return parse_ints(in, '\n');
  }
  return fallback;
}

// 0,1,...,count-1 over and over: stop holds on the last state of the pass.
knot::GenSpec cycle_spec(i64 count) {
  knot::GenSpec spec;
  spec.seed = 0;
  spec.step = [](i64 y) { return y + 1; };
  spec.emit = [](i64 y) { return y; };
  spec.stop = [count](i64 y) { return y >= count - 1; };
  return spec;
}

// 10,20,...,10*count: stop cuts generation before emitting.
knot::GenSpec tens_spec(i64 count) {
  knot::GenSpec spec;
  spec.seed = 1;
  spec.step = [](i64 y) { return y + 1; };
  spec.emit = [](i64 y) { return 10 * y; };
  spec.stop = [count](i64 y) { return y > count; };
  return spec;
}

knot::Cell<knot::BinNode> complete_tree(knot::Arena& a, i64 index, i64 max_index) {
  if (index > max_index) return knot::bin_empty(a);
  return knot::bin_fork(a, complete_tree(a, 2 * index, max_index), index,
                        complete_tree(a, 2 * index + 1, max_index));
}

void require_variant(const Options& opt, const std::vector<std::string>& allowed) {
  for (const auto& v : allowed) {
    if (opt.variant == v) return;
  }
  throw CLI::ValidationError("--variant", "demo '" + opt.name + "' does not accept variant '" +
                                              opt.variant + "'");
}

std::vector<i64> run_demo(knot::Arena& a, const Options& opt) {
  const std::size_t take_n = opt.take.value_or(opt.name == "ones" ? 5 : 7);
  const i64 count = static_cast<i64>(opt.count.value_or(opt.name == "primes" ? 10 : 3));

  if (opt.name == "ones") {
    require_variant(opt, {""});
    return take(knot::ones(a), opt.take.value_or(5));
  }
  if (opt.name == "circ") {
    require_variant(opt, {""});
    return take(knot::circ(a, cycle_spec(std::max<i64>(count, 1)), opt.budget), take_n);
  }
  if (opt.name == "uncirc") {
    require_variant(opt, {""});
    return take(knot::uncirc(a, cycle_spec(std::max<i64>(count, 1)), opt.budget), take_n);
  }
  if (opt.name == "double") {
    require_variant(opt, {""});
    return knot::dbl_forward(knot::double_list(a, tens_spec(count), opt.budget));
  }
  if (opt.name == "thread") {
    require_variant(opt, {""});
    const auto elems = input_list(opt, {4, 2, 6, 1, 3, 5, 7});
    return knot::threaded_walk(knot::thread_tree(a, elems));
  }
  if (opt.name == "bfirst") {
    require_variant(opt, {"", "finite", "infinite"});
    if (opt.variant == "infinite") {
      return take(knot::bfirst(knot::heap_indexed_tree(a)), opt.take.value_or(10));
    }
    auto t = complete_tree(a, 1, 15);
    return take(knot::bfirst(t), opt.take.value_or(64));
  }
  if (opt.name == "unique" || opt.name == "uniqueF") {
    require_variant(opt, {""});
    const auto elems = input_list(opt, {1, 2, 1, 3, 2});
    auto in = knot::stream_of<i64>(a, elems);
    auto out = opt.name == "unique" ? knot::unique(a, in) : knot::unique_filtered(in);
    return take(out, elems.size() + 1);
  }
  if (opt.name == "unique-backpatch") {
    require_variant(opt, {""});
    return knot::unique_backpatch(input_list(opt, {1, 2, 1, 3, 2}));
  }
  if (opt.name == "primes") {
    require_variant(opt, {"", "circular", "sieve", "isprime"});
    const std::size_t k = opt.count.value_or(10);
    if (opt.variant == "sieve") return take(knot::sieve_baseline(a), k);
    if (opt.variant == "isprime") {
      const auto shared = knot::isprime_shared(a);
      const auto candidates = input_list(opt, {2, 3, 4, 91, 97, 10007});
      std::vector<i64> hits;
      for (const i64 c : candidates) {
        if (shared.isprime(c)) hits.push_back(c);
      }
      return hits;
    }
    return take(knot::primes_circular(a), k);
  }
  throw CLI::ValidationError("demo", "unknown demo '" + opt.name + "'");
}

constexpr const char* kDemoNames =
    "ones, circ, uncirc, double, thread, bfirst, unique, uniqueF, unique-backpatch, primes";

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"catalog of lazily tied structures; prints elements and cell counters"};
  app.add_option("name", opt.name, std::string("demo to run: ") + kDemoNames)->required();
  app.add_option("--take", opt.take, "elements of the result stream to print");
  app.add_option("--count", opt.count, "structure size (period, list length, prime count)");
  app.add_option("--variant", opt.variant,
                 "demo flavor (bfirst: finite|infinite; primes: circular|sieve|isprime)");
  auto* csv = app.add_option("--input", opt.input_csv, "comma-separated input elements");
  app.add_option("--file", opt.input_file, "file with one input element per line")
      ->excludes(csv);
  app.add_option("--budget", opt.budget, "construction cell budget for circ/uncirc/double");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);          // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);           // prints the complaint
    return 2;
  }

  const std::vector<std::string> known = {"ones",   "circ",   "uncirc",           "double",
                                          "thread", "bfirst", "unique",           "uniqueF",
                                          "primes", "unique-backpatch"};
  if (std::find(known.begin(), known.end(), opt.name) == known.end()) {
    std::cerr << "unknown demo '" << opt.name << "'; expected one of: " << kDemoNames << "\n";
    return 2;
  }

  knot::Arena arena;
  std::vector<i64> data;
  const auto started = std::chrono::steady_clock::now();
  try {
    data = run_demo(arena, opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  std::string line;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(data[i]);
  }
  std::cout << line << "\n";

  const knot::AllocStats nodes = arena.stats(knot::CellTag::stream_node) +
                                 arena.stats(knot::CellTag::dbl_node) +
                                 arena.stats(knot::CellTag::tree_node);
  std::cout << knot::format_stats(nodes) << knot::format_stats(arena.stats(), "engine_")
            << "elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  return 0;
}
