// Acceptance gate. Runs nine end-to-end checks, prints exactly one
// [PASS]/[FAIL] line per criterion, and exits nonzero if any fails.
// argv[1]: path to the demo binary (criterion 9 drives it through a pipe).

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knot/arena.hpp"
#include "knot/bfs.hpp"
#include "knot/knots.hpp"
#include "knot/selfref.hpp"
#include "knot/stream.hpp"
#include "oracles.hpp"

namespace {

using i64 = std::int64_t;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;  // shown only on failure
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// --- criterion 1: memoization ------------------------------------------------

Outcome criterion1() {
  const auto start = Clock::now();

  // Random dependency chains forced in random orders, with repeats: no recipe
  // body may run twice, and replaying a schedule must execute nothing.
  std::mt19937 rng(20260817);
  constexpr std::size_t n_cells = 8;
  for (int iter = 0; iter < 10000; ++iter) {
    knot::Arena a;
    auto runs = std::make_shared<std::array<int, n_cells>>();
    runs->fill(0);
    std::vector<knot::Cell<i64>> cells;
    cells.push_back(a.new_value<i64>(1));
    for (std::size_t i = 1; i < n_cells; ++i) {
      const knot::Cell<i64> below = cells[rng() % cells.size()];
      cells.push_back(a.new_recipe([runs, i, below]() -> i64 {
        ++(*runs)[i];
        return below.force() + 1;
      }));
    }
    std::array<std::size_t, 32> schedule{};
    for (std::size_t& s : schedule) s = rng() % n_cells;
    for (const std::size_t s : schedule) cells[s].force();
    for (const int r : *runs) {
      if (r > 1) return fail("a recipe body ran twice");
    }
    const std::uint64_t before = a.stats().executions;
    for (const std::size_t s : schedule) cells[s].force();
    if (a.stats().executions != before) return fail("replaying a schedule executed a recipe");
  }

  // Walking any of the structures a second time costs forces, never executions.
  {
    knot::Arena a;
    auto s = knot::circ(a, oracles::counting_spec(0, 2, 1, 0));
    knot::take(s, 50);
    const auto e0 = a.stats().executions;
    knot::take(s, 50);
    if (a.stats().executions != e0) return fail("re-walking a cyclic list executed recipes");
  }
  {
    knot::Arena a;
    auto first = knot::double_list(a, oracles::counting_spec(0, 40, 3, 1));
    knot::dbl_forward(first);
    knot::dbl_backward(first);
    const auto e0 = a.stats().executions;
    knot::dbl_forward(first);
    knot::dbl_backward(first);
    if (a.stats().executions != e0) return fail("re-walking a doubly-linked list executed recipes");
  }
  {
    knot::Arena a;
    auto root = knot::thread_tree(a, {8, 3, 11, 1, 5, 9, 14, 2, 4, 6, 10, 13});
    knot::threaded_walk(root);
    const auto e0 = a.stats().executions;
    knot::threaded_walk(root);
    if (a.stats().executions != e0) return fail("re-walking a threaded tree executed recipes");
  }
  {
    knot::Arena a;
    auto s = knot::bfirst(knot::heap_indexed_tree(a));
    knot::take(s, 200);
    const auto e0 = a.stats().executions;
    knot::take(s, 200);
    if (a.stats().executions != e0) return fail("re-walking a level-order stream executed recipes");
  }
  {
    knot::Arena a;
    auto s = knot::unique(a, knot::stream_of<i64>(a, {3, 1, 3, 2, 1, 2, 5}));
    knot::take(s, 8);
    const auto e0 = a.stats().executions;
    knot::take(s, 8);
    if (a.stats().executions != e0) return fail("re-walking a dedup stream executed recipes");
  }
  {
    knot::Arena a;
    auto s = knot::primes_circular(a);
    knot::take(s, 100);
    const auto e0 = a.stats().executions;
    knot::take(s, 100);
    if (a.stats().executions != e0) return fail("re-walking the prime stream executed recipes");
  }

  if (ms_since(start) >= 5000.0) return fail("took 5s or more");
  return {};
}

// --- criterion 2: cyclic lists ----------------------------------------------

Outcome criterion2() {
  {
    knot::Arena a;
    const auto t0 = Clock::now();
    auto s = knot::ones(a);
    const auto xs = knot::take(s, 1000000);
    if (xs.size() != 1000000) return fail("ones ended early");
    if (!std::all_of(xs.begin(), xs.end(), [](i64 v) { return v == 1; }))
      return fail("ones produced a value other than 1");
    if (a.stats(knot::CellTag::stream_node).cells_allocated != 1)
      return fail("ones used more than one cell");
    if (!same_cell(s, s.tail())) return fail("the tail of ones is not ones itself");
    if (ms_since(t0) >= 1000.0) return fail("a million elements of ones took 1s or more");
  }

  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> period_dist(1, 16);
  std::uniform_int_distribution<i64> seed_dist(-50, 50);
  std::uniform_int_distribution<i64> mul_dist(-9, 9);
  std::uniform_int_distribution<i64> add_dist(-99, 99);
  for (int t = 0; t < 50; ++t) {
    const auto spec =
        oracles::counting_spec(seed_dist(rng), period_dist(rng) - 1, mul_dist(rng), add_dist(rng));
    const std::size_t period = oracles::unfold_once(spec).size();
    const auto expected = oracles::unfold_cycle(spec, 100);

    knot::Arena ca;
    auto c = knot::circ(ca, spec);
    if (knot::take(c, 100) != expected) return fail("tied-back list prefix mismatch");
    if (ca.stats(knot::CellTag::stream_node).cells_allocated != period)
      return fail("tied-back list did not allocate exactly one cell per period element");

    knot::Arena ua;
    auto u = knot::uncirc(ua, spec);
    if (knot::take(u, 100) != expected) return fail("re-unfolded list prefix mismatch");
    if (ua.stats(knot::CellTag::stream_node).cells_allocated < 100)
      return fail("re-unfolded list allocated fewer cells than elements demanded");
  }
  return {};
}

// --- criterion 3: doubly-linked lists ---------------------------------------

Outcome criterion3() {
  std::mt19937 rng(11);
  std::uniform_int_distribution<i64> len_dist(0, 256);
  std::uniform_int_distribution<i64> seed_dist(-100, 100);
  std::uniform_int_distribution<i64> mul_dist(-9, 9);
  std::uniform_int_distribution<i64> add_dist(-99, 99);
  for (int t = 0; t < 100; ++t) {
    const auto spec =
        oracles::counting_spec(seed_dist(rng), len_dist(rng), mul_dist(rng), add_dist(rng));
    const auto expected = oracles::generate_while(spec);

    knot::Arena a;
    auto first = knot::double_list(a, spec);
    if (knot::dbl_forward(first) != expected) return fail("forward walk mismatch");
    auto bwd = knot::dbl_backward(first);
    std::reverse(bwd.begin(), bwd.end());
    if (bwd != expected) return fail("backward walk is not the reverse of the forward walk");

    knot::Cell<knot::DblNode> cur = first;
    while (cur.force().has_value()) {
      const knot::DblLink& link = *cur.force();
      if (link.next.force().has_value() && !same_cell(link.next.force()->prev, cur))
        return fail("a node's successor points back at a different cell");
      cur = link.next;
    }

    const auto e0 = a.stats().executions;
    knot::dbl_forward(first);
    knot::dbl_backward(first);
    if (a.stats().executions != e0) return fail("re-walking executed recipes");
  }
  return {};
}

// --- criterion 4: threaded trees --------------------------------------------

Outcome criterion4() {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto xs = oracles::random_list(rng, 128, 64);
    const auto expected = oracles::sorted_distinct(xs);

    knot::Arena a;
    auto root = knot::thread_tree(a, xs);
    std::size_t steps = 0;
    if (knot::threaded_walk(root, &steps) != expected) return fail("in-order walk mismatch");
    if (steps > 2 * expected.size()) return fail("walk took more than two moves per node");
  }
  return {};
}

// --- criterion 5: level-order traversal -------------------------------------

knot::Cell<knot::BinNode> random_tree(knot::Arena& a, std::mt19937& rng, std::size_t n,
                                      i64& label) {
  if (n == 0) return knot::bin_empty(a);
  const std::size_t left_n = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  const i64 elt = label++;
  auto left = random_tree(a, rng, left_n, label);
  auto right = random_tree(a, rng, n - 1 - left_n, label);
  return knot::bin_fork(a, left, elt, right);
}

Outcome criterion5() {
  const auto start = Clock::now();
  try {
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
      knot::Arena a;
      const std::size_t n = rng() % 65;
      i64 label = 1;
      auto root = random_tree(a, rng, n, label);
      const auto expected = knot::bfs_oracle(root);
      if (knot::take(knot::bfirst(root), n + 1) != expected)
        return fail("level order disagrees with the queue-driven walk");
    }

    knot::Arena a;
    auto root = knot::heap_indexed_tree(a);
    const auto base = a.stats(knot::CellTag::stream_node).cells_allocated;
    auto s = knot::bfirst(root);
    if (knot::take(s, 1000) != oracles::counting_levels(1000))
      return fail("endless tree's level order is not 1..1000");
    const auto used = a.stats(knot::CellTag::stream_node).cells_allocated - base;
    if (used > 3 * 1000 + 8)
      return fail("queue allocated more than a constant number of cells per element");
  } catch (const knot::IllFoundedSelfReference&) {
    return fail("the self-consuming queue tripped its own blackhole");
  }
  if (ms_since(start) >= 5000.0) return fail("took 5s or more");
  return {};
}

// --- criterion 6: dedup family ----------------------------------------------

knot::Stream<i64> halved_naturals(knot::Arena& a, i64 n) {
  return knot::defer_stream(a, [&a, n]() -> knot::StreamNode<i64> {
    return knot::ConsCell<i64>{n / 2, halved_naturals(a, n + 1)};
  });
}

Outcome criterion6() {
  std::mt19937 rng(19);
  for (int t = 0; t < 500; ++t) {
    const auto xs = oracles::random_list(rng, 512, 64);
    const auto expected = oracles::first_occurrences(xs);

    knot::Arena a;
    auto input = knot::stream_of<i64>(a, xs);
    if (knot::take(knot::unique(a, input), xs.size() + 1) != expected)
      return fail("self-referencing dedup mismatch");
    if (knot::take(knot::unique_filtered(input), xs.size() + 1) != expected)
      return fail("nested-filter dedup mismatch");
    if (knot::unique_backpatch(xs) != expected) return fail("backpatching dedup mismatch");
  }

  // Space: over 50 distinct values, the self-referencing form's cells must not
  // track input length; the nested-filter form's cells must.
  const std::array<std::size_t, 3> lengths{250, 500, 1000};
  std::array<std::uint64_t, 3> unique_cells{};
  std::array<std::uint64_t, 3> filtered_cells{};
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    std::vector<i64> xs(lengths[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = static_cast<i64>(j % 50);
    {
      knot::Arena a;
      auto input = knot::stream_of<i64>(a, xs);
      const auto base = a.stats(knot::CellTag::stream_node).cells_allocated;
      knot::take(knot::unique(a, input), xs.size() + 1);
      unique_cells[i] = a.stats(knot::CellTag::stream_node).cells_allocated - base;
    }
    {
      knot::Arena a;
      auto input = knot::stream_of<i64>(a, xs);
      const auto base = a.stats(knot::CellTag::stream_node).cells_allocated;
      knot::take(knot::unique_filtered(input), xs.size() + 1);
      filtered_cells[i] = a.stats(knot::CellTag::stream_node).cells_allocated - base;
    }
  }
  const std::uint64_t umin = *std::min_element(unique_cells.begin(), unique_cells.end());
  const std::uint64_t umax = *std::max_element(unique_cells.begin(), unique_cells.end());
  if (umax >= 2 * umin) return fail("self-referencing dedup's cells grew with input length");
  if (filtered_cells[2] < 3 * filtered_cells[0])
    return fail("nested-filter dedup's cells failed to grow with input length");

  {
    knot::Arena a;
    const auto t0 = Clock::now();
    std::vector<i64> want(100);
    std::iota(want.begin(), want.end(), i64{0});
    if (knot::take(knot::unique(a, halved_naturals(a, 0)), 100) != want)
      return fail("dedup over endless input produced a wrong prefix");
    if (ms_since(t0) >= 1000.0) return fail("dedup over endless input took 1s or more");
  }
  return {};
}

// --- criterion 7: prime streams ---------------------------------------------

Outcome criterion7() {
  const auto start = Clock::now();
  const auto expected = oracles::trial_primes(1000);
  {
    knot::Arena a;
    if (knot::take(knot::sieve_baseline(a), 1000) != expected)
      return fail("layered sieve disagrees with trial division");
  }
  {
    knot::Arena a;
    if (knot::take(knot::primes_circular(a), 1000) != expected)
      return fail("self-filtering stream disagrees with trial division");
  }
  {
    knot::Arena a;
    if (knot::take(knot::isprime_shared(a).primes, 1000) != expected)
      return fail("shared predicate's stream disagrees with trial division");
  }

  std::uint64_t sieve_cells = 0;
  std::uint64_t circ_cells = 0;
  {
    knot::Arena a;
    knot::take(knot::sieve_baseline(a), 100);
    sieve_cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  {
    knot::Arena a;
    knot::take(knot::primes_circular(a), 100);
    circ_cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  if (circ_cells >= sieve_cells)
    return fail("self-filtering stream did not beat the layered sieve on cells");

  {
    knot::Arena a;
    auto shared = knot::isprime_shared(a);
    if (!shared.isprime(10007) || shared.isprime(10008)) return fail("predicate misjudged");
    const auto e0 = a.stats().executions;
    if (!shared.isprime(10009)) return fail("predicate misjudged 10009");
    if (a.stats().executions != e0)
      return fail("a second query of similar size executed new recipes");
  }

  if (ms_since(start) >= 10000.0) return fail("took 10s or more");
  return {};
}

// --- criterion 8: ill-founded definitions -----------------------------------

template <class F>
Outcome expect_blackhole(const char* what, F demand) {
  const auto t0 = Clock::now();
  bool caught = false;
  try {
    demand();
  } catch (const knot::IllFoundedSelfReference&) {
    caught = true;
  }
  if (!caught) return fail(std::string(what) + " was not reported");
  if (ms_since(t0) > 1.0) return fail(std::string(what) + " took over a millisecond to report");
  return {};
}

Outcome criterion8() {
  // Pay the C++ runtime's one-off cost of the first throw before timing.
  try {
    throw std::runtime_error("warmup");
  } catch (const std::runtime_error&) {
  }

  {
    // a recipe that forces exactly its own cell, handle smuggled in via a box
    knot::Arena a;
    auto box = std::make_shared<std::optional<knot::Cell<i64>>>();
    auto c = a.new_recipe([box]() -> i64 { return (*box)->force(); });
    *box = c;
    const Outcome o = expect_blackhole("a cell demanding itself", [&] { c.force(); });
    if (!o.ok) return o;
  }
  {
    knot::Arena a;
    auto link = std::make_shared<std::optional<knot::Cell<i64>>>();
    auto first = a.new_recipe([link]() -> i64 { return (*link)->force(); });
    auto second = a.new_recipe([first]() -> i64 { return first.force(); });
    *link = second;
    const Outcome o = expect_blackhole("two cells demanding each other", [&] { first.force(); });
    if (!o.ok) return o;
  }
  {
    knot::Arena a;
    auto c = a.tie<i64>([](knot::Cell<i64> self) { return self.force() + 1; });
    const Outcome o = expect_blackhole("a tied builder demanding its own handle",
                                       [&] { c.force(); });
    if (!o.ok) return o;
  }
  return {};
}

// --- criterion 9: the demo binary -------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome criterion9(const std::string& demo_path) {
  if (demo_path.empty()) return fail("demo binary path missing (pass it as argv[1])");
  const std::vector<std::string> demos = {"ones",   "circ",   "uncirc", "double",
                                          "thread", "bfirst", "unique", "uniqueF",
                                          "primes", "unique-backpatch"};
  for (const auto& name : demos) {
    const RunResult r = run_command(demo_path + " " + name + " 2>/dev/null");
    if (r.exit_code != 0) return fail(name + " exited with " + std::to_string(r.exit_code));
    if (!knot::parse_stats(r.out).has_value())
      return fail(name + ": node stat block did not parse back");
    if (!knot::parse_stats(r.out, "engine_").has_value())
      return fail(name + ": engine stat block did not parse back");
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string demo_path = argc > 1 ? argv[1] : "";

  struct Entry {
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {"criterion 1: recipes run at most once under randomized force schedules", criterion1},
      {"criterion 2: ones lives in one cell; cyclic lists allocate one cell per period element",
       criterion2},
      {"criterion 3: doubly-linked lists walk both ways with exact next/prev cell identity",
       criterion3},
      {"criterion 4: threaded trees walk in order within two moves per node", criterion4},
      {"criterion 5: level-order traversal matches a queue and stays O(1) cells per element",
       criterion5},
      {"criterion 6: dedup variants agree; the self-referencing one stays O(distinct) cells",
       criterion6},
      {"criterion 7: prime streams agree with trial division and share forced work", criterion7},
      {"criterion 8: ill-founded self-reference is reported, not looped on", criterion8},
      {"criterion 9: every demo exits cleanly and its stat lines parse back",
       [&demo_path] { return criterion9(demo_path); }},
  };

  int failures = 0;
  for (const auto& e : entries) {
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = fail(std::string("unexpected exception: ") + ex.what());
    }
    if (o.ok) {
      std::printf("[PASS] %s\n", e.label);
    } else {
      std::printf("[FAIL] %s (%s)\n", e.label, o.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }

  if (failures == 0) {
    std::printf("all %zu criteria passed\n", entries.size());
    return 0;
  }
  std::printf("%d of %zu criteria failed\n", failures, entries.size());
  return 1;
}
