#include "knot/arena.hpp"

#include <charconv>

namespace knot {

AllocStats operator+(AllocStats lhs, const AllocStats& rhs) {
  lhs.cells_allocated += rhs.cells_allocated;
  lhs.forces += rhs.forces;
  lhs.executions += rhs.executions;
  return lhs;
}

AllocStats operator-(AllocStats lhs, const AllocStats& rhs) {
  lhs.cells_allocated -= rhs.cells_allocated;
  lhs.forces -= rhs.forces;
  lhs.executions -= rhs.executions;
  return lhs;
}

std::uint32_t Arena::allocate(CellTag tag, CellState initial) {
  if (max_cells_ != 0 && slots_.size() >= max_cells_) {
    throw LimitExceeded("arena cell cap exhausted");
  }
  Slot slot;
  slot.state = initial;
  slot.tag = tag;
  slots_.push_back(std::move(slot));
  ++stats_[static_cast<std::size_t>(tag)].cells_allocated;
  return static_cast<std::uint32_t>(slots_.size() - 1);
}

AllocStats Arena::stats() const {
  AllocStats total;
  for (const AllocStats& s : stats_) total = total + s;
  return total;
}

AllocStats Arena::stats(CellTag tag) const { return stats_[static_cast<std::size_t>(tag)]; }

std::string format_stats(const AllocStats& stats, std::string_view prefix) {
  std::string out;
  auto line = [&](std::string_view key, std::uint64_t v) {
    out.append(prefix);
    out.append(key);
    out.push_back('=');
    out.append(std::to_string(v));
    out.push_back('\n');
  };
  line("cells_allocated", stats.cells_allocated);
  line("forces", stats.forces);
  line("executions", stats.executions);
  return out;
}

std::optional<AllocStats> parse_stats(std::string_view text, std::string_view prefix) {
  AllocStats out;
  bool have_cells = false, have_forces = false, have_executions = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (line.size() <= prefix.size() || line.substr(0, prefix.size()) != prefix) continue;
    line.remove_prefix(prefix.size());
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) continue;
    const std::string_view key = line.substr(0, eq);
    const std::string_view num = line.substr(eq + 1);

    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc{} || end != num.data() + num.size()) continue;

    if (key == "cells_allocated") {
      out.cells_allocated = v;
      have_cells = true;
    } else if (key == "forces") {
      out.forces = v;
      have_forces = true;
    } else if (key == "executions") {
      out.executions = v;
      have_executions = true;
    }
  }

  if (have_cells && have_forces && have_executions) return out;
  return std::nullopt;
}

}  // namespace knot
