#ifndef KNOT_ARENA_HPP
#define KNOT_ARENA_HPP

#include <any>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

// Call-by-need cells. A cell starts as a recipe (a suspended computation),
// runs at most once, and is overwritten in place with the produced value.
// While a recipe runs, the cell is blackholed: re-entering it means the value
// was defined in terms of itself, which is reported as an error instead of
// looping. Cells are owned by an Arena and reclaimed in bulk when the arena
// dies, so reference cycles between cells cost nothing.
//
// An Arena is single-threaded. Distinct arenas may be used from distinct
// threads.

namespace knot {

class Arena;
template <class T>
class Cell;

/// Thrown when a cell's value is demanded while that cell is already being
/// evaluated (directly, or through a cycle of recipes).
class IllFoundedSelfReference : public std::runtime_error {
 public:
  IllFoundedSelfReference()
      : std::runtime_error("ill-founded self-reference: cell demanded its own value") {}
};

/// Thrown when an arena cell cap or a construction budget runs out.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class CellState : std::uint8_t { recipe, blackhole, value };

/// Allocation class of a cell. Structure nodes are tracked apart from
/// auxiliary cells so space claims about a structure can be measured without
/// counting bookkeeping.
enum class CellTag : std::uint8_t { aux = 0, stream_node = 1, dbl_node = 2, tree_node = 3 };
inline constexpr std::size_t cell_tag_count = 4;

struct AllocStats {
  std::uint64_t cells_allocated = 0;
  std::uint64_t forces = 0;      // force calls, including hits on evaluated cells
  std::uint64_t executions = 0;  // recipe bodies actually run

  bool operator==(const AllocStats&) const = default;
};

AllocStats operator+(AllocStats lhs, const AllocStats& rhs);
AllocStats operator-(AllocStats lhs, const AllocStats& rhs);

/// Renders a snapshot as three "key=value" lines (cells_allocated, forces,
/// executions), each key prefixed with `prefix`.
std::string format_stats(const AllocStats& stats, std::string_view prefix = {});

/// Parses text produced by format_stats. Lines with other keys are ignored;
/// returns nullopt unless all three prefixed keys are present and numeric.
std::optional<AllocStats> parse_stats(std::string_view text, std::string_view prefix = {});

class Arena {
 public:
  Arena() = default;
  /// Caps the arena at `max_cells` cells; allocation past the cap throws
  /// LimitExceeded. A cap of 0 means unlimited.
  explicit Arena(std::size_t max_cells) : max_cells_(max_cells) {}

  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;

  /// Cell already holding a value. Never counts as an execution.
  template <class T>
  Cell<std::decay_t<T>> new_value(T&& v, CellTag tag = CellTag::aux);

  /// Suspended cell. `fn` is not invoked here; it runs on first force.
  template <class F>
  Cell<std::decay_t<std::invoke_result_t<F&>>> new_recipe(F fn, CellTag tag = CellTag::aux);

  /// Suspended cell whose recipe receives the cell's own handle, so the
  /// produced value can contain references back to the cell.
  /// `builder` must be callable as T(Cell<T>).
  template <class T, class F>
  Cell<T> tie(F builder, CellTag tag = CellTag::aux);

  AllocStats stats() const;          // all allocation classes combined
  AllocStats stats(CellTag) const;   // one class
  std::size_t cell_count() const { return slots_.size(); }

 private:
  struct Slot {
    std::function<std::any()> recipe;  // engaged only in recipe state
    std::any value;                    // engaged only in value state
    CellState state = CellState::recipe;
    CellTag tag = CellTag::aux;
  };

  std::uint32_t allocate(CellTag tag, CellState initial);

  template <class T>
  const T& force_slot(std::uint32_t index);

  CellState slot_state(std::uint32_t index) const { return slots_[index].state; }

  // deque: slot references stay valid while recipes allocate more cells
  std::deque<Slot> slots_;
  std::array<AllocStats, cell_tag_count> stats_{};
  std::size_t max_cells_ = 0;  // 0 = unlimited

  template <class U>
  friend class Cell;
};

/// Non-owning typed handle to an arena cell. Copying a Cell shares the cell.
/// A default-constructed Cell is null; forcing it is a logic error.
template <class T>
class Cell {
 public:
  Cell() = default;

  /// Returns the cell's value, running the recipe first if it has not run.
  /// The reference stays valid for the arena's lifetime.
  const T& force() const {
    if (arena_ == nullptr) throw std::logic_error("force on null cell handle");
    return arena_->force_slot<T>(index_);
  }

  /// Current lifecycle state; does not force and does not count as a force.
  CellState state() const {
    if (arena_ == nullptr) throw std::logic_error("state of null cell handle");
    return arena_->slot_state(index_);
  }

  bool valid() const { return arena_ != nullptr; }
  std::uint32_t id() const { return index_; }
  Arena& arena() const { return *arena_; }

  friend bool same_cell(const Cell& x, const Cell& y) {
    return x.arena_ != nullptr && x.arena_ == y.arena_ && x.index_ == y.index_;
  }

 private:
  Cell(Arena* arena, std::uint32_t index) : arena_(arena), index_(index) {}

  Arena* arena_ = nullptr;
  std::uint32_t index_ = 0;

  friend class Arena;
};

template <class T>
Cell<std::decay_t<T>> Arena::new_value(T&& v, CellTag tag) {
  const std::uint32_t index = allocate(tag, CellState::value);
  slots_[index].value.emplace<std::decay_t<T>>(std::forward<T>(v));
  return Cell<std::decay_t<T>>(this, index);
}

template <class F>
Cell<std::decay_t<std::invoke_result_t<F&>>> Arena::new_recipe(F fn, CellTag tag) {
  using T = std::decay_t<std::invoke_result_t<F&>>;
  const std::uint32_t index = allocate(tag, CellState::recipe);
  slots_[index].recipe = [fn = std::move(fn)]() mutable -> std::any {
    return std::any(std::in_place_type<T>, fn());
  };
  return Cell<T>(this, index);
}

template <class T, class F>
Cell<T> Arena::tie(F builder, CellTag tag) {
  static_assert(std::is_convertible_v<std::invoke_result_t<F&, Cell<T>>, T>,
                "tie builder must produce the cell's value type from the cell's own handle");
  const std::uint32_t index = allocate(tag, CellState::recipe);
  Cell<T> self(this, index);
  slots_[index].recipe = [builder = std::move(builder), self]() mutable -> std::any {
    return std::any(std::in_place_type<T>, builder(self));
  };
  return self;
}

template <class T>
const T& Arena::force_slot(std::uint32_t index) {
  Slot& slot = slots_[index];
  AllocStats& st = stats_[static_cast<std::size_t>(slot.tag)];
  ++st.forces;
  switch (slot.state) {
    case CellState::value:
      break;
    case CellState::blackhole:
      throw IllFoundedSelfReference();
    case CellState::recipe: {
      slot.state = CellState::blackhole;
      ++st.executions;
      auto recipe = std::move(slot.recipe);
      slot.recipe = nullptr;
      // May re-enter the arena: allocate cells, force other cells. If it
      // throws, the cell stays blackholed and the recipe is gone for good.
      slot.value = recipe();
      slot.state = CellState::value;
      break;
    }
  }
  const T* v = std::any_cast<T>(&slot.value);
  if (v == nullptr) throw std::logic_error("cell forced at a mismatched type");
  return *v;
}

}  // namespace knot

#endif  // KNOT_ARENA_HPP
