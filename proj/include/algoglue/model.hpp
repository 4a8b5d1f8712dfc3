#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algoglue/value.hpp"

namespace algoglue {

/// A one-tape configuration over {0, 1, *}: a finite window plus the index of
/// tape position 0 inside it. Cells outside the window hold `*`.
///
/// The window never begins or ends with `*`; the origin may lie outside it.
/// An all-blank tape has an empty window and origin 0.
class Tape {
 public:
  static constexpr char kBlank = '*';

  Tape() = default;
  Tape(std::string window, std::int64_t origin);

  /// Builds a tape from (position, symbol) pairs; later pairs override earlier.
  static Tape from_cells(std::span<const std::pair<std::int64_t, char>> cells);

  char at(std::int64_t position) const;
  Tape with(std::int64_t position, char symbol) const;
  /// Head sees the cell previously at position -1 (t_i = s_{i-1}).
  Tape shifted_right() const;
  /// Head sees the cell previously at position +1 (t_i = s_{i+1}).
  Tape shifted_left() const;

  const std::string& window() const { return window_; }
  std::int64_t origin() const { return origin_; }
  bool blank() const { return window_.empty(); }

  /// Literal form: `1^01` puts position 0 at the `0`; bare `101` means the
  /// leftmost cell; the all-blank tape prints as `*`.
  std::string str() const;

  friend bool operator==(const Tape&, const Tape&) = default;

 private:
  void normalize();
  std::string window_;
  std::int64_t origin_ = 0;
};

/// Parses a tape literal over {0,1,*} with an optional `^` before position 0.
Tape parse_tape(std::string_view literal);

using Config = std::variant<Tape, Environment>;

std::string config_str(const Config& c);
bool operator==(const Config& a, const Config& b);

using PartialMap = std::function<std::optional<Config>(const Config&)>;

/// Instruction symbols with partial-endomorphism semantics over one
/// configuration space. Words over the instructions act left to right.
class ModelOfComputation {
 public:
  ModelOfComputation(std::string name, std::string space);

  void add_instruction(std::string symbol, PartialMap semantics);
  /// Declares two instructions to have disjoint domains of definition.
  void declare_disjoint(const std::string& a, const std::string& b);

  const std::string& name() const { return name_; }
  const std::string& space() const { return space_; }
  const std::vector<std::string>& instructions() const { return order_; }
  bool has(std::string_view symbol) const;
  bool disjoint(const std::string& a, const std::string& b) const;

  /// Undefined is std::nullopt. Throws UnknownInstruction.
  std::optional<Config> apply(std::string_view symbol, const Config& x) const;
  std::optional<Config> apply_word(std::span<const std::string> word, const Config& x) const;

 private:
  std::string name_;
  std::string space_;
  std::vector<std::string> order_;
  std::map<std::string, PartialMap, std::less<>> semantics_;
  std::vector<std::pair<std::string, std::string>> disjoint_;
};

/// Instruction symbols of the Turing-machine model.
namespace tm {
inline constexpr std::string_view kRight = "right";
inline constexpr std::string_view kLeft = "left";
std::string write(char symbol);  // "write_0", "write_1", "write_*"
std::string read(char symbol);   // "read_0", "read_1", "read_*"
}  // namespace tm

/// The eight-instruction one-tape Turing-machine model named "tm".
const ModelOfComputation& tm_model();

}  // namespace algoglue
