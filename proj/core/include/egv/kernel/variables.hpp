#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egv {

enum class Parity { kEven, kOdd };

struct Variable {
  std::string name;
  int degree = 2;
  Parity parity = Parity::kEven;
};

/// Maximum number of formal variables a single table may hold. Exponent
/// vectors are fixed-size arrays of this length.
inline constexpr std::size_t kMaxVariables = 48;

/// Ordered, immutable list of formal variables shared by every element built
/// over it.
///
/// Even variables carry even degree. Odd variables carry odd degree and form a
/// square-zero ideal: any product of two odd variables vanishes. This models
/// transgressed (odd) characteristic classes, which only ever enter linearly.
class VariableTable {
 public:
  class Builder {
   public:
    Builder& add(std::string name, int degree, Parity parity = Parity::kEven);
    Builder& add_even(std::string name, int degree = 2) {
      return add(std::move(name), degree, Parity::kEven);
    }
    Builder& add_odd(std::string name, int degree) {
      return add(std::move(name), degree, Parity::kOdd);
    }
    std::shared_ptr<const VariableTable> build() const;

   private:
    std::vector<Variable> vars_;
  };

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Index of `name`; throws UsageError when absent.
  std::size_t index(std::string_view name) const;

  bool same_as(const VariableTable& other) const;

 private:
  explicit VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {}
  std::vector<Variable> vars_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

}  // namespace egv
