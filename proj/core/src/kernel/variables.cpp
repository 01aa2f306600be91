#include "egv/kernel/variables.hpp"

#include <unordered_set>

#include "egv/errors.hpp"

namespace egv {

VariableTable::Builder& VariableTable::Builder::add(std::string name, int degree, Parity parity) {
  if (degree <= 0) {
    throw UsageError("variable '" + name + "' must have positive degree");
  }
  if (parity == Parity::kEven && degree % 2 != 0) {
    throw UsageError("even variable '" + name + "' must have even degree");
  }
  if (parity == Parity::kOdd && degree % 2 == 0) {
    throw UsageError("odd variable '" + name + "' must have odd degree");
  }
  vars_.push_back(Variable{std::move(name), degree, parity});
  return *this;
}

std::shared_ptr<const VariableTable> VariableTable::Builder::build() const {
  if (vars_.size() > kMaxVariables) {
    throw UsageError("too many variables: " + std::to_string(vars_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v.name).second) {
      throw UsageError("duplicate variable name '" + v.name + "'");
    }
  }
  return std::shared_ptr<const VariableTable>(new VariableTable(vars_));
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UsageError("unknown variable '" + std::string(name) + "'");
  return *i;
}

bool VariableTable::same_as(const VariableTable& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = other.vars_[i];
    if (a.name != b.name || a.degree != b.degree || a.parity != b.parity) return false;
  }
  return true;
}

}  // namespace egv
