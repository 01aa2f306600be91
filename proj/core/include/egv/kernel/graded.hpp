#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "egv/kernel/rational.hpp"
#include "egv/kernel/variables.hpp"

namespace egv {

using Monomial = std::array<std::uint8_t, kMaxVariables>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Weighted degree of `m` under `table`.
int monomial_degree(const VariableTable& table, const Monomial& m);
/// Number of odd-variable factors in `m` (counted with exponent).
int odd_count(const VariableTable& table, const Monomial& m);

/// Truncated polynomial over Q in the variables of a VariableTable.
///
/// Terms are kept sorted by (degree, monomial) with no zero coefficients, so
/// equality is structural. Anything above degree_cap is dropped on creation.
class GradedElement {
 public:
  struct Term {
    Monomial mono{};
    int degree = 0;
    Rational coeff;
  };

  GradedElement() = default;
  GradedElement(TablePtr table, int degree_cap);

  static GradedElement constant(TablePtr table, int degree_cap, const Rational& c);
  static GradedElement variable(TablePtr table, int degree_cap, std::string_view name,
                                const Rational& c = 1);
  static GradedElement variable(TablePtr table, int degree_cap, std::size_t index,
                                const Rational& c = 1);
  static GradedElement from_monomial(TablePtr table, int degree_cap, const Monomial& m,
                                     const Rational& c);

  const TablePtr& table() const { return table_; }
  int degree_cap() const { return cap_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool valid() const { return table_ != nullptr; }

  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Lowest degree of a stored term; degree_cap + 1 when zero.
  int min_degree() const;
  int max_degree() const;
  /// Largest exponent of variable `index` over all terms.
  int max_exponent(std::size_t index) const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0); }
  bool is_nilpotent() const { return min_degree() > 0; }

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const GradedElement& o);
  GradedElement& operator*=(const Rational& c);

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }
  friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
  friend bool operator==(const GradedElement& a, const GradedElement& b);
  friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

  /// Same terms, new cap. Terms above a lowered cap are dropped.
  GradedElement with_cap(int cap) const;

  /// Applies `fn` to every term; `fn` returns the replacement element (over the
  /// same table and cap) or a zero element to delete it.
  GradedElement map_terms(const std::function<GradedElement(const Term&)>& fn) const;
  /// Keeps the terms for which `keep` is true.
  GradedElement filter(const std::function<bool(const Term&)>& keep) const;

  std::string to_string() const;

  /// Evaluates at complex values; every variable occurring must be assigned.
  std::complex<double> eval(const std::map<std::string, std::complex<double>>& assignment) const;

 private:
  friend class TermAccumulator;
  void check_compatible(const GradedElement& o, const char* op) const;
  void normalize_sorted();

  TablePtr table_;
  int cap_ = 0;
  std::vector<Term> terms_;
};

/// Hash-map sink for sums of products. Used by every multiplication path so
/// that intermediate sums are not re-sorted after each addition.
class TermAccumulator {
 public:
  TermAccumulator(TablePtr table, int degree_cap);
  void add(const GradedElement& a, const Rational& scale = 1);
  void add_product(const GradedElement& a, const GradedElement& b);
  void add_term(const Monomial& m, int degree, const Rational& c);
  GradedElement finish();

 private:
  TablePtr table_;
  int cap_;
  std::vector<bool> odd_;
  std::unordered_map<Monomial, std::pair<int, Rational>, MonomialHash> acc_;
};

GradedElement ring_mul(const GradedElement& a, const GradedElement& b);
GradedElement degree_part(const GradedElement& a, int d);
GradedElement pow(const GradedElement& a, unsigned n);

/// Σ c_n x^n, truncated by the cap. Requires x nilpotent unless `coeffs` is
/// finite; evaluation stops once x^n vanishes.
GradedElement apply_series(const std::vector<Rational>& coeffs, const GradedElement& x);
/// exp of a nilpotent element (finite sum).
GradedElement exp_nilpotent(const GradedElement& x);
/// 1/a for a = c + nilpotent with c ≠ 0.
GradedElement inv_unit(const GradedElement& a);
/// log(a) for a = 1 + nilpotent.
GradedElement log_unit(const GradedElement& a);

}  // namespace egv
