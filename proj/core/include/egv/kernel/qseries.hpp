#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>

#include "egv/kernel/graded.hpp"

namespace egv {

/// Truncated Puiseux series Σ a_n q^{n/8} with GradedElement coefficients.
///
/// Exponents and order_cap are stored in eighths of a power of q. Coefficients
/// at exponents up to and including order_cap are known; nothing beyond it is
/// stored.
class QSeries {
 public:
  static constexpr int kDenom = 8;

  QSeries() = default;
  /// Zero series. `order_cap` counts eighths.
  QSeries(TablePtr table, int degree_cap, int order_cap);

  /// Convenience: zero series truncated at q^{whole_order}.
  static QSeries zero_whole(TablePtr table, int degree_cap, int whole_order) {
    return QSeries(std::move(table), degree_cap, whole_order * kDenom);
  }
  static QSeries constant(const GradedElement& c, int order_cap);
  static QSeries constant(TablePtr table, int degree_cap, int order_cap, const Rational& c);
  /// c·q^{exp8/8}.
  static QSeries monomial(const GradedElement& c, int exp8, int order_cap);

  const TablePtr& table() const { return table_; }
  int degree_cap() const { return degree_cap_; }
  int order_cap() const { return order_cap_; }
  const std::map<int, GradedElement>& coeffs() const { return coeffs_; }

  /// Coefficient of q^{exp8/8}; zero when absent. Throws past the order cap.
  GradedElement coeff(int exp8) const;
  /// Coefficient of q^n for integer n.
  GradedElement coeff_whole(int n) const { return coeff(n * kDenom); }
  void set(int exp8, GradedElement c);
  bool is_zero() const { return coeffs_.empty(); }
  /// Smallest exponent with a nonzero coefficient; order_cap + 1 if zero.
  int valuation() const;
  bool has_fractional_exponents() const;

  GradedElement zero_coeff() const { return GradedElement(table_, degree_cap_); }

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  /// Multiplies every coefficient by a q-independent element.
  friend QSeries operator*(const QSeries& a, const GradedElement& g);
  friend QSeries operator*(const GradedElement& g, const QSeries& a) { return a * g; }

  /// Equality up to the smaller order cap.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  QSeries with_order_cap(int order_cap) const;
  QSeries with_degree_cap(int degree_cap) const;
  /// Multiplies by q^{shift8/8}; the order cap moves with it.
  QSeries shifted(int shift8) const;
  QSeries map_coeffs(const std::function<GradedElement(const GradedElement&)>& fn) const;

  std::string to_string() const;
  std::complex<double> eval(const std::map<std::string, std::complex<double>>& assignment,
                            std::complex<double> q) const;

 private:
  void check_compatible(const QSeries& o, const char* op) const;

  TablePtr table_;
  int degree_cap_ = 0;
  int order_cap_ = 0;
  std::map<int, GradedElement> coeffs_;
};

QSeries series_mul(const QSeries& f, const QSeries& g);
QSeries series_inv(const QSeries& f);
/// exp(f) for f whose constant-in-q coefficient is nilpotent and with no
/// negative exponents.
QSeries series_exp(const QSeries& f);
/// log(f) for f with valuation 0 whose q^0 coefficient is 1 + nilpotent.
QSeries series_log(const QSeries& f);
QSeries series_pow(const QSeries& f, unsigned n);

/// Numeric evaluation of a graded element or series.
std::complex<double> eval_numeric(const GradedElement& a,
                                  const std::map<std::string, std::complex<double>>& assignment);
std::complex<double> eval_numeric(const QSeries& f,
                                  const std::map<std::string, std::complex<double>>& assignment,
                                  std::complex<double> q);

}  // namespace egv
