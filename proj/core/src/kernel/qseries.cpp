#include "egv/kernel/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "egv/errors.hpp"

namespace egv {

QSeries::QSeries(TablePtr table, int degree_cap, int order_cap)
    : table_(std::move(table)), degree_cap_(degree_cap), order_cap_(order_cap) {
  if (!table_) throw UsageError("QSeries needs a variable table");
}

QSeries QSeries::constant(const GradedElement& c, int order_cap) {
  return monomial(c, 0, order_cap);
}

QSeries QSeries::constant(TablePtr table, int degree_cap, int order_cap, const Rational& c) {
  auto g = GradedElement::constant(table, degree_cap, c);
  return monomial(g, 0, order_cap);
}

QSeries QSeries::monomial(const GradedElement& c, int exp8, int order_cap) {
  QSeries s(c.table(), c.degree_cap(), order_cap);
  if (exp8 <= order_cap && !c.is_zero()) s.coeffs_.emplace(exp8, c);
  return s;
}

GradedElement QSeries::coeff(int exp8) const {
  if (exp8 > order_cap_) {
    throw UsageError("coefficient q^" + std::to_string(exp8) + "/8 beyond order cap " +
                     std::to_string(order_cap_) + "/8");
  }
  auto it = coeffs_.find(exp8);
  if (it == coeffs_.end()) return zero_coeff();
  return it->second;
}

void QSeries::set(int exp8, GradedElement c) {
  if (exp8 > order_cap_) return;
  if (!c.table()->same_as(*table_) || c.degree_cap() != degree_cap_) {
    throw UsageError("set: coefficient does not match the series table/cap");
  }
  if (c.is_zero()) {
    coeffs_.erase(exp8);
  } else {
    coeffs_[exp8] = std::move(c);
  }
}

int QSeries::valuation() const { return coeffs_.empty() ? order_cap_ + 1 : coeffs_.begin()->first; }

bool QSeries::has_fractional_exponents() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.first % kDenom != 0; });
}

void QSeries::check_compatible(const QSeries& o, const char* op) const {
  if (!table_ || !o.table_) throw UsageError(std::string(op) + ": uninitialized series");
  if (!table_->same_as(*o.table_)) {
    throw UsageError(std::string(op) + ": series use different variable tables");
  }
  if (degree_cap_ != o.degree_cap_) {
    throw UsageError(std::string(op) + ": series use different degree caps");
  }
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_compatible(o, "add");
  order_cap_ = std::min(order_cap_, o.order_cap_);
  coeffs_.erase(coeffs_.upper_bound(order_cap_), coeffs_.end());
  for (const auto& [e, c] : o.coeffs_) {
    if (e > order_cap_) break;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, g] : coeffs_) g *= c;
  return *this;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  f.check_compatible(g, "series_mul");
  int vf = std::min(f.valuation(), 0);
  int vg = std::min(g.valuation(), 0);
  int cap = std::min(f.order_cap_ + vg, g.order_cap_ + vf);
  QSeries r(f.table_, f.degree_cap_, cap);
  std::map<int, TermAccumulator> acc;
  for (const auto& [i, a] : f.coeffs_) {
    for (const auto& [j, b] : g.coeffs_) {
      if (i + j > cap) break;
      auto it = acc.find(i + j);
      if (it == acc.end()) it = acc.emplace(i + j, TermAccumulator(f.table_, f.degree_cap_)).first;
      it->second.add_product(a, b);
    }
  }
  for (auto& [e, a] : acc) r.set(e, a.finish());
  return r;
}

QSeries operator*(const QSeries& a, const GradedElement& g) {
  QSeries r(a.table_, a.degree_cap_, a.order_cap_);
  for (const auto& [e, c] : a.coeffs_) r.set(e, c * g);
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  a.check_compatible(b, "compare");
  int cap = std::min(a.order_cap_, b.order_cap_);
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  while (true) {
    bool ea = ia == a.coeffs_.end() || ia->first > cap;
    bool eb = ib == b.coeffs_.end() || ib->first > cap;
    if (ea || eb) return ea && eb;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

QSeries QSeries::with_order_cap(int order_cap) const {
  QSeries r(table_, degree_cap_, order_cap);
  for (const auto& [e, c] : coeffs_) {
    if (e > order_cap) break;
    r.coeffs_.emplace(e, c);
  }
  return r;
}

QSeries QSeries::with_degree_cap(int degree_cap) const {
  QSeries r(table_, degree_cap, order_cap_);
  for (const auto& [e, c] : coeffs_) r.set(e, c.with_cap(degree_cap));
  return r;
}

QSeries QSeries::shifted(int shift8) const {
  QSeries r(table_, degree_cap_, order_cap_ + shift8);
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + shift8, c);
  return r;
}

QSeries QSeries::map_coeffs(const std::function<GradedElement(const GradedElement&)>& fn) const {
  QSeries r(table_, degree_cap_, order_cap_);
  for (const auto& [e, c] : coeffs_) r.set(e, fn(c));
  return r;
}

std::string QSeries::to_string() const {
  if (coeffs_.empty()) return "0 + O(q^" + std::to_string(order_cap_ + 1) + "/8)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) {
      os << "*q^";
      if (e % kDenom == 0) {
        os << e / kDenom;
      } else {
        Rational r = make_rational(e, kDenom);
        os << "(" << r.get_str() << ")";
      }
    }
  }
  return os.str();
}

std::complex<double> QSeries::eval(const std::map<std::string, std::complex<double>>& assignment,
                                   std::complex<double> q) const {
  std::complex<double> sum = 0;
  std::complex<double> logq = std::log(q);
  for (const auto& [e, c] : coeffs_) {
    std::complex<double> qp = e == 0 ? 1.0 : std::exp(logq * (static_cast<double>(e) / kDenom));
    sum += c.eval(assignment) * qp;
  }
  return sum;
}

QSeries series_mul(const QSeries& f, const QSeries& g) { return f * g; }

QSeries series_inv(const QSeries& f) {
  if (f.is_zero()) throw SingularityError("series_inv: zero series");
  int v = f.valuation();
  QSeries h = f.shifted(-v);
  GradedElement g0 = inv_unit(h.coeff(0));
  int cap = h.order_cap();
  QSeries g(f.table(), f.degree_cap(), cap);
  g.set(0, g0);
  std::map<int, GradedElement> known{{0, g0}};
  for (int n = 1; n <= cap; ++n) {
    TermAccumulator acc(f.table(), f.degree_cap());
    bool any = false;
    for (const auto& [k, hk] : h.coeffs()) {
      if (k == 0) continue;
      if (k > n) break;
      auto it = known.find(n - k);
      if (it == known.end()) continue;
      acc.add_product(hk, it->second);
      any = true;
    }
    if (!any) continue;
    GradedElement gn = -(acc.finish() * g0);
    if (!gn.is_zero()) {
      known.emplace(n, gn);
      g.set(n, gn);
    }
  }
  return g.shifted(-v);
}

QSeries series_exp(const QSeries& f) {
  if (f.valuation() < 0) throw UsageError("series_exp: negative q-exponents");
  GradedElement f0 = f.coeff(0);
  if (!f0.is_zero() && f0.min_degree() == 0) {
    throw UsageError("series_exp: q^0 coefficient has a non-nilpotent constant part");
  }
  int cap = f.order_cap();
  std::map<int, GradedElement> g{{0, GradedElement::constant(f.table(), f.degree_cap(), 1)}};
  for (int n = 1; n <= cap; ++n) {
    TermAccumulator acc(f.table(), f.degree_cap());
    bool any = false;
    for (const auto& [k, fk] : f.coeffs()) {
      if (k == 0) continue;
      if (k > n) break;
      auto it = g.find(n - k);
      if (it == g.end()) continue;
      acc.add_product(fk * Rational(k), it->second);
      any = true;
    }
    if (!any) continue;
    GradedElement gn = acc.finish() * make_rational(1, n);
    if (!gn.is_zero()) g.emplace(n, std::move(gn));
  }
  QSeries r(f.table(), f.degree_cap(), cap);
  GradedElement e0 = exp_nilpotent(f0);
  for (auto& [n, c] : g) r.set(n, c * e0);
  return r;
}

QSeries series_log(const QSeries& f) {
  if (f.valuation() != 0) throw UsageError("series_log: valuation must be 0");
  GradedElement f0 = f.coeff(0);
  if (f0.constant_term() != 1) throw UsageError("series_log: q^0 coefficient must start with 1");
  GradedElement inv0 = inv_unit(f0);
  QSeries h = f * inv0;
  int cap = f.order_cap();
  QSeries l(f.table(), f.degree_cap(), cap);
  std::map<int, GradedElement> known;
  for (int n = 1; n <= cap; ++n) {
    TermAccumulator acc(f.table(), f.degree_cap());
    acc.add(h.coeff(n), Rational(n));
    for (const auto& [k, lk] : known) {
      if (k >= n) break;
      auto it = h.coeffs().find(n - k);
      if (it == h.coeffs().end()) continue;
      GradedElement scaled = lk * Rational(-k);
      acc.add_product(scaled, it->second);
    }
    GradedElement ln = acc.finish() * make_rational(1, n);
    if (!ln.is_zero()) {
      known.emplace(n, ln);
      l.set(n, ln);
    }
  }
  l.set(0, log_unit(f0));
  return l;
}

QSeries series_pow(const QSeries& f, unsigned n) {
  QSeries result = QSeries::constant(f.table(), f.degree_cap(), f.order_cap(), 1);
  QSeries base = f;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::complex<double> eval_numeric(const GradedElement& a,
                                  const std::map<std::string, std::complex<double>>& assignment) {
  return a.eval(assignment);
}

std::complex<double> eval_numeric(const QSeries& f,
                                  const std::map<std::string, std::complex<double>>& assignment,
                                  std::complex<double> q) {
  return f.eval(assignment, q);
}

}  // namespace egv
