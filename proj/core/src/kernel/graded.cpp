#include "egv/kernel/graded.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "egv/errors.hpp"

namespace egv {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  static_assert(sizeof(Monomial) % sizeof(std::uint64_t) == 0);
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < sizeof(Monomial); i += sizeof(std::uint64_t)) {
    std::uint64_t w;
    std::memcpy(&w, m.data() + i, sizeof w);
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

int monomial_degree(const VariableTable& table, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < table.size(); ++i) d += m[i] * table[i].degree;
  return d;
}

int odd_count(const VariableTable& table, const Monomial& m) {
  int n = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].parity == Parity::kOdd) n += m[i];
  }
  return n;
}

namespace {

bool term_less(const GradedElement::Term& a, const GradedElement::Term& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.mono < b.mono;
}

}  // namespace

GradedElement::GradedElement(TablePtr table, int degree_cap)
    : table_(std::move(table)), cap_(degree_cap) {
  if (!table_) throw UsageError("GradedElement needs a variable table");
  if (cap_ < 0) throw UsageError("degree cap must be nonnegative");
}

GradedElement GradedElement::constant(TablePtr table, int degree_cap, const Rational& c) {
  GradedElement e(std::move(table), degree_cap);
  if (c != 0) e.terms_.push_back(Term{Monomial{}, 0, c});
  return e;
}

GradedElement GradedElement::variable(TablePtr table, int degree_cap, std::string_view name,
                                      const Rational& c) {
  std::size_t idx = table->index(name);
  return variable(std::move(table), degree_cap, idx, c);
}

GradedElement GradedElement::variable(TablePtr table, int degree_cap, std::size_t index,
                                      const Rational& c) {
  if (index >= table->size()) throw UsageError("variable index out of range");
  Monomial m{};
  m[index] = 1;
  return from_monomial(std::move(table), degree_cap, m, c);
}

GradedElement GradedElement::from_monomial(TablePtr table, int degree_cap, const Monomial& m,
                                           const Rational& c) {
  GradedElement e(std::move(table), degree_cap);
  int d = monomial_degree(*e.table_, m);
  if (c != 0 && d <= degree_cap && odd_count(*e.table_, m) <= 1) {
    e.terms_.push_back(Term{m, d, c});
  }
  return e;
}

void GradedElement::check_compatible(const GradedElement& o, const char* op) const {
  if (!table_ || !o.table_) throw UsageError(std::string(op) + ": uninitialized element");
  if (!table_->same_as(*o.table_)) {
    throw UsageError(std::string(op) + ": elements use different variable tables");
  }
  if (cap_ != o.cap_) {
    throw UsageError(std::string(op) + ": degree caps differ (" + std::to_string(cap_) + " vs " +
                     std::to_string(o.cap_) + ")");
  }
}

Rational GradedElement::constant_term() const {
  if (!terms_.empty() && terms_[0].degree == 0) return terms_[0].coeff;
  return 0;
}

Rational GradedElement::coefficient(const Monomial& m) const {
  if (!table_) return 0;
  Term key{m, monomial_degree(*table_, m), 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int GradedElement::min_degree() const { return terms_.empty() ? cap_ + 1 : terms_.front().degree; }

int GradedElement::max_degree() const { return terms_.empty() ? -1 : terms_.back().degree; }

int GradedElement::max_exponent(std::size_t index) const {
  int m = 0;
  for (const auto& t : terms_) m = std::max<int>(m, t.mono[index]);
  return m;
}

GradedElement GradedElement::operator-() const {
  GradedElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  check_compatible(o, "add");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_less(*b, *a)) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) out.push_back(Term{a->mono, a->degree, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) { return *this += -o; }

GradedElement& GradedElement::operator*=(const GradedElement& o) {
  *this = *this * o;
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  a.check_compatible(b, "multiply");
  if (a.is_zero() || b.is_zero()) return GradedElement(a.table_, a.cap_);
  if (a.is_constant()) return b * a.terms_[0].coeff;
  if (b.is_constant()) return a * b.terms_[0].coeff;
  TermAccumulator acc(a.table_, a.cap_);
  acc.add_product(a, b);
  return acc.finish();
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  a.check_compatible(b, "compare");
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

GradedElement GradedElement::with_cap(int cap) const {
  GradedElement r(table_, cap);
  for (const auto& t : terms_) {
    if (t.degree <= cap) r.terms_.push_back(t);
  }
  return r;
}

GradedElement GradedElement::map_terms(const std::function<GradedElement(const Term&)>& fn) const {
  TermAccumulator acc(table_, cap_);
  for (const auto& t : terms_) acc.add(fn(t));
  return acc.finish();
}

GradedElement GradedElement::filter(const std::function<bool(const Term&)>& keep) const {
  GradedElement r(table_, cap_);
  for (const auto& t : terms_) {
    if (keep(t)) r.terms_.push_back(t);
  }
  return r;
}

void GradedElement::normalize_sorted() { std::sort(terms_.begin(), terms_.end(), term_less); }

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_vars = t.degree > 0 || t.mono != Monomial{};
    bool unit = (c == 1);
    if (!unit || !has_vars) os << c.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < table_->size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) os << "*";
      os << (*table_)[i].name;
      if (t.mono[i] > 1) os << "^" << static_cast<int>(t.mono[i]);
      need_star = true;
    }
  }
  return os.str();
}

std::complex<double> GradedElement::eval(
    const std::map<std::string, std::complex<double>>& assignment) const {
  std::vector<std::complex<double>> values(table_->size());
  std::vector<bool> have(table_->size(), false);
  for (std::size_t i = 0; i < table_->size(); ++i) {
    auto it = assignment.find((*table_)[i].name);
    if (it != assignment.end()) {
      values[i] = it->second;
      have[i] = true;
    }
  }
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coeff.get_d();
    for (std::size_t i = 0; i < table_->size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!have[i]) {
        throw UsageError("eval: no value assigned to variable '" + (*table_)[i].name + "'");
      }
      v *= std::pow(values[i], static_cast<int>(t.mono[i]));
    }
    sum += v;
  }
  return sum;
}

TermAccumulator::TermAccumulator(TablePtr table, int degree_cap)
    : table_(std::move(table)), cap_(degree_cap), odd_(table_->size()) {
  for (std::size_t i = 0; i < table_->size(); ++i) {
    odd_[i] = (*table_)[i].parity == Parity::kOdd;
  }
}

void TermAccumulator::add_term(const Monomial& m, int degree, const Rational& c) {
  if (degree > cap_ || c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, degree, c);
  if (!inserted) it->second.second += c;
}

void TermAccumulator::add(const GradedElement& a, const Rational& scale) {
  if (!a.table_->same_as(*table_)) throw UsageError("accumulate: variable tables differ");
  for (const auto& t : a.terms()) add_term(t.mono, t.degree, t.coeff * scale);
}

void TermAccumulator::add_product(const GradedElement& a, const GradedElement& b) {
  if (!a.table_->same_as(*table_) || !b.table_->same_as(*table_)) {
    throw UsageError("accumulate: variable tables differ");
  }
  const std::size_t n = table_->size();
  // Terms are sorted by degree, so the inner loop can stop at the first
  // partner that overshoots the cap.
  Monomial m;
  Rational prod;
  for (const auto& ta : a.terms()) {
    if (ta.degree + b.min_degree() > cap_) break;
    bool a_odd = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (odd_[i] && ta.mono[i]) a_odd = true;
    }
    for (const auto& tb : b.terms()) {
      int d = ta.degree + tb.degree;
      if (d > cap_) break;
      bool skip = false;
      for (std::size_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint8_t>(ta.mono[i] + tb.mono[i]);
        if (odd_[i] && tb.mono[i] && a_odd) skip = true;
      }
      if (skip) continue;
      for (std::size_t i = n; i < kMaxVariables; ++i) m[i] = 0;
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto [it, inserted] = acc_.try_emplace(m, d, prod);
      if (!inserted) it->second.second += prod;
    }
  }
}

GradedElement TermAccumulator::finish() {
  GradedElement r(table_, cap_);
  r.terms_.reserve(acc_.size());
  for (auto& [m, dc] : acc_) {
    if (dc.second != 0) r.terms_.push_back(GradedElement::Term{m, dc.first, std::move(dc.second)});
  }
  acc_.clear();
  r.normalize_sorted();
  return r;
}

GradedElement ring_mul(const GradedElement& a, const GradedElement& b) { return a * b; }

GradedElement degree_part(const GradedElement& a, int d) {
  return a.filter([d](const GradedElement::Term& t) { return t.degree == d; });
}

GradedElement pow(const GradedElement& a, unsigned n) {
  GradedElement result = GradedElement::constant(a.table(), a.degree_cap(), 1);
  GradedElement base = a;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

GradedElement apply_series(const std::vector<Rational>& coeffs, const GradedElement& x) {
  GradedElement result(x.table(), x.degree_cap());
  GradedElement p = GradedElement::constant(x.table(), x.degree_cap(), 1);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (p.is_zero()) break;
    if (coeffs[n] != 0) result += p * coeffs[n];
    if (n + 1 < coeffs.size()) p = p * x;
  }
  return result;
}

namespace {

// Number of powers of a nilpotent x that can be nonzero under the cap.
std::size_t nilpotent_length(const GradedElement& x) {
  if (x.is_zero()) return 1;
  int md = x.min_degree();
  return static_cast<std::size_t>(x.degree_cap() / md) + 1;
}

void require_nilpotent(const GradedElement& x, const char* what) {
  if (!x.is_zero() && x.min_degree() == 0) {
    throw UsageError(std::string(what) + ": argument has a nonzero constant part");
  }
}

}  // namespace

GradedElement exp_nilpotent(const GradedElement& x) {
  require_nilpotent(x, "exp");
  std::size_t len = nilpotent_length(x);
  std::vector<Rational> c(len);
  for (std::size_t n = 0; n < len; ++n) c[n] = Rational(1) / factorial(static_cast<unsigned>(n));
  return apply_series(c, x);
}

GradedElement inv_unit(const GradedElement& a) {
  Rational c = a.constant_term();
  if (c == 0) throw SingularityError("inverse of an element with zero constant term");
  GradedElement x = a - GradedElement::constant(a.table(), a.degree_cap(), c);
  x *= Rational(1) / c;
  std::size_t len = nilpotent_length(x);
  std::vector<Rational> coeffs(len);
  for (std::size_t n = 0; n < len; ++n) coeffs[n] = (n % 2 == 0 ? Rational(1) : Rational(-1)) / c;
  return apply_series(coeffs, x);
}

GradedElement log_unit(const GradedElement& a) {
  if (a.constant_term() != 1) throw UsageError("log: constant term must be 1");
  GradedElement x = a - GradedElement::constant(a.table(), a.degree_cap(), 1);
  std::size_t len = nilpotent_length(x);
  std::vector<Rational> coeffs(len);
  for (std::size_t n = 1; n < len; ++n) {
    coeffs[n] = (n % 2 == 1 ? Rational(1) : Rational(-1)) / Rational(static_cast<long>(n));
  }
  return apply_series(coeffs, x);
}

}  // namespace egv
