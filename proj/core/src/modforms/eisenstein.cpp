#include "egv/errors.hpp"
#include "egv/modforms/modforms.hpp"

namespace egv {

TablePtr scalar_table() {
  static const TablePtr t = VariableTable::Builder{}.build();
  return t;
}

Integer divisor_sigma(unsigned k, unsigned n) {
  Integer s = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, k);
    s += p;
  }
  return s;
}

namespace {

Rational bernoulli(int k) {
  switch (k) {
    case 2: return make_rational(1, 6);
    case 4: return make_rational(-1, 30);
    case 6: return make_rational(1, 42);
  }
  throw UsageError("eisenstein: weight must be 2, 4 or 6");
}

}  // namespace

QSeries eisenstein(int k, int N, TablePtr table, int degree_cap) {
  if (N < 0) throw UsageError("eisenstein: N must be nonnegative");
  Rational scale = -Rational(2 * k) / bernoulli(k);
  QSeries s = QSeries::constant(table, degree_cap, N * QSeries::kDenom, 1);
  for (int n = 1; n <= N; ++n) {
    Rational c = scale * Rational(divisor_sigma(static_cast<unsigned>(k - 1), static_cast<unsigned>(n)));
    s.set(n * QSeries::kDenom, GradedElement::constant(table, degree_cap, c));
  }
  return s;
}

QSeries eisenstein(int k, int N) { return eisenstein(k, N, scalar_table(), 0); }

std::string EisensteinBasis::label(std::size_t i) const {
  auto [a, b] = monomials.at(i);
  std::string s;
  auto part = [&s](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part("E4", a);
  part("E6", b);
  return s.empty() ? "1" : s;
}

int modular_dimension(int weight) {
  if (weight < 0 || weight % 2 != 0) return 0;
  if (weight % 12 == 2) return weight / 12;
  return weight / 12 + 1;
}

EisensteinBasis basis(int weight, int N, TablePtr table, int degree_cap) {
  if (weight % 2 != 0 || weight < 4) {
    throw UsageError("basis: weight must be even and at least 4, got " + std::to_string(weight));
  }
  EisensteinBasis b;
  b.weight = weight;
  QSeries e4 = eisenstein(4, N, table, degree_cap);
  QSeries e6 = eisenstein(6, N, table, degree_cap);
  for (int a = weight / 4; a >= 0; --a) {
    int rest = weight - 4 * a;
    if (rest % 6 != 0) continue;
    int c = rest / 6;
    b.monomials.emplace_back(a, c);
    b.series.push_back(series_pow(e4, static_cast<unsigned>(a)) * series_pow(e6, static_cast<unsigned>(c)));
  }
  return b;
}

EisensteinBasis basis(int weight, int N) { return basis(weight, N, scalar_table(), 0); }

}  // namespace egv
