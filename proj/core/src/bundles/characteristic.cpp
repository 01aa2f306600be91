#include "egv/bundles/bundles.hpp"
#include "egv/errors.hpp"
#include "egv/theta/theta.hpp"

namespace egv {

RootBundle RootBundle::trivial(TablePtr table, int degree_cap, int rank) {
  RootBundle b(std::move(table), degree_cap);
  b.rank_offset_ = rank;
  return b;
}

RootBundle RootBundle::real_from_pairs(const std::vector<GradedElement>& pairs, int zero_roots) {
  if (pairs.empty()) throw UsageError("real_from_pairs needs at least one root to fix the table");
  RootBundle b(pairs.front().table(), pairs.front().degree_cap());
  for (const auto& w : pairs) {
    b.roots_.push_back({w, 1});
    b.roots_.push_back({-w, 1});
  }
  b.rank_offset_ = zero_roots;
  b.recompute_real_type();
  if (!b.real_type_) throw UsageError("real_from_pairs: roots are not in ± pairs");
  return b;
}

RootBundle RootBundle::real_from_variables(TablePtr table, int degree_cap,
                                           const std::vector<std::string>& names, int zero_roots) {
  if (names.empty()) return trivial(std::move(table), degree_cap, zero_roots);
  std::vector<GradedElement> ws;
  for (const auto& n : names) ws.push_back(GradedElement::variable(table, degree_cap, n));
  return real_from_pairs(ws, zero_roots);
}

RootBundle& RootBundle::add_root(const GradedElement& w, int multiplicity) {
  if (!table_) {
    table_ = w.table();
    cap_ = w.degree_cap();
  }
  if (!w.table()->same_as(*table_) || w.degree_cap() != cap_) {
    throw UsageError("add_root: root does not match the bundle table/cap");
  }
  if (w.max_degree() > 2) throw UsageError("add_root: roots must have degree at most 2");
  if (w.constant_term() != 0) throw UsageError("add_root: roots must have no constant part");
  if (multiplicity != 0) roots_.push_back({w, multiplicity});
  recompute_real_type();
  return *this;
}

int RootBundle::rank() const {
  int r = rank_offset_;
  for (const auto& root : roots_) r += root.multiplicity;
  return r;
}

void RootBundle::recompute_real_type() {
  // Net multiplicity of w must equal that of −w; zero roots are self-paired.
  std::vector<std::pair<GradedElement, int>> net;
  for (const auto& r : roots_) {
    bool found = false;
    for (auto& [w, m] : net) {
      if (w == r.root) {
        m += r.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) net.emplace_back(r.root, r.multiplicity);
  }
  real_type_ = true;
  for (const auto& [w, m] : net) {
    if (w.is_zero() || m == 0) continue;
    GradedElement neg = -w;
    int mneg = 0;
    for (const auto& [w2, m2] : net) {
      if (w2 == neg) mneg = m2;
    }
    if (mneg != m) {
      real_type_ = false;
      return;
    }
  }
}

std::vector<RootBundle::Root> RootBundle::pair_representatives() const {
  if (!real_type_) throw UsageError("pair_representatives: bundle is not real-type");
  // Roots that are zero elements (e.g. truncated away by a small cap) still
  // count: two of them form a ± pair.
  std::vector<Root> net;
  int zero_mult = 0;
  for (const auto& r : roots_) {
    if (r.root.is_zero()) {
      zero_mult += r.multiplicity;
      continue;
    }
    bool found = false;
    for (auto& n : net) {
      if (n.root == r.root) {
        n.multiplicity += r.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) net.push_back(r);
  }
  std::vector<Root> reps;
  std::vector<bool> used(net.size(), false);
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (used[i] || net[i].multiplicity == 0) continue;
    GradedElement neg = -net[i].root;
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      if (!used[j] && net[j].root == neg) {
        used[j] = true;
        break;
      }
    }
    used[i] = true;
    reps.push_back(net[i]);
  }
  if (zero_mult / 2 != 0) reps.push_back({GradedElement(table_, cap_), zero_mult / 2});
  return reps;
}

RootBundle RootBundle::tilde() const {
  RootBundle b = *this;
  b.rank_offset_ -= rank();
  return b;
}

RootBundle RootBundle::dual() const {
  RootBundle b = *this;
  for (auto& r : b.roots_) r.root = -r.root;
  return b;
}

void RootBundle::check_compatible(const RootBundle& o) const {
  if (!table_ || !o.table_) throw UsageError("RootBundle: uninitialized bundle");
  if (!table_->same_as(*o.table_) || cap_ != o.cap_) {
    throw UsageError("RootBundle: bundles use different tables or caps");
  }
}

RootBundle operator+(const RootBundle& a, const RootBundle& b) {
  a.check_compatible(b);
  RootBundle r = a;
  r.roots_.insert(r.roots_.end(), b.roots_.begin(), b.roots_.end());
  r.rank_offset_ += b.rank_offset_;
  r.recompute_real_type();
  return r;
}

RootBundle operator*(int n, const RootBundle& a) {
  RootBundle r = a;
  for (auto& root : r.roots_) root.multiplicity *= n;
  r.rank_offset_ *= n;
  return r;
}

RootBundle operator-(const RootBundle& a, const RootBundle& b) { return a + (-1) * b; }

RootBundle tensor(const RootBundle& a, const RootBundle& b) {
  a.check_compatible(b);
  RootBundle r(a.table_, a.cap_);
  for (const auto& ra : a.roots_) {
    for (const auto& rb : b.roots_) r.roots_.push_back({ra.root + rb.root, ra.multiplicity * rb.multiplicity});
  }
  if (b.rank_offset_ != 0) {
    for (const auto& ra : a.roots_) r.roots_.push_back({ra.root, ra.multiplicity * b.rank_offset_});
  }
  if (a.rank_offset_ != 0) {
    for (const auto& rb : b.roots_) r.roots_.push_back({rb.root, rb.multiplicity * a.rank_offset_});
  }
  r.rank_offset_ = a.rank_offset_ * b.rank_offset_;
  r.recompute_real_type();
  return r;
}

GradedElement ch(const RootBundle& b) {
  TermAccumulator acc(b.table(), b.degree_cap());
  acc.add(GradedElement::constant(b.table(), b.degree_cap(), b.rank_offset()));
  for (const auto& r : b.roots()) acc.add(exp_nilpotent(r.root), Rational(r.multiplicity));
  return acc.finish();
}

namespace {

GradedElement signed_power(const GradedElement& x, int m) {
  GradedElement p = pow(x, static_cast<unsigned>(m < 0 ? -m : m));
  return m < 0 ? inv_unit(p) : p;
}

GradedElement pair_product(const RootBundle& tm, GradedElement (*per_pair)(const GradedElement&)) {
  GradedElement result = GradedElement::constant(tm.table(), tm.degree_cap(), 1);
  for (const auto& r : tm.pair_representatives()) result *= signed_power(per_pair(r.root), r.multiplicity);
  return result;
}

GradedElement lhat_factor(const GradedElement& w) {
  return half_sinh_quotient(w) * half_cosh(w) * Rational(2);
}

GradedElement spinor_factor(const GradedElement& w) { return half_cosh(w) * Rational(2); }

}  // namespace

GradedElement ahat(const RootBundle& tm) { return pair_product(tm, &half_sinh_quotient); }

GradedElement lhat(const RootBundle& tm) { return pair_product(tm, &lhat_factor); }

GradedElement spinor_ch(const RootBundle& b) { return pair_product(b, &spinor_factor); }

}  // namespace egv
