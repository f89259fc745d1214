#include "macwalk/laurent.hpp"

#include <algorithm>

namespace macwalk {

Laurent Laurent::constant(int nvars, const Rat& c) {
  Laurent p(nvars);
  if (c != 0) p.terms_[IntVec(nvars, 0)] = c;
  return p;
}

Laurent Laurent::monomial(IntVec exps, const Rat& c) {
  Laurent p(static_cast<int>(exps.size()));
  if (c != 0) p.terms_[std::move(exps)] = c;
  return p;
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && is_zero_vec(terms_.begin()->first);
}

std::optional<std::pair<IntVec, Rat>> Laurent::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.begin()->second);
}

Rat Laurent::constant_term() const {
  auto it = terms_.find(IntVec(nvars_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

void Laurent::check_compat(const Laurent& o) const {
  if (nvars_ != o.nvars_) throw RankMismatch("Laurent variable count mismatch");
}

void Laurent::add_term(const IntVec& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_[exps] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_compat(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_compat(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check_compat(o);
  Laurent r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(add_vec(e1, e2), c1 * c2);
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Laurent Laurent::scaled(const Rat& c) const {
  Laurent r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
  return r;
}

Laurent Laurent::shifted(const IntVec& exps, const Rat& c) const {
  Laurent r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_[add_vec(e, exps)] = coef * c;
  return r;
}

Laurent Laurent::substitute(int var, const Rat& value) const {
  Laurent r(nvars_);
  for (const auto& [e, coef] : terms_) {
    const Int k = e[var];
    Rat factor(1);
    if (k != 0) {
      if (value == 0) {
        if (k < 0) throw PoleAtSpecialization("negative exponent at zero value");
        continue;  // term vanishes
      }
      Rat base = value;
      Int m = abs_int(k);
      for (Int t = 0; t < m; ++t) factor *= base;
      if (k < 0) factor = 1 / factor;
    }
    IntVec ne = e;
    ne[var] = 0;
    r.add_term(ne, coef * factor);
  }
  return r;
}

std::optional<Laurent> Laurent::exact_divide(const Laurent& f, const Laurent& d) {
  if (d.is_zero()) return std::nullopt;
  if (f.is_zero()) return Laurent::zero(f.nvars_);
  const int n = f.nvars_;
  if (n != d.nvars_) throw RankMismatch("Laurent variable count mismatch");

  // Componentwise support box of any exact quotient.
  IntVec flo(n), fhi(n), dlo(n), dhi(n);
  auto bounds = [n](const Terms& ts, IntVec& lo, IntVec& hi) {
    bool first = true;
    for (const auto& [e, c] : ts) {
      (void)c;
      for (int i = 0; i < n; ++i) {
        if (first || e[i] < lo[i]) lo[i] = e[i];
        if (first || e[i] > hi[i]) hi[i] = e[i];
      }
      first = false;
    }
  };
  bounds(f.terms_, flo, fhi);
  bounds(d.terms_, dlo, dhi);

  Laurent rem = f;
  Laurent quot(n);
  const auto& dlead = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    IntVec q = sub_vec(rlead.first, dlead.first);
    for (int i = 0; i < n; ++i)
      if (q[i] < flo[i] - dhi[i] || q[i] > fhi[i] - dlo[i]) return std::nullopt;
    const Rat c = rlead.second / dlead.second;
    quot.add_term(q, c);
    rem -= d.shifted(q, c);
  }
  return quot;
}

}  // namespace macwalk
