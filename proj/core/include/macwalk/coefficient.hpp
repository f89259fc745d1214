#pragma once

#include <map>
#include <optional>
#include <vector>

#include "macwalk/laurent.hpp"

namespace macwalk {

// A denominator factor 1 - c q^q_exp v^v_exps, normalized so that
// (q_exp, v_exps) is lexicographically positive.  Every denominator the walk
// expansions produce is an atom with c = 1 and q_exp >= 1.
struct Atom {
  Int q_exp = 0;
  IntVec v_exps;
  Rat c = 1;

  bool operator<(const Atom& o) const {
    if (q_exp != o.q_exp) return q_exp < o.q_exp;
    if (v_exps != o.v_exps) return v_exps < o.v_exps;
    return c < o.c;
  }
  bool operator==(const Atom& o) const {
    return q_exp == o.q_exp && v_exps == o.v_exps && c == o.c;
  }

  Laurent poly(int nvars) const;  // 1 - c q^q_exp v^v_exps
};

// Element of the fraction field of the scalar Laurent ring, kept as a
// numerator over a multiset of atomic factors.  Equality is decided by
// cross-multiplication; normalization is atom matching plus exact division
// attempts, never a general multivariate gcd.
class Coefficient {
 public:
  Coefficient() : nvars_(0), num_(0) {}
  explicit Coefficient(Laurent num) : nvars_(num.nvars()), num_(std::move(num)) {}

  static Coefficient zero(int nvars) { return Coefficient(Laurent::zero(nvars)); }
  static Coefficient one(int nvars) { return Coefficient(Laurent::one(nvars)); }

  int nvars() const { return nvars_; }
  bool is_zero() const { return num_.is_zero(); }
  const Laurent& numerator() const { return num_; }
  const std::map<Atom, int>& denominator() const { return den_; }
  Laurent denominator_expanded() const;

  // True when every denominator atom is 1 - q^j (t-monomial) with j >= 1.
  bool denominator_levels_positive() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient& operator+=(const Coefficient& o);
  bool equals(const Coefficient& o) const;

  Coefficient scaled(const Rat& c) const;
  // Multiply by c q^q_exp v^v_exps.
  Coefficient times_monomial(Int q_exp, const IntVec& v_exps, const Rat& c = Rat(1)) const;
  Coefficient times_laurent(const Laurent& p) const;
  // Divide by 1 - mono where mono = c q^q_exp v^v_exps; throws
  // ZeroDenominator when mono == 1.
  Coefficient over_one_minus_monomial(Int q_exp, IntVec v_exps, Rat c = Rat(1)) const;

  // Cancel denominator atoms against the numerator where the division is
  // exact.
  void normalize();

  // Substitutions; see XPolynomial::specialize for the pole rules.
  Coefficient substitute_q(const Rat& value) const;
  Coefficient substitute_v(int param, const Rat& v_value) const;

  std::optional<std::pair<IntVec, Rat>> as_monomial() const;

 private:
  void push_atom(Atom a, int mult);

  int nvars_;
  Laurent num_;
  std::map<Atom, int> den_;
};

}  // namespace macwalk
