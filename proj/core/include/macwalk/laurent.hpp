#pragma once

#include <map>
#include <optional>
#include <vector>

#include "macwalk/errors.hpp"
#include "macwalk/numeric.hpp"

namespace macwalk {

// Sparse Laurent polynomial over Q with integer exponent vectors.  Used both
// for scalar coefficients (variables q, v_1, .., v_k) and, via the generic
// exponent key, for polynomials in the X-monomials.
class Laurent {
 public:
  using Terms = std::map<IntVec, Rat>;

  Laurent() : nvars_(0) {}
  explicit Laurent(int nvars) : nvars_(nvars) {}

  static Laurent zero(int nvars) { return Laurent(nvars); }
  static Laurent constant(int nvars, const Rat& c);
  static Laurent monomial(IntVec exps, const Rat& c);
  static Laurent one(int nvars) { return constant(nvars, Rat(1)); }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  bool is_constant() const;
  // nullopt unless the polynomial is a single term.
  std::optional<std::pair<IntVec, Rat>> as_monomial() const;
  Rat constant_term() const;

  void add_term(const IntVec& exps, const Rat& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  bool operator==(const Laurent& o) const;

  Laurent scaled(const Rat& c) const;
  Laurent shifted(const IntVec& exps, const Rat& c = Rat(1)) const;

  // Substitute a rational value for variable `var`; negative exponents
  // require value != 0.
  Laurent substitute(int var, const Rat& value) const;

  // Exact division; nullopt when d does not divide f.
  static std::optional<Laurent> exact_divide(const Laurent& f, const Laurent& d);

 private:
  void check_compat(const Laurent& o) const;

  int nvars_;
  Terms terms_;
};

}  // namespace macwalk
