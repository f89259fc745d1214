#pragma once

#include <utility>
#include <vector>

#include "macwalk/root_system.hpp"

namespace macwalk {

// X^mu w in the extended affine Weyl group; simultaneously an alcove on one
// of the |weight lattice / root lattice| sheets.
struct AffineElement {
  Weight mu;
  WeylElement w;

  bool operator==(const AffineElement& o) const { return mu == o.mu && w == o.w; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
};

// gamma-check + k d.  Stored raw; wall normalization flips the sign so the
// finite part is a positive coroot.
struct AffineCoroot {
  IntVec gamma;
  Int k = 0;

  bool operator==(const AffineCoroot& o) const { return gamma == o.gamma && k == o.k; }
};

// The hyperplane { x : <x, gamma> + k = 0 } with gamma a positive coroot.
// The positive side is { <x, gamma> + k > 0 }; for k = 0 it contains the
// fundamental alcove, and parallel walls are oriented the same way.
struct Wall {
  IntVec gamma;
  Int k = 0;

  bool operator==(const Wall& o) const { return gamma == o.gamma && k == o.k; }
};

enum class Side { plus, minus };

inline Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

struct AffineReducedWord {
  AffineElement g;          // length-zero part
  std::vector<int> word;    // letters in 0..n
};

// The extended affine Weyl group acting on weight space.  All side and
// length decisions go through an exact rational sample point
// x0 = rho / (1 + <theta-check, rho>) in the interior of the fundamental
// alcove; sample points are stored as integer vectors scaled by that
// denominator so the arithmetic stays in Int.
class AffineEngine {
 public:
  explicit AffineEngine(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  Int sample_denominator() const { return denom_; }

  AffineElement identity() const;
  AffineElement translation(const Weight& mu) const;
  // j = 0..n; s_0 = X^theta s_theta.
  AffineElement generator(int j) const;
  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;
  AffineElement right_multiply_generator(const AffineElement& a, int j) const;

  // X^mu w (gamma + k d) = w gamma + (k - <w gamma, mu>) d
  AffineCoroot act(const AffineElement& z, const AffineCoroot& beta) const;

  AffineCoroot simple_affine_coroot(int j) const;  // alpha_j-check, j = 0..n

  // Sample point of the alcove of z, scaled by sample_denominator().
  IntVec sample_point(const AffineElement& z) const;

  Side side_of_wall(const Wall& wall, const AffineElement& z) const;
  // The wall between z and z s_j, and the side z lies on.
  std::pair<Wall, Side> wall_of_step(const AffineElement& z, int j) const;

  Int length(const AffineElement& z) const;
  bool is_right_descent(const AffineElement& z, int j) const;

  // Descent-peeling from the right with smallest-index tie-break; the
  // leftover length-zero element is returned alongside the word.
  AffineReducedWord reduced_word(AffineElement z) const;

  // Minimal length element of the coset X^mu W0.
  AffineElement minimal_coset_rep(const Weight& mu) const;

  // beta_k = s_{i_l} ... s_{i_{k+1}} alpha_{i_k}, with beta_l = alpha_{i_l}.
  std::vector<AffineCoroot> beta_sequence(const std::vector<int>& word) const;

  bool word_is_reduced(const AffineElement& start, const std::vector<int>& word) const;

 private:
  const RootSystem* rs_;
  Int denom_;
  AffineElement s0_;
};

}  // namespace macwalk
