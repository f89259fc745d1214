#include "macwalk/affine.hpp"

#include <algorithm>

namespace macwalk {

AffineEngine::AffineEngine(const RootSystem& rs) : rs_(&rs) {
  denom_ = 1 + rs.pairing(rs.highest_coroot(), rs.rho());
  s0_ = AffineElement{rs.root_of_highest_coroot(), rs.theta_reflection()};
}

AffineElement AffineEngine::identity() const {
  return AffineElement{Weight(IntVec(rs_->rank(), 0)), WeylElement::identity(rs_->rank())};
}

AffineElement AffineEngine::translation(const Weight& mu) const {
  return AffineElement{mu, WeylElement::identity(rs_->rank())};
}

AffineElement AffineEngine::generator(int j) const {
  if (j == 0) return s0_;
  return AffineElement{Weight(IntVec(rs_->rank(), 0)), rs_->simple_reflection(j)};
}

AffineElement AffineEngine::multiply(const AffineElement& a, const AffineElement& b) const {
  return AffineElement{a.mu + a.w.apply(b.mu), a.w * b.w};
}

AffineElement AffineEngine::inverse(const AffineElement& a) const {
  WeylElement wi = a.w.inverse();
  return AffineElement{Weight(neg_vec(wi.apply(a.mu.c))), wi};
}

AffineElement AffineEngine::right_multiply_generator(const AffineElement& a, int j) const {
  if (j == 0) return multiply(a, s0_);
  return AffineElement{a.mu, a.w * rs_->simple_reflection(j)};
}

AffineCoroot AffineEngine::act(const AffineElement& z, const AffineCoroot& beta) const {
  IntVec g = z.w.apply_coroot(beta.gamma);
  const Int k = beta.k - rs_->pairing(g, z.mu);
  return AffineCoroot{std::move(g), k};
}

AffineCoroot AffineEngine::simple_affine_coroot(int j) const {
  if (j == 0) return AffineCoroot{neg_vec(rs_->highest_coroot()), 1};
  IntVec g(rs_->rank(), 0);
  g[j - 1] = 1;
  return AffineCoroot{std::move(g), 0};
}

IntVec AffineEngine::sample_point(const AffineElement& z) const {
  // denom * (mu + w x0) = denom * mu + w rho
  IntVec p = z.w.apply(rs_->rho().c);
  for (int i = 0; i < rs_->rank(); ++i) p[i] += denom_ * z.mu.c[i];
  return p;
}

Side AffineEngine::side_of_wall(const Wall& wall, const AffineElement& z) const {
  const IntVec p = sample_point(z);
  const Int v = dot_vec(wall.gamma, p) + denom_ * wall.k;
  if (v == 0) throw InvariantViolation("sample point on a wall");
  return v > 0 ? Side::plus : Side::minus;
}

std::pair<Wall, Side> AffineEngine::wall_of_step(const AffineElement& z, int j) const {
  AffineCoroot b = act(z, simple_affine_coroot(j));
  // Normalize so the finite part is a positive coroot.
  auto idx = rs_->coroot_index(b.gamma);
  if (!idx) throw InvariantViolation("wall label is not a coroot");
  Wall w;
  if (idx->second < 0) {
    w.gamma = neg_vec(b.gamma);
    w.k = -b.k;
  } else {
    w.gamma = b.gamma;
    w.k = b.k;
  }
  return {w, side_of_wall(w, z)};
}

Int AffineEngine::length(const AffineElement& z) const {
  // Walls separating the alcove of z from the fundamental alcove: for each
  // positive coroot the count is |floor(<p_z, gamma>)| since
  // <x0, gamma> lies in (0,1).
  const IntVec p = sample_point(z);
  Int len = 0;
  for (const auto& pr : rs_->positive_roots()) {
    const Int v = dot_vec(pr.coroot, p);
    if (v % denom_ == 0) throw InvariantViolation("sample point on a wall");
    len += abs_int(floor_div(v, denom_));
  }
  return len;
}

bool AffineEngine::is_right_descent(const AffineElement& z, int j) const {
  // The step wall separates z from the identity alcove exactly when the
  // length drops.  The identity sits on the + side iff the wall level k >= 0.
  auto [wall, side] = wall_of_step(z, j);
  const Side identity_side = wall.k >= 0 ? Side::plus : Side::minus;
  return side != identity_side;
}

AffineReducedWord AffineEngine::reduced_word(AffineElement z) const {
  std::vector<int> word;
  for (;;) {
    int desc = -1;
    for (int j = 0; j <= rs_->rank(); ++j) {
      if (is_right_descent(z, j)) { desc = j; break; }
    }
    if (desc < 0) break;
    word.push_back(desc);
    z = right_multiply_generator(z, desc);
  }
  std::reverse(word.begin(), word.end());
  return AffineReducedWord{z, std::move(word)};
}

AffineElement AffineEngine::minimal_coset_rep(const Weight& mu) const {
  AffineElement z = translation(mu);
  for (;;) {
    int desc = -1;
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (is_right_descent(z, i)) { desc = i; break; }
    }
    if (desc < 0) break;
    z = right_multiply_generator(z, desc);
  }
  return z;
}

std::vector<AffineCoroot> AffineEngine::beta_sequence(const std::vector<int>& word) const {
  const std::size_t l = word.size();
  std::vector<AffineCoroot> betas(l);
  AffineElement acc = identity();
  for (std::size_t k = l; k-- > 0;) {
    betas[k] = act(acc, simple_affine_coroot(word[k]));
    acc = multiply(acc, generator(word[k]));
  }
  return betas;
}

bool AffineEngine::word_is_reduced(const AffineElement& start,
                                   const std::vector<int>& word) const {
  AffineElement z = start;
  for (int j : word) z = right_multiply_generator(z, j);
  return length(z) == length(start) + static_cast<Int>(word.size());
}

}  // namespace macwalk
