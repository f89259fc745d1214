#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "macwalk/errors.hpp"
#include "macwalk/numeric.hpp"

namespace macwalk {

// A weight mu = sum_i c_i omega_i, stored in fundamental-weight coordinates,
// so c_i = <mu, alpha_i-check>.
struct Weight {
  IntVec c;

  Weight() = default;
  explicit Weight(IntVec coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator<(const Weight& o) const { return c < o.c; }
  Weight operator+(const Weight& o) const { return Weight(add_vec(c, o.c)); }
  Weight operator-(const Weight& o) const { return Weight(sub_vec(c, o.c)); }
  Weight operator-() const { return Weight(neg_vec(c)); }
  bool is_zero() const { return is_zero_vec(c); }
};

// A vector in the simple-coroot basis with rational entries.  Coroots
// themselves always have integer coordinates; fundamental coweights and
// rho-check need the rational form.
struct DualVector {
  std::vector<Rat> c;

  DualVector() = default;
  explicit DualVector(std::vector<Rat> coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool operator==(const DualVector& o) const { return c == o.c; }
};

// An element of the finite Weyl group, stored as its integer matrix on
// weight coordinates together with the matrix of the inverse.  Equality is
// matrix equality; reduced words are recomputed on demand.
class WeylElement {
 public:
  WeylElement() : n_(0) {}
  WeylElement(int n, IntVec mat, IntVec inv)
      : n_(n), mat_(std::move(mat)), inv_(std::move(inv)) {}

  static WeylElement identity(int n);

  int rank() const { return n_; }
  Int at(int i, int j) const { return mat_[i * n_ + j]; }
  Int inv_at(int i, int j) const { return inv_[i * n_ + j]; }
  const IntVec& matrix() const { return mat_; }

  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElement& o) const { return mat_ != o.mat_; }
  bool operator<(const WeylElement& o) const { return mat_ < o.mat_; }

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const { return WeylElement(n_, inv_, mat_); }
  bool is_identity() const;

  Weight apply(const Weight& mu) const;
  IntVec apply(const IntVec& weight_coords) const;
  // Action on the simple-coroot basis (inverse-transpose of the weight
  // action, which is again integral).
  IntVec apply_coroot(const IntVec& coroot_coords) const;
  std::vector<Rat> apply_coroot(const std::vector<Rat>& coords) const;

 private:
  int n_;
  IntVec mat_;
  IntVec inv_;
};

struct PositiveRoot {
  IntVec wt;         // omega-basis coordinates
  IntVec root;       // simple-root coordinates
  IntVec coroot;     // simple-coroot coordinates of the associated coroot
  int orbit = 0;     // W0-conjugacy class of the root (= length class)
  Int height() const { return std::accumulate(root.begin(), root.end(), Int(0)); }
  Int coheight() const { return std::accumulate(coroot.begin(), coroot.end(), Int(0)); }
};

// Finite root-system data generated from a Cartan matrix by reflection
// closure.  Immutable after construction; safe to share across threads.
class RootSystem {
 public:
  static RootSystem build(char type_label, int rank);
  static RootSystem build(const std::string& name);  // "A2", "G2", ...
  static RootSystem from_cartan(IntVec cartan, int rank, std::string label);

  int rank() const { return n_; }
  const std::string& label() const { return label_; }
  Int cartan(int i, int j) const { return cartan_[i * n_ + j]; }
  const IntVec& cartan_matrix() const { return cartan_; }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  int num_orbits() const { return num_orbits_; }
  // Conjugacy class of node i, i = 0..n; node 0 carries the class of the
  // highest coroot.
  int node_orbit(int i) const;
  int orbit_of_coroot(const IntVec& coroot) const;

  const Weight& highest_root() const { return highest_root_; }          // phi
  const IntVec& coroot_of_highest_root() const { return phi_coroot_; }  // phi-check
  const IntVec& highest_coroot() const { return highest_coroot_; }      // theta-check
  const Weight& root_of_highest_coroot() const { return theta_; }       // theta
  const Weight& rho() const { return rho_; }
  const DualVector& rho_check() const { return rho_check_; }
  Int e_denominator() const { return e_denominator_; }

  // <lambda-check, mu>
  Rat pairing(const DualVector& lam, const Weight& mu) const;
  Int pairing(const IntVec& coroot_coords, const Weight& mu) const;
  Int pairing(const IntVec& coroot_coords, const IntVec& weight_coords) const;

  Weight reflect(int i, const Weight& mu) const;          // i = 1..n
  DualVector reflect(int i, const DualVector& lam) const; // i = 1..n
  IntVec reflect_coroot(int i, const IntVec& coroot) const;

  WeylElement simple_reflection(int i) const;  // i = 1..n
  WeylElement reflection_of_root(const IntVec& root_wt,
                                 const IntVec& coroot) const;
  WeylElement theta_reflection() const;  // s_theta
  WeylElement phi_reflection() const;    // s_phi

  Int weyl_length(const WeylElement& w) const;
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement weyl_from_word(const std::vector<int>& word) const;
  WeylElement longest_element() const;
  // Full enumeration; only sensible for small rank.
  const std::vector<WeylElement>& weyl_group() const;
  Int weyl_order() const { return static_cast<Int>(weyl_group().size()); }

  bool is_dominant(const Weight& mu) const;
  bool is_positive_root_wt(const IntVec& wt) const;
  // Index into positive_roots() of +-wt, with sign; nullopt if not a root.
  std::optional<std::pair<int, int>> root_index(const IntVec& wt) const;
  std::optional<std::pair<int, int>> coroot_index(const IntVec& coroot) const;

  // The same engine with roots and coroots swapped (transposed Cartan).
  const RootSystem& dual() const;

 private:
  RootSystem() = default;
  void generate();

  int n_ = 0;
  std::string label_;
  IntVec cartan_;
  std::vector<PositiveRoot> positive_;
  std::map<IntVec, int> pos_by_wt_;
  std::map<IntVec, int> pos_by_coroot_;
  int num_orbits_ = 1;
  std::vector<int> node_orbit_;  // size n+1, index 0 = affine node
  Weight highest_root_;
  IntVec phi_coroot_;
  IntVec highest_coroot_;
  Weight theta_;
  Weight rho_;
  DualVector rho_check_;
  Int e_denominator_ = 1;
  std::vector<WeylElement> simples_;
  mutable std::shared_ptr<RootSystem> dual_;
  mutable std::vector<WeylElement> group_;  // memoized enumeration
};

}  // namespace macwalk
