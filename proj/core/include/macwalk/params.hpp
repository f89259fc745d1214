#pragma once

#include <string>
#include <vector>

#include "macwalk/laurent.hpp"
#include "macwalk/root_system.hpp"

namespace macwalk {

// Hecke parameters t_o = v_o^2, one variable v_o per parameter orbit.  The
// orbits are the node conjugacy classes of the root system; "equal" mode
// identifies them all with a single t.  Scalar coefficients live in the
// Laurent ring with variable 0 = q and variables 1..k = the v_o.
class ParameterMap {
 public:
  enum class Mode { per_orbit, equal };

  ParameterMap(const RootSystem& rs, Mode mode = Mode::per_orbit,
               std::vector<std::string> names = {});

  const RootSystem& root_system() const { return *rs_; }
  Mode mode() const { return mode_; }
  int num_params() const { return nparams_; }
  int laurent_vars() const { return 1 + nparams_; }  // q first

  int param_of_orbit(int orbit) const { return orbit_to_param_[orbit]; }
  int param_of_node(int node) const;  // node = 0..n
  const std::string& name(int param) const { return names_[param]; }

  // v-exponent vector of q^{<gamma, rho_c>}: component o is
  // sum over positive roots alpha in orbit o of <gamma, alpha>.
  IntVec v_exponents_for_coroot(const IntVec& gamma_coroot) const;

  Laurent zero() const { return Laurent::zero(laurent_vars()); }
  Laurent one() const { return Laurent::one(laurent_vars()); }
  Laurent constant(const Rat& c) const { return Laurent::constant(laurent_vars(), c); }
  // q^qe * prod v_o^{ve[o]}
  Laurent monomial(Int q_exp, const IntVec& v_exps, const Rat& c = Rat(1)) const;
  Laurent q() const;
  Laurent t(int param) const;       // v^2
  Laurent v(int param) const;
  Laurent v_monomial(const IntVec& v_exps) const;

  IntVec exps(Int q_exp, const IntVec& v_exps) const;

 private:
  const RootSystem* rs_;
  Mode mode_;
  int nparams_;
  std::vector<int> orbit_to_param_;
  std::vector<std::string> names_;
};

}  // namespace macwalk
