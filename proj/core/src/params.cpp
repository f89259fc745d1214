#include "macwalk/params.hpp"

namespace macwalk {

ParameterMap::ParameterMap(const RootSystem& rs, Mode mode,
                           std::vector<std::string> names)
    : rs_(&rs), mode_(mode) {
  const int orbits = rs.num_orbits();
  orbit_to_param_.resize(orbits);
  if (mode == Mode::equal) {
    nparams_ = 1;
    for (int o = 0; o < orbits; ++o) orbit_to_param_[o] = 0;
  } else {
    nparams_ = orbits;
    for (int o = 0; o < orbits; ++o) orbit_to_param_[o] = o;
  }
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != nparams_)
      throw RankMismatch("parameter name count mismatch");
    names_ = std::move(names);
  } else if (nparams_ == 1) {
    names_ = {"t"};
  } else {
    for (int p = 0; p < nparams_; ++p) names_.push_back("t" + std::to_string(p + 1));
  }
}

int ParameterMap::param_of_node(int node) const {
  return orbit_to_param_[rs_->node_orbit(node)];
}

IntVec ParameterMap::v_exponents_for_coroot(const IntVec& gamma) const {
  IntVec ve(nparams_, 0);
  for (const auto& pr : rs_->positive_roots())
    ve[orbit_to_param_[pr.orbit]] += rs_->pairing(gamma, pr.wt);
  return ve;
}

IntVec ParameterMap::exps(Int q_exp, const IntVec& v_exps) const {
  IntVec e(laurent_vars(), 0);
  e[0] = q_exp;
  for (int p = 0; p < nparams_; ++p) e[1 + p] = v_exps[p];
  return e;
}

Laurent ParameterMap::monomial(Int q_exp, const IntVec& v_exps, const Rat& c) const {
  return Laurent::monomial(exps(q_exp, v_exps), c);
}

Laurent ParameterMap::q() const {
  IntVec e(laurent_vars(), 0);
  e[0] = 1;
  return Laurent::monomial(e, Rat(1));
}

Laurent ParameterMap::t(int param) const {
  IntVec e(laurent_vars(), 0);
  e[1 + param] = 2;
  return Laurent::monomial(e, Rat(1));
}

Laurent ParameterMap::v(int param) const {
  IntVec e(laurent_vars(), 0);
  e[1 + param] = 1;
  return Laurent::monomial(e, Rat(1));
}

Laurent ParameterMap::v_monomial(const IntVec& v_exps) const {
  return monomial(0, v_exps);
}

}  // namespace macwalk
