#include "macwalk/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace macwalk {

WeylElement WeylElement::identity(int n) {
  IntVec m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return WeylElement(n, m, m);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  const int n = n_;
  IntVec m(n * n, 0), inv(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Int a = mat_[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += a * o.mat_[k * n + j];
    }
  // (ab)^-1 = b^-1 a^-1
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Int a = o.inv_[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) inv[i * n + j] += a * inv_[k * n + j];
    }
  return WeylElement(n, std::move(m), std::move(inv));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (mat_[i * n_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

Weight WeylElement::apply(const Weight& mu) const { return Weight(apply(mu.c)); }

IntVec WeylElement::apply(const IntVec& v) const {
  IntVec r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += mat_[i * n_ + j] * v[j];
  return r;
}

IntVec WeylElement::apply_coroot(const IntVec& k) const {
  // transpose of the inverse weight matrix
  IntVec r(n_, 0);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) r[j] += inv_[i * n_ + j] * k[i];
  return r;
}

std::vector<Rat> WeylElement::apply_coroot(const std::vector<Rat>& k) const {
  std::vector<Rat> r(n_, Rat(0));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) r[j] += Rat(inv_[i * n_ + j]) * k[i];
  return r;
}

namespace {

// Cartan matrices with a_{ij} = <alpha_j, alpha_i-check>; column j holds the
// omega-coordinates of alpha_j.
IntVec make_cartan(char type, int n) {
  auto bad = [&]() -> IntVec {
    throw UnsupportedType(std::string("unsupported root system ") + type +
                          std::to_string(n));
  };
  IntVec a(n * n, 0);
  auto set = [&](int i, int j, Int v) { a[i * n + j] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto chain = [&](int i, int j) { set(i, j, -1); set(j, i, -1); };
  switch (type) {
    case 'A':
      if (n < 1 || n > 8) bad();
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      // alpha_n short
      if (n < 2 || n > 8) bad();
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      set(n - 2, n - 1, -1);
      set(n - 1, n - 2, -2);
      break;
    case 'C':
      // alpha_n long
      if (n < 2 || n > 8) bad();
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      set(n - 2, n - 1, -2);
      set(n - 1, n - 2, -1);
      break;
    case 'D':
      if (n < 3 || n > 8) bad();
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n >= 8) chain(6, 7);
      chain(1, 3);
      break;
    case 'F':
      if (n != 4) bad();
      chain(0, 1);
      set(1, 2, -1);  // alpha_3 short against alpha_2-check
      set(2, 1, -2);
      chain(2, 3);
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      if (n != 2) bad();
      set(0, 1, -3);
      set(1, 0, -1);
      break;
    default:
      bad();
  }
  return a;
}

void check_cartan(const IntVec& a, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i * n + i] != 2) throw UnsupportedType("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i * n + j] > 0) throw UnsupportedType("off-diagonal Cartan entry > 0");
      if ((a[i * n + j] == 0) != (a[j * n + i] == 0))
        throw UnsupportedType("Cartan zero pattern not symmetric");
    }
  }
}

// Exact inverse of an integer matrix by Gaussian elimination over Q.
std::vector<Rat> invert_matrix(const IntVec& a, int n) {
  std::vector<Rat> m(n * 2 * n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i * 2 * n + j] = Rat(a[i * n + j]);
    m[i * 2 * n + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r * 2 * n + col] != 0) { piv = r; break; }
    if (piv < 0) throw UnsupportedType("singular Cartan matrix");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(m[piv * 2 * n + j], m[col * 2 * n + j]);
    const Rat d = m[col * 2 * n + col];
    for (int j = 0; j < 2 * n; ++j) m[col * 2 * n + j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rat f = m[r * 2 * n + col];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j) m[r * 2 * n + j] -= f * m[col * 2 * n + j];
    }
  }
  std::vector<Rat> inv(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i * n + j] = m[i * 2 * n + n + j];
  return inv;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { for (int i = 0; i < n; ++i) p[i] = i; }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  return from_cartan(make_cartan(type, rank), rank,
                     std::string(1, type) + std::to_string(rank));
}

RootSystem RootSystem::build(const std::string& name) {
  if (name.size() < 2) throw UnsupportedType("bad root system name: " + name);
  const char type = name[0];
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw UnsupportedType("bad root system name: " + name);
  }
  return build(type, rank);
}

RootSystem RootSystem::from_cartan(IntVec cartan, int rank, std::string label) {
  if (rank < 1 || rank > 8) throw UnsupportedType("rank out of range");
  check_cartan(cartan, rank);
  RootSystem rs;
  rs.n_ = rank;
  rs.label_ = std::move(label);
  rs.cartan_ = std::move(cartan);
  rs.generate();
  return rs;
}

void RootSystem::generate() {
  const int n = n_;

  simples_.clear();
  for (int i = 0; i < n; ++i) {
    IntVec m(n * n, 0);
    for (int r = 0; r < n; ++r) m[r * n + r] = 1;
    for (int r = 0; r < n; ++r) m[r * n + i] -= cartan_[r * n + i];
    simples_.push_back(WeylElement(n, m, m));
  }

  // Reflection closure from the simple roots, carrying omega-, root- and
  // coroot-coordinates along.
  struct Trip { IntVec wt, root, coroot; };
  std::map<IntVec, int> seen;
  std::vector<Trip> all;
  std::deque<int> queue;
  for (int j = 0; j < n; ++j) {
    Trip t;
    t.wt.resize(n);
    for (int i = 0; i < n; ++i) t.wt[i] = cartan_[i * n + j];
    t.root = IntVec(n, 0);
    t.root[j] = 1;
    t.coroot = IntVec(n, 0);
    t.coroot[j] = 1;
    seen[t.wt] = static_cast<int>(all.size());
    queue.push_back(static_cast<int>(all.size()));
    all.push_back(t);
  }
  UnionFind uf(4096);
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const Trip& t = all[idx];  // re-fetch: vector may have grown
      Trip s;
      const Int k = t.wt[i];  // <root, alpha_i-check>
      s.wt = t.wt;
      for (int r = 0; r < n; ++r) s.wt[r] -= k * cartan_[r * n + i];
      s.root = t.root;
      s.root[i] -= k;
      Int kc = 0;  // <coroot, alpha_i>
      for (int j = 0; j < n; ++j) kc += t.coroot[j] * cartan_[j * n + i];
      s.coroot = t.coroot;
      s.coroot[i] -= kc;
      auto it = seen.find(s.wt);
      if (it == seen.end()) {
        if (all.size() >= 1000)
          throw UnsupportedType("Cartan matrix is not of finite type");
        const int ni = static_cast<int>(all.size());
        seen[s.wt] = ni;
        queue.push_back(ni);
        all.push_back(s);
        uf.unite(idx, ni);
      } else {
        uf.unite(idx, it->second);
      }
    }
  }

  positive_.clear();
  pos_by_wt_.clear();
  pos_by_coroot_.clear();
  std::vector<int> rep_of_pos;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool pos = true;
    for (Int x : all[i].root)
      if (x < 0) { pos = false; break; }
    if (!pos) continue;
    PositiveRoot pr;
    pr.wt = all[i].wt;
    pr.root = all[i].root;
    pr.coroot = all[i].coroot;
    pos_by_wt_[pr.wt] = static_cast<int>(positive_.size());
    pos_by_coroot_[pr.coroot] = static_cast<int>(positive_.size());
    rep_of_pos.push_back(uf.find(static_cast<int>(i)));
    positive_.push_back(std::move(pr));
  }

  // Orbit ids, numbered in order of first appearance among the simple roots.
  std::map<int, int> orbit_id;
  node_orbit_.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) {
    const int rep = uf.find(j);
    auto it = orbit_id.find(rep);
    if (it == orbit_id.end()) {
      const int id = static_cast<int>(orbit_id.size());
      orbit_id[rep] = id;
      node_orbit_[j + 1] = id;
    } else {
      node_orbit_[j + 1] = it->second;
    }
  }
  num_orbits_ = static_cast<int>(orbit_id.size());
  for (std::size_t i = 0; i < positive_.size(); ++i)
    positive_[i].orbit = orbit_id.at(rep_of_pos[i]);

  // Highest root (maximal height) and highest coroot (maximal coheight).
  int hi = 0, hic = 0;
  for (int i = 1; i < static_cast<int>(positive_.size()); ++i) {
    if (positive_[i].height() > positive_[hi].height()) hi = i;
    if (positive_[i].coheight() > positive_[hic].coheight()) hic = i;
  }
  highest_root_ = Weight(positive_[hi].wt);
  phi_coroot_ = positive_[hi].coroot;
  highest_coroot_ = positive_[hic].coroot;
  theta_ = Weight(positive_[hic].wt);
  // Node 0 carries the orbit of the highest coroot.
  node_orbit_[0] = positive_[hic].orbit;

  rho_ = Weight(IntVec(n, 1));

  const std::vector<Rat> ainv = invert_matrix(cartan_, n);
  std::vector<Rat> rc(n, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rc[j] += ainv[i * n + j];
  rho_check_ = DualVector(std::move(rc));
  Int e = 1;
  for (const Rat& x : ainv) e = std::lcm(e, static_cast<Int>(x.get_den().get_si()));
  e_denominator_ = e;
}

int RootSystem::node_orbit(int i) const {
  if (i < 0 || i > n_) throw RankMismatch("node index out of range");
  return node_orbit_[i];
}

int RootSystem::orbit_of_coroot(const IntVec& coroot) const {
  auto idx = coroot_index(coroot);
  if (!idx) throw InvariantViolation("not a coroot");
  return positive_[idx->first].orbit;
}

Rat RootSystem::pairing(const DualVector& lam, const Weight& mu) const {
  if (lam.rank() != n_ || mu.rank() != n_) throw RankMismatch("pairing rank mismatch");
  Rat s(0);
  for (int j = 0; j < n_; ++j) s += lam.c[j] * Rat(mu.c[j]);
  return s;
}

Int RootSystem::pairing(const IntVec& k, const Weight& mu) const {
  if (static_cast<int>(k.size()) != n_ || mu.rank() != n_)
    throw RankMismatch("pairing rank mismatch");
  return dot_vec(k, mu.c);
}

Int RootSystem::pairing(const IntVec& k, const IntVec& wt) const {
  return dot_vec(k, wt);
}

Weight RootSystem::reflect(int i, const Weight& mu) const {
  if (i < 1 || i > n_) throw RankMismatch("reflection index out of range");
  const Int k = mu.c[i - 1];
  IntVec r = mu.c;
  for (int t = 0; t < n_; ++t) r[t] -= k * cartan_[t * n_ + (i - 1)];
  return Weight(std::move(r));
}

DualVector RootSystem::reflect(int i, const DualVector& lam) const {
  if (i < 1 || i > n_) throw RankMismatch("reflection index out of range");
  Rat k(0);
  for (int j = 0; j < n_; ++j) k += lam.c[j] * Rat(cartan_[j * n_ + (i - 1)]);
  std::vector<Rat> r = lam.c;
  r[i - 1] -= k;
  return DualVector(std::move(r));
}

IntVec RootSystem::reflect_coroot(int i, const IntVec& k) const {
  Int p = 0;
  for (int j = 0; j < n_; ++j) p += k[j] * cartan_[j * n_ + (i - 1)];
  IntVec r = k;
  r[i - 1] -= p;
  return r;
}

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > n_) throw RankMismatch("reflection index out of range");
  return simples_[i - 1];
}

WeylElement RootSystem::reflection_of_root(const IntVec& root_wt,
                                           const IntVec& coroot) const {
  IntVec m(n_ * n_, 0);
  for (int r = 0; r < n_; ++r) {
    for (int j = 0; j < n_; ++j)
      m[r * n_ + j] = (r == j ? 1 : 0) - root_wt[r] * coroot[j];
  }
  return WeylElement(n_, m, m);
}

WeylElement RootSystem::theta_reflection() const {
  return reflection_of_root(theta_.c, highest_coroot_);
}

WeylElement RootSystem::phi_reflection() const {
  return reflection_of_root(highest_root_.c, phi_coroot_);
}

bool RootSystem::is_positive_root_wt(const IntVec& wt) const {
  return pos_by_wt_.count(wt) > 0;
}

std::optional<std::pair<int, int>> RootSystem::root_index(const IntVec& wt) const {
  auto it = pos_by_wt_.find(wt);
  if (it != pos_by_wt_.end()) return std::make_pair(it->second, +1);
  it = pos_by_wt_.find(neg_vec(wt));
  if (it != pos_by_wt_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

std::optional<std::pair<int, int>> RootSystem::coroot_index(const IntVec& k) const {
  auto it = pos_by_coroot_.find(k);
  if (it != pos_by_coroot_.end()) return std::make_pair(it->second, +1);
  it = pos_by_coroot_.find(neg_vec(k));
  if (it != pos_by_coroot_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

Int RootSystem::weyl_length(const WeylElement& w) const {
  Int len = 0;
  for (const auto& pr : positive_) {
    IntVec img = w.apply(pr.wt);
    auto idx = root_index(img);
    if (!idx) throw InvariantViolation("Weyl image of a root is not a root");
    if (idx->second < 0) ++len;
  }
  return len;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> word;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int desc = -1;
    for (int i = 1; i <= n_; ++i) {
      // i is a right descent iff cur(alpha_i) < 0
      IntVec a(n_);
      for (int r = 0; r < n_; ++r) a[r] = cartan_[r * n_ + (i - 1)];
      auto idx = root_index(cur.apply(a));
      if (idx && idx->second < 0) { desc = i; break; }
    }
    if (desc < 0) throw InvariantViolation("no descent found for nontrivial element");
    word.push_back(desc);
    cur = cur * simples_[desc - 1];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement RootSystem::weyl_from_word(const std::vector<int>& word) const {
  WeylElement w = WeylElement::identity(n_);
  for (int i : word) w = w * simple_reflection(i);
  return w;
}

WeylElement RootSystem::longest_element() const {
  WeylElement w = WeylElement::identity(n_);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= n_; ++i) {
      IntVec a(n_);
      for (int r = 0; r < n_; ++r) a[r] = cartan_[r * n_ + (i - 1)];
      auto idx = root_index(w.apply(a));
      if (idx && idx->second > 0) {  // ascent: extend
        w = w * simples_[i - 1];
        moved = true;
      }
    }
  }
  return w;
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  if (!group_.empty()) return group_;
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue;
  const WeylElement e = WeylElement::identity(n_);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n_; ++i) {
      WeylElement nw = w * simples_[i - 1];
      if (seen.insert(nw).second) queue.push_back(nw);
    }
    if (seen.size() > 2000000) throw UnsupportedType("Weyl group too large to enumerate");
  }
  group_.assign(seen.begin(), seen.end());
  return group_;
}

bool RootSystem::is_dominant(const Weight& mu) const {
  for (Int c : mu.c)
    if (c < 0) return false;
  return true;
}

const RootSystem& RootSystem::dual() const {
  if (!dual_) {
    IntVec t(n_ * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t[i * n_ + j] = cartan_[j * n_ + i];
    auto d = std::make_shared<RootSystem>(from_cartan(std::move(t), n_, label_ + "^"));
    dual_ = std::move(d);
  }
  return *dual_;
}

}  // namespace macwalk
