#include "braceforge/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace braceforge {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> map) : map_(std::move(map)) {
  std::vector<char> seen(map_.size(), 0);
  for (int x : map_) {
    if (x < 0 || x >= degree() || seen[x]) throw InputError("Perm: not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> m(degree);
  std::iota(m.begin(), m.end(), 0);
  Perm p;
  p.map_ = std::move(m);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm r;
  r.map_.resize(rhs.map_.size());
  for (std::size_t i = 0; i < rhs.map_.size(); ++i) r.map_[i] = map_[rhs.map_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) r.map_[map_[i]] = static_cast<int>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string to_string(const Perm& p) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < p.degree(); ++i) out << (i ? "," : "") << p(i);
  out << ']';
  return out.str();
}

// ---------------------------------------------------------- FiniteGroup

std::optional<Violation> group_violation(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return Violation{"NotSquare", {}, "empty table"};
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) return Violation{"NotSquare", {}, "rows differ in length"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n) return Violation{"NotClosed", {a, b}, {}};
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) return Violation{"NoIdentityAtZero", {a}, {}};
  for (int a = 0; a < n; ++a) {
    int right = -1;
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) right = b;
    if (right < 0) return Violation{"NoInverse", {a}, {}};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return Violation{"NotAssociative", {a, b, c}, {}};
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_table(const Table& table) {
  if (auto v = group_violation(table)) throw AxiomError(*v);
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  g.mul_.resize(static_cast<std::size_t>(g.n_) * g.n_);
  g.inv_.assign(g.n_, -1);
  for (int a = 0; a < g.n_; ++a)
    for (int b = 0; b < g.n_; ++b) {
      g.mul_[a * g.n_ + b] = table[a][b];
      if (table[a][b] == 0) g.inv_[a] = b;
    }
  return g;
}

FiniteGroup validate_group(const Table& table) { return FiniteGroup::from_table(table); }

Table FiniteGroup::table() const {
  Table t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = op(a, b);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = op(x, a)) ++k;
  return k;
}

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  std::vector<int> sub = {0};
  for (int x = 1; x < n_ && static_cast<int>(sub.size()) < n_; ++x) {
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    sub = generated_subgroup(*this, gens);
  }
  return gens;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> frontier = {0};
  in[0] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g.op(x, s);
        if (!in[y]) {
          in[y] = 1;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
  std::vector<char> in(g.order(), 0);
  for (int x : subset) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (int a : subset) {
    if (!in[g.inv(a)]) return false;
    for (int b : subset)
      if (!in[g.op(a, b)]) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::vector<char> in(g.order(), 0);
  for (int x : subset) in[x] = 1;
  for (int a = 0; a < g.order(); ++a)
    for (int x : subset)
      if (!in[g.op(g.op(a, x), g.inv(a))]) return false;
  return true;
}

// ------------------------------------------------------------ PermGroup

PermGroup::PermGroup(int degree, std::vector<Perm> elements)
    : degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& p : elements_)
    if (p.degree() != degree_) throw InputError("PermGroup: degree mismatch");
  if (!contains(Perm::identity(degree_))) fail("PermGroupNoIdentity");
  for (const auto& p : elements_) {
    if (!contains(p.inverse())) fail("PermGroupNoInverse", {}, to_string(p));
    for (const auto& q : elements_)
      if (!contains(p * q)) fail("PermGroupNotClosed", {}, to_string(p) + "*" + to_string(q));
  }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {Perm::identity(degree)}); }

PermGroup PermGroup::generated_by(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen = {Perm::identity(degree)};
  std::deque<Perm> queue = {Perm::identity(degree)};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm q = p * s;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()));
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& p) { return other.contains(p); });
}

// ------------------------------------------------- isomorphism search

namespace {

/// Words for every element over a generating set, grouped by the prefix
/// subgroup ⟨g_0..g_k⟩ in which the element first appears.
struct GeneratorWords {
  std::vector<int> gens;
  // layers[k]: (element, parent, generator index) with element = parent·gens[gen].
  std::vector<std::vector<std::array<int, 3>>> layers;
};

GeneratorWords build_words(const FiniteGroup& g, std::vector<int> gens) {
  GeneratorWords w;
  w.gens = std::move(gens);
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> members = {0};
  for (std::size_t k = 0; k < w.gens.size(); ++k) {
    std::vector<std::array<int, 3>> layer;
    // Closure of the previous subgroup under gens[0..k].
    std::deque<int> queue(members.begin(), members.end());
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j <= k; ++j) {
        int y = g.op(x, w.gens[j]);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          layer.push_back({y, x, static_cast<int>(j)});
          queue.push_back(y);
        }
      }
    }
    w.layers.push_back(std::move(layer));
  }
  return w;
}

struct IsoSearch {
  const std::vector<const FiniteGroup*>& src;
  const std::vector<const FiniteGroup*>& dst;
  const std::function<bool(const Perm&)>& visit;
  GeneratorWords words;
  std::vector<int> image;
  std::vector<char> used;
  std::vector<std::vector<int>> members;  // members[k]: elements of ⟨g_0..g_k⟩
  bool stopped = false;

  // Extends the map to layer k and checks f(x·g_j) = f(x)·f(g_j) on the prefix.
  bool extend_layer(std::size_t k, std::vector<int>& assigned) {
    const FiniteGroup& s = *src[0];
    const FiniteGroup& d = *dst[0];
    for (const auto& [x, parent, j] : words.layers[k]) {
      int y = d.op(image[parent], image[words.gens[j]]);
      if (image[x] >= 0) {
        if (image[x] != y) return false;
        continue;
      }
      if (used[y]) return false;
      image[x] = y;
      used[y] = 1;
      assigned.push_back(x);
    }
    for (int x : members[k])
      for (std::size_t j = 0; j <= k; ++j) {
        int xg = s.op(x, words.gens[j]);
        if (image[xg] != d.op(image[x], image[words.gens[j]])) return false;
      }
    return true;
  }

  void undo(std::vector<int>& assigned) {
    for (int x : assigned) {
      used[image[x]] = 0;
      image[x] = -1;
    }
    assigned.clear();
  }

  bool leaf_ok() const {
    const int n = src[0]->order();
    for (std::size_t t = 1; t < src.size(); ++t)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (image[src[t]->op(a, b)] != dst[t]->op(image[a], image[b])) return false;
    return true;
  }

  void run(std::size_t k) {
    if (stopped) return;
    if (k == words.gens.size()) {
      if (leaf_ok() && !visit(Perm(image))) stopped = true;
      return;
    }
    const int gen = words.gens[k];
    const int want_order = src[0]->element_order(gen);
    const int n = dst[0]->order();
    for (int cand = 1; cand < n && !stopped; ++cand) {
      if (used[cand] || dst[0]->element_order(cand) != want_order) continue;
      // A generator may already be determined by earlier ones only if the
      // greedy choice is redundant, which build_words never produces.
      image[gen] = cand;
      used[cand] = 1;
      std::vector<int> assigned;
      if (extend_layer(k, assigned)) run(k + 1);
      undo(assigned);
      used[cand] = 0;
      image[gen] = -1;
    }
  }
};

}  // namespace

void for_each_isomorphism(const std::vector<const FiniteGroup*>& src,
                          const std::vector<const FiniteGroup*>& dst,
                          const std::function<bool(const Perm&)>& visit) {
  if (src.empty() || src.size() != dst.size()) throw InputError("for_each_isomorphism: table count");
  const int n = src[0]->order();
  for (std::size_t t = 0; t < src.size(); ++t)
    if (src[t]->order() != n || dst[t]->order() != n) return;
  IsoSearch search{src, dst, visit, build_words(*src[0], src[0]->generators()), {}, {}, {}};
  search.image.assign(n, -1);
  search.used.assign(n, 0);
  search.image[0] = 0;
  search.used[0] = 1;
  std::vector<int> members = {0};
  for (const auto& layer : search.words.layers) {
    for (const auto& e : layer) members.push_back(e[0]);
    search.members.push_back(members);
  }
  if (search.words.gens.empty()) {
    if (search.leaf_ok()) visit(Perm(search.image));
    return;
  }
  search.run(0);
}

std::optional<Perm> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  std::optional<Perm> found;
  for_each_isomorphism({&a}, {&b}, [&](const Perm& p) {
    found = p;
    return false;
  });
  return found;
}

PermGroup automorphism_group(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    fail("OrderBoundExceeded", {g.order(), bound}, "automorphism search");
  std::vector<Perm> auts;
  for_each_isomorphism({&g}, {&g}, [&](const Perm& p) {
    auts.push_back(p);
    return true;
  });
  return PermGroup(g.order(), std::move(auts));
}

Perm inner_automorphism(const FiniteGroup& g, int element) {
  std::vector<int> m(g.order());
  for (int z = 0; z < g.order(); ++z) m[z] = g.op(g.op(element, z), g.inv(element));
  return Perm(std::move(m));
}

std::vector<int> centre(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

PermGroup inner_group(const FiniteGroup& g) {
  std::vector<Perm> inn;
  for (int a = 0; a < g.order(); ++a) inn.push_back(inner_automorphism(g, a));
  return PermGroup(g.order(), std::move(inn));
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& generators) {
  for (const auto& s : generators)
    if (!ambient.contains(s)) throw InputError("normal_closure: generator outside ambient group");
  std::set<Perm> gens(generators.begin(), generators.end());
  while (true) {
    PermGroup sub = PermGroup::generated_by(ambient.degree(), {gens.begin(), gens.end()});
    bool grew = false;
    for (const auto& a : ambient.elements()) {
      const Perm a_inv = a.inverse();
      for (const auto& x : sub.elements()) {
        Perm c = a * x * a_inv;
        if (!sub.contains(c)) {
          gens.insert(c);
          grew = true;
        }
      }
    }
    if (!grew) return sub;
  }
}

bool equal_mod(const PermGroup& sub, const Perm& p, const Perm& q) {
  return sub.contains(p * q.inverse());
}

std::vector<Perm> extend_from_generators(const FiniteGroup& g, const std::vector<int>& gens,
                                         const std::vector<Perm>& images, bool anti) {
  const int degree = images.empty() ? 0 : images[0].degree();
  std::vector<Perm> f(g.order());
  std::vector<char> done(g.order(), 0);
  f[0] = Perm::identity(degree);
  done[0] = 1;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int y = g.op(x, gens[j]);
      if (done[y]) continue;
      f[y] = anti ? images[j] * f[x] : f[x] * images[j];
      done[y] = 1;
      queue.push_back(y);
    }
  }
  for (char d : done)
    if (!d) throw InputError("extend_from_generators: generators do not generate the group");
  return f;
}

std::vector<std::vector<Perm>> homomorphisms_into(const FiniteGroup& g, const PermGroup& target,
                                                  bool anti) {
  const std::vector<int> gens = g.generators();
  const auto& cands = target.elements();
  std::vector<std::vector<Perm>> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  // Candidate images restricted to elements whose order divides the generator's.
  std::vector<std::vector<const Perm*>> options(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int ord = g.element_order(gens[j]);
    for (const auto& p : cands) {
      Perm acc = p;
      int k = 1;
      while (!acc.is_identity()) {
        acc = acc * p;
        ++k;
      }
      if (ord % k == 0) options[j].push_back(&p);
    }
  }
  std::function<void(std::size_t, std::vector<Perm>&)> rec = [&](std::size_t j,
                                                                 std::vector<Perm>& imgs) {
    if (j == gens.size()) {
      std::vector<Perm> f = extend_from_generators(g, gens, imgs, anti);
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
          const Perm expect = anti ? f[b] * f[a] : f[a] * f[b];
          if (f[g.op(a, b)] != expect) return;
        }
      out.push_back(std::move(f));
      return;
    }
    for (const Perm* p : options[j]) {
      imgs.push_back(*p);
      rec(j + 1, imgs);
      imgs.pop_back();
    }
  };
  std::vector<Perm> imgs;
  if (gens.empty()) {
    out.push_back({Perm::identity(target.degree())});
    return out;
  }
  rec(0, imgs);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------ standard groups

FiniteGroup cyclic_group(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb);
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(int m) {
  const int n = 2 * m;
  Table t(n, std::vector<int>(n));
  auto idx = [m](int i, int j) { return ((i % m) + m) % m + m * (j % 2); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l)
          t[idx(i, j)][idx(k, l)] = idx(i + (j ? -k : k), j + l);
  return FiniteGroup::from_table(t);
}

FiniteGroup quaternion_group() {
  // Units ±1, ±i, ±j, ±k encoded as (unit, sign): unit 0..3 = 1,i,j,k.
  // Index = 2*unit + (sign negative).
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ux = x / 2, uy = y / 2;
      int s = (x % 2) ^ (y % 2) ^ sign_mul[ux][uy];
      t[x][y] = 2 * unit_mul[ux][uy] + s;
    }
  return FiniteGroup::from_table(t);
}

std::optional<int> find_identity(const Table& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = static_cast<int>(table[e].size()) == n && table[e][a] == a && table[a][e] == a;
    if (ok) return e;
  }
  return std::nullopt;
}

Table move_identity_to_zero(const Table& table, int identity) {
  const int n = static_cast<int>(table.size());
  auto swap_label = [identity](int x) { return x == identity ? 0 : (x == 0 ? identity : x); };
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[swap_label(a)][swap_label(b)] = swap_label(table[a][b]);
  return t;
}

}  // namespace braceforge
