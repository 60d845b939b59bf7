#include "quotcoh/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace quotcoh {

int co(const WeightVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

WeightVector nor(const WeightVector& v) {
  WeightVector out = v;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

long stabilizer_order(const WeightVector& v) {
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  long order = 1;
  for (auto [value, m] : mult)
    for (int k = 2; k <= m; ++k) order *= k;
  return order;
}

bool leq0(const WeightVector& v, const WeightVector& w) {
  if (v.size() != w.size()) throw AlgebraError("leq0: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > w[i]) return false;
  return true;
}

bool is_decreasing(const WeightVector& v) { return std::is_sorted(v.begin(), v.end(), std::greater<>()); }

std::vector<int> support(const WeightVector& v) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

WeightVector unit_vector(int n, int i) {
  WeightVector e(n, 0);
  e.at(i) = 1;
  return e;
}

std::string to_string(const WeightVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

WeightVector parse_weights(const std::string& text) {
  WeightVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw AlgebraError("bad weight entry '" + item + "'");
    }
    if (used != item.size() && item.find_first_not_of(" ", used) != std::string::npos)
      throw AlgebraError("bad weight entry '" + item + "'");
    if (x < 0) throw AlgebraError("weight entries must be non-negative");
    v.push_back(x);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  Permutation out(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[tau[i]];
  return out;
}

Permutation inverse(const Permutation& sigma) {
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[sigma[i]] = static_cast<int>(i);
  return out;
}

Permutation transposition(int n, int i, int j) {
  Permutation p = identity_permutation(n);
  std::swap(p.at(i), p.at(j));
  return p;
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> all;
  Permutation p = identity_permutation(n);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

std::vector<Permutation> young_subgroup(const std::vector<int>& composition) {
  int n = 0;
  for (int l : composition) {
    if (l < 0) throw AlgebraError("negative block length");
    n += l;
  }
  std::vector<Permutation> group{identity_permutation(n)};
  int offset = 0;
  for (int l : composition) {
    std::vector<Permutation> next;
    for (const auto& block : enumerate_permutations(l)) {
      for (const auto& g : group) {
        Permutation p = g;
        for (int i = 0; i < l; ++i) p[offset + i] = offset + block[i];
        next.push_back(std::move(p));
      }
    }
    group = std::move(next);
    offset += l;
  }
  std::sort(group.begin(), group.end());
  return group;
}

std::vector<Permutation> stabilizer(const WeightVector& v) {
  std::vector<Permutation> out;
  for (auto& p : enumerate_permutations(static_cast<int>(v.size())))
    if (act(p, v) == v) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return gens;
}

WeightVector act(const Permutation& sigma, const WeightVector& v) {
  if (sigma.size() != v.size()) throw AlgebraError("permutation size does not match weight length");
  WeightVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[sigma[i]] = v[i];
  return out;
}

// ---------------------------------------------------------------------------
// B(n, r) and Dec

std::vector<WeightVector> enumerate_B(int n, int r, int max_co) {
  if (max_co < 0) throw AlgebraError("max_co must be non-negative");
  if (r == 0) throw AlgebraError("rank must be positive or unbounded");
  std::vector<WeightVector> out;
  WeightVector v(n, 0);
  const int top = r == kUnboundedRank ? max_co : std::min(r - 1, max_co);
  // fill position i with values <= bound, keeping the total within max_co
  std::function<void(int, int, int)> rec = [&](int i, int bound, int budget) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (int x = 0; x <= std::min(bound, budget); ++x) {
      v[i] = x;
      rec(i + 1, x, budget - x);
    }
    v[i] = 0;
  };
  rec(0, top, max_co);
  std::sort(out.begin(), out.end());
  return out;
}

int Decomposition::co() const {
  int total = 0;
  for (std::size_t alpha = 0; alpha < parts.size(); ++alpha)
    total += static_cast<int>(alpha) * std::accumulate(parts[alpha].begin(), parts[alpha].end(), 0);
  return total;
}

Decomposition dec_of_weights(const std::vector<int>& blocks, const WeightVector& v_star, int r) {
  if (r <= 0) throw AlgebraError("dec_of_weights needs a finite positive rank");
  if (std::accumulate(blocks.begin(), blocks.end(), 0) != static_cast<int>(v_star.size()))
    throw AlgebraError("block lengths do not match the weight vector");
  Decomposition dec;
  dec.parts.assign(r, std::vector<int>(blocks.size(), 0));
  std::size_t offset = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    WeightVector block(v_star.begin() + offset, v_star.begin() + offset + blocks[j]);
    if (!is_decreasing(block)) throw AlgebraError("block " + std::to_string(j + 1) + " is not decreasing");
    for (int x : block) {
      if (x >= r) throw AlgebraError("entry " + std::to_string(x) + " out of range for rank " + std::to_string(r));
      ++dec.parts[x][j];
    }
    offset += blocks[j];
  }
  return dec;
}

WeightVector weights_of_dec(const std::vector<int>& blocks, const Decomposition& dec) {
  WeightVector v;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    int count = 0;
    for (int alpha = static_cast<int>(dec.parts.size()) - 1; alpha >= 0; --alpha) {
      for (int k = 0; k < dec.parts[alpha].at(j); ++k) v.push_back(alpha);
      count += dec.parts[alpha][j];
    }
    if (count != blocks[j]) throw AlgebraError("decomposition does not sum to the block length");
  }
  return v;
}

std::vector<std::vector<int>> enumerate_dec(int l, int r) {
  std::vector<std::vector<int>> out;
  for (const auto& v : enumerate_B(l, r, l * std::max(r - 1, 0))) {
    Decomposition d = dec_of_weights({l}, v, r);
    std::vector<int> scalar;
    for (const auto& part : d.parts) scalar.push_back(part[0]);
    out.push_back(std::move(scalar));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subset tuples

std::vector<int> SubsetTuple::support() const {
  std::set<int> s;
  for (const auto& set : sets) s.insert(set.begin(), set.end());
  return {s.begin(), s.end()};
}

SubsetTuple make_subset_tuple(std::vector<std::vector<int>> sets) {
  for (auto& s : sets) {
    if (s.empty()) throw AlgebraError("empty subsets are not allowed in a subset tuple");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return SubsetTuple{std::move(sets)};
}

namespace {

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

std::vector<SubsetTuple> connected_components(const SubsetTuple& tuple) {
  const std::size_t h = tuple.sets.size();
  std::vector<int> label(h, -1);
  int next = 0;
  for (std::size_t start = 0; start < h; ++start) {
    if (label[start] >= 0) continue;
    label[start] = next;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < h; ++b) {
        if (label[b] < 0 && intersects(tuple.sets[a], tuple.sets[b])) {
          label[b] = next;
          stack.push_back(b);
        }
      }
    }
    ++next;
  }
  std::vector<SubsetTuple> comps(next);
  for (std::size_t a = 0; a < h; ++a) comps[label[a]].sets.push_back(tuple.sets[a]);
  return comps;
}

bool is_connected(const SubsetTuple& tuple) { return connected_components(tuple).size() == 1; }

int betti_b1(const SubsetTuple& tuple) {
  if (!is_connected(tuple)) throw AlgebraError("betti_b1 needs a connected tuple");
  int incidences = 0;
  for (const auto& s : tuple.sets) incidences += static_cast<int>(s.size());
  return incidences - static_cast<int>(tuple.sets.size()) - static_cast<int>(tuple.support().size()) + 1;
}

int incidence_graph_b1(const SubsetTuple& tuple) {
  // vertices: sets then ground elements; union-find for the component count
  const auto ground = tuple.support();
  const int h = static_cast<int>(tuple.sets.size());
  const int vertices = h + static_cast<int>(ground.size());
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int edges = 0;
  for (int a = 0; a < h; ++a) {
    for (int e : tuple.sets[a]) {
      int g = h + static_cast<int>(std::lower_bound(ground.begin(), ground.end(), e) - ground.begin());
      parent[find(a)] = find(g);
      ++edges;
    }
  }
  int components = 0;
  for (int x = 0; x < vertices; ++x)
    if (find(x) == x) ++components;
  return edges - vertices + components;
}

std::map<int, std::vector<SubsetTuple>> classify(const SubsetTuple& tuple) {
  std::map<int, std::vector<SubsetTuple>> out;
  for (auto& comp : connected_components(tuple)) {
    int b = betti_b1(comp);
    out[b].push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// T(u, sigma)

std::vector<int> TupleSequence::hat_support(int j) const {
  std::vector<int> s;
  const auto& row = rows.at(j - 1);
  for (int i = 0; i < static_cast<int>(row.size()); ++i)
    if (row[i] != 0 || i == j - 1) s.push_back(i + 1);
  return s;
}

int TupleSequence::rho(int j) const {
  return co(rows.at(j - 1)) - static_cast<int>(hat_support(j).size()) + 1;
}

SubsetTuple TupleSequence::incidence() const {
  SubsetTuple t;
  for (int j = 1; j <= n(); ++j) t.sets.push_back(hat_support(j));
  return t;
}

WeightVector T_target(const WeightVector& u, const Permutation& sigma, SumConvention convention) {
  return convention == SumConvention::RowsSumToPermuted ? act(sigma, u) : act(inverse(sigma), u);
}

namespace {

// Distinctness and partial-sum ordering on hat_support(h) for every h.
bool ordering_condition(const TupleSequence& L) {
  const int n = L.n();
  WeightVector prev(n, 0);
  WeightVector cur(n, 0);
  for (int h = 1; h <= n; ++h) {
    for (int k = 0; k < n; ++k) cur[k] = prev[k] + L.rows[h - 1][k];
    const auto s = L.hat_support(h);
    for (int i : s) {
      for (int j : s) {
        if (i == j) continue;
        const int qi = cur[i - 1];
        const int qj = cur[j - 1];
        if (qi == qj) return false;
        if (qj < qi && qj > prev[i - 1]) return false;
      }
    }
    prev = cur;
  }
  return true;
}

bool betti_condition(const TupleSequence& L) {
  for (const auto& comp : connected_components(L.incidence()))
    if (betti_b1(comp) >= 2) return false;
  return true;
}

}  // namespace

std::vector<TupleSequence> enumerate_T(const WeightVector& u, const Permutation& sigma, SumConvention convention) {
  if (!is_decreasing(u)) throw AlgebraError("enumerate_T needs a decreasing weight vector");
  const int n = static_cast<int>(u.size());
  WeightVector remaining = T_target(u, sigma, convention);
  std::vector<TupleSequence> out;
  TupleSequence L;
  L.rows.assign(n, WeightVector(n, 0));

  // Row j may only touch positions < j, and position j-1 is never touched by
  // lower rows, so its entry is forced to the remaining budget there.
  std::function<void(int)> fill_row;
  std::function<void(int, int)> fill_entry = [&](int j, int k) {
    if (k < 0) {
      fill_row(j - 1);
      return;
    }
    const int cap = remaining[k];
    for (int x = 0; x <= cap; ++x) {
      L.rows[j - 1][k] = x;
      remaining[k] -= x;
      fill_entry(j, k - 1);
      remaining[k] += x;
    }
    L.rows[j - 1][k] = 0;
  };
  fill_row = [&](int j) {
    if (j == 0) {
      if (betti_condition(L) && ordering_condition(L)) out.push_back(L);
      return;
    }
    const int forced = remaining[j - 1];
    L.rows[j - 1][j - 1] = forced;
    remaining[j - 1] = 0;
    fill_entry(j, j - 2);
    remaining[j - 1] = forced;
    L.rows[j - 1][j - 1] = 0;
  };
  fill_row(n);
  return out;
}

bool in_T(const TupleSequence& L, const WeightVector& u, const Permutation& sigma, SumConvention convention) {
  const int n = static_cast<int>(u.size());
  if (L.n() != n) return false;
  WeightVector total(n, 0);
  for (int j = 1; j <= n; ++j) {
    const auto& row = L.rows[j - 1];
    if (static_cast<int>(row.size()) != n) return false;
    for (int k = 0; k < n; ++k) {
      if (row[k] < 0) return false;
      if (k >= j && row[k] != 0) return false;
      total[k] += row[k];
    }
  }
  if (total != T_target(u, sigma, convention)) return false;
  for (const auto& [b, comps] : classify(L.incidence()))
    if (b >= 2) return false;
  // recompute the partial sums from scratch for each h
  for (int h = 1; h <= n; ++h) {
    WeightVector upto(n, 0), before(n, 0);
    for (int j = 1; j <= h; ++j)
      for (int k = 0; k < n; ++k) {
        upto[k] += L.rows[j - 1][k];
        if (j < h) before[k] += L.rows[j - 1][k];
      }
    const auto s = L.hat_support(h);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        const int qi = upto[s[a] - 1], qj = upto[s[b] - 1];
        if (qi == qj) return false;
        if (qj < qi && !(qj <= before[s[a] - 1])) return false;
      }
  }
  return true;
}

}  // namespace quotcoh
