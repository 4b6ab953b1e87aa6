#include "hh/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "hh/automorphism.hpp"
#include "hh/structure.hpp"

namespace hh {

HomCheck verify_hom(const Graph& source, const Graph& target, const VertexMap& m) {
  if (static_cast<int>(m.map.size()) != source.vertex_count())
    throw std::invalid_argument("verify_hom: map is not total on the source");
  for (int img : m.map) target.neighbors(img);  // range check
  for (auto [u, v] : source.edges())
    if (!target.adjacent(m.map[u], m.map[v])) return {false, {u, v}};
  return {true, {-1, -1}};
}

namespace {

VertexMap checked(const Graph& src, const Graph& tgt, std::vector<int> map,
                  const char* what) {
  VertexMap vm{std::move(map), false};
  auto chk = verify_hom(src, tgt, vm);
  if (!chk.ok) throw std::logic_error(std::string(what) + ": constructed map is not a homomorphism");
  std::vector<int> sorted = vm.map;
  std::sort(sorted.begin(), sorted.end());
  vm.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return vm;
}

}  // namespace

VertexMap head_hom(const FamilyParams& p) {
  auto verts = hh_vertices(p);
  std::vector<int> map;
  map.reserve(verts.size());
  for (const auto& v : verts) map.push_back(v.head - 1);
  return checked(hh_graph(p), complete_graph(p.n), std::move(map), "head_hom");
}

VertexMap tail_hom(const FamilyParams& p) {
  if (p.n < 2 * p.r) throw std::invalid_argument("tail_hom: requires n >= 2r");
  auto verts = hh_vertices(p);
  std::vector<int> map;
  map.reserve(verts.size());
  for (const auto& v : verts) map.push_back(kneser_index(p, v.tail));
  return checked(hh_graph(p), kneser_graph(p), std::move(map), "tail_hom");
}

VertexMap tail_growth_embed(const FamilyParams& p, const Coloring& c) {
  Graph src = hh_graph(p);
  if (!is_proper(src, c))
    throw std::invalid_argument("tail_growth_embed: coloring is not proper");
  const int chi = c.color_count;
  if (p.n + chi >= 64)
    throw std::invalid_argument("tail_growth_embed: target ground set too large");
  FamilyParams tp{p.n + chi, p.r + 1};
  auto verts = hh_vertices(p);
  std::vector<int> map;
  map.reserve(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    // Color j becomes the fresh element n+1+j.
    Mask t = with_element(verts[i].tail, p.n + 1 + c.assignment[i]);
    map.push_back(hh_index(tp, {verts[i].head, t}));
  }
  auto vm = checked(src, hh_graph(tp), std::move(map), "tail_growth_embed");
  if (!vm.injective) throw std::logic_error("tail_growth_embed: map not injective");
  return vm;
}

VertexMap shift_embed(int n) {
  Graph src = shift_graph(n);
  FamilyParams tp{n, 2};
  Graph tgt = hh_graph(tp);
  auto triples = subsets_lex(n, 3);
  std::vector<int> map;
  map.reserve(triples.size());
  for (Mask m : triples) {
    auto e = mask_elements(m);
    map.push_back(hh_index(tp, {e[1], with_element(with_element(Mask{0}, e[0]), e[2])}));
  }
  auto vm = checked(src, tgt, std::move(map), "shift_embed");
  if (!vm.injective) throw std::logic_error("shift_embed: map not injective");
  // Induced: non-adjacent triples must map to non-adjacent vertices.
  const int nv = src.vertex_count();
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (!src.adjacent(i, j) && tgt.adjacent(vm.map[i], vm.map[j]))
        throw std::logic_error("shift_embed: image not induced");
  return vm;
}

VertexMap lift_kneser_subgraph(const FamilyParams& p, const Graph& sub,
                               const std::vector<Mask>& subsets) {
  if (p.n < 2 * p.r + 1)
    throw std::invalid_argument("lift_kneser_subgraph: requires n >= 2r+1");
  if (static_cast<int>(subsets.size()) != sub.vertex_count())
    throw std::invalid_argument("lift_kneser_subgraph: subset labels incomplete");
  for (Mask m : subsets)
    if (popcount_mask(m) != p.r || (m & ~full_mask(p.n)) != 0)
      throw std::invalid_argument("lift_kneser_subgraph: bad subset label");
  for (auto [u, v] : sub.edges())
    if ((subsets[u] & subsets[v]) != 0)
      throw std::invalid_argument("lift_kneser_subgraph: sub is not a subgraph of K(n:r)");
  int delta = 0;
  for (int v = 0; v < sub.vertex_count(); ++v) delta = std::max(delta, sub.degree(v));
  // Strict bound delta < (n-r)/(n-2r).
  if (static_cast<long long>(delta) * (p.n - 2 * p.r) >= p.n - p.r)
    throw std::invalid_argument("lift_kneser_subgraph: max degree violates the bound");

  std::vector<int> map(sub.vertex_count());
  for (int v = 0; v < sub.vertex_count(); ++v) {
    Mask common;
    if (sub.degree(v) == 0) {
      common = full_mask(p.n) & ~subsets[v];
    } else {
      common = full_mask(p.n);
      sub.neighbors(v).for_each([&](int w) { common &= subsets[w]; });
    }
    if (common == 0)
      throw std::logic_error("lift_kneser_subgraph: no common head (violates the counting bound)");
    int head = mask_elements(common).front();
    map[v] = hh_index(p, {head, subsets[v]});
  }
  auto vm = checked(sub, hh_graph(p), std::move(map), "lift_kneser_subgraph");
  return vm;
}

namespace {

Mask bit_of(int e) { return Mask{1} << (e - 1); }

// The explicit even-length construction: alternating tails through the
// outside set D, length 2*ceil((r-s)/k).
std::vector<Mask> kneser_even_path(int n, int r, Mask x, Mask y) {
  const int k = n - 2 * r;
  const Mask c = x & y;
  const int s = popcount_mask(c);
  auto a = mask_elements(x & ~c);
  auto b = mask_elements(y & ~c);
  auto d = mask_elements(full_mask(n) & ~(x | y));
  const int rs = r - s;
  const int steps = (rs + k - 1) / k;
  std::vector<Mask> path{x};
  for (int i = 1; i <= steps; ++i) {
    Mask odd = 0;
    if (i < steps) {
      for (int j = 0; j < (i - 1) * k; ++j) odd |= bit_of(a[j]);
      for (int j = i * k; j < rs; ++j) odd |= bit_of(b[j]);
      for (int e : d) odd |= bit_of(e);
    } else {
      const int na = std::max(0, rs - k);
      for (int j = 0; j < na; ++j) odd |= bit_of(a[j]);
      const int need = r - na;
      for (int j = 0; j < need; ++j) odd |= bit_of(d[j]);
    }
    path.push_back(odd);
    if (i < steps) {
      Mask even = c;
      for (int j = 0; j < i * k; ++j) even |= bit_of(b[j]);
      for (int j = i * k; j < rs; ++j) even |= bit_of(a[j]);
      path.push_back(even);
    } else {
      path.push_back(y);
    }
  }
  return path;
}

}  // namespace

std::vector<Mask> kneser_path(int n, int r, Mask x, Mask y) {
  if (n < 2 * r + 1) throw std::invalid_argument("kneser_path: requires n >= 2r+1");
  if (popcount_mask(x) != r || popcount_mask(y) != r ||
      (x & ~full_mask(n)) != 0 || (y & ~full_mask(n)) != 0)
    throw std::invalid_argument("kneser_path: bad subset");
  if (x == y) throw std::invalid_argument("kneser_path: X == Y");

  const int k = n - 2 * r;
  const int s = popcount_mask(x & y);
  auto even = kneser_even_path(n, r, x, y);

  std::vector<Mask> odd;
  if (s == 0) {
    odd = {x, y};
  } else {
    // Detour through X' = (Y \ C) + D', |D'| = s; then the even
    // construction covers X' to Y with |X' cap Y| = r-s.
    const Mask c = x & y;
    auto d = mask_elements(full_mask(n) & ~(x | y));
    Mask dprime = 0;
    for (int j = 0; j < s; ++j) dprime |= bit_of(d[j]);
    Mask xprime = (y & ~c) | dprime;
    odd = kneser_even_path(n, r, xprime, y);
    odd.insert(odd.begin(), x);
  }

  const size_t even_len = even.size() - 1;
  const size_t odd_len = odd.size() - 1;
  const long long even_formula = 2 * ((r - s + k - 1) / k);
  const long long odd_formula = s == 0 ? 1 : 2 * ((s + k - 1) / k) + 1;
  auto& chosen = (odd_len < even_len) ? odd : even;
  // The construction must realize the formula it claims.
  if (static_cast<long long>(even_len) != even_formula ||
      static_cast<long long>(odd_len) != odd_formula)
    throw std::logic_error("kneser_path: construction length mismatch");
  for (size_t i = 0; i + 1 < chosen.size(); ++i)
    if ((chosen[i] & chosen[i + 1]) != 0 || popcount_mask(chosen[i]) != r)
      throw std::logic_error("kneser_path: construction is not a path");
  return chosen;
}

SetValuedMap orbit_hom(const Graph& g, const std::vector<std::vector<int>>& generators,
                       const VertexSet& s, long long group_cap) {
  if (!is_independent(g, s))
    throw std::invalid_argument("orbit_hom: s is not independent");
  if (s.empty()) throw std::invalid_argument("orbit_hom: s is empty");
  auto group = generate_group(generators, group_cap);
  auto [vorb, aorb] = orbit_count(g, generators);
  (void)aorb;
  if (vorb != 1) throw std::invalid_argument("orbit_hom: group is not vertex transitive");

  const long long nv = g.vertex_count();
  const long long total = static_cast<long long>(group.size()) *
                          static_cast<long long>(s.size());
  if (total % nv != 0)
    throw std::logic_error("orbit_hom: |G||s| not divisible by |V|");
  SetValuedMap out;
  out.ground_size = static_cast<long long>(group.size());
  out.image_size = total / nv;
  out.images.assign(nv, Bitset(static_cast<int>(group.size())));
  for (size_t gi = 0; gi < group.size(); ++gi)
    for (int v : s) out.images[group[gi][v]].set(static_cast<int>(gi));
  for (long long v = 0; v < nv; ++v)
    if (out.images[v].count() != out.image_size)
      throw std::logic_error("orbit_hom: image size != r'");
  for (auto [u, v] : g.edges())
    if (out.images[u].intersects(out.images[v]))
      throw std::logic_error("orbit_hom: adjacent vertices share a group element");
  return out;
}

}  // namespace hh
