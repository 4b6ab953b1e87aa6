#include "hh/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hh {

namespace {

void check_params(const FamilyParams& p) {
  if (p.r < 1) throw std::invalid_argument("FamilyParams: r must be >= 1");
  if (p.n < 1 || p.n >= 64) throw std::invalid_argument("FamilyParams: n out of range");
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

long long lex_rank(Mask subset, int n) {
  auto elems = mask_elements(subset);
  const int r = static_cast<int>(elems.size());
  long long rank = 0;
  int prev = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = prev + 1; j < elems[i]; ++j) rank += binomial(n - j, r - i - 1);
    prev = elems[i];
  }
  return rank;
}

std::vector<Mask> subsets_lex(int n, int r) {
  auto out = all_subsets(n, r);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return mask_elements(a) < mask_elements(b);
  });
  return out;
}

std::vector<HHVertex> hh_vertices(const FamilyParams& p) {
  check_params(p);
  if (p.n < p.r + 1)
    throw std::invalid_argument("hh_vertices: n < r+1, vertex set is empty");
  std::vector<HHVertex> out;
  out.reserve(static_cast<size_t>((p.n - p.r) * binomial(p.n, p.r)));
  for (Mask t : subsets_lex(p.n, p.r))
    for (int h = 1; h <= p.n; ++h)
      if (!element_in(t, h)) out.push_back({h, t});
  return out;
}

int hh_index(const FamilyParams& p, const HHVertex& v) {
  check_params(p);
  if (popcount_mask(v.tail) != p.r || v.tail >= (Mask{1} << p.n))
    throw std::invalid_argument("hh_index: bad tail");
  if (v.head < 1 || v.head > p.n || element_in(v.tail, v.head))
    throw std::invalid_argument("hh_index: bad head");
  int offset = 0;
  for (int e = 1; e < v.head; ++e)
    if (!element_in(v.tail, e)) ++offset;
  return static_cast<int>(lex_rank(v.tail, p.n) * (p.n - p.r) + offset);
}

std::string hh_label(const HHVertex& v) {
  std::ostringstream os;
  os << v.head << ';';
  auto elems = mask_elements(v.tail);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ',';
    os << elems[i];
  }
  return os.str();
}

HHVertex hh_parse_label(const std::string& label) {
  auto semi = label.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("hh_parse_label: missing ';'");
  HHVertex v{std::stoi(label.substr(0, semi)), 0};
  std::istringstream is(label.substr(semi + 1));
  std::string tok;
  while (std::getline(is, tok, ',')) v.tail = with_element(v.tail, std::stoi(tok));
  return v;
}

Graph hh_graph(const FamilyParams& p) {
  auto verts = hh_vertices(p);
  const int nv = static_cast<int>(verts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      const auto& x = verts[i];
      const auto& y = verts[j];
      if ((x.tail & y.tail) == 0 && element_in(y.tail, x.head) &&
          element_in(x.tail, y.head))
        edges.emplace_back(i, j);
    }
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (const auto& v : verts) labels.push_back(hh_label(v));
  return Graph(nv, edges, std::move(labels));
}

std::vector<Mask> kneser_vertices(const FamilyParams& p) {
  check_params(p);
  if (p.n < p.r) throw std::invalid_argument("kneser_vertices: n < r");
  return subsets_lex(p.n, p.r);
}

int kneser_index(const FamilyParams& p, Mask subset) {
  if (popcount_mask(subset) != p.r)
    throw std::invalid_argument("kneser_index: bad subset size");
  return static_cast<int>(lex_rank(subset, p.n));
}

namespace {
std::string subset_label(Mask m) {
  std::ostringstream os;
  auto elems = mask_elements(m);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ',';
    os << elems[i];
  }
  return os.str();
}
}  // namespace

Graph kneser_graph(const FamilyParams& p) {
  auto verts = kneser_vertices(p);
  const int nv = static_cast<int>(verts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if ((verts[i] & verts[j]) == 0) edges.emplace_back(i, j);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (Mask m : verts) labels.push_back(subset_label(m));
  return Graph(nv, edges, std::move(labels));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Graph(n, edges, std::move(labels));
}

Graph shift_graph(int n) {
  if (n < 3) throw std::invalid_argument("shift_graph: n must be >= 3");
  auto verts = subsets_lex(n, 3);
  const int nv = static_cast<int>(verts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      auto x = mask_elements(verts[i]);
      auto y = mask_elements(verts[j]);
      if ((x[1] == y[0] && x[2] == y[1]) || (y[1] == x[0] && y[2] == x[1]))
        edges.emplace_back(i, j);
    }
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (Mask m : verts) labels.push_back(subset_label(m));
  return Graph(nv, edges, std::move(labels));
}

ClosedFormReport closed_form(const FamilyParams& p) {
  check_params(p);
  if (p.r < 2 || p.n < 2 * p.r)
    throw std::invalid_argument("closed_form: requires r >= 2 and n >= 2r");
  const int n = p.n, r = p.r;
  ClosedFormReport rep{};
  rep.vertex_count = (n - r) * binomial(n, r);
  rep.valency = r * binomial(n - r - 1, r - 1);
  rep.edge_count = rep.vertex_count * rep.valency / 2;
  rep.chi_upper = n - 2 * r + 2;
  rep.component_count = (n >= 2 * r + 1) ? 1 : binomial(2 * r, r) / 2;
  rep.metric_formulas_vacuous = (n < 2 * r + 1);
  if (rep.metric_formulas_vacuous) {
    rep.diameter_formula = Metric::infinite();
    rep.odd_girth_formula = Metric::infinite();
  } else {
    if (2 * n >= 5 * r)
      rep.diameter_formula = Metric::finite(4);
    else
      rep.diameter_formula =
          Metric::finite(std::max<long long>(5, ceil_div(r - 1, n - 2 * r) + 1));
    rep.odd_girth_formula =
        Metric::finite(std::max<long long>(5, 2 * ceil_div(r, n - 2 * r) + 1));
  }
  if (n <= r * r + 1) {
    rep.alpha_lower = r * binomial(n - 1, r);
  } else {
    long long extra = (r - 1) * binomial(r * r, r);
    rep.alpha_lower = binomial(n, r + 1) + extra / (r + 1);
  }
  return rep;
}

}  // namespace hh
