#ifndef HH_FAMILIES_HPP
#define HH_FAMILIES_HPP

#include <string>
#include <vector>

#include "hh/graph.hpp"
#include "hh/metric.hpp"
#include "hh/subsets.hpp"

namespace hh {

struct FamilyParams {
  int n;  // ground-set size
  int r;  // tail size
};

// A vertex (head, tail): head in {1..n}, tail an r-subset not containing it.
struct HHVertex {
  int head;
  Mask tail;

  friend bool operator==(const HHVertex& a, const HHVertex& b) {
    return a.head == b.head && a.tail == b.tail;
  }
};

struct ClosedFormReport {
  long long vertex_count;
  long long valency;
  long long edge_count;
  Metric diameter_formula = Metric::infinite();
  Metric odd_girth_formula = Metric::infinite();
  long long alpha_lower;
  long long chi_upper;
  long long component_count;
  // The diameter/odd girth formulas assume n >= 2r+1; below that they are
  // INFINITE and flagged vacuous here.
  bool metric_formulas_vacuous;
};

// Lexicographic rank of an r-subset mask among r-subsets of {1..n},
// ordering subsets by their ascending element tuples.
long long lex_rank(Mask subset, int n);

// All r-subsets of {1..n} ordered by ascending element tuple.
std::vector<Mask> subsets_lex(int n, int r);

// Canonical vertex list of H(n:r): tails in tuple-lex order, heads
// ascending within each tail.
std::vector<HHVertex> hh_vertices(const FamilyParams& p);

// Canonical index of a vertex; throws if the vertex is invalid.
int hh_index(const FamilyParams& p, const HHVertex& v);

std::string hh_label(const HHVertex& v);
HHVertex hh_parse_label(const std::string& label);

// H(n:r): (hx,Tx) ~ (hy,Ty) iff hx in Ty, hy in Tx, Tx and Ty disjoint.
Graph hh_graph(const FamilyParams& p);

// K(n:r): r-subsets in tuple-lex order, adjacent iff disjoint.
Graph kneser_graph(const FamilyParams& p);

std::vector<Mask> kneser_vertices(const FamilyParams& p);
int kneser_index(const FamilyParams& p, Mask subset);

Graph complete_graph(int n);

// S_n on 3-subsets: {x1<x2<x3} ~ {y1<y2<y3} iff x2=y1 and x3=y2 (either way).
Graph shift_graph(int n);

ClosedFormReport closed_form(const FamilyParams& p);

}  // namespace hh

#endif
