#pragma once

#include <string>
#include <vector>

#include "klr/numeric.hpp"

namespace klr {

// Coefficient vector over the vertex set, in declaration order. Elements of
// the root lattice Q; nonnegative vectors are Q^+.
using Weight = std::vector<long long>;
// Sequence of vertex indices.
using Word = std::vector<int>;

enum class VertexKind { Sink, Source, Neither, Isolated };

// Loop-free oriented multigraph with a fixed total vertex order (declaration
// order). The orientation is part of the identity of every algebra built on
// top; reflections produce new Quiver values.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_names,
         const std::vector<std::pair<std::string, std::string>>& arrow_names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  int vertex(const std::string& name) const;  // throws on unknown name

  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  // number of arrows i -> j
  int arrow_count(int i, int j) const { return count_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  int edges_between(int i, int j) const { return arrow_count(i, j) + arrow_count(j, i); }
  bool adjacent(int i, int j) const { return edges_between(i, j) > 0; }
  long long cartan(int i, int j) const { return i == j ? 2 : -edges_between(i, j); }

  VertexKind sink_source_status(int i) const;
  Quiver reflect_orientation(int i) const;

  // stable content string: vertex names + sorted arrows; used for cache keys
  std::string content_key() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<int>> count_;
};

std::string vertex_kind_name(VertexKind k);

// --- weights ---

long long height(const Weight& beta);
bool in_q_plus(const Weight& beta);
Weight alpha(const Quiver& q, int i);
Weight weight_add(const Weight& a, const Weight& b);
// s_i beta = beta - (sum_j a_{ij} beta_j) alpha_i
Weight weyl_reflect(const Quiver& q, int i, const Weight& beta);
// (alpha_i, beta) with (alpha_i, alpha_j) the symmetric Cartan form
long long cartan_pairing(const Quiver& q, int i, const Weight& beta);
std::string weight_str(const Weight& beta);

// --- words ---

Weight word_weight(const Quiver& q, const Word& m);
Word sigma(const Word& m, int i);  // swap positions i, i+1 (0-based)
// All words of content beta, lexicographic in the vertex order; throws if
// beta has a negative coefficient.
std::vector<Word> enumerate_words(const Quiver& q, const Weight& beta);
std::string word_str(const Quiver& q, const Word& m);
Word concat(const Word& a, const Word& b);

// --- Q polynomials ---

// Q_{m,i}(u,v): 0, 1, or (-1)^h (u-v)^a.
struct QPolynomial {
  enum class Kind { Zero, One, SignedPower };
  Kind kind = Kind::Zero;
  int h = 0;  // arrows m_i -> m_{i+1}
  int a = 0;  // all edges between m_i and m_{i+1}
  bool operator==(const QPolynomial&) const = default;
  std::string str() const;
};

// position i is 0-based; requires i+1 < ht(m)
QPolynomial q_polynomial(const Quiver& q, const Word& m, int i);

}  // namespace klr
