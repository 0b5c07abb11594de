#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "klr/module.hpp"

namespace klr {

using Character = std::map<Word, LaurentPoly>;

struct SimpleEntry {
  std::string label;
  GradedModule module;  // self-dual normalized
  Character character;
  std::vector<int> eps, eps_star;
  std::string provenance;  // BFS path of appended letters
};

// Simple graded modules of one weight, labels in BFS discovery order.
struct SimplesTable {
  Weight beta;
  std::vector<SimpleEntry> entries;

  int find_by_character(const Character& ch) const;  // -1 if absent
  int size() const { return static_cast<int>(entries.size()); }
};

LaurentPoly total_character(const Character& ch);
Character shifted_character(const Character& ch, int k);

// Quantum shuffle of two characters with crossing-degree twists; the
// character of the induction computed without building any module.
Character shuffle_character(const Quiver& q, const Character& c1, const Character& c2);

struct Decomposition {
  bool ok = false;
  std::string error;
  // multiplicity (with shifts) per table entry, aligned with table indices
  std::vector<LaurentPoly> mult;
};

// unique expansion of ch over the table characters with Laurent coefficients;
// flags non-nonnegative or inconsistent expansions
Decomposition decompose_character(const Character& ch, const SimplesTable& table);

// Per-quiver context: one algebra and one simples table per weight, built
// bottom-up by the BFS over heads of L * L(i). Deterministic throughout.
class TableContext {
 public:
  TableContext(Quiver quiver, bool corrupt_q_sign = false, int heightCap = 5);

  const Quiver& quiver() const { return quiver_; }
  int height_cap() const { return heightCap_; }
  // enables the on-disk table cache; never changes results, only timing
  void set_cache_dir(std::string dir) { cacheDir_ = std::move(dir); }

  KlrAlgebra& algebra(const Weight& beta);
  const SimplesTable& table(const Weight& beta);  // builds dependencies on demand
  bool has_table(const Weight& beta) const { return tables_.count(beta) > 0; }

  // all weights of the given height in deterministic order
  std::vector<Weight> weights_of_height(int h) const;

  // the unique index of head(L * L(i)) in table(beta + alpha_i)
  int head_label(const Weight& beta, int entry, int i);

 private:
  void build_weight(const Weight& beta);
  bool load_cached(const Weight& beta);
  void save_cached(const Weight& beta) const;

  Quiver quiver_;
  bool corrupt_;
  int heightCap_;
  std::string cacheDir_;
  std::map<Weight, std::unique_ptr<KlrAlgebra>> algebras_;
  std::map<Weight, SimplesTable> tables_;
  // (parent weight, parent entry, letter) -> entry index at parent + alpha_i
  std::map<std::tuple<Weight, int, int>, int> headEdge_;
};

}  // namespace klr
