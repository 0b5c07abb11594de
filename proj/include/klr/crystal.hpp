#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/quiver.hpp"

namespace klr {

// Element of B(infinity) in the Kashiwara-embedding realization attached to
// the periodic sequence iota = (vertex order repeated): finitely supported
// coordinates (..., a_2, a_1) in the semi-infinite tensor of elementary
// crystals, rightmost slot first, plus the cached lowering string that
// produced the element from the highest element.
struct CrystalElement {
  std::vector<int> coords;  // coords[k] = a_{k+1}; trailing zeros trimmed
  std::vector<int> string;  // letters applied first-to-last from the top

  friend bool operator<(const CrystalElement& a, const CrystalElement& b) {
    return a.coords < b.coords;
  }
  friend bool operator==(const CrystalElement& a, const CrystalElement& b) {
    return a.coords == b.coords;
  }
};

// Kashiwara operators and Saito reflections over a fixed symmetric Cartan
// datum. The quiver is used only through its Cartan matrix and vertex order.
class CrystalModel {
 public:
  explicit CrystalModel(Quiver quiver) : quiver_(std::move(quiver)) {}

  const Quiver& quiver() const { return quiver_; }
  CrystalElement highest() const { return {}; }

  Weight weight_beta(const CrystalElement& b) const;  // wt(b) = -beta

  int eps(int i, const CrystalElement& b) const;
  long long phi(int i, const CrystalElement& b) const;
  CrystalElement apply_f(int i, const CrystalElement& b) const;
  std::optional<CrystalElement> apply_e(int i, const CrystalElement& b) const;

  int eps_star(int i, const CrystalElement& b) const;
  long long phi_star(int i, const CrystalElement& b) const;
  CrystalElement apply_f_star(int i, const CrystalElement& b) const;
  std::optional<CrystalElement> apply_e_star(int i, const CrystalElement& b) const;

  // T_i(b) = (f*_i)^{phi_i(b)} e_i^{eps_i(b)} b for eps*_i(b) = 0; the
  // defining properties are asserted on every call
  CrystalElement saito_reflect(int i, const CrystalElement& b) const;
  // T_i^{-1}(b') = f_i^{phi*_i(b')} (e*_i)^{eps*_i(b')} b' for eps_i(b') = 0
  CrystalElement saito_reflect_inv(int i, const CrystalElement& b) const;

  // replay the cached string and confirm it reproduces the coordinates
  bool string_consistent(const CrystalElement& b) const;

 private:
  friend class CrystalTable;
  // scan machinery in the embedding rooted at vertex `root` (iota starts
  // there); root = vertex 0 is the canonical model
  int slot_vertex(int root, int k) const;  // vertex of slot k (0-based)
  int eps_rooted(int root, const std::vector<int>& c, int i) const;
  long long weight_pairing(int root, const std::vector<int>& c, int i) const;
  std::vector<int> apply_f_rooted(int root, std::vector<int> c, int i) const;
  std::optional<std::vector<int>> apply_e_rooted(int root, std::vector<int> c, int i) const;
  std::vector<int> replay(int root, const std::vector<int>& string) const;
  // greedy raising string in the rooted model (applied first-to-last lowers
  // from the top back to c)
  std::vector<int> extract_string(int root, std::vector<int> c) const;
  static void trim(std::vector<int>& c);

  Quiver quiver_;
};

// BFS closure of the highest element under the lowering operators up to a
// height cap; per-weight buckets in deterministic order.
class CrystalTable {
 public:
  CrystalTable(const CrystalModel& model, int heightCap);

  const CrystalModel& model() const { return *model_; }
  int height_cap() const { return cap_; }

  const std::vector<CrystalElement>& at(const Weight& beta) const;
  bool contains(const CrystalElement& b) const;
  int index_of(const Weight& beta, const CrystalElement& b) const;  // -1 if absent
  std::vector<Weight> weights_of_height(int h) const;
  long long total_size() const;

 private:
  const CrystalModel* model_;
  int cap_;
  std::map<Weight, std::vector<CrystalElement>> buckets_;
  std::map<std::vector<int>, std::pair<Weight, int>> index_;
};

}  // namespace klr
