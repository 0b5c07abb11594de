#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "klr/laurent.hpp"
#include "klr/permutation.hpp"
#include "klr/quiver.hpp"
#include "klr/zpoly.hpp"

namespace klr {

// tau_w z_1^{a_1}..z_n^{a_n} e(m), with tau_w the product along the
// lexicographically smallest reduced word of w.
struct BasisTerm {
  int word = 0;  // index into the algebra's word list (the right idempotent)
  Perm w;
  std::vector<int> a;

  friend bool operator<(const BasisTerm& s, const BasisTerm& t) {
    if (s.word != t.word) return s.word < t.word;
    if (s.w != t.w) return s.w < t.w;
    return s.a < t.a;
  }
  friend bool operator==(const BasisTerm& s, const BasisTerm& t) {
    return s.word == t.word && s.w == t.w && s.a == t.a;
  }
};

// Finitely supported integer combination of basis terms of one weight.
class KlrElement {
 public:
  KlrElement() = default;
  explicit KlrElement(Weight beta) : beta_(std::move(beta)) {}

  const Weight& beta() const { return beta_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisTerm, Int>& terms() const { return terms_; }

  void add(const BasisTerm& t, const Int& c);
  KlrElement& operator+=(const KlrElement& o);
  KlrElement& operator-=(const KlrElement& o);
  KlrElement scaled(const Int& c) const;
  bool operator==(const KlrElement& o) const { return terms_ == o.terms_; }

 private:
  Weight beta_;
  std::map<BasisTerm, Int> terms_;
};

// e(m) for a single word, e_i(k) (words starting with k copies of i),
// e_i^*(k) (words ending with k copies of i), or e_{beta1,beta2}
// (concatenation-split words).
struct IdempotentSpec {
  enum class Kind { SingleWord, Left, Right, Block };
  Kind kind = Kind::Left;
  int i = 0;
  int k = 1;
  Word word;
  Weight beta1, beta2;

  static IdempotentSpec single(Word m);
  static IdempotentSpec left(int i, int k);
  static IdempotentSpec right(int i, int k);
  static IdempotentSpec block(Weight b1, Weight b2);
  std::string str(const Quiver& q) const;
};

// One contribution of a basis term to the free right-module decomposition of
// R_beta e_{beta1,beta2}: coeff * tau_c ( term1 boxtimes term2 ).
struct CosetSplitTerm {
  Perm c;
  Int coeff;
  Perm y1, y2;
  std::vector<int> a1, a2;
};

// The KLR algebra R_beta over a fixed oriented quiver, with the normal-form
// basis pinned by lexicographically smallest reduced words. All products are
// computed by generator-at-a-time straightening; the memo tables make the
// straightening deterministic and idempotent.
class KlrAlgebra {
 public:
  KlrAlgebra(Quiver quiver, Weight beta, bool corrupt_q_sign = false);

  const Quiver& quiver() const { return quiver_; }
  const Weight& beta() const { return beta_; }
  int n() const { return n_; }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(int idx) const { return words_[static_cast<size_t>(idx)]; }
  int word_index(const Word& m) const;

  // degrees
  int deg_tau_letter(int x, int y) const;  // one crossing of letters x, y
  int deg_tau_word(const Perm& w, const Word& m) const;
  int deg_term(const BasisTerm& t) const;
  std::optional<int> element_degree(const KlrElement& e) const;  // homogeneous or nullopt
  int min_base_degree() const;

  Word left_word(const BasisTerm& t) const { return perm_act(t.w, word(t.word)); }

  // generators as elements
  KlrElement zero() const { return KlrElement(beta_); }
  KlrElement gen_e(int wordIdx) const;
  KlrElement gen_z(int j, int wordIdx) const;
  KlrElement gen_tau(int j, int wordIdx) const;
  KlrElement gen_z(int j) const;    // sum over all words
  KlrElement gen_tau(int j) const;  // sum over all words
  KlrElement one() const;
  KlrElement idempotent(const IdempotentSpec& spec) const;

  std::vector<int> words_of(const IdempotentSpec& spec) const;

  KlrElement multiply(const KlrElement& x, const KlrElement& y);
  // tau_i * term, in the normal-form basis
  KlrElement straighten_tau(int i, const BasisTerm& t);
  // z_j * term
  KlrElement straighten_z(int j, const BasisTerm& t);
  // P(z) * element, P acting by left multiplication
  KlrElement leftmul_zpoly(const ZPoly& p, const KlrElement& e);
  KlrElement leftmul_tau(int i, const KlrElement& e);

  // all basis terms of degree exactly d, deterministic order
  std::vector<BasisTerm> basis_in_degree(int d) const;

  // graded dimension of e(m') R e(m) up to degree D, by basis counting
  TruncatedSeries corner_series(int mIdx, int mOutIdx, int D) const;
  TruncatedSeries full_series(int D) const;

  // graded dimensions of R e R and R/(R e R) up to D, the first by exact rank
  // of normal-form products; throws if D is below the minimal degree
  std::pair<TruncatedSeries, TruncatedSeries> ideal_and_quotient_series(const IdempotentSpec& spec,
                                                                        int D);

  // Q_{m,i}(z_i, z_{i+1}) as a polynomial, for the letters of m at (i, i+1)
  ZPoly q_zpoly(const Word& m, int i) const;
  QPolynomial q_poly_pair(int x, int y) const;
  // (Q_{m,i}(z_{i+2}, z_{i+1}) - Q_{m,i}(z_i, z_{i+1})) / (z_{i+2} - z_i),
  // zero unless m_i = m_{i+2}
  ZPoly rel5_zpoly(const Word& m, int i) const;

  // induction support: normal form of g * tau_c e(m) with g a generator,
  // and the coset-basis decomposition of a normal-form term
  KlrElement times_coset(const KlrElement& g, const Perm& c, int wordIdx);
  std::vector<CosetSplitTerm> coset_split(const BasisTerm& t, int n1);

  const std::vector<int>& canonical(const Perm& w) const;

 private:
  KlrElement leftmul_tau_core(int i, const Perm& w, int wordIdx);
  KlrElement leftmul_z_core(int j, const Perm& w, int wordIdx);
  KlrElement nav_word(const std::vector<int>& a, int wordIdx);
  // transforms `a` (reduced, j a left descent of its product) into a word
  // starting with j; returns the correction element accumulated along the way
  KlrElement pull_front(std::vector<int>& a, int j, int wordIdx);
  KlrElement shift_exponents(const KlrElement& e, const std::vector<int>& a) const;
  KlrElement leftmul_monomial(const ZPoly::Mono& mono, const KlrElement& e);

  Quiver quiver_;
  Weight beta_;
  int n_;
  bool corrupt_;
  std::vector<Word> words_;
  std::map<Word, int> word_index_;

  mutable std::map<Perm, std::vector<int>> canon_;
  std::map<std::tuple<int, Perm, int>, KlrElement> memo_tau_;
  std::map<std::tuple<int, Perm, int>, KlrElement> memo_z_;
  std::map<std::pair<std::vector<int>, int>, KlrElement> memo_nav_;
  std::map<std::tuple<Perm, int, int>, std::vector<CosetSplitTerm>> memo_split_;
};

// Minimal-length representatives of S_{ht b1} x S_{ht b2} cosets; the terms
// tau_w e_{beta1,beta2} over these w form a free right-module basis.
std::vector<Perm> coset_basis(const Weight& beta1, const Weight& beta2);

}  // namespace klr
