#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/algebra.hpp"
#include "klr/laurent.hpp"
#include "klr/linalg.hpp"

namespace klr {

// eps of the zero module
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

// Finite-dimensional graded R_beta-module: a tagged basis and one exact
// rational matrix per generator. e(m) acts as the coordinate projection onto
// the vectors tagged with word m.
class GradedModule {
 public:
  struct BasisVec {
    int word;
    int degree;
  };

  GradedModule() = default;
  GradedModule(Weight beta, std::vector<BasisVec> basis, std::vector<MatQ> z, std::vector<MatQ> tau);

  static GradedModule zero(Weight beta);

  const Weight& beta() const { return beta_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<BasisVec>& basis() const { return basis_; }
  const MatQ& z(int j) const { return z_[static_cast<size_t>(j)]; }
  const MatQ& tau(int j) const { return tau_[static_cast<size_t>(j)]; }

  int min_degree() const;
  int max_degree() const;

  GradedModule shifted(int k) const;  // grading shift <k>

  VecQ unit(int b) const;
  VecQ apply_z(int j, const VecQ& v) const { return z_[static_cast<size_t>(j)] * v; }
  VecQ apply_tau(int j, const VecQ& v) const { return tau_[static_cast<size_t>(j)] * v; }
  VecQ apply_e_word(int wordIdx, const std::vector<Word>& words, const VecQ& v) const;
  // action of tau_{y} z^{a} e(word tag of every nonzero coordinate assumed
  // compatible); letters of the canonical word applied right to left
  VecQ apply_perm_exps(const Perm& y, const std::vector<int>& a, const VecQ& v) const;

  std::map<Word, LaurentPoly> character(const Quiver& q) const;

 private:
  Weight beta_;
  std::vector<BasisVec> basis_;
  std::vector<MatQ> z_, tau_;
};

// all six defining relations plus grading constraints, as matrix identities
std::optional<std::string> validate(const KlrAlgebra& alg, const GradedModule& m);

// the 1-dimensional module L(i) over R_{alpha_i}
GradedModule simple_letter(const Quiver& q, int i);
// the trivial module over R_0
GradedModule trivial_module(const Quiver& q);

// ---- graded subspaces of a module ----

// Word- and degree-homogeneous subspace, kept as echelon rows per slice.
class GradedSubspace {
 public:
  explicit GradedSubspace(const GradedModule* m) : m_(m) {}

  bool add_vector(const VecQ& v);  // must be slice-homogeneous; true if grew
  int dim() const;
  bool contains(const VecQ& v) const;
  VecQ reduce(const VecQ& v) const;  // representative modulo the subspace
  bool is_whole() const { return dim() == m_->dim(); }
  bool is_trivial() const { return dim() == 0; }
  // close under the generator action (Krylov); returns *this
  GradedSubspace& close_under_action();
  std::vector<VecQ> slice_basis() const;  // deterministic order
  std::vector<int> pivot_coordinates() const;

 private:
  std::pair<int, int> slice_of(const VecQ& v, bool* homogeneous) const;
  const GradedModule* m_;
  // slice -> echelon rows (pivot coordinate -> sparse row)
  std::map<std::pair<int, int>, std::map<int, std::map<int, Rat>>> rows_;
};

GradedModule quotient_module(const GradedModule& m, const GradedSubspace& u);
GradedModule submodule_module(const GradedModule& m, const GradedSubspace& u);

// induction M1 * M2 over the coset basis; requires the algebra of
// beta1 + beta2 for straightening
GradedModule induce(KlrAlgebra& alg, const GradedModule& m1, const GradedModule& m2);

// largest quotient on which R e R acts by zero
GradedModule top_quotient(KlrAlgebra& alg, const GradedModule& m, const IdempotentSpec& spec);
// largest submodule annihilated by R e R, as a subspace of m
GradedSubspace sub_invariants_subspace(KlrAlgebra& alg, const GradedModule& m,
                                       const IdempotentSpec& spec);
// the same submodule as an abstract module
GradedModule sub_invariants(KlrAlgebra& alg, const GradedModule& m, const IdempotentSpec& spec);

// head of L * L(i) for simple L: repeatedly strips the largest submodule
// annihilated by R e_i^*(eps) R, where eps = eps_i^*(L) + 1; every factor of
// the radical has a smaller trailing run of i, so the iteration terminates at
// the simple head
GradedModule head_of_letter_extension(KlrAlgebra& alg, const GradedModule& induced, int i, int eps);

// M / rad M with the radical of the acting operator algebra computed from
// the kernel of the trace form, degree by degree
GradedModule radical_quotient(const KlrAlgebra& alg, const GradedModule& m);

// dimension of the full commutant of the action; 1 certifies simplicity of a
// semisimple module
int commutant_dimension(const GradedModule& m);

// dimension of degree-0 endomorphisms of a module cyclic over its first basis
// vector, or -1 when that vector does not generate; 1 is the cheap per-node
// simplicity guard used by the simples BFS
int cyclic_end_dimension(const GradedModule& m);

// eps_i / eps_i^* from the word support; kMinusInfinity for the zero module
int module_eps(const GradedModule& m, const std::vector<Word>& words, int i);
int module_eps_star(const GradedModule& m, const std::vector<Word>& words, int i);

// shift making the character bar-invariant; throws if none exists
GradedModule self_dual_normalize(const Quiver& q, const GradedModule& m);

}  // namespace klr
