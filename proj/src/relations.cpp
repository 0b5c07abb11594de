#include "klr/relations.hpp"

#include <sstream>

#include "klr/linalg.hpp"
#include "klr/polyrep.hpp"

namespace klr {

namespace {

std::string describe(const KlrAlgebra& alg, const Word& m) {
  return "beta=" + weight_str(alg.beta()) + " m=" + word_str(alg.quiver(), m);
}

// deterministic seed exponents (0,1,2,...)
ZPoly::Mono generic_mono(int n) {
  ZPoly::Mono mu(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) mu[static_cast<size_t>(j)] = j % 3;
  return mu;
}

}  // namespace

std::optional<std::string> check_defining_relations(KlrAlgebra& alg) {
  const int n = alg.n();
  const auto& words = alg.words();
  // Q symmetry: Q_{sigma m, i}(u,v) = (-1)^a Q_{m,i}(u,v)
  for (int x = 0; x < alg.quiver().size(); ++x)
    for (int y = 0; y < alg.quiver().size(); ++y) {
      QPolynomial q = alg.q_poly_pair(x, y), qr = alg.q_poly_pair(y, x);
      if (q.kind != qr.kind) return "Q symmetry: kind mismatch";
      if (q.kind == QPolynomial::Kind::SignedPower) {
        if (q.a != qr.a || q.a != alg.quiver().edges_between(x, y) || q.h + qr.h != q.a)
          return "Q symmetry: (-1)^a identity violated for pair " + alg.quiver().name(x) + "," +
                 alg.quiver().name(y);
      }
    }
  for (int mi = 0; mi < static_cast<int>(words.size()); ++mi) {
    const Word& m = words[static_cast<size_t>(mi)];
    KlrElement em = alg.gen_e(mi);
    // (2) idempotents and polynomial commutativity
    for (int mj = 0; mj < static_cast<int>(words.size()); ++mj) {
      KlrElement prod = alg.multiply(em, alg.gen_e(mj));
      KlrElement expect = (mi == mj) ? em : alg.zero();
      if (!(prod == expect)) return "rel 2 (orthogonality): " + describe(alg, m);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        KlrElement zi = alg.gen_z(i, mi), zj = alg.gen_z(j, mi);
        if (!(alg.multiply(zi, zj) == alg.multiply(zj, zi)))
          return "rel 2 ([z_i,z_j]): " + describe(alg, m);
      }
    for (int j = 0; j < n; ++j) {
      if (!(alg.multiply(alg.gen_z(j), em) == alg.multiply(em, alg.gen_z(j))))
        return "z e(m) = e(m) z: " + describe(alg, m);
    }
    // (3) word shuffling and far commutation
    for (int i = 0; i + 1 < n; ++i) {
      KlrElement ti = alg.multiply(alg.gen_tau(i), em);
      KlrElement proj = alg.multiply(alg.gen_e(alg.word_index(sigma(m, i))), ti);
      if (!(ti == proj)) return "rel 3 (tau e(m) = e(sm) tau e(m)): " + describe(alg, m);
      for (int j = i + 2; j + 1 < n; ++j) {
        KlrElement lhs = alg.multiply(alg.gen_tau(i), alg.multiply(alg.gen_tau(j), em));
        KlrElement rhs = alg.multiply(alg.gen_tau(j), alg.multiply(alg.gen_tau(i), em));
        if (!(lhs == rhs)) return "rel 3 (far commutation): " + describe(alg, m);
      }
    }
    // (4) quadratic
    for (int i = 0; i + 1 < n; ++i) {
      KlrElement lhs = alg.multiply(alg.gen_tau(i), alg.multiply(alg.gen_tau(i), em));
      KlrElement rhs = alg.leftmul_zpoly(alg.q_zpoly(m, i), em);
      if (!(lhs == rhs)) return "rel 4: i=" + std::to_string(i + 1) + " " + describe(alg, m);
    }
    // (5) braid with divided-difference correction
    for (int i = 0; i + 2 < n; ++i) {
      KlrElement a = alg.multiply(
          alg.gen_tau(i + 1), alg.multiply(alg.gen_tau(i), alg.multiply(alg.gen_tau(i + 1), em)));
      KlrElement b = alg.multiply(
          alg.gen_tau(i), alg.multiply(alg.gen_tau(i + 1), alg.multiply(alg.gen_tau(i), em)));
      a -= b;
      KlrElement rhs = alg.leftmul_zpoly(alg.rel5_zpoly(m, i), em);
      if (!(a == rhs)) return "rel 5: i=" + std::to_string(i + 1) + " " + describe(alg, m);
    }
    // (6) tau-z commutation
    for (int i = 0; i + 1 < n; ++i)
      for (int k = 0; k < n; ++k) {
        KlrElement lhs = alg.multiply(alg.gen_tau(i), alg.multiply(alg.gen_z(k), em));
        int sk = (k == i) ? i + 1 : (k == i + 1) ? i : k;
        lhs -= alg.multiply(alg.gen_z(sk), alg.multiply(alg.gen_tau(i), em));
        KlrElement rhs = alg.zero();
        if (m[static_cast<size_t>(i)] == m[static_cast<size_t>(i) + 1]) {
          if (k == i) rhs = em.scaled(-1);
          if (k == i + 1) rhs = em;
        }
        if (!(lhs == rhs))
          return "rel 6: i=" + std::to_string(i + 1) + " k=" + std::to_string(k + 1) + " " +
                 describe(alg, m);
      }
  }
  // (2) completeness: sum of idempotents is the unit
  KlrElement one = alg.one();
  if (!(alg.multiply(one, one) == one)) return "rel 2 (unit): beta=" + weight_str(alg.beta());
  return std::nullopt;
}

std::optional<std::string> check_polyrep_relations(const KlrAlgebra& alg) {
  const int n = alg.n();
  PolyRep rho(alg);
  const auto& words = alg.words();
  // seed vectors: 1 and a generic monomial, per word component
  std::vector<PolyRep::Vec> seeds;
  for (int mi = 0; mi < static_cast<int>(words.size()); ++mi) {
    seeds.push_back(PolyRep::unit(mi, n));
    PolyRep::Vec v;
    v[mi] = ZPoly::monomial(generic_mono(n), 1);
    seeds.push_back(v);
  }
  for (const auto& seed : seeds) {
    for (int mi = 0; mi < static_cast<int>(words.size()); ++mi) {
      const Word& m = words[static_cast<size_t>(mi)];
      PolyRep::Vec vm = rho.apply_e(mi, seed);
      bool empty = true;
      for (const auto& [w, p] : vm) empty = empty && p.is_zero();
      if (empty) continue;
      for (int i = 0; i + 1 < n; ++i) {
        // rel 4
        PolyRep::Vec lhs = rho.apply_tau(i, rho.apply_tau(i, vm));
        ZPoly q = alg.q_zpoly(m, i);
        PolyRep::Vec rhs;
        for (const auto& [w, p] : vm) rhs[w] = q * p;
        if (!PolyRep::equal(lhs, rhs)) return std::optional<std::string>("polyrep rel 4: " + describe(alg, m));
        // rel 6
        for (int k = 0; k < n; ++k) {
          PolyRep::Vec a = rho.apply_tau(i, rho.apply_z(k, vm));
          int sk = (k == i) ? i + 1 : (k == i + 1) ? i : k;
          PolyRep::Vec b = rho.apply_z(sk, rho.apply_tau(i, vm));
          for (auto& [w, p] : b) p = p.scaled(-1);
          PolyRep::Vec diff = PolyRep::add(a, b);
          PolyRep::Vec expect;
          if (m[static_cast<size_t>(i)] == m[static_cast<size_t>(i) + 1]) {
            if (k == i)
              for (const auto& [w, p] : vm) expect[w] = p.scaled(-1);
            if (k == i + 1) expect = vm;
          }
          if (!PolyRep::equal(diff, expect))
            return std::optional<std::string>("polyrep rel 6: " + describe(alg, m));
        }
      }
      for (int i = 0; i + 2 < n; ++i) {
        PolyRep::Vec a = rho.apply_tau(i + 1, rho.apply_tau(i, rho.apply_tau(i + 1, vm)));
        PolyRep::Vec b = rho.apply_tau(i, rho.apply_tau(i + 1, rho.apply_tau(i, vm)));
        for (auto& [w, p] : b) p = p.scaled(-1);
        PolyRep::Vec diff = PolyRep::add(a, b);
        ZPoly d = alg.rel5_zpoly(m, i);
        PolyRep::Vec expect;
        if (!d.is_zero())
          for (const auto& [w, p] : vm) expect[w] = d * p;
        if (!PolyRep::equal(diff, expect))
          return std::optional<std::string>("polyrep rel 5: " + describe(alg, m));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_oracle_equivalence(KlrAlgebra& alg, int maxDeg, int expCap) {
  const int n = alg.n();
  PolyRep rho(alg);
  std::vector<PolyRep::Vec> seeds;
  for (int mi = 0; mi < static_cast<int>(alg.words().size()); ++mi) {
    seeds.push_back(PolyRep::unit(mi, n));
    PolyRep::Vec v;
    v[mi] = ZPoly::monomial(generic_mono(n), 1);
    seeds.push_back(v);
  }
  for (int d = std::min(alg.min_base_degree(), 0); d <= maxDeg; ++d) {
    for (const BasisTerm& b : alg.basis_in_degree(d)) {
      int tot = 0;
      for (int e : b.a) tot += e;
      if (tot > expCap) continue;
      KlrElement eb(alg.beta());
      eb.add(b, 1);
      for (const auto& seed : seeds) {
        PolyRep::Vec vb = rho.apply_term(b, seed);
        // z generators
        for (int j = 0; j < n; ++j) {
          KlrElement nf = alg.multiply(alg.gen_z(j), eb);
          if (!PolyRep::equal(rho.apply(nf, seed), rho.apply_z(j, vb)))
            return std::optional<std::string>("oracle mismatch on z_" + std::to_string(j + 1) +
                                              " * basis term, beta=" + weight_str(alg.beta()));
        }
        for (int i = 0; i + 1 < n; ++i) {
          KlrElement nf = alg.multiply(alg.gen_tau(i), eb);
          if (!PolyRep::equal(rho.apply(nf, seed), rho.apply_tau(i, vb)))
            return std::optional<std::string>("oracle mismatch on tau_" + std::to_string(i + 1) +
                                              " * basis term, beta=" + weight_str(alg.beta()));
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_tau_block_freeness(const KlrAlgebra& alg) {
  const int n = alg.n();
  PolyRep rho(alg);
  const auto& words = alg.words();
  for (int mi = 0; mi < static_cast<int>(words.size()); ++mi) {
    const Word& m = words[static_cast<size_t>(mi)];
    // group permutations by the word they map m to
    std::map<int, std::vector<Perm>> byTarget;
    Perm w = perm_identity(n);
    if (n == 0) continue;
    do {
      byTarget[alg.word_index(perm_act(w, m))].push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    for (const auto& [outIdx, perms] : byTarget) {
      bool certified = false;
      for (int g = 2; g <= 6 && !certified; g += 2) {
        // seeds: all monomials of total degree <= g in the m component
        std::vector<ZPoly::Mono> monos;
        ZPoly::Mono cur(static_cast<size_t>(n), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
          if (pos == n) {
            monos.push_back(cur);
            return;
          }
          for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
          }
          cur[static_cast<size_t>(pos)] = 0;
        };
        rec(rec, 0, g);
        // evaluation vectors over a shared monomial index
        std::map<ZPoly::Mono, long long> colIndex;
        RankAccumulator<Rat> span;
        int rank = 0;
        for (const Perm& p : perms) {
          BasisTerm t;
          t.word = mi;
          t.w = p;
          t.a.assign(static_cast<size_t>(n), 0);
          RankAccumulator<Rat>::Row row;
          long long block = 0;
          for (const auto& mu : monos) {
            PolyRep::Vec seed;
            seed[mi] = ZPoly::monomial(mu, 1);
            PolyRep::Vec out = rho.apply_term(t, seed);
            auto it = out.find(outIdx);
            if (it != out.end())
              for (const auto& [e, c] : it->second.terms()) {
                auto ci = colIndex.emplace(e, static_cast<long long>(colIndex.size())).first;
                row[(block << 32) | ci->second] = Rat(c);
              }
            ++block;
          }
          if (span.add(std::move(row))) ++rank;
        }
        certified = (rank == static_cast<int>(perms.size()));
      }
      if (!certified)
        return std::optional<std::string>("tau block dependent: beta=" + weight_str(alg.beta()) +
                                          " corner " + word_str(alg.quiver(), m) + " -> " +
                                          word_str(alg.quiver(), alg.word(outIdx)));
    }
  }
  return std::nullopt;
}

}  // namespace klr
