#include "klr/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <tuple>

#include "klr/linalg.hpp"

namespace klr {

void KlrElement::add(const BasisTerm& t, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

KlrElement& KlrElement::operator+=(const KlrElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

KlrElement& KlrElement::operator-=(const KlrElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

KlrElement KlrElement::scaled(const Int& c) const {
  KlrElement r(beta_);
  if (c == 0) return r;
  for (const auto& [t, cc] : terms_) r.add(t, cc * c);
  return r;
}

IdempotentSpec IdempotentSpec::single(Word m) {
  IdempotentSpec s;
  s.kind = Kind::SingleWord;
  s.word = std::move(m);
  return s;
}

IdempotentSpec IdempotentSpec::left(int i, int k) {
  IdempotentSpec s;
  s.kind = Kind::Left;
  s.i = i;
  s.k = k;
  return s;
}

IdempotentSpec IdempotentSpec::right(int i, int k) {
  IdempotentSpec s;
  s.kind = Kind::Right;
  s.i = i;
  s.k = k;
  return s;
}

IdempotentSpec IdempotentSpec::block(Weight b1, Weight b2) {
  IdempotentSpec s;
  s.kind = Kind::Block;
  s.beta1 = std::move(b1);
  s.beta2 = std::move(b2);
  return s;
}

std::string IdempotentSpec::str(const Quiver& q) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::SingleWord: os << "e(" << word_str(q, word) << ")"; break;
    case Kind::Left: os << "e_" << q.name(i) << "(" << k << ")"; break;
    case Kind::Right: os << "e*_" << q.name(i) << "(" << k << ")"; break;
    case Kind::Block: os << "e[" << weight_str(beta1) << "|" << weight_str(beta2) << "]"; break;
  }
  return os.str();
}

KlrAlgebra::KlrAlgebra(Quiver quiver, Weight beta, bool corrupt_q_sign)
    : quiver_(std::move(quiver)), beta_(std::move(beta)), corrupt_(corrupt_q_sign) {
  if (!in_q_plus(beta_)) throw Error("KlrAlgebra: weight outside Q+");
  n_ = static_cast<int>(height(beta_));
  words_ = enumerate_words(quiver_, beta_);
  for (int k = 0; k < static_cast<int>(words_.size()); ++k) word_index_[words_[static_cast<size_t>(k)]] = k;
}

int KlrAlgebra::word_index(const Word& m) const {
  auto it = word_index_.find(m);
  if (it == word_index_.end()) throw Error("word of wrong weight: " + word_str(quiver_, m));
  return it->second;
}

QPolynomial KlrAlgebra::q_poly_pair(int x, int y) const {
  QPolynomial r;
  if (x == y) {
    r.kind = QPolynomial::Kind::Zero;
  } else if (!quiver_.adjacent(x, y)) {
    r.kind = QPolynomial::Kind::One;
  } else {
    r.kind = QPolynomial::Kind::SignedPower;
    r.h = quiver_.arrow_count(x, y);
    r.a = quiver_.edges_between(x, y);
    // negative-control fixture: flip the sign for the lowest adjacent pair
    if (corrupt_ && x < y) r.h += 1;
  }
  return r;
}

ZPoly KlrAlgebra::q_zpoly(const Word& m, int i) const {
  int x = m[static_cast<size_t>(i)], y = m[static_cast<size_t>(i) + 1];
  QPolynomial qp = q_poly_pair(x, y);
  switch (qp.kind) {
    case QPolynomial::Kind::Zero: return ZPoly(n_);
    case QPolynomial::Kind::One: return ZPoly::constant(n_, 1);
    case QPolynomial::Kind::SignedPower: {
      ZPoly p = power_of_difference(n_, i, i + 1, qp.a);  // (z_i - z_{i+1})^a
      return (qp.h % 2) ? -p : p;
    }
  }
  return ZPoly(n_);
}

ZPoly KlrAlgebra::rel5_zpoly(const Word& m, int i) const {
  ZPoly d(n_);
  int x = m[static_cast<size_t>(i)], z = m[static_cast<size_t>(i) + 2];
  if (x != z) return d;
  QPolynomial qp = q_poly_pair(x, m[static_cast<size_t>(i) + 1]);
  if (qp.kind != QPolynomial::Kind::SignedPower) return d;
  // (A^a - B^a)/(A - B) with A = z_{i+2}-z_{i+1}, B = z_i-z_{i+1}
  for (int k = 0; k < qp.a; ++k)
    d += power_of_difference(n_, i + 2, i + 1, k) * power_of_difference(n_, i, i + 1, qp.a - 1 - k);
  if (qp.h % 2) d = -d;
  return d;
}

int KlrAlgebra::deg_tau_letter(int x, int y) const {
  if (x == y) return -2;
  return quiver_.edges_between(x, y);  // 0 when not adjacent
}

int KlrAlgebra::deg_tau_word(const Perm& w, const Word& m) const {
  int d = 0;
  for (size_t p = 0; p < m.size(); ++p)
    for (size_t q = p + 1; q < m.size(); ++q)
      if (w[p] > w[q]) d += deg_tau_letter(m[p], m[q]);
  return d;
}

int KlrAlgebra::deg_term(const BasisTerm& t) const {
  int d = deg_tau_word(t.w, word(t.word));
  for (int e : t.a) d += 2 * e;
  return d;
}

std::optional<int> KlrAlgebra::element_degree(const KlrElement& e) const {
  std::optional<int> d;
  for (const auto& [t, c] : e.terms()) {
    int dt = deg_term(t);
    if (!d)
      d = dt;
    else if (*d != dt)
      return std::nullopt;
  }
  return d;
}

int KlrAlgebra::min_base_degree() const {
  if (n_ == 0) return 0;
  int best = 0;
  for (const Word& m : words_) {
    // the all-crossings lower bound: sum over all pairs of min(0, dpair)
    int d = 0;
    for (size_t p = 0; p < m.size(); ++p)
      for (size_t q = p + 1; q < m.size(); ++q) d += std::min(0, deg_tau_letter(m[p], m[q]));
    best = std::min(best, d);
  }
  return best;
}

const std::vector<int>& KlrAlgebra::canonical(const Perm& w) const {
  auto it = canon_.find(w);
  if (it == canon_.end()) it = canon_.emplace(w, canonical_word(w)).first;
  return it->second;
}

KlrElement KlrAlgebra::gen_e(int wordIdx) const {
  KlrElement e(beta_);
  BasisTerm t;
  t.word = wordIdx;
  t.w = perm_identity(n_);
  t.a.assign(static_cast<size_t>(n_), 0);
  e.add(t, 1);
  return e;
}

KlrElement KlrAlgebra::gen_z(int j, int wordIdx) const {
  KlrElement e(beta_);
  BasisTerm t;
  t.word = wordIdx;
  t.w = perm_identity(n_);
  t.a.assign(static_cast<size_t>(n_), 0);
  t.a[static_cast<size_t>(j)] = 1;
  e.add(t, 1);
  return e;
}

KlrElement KlrAlgebra::gen_tau(int j, int wordIdx) const {
  KlrElement e(beta_);
  BasisTerm t;
  t.word = wordIdx;
  t.w = perm_simple(n_, j);
  t.a.assign(static_cast<size_t>(n_), 0);
  e.add(t, 1);
  return e;
}

KlrElement KlrAlgebra::gen_z(int j) const {
  KlrElement e(beta_);
  for (int m = 0; m < static_cast<int>(words_.size()); ++m) e += gen_z(j, m);
  return e;
}

KlrElement KlrAlgebra::gen_tau(int j) const {
  KlrElement e(beta_);
  for (int m = 0; m < static_cast<int>(words_.size()); ++m) e += gen_tau(j, m);
  return e;
}

KlrElement KlrAlgebra::one() const {
  KlrElement e(beta_);
  for (int m = 0; m < static_cast<int>(words_.size()); ++m) e += gen_e(m);
  return e;
}

KlrElement KlrAlgebra::idempotent(const IdempotentSpec& spec) const {
  KlrElement e(beta_);
  for (int m : words_of(spec)) e += gen_e(m);
  return e;
}

std::vector<int> KlrAlgebra::words_of(const IdempotentSpec& spec) const {
  std::vector<int> out;
  switch (spec.kind) {
    case IdempotentSpec::Kind::SingleWord:
      out.push_back(word_index(spec.word));
      break;
    case IdempotentSpec::Kind::Left:
      for (int k = 0; k < static_cast<int>(words_.size()); ++k) {
        const Word& m = words_[static_cast<size_t>(k)];
        bool ok = spec.k <= n_;
        for (int p = 0; ok && p < spec.k; ++p) ok = (m[static_cast<size_t>(p)] == spec.i);
        if (ok) out.push_back(k);
      }
      break;
    case IdempotentSpec::Kind::Right:
      for (int k = 0; k < static_cast<int>(words_.size()); ++k) {
        const Word& m = words_[static_cast<size_t>(k)];
        bool ok = spec.k <= n_;
        for (int p = 0; ok && p < spec.k; ++p) ok = (m[static_cast<size_t>(n_ - 1 - p)] == spec.i);
        if (ok) out.push_back(k);
      }
      break;
    case IdempotentSpec::Kind::Block: {
      int n1 = static_cast<int>(height(spec.beta1));
      for (int k = 0; k < static_cast<int>(words_.size()); ++k) {
        const Word& m = words_[static_cast<size_t>(k)];
        Weight w1(beta_.size(), 0);
        for (int p = 0; p < n1; ++p) ++w1[static_cast<size_t>(m[static_cast<size_t>(p)])];
        if (w1 == spec.beta1) out.push_back(k);
      }
      break;
    }
  }
  return out;
}

KlrElement KlrAlgebra::shift_exponents(const KlrElement& e, const std::vector<int>& a) const {
  bool zero = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  if (zero) return e;
  KlrElement r(beta_);
  for (const auto& [t, c] : e.terms()) {
    BasisTerm s = t;
    for (size_t j = 0; j < s.a.size(); ++j) s.a[j] += a[j];
    r.add(s, c);
  }
  return r;
}

KlrElement KlrAlgebra::straighten_z(int j, const BasisTerm& t) {
  KlrElement core = leftmul_z_core(j, t.w, t.word);
  return shift_exponents(core, t.a);
}

KlrElement KlrAlgebra::straighten_tau(int i, const BasisTerm& t) {
  KlrElement core = leftmul_tau_core(i, t.w, t.word);
  return shift_exponents(core, t.a);
}

KlrElement KlrAlgebra::leftmul_tau(int i, const KlrElement& e) {
  KlrElement r(beta_);
  for (const auto& [t, c] : e.terms()) r += straighten_tau(i, t).scaled(c);
  return r;
}

KlrElement KlrAlgebra::leftmul_monomial(const ZPoly::Mono& mono, const KlrElement& e) {
  KlrElement cur = e;
  for (int j = 0; j < static_cast<int>(mono.size()); ++j)
    for (int rep = 0; rep < mono[static_cast<size_t>(j)]; ++rep) {
      KlrElement next(beta_);
      for (const auto& [t, c] : cur.terms()) next += straighten_z(j, t).scaled(c);
      cur = std::move(next);
    }
  return cur;
}

KlrElement KlrAlgebra::leftmul_zpoly(const ZPoly& p, const KlrElement& e) {
  KlrElement r(beta_);
  for (const auto& [mono, c] : p.terms()) r += leftmul_monomial(mono, e).scaled(c);
  return r;
}

// z_j tau_w e(m) in normal form; relation (6) moved crossing by crossing.
KlrElement KlrAlgebra::leftmul_z_core(int j, const Perm& w, int wordIdx) {
  auto key = std::make_tuple(j, w, wordIdx);
  auto hit = memo_z_.find(key);
  if (hit != memo_z_.end()) return hit->second;

  KlrElement res(beta_);
  if (perm_is_identity(w)) {
    BasisTerm t;
    t.word = wordIdx;
    t.w = w;
    t.a.assign(static_cast<size_t>(n_), 0);
    t.a[static_cast<size_t>(j)] = 1;
    res.add(t, 1);
  } else {
    const std::vector<int>& W = canonical(w);
    int i1 = W[0];
    Perm wp = perm_compose(perm_simple(n_, i1), w);  // the suffix permutation
    // z_j tau_{i1} X = tau_{i1} z_{sigma(j)} X + c X on the suffix term X
    int jp = (j == i1) ? i1 + 1 : (j == i1 + 1) ? i1 : j;
    res = leftmul_tau(i1, leftmul_z_core(jp, wp, wordIdx));
    Word mloc = perm_act(wp, word(wordIdx));
    if (mloc[static_cast<size_t>(i1)] == mloc[static_cast<size_t>(i1) + 1]) {
      int c = (j == i1 + 1) ? 1 : (j == i1) ? -1 : 0;
      if (c != 0) {
        BasisTerm t;
        t.word = wordIdx;
        t.w = wp;
        t.a.assign(static_cast<size_t>(n_), 0);
        res.add(t, c);
      }
    }
  }
  memo_z_.emplace(key, res);
  return res;
}

KlrElement KlrAlgebra::leftmul_tau_core(int i, const Perm& w, int wordIdx) {
  auto key = std::make_tuple(i, w, wordIdx);
  auto hit = memo_tau_.find(key);
  if (hit != memo_tau_.end()) return hit->second;

  KlrElement res(beta_);
  Perm sw = perm_compose(perm_simple(n_, i), w);
  if (perm_length(sw) > perm_length(w)) {
    // ascent: (i :: canonical(w)) is a reduced word of s_i w
    std::vector<int> a;
    a.push_back(i);
    const std::vector<int>& W = canonical(w);
    a.insert(a.end(), W.begin(), W.end());
    res = nav_word(a, wordIdx);
  } else {
    // descent: pull i to the front of canonical(w), then resolve tau_i^2
    std::vector<int> a = canonical(w);
    KlrElement acc = pull_front(a, i, wordIdx);
    assert(a[0] == i);
    std::vector<int> y(a.begin() + 1, a.end());
    KlrElement ey = nav_word(y, wordIdx);
    for (const auto& [t, c] : ey.terms()) {
      Word mloc = left_word(t);
      ZPoly q = q_zpoly(mloc, i);
      KlrElement single(beta_);
      single.add(t, c);
      res += leftmul_zpoly(q, single);
    }
    res += leftmul_tau(i, acc);
  }
  memo_tau_.emplace(key, res);
  return res;
}

// Normal form of the product tau_{a_1} ... tau_{a_k} e(m) for a reduced word.
KlrElement KlrAlgebra::nav_word(const std::vector<int>& a, int wordIdx) {
  auto key = std::make_pair(a, wordIdx);
  auto hit = memo_nav_.find(key);
  if (hit != memo_nav_.end()) return hit->second;

  KlrElement res(beta_);
  Perm u = perm_of_word(n_, a);
  assert(perm_length(u) == static_cast<int>(a.size()) && "nav_word needs a reduced word");
  const std::vector<int>& c = canonical(u);
  if (a == c) {
    BasisTerm t;
    t.word = wordIdx;
    t.w = u;
    t.a.assign(static_cast<size_t>(n_), 0);
    res.add(t, 1);
  } else {
    int j = c[0];
    std::vector<int> b = a;
    KlrElement acc = pull_front(b, j, wordIdx);
    assert(b[0] == j);
    std::vector<int> rest(b.begin() + 1, b.end());
    res = leftmul_tau(j, nav_word(rest, wordIdx));
    res += acc;
  }
  memo_nav_.emplace(key, res);
  return res;
}

// Bring the left descent j to the front of the reduced word `a` using
// commutation moves and head braid moves; braid corrections (relation 5)
// are normalized recursively and accumulate in the returned element.
KlrElement KlrAlgebra::pull_front(std::vector<int>& a, int j, int wordIdx) {
  KlrElement acc(beta_);
  if (a[0] == j) return acc;
  int head = a[0];
  std::vector<int> tail(a.begin() + 1, a.end());
  acc += leftmul_tau(head, pull_front(tail, j, wordIdx));
  assert(tail[0] == j);
  if (std::abs(head - j) > 1) {
    // far commutation is exact
    a.assign(1, j);
    a.push_back(head);
    a.insert(a.end(), tail.begin() + 1, tail.end());
  } else {
    // head = a, then j, then bring another `head` forward for the braid move
    std::vector<int> tail2(tail.begin() + 1, tail.end());
    acc += leftmul_tau(head, leftmul_tau(j, pull_front(tail2, head, wordIdx)));
    assert(tail2[0] == head);
    std::vector<int> rest(tail2.begin() + 1, tail2.end());
    // (head, j, head) -> (j, head, j) with the relation-5 correction
    int i0 = std::min(head, j);
    int sign = (head == i0 + 1) ? 1 : -1;
    KlrElement erest = nav_word(rest, wordIdx);
    for (const auto& [t, c] : erest.terms()) {
      ZPoly d = rel5_zpoly(left_word(t), i0);
      if (d.is_zero()) continue;
      KlrElement single(beta_);
      single.add(t, c);
      acc += leftmul_zpoly(d, single).scaled(sign);
    }
    a.assign(1, j);
    a.push_back(head);
    a.push_back(j);
    a.insert(a.end(), rest.begin(), rest.end());
  }
  return acc;
}

KlrElement KlrAlgebra::multiply(const KlrElement& x, const KlrElement& y) {
  if (x.beta() != y.beta()) throw Error("multiply: weight mismatch");
  if (x.beta() != beta_) throw Error("multiply: element of a different algebra");
  KlrElement res(beta_);
  for (const auto& [t, c] : x.terms()) {
    // e(t.word) * y
    KlrElement cur(beta_);
    for (const auto& [s, cs] : y.terms())
      if (left_word(s) == word(t.word)) cur.add(s, cs);
    if (cur.is_zero()) continue;
    cur = leftmul_monomial(t.a, cur);
    const std::vector<int>& W = canonical(t.w);
    for (auto it = W.rbegin(); it != W.rend(); ++it) cur = leftmul_tau(*it, cur);
    res += cur.scaled(c);
  }
  return res;
}

std::vector<BasisTerm> KlrAlgebra::basis_in_degree(int d) const {
  std::vector<BasisTerm> out;
  if (n_ == 0) {
    if (d == 0) {
      BasisTerm t;
      t.word = 0;
      out.push_back(t);
    }
    return out;
  }
  // enumerate exponent vectors with given total
  auto compositions = [&](int total) {
    std::vector<std::vector<int>> result;
    std::vector<int> cur(static_cast<size_t>(n_), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n_ - 1) {
        cur[static_cast<size_t>(pos)] = left;
        result.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, total);
    return result;
  };
  for (int mIdx = 0; mIdx < static_cast<int>(words_.size()); ++mIdx) {
    const Word& m = words_[static_cast<size_t>(mIdx)];
    Perm w = perm_identity(n_);
    do {
      int d0 = deg_tau_word(w, m);
      int r = d - d0;
      if (r < 0 || r % 2) continue;
      for (auto& a : compositions(r / 2)) {
        BasisTerm t;
        t.word = mIdx;
        t.w = w;
        t.a = a;
        out.push_back(std::move(t));
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

TruncatedSeries KlrAlgebra::corner_series(int mIdx, int mOutIdx, int D) const {
  const Word& m = words_[static_cast<size_t>(mIdx)];
  const Word& mOut = words_[static_cast<size_t>(mOutIdx)];
  std::vector<int> degs;
  if (n_ == 0) {
    degs.push_back(0);
  } else {
    Perm w = perm_identity(n_);
    do {
      if (perm_act(w, m) == mOut) degs.push_back(deg_tau_word(w, m));
    } while (std::next_permutation(w.begin(), w.end()));
  }
  int lo = degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
  TruncatedSeries s(std::min(lo, 0), D);
  for (int d0 : degs) {
    // polynomial part contributes binom(n-1+k, k) in degree d0 + 2k
    Int binom = 1;
    for (int k = 0; d0 + 2 * k <= D; ++k) {
      if (k > 0) binom = binom * (n_ - 1 + k) / k;
      s.add(d0 + 2 * k, binom);
    }
  }
  return s;
}

TruncatedSeries KlrAlgebra::full_series(int D) const {
  TruncatedSeries s(std::min(min_base_degree(), 0), D);
  for (int d = s.lowest(); d <= D; ++d) s.add(d, Int(basis_in_degree(d).size()));
  return s;
}

std::vector<Perm> coset_basis(const Weight& beta1, const Weight& beta2) {
  return min_coset_reps(static_cast<int>(height(beta1)), static_cast<int>(height(beta2)));
}

KlrElement KlrAlgebra::times_coset(const KlrElement& g, const Perm& c, int wordIdx) {
  // g * tau_c e(m) for a generator-like element g
  KlrElement base(beta_);
  BasisTerm t;
  t.word = wordIdx;
  t.w = c;
  t.a.assign(static_cast<size_t>(n_), 0);
  // tau_c along the canonical word of c is the basis term itself
  base.add(t, 1);
  return multiply(g, base);
}

std::vector<CosetSplitTerm> KlrAlgebra::coset_split(const BasisTerm& t, int n1) {
  auto key = std::make_tuple(t.w, t.word, n1);
  auto hit = memo_split_.find(key);
  std::vector<CosetSplitTerm> out;
  if (hit != memo_split_.end()) {
    out = hit->second;
  } else {
    Perm c, y;
    coset_decompose(t.w, n1, c, y);
    Perm y1, y2;
    split_block_perm(y, n1, y1, y2);
    CosetSplitTerm lead;
    lead.c = c;
    lead.coeff = 1;
    lead.y1 = y1;
    lead.y2 = y2;
    lead.a1.assign(static_cast<size_t>(n1), 0);
    lead.a2.assign(static_cast<size_t>(n_ - n1), 0);
    out.push_back(lead);
    if (!perm_is_identity(y)) {
      std::vector<int> a = canonical(c);
      const std::vector<int>& ycan = canonical(y);
      a.insert(a.end(), ycan.begin(), ycan.end());
      KlrElement e = nav_word(a, t.word);
      for (const auto& [s, cs] : e.terms()) {
        if (s.w == t.w) {
          assert(cs == 1 && std::all_of(s.a.begin(), s.a.end(), [](int v) { return v == 0; }));
          continue;
        }
        BasisTerm bare = s;  // carries its correction exponents
        for (auto& part : coset_split(bare, n1)) {
          part.coeff = -cs * part.coeff;
          out.push_back(std::move(part));
        }
      }
    }
    // merge duplicates deterministically
    std::map<std::tuple<Perm, Perm, std::vector<int>, Perm, std::vector<int>>, Int> merged;
    for (const auto& p : out) merged[std::make_tuple(p.c, p.y1, p.a1, p.y2, p.a2)] += p.coeff;
    out.clear();
    for (const auto& [k, v] : merged) {
      if (v == 0) continue;
      CosetSplitTerm p;
      std::tie(p.c, p.y1, p.a1, p.y2, p.a2) = k;
      p.coeff = v;
      out.push_back(std::move(p));
    }
    memo_split_.emplace(key, out);
  }
  // add the exponents of t, split by blocks
  for (auto& p : out) {
    for (int i = 0; i < n1; ++i) p.a1[static_cast<size_t>(i)] += t.a[static_cast<size_t>(i)];
    for (int i = n1; i < n_; ++i) p.a2[static_cast<size_t>(i - n1)] += t.a[static_cast<size_t>(i)];
  }
  return out;
}

std::pair<TruncatedSeries, TruncatedSeries> KlrAlgebra::ideal_and_quotient_series(
    const IdempotentSpec& spec, int D) {
  int lo = std::min(min_base_degree(), 0);
  if (D < lo)
    throw Error("ideal_and_quotient_series: degree bound " + std::to_string(D) +
                " is below the minimal degree " + std::to_string(lo));
  std::vector<int> supp = words_of(spec);
  std::set<int> suppSet(supp.begin(), supp.end());
  TruncatedSeries full = full_series(D);
  TruncatedSeries ideal(lo, D);
  TruncatedSeries quot(lo, D);
  if (supp.empty()) {
    quot = full;
    return {ideal, quot};
  }
  if (static_cast<int>(supp.size()) == static_cast<int>(words_.size())) {
    ideal = full;
    return {ideal, quot};
  }
  // cache basis slices by degree
  std::map<int, std::vector<BasisTerm>> slice;
  for (int d = lo; d <= D - lo + 0; ++d) slice[d] = basis_in_degree(d);
  for (int d = lo; d <= D; ++d) {
    const auto& target = slice[d];
    std::map<BasisTerm, long long> index;
    for (long long k = 0; k < static_cast<long long>(target.size()); ++k)
      index[target[static_cast<size_t>(k)]] = k;
    RankAccumulator<Rat> span;
    Int fullDim = full.coeff(d);
    for (int dx = lo; dx <= d - lo && Int(span.rank()) < fullDim; ++dx) {
      int dy = d - dx;
      for (const BasisTerm& x : slice[dx]) {
        if (!suppSet.count(x.word)) continue;
        if (Int(span.rank()) >= fullDim) break;
        for (const BasisTerm& y : slice[dy]) {
          if (left_word(y) != word(x.word)) continue;
          KlrElement xe(beta_), ye(beta_);
          xe.add(x, 1);
          ye.add(y, 1);
          KlrElement prod = multiply(xe, ye);
          if (prod.is_zero()) continue;
          RankAccumulator<Rat>::Row v;
          for (const auto& [t, c] : prod.terms()) v[index.at(t)] = Rat(c);
          span.add(std::move(v));
          if (Int(span.rank()) >= fullDim) break;
        }
      }
    }
    ideal.add(d, Int(span.rank()));
    quot.add(d, fullDim - Int(span.rank()));
  }
  return {ideal, quot};
}

}  // namespace klr
