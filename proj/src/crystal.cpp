#include "klr/crystal.hpp"

#include <algorithm>

namespace klr {

namespace {
constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}
}  // namespace

void CrystalModel::trim(std::vector<int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int CrystalModel::slot_vertex(int root, int k) const {
  return (root + k) % quiver_.size();
}

Weight CrystalModel::weight_beta(const CrystalElement& b) const {
  Weight w(static_cast<size_t>(quiver_.size()), 0);
  for (size_t k = 0; k < b.coords.size(); ++k)
    w[static_cast<size_t>(slot_vertex(0, static_cast<int>(k)))] += b.coords[k];
  return w;
}

// prefix scan of the tensor rule: E[k] = eps_i of the k rightmost slots
static std::vector<long long> eps_prefix(const Quiver& q, int root, const std::vector<int>& c,
                                         int i, int kcap) {
  std::vector<long long> e(static_cast<size_t>(kcap) + 1, kNegInf);
  e[0] = kNegInf;  // empty tensor
  for (int k = 0; k < kcap; ++k) {
    int v = (root + k) % q.size();
    long long a = (k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : 0;
    long long ex = (v == i) ? a : kNegInf;
    long long pair = -a * q.cartan(i, v);  // <h_i, wt x_k>
    long long prev = e[static_cast<size_t>(k)];
    long long lowered = (prev == kNegInf) ? kNegInf : prev - pair;
    e[static_cast<size_t>(k) + 1] = std::max(ex, lowered);
  }
  return e;
}

int CrystalModel::eps_rooted(int root, const std::vector<int>& c, int i) const {
  int kcap = static_cast<int>(c.size()) + quiver_.size();
  auto e = eps_prefix(quiver_, root, c, i, kcap);
  long long out = e[static_cast<size_t>(kcap)];
  require(out >= 0, "crystal: eps scan fell below zero");
  return static_cast<int>(out);
}

long long CrystalModel::weight_pairing(int root, const std::vector<int>& c, int i) const {
  long long s = 0;
  for (size_t k = 0; k < c.size(); ++k)
    s += -static_cast<long long>(c[k]) * quiver_.cartan(i, slot_vertex(root, static_cast<int>(k)));
  return s;
}

std::vector<int> CrystalModel::apply_f_rooted(int root, std::vector<int> c, int i) const {
  int kcap = static_cast<int>(c.size()) + quiver_.size();
  auto e = eps_prefix(quiver_, root, c, i, kcap);
  for (int k = kcap - 1; k >= 0; --k) {
    if (slot_vertex(root, k) != i) continue;
    long long a = (k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : 0;
    if (-a > e[static_cast<size_t>(k)]) {
      if (k >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(k) + 1, 0);
      ++c[static_cast<size_t>(k)];
      trim(c);
      return c;
    }
  }
  throw Error("crystal: lowering scan found no slot");
}

std::optional<std::vector<int>> CrystalModel::apply_e_rooted(int root, std::vector<int> c,
                                                             int i) const {
  int kcap = static_cast<int>(c.size()) + quiver_.size();
  auto e = eps_prefix(quiver_, root, c, i, kcap);
  if (e[static_cast<size_t>(kcap)] <= 0) return std::nullopt;
  for (int k = kcap - 1; k >= 0; --k) {
    if (slot_vertex(root, k) != i) continue;
    long long a = (k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : 0;
    if (-a >= e[static_cast<size_t>(k)]) {
      require(a > 0, "crystal: raising scan hit an empty slot");
      --c[static_cast<size_t>(k)];
      trim(c);
      return c;
    }
  }
  throw Error("crystal: raising scan found no slot");
}

std::vector<int> CrystalModel::replay(int root, const std::vector<int>& string) const {
  std::vector<int> c;
  for (int letter : string) c = apply_f_rooted(root, std::move(c), letter);
  return c;
}

std::vector<int> CrystalModel::extract_string(int root, std::vector<int> c) const {
  std::vector<int> raising;
  while (!c.empty()) {
    bool progressed = false;
    for (int i = 0; i < quiver_.size() && !progressed; ++i) {
      if (eps_rooted(root, c, i) <= 0) continue;
      auto up = apply_e_rooted(root, c, i);
      require(up.has_value(), "crystal: inconsistent eps during extraction");
      c = std::move(*up);
      raising.push_back(i);
      progressed = true;
    }
    require(progressed, "crystal: coordinates are not reachable from the highest element");
  }
  std::reverse(raising.begin(), raising.end());
  return raising;
}

int CrystalModel::eps(int i, const CrystalElement& b) const { return eps_rooted(0, b.coords, i); }

long long CrystalModel::phi(int i, const CrystalElement& b) const {
  return eps(i, b) + weight_pairing(0, b.coords, i);
}

CrystalElement CrystalModel::apply_f(int i, const CrystalElement& b) const {
  CrystalElement out;
  out.coords = apply_f_rooted(0, b.coords, i);
  out.string = b.string;
  out.string.push_back(i);
  return out;
}

std::optional<CrystalElement> CrystalModel::apply_e(int i, const CrystalElement& b) const {
  auto up = apply_e_rooted(0, b.coords, i);
  if (!up) return std::nullopt;
  CrystalElement out;
  out.coords = std::move(*up);
  out.string = extract_string(0, out.coords);
  return out;
}

int CrystalModel::eps_star(int i, const CrystalElement& b) const {
  std::vector<int> rooted = replay(i, b.string);
  return rooted.empty() ? 0 : rooted[0];
}

long long CrystalModel::phi_star(int i, const CrystalElement& b) const {
  return eps_star(i, b) + weight_pairing(0, b.coords, i);
}

CrystalElement CrystalModel::apply_f_star(int i, const CrystalElement& b) const {
  std::vector<int> rooted = replay(i, b.string);
  if (rooted.empty()) rooted.push_back(0);
  ++rooted[0];
  std::vector<int> s = extract_string(i, rooted);
  CrystalElement out;
  out.coords = replay(0, s);
  out.string = std::move(s);
  return out;
}

std::optional<CrystalElement> CrystalModel::apply_e_star(int i, const CrystalElement& b) const {
  std::vector<int> rooted = replay(i, b.string);
  if (rooted.empty() || rooted[0] == 0) return std::nullopt;
  --rooted[0];
  trim(rooted);
  std::vector<int> s = extract_string(i, rooted);
  CrystalElement out;
  out.coords = replay(0, s);
  out.string = std::move(s);
  return out;
}

bool CrystalModel::string_consistent(const CrystalElement& b) const {
  return replay(0, b.string) == b.coords;
}

CrystalElement CrystalModel::saito_reflect(int i, const CrystalElement& b) const {
  if (eps_star(i, b) != 0)
    throw Error("saito_reflect: precondition eps*_" + quiver_.name(i) + " = 0 violated");
  int e = eps(i, b);
  long long c = phi(i, b);
  require(c >= 0, "saito_reflect: negative f* exponent (theorem violation)");
  CrystalElement x = b;
  for (int k = 0; k < e; ++k) {
    auto up = apply_e(i, x);
    require(up.has_value(), "saito_reflect: raising failed below eps");
    x = std::move(*up);
  }
  for (long long k = 0; k < c; ++k) x = apply_f_star(i, x);
  // postconditions of the defining bijection
  require(eps(i, x) == 0, "saito_reflect: eps_i of the image is nonzero (theorem violation)");
  Weight expect = weyl_reflect(quiver_, i, weight_beta(b));
  require(weight_beta(x) == expect, "saito_reflect: image weight is not s_i beta");
  // round trip
  {
    if (eps(i, x) != 0) throw Error("saito_reflect: round-trip precondition failed");
    int es = eps_star(i, x);
    long long cs = phi_star(i, x);
    CrystalElement y = x;
    for (int k = 0; k < es; ++k) {
      auto up = apply_e_star(i, y);
      require(up.has_value(), "saito_reflect: star raising failed");
      y = std::move(*up);
    }
    for (long long k = 0; k < cs; ++k) y = apply_f(i, y);
    require(y == b, "saito_reflect: round trip failed (theorem violation)");
  }
  return x;
}

CrystalElement CrystalModel::saito_reflect_inv(int i, const CrystalElement& b) const {
  if (eps(i, b) != 0)
    throw Error("saito_reflect_inv: precondition eps_" + quiver_.name(i) + " = 0 violated");
  int es = eps_star(i, b);
  long long cs = phi_star(i, b);
  require(cs >= 0, "saito_reflect_inv: negative f exponent (theorem violation)");
  CrystalElement x = b;
  for (int k = 0; k < es; ++k) {
    auto up = apply_e_star(i, x);
    require(up.has_value(), "saito_reflect_inv: star raising failed below eps*");
    x = std::move(*up);
  }
  for (long long k = 0; k < cs; ++k) x = apply_f(i, x);
  require(eps_star(i, x) == 0, "saito_reflect_inv: eps*_i of the image is nonzero");
  Weight expect = weyl_reflect(quiver_, i, weight_beta(b));
  require(weight_beta(x) == expect, "saito_reflect_inv: image weight is not s_i beta");
  return x;
}

CrystalTable::CrystalTable(const CrystalModel& model, int heightCap)
    : model_(&model), cap_(heightCap) {
  const Quiver& q = model.quiver();
  std::vector<CrystalElement> frontier{model.highest()};
  buckets_[Weight(static_cast<size_t>(q.size()), 0)] = frontier;
  index_[{}] = {Weight(static_cast<size_t>(q.size()), 0), 0};
  for (int h = 0; h < cap_; ++h) {
    std::vector<CrystalElement> next;
    for (const CrystalElement& b : frontier)
      for (int i = 0; i < q.size(); ++i) {
        CrystalElement c = model.apply_f(i, b);
        if (index_.count(c.coords)) continue;
        Weight w = model.weight_beta(c);
        auto& bucket = buckets_[w];
        index_[c.coords] = {w, static_cast<int>(bucket.size())};
        bucket.push_back(c);
        next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
}

const std::vector<CrystalElement>& CrystalTable::at(const Weight& beta) const {
  if (height(beta) > cap_)
    throw CapError("crystal table height cap " + std::to_string(cap_) + " exceeded");
  auto it = buckets_.find(beta);
  if (it == buckets_.end()) {
    static const std::vector<CrystalElement> kEmpty;
    return kEmpty;
  }
  return it->second;
}

bool CrystalTable::contains(const CrystalElement& b) const { return index_.count(b.coords) > 0; }

int CrystalTable::index_of(const Weight& beta, const CrystalElement& b) const {
  auto it = index_.find(b.coords);
  if (it == index_.end() || it->second.first != beta) return -1;
  return it->second.second;
}

std::vector<Weight> CrystalTable::weights_of_height(int h) const {
  std::vector<Weight> out;
  for (const auto& [w, bucket] : buckets_)
    if (height(w) == h) out.push_back(w);
  return out;
}

long long CrystalTable::total_size() const {
  long long n = 0;
  for (const auto& [w, bucket] : buckets_) n += static_cast<long long>(bucket.size());
  return n;
}

}  // namespace klr
