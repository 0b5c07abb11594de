#include "klr/table.hpp"

#include <algorithm>
#include <sstream>

#include "klr/cache.hpp"
#include "klr/json_io.hpp"

namespace klr {

int SimplesTable::find_by_character(const Character& ch) const {
  for (int k = 0; k < size(); ++k)
    if (entries[static_cast<size_t>(k)].character == ch) return k;
  return -1;
}

LaurentPoly total_character(const Character& ch) {
  LaurentPoly t;
  for (const auto& [w, p] : ch) t += p;
  return t;
}

Character shifted_character(const Character& ch, int k) {
  Character out;
  for (const auto& [w, p] : ch) out[w] = p.shifted(k);
  return out;
}

Character shuffle_character(const Quiver& q, const Character& c1, const Character& c2) {
  Character out;
  for (const auto& [m1, p1] : c1)
    for (const auto& [m2, p2] : c2) {
      int n1 = static_cast<int>(m1.size()), n2 = static_cast<int>(m2.size());
      Word cat = concat(m1, m2);
      for (const Perm& c : min_coset_reps(n1, n2)) {
        // crossing degree of the shuffle
        int d0 = 0;
        for (size_t p = 0; p < cat.size(); ++p)
          for (size_t r = p + 1; r < cat.size(); ++r)
            if (c[p] > c[r]) {
              int x = cat[p], y = cat[r];
              d0 += (x == y) ? -2 : q.edges_between(x, y);
            }
        Word target = perm_act(c, cat);
        LaurentPoly add = (p1 * p2).shifted(d0);
        out[target] += add;
      }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Decomposition decompose_character(const Character& ch, const SimplesTable& table) {
  Decomposition dec;
  dec.mult.assign(static_cast<size_t>(table.size()), LaurentPoly());
  if (ch.empty()) {
    dec.ok = true;
    return dec;
  }
  // coordinates: (word, degree) pairs present in the window
  LaurentPoly tot = total_character(ch);
  int lo = tot.min_degree(), hi = tot.max_degree();
  // columns: (entry, shift) pairs whose support fits the window
  struct Col {
    int entry;
    int shift;
  };
  std::vector<Col> cols;
  for (int e = 0; e < table.size(); ++e) {
    LaurentPoly te = total_character(table.entries[static_cast<size_t>(e)].character);
    if (te.is_zero()) continue;
    for (int k = lo - te.min_degree(); k <= hi - te.max_degree(); ++k) cols.push_back({e, k});
  }
  std::map<std::pair<Word, int>, int> coordIndex;
  auto coord = [&](const Word& w, int d) {
    return coordIndex.emplace(std::make_pair(w, d), static_cast<int>(coordIndex.size())).first->second;
  };
  std::vector<std::map<int, Rat>> colVecs;
  for (const Col& c : cols) {
    std::map<int, Rat> v;
    for (const auto& [w, p] : table.entries[static_cast<size_t>(c.entry)].character)
      for (const auto& [d, val] : p.terms()) v[coord(w, d + c.shift)] = Rat(val);
    colVecs.push_back(std::move(v));
  }
  std::map<int, Rat> target;
  for (const auto& [w, p] : ch)
    for (const auto& [d, val] : p.terms()) target[coord(w, d)] = Rat(val);
  int rows = static_cast<int>(coordIndex.size());
  int ncols = static_cast<int>(cols.size());
  MatQ a(rows, ncols + 1);
  a.setZero();
  for (int c = 0; c < ncols; ++c)
    for (const auto& [r, val] : colVecs[static_cast<size_t>(c)]) a(r, c) = val;
  for (const auto& [r, val] : target) a(r, ncols) = val;
  std::vector<int> pivots;
  int rank = row_echelon(a, &pivots);
  VecQ x(ncols);
  x.setZero();
  for (int r = 0; r < rank; ++r) {
    int pc = pivots[static_cast<size_t>(r)];
    if (pc == ncols) {
      dec.error = "character is not in the span of the table characters";
      return dec;
    }
    x(pc) = a(r, ncols) / a(r, pc);
  }
  // verify the expansion explicitly (guards against dependent columns)
  {
    std::map<int, Rat> recon;
    for (int c = 0; c < ncols; ++c) {
      if (x(c) == 0) continue;
      for (const auto& [r, val] : colVecs[static_cast<size_t>(c)]) recon[r] += x(c) * val;
    }
    for (auto it2 = recon.begin(); it2 != recon.end();)
      it2 = (it2->second == 0) ? recon.erase(it2) : std::next(it2);
    if (recon != target) {
      dec.error = "expansion residual is nonzero";
      return dec;
    }
  }
  for (int c = 0; c < ncols; ++c) {
    const Rat& v = x(c);
    if (v == 0) continue;
    if (denominator(v) != 1 || numerator(v) < 0) {
      dec.error = "expansion has a non-nonnegative-integer coefficient";
      return dec;
    }
    dec.mult[static_cast<size_t>(cols[static_cast<size_t>(c)].entry)].add_term(
        cols[static_cast<size_t>(c)].shift, numerator(v));
  }
  dec.ok = true;
  return dec;
}

TableContext::TableContext(Quiver quiver, bool corrupt_q_sign, int heightCap)
    : quiver_(std::move(quiver)), corrupt_(corrupt_q_sign), heightCap_(heightCap) {}

KlrAlgebra& TableContext::algebra(const Weight& beta) {
  auto it = algebras_.find(beta);
  if (it == algebras_.end())
    it = algebras_.emplace(beta, std::make_unique<KlrAlgebra>(quiver_, beta, corrupt_)).first;
  return *it->second;
}

std::vector<Weight> TableContext::weights_of_height(int h) const {
  std::vector<Weight> out;
  Weight cur(static_cast<size_t>(quiver_.size()), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == quiver_.size() - 1) {
      cur[static_cast<size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (quiver_.size() == 0) return out;
  rec(rec, 0, h);
  return out;
}

const SimplesTable& TableContext::table(const Weight& beta) {
  auto it = tables_.find(beta);
  if (it != tables_.end()) return it->second;
  if (!in_q_plus(beta)) throw Error("table: weight outside Q+");
  if (height(beta) > heightCap_)
    throw CapError("height cap " + std::to_string(heightCap_) + " exceeded at beta=" +
                   weight_str(beta));
  build_weight(beta);
  return tables_.at(beta);
}

bool TableContext::load_cached(const Weight& beta) {
  if (cacheDir_.empty() || corrupt_) return false;
  std::string path = table_cache_path(cacheDir_, quiver_, beta);
  if (!file_exists(path)) return false;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
    SimplesTable tab = table_from_json(quiver_, j.at("table"));
    if (tab.beta != beta) return false;
    for (const auto& je : j.at("edges")) {
      Weight parent = je.at("parent").get<Weight>();
      headEdge_[std::make_tuple(parent, je.at("entry").get<int>(), je.at("i").get<int>())] =
          je.at("head").get<int>();
    }
    tables_.emplace(beta, std::move(tab));
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable cache entries are ignored, never trusted
  }
}

void TableContext::save_cached(const Weight& beta) const {
  if (cacheDir_.empty() || corrupt_) return;
  try {
    ensure_directory(cacheDir_);
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i < quiver_.size(); ++i) {
      if (beta[static_cast<size_t>(i)] == 0) continue;
      Weight parent = beta;
      --parent[static_cast<size_t>(i)];
      for (const auto& [key, head] : headEdge_) {
        if (std::get<0>(key) != parent || std::get<2>(key) != i) continue;
        edges.push_back(nlohmann::json{
            {"parent", parent}, {"entry", std::get<1>(key)}, {"i", i}, {"head", head}});
      }
    }
    nlohmann::json j{{"version", kCodeVersion},
                     {"table", table_to_json(quiver_, tables_.at(beta))},
                     {"edges", edges}};
    std::string path = table_cache_path(cacheDir_, quiver_, beta);
    write_text_file(path + ".tmp", j.dump());
    std::rename((path + ".tmp").c_str(), path.c_str());
  } catch (const std::exception&) {
    // cache write failures never affect results
  }
}

void TableContext::build_weight(const Weight& beta) {
  if (tables_.count(beta)) return;
  if (load_cached(beta)) return;
  SimplesTable tab;
  tab.beta = beta;
  if (height(beta) == 0) {
    SimpleEntry e;
    e.label = "L0";
    e.module = trivial_module(quiver_);
    e.character = e.module.character(quiver_);
    e.eps.assign(static_cast<size_t>(quiver_.size()), 0);
    e.eps_star.assign(static_cast<size_t>(quiver_.size()), 0);
    e.provenance = "";
    tab.entries.push_back(std::move(e));
    tables_.emplace(beta, std::move(tab));
    return;
  }
  KlrAlgebra& alg = algebra(beta);
  const auto& words = alg.words();
  for (int i = 0; i < quiver_.size(); ++i) {
    if (beta[static_cast<size_t>(i)] == 0) continue;
    Weight parent = beta;
    --parent[static_cast<size_t>(i)];
    build_weight(parent);
    const SimplesTable& ptab = tables_.at(parent);
    for (int pe = 0; pe < ptab.size(); ++pe) {
      const SimpleEntry& p = ptab.entries[static_cast<size_t>(pe)];
      GradedModule n = induce(alg, p.module, simple_letter(quiver_, i));
      GradedModule head =
          head_of_letter_extension(alg, n, i, p.eps_star[static_cast<size_t>(i)] + 1);
      GradedModule norm = self_dual_normalize(quiver_, head);
      // per-node simplicity guard; large nodes are covered by the
      // crystal-model cross-checks instead of this quadratic certificate
      if (norm.dim() <= 40 && cyclic_end_dimension(norm) != 1)
        throw Error("simples BFS: head of L * L(i) is not simple at beta=" + weight_str(beta));
      Character ch = norm.character(quiver_);
      int found = tab.find_by_character(ch);
      if (found < 0) {
        SimpleEntry e;
        e.label = "L" + std::to_string(tab.size());
        e.module = std::move(norm);
        e.character = std::move(ch);
        for (int v = 0; v < quiver_.size(); ++v) {
          e.eps.push_back(module_eps(e.module, words, v));
          e.eps_star.push_back(module_eps_star(e.module, words, v));
        }
        e.provenance = p.provenance.empty() ? ("f*" + quiver_.name(i))
                                            : (p.provenance + " f*" + quiver_.name(i));
        found = tab.size();
        tab.entries.push_back(std::move(e));
      }
      headEdge_[std::make_tuple(parent, pe, i)] = found;
    }
  }
  tables_.emplace(beta, std::move(tab));
  save_cached(beta);
}

int TableContext::head_label(const Weight& beta, int entry, int i) {
  Weight target = beta;
  ++target[static_cast<size_t>(i)];
  table(target);  // ensure edges exist
  auto it = headEdge_.find(std::make_tuple(beta, entry, i));
  if (it == headEdge_.end()) throw Error("head_label: edge not built");
  return it->second;
}

}  // namespace klr
