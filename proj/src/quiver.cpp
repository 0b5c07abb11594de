#include "klr/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace klr {

Quiver::Quiver(std::vector<std::string> vertex_names,
               const std::vector<std::pair<std::string, std::string>>& arrow_names)
    : names_(std::move(vertex_names)) {
  std::map<std::string, int> index;
  for (int i = 0; i < size(); ++i) {
    if (index.count(names_[static_cast<size_t>(i)]))
      throw Error("duplicate vertex name: " + names_[static_cast<size_t>(i)]);
    index[names_[static_cast<size_t>(i)]] = i;
  }
  count_.assign(static_cast<size_t>(size()), std::vector<int>(static_cast<size_t>(size()), 0));
  for (const auto& [sname, tname] : arrow_names) {
    auto si = index.find(sname);
    auto ti = index.find(tname);
    if (si == index.end()) throw Error("arrow references unknown vertex: " + sname);
    if (ti == index.end()) throw Error("arrow references unknown vertex: " + tname);
    if (si->second == ti->second)
      throw Error("loop arrow rejected at vertex: " + sname);
    arrows_.emplace_back(si->second, ti->second);
    ++count_[static_cast<size_t>(si->second)][static_cast<size_t>(ti->second)];
  }
}

int Quiver::vertex(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  throw Error("unknown vertex: " + name);
}

VertexKind Quiver::sink_source_status(int i) const {
  if (i < 0 || i >= size()) throw Error("unknown vertex index");
  bool outgoing = false, incoming = false;
  for (const auto& [s, t] : arrows_) {
    if (s == i) outgoing = true;
    if (t == i) incoming = true;
  }
  if (!outgoing && !incoming) return VertexKind::Isolated;
  if (!outgoing) return VertexKind::Sink;
  if (!incoming) return VertexKind::Source;
  return VertexKind::Neither;
}

Quiver Quiver::reflect_orientation(int i) const {
  if (i < 0 || i >= size()) throw Error("unknown vertex index");
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& [s, t] : arrows_) {
    if (s == i || t == i)
      arrows.emplace_back(name(t), name(s));
    else
      arrows.emplace_back(name(s), name(t));
  }
  return Quiver(names_, arrows);
}

std::string Quiver::content_key() const {
  std::ostringstream os;
  for (const auto& v : names_) os << v << ";";
  os << "|";
  std::vector<std::pair<int, int>> sorted = arrows_;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [s, t] : sorted) os << s << ">" << t << ";";
  return os.str();
}

std::string vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Sink: return "sink";
    case VertexKind::Source: return "source";
    case VertexKind::Neither: return "neither";
    case VertexKind::Isolated: return "isolated";
  }
  return "?";
}

long long height(const Weight& beta) {
  long long h = 0;
  for (long long c : beta) h += c;
  return h;
}

bool in_q_plus(const Weight& beta) {
  return std::all_of(beta.begin(), beta.end(), [](long long c) { return c >= 0; });
}

Weight alpha(const Quiver& q, int i) {
  Weight w(static_cast<size_t>(q.size()), 0);
  w[static_cast<size_t>(i)] = 1;
  return w;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

long long cartan_pairing(const Quiver& q, int i, const Weight& beta) {
  long long s = 0;
  for (int j = 0; j < q.size(); ++j) s += q.cartan(i, j) * beta[static_cast<size_t>(j)];
  return s;
}

Weight weyl_reflect(const Quiver& q, int i, const Weight& beta) {
  Weight r = beta;
  r[static_cast<size_t>(i)] -= cartan_pairing(q, i, beta);
  return r;
}

std::string weight_str(const Weight& beta) {
  std::ostringstream os;
  for (size_t i = 0; i < beta.size(); ++i) {
    if (i) os << ",";
    os << beta[i];
  }
  return os.str();
}

Weight word_weight(const Quiver& q, const Word& m) {
  Weight w(static_cast<size_t>(q.size()), 0);
  for (int letter : m) ++w[static_cast<size_t>(letter)];
  return w;
}

Word sigma(const Word& m, int i) {
  Word r = m;
  std::swap(r[static_cast<size_t>(i)], r[static_cast<size_t>(i) + 1]);
  return r;
}

std::vector<Word> enumerate_words(const Quiver& q, const Weight& beta) {
  if (!in_q_plus(beta)) throw Error("enumerate_words: weight outside Q+: " + weight_str(beta));
  Word start;
  for (int i = 0; i < q.size(); ++i)
    for (long long k = 0; k < beta[static_cast<size_t>(i)]; ++k) start.push_back(i);
  std::vector<Word> out;
  if (start.empty()) {
    out.push_back({});
    return out;
  }
  do {
    out.push_back(start);
  } while (std::next_permutation(start.begin(), start.end()));
  return out;
}

std::string word_str(const Quiver& q, const Word& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << q.name(m[i]);
  }
  return os.str();
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string QPolynomial::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::SignedPower: {
      std::ostringstream os;
      if (h % 2) os << "-";
      os << "(u-v)^" << a;
      return os.str();
    }
  }
  return "?";
}

QPolynomial q_polynomial(const Quiver& q, const Word& m, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(m.size()))
    throw Error("q_polynomial: position out of range");
  int x = m[static_cast<size_t>(i)], y = m[static_cast<size_t>(i) + 1];
  QPolynomial r;
  if (x == y) {
    r.kind = QPolynomial::Kind::Zero;
  } else if (!q.adjacent(x, y)) {
    r.kind = QPolynomial::Kind::One;
  } else {
    r.kind = QPolynomial::Kind::SignedPower;
    r.h = q.arrow_count(x, y);
    r.a = q.edges_between(x, y);
  }
  return r;
}

}  // namespace klr
