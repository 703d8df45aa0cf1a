#include "qalg/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

std::size_t parse_count(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(line, std::string("expected a positive integer for ") + what + ", got '" + s + "'");
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::exception&) {
    throw ParseError(line, std::string("number out of range for ") + what);
  }
}

Relation parse_relation(const std::string& body, std::size_t line, const Presentation& p) {
  std::string s;
  for (char c : body)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError(line, "empty relation");
  Relation rel;
  rel.line = line;
  std::size_t i = 0;
  bool first = true;
  std::optional<std::size_t> src, tgt;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError(line, "expected '+' or '-' between terms");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty()) throw ParseError(line, "empty term in relation");
    std::vector<std::string> factors;
    std::size_t a = 0;
    while (true) {
      std::size_t b = term.find('*', a);
      factors.push_back(term.substr(a, b == std::string::npos ? std::string::npos : b - a));
      if (b == std::string::npos) break;
      a = b + 1;
    }
    Scalar coeff = Scalar::one(p.field);
    std::size_t start = 0;
    if (!factors[0].empty() && std::isdigit(static_cast<unsigned char>(factors[0][0]))) {
      try {
        coeff = Scalar::parse(factors[0], p.field);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
      start = 1;
    }
    if (negative) coeff = -coeff;
    RelationTerm t;
    t.coefficient = coeff;
    for (std::size_t k = start; k < factors.size(); ++k) {
      if (factors[k].empty()) throw ParseError(line, "empty factor in term '" + term + "'");
      auto idx = p.quiver.find_arrow(factors[k]);
      if (!idx) throw ParseError(line, "unknown arrow '" + factors[k] + "'");
      t.arrows.push_back(*idx);
    }
    if (t.arrows.size() < 2)
      throw ParseError(line, "relation term '" + term + "' has length " + std::to_string(t.arrows.size()) +
                                 "; relations must lie in the square of the arrow ideal");
    for (std::size_t k = 1; k < t.arrows.size(); ++k)
      if (p.quiver.arrows[t.arrows[k - 1]].target != p.quiver.arrows[t.arrows[k]].source)
        throw ParseError(line, "term '" + term + "' is not a path (arrows do not compose left to right)");
    std::size_t ts = p.quiver.arrows[t.arrows.front()].source, tt = p.quiver.arrows[t.arrows.back()].target;
    if (src && (*src != ts || *tgt != tt)) throw ParseError(line, "relation terms are not parallel paths");
    src = ts;
    tgt = tt;
    if (!t.coefficient.is_zero()) rel.terms.push_back(std::move(t));
  }
  if (rel.terms.empty()) throw ParseError(line, "relation has no nonzero terms");
  return rel;
}

}  // namespace

Presentation parse_presentation(const std::string& text, const std::string& name) {
  Presentation p;
  p.name = name;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool have_field = false, have_vertices = false;
  std::vector<std::pair<std::size_t, std::string>> pending;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "field") {
      if (have_field) throw ParseError(line, "field declared twice");
      if (!pending.empty() || have_vertices) throw ParseError(line, "field must be declared first");
      if (tok.size() == 2 && tok[1] == "rational") {
        p.field = Field::rational();
      } else if (tok.size() == 3 && tok[1] == "prime") {
        try {
          p.field = Field::prime(parse_count(tok[2], line, "prime"));
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
      } else {
        throw ParseError(line, "expected 'field rational' or 'field prime <p>'");
      }
      have_field = true;
    } else if (kw == "vertices") {
      if (have_vertices) throw ParseError(line, "vertices declared twice");
      if (tok.size() != 2) throw ParseError(line, "expected 'vertices <n>'");
      p.quiver.num_vertices = parse_count(tok[1], line, "vertices");
      if (p.quiver.num_vertices == 0) throw ParseError(line, "need at least one vertex");
      have_vertices = true;
    } else if (kw == "arrow") {
      if (!have_vertices) throw ParseError(line, "arrow before 'vertices'");
      if (tok.size() != 4) throw ParseError(line, "expected 'arrow <name> <src> <tgt>'");
      if (!valid_name(tok[1])) throw ParseError(line, "invalid arrow name '" + tok[1] + "'");
      if (p.quiver.find_arrow(tok[1])) throw ParseError(line, "duplicate arrow '" + tok[1] + "'");
      std::size_t s = parse_count(tok[2], line, "source"), t = parse_count(tok[3], line, "target");
      if (s < 1 || s > p.quiver.num_vertices || t < 1 || t > p.quiver.num_vertices)
        throw ParseError(line, "arrow endpoint out of range");
      p.quiver.arrows.push_back({tok[1], s - 1, t - 1});
    } else if (kw == "relation") {
      auto pos = raw.find("relation");
      pending.emplace_back(line, raw.substr(pos + 8));
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_vertices) throw ParseError(line, "missing 'vertices' declaration");
  for (const auto& [l, body] : pending) p.relations.push_back(parse_relation(body, l, p));
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path;
  auto slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  auto dot = stem.find_last_of('.');
  if (dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_presentation(ss.str(), stem);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "field " << (p.field.is_rational() ? std::string("rational") : "prime " + std::to_string(p.field.characteristic()))
     << "\n";
  os << "vertices " << p.quiver.num_vertices << "\n";
  for (const auto& a : p.quiver.arrows) os << "arrow " << a.name << " " << a.source + 1 << " " << a.target + 1 << "\n";
  for (const auto& r : p.relations) {
    os << "relation";
    bool first = true;
    for (const auto& t : r.terms) {
      Scalar c = t.coefficient;
      bool neg = false;
      if (p.field.is_rational() && c.to_string()[0] == '-') {
        neg = true;
        c = -c;
      }
      os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
      if (!c.is_one()) os << c.to_string() << "*";
      for (std::size_t k = 0; k < t.arrows.size(); ++k) os << (k ? "*" : "") << p.quiver.arrows[t.arrows[k]].name;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct PathTable {
  std::vector<Path> paths;
  std::vector<std::size_t> target;
  std::vector<std::size_t> length;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  std::vector<std::vector<std::size_t>> right;  // right[p][a] = index of p*a
  std::vector<std::vector<std::size_t>> left;   // left[p][a] = index of a*p
  std::vector<std::size_t> level_start;         // first index of each length

  std::size_t find(std::size_t src, const std::vector<std::size_t>& arrows) const {
    auto it = index.find({src, arrows});
    return it == index.end() ? npos : it->second;
  }
};

PathTable enumerate_paths(const Quiver& q, std::size_t max_len, std::size_t cap) {
  PathTable t;
  const std::size_t na = q.arrows.size();
  t.level_start.push_back(0);
  for (std::size_t v = 0; v < q.num_vertices; ++v) {
    t.paths.push_back({v, {}});
    t.target.push_back(v);
    t.length.push_back(0);
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t begin = t.level_start.back(), end = t.paths.size();
    t.level_start.push_back(end);
    for (std::size_t pi = begin; pi < end; ++pi) {
      for (std::size_t a = 0; a < na; ++a) {
        if (q.arrows[a].source != t.target[pi]) continue;
        Path np{t.paths[pi].source, t.paths[pi].arrows};
        if (len == 1) np.source = q.arrows[a].source;
        np.arrows.push_back(a);
        t.paths.push_back(std::move(np));
        t.target.push_back(q.arrows[a].target);
        t.length.push_back(len);
        if (t.paths.size() > cap)
          throw ResourceCap("more than " + std::to_string(cap) + " paths of length <= " + std::to_string(max_len));
      }
    }
  }
  t.level_start.push_back(t.paths.size());
  for (std::size_t i = 0; i < t.paths.size(); ++i) t.index[{t.paths[i].source, t.paths[i].arrows}] = i;
  t.right.assign(t.paths.size(), std::vector<std::size_t>(na, npos));
  t.left.assign(t.paths.size(), std::vector<std::size_t>(na, npos));
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    for (std::size_t a = 0; a < na; ++a) {
      if (t.length[i] == max_len) break;
      if (q.arrows[a].source == t.target[i]) {
        auto w = t.paths[i].arrows;
        w.push_back(a);
        t.right[i][a] = t.find(t.paths[i].source, w);
      }
      if (q.arrows[a].target == t.paths[i].source) {
        std::vector<std::size_t> w{a};
        w.insert(w.end(), t.paths[i].arrows.begin(), t.paths[i].arrows.end());
        t.left[i][a] = t.find(q.arrows[a].source, w);
      }
    }
  }
  return t;
}

/** Echelon basis of a subspace of the span of paths; pivot = largest path index. */
class Echelon {
 public:
  Echelon(std::size_t n, Field f) : rows_(n), has_(n, false), field_(f) {}

  /** Returns the reduced remainder that was added, or empty. */
  SparseVec insert(SparseVec v) {
    while (!v.empty()) {
      std::size_t lead = v.back().first;
      if (!has_[lead]) break;
      v = sparse_add(v, sparse_scale(rows_[lead], -v.back().second));
    }
    if (v.empty()) return v;
    Scalar inv = v.back().second.inverse();
    v = sparse_scale(v, inv);
    has_[v.back().first] = true;
    rows_[v.back().first] = v;
    return v;
  }

  SparseVec normal_form(SparseVec v) const {
    SparseVec out;
    while (!v.empty()) {
      auto [lead, c] = v.back();
      if (has_[lead]) {
        v = sparse_add(v, sparse_scale(rows_[lead], -c));
      } else {
        out.emplace_back(lead, c);
        v.pop_back();
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool is_pivot(std::size_t i) const { return has_[i]; }

 private:
  std::vector<SparseVec> rows_;
  std::vector<bool> has_;
  Field field_;
};

SparseVec multiply_by_arrow(const SparseVec& v, std::size_t a, const std::vector<std::vector<std::size_t>>& ext) {
  SparseVec out;
  for (const auto& [i, c] : v) {
    std::size_t j = ext[i][a];
    if (j != npos) out.emplace_back(j, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace

AlgebraPtr build_algebra(const Presentation& p, std::size_t max_nilpotency, std::size_t path_cap) {
  const Quiver& q = p.quiver;
  const Field f = p.field;
  for (const auto& a : q.arrows)
    if (a.source >= q.num_vertices || a.target >= q.num_vertices) throw InvalidPresentation("arrow endpoint out of range");
  for (const auto& r : p.relations)
    for (const auto& t : r.terms) {
      if (t.arrows.size() < 2) throw InvalidPresentation("relation term of length < 2");
      if (t.coefficient.field() != f) throw FieldMismatch("relation coefficient over another field");
    }
  if (max_nilpotency == 0) throw InvalidPresentation("max_nilpotency must be positive");

  for (std::size_t len = 1; len <= max_nilpotency; ++len) {
    PathTable table = enumerate_paths(q, len, path_cap);
    const std::size_t n = table.paths.size();
    Echelon ideal(n, f);
    std::deque<SparseVec> queue;
    for (const auto& r : p.relations) {
      std::map<std::size_t, Scalar> acc;
      const std::size_t src = q.arrows[r.terms.front().arrows.front()].source;
      for (const auto& t : r.terms) {
        if (t.arrows.size() > len) continue;
        std::size_t idx = table.find(src, t.arrows);
        if (idx == npos) throw InvalidPresentation("relation term is not a path");
        auto it = acc.find(idx);
        if (it == acc.end())
          acc.emplace(idx, t.coefficient);
        else
          it->second += t.coefficient;
      }
      SparseVec v;
      for (auto& [i, c] : acc)
        if (!c.is_zero()) v.emplace_back(i, c);
      SparseVec added = ideal.insert(std::move(v));
      if (!added.empty()) queue.push_back(std::move(added));
    }
    while (!queue.empty()) {
      SparseVec v = std::move(queue.front());
      queue.pop_front();
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        for (const auto* ext : {&table.left, &table.right}) {
          SparseVec w = multiply_by_arrow(v, a, *ext);
          if (w.empty()) continue;
          SparseVec added = ideal.insert(std::move(w));
          if (!added.empty()) queue.push_back(std::move(added));
        }
      }
    }
    bool top_dies = true;
    for (std::size_t i = table.level_start[len]; i < table.level_start[len + 1]; ++i)
      if (!ideal.normal_form(SparseVec{{i, Scalar::one(f)}}).empty()) {
        top_dies = false;
        break;
      }
    if (!top_dies) {
      if (len == max_nilpotency)
        throw NonNilpotent("a path of length " + std::to_string(len) +
                           " survives the relations; the algebra is not finite dimensional or the bound is too small");
      continue;
    }

    std::vector<std::size_t> normal;
    std::vector<std::size_t> position(n, npos);
    for (std::size_t i = 0; i < n; ++i)
      if (!ideal.is_pivot(i)) {
        position[i] = normal.size();
        normal.push_back(i);
      }
    Algebra::Data d;
    d.name = p.name.empty() ? "algebra" : p.name;
    d.field = f;
    d.num_vertices = q.num_vertices;
    for (std::size_t v = 0; v < q.num_vertices; ++v) {
      d.vertex_labels.push_back(std::to_string(v + 1));
      d.idempotents.push_back(position[v]);
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      std::size_t idx = table.find(q.arrows[a].source, {a});
      if (idx == npos || position[idx] == npos) throw InvalidPresentation("arrow lies in the ideal");
      d.generators.push_back({q.arrows[a].source, q.arrows[a].target, position[idx], q.arrows[a].name});
    }
    for (std::size_t i : normal) {
      const Path& path = table.paths[i];
      BasisElement b;
      b.source = path.source;
      b.target = table.target[i];
      b.word = path.arrows;
      if (path.arrows.empty()) {
        b.label = "e" + std::to_string(path.source + 1);
      } else {
        for (std::size_t k = 0; k < path.arrows.size(); ++k)
          b.label += (k ? "*" : "") + q.arrows[path.arrows[k]].name;
      }
      d.basis.push_back(std::move(b));
    }
    const std::size_t dim = normal.size();
    d.table.assign(dim, std::vector<SparseVec>(dim));
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y) {
        const Path& px = table.paths[normal[x]];
        const Path& py = table.paths[normal[y]];
        if (table.target[normal[x]] != py.source) continue;
        std::vector<std::size_t> w = px.arrows;
        w.insert(w.end(), py.arrows.begin(), py.arrows.end());
        if (w.size() >= len) continue;
        std::size_t idx = table.find(px.source, w);
        SparseVec nf = ideal.normal_form(SparseVec{{idx, Scalar::one(f)}});
        SparseVec out;
        for (auto& [i, c] : nf) out.emplace_back(position[i], std::move(c));
        d.table[x][y] = std::move(out);
      }
    return Algebra::create(std::move(d));
  }
  throw NonNilpotent("nilpotency bound exhausted");
}

}  // namespace qalg
