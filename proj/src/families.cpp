#include "qalg/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

std::string schur_text(std::size_t m) {
  std::ostringstream s;
  s << "vertices " << m << "\n";
  for (std::size_t i = 1; i < m; ++i) {
    s << "arrow a" << i << " " << i << " " << i + 1 << "\n";
    s << "arrow b" << i << " " << i + 1 << " " << i << "\n";
  }
  s << "relation b" << m - 1 << "*a" << m - 1 << "\n";
  for (std::size_t i = 2; i < m; ++i) {
    s << "relation b" << i - 1 << "*a" << i - 1 << " - a" << i << "*b" << i << "\n";
    s << "relation a" << i - 1 << "*a" << i << "\n";
    s << "relation b" << i << "*b" << i - 1 << "\n";
  }
  return s.str();
}

std::string loop_text(std::size_t n) {
  std::string rel = "x";
  for (std::size_t i = 1; i < n; ++i) rel += "*x";
  return "vertices 1\narrow x 1 1\nrelation " + rel + "\n";
}

}  // namespace

std::vector<std::string> family_names() { return {"cyc3", "lin4", "a2", "schur", "loop", "kronecker", "field"}; }

Presentation family(const std::string& name, std::size_t m) {
  if (name == "cyc3")
    return parse_presentation("vertices 3\narrow a 1 3\narrow b 3 2\narrow c 2 1\nrelation c*a\nrelation b*c\n", "cyc3");
  if (name == "lin4")
    return parse_presentation("vertices 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\nrelation a*b*c\n", "lin4");
  if (name == "a2") return parse_presentation("vertices 2\narrow a 1 2\n", "a2");
  if (name == "kronecker") return parse_presentation("vertices 2\narrow a 1 2\narrow b 1 2\n", "kronecker");
  if (name == "field") return parse_presentation("vertices 1\n", "field");
  if (name == "schur") {
    if (m < 2 || m > 6) throw PreconditionError("schur family needs 2 <= m <= 6");
    return parse_presentation(schur_text(m), "schur" + std::to_string(m));
  }
  if (name == "loop") {
    if (m < 2 || m > 12) throw PreconditionError("loop family needs 2 <= m <= 12");
    return parse_presentation(loop_text(m), "loop" + std::to_string(m));
  }
  throw PreconditionError("unknown family '" + name + "'");
}

std::size_t monomial_dimension(const Presentation& p, std::size_t cap) {
  std::vector<std::vector<std::size_t>> forbidden;
  for (const auto& r : p.relations) {
    if (r.terms.size() != 1) throw PreconditionError("monomial_dimension needs monomial relations");
    forbidden.push_back(r.terms[0].arrows);
  }
  auto ends_forbidden = [&](const std::vector<std::size_t>& w) {
    for (const auto& f : forbidden)
      if (f.size() <= w.size() && std::equal(f.begin(), f.end(), w.end() - static_cast<std::ptrdiff_t>(f.size())))
        return true;
    return false;
  };
  std::size_t count = p.quiver.num_vertices;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> layer;
  for (std::size_t v = 0; v < p.quiver.num_vertices; ++v) layer.push_back({v, {}});
  while (!layer.empty()) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> next;
    for (const auto& [end, w] : layer)
      for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
        if (p.quiver.arrows[a].source != end) continue;
        auto w2 = w;
        w2.push_back(a);
        if (ends_forbidden(w2)) continue;
        if (++count > cap) return cap + 1;
        next.push_back({p.quiver.arrows[a].target, std::move(w2)});
      }
    layer = std::move(next);
  }
  return count;
}

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

/** Random path of the given length, or an empty vector if the walk gets stuck. */
std::vector<std::size_t> random_path(std::mt19937_64& rng, const Quiver& q, std::size_t length) {
  std::vector<std::size_t> path;
  std::size_t a = draw(rng, 0, q.arrows.size() - 1);
  path.push_back(a);
  while (path.size() < length) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < q.arrows.size(); ++b)
      if (q.arrows[b].source == q.arrows[path.back()].target) out.push_back(b);
    if (out.empty()) return {};
    path.push_back(out[draw(rng, 0, out.size() - 1)]);
  }
  return path;
}

void add_monomial(Presentation& p, std::vector<std::size_t> arrows) {
  Relation r;
  r.terms.push_back({Scalar::one(p.field), std::move(arrows)});
  p.relations.push_back(std::move(r));
}

/** Adds every surviving path of length 5 as a relation; false if there are too many. */
bool kill_long_paths(Presentation& p, std::size_t cap) {
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) layer.push_back({a});
  auto survives = [&](const std::vector<std::size_t>& w) {
    for (const auto& r : p.relations) {
      const auto& f = r.terms[0].arrows;
      if (f.size() <= w.size() && std::equal(f.begin(), f.end(), w.end() - static_cast<std::ptrdiff_t>(f.size())))
        return false;
    }
    return true;
  };
  std::erase_if(layer, [&](const auto& w) { return !survives(w); });
  for (std::size_t len = 2; len <= 5; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer)
      for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
        if (p.quiver.arrows[a].source != p.quiver.arrows[w.back()].target) continue;
        auto w2 = w;
        w2.push_back(a);
        if (survives(w2)) next.push_back(std::move(w2));
      }
    if (next.size() > cap) return false;
    layer = std::move(next);
  }
  for (auto& w : layer) add_monomial(p, std::move(w));
  return true;
}

Presentation draw_presentation(std::mt19937_64& rng, const RandomSpec& spec, const std::string& name) {
  for (;;) {
    Presentation p;
    p.name = name;
    p.field = spec.field;
    p.quiver.num_vertices = draw(rng, spec.min_vertices, spec.max_vertices);
    std::size_t arrows = draw(rng, spec.min_arrows, spec.max_arrows);
    for (std::size_t k = 0; k < arrows; ++k) {
      std::size_t s = draw(rng, 0, p.quiver.num_vertices - 1), t = draw(rng, 0, p.quiver.num_vertices - 1);
      p.quiver.arrows.push_back({"x" + std::to_string(k + 1), s, t});
    }
    std::size_t rels = draw(rng, spec.min_relations, spec.max_relations);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t k = 0; k < rels; ++k) {
      auto path = random_path(rng, p.quiver, draw(rng, 2, std::max<std::size_t>(2, spec.max_relation_length)));
      if (path.empty() || !seen.insert(path).second) continue;
      add_monomial(p, std::move(path));
    }
    if (!kill_long_paths(p, spec.dim_cap)) continue;
    if (monomial_dimension(p, spec.dim_cap) > spec.dim_cap) continue;
    return p;
  }
}

}  // namespace

Presentation random_presentation(const RandomSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  return draw_presentation(rng, spec, std::to_string(spec.seed) + "-0");
}

std::vector<Presentation> random_presentations(const RandomSpec& spec, std::size_t count) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Presentation> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(draw_presentation(rng, spec, std::to_string(spec.seed) + "-" + std::to_string(k)));
  return out;
}

}  // namespace qalg
