#include "qalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& s) {
  SparseVec out;
  if (s.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, c] : a) out.emplace_back(i, c * s);
  return out;
}

namespace {

SparseVec accumulate(std::map<std::size_t, Scalar>& acc) {
  SparseVec out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  return out;
}

}  // namespace

Algebra::Algebra(Data data, Kind kind) : d_(std::move(data)), kind_(kind) { build_indexes(); }

void Algebra::build_indexes() {
  const std::size_t n = d_.num_vertices;
  between_.assign(n * n, {});
  for (std::size_t i = 0; i < d_.basis.size(); ++i) {
    const auto& b = d_.basis[i];
    if (b.source >= n || b.target >= n) throw InvalidPresentation("basis element with bad vertex");
    between_[b.source * n + b.target].push_back(i);
  }
}

std::shared_ptr<const Algebra> Algebra::create(Data data, Kind kind) {
  const std::size_t n = data.num_vertices, dim = data.basis.size();
  if (data.vertex_labels.size() != n) {
    data.vertex_labels.clear();
    for (std::size_t v = 0; v < n; ++v) data.vertex_labels.push_back(std::to_string(v + 1));
  }
  if (data.idempotents.size() != n) throw InvalidPresentation("need one idempotent per vertex");
  if (data.table.size() != dim) throw InvalidPresentation("structure table has wrong size");
  for (const auto& row : data.table)
    if (row.size() != dim) throw InvalidPresentation("structure table has wrong size");
  std::shared_ptr<Algebra> a(new Algebra(std::move(data), kind));
  const Data& d = a->d_;
  const Field f = d.field;
  const Scalar one = Scalar::one(f);

  for (std::size_t v = 0; v < n; ++v) {
    std::size_t e = d.idempotents[v];
    const auto& be = d.basis.at(e);
    if (be.source != v || be.target != v || !be.word.empty())
      throw InvalidPresentation("idempotent basis element is malformed");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& bi = d.basis[i];
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& bj = d.basis[j];
      const SparseVec& p = d.table[i][j];
      if (bi.target != bj.source && !p.empty()) throw InvalidPresentation("product of non-composable elements");
      for (const auto& [k, c] : p) {
        if (k >= dim || c.field() != f) throw InvalidPresentation("bad structure constant");
        if (d.basis[k].source != bi.source || d.basis[k].target != bj.target)
          throw InvalidPresentation("structure constants are not homogeneous");
      }
    }
    SparseVec self{{i, one}};
    for (std::size_t v = 0; v < n; ++v) {
      SparseVec expect_left = (bi.source == v) ? self : SparseVec{};
      SparseVec expect_right = (bi.target == v) ? self : SparseVec{};
      if (d.table[d.idempotents[v]][i] != expect_left || d.table[i][d.idempotents[v]] != expect_right)
        throw InvalidPresentation("idempotents do not act as identities");
    }
  }
  for (const auto& g : d.generators) {
    const auto& b = d.basis.at(g.basis_index);
    if (b.source != g.source || b.target != g.target) throw InvalidPresentation("generator endpoints mismatch");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& w = d.basis[i].word;
    if (w.empty()) {
      if (std::find(d.idempotents.begin(), d.idempotents.end(), i) == d.idempotents.end())
        throw InvalidPresentation("only idempotents may have empty words");
      continue;
    }
    SparseVec x{{d.generators.at(w[0]).basis_index, one}};
    for (std::size_t k = 1; k < w.size(); ++k)
      x = a->multiply(x, SparseVec{{d.generators.at(w[k]).basis_index, one}});
    if (x != SparseVec{{i, one}}) throw InvalidPresentation("basis word does not multiply to its element");
  }
  a->check_associativity();
  return a;
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, e] : y) {
      const SparseVec& p = d_.table[i][j];
      if (p.empty()) continue;
      Scalar ce = c * e;
      for (const auto& [k, s] : p) {
        auto it = acc.find(k);
        if (it == acc.end())
          acc.emplace(k, ce * s);
        else
          it->second += ce * s;
      }
    }
  return accumulate(acc);
}

std::size_t Algebra::dim_from(std::size_t v) const {
  std::size_t s = 0;
  for (std::size_t t = 0; t < d_.num_vertices; ++t) s += basis_between(v, t).size();
  return s;
}

std::size_t Algebra::dim_to(std::size_t v) const {
  std::size_t s = 0;
  for (std::size_t u = 0; u < d_.num_vertices; ++u) s += basis_between(u, v).size();
  return s;
}

std::size_t Algebra::loewy_bound() const {
  std::size_t m = 0;
  for (const auto& b : d_.basis) m = std::max(m, b.word.size());
  return m;
}

void Algebra::check_associativity() const {
  const std::size_t dim = d_.basis.size();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (d_.basis[i].target != d_.basis[j].source) continue;
      const SparseVec& ij = d_.table[i][j];
      for (std::size_t k = 0; k < dim; ++k) {
        if (d_.basis[j].target != d_.basis[k].source) continue;
        SparseVec left = multiply(ij, SparseVec{{k, Scalar::one(d_.field)}});
        SparseVec right = multiply(SparseVec{{i, Scalar::one(d_.field)}}, d_.table[j][k]);
        if (left != right) throw InvalidPresentation("structure constants are not associative");
      }
    }
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (auto back = op_back_.lock()) return back;
  if (op_owned_) return op_owned_;
  Data od;
  od.name = d_.name + "^op";
  od.field = d_.field;
  od.num_vertices = d_.num_vertices;
  od.vertex_labels = d_.vertex_labels;
  od.idempotents = d_.idempotents;
  for (const auto& b : d_.basis) {
    BasisElement ob = b;
    std::swap(ob.source, ob.target);
    std::reverse(ob.word.begin(), ob.word.end());
    od.basis.push_back(std::move(ob));
  }
  for (const auto& g : d_.generators) {
    Generator og = g;
    std::swap(og.source, og.target);
    od.generators.push_back(og);
  }
  const std::size_t dim = d_.basis.size();
  od.table.assign(dim, std::vector<SparseVec>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) od.table[i][j] = d_.table[j][i];
  std::shared_ptr<Algebra> op(new Algebra(std::move(od), Kind::Opposite));
  if (kind_ == Kind::Tensor) op->factors_ = factors_;
  op->op_back_ = shared_from_this();
  op_owned_ = op;
  return op;
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << d_.name << ": dim " << dim() << ", " << d_.num_vertices << " vertices, " << d_.generators.size()
     << " generators over " << d_.field.to_string();
  return os.str();
}

std::size_t tensor_left_generator(const Algebra&, const Algebra& b, std::size_t g, std::size_t v) {
  return g * b.num_vertices() + v;
}

std::size_t tensor_right_generator(const Algebra& a, const Algebra& b, std::size_t u, std::size_t h) {
  return a.generators().size() * b.num_vertices() + u * b.generators().size() + h;
}

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field() != b->field()) throw FieldMismatch("tensor product over different fields");
  const std::size_t da = a->dim(), db = b->dim(), na = a->num_vertices(), nb = b->num_vertices();
  Algebra::Data d;
  d.name = a->name() + "(x)" + b->name();
  d.field = a->field();
  d.num_vertices = na * nb;
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < nb; ++v) d.vertex_labels.push_back("(" + a->vertex_label(u) + "," + b->vertex_label(v) + ")");
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < nb; ++v) d.idempotents.push_back(a->idempotent(u) * db + b->idempotent(v));
  for (const auto& g : a->generators())
    for (std::size_t v = 0; v < nb; ++v)
      d.generators.push_back({g.source * nb + v, g.target * nb + v, g.basis_index * db + b->idempotent(v),
                              "(" + g.name + "|e" + b->vertex_label(v) + ")"});
  for (std::size_t u = 0; u < na; ++u)
    for (const auto& h : b->generators())
      d.generators.push_back({u * nb + h.source, u * nb + h.target, a->idempotent(u) * db + h.basis_index,
                              "(e" + a->vertex_label(u) + "|" + h.name + ")"});
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < db; ++y) {
      const auto& bx = a->basis(x);
      const auto& by = b->basis(y);
      BasisElement e;
      e.source = bx.source * nb + by.source;
      e.target = bx.target * nb + by.target;
      for (auto g : bx.word) e.word.push_back(tensor_left_generator(*a, *b, g, by.source));
      for (auto h : by.word) e.word.push_back(tensor_right_generator(*a, *b, bx.target, h));
      e.label = "(" + bx.label + "|" + by.label + ")";
      d.basis.push_back(std::move(e));
    }
  const std::size_t dim = da * db;
  d.table.assign(dim, std::vector<SparseVec>(dim));
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < db; ++y)
      for (std::size_t x2 = 0; x2 < da; ++x2) {
        const SparseVec& pa = a->product(x, x2);
        if (pa.empty()) continue;
        for (std::size_t y2 = 0; y2 < db; ++y2) {
          const SparseVec& pb = b->product(y, y2);
          if (pb.empty()) continue;
          SparseVec out;
          for (const auto& [i, c] : pa)
            for (const auto& [j, e] : pb) out.emplace_back(i * db + j, c * e);
          std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
          d.table[x * db + y][x2 * db + y2] = std::move(out);
        }
      }
  std::shared_ptr<Algebra> t(new Algebra(std::move(d), Algebra::Kind::Tensor));
  t->factors_ = {a, b};
  t->check_associativity();
  return t;
}

AlgebraPtr enveloping(const AlgebraPtr& a, std::size_t cap) {
  if (a->dim() > cap)
    throw ResourceCap("enveloping algebra refused: dim " + std::to_string(a->dim()) + " exceeds cap " +
                      std::to_string(cap));
  {
    std::lock_guard<std::mutex> lock(a->mu_);
    if (auto env = a->env_cache_.lock()) return env;
  }
  AlgebraPtr env = tensor(a, a->opposite());
  std::lock_guard<std::mutex> lock(a->mu_);
  if (auto existing = a->env_cache_.lock()) return existing;
  a->env_cache_ = env;
  return env;
}

}  // namespace qalg
