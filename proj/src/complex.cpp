#include "scrambled/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace scrambled {

// --- Injection ---------------------------------------------------------------

Injection Injection::identity(std::size_t size) {
  Injection f;
  f.image.resize(size);
  std::iota(f.image.begin(), f.image.end(), std::size_t{0});
  f.codomain_size = size;
  return f;
}

Injection Injection::skipping(std::size_t codomain_size, std::size_t k) {
  if (k >= codomain_size) throw Error("skipped position out of range");
  Injection f;
  f.codomain_size = codomain_size;
  for (std::size_t i = 0; i < codomain_size; ++i) {
    if (i != k) f.image.push_back(i);
  }
  return f;
}

int Injection::sign() const {
  if (image.size() + 1 != codomain_size) throw Error("sign is defined for codimension one only");
  std::size_t missing = 0;
  while (missing < image.size() && image[missing] == missing) ++missing;
  return missing % 2 == 0 ? -1 : 1;
}

Injection compose(const Injection& f, const Injection& g) {
  if (g.codomain_size != f.domain_size()) throw Error("injections are not composable");
  Injection h;
  h.codomain_size = f.codomain_size;
  h.image.reserve(g.image.size());
  for (std::size_t i : g.image) h.image.push_back(f.image[i]);
  return h;
}

std::vector<Injection> all_injections(std::size_t m, std::size_t n) {
  std::vector<Injection> out;
  if (m > n) return out;
  Injection f;
  f.codomain_size = n;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (f.image.size() == m) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = next; v + (m - f.image.size()) <= n; ++v) {
      f.image.push_back(v);
      rec(v + 1);
      f.image.pop_back();
    }
  };
  rec(0);
  return out;
}

// --- DeltaComplex -------------------------------------------------------------

DeltaComplex::DeltaComplex(std::vector<std::vector<Cell>> cells_by_dim)
    : cells_(std::move(cells_by_dim)) {
  while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      const Cell& c = cells_[d][i];
      const std::size_t arity = d == 0 ? 0 : d + 1;
      if (c.faces.size() != arity) throw Error("cell '" + c.label + "' has wrong face count");
      for (std::size_t f : c.faces) {
        if (f >= cells_[d - 1].size()) throw Error("cell '" + c.label + "' has a dangling face");
      }
      const CellRef ref{static_cast<int>(d), i};
      if (!by_label_.emplace(c.label, ref).second) {
        throw Error("duplicate cell label '" + c.label + "'");
      }
    }
  }
  if (!check_functoriality(*this)) throw Error("gluing data violates the simplicial identities");
}

std::size_t DeltaComplex::num_cells(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return cells_[static_cast<std::size_t>(dim)].size();
}

std::size_t DeltaComplex::num_cells() const {
  std::size_t n = 0;
  for (const auto& level : cells_) n += level.size();
  return n;
}

std::vector<std::size_t> DeltaComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : cells_) f.push_back(level.size());
  return f;
}

const std::vector<Cell>& DeltaComplex::cells(int dim) const {
  if (dim < 0 || dim > dimension()) throw Error("dimension out of range");
  return cells_[static_cast<std::size_t>(dim)];
}

const Cell& DeltaComplex::cell(CellRef c) const {
  const auto& level = cells(c.dim);
  if (c.index >= level.size()) throw Error("cell index out of range");
  return level[c.index];
}

CellRef DeltaComplex::face(CellRef c, std::size_t k) const {
  const Cell& cc = cell(c);
  if (k >= cc.faces.size()) throw Error("face position out of range");
  return CellRef{c.dim - 1, cc.faces[k]};
}

CellRef DeltaComplex::boundary(CellRef c, const Injection& f) const {
  if (f.codomain_size != static_cast<std::size_t>(c.dim) + 1 || f.image.empty()) {
    throw Error("injection does not match the cell dimension");
  }
  // Delete missing positions from the top down so lower positions stay put.
  std::vector<char> kept(f.codomain_size, 0);
  for (std::size_t i : f.image) kept[i] = 1;
  CellRef out = c;
  for (std::size_t j = f.codomain_size; j-- > 0;) {
    if (!kept[j]) out = face(out, j);
  }
  return out;
}

std::vector<std::size_t> DeltaComplex::vertices(CellRef c) const {
  std::vector<std::size_t> out;
  const std::size_t n = static_cast<std::size_t>(c.dim) + 1;
  for (std::size_t k = 0; k < n; ++k) {
    Injection f;
    f.image = {k};
    f.codomain_size = n;
    out.push_back(boundary(c, f).index);
  }
  return out;
}

std::optional<CellRef> DeltaComplex::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

CellRef DeltaComplex::at(std::string_view label) const {
  if (auto c = find(label)) return *c;
  throw Error("no cell labelled '" + std::string(label) + "'");
}

std::vector<CellRef> DeltaComplex::all_cells() const {
  std::vector<CellRef> out;
  out.reserve(num_cells());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    for (std::size_t i = 0; i < cells_[d].size(); ++i) out.push_back({static_cast<int>(d), i});
  }
  return out;
}

std::size_t DeltaComplex::global_index(CellRef c) const {
  std::size_t offset = 0;
  for (int d = 0; d < c.dim; ++d) offset += num_cells(d);
  return offset + c.index;
}

// --- Scrambled simplices --------------------------------------------------------

DeltaComplex build(const Word& word) {
  if (word.empty()) throw Error("the scrambled simplex of the empty word is undefined");
  for (Letter a : word) {
    if (a.id >= 26) throw Error("letter ids must be below 26");
  }
  const std::vector<Word> subwords = distinct_subwords(word);
  std::vector<std::vector<Cell>> cells(word.size());
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index(word.size());
  for (const Word& v : subwords) {
    const std::size_t d = v.size() - 1;
    index[d].emplace(v, cells[d].size());
    Cell c;
    c.label = v.str();
    if (d > 0) {
      c.faces.reserve(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) c.faces.push_back(index[d - 1].at(v.without(k)));
    }
    cells[d].push_back(std::move(c));
  }
  return DeltaComplex(std::move(cells));
}

Word subword_of(const DeltaComplex& x, CellRef c) { return Word::parse(x.label(c)); }

int incidence(const DeltaComplex& x, CellRef sigma, CellRef tau) {
  if (tau.dim != sigma.dim + 1) throw Error("incidence requires dim(tau) = dim(sigma) + 1");
  (void)x.cell(sigma);
  const Cell& t = x.cell(tau);
  int sum = 0;
  for (std::size_t k = 0; k < t.faces.size(); ++k) {
    if (t.faces[k] == sigma.index) sum += k % 2 == 0 ? -1 : 1;
  }
  return sum;
}

std::int64_t reduced_euler(const DeltaComplex& x) {
  std::int64_t e = -1;
  const auto f = x.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) {
    e += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
  }
  return e;
}

bool check_functoriality(const DeltaComplex& x) {
  for (int d = 2; d <= x.dimension(); ++d) {
    for (std::size_t idx = 0; idx < x.num_cells(d); ++idx) {
      const Cell& c = x.cells(d)[idx];
      const auto& lower = x.cells(d - 1);
      for (std::size_t j = 1; j < c.faces.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (lower[c.faces[j]].faces[i] != lower[c.faces[i]].faces[j - 1]) return false;
        }
      }
    }
  }
  return true;
}

// --- Face poset ----------------------------------------------------------------

FacePoset::FacePoset(const DeltaComplex& x) {
  cofaces_.resize(static_cast<std::size_t>(x.dimension() + 1));
  for (int d = 0; d <= x.dimension(); ++d) cofaces_[d].resize(x.num_cells(d));
  for (int d = 1; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.num_cells(d); ++i) {
      std::map<std::size_t, std::size_t> mult;
      for (std::size_t f : x.cells(d)[i].faces) ++mult[f];
      for (auto [f, m] : mult) cofaces_[d - 1][f].push_back({CellRef{d, i}, m});
    }
  }
}

const std::vector<Coface>& FacePoset::cofaces(CellRef c) const {
  return cofaces_.at(static_cast<std::size_t>(c.dim)).at(c.index);
}

std::size_t FacePoset::coface_incidences(CellRef c) const {
  std::size_t n = 0;
  for (const Coface& cf : cofaces(c)) n += cf.multiplicity;
  return n;
}

std::set<CellRef> FacePoset::upward_closure(CellRef c) const {
  std::set<CellRef> seen{c};
  std::queue<CellRef> todo;
  todo.push(c);
  while (!todo.empty()) {
    const CellRef cur = todo.front();
    todo.pop();
    for (const Coface& cf : cofaces(cur)) {
      if (seen.insert(cf.cell).second) todo.push(cf.cell);
    }
  }
  return seen;
}

// --- Join ----------------------------------------------------------------------

namespace {

// Augmented view: dimension -1 holds the single empty cell.
std::size_t aug_count(const DeltaComplex& x, int dim) {
  return dim == -1 ? 1 : x.num_cells(dim);
}

}  // namespace

DeltaComplex join(const DeltaComplex& x, const DeltaComplex& y) {
  if (y.empty()) return x;
  if (x.empty()) return y;
  const int dx = x.dimension();
  const int dy = y.dimension();
  const int top = dx + dy + 1;

  // offset[n][i + 1]: first index in dimension n of the block with dim σ = i.
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(top + 1),
                                               std::vector<std::size_t>(dx + 2, 0));
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    std::size_t running = 0;
    for (int i = -1; i <= dx; ++i) {
      offset[n][i + 1] = running;
      const int j = n - i - 1;
      if (j < -1 || j > dy) continue;
      running += aug_count(x, i) * aug_count(y, j);
    }
    cells[n].resize(running);
  }
  auto index_of = [&](int i, std::size_t s, int j, std::size_t t) {
    const int n = i + j + 1;
    return offset[n][i + 1] + s * aug_count(y, j) + t;
  };
  auto label_of = [](const DeltaComplex& c, int dim, std::size_t idx) {
    return dim == -1 ? std::string() : c.cells(dim)[idx].label;
  };

  for (int n = 0; n <= top; ++n) {
    for (int i = -1; i <= dx; ++i) {
      const int j = n - i - 1;
      if (j < -1 || j > dy) continue;
      for (std::size_t s = 0; s < aug_count(x, i); ++s) {
        for (std::size_t t = 0; t < aug_count(y, j); ++t) {
          Cell c;
          c.label = "(" + label_of(x, i, s) + "," + label_of(y, j, t) + ")";
          if (n > 0) {
            for (int k = 0; k <= n; ++k) {
              if (k <= i) {
                const std::size_t fs = i == 0 ? 0 : x.cells(i)[s].faces[k];
                c.faces.push_back(index_of(i - 1, fs, j, t));
              } else {
                const std::size_t kk = static_cast<std::size_t>(k - i - 1);
                const std::size_t ft = j == 0 ? 0 : y.cells(j)[t].faces[kk];
                c.faces.push_back(index_of(i, s, j - 1, ft));
              }
            }
          }
          cells[n][index_of(i, s, j, t)] = std::move(c);
        }
      }
    }
  }
  return DeltaComplex(std::move(cells));
}

// --- Isomorphism ------------------------------------------------------------------

namespace {

using Signature = std::vector<std::size_t>;

std::vector<std::vector<Signature>> signatures(const DeltaComplex& x, const FacePoset& p) {
  std::vector<std::vector<Signature>> out(static_cast<std::size_t>(x.dimension() + 1));
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.num_cells(d); ++i) {
      const CellRef c{d, i};
      Signature s;
      s.push_back(p.coface_incidences(c));
      std::vector<std::size_t> mults;
      for (const Coface& cf : p.cofaces(c)) mults.push_back(cf.multiplicity);
      std::sort(mults.begin(), mults.end());
      s.push_back(mults.size());
      s.insert(s.end(), mults.begin(), mults.end());
      // Which face positions coincide.
      const auto& faces = x.cells(d)[i].faces;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        std::size_t first = k;
        for (std::size_t m = 0; m < k; ++m) {
          if (faces[m] == faces[k]) {
            first = m;
            break;
          }
        }
        s.push_back(first);
      }
      out[d].push_back(std::move(s));
    }
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const DeltaComplex& x, const DeltaComplex& y) : x_(x), y_(y), px_(x), py_(y) {
    sx_ = signatures(x, px_);
    sy_ = signatures(y, py_);
    for (int d = 0; d <= x.dimension(); ++d) {
      fwd_.emplace_back(x.num_cells(d), kUnset);
      inv_.emplace_back(y.num_cells(d), kUnset);
      for (std::size_t i = 0; i < x.num_cells(d); ++i) {
        if (px_.cofaces({d, i}).empty()) maximal_.push_back({d, i});
      }
    }
    std::stable_sort(maximal_.begin(), maximal_.end(),
                     [](CellRef a, CellRef b) { return a.dim > b.dim; });
  }

  bool signatures_match() const {
    for (std::size_t d = 0; d < sx_.size(); ++d) {
      auto a = sx_[d];
      auto b = sy_[d];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    return true;
  }

  bool search(std::size_t next) {
    if (next == maximal_.size()) return true;
    const CellRef c = maximal_[next];
    if (fwd_[c.dim][c.index] != kUnset) return search(next + 1);
    for (std::size_t cand = 0; cand < y_.num_cells(c.dim); ++cand) {
      if (inv_[c.dim][cand] != kUnset || sy_[c.dim][cand] != sx_[c.dim][c.index]) continue;
      const std::size_t mark = trail_.size();
      if (assign(c, cand) && search(next + 1)) return true;
      undo(mark);
    }
    return false;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool assign(CellRef c, std::size_t target) {
    std::size_t& f = fwd_[c.dim][c.index];
    if (f != kUnset) return f == target;
    std::size_t& g = inv_[c.dim][target];
    if (g != kUnset) return false;
    if (sx_[c.dim][c.index] != sy_[c.dim][target]) return false;
    f = target;
    g = c.index;
    trail_.push_back(c);
    if (c.dim == 0) return true;
    const auto& xf = x_.cells(c.dim)[c.index].faces;
    const auto& yf = y_.cells(c.dim)[target].faces;
    for (std::size_t k = 0; k < xf.size(); ++k) {
      if (!assign({c.dim - 1, xf[k]}, yf[k])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const CellRef c = trail_.back();
      trail_.pop_back();
      inv_[c.dim][fwd_[c.dim][c.index]] = kUnset;
      fwd_[c.dim][c.index] = kUnset;
    }
  }

  const DeltaComplex& x_;
  const DeltaComplex& y_;
  FacePoset px_, py_;
  std::vector<std::vector<Signature>> sx_, sy_;
  std::vector<std::vector<std::size_t>> fwd_, inv_;
  std::vector<CellRef> maximal_;
  std::vector<CellRef> trail_;
};

}  // namespace

bool is_isomorphic(const DeltaComplex& x, const DeltaComplex& y) {
  if (x.f_vector() != y.f_vector()) return false;
  if (x.empty()) return true;
  IsoSearch s(x, y);
  if (!s.signatures_match()) return false;
  return s.search(0);
}

// --- Collapses -----------------------------------------------------------------

std::vector<FreePair> free_pairs(const DeltaComplex& x) { return CollapseSession(x).free_pairs(); }

DeltaComplex elementary_collapse(const DeltaComplex& x, CellRef sigma, CellRef tau) {
  CollapseSession session(x);
  session.collapse(sigma, tau);
  return session.result();
}

DeltaComplex remove_cells(const DeltaComplex& x, const std::set<CellRef>& removed) {
  std::vector<std::vector<std::size_t>> renumber;
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(x.dimension() + 1));
  for (int d = 0; d <= x.dimension(); ++d) {
    renumber.emplace_back(x.num_cells(d), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < x.num_cells(d); ++i) {
      if (removed.count({d, i})) continue;
      Cell c = x.cells(d)[i];
      for (std::size_t& f : c.faces) {
        if (renumber[d - 1][f] == static_cast<std::size_t>(-1)) {
          throw Error("removing cells leaves '" + c.label + "' without a face");
        }
        f = renumber[d - 1][f];
      }
      renumber[d][i] = cells[d].size();
      cells[d].push_back(std::move(c));
    }
  }
  return DeltaComplex(std::move(cells));
}

CollapseSession::CollapseSession(const DeltaComplex& x) : x_(&x) {
  for (int d = 0; d <= x.dimension(); ++d) {
    alive_.emplace_back(x.num_cells(d), 1);
    coface_count_.emplace_back(x.num_cells(d), 0);
  }
  alive_count_ = x.num_cells();
  for (int d = 1; d <= x.dimension(); ++d) {
    for (const Cell& c : x.cells(d)) {
      for (std::size_t f : c.faces) ++coface_count_[d - 1][f];
    }
  }
}

bool CollapseSession::alive(CellRef c) const {
  if (c.dim < 0 || c.dim > x_->dimension() || c.index >= x_->num_cells(c.dim)) return false;
  return alive_[c.dim][c.index] != 0;
}

int CollapseSession::violated_condition(CellRef sigma, CellRef tau) const {
  if (!alive(sigma) || !alive(tau)) throw Error("collapse pair refers to a missing cell");
  if (tau.dim != sigma.dim + 1) return 1;
  std::size_t hits = 0;
  for (std::size_t f : x_->cells(tau.dim)[tau.index].faces) hits += f == sigma.index;
  if (hits != 1) return 1;
  if (coface_count_[sigma.dim][sigma.index] != 1) return 2;
  if (static_cast<std::size_t>(tau.dim) < coface_count_.size() &&
      coface_count_[tau.dim][tau.index] != 0) {
    return 3;
  }
  return 0;
}

void CollapseSession::collapse(CellRef sigma, CellRef tau) {
  static const char* const kReasons[] = {
      "",
      "condition (1): no unique face map carries tau to sigma",
      "condition (2): sigma is a face of another cell or face position",
      "condition (3): tau is not maximal",
  };
  const int bad = violated_condition(sigma, tau);
  if (bad != 0) {
    throw CollapseError(bad, std::string(kReasons[bad]) + " for (" + x_->label(sigma) + ", " +
                                 x_->label(tau) + ")");
  }
  for (CellRef c : {tau, sigma}) {
    alive_[c.dim][c.index] = 0;
    --alive_count_;
    if (c.dim > 0) {
      for (std::size_t f : x_->cells(c.dim)[c.index].faces) --coface_count_[c.dim - 1][f];
    }
  }
}

std::vector<FreePair> CollapseSession::free_pairs() const {
  std::vector<FreePair> out;
  for (int d = 1; d <= x_->dimension(); ++d) {
    for (std::size_t i = 0; i < x_->num_cells(d); ++i) {
      if (!alive_[d][i] || coface_count_[d][i] != 0) continue;
      const auto& faces = x_->cells(d)[i].faces;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        if (coface_count_[d - 1][faces[k]] == 1) {
          out.push_back({CellRef{d - 1, faces[k]}, CellRef{d, i}, k});
        }
      }
    }
  }
  return out;
}

DeltaComplex CollapseSession::result() const {
  std::set<CellRef> removed;
  for (int d = 0; d <= x_->dimension(); ++d) {
    for (std::size_t i = 0; i < x_->num_cells(d); ++i) {
      if (!alive_[d][i]) removed.insert({d, i});
    }
  }
  return remove_cells(*x_, removed);
}

// --- Structure checks ---------------------------------------------------------------

bool is_simplicial(const DeltaComplex& x) {
  for (int d = 0; d <= x.dimension(); ++d) {
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < x.num_cells(d); ++i) {
      std::vector<std::size_t> v = x.vertices({d, i});
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
      if (!seen.insert(std::move(v)).second) return false;
    }
  }
  return true;
}

bool is_pseudomanifold(const DeltaComplex& x) {
  if (x.empty()) return false;
  const int d = x.dimension();
  const FacePoset poset(x);
  for (const CellRef c : x.all_cells()) {
    if (c.dim < d && poset.cofaces(c).empty()) return false;
  }
  if (d == 0) return x.num_cells(0) == 2;

  std::vector<std::size_t> parent(x.num_cells(d));
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < x.num_cells(d - 1); ++i) {
    const CellRef c{d - 1, i};
    if (poset.coface_incidences(c) != 2) return false;
    const auto& cf = poset.cofaces(c);
    if (cf.size() == 2) parent[root(cf[0].cell.index)] = root(cf[1].cell.index);
  }
  const std::size_t r = root(0);
  for (std::size_t i = 1; i < parent.size(); ++i) {
    if (root(i) != r) return false;
  }
  return true;
}

}  // namespace scrambled
