// Δ-complexes stored as codimension-one gluing data.
//
// Every n-cell (n >= 1) records its n+1 faces: faces[k] is the (n-1)-cell
// obtained by deleting vertex k (0-based). General boundary maps B_f are
// composites of these. The incidence sign of face k is (-1)^(k+1), i.e.
// (-1)^j for the 1-based missing vertex j.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scrambled/words.hpp"

namespace scrambled {

struct CellRef {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

struct Cell {
  std::vector<std::size_t> faces;
  /// Provenance: the subword for scrambled simplices, a constructor-specific
  /// tag for derived complexes. Unique within a complex.
  std::string label;
};

/// Order-preserving injection [m+1] -> [n+1], stored by its 0-based image.
struct Injection {
  std::vector<std::size_t> image;
  std::size_t codomain_size = 0;

  static Injection identity(std::size_t size);
  /// The codimension-one injection missing position k.
  static Injection skipping(std::size_t codomain_size, std::size_t k);

  std::size_t domain_size() const noexcept { return image.size(); }
  /// Sign (-1)^j with j the 1-based missing position; codimension one only.
  int sign() const;

  friend bool operator==(const Injection&, const Injection&) = default;
};

/// (f ∘ g)(i) = f(g(i)).
Injection compose(const Injection& f, const Injection& g);

/// All order-preserving injections [m] -> [n] (sizes), lexicographic by image.
std::vector<Injection> all_injections(std::size_t m, std::size_t n);

class DeltaComplex {
 public:
  DeltaComplex() = default;

  /// Validates face arity and ranges, the simplicial identities
  /// d_i d_j = d_{j-1} d_i (i < j), and label uniqueness.
  explicit DeltaComplex(std::vector<std::vector<Cell>> cells_by_dim);

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const noexcept { return cells_.empty(); }

  std::size_t num_cells(int dim) const;
  std::size_t num_cells() const;
  std::vector<std::size_t> f_vector() const;

  const std::vector<Cell>& cells(int dim) const;
  const Cell& cell(CellRef c) const;
  const std::string& label(CellRef c) const { return cell(c).label; }

  CellRef face(CellRef c, std::size_t k) const;
  /// B_f(c) for a general order-preserving injection f.
  CellRef boundary(CellRef c, const Injection& f) const;
  /// The vertices (0-cells) of c, in order.
  std::vector<std::size_t> vertices(CellRef c) const;

  std::optional<CellRef> find(std::string_view label) const;
  /// Throws when no cell carries `label`.
  CellRef at(std::string_view label) const;

  /// Cells ordered by dimension, then index.
  std::vector<CellRef> all_cells() const;
  /// Position of c in all_cells().
  std::size_t global_index(CellRef c) const;

 private:
  std::vector<std::vector<Cell>> cells_;
  std::unordered_map<std::string, CellRef> by_label_;
};

/// The scrambled simplex Δ_w: n-cells are the distinct subwords of length
/// n+1, face k deletes letter k. Letter ids must be below 26.
DeltaComplex build(const Word& word);

/// The subword indexing a cell of a scrambled simplex.
Word subword_of(const DeltaComplex& x, CellRef c);

/// [σ:τ] = Σ_k (-1)^(k+1) over faces k of τ equal to σ.
int incidence(const DeltaComplex& x, CellRef sigma, CellRef tau);

/// Reduced Euler characteristic -1 + Σ (-1)^n f_n.
std::int64_t reduced_euler(const DeltaComplex& x);

/// True when the simplicial identities hold for every cell (B_{f∘g} = B_g∘B_f
/// on codimension-one steps).
bool check_functoriality(const DeltaComplex& x);

struct Coface {
  CellRef cell;
  /// Number of face positions of `cell` landing on the covered cell.
  std::size_t multiplicity = 0;
};

/// Covering relations of the face poset with multiplicities.
class FacePoset {
 public:
  explicit FacePoset(const DeltaComplex& x);

  const std::vector<Coface>& cofaces(CellRef c) const;
  /// Total number of (τ, k) with face_k(τ) = c.
  std::size_t coface_incidences(CellRef c) const;
  /// P(X)_{>= c}: c together with every cell having c as an iterated face.
  std::set<CellRef> upward_closure(CellRef c) const;

 private:
  std::vector<std::vector<std::vector<Coface>>> cofaces_;
};

DeltaComplex join(const DeltaComplex& x, const DeltaComplex& y);

/// Searches for dimension-preserving bijections commuting with every face map.
bool is_isomorphic(const DeltaComplex& x, const DeltaComplex& y);

struct FreePair {
  CellRef sigma;
  CellRef tau;
  /// The unique face position with face(tau, face_index) == sigma.
  std::size_t face_index = 0;

  friend bool operator==(const FreePair&, const FreePair&) = default;
};

/// Raised by elementary_collapse; `condition()` is 1, 2 or 3.
class CollapseError : public Error {
 public:
  CollapseError(int condition, const std::string& what) : Error(what), condition_(condition) {}
  int condition() const noexcept { return condition_; }

 private:
  int condition_;
};

/// All pairs (σ, τ) where σ is hit by exactly one face map of exactly one
/// cell, namely τ, and τ is maximal.
std::vector<FreePair> free_pairs(const DeltaComplex& x);

/// X \ {σ, τ}; throws CollapseError naming the violated condition.
DeltaComplex elementary_collapse(const DeltaComplex& x, CellRef sigma, CellRef tau);

/// X minus a set of cells; throws unless the remainder is a subcomplex.
DeltaComplex remove_cells(const DeltaComplex& x, const std::set<CellRef>& removed);

/// Incremental elementary collapses over a fixed complex.
class CollapseSession {
 public:
  explicit CollapseSession(const DeltaComplex& x);

  /// 0 if (σ, τ) is an elementary collapse of the current complex, else the
  /// first violated condition (1, 2 or 3).
  int violated_condition(CellRef sigma, CellRef tau) const;
  /// Throws CollapseError when the pair is not collapsible.
  void collapse(CellRef sigma, CellRef tau);

  bool alive(CellRef c) const;
  std::size_t alive_count() const noexcept { return alive_count_; }
  std::vector<FreePair> free_pairs() const;
  /// The current complex, cells renumbered.
  DeltaComplex result() const;

  const DeltaComplex& original() const noexcept { return *x_; }

 private:
  const DeltaComplex* x_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<std::size_t>> coface_count_;
  std::size_t alive_count_ = 0;
};

/// Barycentric subdivision. Cells are pairs (τ, A_0 ⊊ ... ⊊ A_n) of a cell
/// and a chain of vertex-position subsets of τ topped by the full set;
/// deleting A_n re-roots the chain at the face of τ spanned by A_{n-1}.
DeltaComplex barycentric_subdivide(const DeltaComplex& x);

/// Distinct vertices in every cell and no two cells of one dimension with the
/// same vertex set.
bool is_simplicial(const DeltaComplex& x);

/// Pure of dimension d, every (d-1)-cell a face of d-cells exactly twice
/// (counted over face positions), and the d-cells strongly connected through
/// (d-1)-cells. In dimension 0 the (-1)-cell is the empty face of every vertex.
bool is_pseudomanifold(const DeltaComplex& x);

}  // namespace scrambled
