#include "scrambled/homology.hpp"

#include <algorithm>
#include <sstream>

namespace scrambled {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v.is_zero(); });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimensions do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& lhs = a(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& rhs = b(k, j);
        if (!rhs.is_zero()) out(i, j) += lhs * rhs;
      }
    }
  }
  return out;
}

BoundaryMatrix boundary_matrix(const DeltaComplex& x, int n) {
  if (n < 0 || n > x.dimension()) throw Error("boundary matrix dimension out of range");
  BoundaryMatrix out;
  out.dim = n;
  if (n == 0) {
    out.entries = IntMatrix(1, x.num_cells(0));
    for (std::size_t j = 0; j < x.num_cells(0); ++j) out.entries(0, j) = 1;
    return out;
  }
  out.entries = IntMatrix(x.num_cells(n - 1), x.num_cells(n));
  for (std::size_t j = 0; j < x.num_cells(n); ++j) {
    const auto& faces = x.cells(n)[j].faces;
    for (std::size_t k = 0; k < faces.size(); ++k) {
      out.entries(faces[k], j) += k % 2 == 0 ? -1 : 1;
    }
  }
  return out;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool certificates)
      : a_(m), rows_(m.rows()), cols_(m.cols()), certificates_(certificates) {
    if (certificates_) {
      u_ = IntMatrix::identity(rows_);
      v_ = IntMatrix::identity(cols_);
    }
  }

  SmithForm run() {
    SmithForm out;
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t s = 0; s < limit; ++s) {
      std::size_t pi = 0, pj = 0;
      if (!min_entry(s, rows_, s, cols_, pi, pj)) break;
      swap_rows(s, pi);
      swap_cols(s, pj);
      settle_pivot(s);
      if (a_(s, s) < 0) negate_row(s);
      out.invariant_factors.push_back(a_(s, s));
    }
    if (certificates_) {
      out.left = std::move(u_);
      out.right = std::move(v_);
    }
    return out;
  }

 private:
  // Smallest nonzero |entry| in rows [r0, r1) x cols [c0, c1).
  bool min_entry(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1, std::size_t& pi,
                 std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const BigInt& v = a_(i, j);
        if (v.is_zero()) continue;
        const BigInt mag = abs(v);
        if (!found || mag < best) {
          best = mag;
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  // Clears row and column s and enforces divisibility of the rest by a(s,s).
  void settle_pivot(std::size_t s) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = s + 1; i < rows_; ++i) {
        if (a_(i, s).is_zero()) continue;
        const BigInt q = a_(i, s) / a_(s, s);
        if (!q.is_zero()) add_row(i, s, -q);
        if (!a_(i, s).is_zero()) clean = false;
      }
      for (std::size_t j = s + 1; j < cols_; ++j) {
        if (a_(s, j).is_zero()) continue;
        const BigInt q = a_(s, j) / a_(s, s);
        if (!q.is_zero()) add_col(j, s, -q);
        if (!a_(s, j).is_zero()) clean = false;
      }
      if (!clean) {
        std::size_t pi = s, pj = s;
        BigInt best = abs(a_(s, s));
        for (std::size_t i = s + 1; i < rows_; ++i) {
          if (!a_(i, s).is_zero() && abs(a_(i, s)) < best) {
            best = abs(a_(i, s));
            pi = i;
            pj = s;
          }
        }
        for (std::size_t j = s + 1; j < cols_; ++j) {
          if (!a_(s, j).is_zero() && abs(a_(s, j)) < best) {
            best = abs(a_(s, j));
            pi = s;
            pj = j;
          }
        }
        swap_rows(s, pi);
        swap_cols(s, pj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = s + 1; i < rows_ && divisible; ++i) {
        for (std::size_t j = s + 1; j < cols_; ++j) {
          if (!a_(i, j).is_zero() && BigInt(a_(i, j) % a_(s, s)) != 0) {
            add_row(s, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  // row_target += factor * row_source
  void add_row(std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!a_(source, j).is_zero()) a_(target, j) += factor * a_(source, j);
    }
    if (certificates_) {
      for (std::size_t j = 0; j < rows_; ++j) {
        if (!u_(source, j).is_zero()) u_(target, j) += factor * u_(source, j);
      }
    }
  }

  // col_target += factor * col_source
  void add_col(std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!a_(i, source).is_zero()) a_(i, target) += factor * a_(i, source);
    }
    if (certificates_) {
      for (std::size_t i = 0; i < cols_; ++i) {
        if (!v_(i, source).is_zero()) v_(i, target) += factor * v_(i, source);
      }
    }
  }

  void swap_rows(std::size_t r, std::size_t t) {
    if (r == t) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_(r, j), a_(t, j));
    if (certificates_) {
      for (std::size_t j = 0; j < rows_; ++j) std::swap(u_(r, j), u_(t, j));
    }
  }

  void swap_cols(std::size_t c, std::size_t t) {
    if (c == t) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(a_(i, c), a_(i, t));
    if (certificates_) {
      for (std::size_t i = 0; i < cols_; ++i) std::swap(v_(i, c), v_(i, t));
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) a_(r, j) = -a_(r, j);
    if (certificates_) {
      for (std::size_t j = 0; j < rows_; ++j) u_(r, j) = -u_(r, j);
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  std::size_t rows_;
  std::size_t cols_;
  bool certificates_;
};

std::int64_t signed_term(std::size_t dim, std::size_t value) {
  const auto v = static_cast<std::int64_t>(value);
  return dim % 2 == 0 ? v : -v;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_certificates) {
  return SmithReducer(m, with_certificates).run();
}

bool verify_smith_certificate(const IntMatrix& m, const SmithForm& snf) {
  if (snf.left.rows() != m.rows() || snf.left.cols() != m.rows()) return false;
  if (snf.right.rows() != m.cols() || snf.right.cols() != m.cols()) return false;
  for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
    if (snf.invariant_factors[i] <= 0) return false;
    if (i > 0 && BigInt(snf.invariant_factors[i] % snf.invariant_factors[i - 1]) != 0) return false;
  }
  const IntMatrix d = multiply(multiply(snf.left, m), snf.right);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const bool on_diag = i == j && i < snf.invariant_factors.size();
      if (on_diag ? d(i, j) != snf.invariant_factors[i] : !d(i, j).is_zero()) return false;
    }
  }
  return true;
}

const HomologyGroup& HomologyProfile::operator[](int dim) const {
  for (const HomologyGroup& g : groups) {
    if (g.dim == dim) return g;
  }
  static const HomologyGroup kTrivial{};
  return kTrivial;
}

bool HomologyProfile::all_trivial() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

bool HomologyProfile::has_torsion() const {
  return std::any_of(groups.begin(), groups.end(),
                     [](const HomologyGroup& g) { return !g.torsion.empty(); });
}

std::int64_t HomologyProfile::euler() const {
  std::int64_t e = 0;
  for (const HomologyGroup& g : groups) e += signed_term(static_cast<std::size_t>(g.dim), g.betti);
  return e;
}

std::string HomologyProfile::str() const {
  std::ostringstream os;
  bool any = false;
  for (const HomologyGroup& g : groups) {
    if (g.trivial()) continue;
    if (any) os << ", ";
    any = true;
    os << "H~_" << g.dim << " = ";
    bool first = true;
    if (g.betti > 0) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      first = false;
    }
    for (const BigInt& t : g.torsion) {
      if (!first) os << " + ";
      os << "Z/" << t;
      first = false;
    }
  }
  if (!any) os << "all reduced homology vanishes";
  return os.str();
}

HomologyProfile reduced_homology(const DeltaComplex& x) {
  HomologyAudit audit;
  return reduced_homology(x, audit);
}

HomologyProfile reduced_homology(const DeltaComplex& x, HomologyAudit& audit) {
  HomologyProfile profile;
  const int d = x.dimension();
  if (d < 0) return profile;

  std::vector<BoundaryMatrix> boundaries;
  std::vector<SmithForm> forms;
  for (int n = 0; n <= d; ++n) {
    boundaries.push_back(boundary_matrix(x, n));
    forms.push_back(smith_normal_form(boundaries.back().entries, true));
    ++audit.matrices;
    if (!verify_smith_certificate(boundaries.back().entries, forms.back())) {
      audit.certificates = false;
    }
    if (n > 0 && !multiply(boundaries[n - 1].entries, boundaries[n].entries).is_zero()) {
      audit.chain_complex = false;
    }
  }
  for (int n = 0; n <= d; ++n) {
    HomologyGroup g;
    g.dim = n;
    const std::size_t cycles = x.num_cells(n) - forms[n].rank();
    const std::size_t bounds = n < d ? forms[n + 1].rank() : 0;
    g.betti = cycles - bounds;
    if (n < d) {
      for (const BigInt& f : forms[n + 1].invariant_factors) {
        if (f > 1) g.torsion.push_back(f);
      }
    }
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

std::string boundary_matrix_csv(const DeltaComplex& x, const BoundaryMatrix& m) {
  std::ostringstream os;
  const auto& cols = x.cells(m.dim);
  os << "cell";
  for (const Cell& c : cols) os << ',' << c.label;
  os << '\n';
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    os << (m.dim == 0 ? std::string("()") : x.cells(m.dim - 1)[i].label);
    for (std::size_t j = 0; j < m.entries.cols(); ++j) os << ',' << m.entries(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace scrambled
