// Exact integral homology of finite Δ-complexes through Smith normal form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scrambled/complex.hpp"

namespace scrambled {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Product skipping zero entries of the left factor.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// ∂_n with rows the (n-1)-cells and columns the n-cells; entry (σ, τ) is
/// [σ:τ]. For n = 0 this is the augmentation: one row of ones.
struct BoundaryMatrix {
  int dim = 0;
  IntMatrix entries;
};

/// Requires 0 <= n <= dim X.
BoundaryMatrix boundary_matrix(const DeltaComplex& x, int n);

struct SmithForm {
  /// d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> invariant_factors;
  /// Unimodular certificates with U * M * V = diag(d_1, ..., d_r, 0, ...).
  /// Left empty when certificates were not requested.
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m, bool with_certificates = true);

/// Checks U * M * V against the diagonal form and the divisibility chain.
bool verify_smith_certificate(const IntMatrix& m, const SmithForm& snf);

struct HomologyGroup {
  int dim = 0;
  std::size_t betti = 0;
  /// Invariant factors >= 2, ascending.
  std::vector<BigInt> torsion;

  bool trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced homology H̃_n for n = 0 .. dim X.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  const HomologyGroup& operator[](int dim) const;
  bool all_trivial() const;
  bool has_torsion() const;
  /// Σ (-1)^n betti_n, which equals the reduced Euler characteristic.
  std::int64_t euler() const;
  /// E.g. "H̃_1 = Z, others 0". Uses ASCII "H~".
  std::string str() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Side checks gathered while computing homology.
struct HomologyAudit {
  std::size_t matrices = 0;
  /// ∂_{n} ∘ ∂_{n+1} == 0 for every n, augmentation included.
  bool chain_complex = true;
  /// Every Smith normal form certificate verified.
  bool certificates = true;
};

HomologyProfile reduced_homology(const DeltaComplex& x);
HomologyProfile reduced_homology(const DeltaComplex& x, HomologyAudit& audit);

/// CSV rendering: a header row of column-cell labels, then one row per
/// row-cell led by its label.
std::string boundary_matrix_csv(const DeltaComplex& x, const BoundaryMatrix& m);

}  // namespace scrambled
