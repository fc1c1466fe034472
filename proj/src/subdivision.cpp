#include <cstdint>
#include <map>
#include <tuple>

#include "scrambled/complex.hpp"

namespace scrambled {

namespace {

using Mask = std::uint32_t;
// Increasing chain A_0 ⊊ ... ⊊ A_n of vertex-position subsets of a cell.
using Chain = std::vector<Mask>;
using SdKey = std::tuple<int, std::size_t, Chain>;

// Chains of nonempty subsets ending at `full`, listed innermost-first.
void chains_below(Mask top, Chain& partial, std::vector<Chain>& out) {
  Chain increasing(partial.rbegin(), partial.rend());
  out.push_back(increasing);
  // Proper nonempty subsets of `top`.
  for (Mask s = (top - 1) & top; s != 0; s = (s - 1) & top) {
    partial.push_back(s);
    chains_below(s, partial, out);
    partial.pop_back();
  }
}

// Re-expresses `m` in the coordinates of the face spanned by `span`.
Mask compress(Mask m, Mask span) {
  Mask out = 0;
  int bit = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(span >> i & 1u)) continue;
    if (m >> i & 1u) out |= Mask{1} << bit;
    ++bit;
  }
  return out;
}

std::string render(const Chain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += '<';
    bool first = true;
    for (int b = 0; b < 32; ++b) {
      if (!(chain[i] >> b & 1u)) continue;
      if (!first) out += '.';
      out += std::to_string(b);
      first = false;
    }
  }
  return out;
}

CellRef face_spanned(const DeltaComplex& x, CellRef tau, Mask span) {
  Injection f;
  f.codomain_size = static_cast<std::size_t>(tau.dim) + 1;
  for (std::size_t i = 0; i < f.codomain_size; ++i) {
    if (span >> i & 1u) f.image.push_back(i);
  }
  return x.boundary(tau, f);
}

}  // namespace

DeltaComplex barycentric_subdivide(const DeltaComplex& x) {
  if (x.dimension() >= 31) throw Error("subdivision supports cells of dimension below 31");
  std::vector<std::map<SdKey, std::size_t>> index(static_cast<std::size_t>(x.dimension() + 1));
  for (const CellRef tau : x.all_cells()) {
    const Mask full = (Mask{1} << (tau.dim + 1)) - 1;
    Chain partial{full};
    std::vector<Chain> chains;
    chains_below(full, partial, chains);
    for (Chain& c : chains) {
      const std::size_t n = c.size() - 1;
      index[n].emplace(SdKey{tau.dim, tau.index, std::move(c)}, 0);
    }
  }
  std::vector<std::vector<Cell>> cells(index.size());
  for (std::size_t n = 0; n < index.size(); ++n) {
    std::size_t i = 0;
    for (auto& [key, id] : index[n]) id = i++;
    cells[n].resize(index[n].size());
  }
  for (std::size_t n = 0; n < index.size(); ++n) {
    for (const auto& [key, id] : index[n]) {
      const auto& [dim, idx, chain] = key;
      const CellRef tau{dim, idx};
      Cell c;
      c.label = x.label(tau) + "|" + render(chain);
      if (n > 0) {
        for (std::size_t k = 0; k < n; ++k) {
          Chain shorter = chain;
          shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
          c.faces.push_back(index[n - 1].at(SdKey{dim, idx, std::move(shorter)}));
        }
        const Mask span = chain[n - 1];
        const CellRef rho = face_spanned(x, tau, span);
        Chain rerooted;
        for (std::size_t k = 0; k < n; ++k) rerooted.push_back(compress(chain[k], span));
        c.faces.push_back(index[n - 1].at(SdKey{rho.dim, rho.index, std::move(rerooted)}));
      }
      cells[n][id] = std::move(c);
    }
  }
  return DeltaComplex(std::move(cells));
}

}  // namespace scrambled
