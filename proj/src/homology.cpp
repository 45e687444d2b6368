#include "dmt/homology.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "dmt/error.hpp"
#include "dmt/morse.hpp"

namespace dmt {

namespace {

using Dense = std::vector<std::vector<Integer>>;

// Position of the nonzero entry of least magnitude in the block [from, rows) x [from, cols).
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const Dense& a, std::size_t from) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = from; i < a.size(); ++i) {
    for (std::size_t j = from; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      if (!best || abs(a[i][j]) < abs(a[best->first][best->second])) {
        best = {i, j};
        if (abs(a[i][j]) == 1) return best;
      }
    }
  }
  return best;
}

void swap_cols(Dense& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  for (auto& row : a) std::swap(row[x], row[y]);
}

// Clears row t and column t beyond the pivot. Returns false if some remainder
// survived, in which case a smaller entry has been moved onto the pivot.
bool clear_cross(Dense& a, std::size_t t) {
  const std::size_t rows = a.size(), cols = a[0].size();
  bool clean = true;
  Integer q;
  for (std::size_t i = t + 1; i < rows; ++i) {
    if (a[i][t] == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
    if (q != 0) {
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
    }
    if (a[i][t] != 0) clean = false;
  }
  for (std::size_t j = t + 1; j < cols; ++j) {
    if (a[t][j] == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
    if (q != 0) {
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
    }
    if (a[t][j] != 0) clean = false;
  }
  if (clean) return true;

  std::size_t bi = t, bj = t;
  for (std::size_t i = t + 1; i < rows; ++i) {
    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
  }
  for (std::size_t j = t + 1; j < cols; ++j) {
    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
  }
  std::swap(a[t], a[bi]);
  swap_cols(a, t, bj);
  return false;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.num_rows(), cols = m.num_cols();
  const std::size_t n = std::min(rows, cols);
  SmithForm form;
  form.diagonal.assign(n, 0);
  if (n == 0) return form;

  Dense a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  }

  std::size_t t = 0;
  for (; t < n; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    std::swap(a[t], a[pivot->first]);
    swap_cols(a, t, pivot->second);
    for (;;) {
      if (!clear_cross(a, t)) continue;
      // The pivot must divide the rest of the block; fold an offending row in otherwise.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (!bad) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad][j];
    }
    form.diagonal[t] = abs(a[t][t]);
  }
  form.rank = t;
  return form;
}

std::string HomologyGroup::to_string() const {
  std::string out;
  if (betti > 0) out = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

HomologyGroup homology_of_pair(const IntegerMatrix& next, const IntegerMatrix& current) {
  if (current.num_cols() != next.num_rows()) {
    throw ChainLawError("boundary maps do not compose: d_q has " +
                        std::to_string(current.num_cols()) + " columns, d_{q+1} has " +
                        std::to_string(next.num_rows()) + " rows");
  }
  if (!multiply(current, next).is_zero()) {
    throw ChainLawError("d_q * d_{q+1} is not zero");
  }
  const SmithForm image = smith_normal_form(next);
  const std::size_t kernel = current.num_cols() - smith_normal_form(current).rank;
  HomologyGroup h;
  h.betti = kernel - image.rank;
  for (const auto& d : image.diagonal) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

HomologyGroup simplicial_homology(const SimplicialComplex& complex, int q) {
  return homology_of_pair(chain_boundary_matrix(complex, q + 1), chain_boundary_matrix(complex, q));
}

HomologyGroup morse_homology(const Matching& matching, int q) {
  return homology_of_pair(morse_boundary_matrix(matching, q + 1), morse_boundary_matrix(matching, q));
}

}  // namespace dmt
