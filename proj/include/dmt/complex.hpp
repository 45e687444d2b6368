#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dmt/matrix.hpp"

namespace dmt {

using Vertex = int;

/// A simplex stored with its canonical orientation: vertices strictly increasing.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices. Throws MalformedFacet on an empty list, a repeated
  /// vertex, or a negative id.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// The face with the i-th vertex removed, inheriting the induced orientation.
  Simplex face(std::size_t i) const;
  bool is_proper_face_of(const Simplex& other) const;

  /// "[0,1,2]"
  std::string label() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Parses the "[0,1,2]" form produced by Simplex::label().
Simplex parse_simplex_label(const std::string& label);

/// (-1)^i when tau is sigma with its i-th vertex removed, 0 otherwise.
int incidence(const Simplex& sigma, const Simplex& tau);

/// Handle of a simplex inside a complex.
struct CellId {
  int dim = 0;
  std::size_t index = 0;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// A codimension-one coface together with the position of the face inside it,
/// so the incidence number is (-1)^position.
struct CofaceEntry {
  std::size_t coface;
  std::size_t position;
};

/// Finite downward-closed simplex family. Immutable after construction; simplices
/// of each dimension are sorted lexicographically.
class SimplicialComplex {
 public:
  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int q) const;
  std::vector<std::size_t> f_vector() const;
  std::size_t size() const;

  const std::vector<Simplex>& simplices(int q) const;
  const Simplex& simplex(int q, std::size_t index) const { return cells_[q][index]; }
  const Simplex& simplex(CellId id) const { return cells_[id.dim][id.index]; }

  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }
  /// Throws UnknownSimplex when absent.
  std::size_t index_of(const Simplex& s) const;

  /// Index (in dimension q-1) of the face obtained by dropping vertex `position`.
  std::size_t face_index(int q, std::size_t index, std::size_t position) const {
    return faces_[q][index][position];
  }
  const std::vector<std::size_t>& faces(int q, std::size_t index) const {
    return faces_[q][index];
  }
  const std::vector<CofaceEntry>& cofaces(int q, std::size_t index) const {
    return cofaces_[q][index];
  }

  /// Maximal simplices in canonical order.
  std::vector<Simplex> facets() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.cells_ == b.cells_;
  }

 private:
  friend SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets);

  std::vector<std::vector<Simplex>> cells_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::vector<std::vector<CofaceEntry>>> cofaces_;
};

/// Downward closure of the given facets. Throws MalformedFacet on an empty
/// facet list, an empty facet, or a facet with a repeated vertex.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets);

/// Matching complex of K_n: vertices are the edges (i,j), i<j, numbered in
/// lexicographic order; simplices are sets of pairwise disjoint edges.
SimplicialComplex matching_complex(int n);

/// Matrix of the simplicial boundary map C_q -> C_{q-1}. Rows are the
/// (q-1)-simplices, columns the q-simplices. Out-of-range q gives empty axes.
IntegerMatrix chain_boundary_matrix(const SimplicialComplex& complex, int q);

/// Matrix of the coboundary C^{q-1} -> C^q: the transpose of chain_boundary_matrix.
IntegerMatrix cochain_coboundary_matrix(const SimplicialComplex& complex, int q);

/// Labels of the q-simplices in canonical order ("[0,1]", ...). Empty when q is out of range.
std::vector<std::string> simplex_labels(const SimplicialComplex& complex, int q);

}  // namespace dmt
