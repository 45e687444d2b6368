#include "dmt/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dmt/error.hpp"

namespace dmt {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw MalformedFacet("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) {
    throw MalformedFacet("negative vertex id " + std::to_string(vertices_.front()));
  }
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw MalformedFacet("vertex " + std::to_string(*dup) + " repeated in facet");
  }
}

Simplex Simplex::face(std::size_t i) const {
  Simplex f;
  f.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != i) f.vertices_.push_back(vertices_[k]);
  }
  return f;
}

bool Simplex::is_proper_face_of(const Simplex& other) const {
  return vertices_.size() < other.vertices_.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::string Simplex::label() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + "]";
}

Simplex parse_simplex_label(const std::string& label) {
  if (label.size() < 2 || label.front() != '[' || label.back() != ']') {
    throw ParseError("not a simplex label: '" + label + "'");
  }
  std::vector<Vertex> vertices;
  std::stringstream in(label.substr(1, label.size() - 2));
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      vertices.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw ParseError("bad vertex '" + token + "' in label '" + label + "'");
    }
  }
  return Simplex(std::move(vertices));
}

int incidence(const Simplex& sigma, const Simplex& tau) {
  const auto& s = sigma.vertices();
  const auto& t = tau.vertices();
  if (s.size() != t.size() + 1) return 0;
  // Find the single vertex of sigma missing from tau.
  std::size_t i = 0;
  while (i < t.size() && s[i] == t[i]) ++i;
  for (std::size_t k = i; k < t.size(); ++k) {
    if (s[k + 1] != t[k]) return 0;
  }
  return i % 2 == 0 ? 1 : -1;
}

std::size_t SimplicialComplex::count(int q) const {
  if (q < 0 || q > dim()) return 0;
  return cells_[q].size();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : cells_) f.push_back(level.size());
  return f;
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& level : cells_) n += level.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> none;
  if (q < 0 || q > dim()) return none;
  return cells_[q];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  const int q = s.dim();
  if (q < 0 || q > dim()) return std::nullopt;
  const auto& level = cells_[q];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  if (auto i = find(s)) return *i;
  throw UnknownSimplex("simplex " + s.label() + " is not in the complex");
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int q = 0; q <= dim(); ++q) {
    for (std::size_t i = 0; i < cells_[q].size(); ++i) {
      if (q == dim() || cofaces_[q][i].empty()) out.push_back(cells_[q][i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets) {
  if (facets.empty()) throw MalformedFacet("facet list is empty");

  std::vector<std::set<Simplex>> levels;
  for (const auto& f : facets) {
    Simplex s(f);
    const auto q = static_cast<std::size_t>(s.dim());
    if (levels.size() <= q) levels.resize(q + 1);
    levels[q].insert(std::move(s));
  }
  for (std::size_t q = levels.size() - 1; q > 0; --q) {
    for (const auto& s : levels[q]) {
      for (std::size_t i = 0; i <= q; ++i) levels[q - 1].insert(s.face(i));
    }
  }

  SimplicialComplex c;
  for (auto& level : levels) c.cells_.emplace_back(level.begin(), level.end());

  const int d = c.dim();
  c.faces_.resize(d + 1);
  c.cofaces_.resize(d + 1);
  c.faces_[0].resize(c.cells_[0].size());
  for (int q = 0; q <= d; ++q) c.cofaces_[q].resize(c.cells_[q].size());
  for (int q = 1; q <= d; ++q) {
    c.faces_[q].resize(c.cells_[q].size());
    for (std::size_t i = 0; i < c.cells_[q].size(); ++i) {
      auto& faces = c.faces_[q][i];
      faces.reserve(q + 1);
      for (std::size_t pos = 0; pos <= static_cast<std::size_t>(q); ++pos) {
        const std::size_t f = *c.find(c.cells_[q][i].face(pos));
        faces.push_back(f);
        c.cofaces_[q - 1][f].push_back({i, pos});
      }
    }
  }
  return c;
}

SimplicialComplex matching_complex(int n) {
  if (n < 2) throw DomainError("matching complex needs n >= 2, got " + std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }

  // Depth-first over edge ids in increasing order; each maximal branch is a matching.
  std::vector<std::vector<Vertex>> matchings;
  std::vector<Vertex> current;
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t start) -> void {
    bool extended = false;
    for (std::size_t e = start; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (used[a] || used[b]) continue;
      extended = true;
      used[a] = used[b] = true;
      current.push_back(static_cast<Vertex>(e));
      self(self, e + 1);
      current.pop_back();
      used[a] = used[b] = false;
    }
    if (!extended && !current.empty()) matchings.push_back(current);
  };
  extend(extend, 0);
  return build_complex(matchings);
}

std::vector<std::string> simplex_labels(const SimplicialComplex& complex, int q) {
  std::vector<std::string> labels;
  for (const auto& s : complex.simplices(q)) labels.push_back(s.label());
  return labels;
}

IntegerMatrix chain_boundary_matrix(const SimplicialComplex& complex, int q) {
  IntegerMatrix m(simplex_labels(complex, q - 1), simplex_labels(complex, q));
  if (q < 1 || q > complex.dim()) return m;
  for (std::size_t j = 0; j < complex.count(q); ++j) {
    const auto& faces = complex.faces(q, j);
    for (std::size_t pos = 0; pos < faces.size(); ++pos) {
      m.at(faces[pos], j) = pos % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

IntegerMatrix cochain_coboundary_matrix(const SimplicialComplex& complex, int q) {
  return chain_boundary_matrix(complex, q).transpose();
}

}  // namespace dmt
