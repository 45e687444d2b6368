#include "dmt/vector_field.hpp"

#include <algorithm>
#include <map>

#include "dmt/error.hpp"

namespace dmt {

DiscreteVectorField::DiscreteVectorField(std::vector<VectorPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

void DiscreteVectorField::add(Simplex face, Simplex coface) {
  VectorPair p{std::move(face), std::move(coface)};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, std::move(p));
}

bool DiscreteVectorField::contains(const VectorPair& pair) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), pair);
}

ValidationReport validate_dvf(const SimplicialComplex& complex, const DiscreteVectorField& field) {
  ValidationReport report;
  std::map<Simplex, std::vector<const VectorPair*>> uses;
  for (const auto& p : field.pairs()) {
    complex.index_of(p.face);
    complex.index_of(p.coface);
    if (p.face.dim() + 1 != p.coface.dim() || !p.face.is_proper_face_of(p.coface)) {
      report.violations.push_back({Violation::Kind::not_a_facet, p, std::nullopt,
                                   p.face.label() + " is not a facet of " + p.coface.label()});
    }
    uses[p.face].push_back(&p);
    uses[p.coface].push_back(&p);
  }
  for (const auto& [simplex, pairs] : uses) {
    if (pairs.size() < 2) continue;
    std::string arrows;
    for (const auto* p : pairs) {
      arrows += (arrows.empty() ? "" : ", ") + ("(" + p->face.label() + ", " + p->coface.label() + ")");
    }
    report.violations.push_back({Violation::Kind::matched_twice, *pairs[1], simplex,
                                 simplex.label() + " is matched more than once: " + arrows});
  }
  return report;
}

std::string Trajectory::to_string() const {
  const bool co = kind == TrajectoryKind::co_to_cell || kind == TrajectoryKind::co_to_coface;
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      // Odd positions are reached by an inclusion step, even ones by a matched arrow.
      if (co) out += i % 2 == 1 ? " <- " : " <-< ";
      else out += i % 2 == 1 ? " -> " : " >-> ";
    }
    out += cells[i].label();
  }
  return out;
}

int trajectory_weight(const std::vector<Simplex>& cells, TrajectoryKind kind) {
  const bool co = kind == TrajectoryKind::co_to_cell || kind == TrajectoryKind::co_to_coface;
  // Pair up (outer, inner) incidences: V-trajectories take <beta, alpha>, co-trajectories <tau, beta>.
  auto inc = [co](const Simplex& a, const Simplex& b) {
    return co ? incidence(b, a) : incidence(a, b);
  };
  int w = 1;
  std::size_t i = 1;
  for (; i + 1 < cells.size(); i += 2) {
    w *= -inc(cells[i - 1], cells[i]) * inc(cells[i + 1], cells[i]);
  }
  if (i < cells.size()) w *= inc(cells[i - 1], cells[i]);
  return w;
}

Matching::Matching(const SimplicialComplex& complex, DiscreteVectorField field)
    : complex_(&complex), field_(std::move(field)) {
  auto report = validate_dvf(complex, field_);
  if (!report.ok()) throw InvalidField(report.violations.front().message);

  const int d = complex.dim();
  up_.resize(d + 1);
  down_.resize(d + 1);
  for (int q = 0; q <= d; ++q) {
    up_[q].assign(complex.count(q), none);
    down_[q].assign(complex.count(q), none);
  }
  for (const auto& p : field_.pairs()) {
    const int q = p.face.dim();
    const std::size_t a = complex.index_of(p.face);
    const std::size_t b = complex.index_of(p.coface);
    up_[q][a] = b;
    down_[q + 1][b] = a;
  }
  find_closed_trajectory();
}

std::size_t Matching::up(int q, std::size_t i) const {
  if (q < 0 || q >= static_cast<int>(up_.size())) return none;
  return up_[q][i];
}

std::size_t Matching::down(int q, std::size_t i) const {
  if (q < 0 || q >= static_cast<int>(down_.size())) return none;
  return down_[q][i];
}

std::vector<std::size_t> Matching::critical_indices(int q) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < complex_->count(q); ++i) {
    if (is_critical(q, i)) out.push_back(i);
  }
  return out;
}

void Matching::find_closed_trajectory() {
  const auto& c = *complex_;
  for (int q = 1; q <= c.dim(); ++q) {
    const std::size_t n = c.count(q);
    // Matched digraph on q-simplices: b -> up(face) through every face except b's partner.
    enum Color : unsigned char { white, gray, black };
    std::vector<Color> color(n, white);
    struct Frame {
      std::size_t cell;
      std::size_t next_pos;
      std::size_t via_face;  // face used to leave this cell towards the next frame
    };
    for (std::size_t root = 0; root < n; ++root) {
      if (color[root] != white || down_[q][root] == none) continue;
      std::vector<Frame> stack{{root, 0, none}};
      color[root] = gray;
      while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& faces = c.faces(q, top.cell);
        if (top.next_pos == faces.size()) {
          color[top.cell] = black;
          stack.pop_back();
          continue;
        }
        const std::size_t f = faces[top.next_pos++];
        if (f == down_[q][top.cell]) continue;
        const std::size_t next = up_[q - 1][f];
        if (next == none) continue;
        top.via_face = f;
        if (color[next] == gray) {
          Trajectory t;
          t.kind = TrajectoryKind::to_cell;
          auto start = std::find_if(stack.begin(), stack.end(),
                                    [&](const Frame& fr) { return fr.cell == next; });
          for (auto it = start; it != stack.end(); ++it) {
            t.cells.push_back(c.simplex(q, it->cell));
            t.cells.push_back(c.simplex(q - 1, it->via_face));
          }
          t.cells.push_back(c.simplex(q, next));
          t.weight = trajectory_weight(t.cells, t.kind);
          closed_ = std::move(t);
          return;
        }
        if (color[next] == white) {
          color[next] = gray;
          stack.push_back({next, 0, none});
        }
      }
    }
  }
}

GradientCheck is_gradient(const SimplicialComplex& complex, const DiscreteVectorField& field) {
  Matching m(complex, field);
  return {m.is_gradient(), m.closed_trajectory()};
}

std::vector<Simplex> critical_simplices(const Matching& matching, int q) {
  std::vector<Simplex> out;
  for (auto i : matching.critical_indices(q)) out.push_back(matching.complex().simplex(q, i));
  return out;
}

std::vector<Simplex> critical_simplices(const SimplicialComplex& complex,
                                        const DiscreteVectorField& field, int q) {
  return critical_simplices(Matching(complex, field), q);
}

std::vector<std::string> critical_labels(const Matching& matching, int q) {
  std::vector<std::string> out;
  for (auto i : matching.critical_indices(q)) out.push_back(matching.complex().simplex(q, i).label());
  return out;
}

}  // namespace dmt
