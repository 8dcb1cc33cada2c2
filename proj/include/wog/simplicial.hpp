#ifndef WOG_SIMPLICIAL_HPP
#define WOG_SIMPLICIAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "wog/errors.hpp"
#include "wog/linalg.hpp"
#include "wog/monomial_ideal.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

/// Finite simplicial complex on a ground set of at most 64 vertices, stored
/// as its full face list grouped by face size.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the complex from a downward-closed family; throws otherwise.
  SimplicialComplex(std::size_t ground_count, std::vector<VertexSet> faces)
      : ground_count_(ground_count) {
    if (ground_count > VertexSet::capacity)
      throw BoundExceeded("simplicial ground set", VertexSet::capacity, ground_count);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (VertexSet f : faces) add_face(f);
    for (VertexSet f : faces)
      for (Vertex v : f)
        if (!contains(f.without(v)))
          throw ValidationError("downward-closed", "a facet boundary face is missing");
  }

  /// Complex generated by the given faces (all their subsets).
  static SimplicialComplex generated_by(std::size_t ground_count, const std::vector<VertexSet>& generators) {
    std::vector<VertexSet> all;
    for (VertexSet f : generators) {
      // Enumerate subsets of f.
      std::uint64_t bits = f.bits();
      std::uint64_t sub = bits;
      while (true) {
        all.push_back(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & bits;
      }
    }
    return SimplicialComplex(ground_count, std::move(all));
  }

  std::size_t ground_count() const { return ground_count_; }
  bool is_void() const { return by_size_.empty(); }

  /// -1 for {empty face}; undefined for the void complex.
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }

  const std::vector<VertexSet>& faces_of_size(std::size_t k) const {
    static const std::vector<VertexSet> none;
    return k < by_size_.size() ? by_size_[k] : none;
  }

  std::size_t face_count() const {
    std::size_t n = 0;
    for (const auto& level : by_size_) n += level.size();
    return n;
  }

  std::vector<VertexSet> faces() const {
    std::vector<VertexSet> out;
    for (const auto& level : by_size_) out.insert(out.end(), level.begin(), level.end());
    return out;
  }

  bool contains(VertexSet f) const { return index_.count(f.bits()) != 0; }

  /// Position of `f` within faces_of_size(|f|).
  std::size_t index_of(VertexSet f) const { return index_.at(f.bits()); }

  std::vector<VertexSet> facets() const {
    std::vector<VertexSet> out;
    for (const auto& level : by_size_)
      for (VertexSet f : level) {
        bool maximal = true;
        for (Vertex v = 0; v < ground_count_ && maximal; ++v)
          if (!f.contains(v) && contains(f.with(v))) maximal = false;
        if (maximal) out.push_back(f);
      }
    return out;
  }

  bool is_pure() const {
    auto fs = facets();
    return std::all_of(fs.begin(), fs.end(), [&](VertexSet f) { return f.size() == fs.front().size(); });
  }

  /// lk(F) = { G : G cap F empty, G cup F a face }.
  SimplicialComplex link(VertexSet face) const {
    SimplicialComplex out;
    out.ground_count_ = ground_count_;
    if (!contains(face)) return out;
    for (std::size_t k = face.size(); k < by_size_.size(); ++k)
      for (VertexSet h : by_size_[k])
        if (face.is_subset_of(h)) out.add_face(h - face);
    return out;
  }

 private:
  void add_face(VertexSet f) {
    std::size_t k = f.size();
    if (by_size_.size() <= k) by_size_.resize(k + 1);
    index_.emplace(f.bits(), by_size_[k].size());
    by_size_[k].push_back(f);
  }

  std::size_t ground_count_ = 0;
  std::vector<std::vector<VertexSet>> by_size_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Faces are the variable sets containing no generator's support.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& ideal, std::size_t ambient_bound = 24) {
  if (ideal.ambient() > ambient_bound)
    throw BoundExceeded("Stanley-Reisner ambient", ambient_bound, ideal.ambient());
  if (!ideal.is_squarefree()) throw NotSquarefree();
  std::vector<VertexSet> nonfaces;
  for (const Monomial& g : ideal.generators()) nonfaces.push_back(g.support());
  const std::size_t n = ideal.ambient();

  std::vector<VertexSet> faces;
  if (!ideal.is_unit()) {
    std::function<void(VertexSet, Vertex)> grow = [&](VertexSet face, Vertex next) {
      faces.push_back(face);
      for (Vertex v = next; v < n; ++v) {
        VertexSet bigger = face.with(v);
        bool ok = std::none_of(nonfaces.begin(), nonfaces.end(),
                               [&](VertexSet s) { return s.is_subset_of(bigger); });
        if (ok) grow(bigger, v + 1);
      }
    };
    grow(VertexSet{}, 0);
  }
  return SimplicialComplex(n, std::move(faces));
}

/// Boundary map from faces of size k to faces of size k - 1 (k >= 1), with
/// the alternating sign convention on sorted vertex lists.
inline SparseMatrix boundary_matrix(const SimplicialComplex& c, std::size_t k) {
  SparseMatrix m;
  const auto& source = c.faces_of_size(k);
  m.rows = source.size();
  m.cols = c.faces_of_size(k - 1).size();
  m.entries.reserve(source.size());
  for (VertexSet f : source) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    std::int64_t sign = 1;
    for (Vertex v : f) {
      row.push_back({static_cast<std::uint32_t>(c.index_of(f.without(v))), sign});
      sign = -sign;
    }
    std::sort(row.begin(), row.end());
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// Ranks of all boundary maps; entry k is rank(d_k : C_{k-1} -> C_{k-2}) in
/// size indexing, i.e. faces of size k to size k - 1.
inline std::vector<std::size_t> boundary_ranks(const SimplicialComplex& c, const FieldChoice& field) {
  const std::size_t top = static_cast<std::size_t>(c.dimension() + 2);
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) ranks[k] = rank(boundary_matrix(c, k), field);
  return ranks;
}

/// Reduced homology ranks over `field`, indexed by dimension -1 .. dim(c).
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c,
                                                       const FieldChoice& field,
                                                       std::size_t face_bound = 2'000'000) {
  if (c.is_void()) return {};
  if (c.face_count() > face_bound) throw BoundExceeded("face count", face_bound, c.face_count());
  const std::size_t top = static_cast<std::size_t>(c.dimension() + 2);
  std::vector<std::size_t> ranks = boundary_ranks(c, field);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < top; ++k) {
    // Faces of size k are (k-1)-dimensional.
    std::size_t chains = c.faces_of_size(k).size();
    std::size_t cycles = chains - ranks[k];
    std::size_t boundaries = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    out.push_back(cycles - boundaries);
  }
  return out;
}

}  // namespace wog

#endif  // WOG_SIMPLICIAL_HPP
