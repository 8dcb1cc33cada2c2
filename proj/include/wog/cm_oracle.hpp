#ifndef WOG_CM_ORACLE_HPP
#define WOG_CM_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wog/errors.hpp"
#include "wog/linalg.hpp"
#include "wog/monomial_ideal.hpp"
#include "wog/simplicial.hpp"

namespace wog {

/// Result of polarization. Polarized variable k stands for copy
/// `lineage[k].second` (1-based) of original variable `lineage[k].first`.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<std::pair<Variable, Exponent>> lineage;
};

/// x^a becomes x_1 ... x_a, one fresh variable per unit of the largest
/// exponent of x among the generators.
inline Polarization polarize(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::vector<Exponent> top(ideal.ambient(), 0);
  for (const Monomial& g : ideal.generators())
    for (const auto& [x, e] : g.terms()) top[x] = std::max(top[x], e);

  Polarization p;
  std::vector<Variable> first_copy(ideal.ambient(), 0);
  for (Variable x = 0; x < ideal.ambient(); ++x) {
    first_copy[x] = static_cast<Variable>(p.lineage.size());
    // Unused variables keep a single copy so the ring only grows.
    for (Exponent j = 1; j <= std::max<Exponent>(top[x], 1); ++j) p.lineage.push_back({x, j});
  }
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& [x, e] : g.terms())
      for (Exponent j = 0; j < e; ++j) terms.push_back({static_cast<Variable>(first_copy[x] + j), 1});
    gens.emplace_back(std::move(terms));
  }
  p.ideal = MonomialIdeal(p.lineage.size(), std::move(gens));
  return p;
}

/// Replaces, variable by variable, the distinct exponents occurring in the
/// generators by their ranks 1, 2, .... The lcm lattice is unchanged, so
/// Betti numbers, height, and Cohen-Macaulayness are preserved.
inline MonomialIdeal compress_exponents(const MonomialIdeal& ideal) {
  std::vector<std::set<Exponent>> seen(ideal.ambient());
  for (const Monomial& g : ideal.generators())
    for (const auto& [x, e] : g.terms()) seen[x].insert(e);
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& [x, e] : g.terms())
      terms.push_back({x, static_cast<Exponent>(std::distance(seen[x].begin(), seen[x].find(e)) + 1)});
    gens.emplace_back(std::move(terms));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

struct OracleOptions {
  bool compress = true;
  std::size_t ambient_bound = 24;
};

/// Face whose link carries reduced homology below the link's dimension.
struct ReisnerWitness {
  VertexSet face;
  int homology_dimension;
  std::size_t rank;
};

struct OracleResult {
  bool cohen_macaulay = true;
  std::optional<ReisnerWitness> witness;
  std::size_t polarized_ambient = 0;
  std::size_t face_count = 0;
};

namespace detail {

inline constexpr std::uint64_t certification_prime = 2147483647;  // 2^31 - 1

/// Reduced homology of `c` in dimensions below dim(c): returns the first
/// dimension with nonzero rank, if any.
inline std::optional<std::pair<int, std::size_t>> low_homology(const SimplicialComplex& c,
                                                               const FieldChoice& field) {
  const int dim = c.dimension();
  if (dim <= 0) return std::nullopt;  // only H_{-1} is below, and it vanishes
  auto first_nonzero = [&](const FieldChoice& f) -> std::optional<std::pair<int, std::size_t>> {
    auto ranks = reduced_homology_ranks(c, f);
    for (int k = -1; k < dim; ++k)
      if (ranks[static_cast<std::size_t>(k + 1)] != 0)
        return std::make_pair(k, ranks[static_cast<std::size_t>(k + 1)]);
    return std::nullopt;
  };
  if (field.kind == FieldChoice::Kind::prime) return first_nonzero(field);
  // Ranks over Q are at least the ranks mod p, so vanishing homology mod p
  // implies vanishing over Q; only nonvanishing cases need exact arithmetic.
  if (!first_nonzero(FieldChoice{FieldChoice::Kind::prime, certification_prime})) return std::nullopt;
  return first_nonzero(field);
}

}  // namespace detail

/// Reisner's criterion on a complex: every link lk(F), F included the empty
/// face, has vanishing reduced homology below dim lk(F). Faces are scanned
/// from largest to smallest and the first failure is reported.
inline OracleResult reisner_check(const SimplicialComplex& c, const FieldChoice& field) {
  OracleResult result;
  result.face_count = c.face_count();
  if (c.is_void()) return result;
  for (std::size_t k = static_cast<std::size_t>(c.dimension() + 1) + 1; k-- > 0;)
    for (VertexSet f : c.faces_of_size(k)) {
      SimplicialComplex lk = c.link(f);
      if (auto bad = detail::low_homology(lk, field)) {
        result.cohen_macaulay = false;
        result.witness = ReisnerWitness{f, bad->first, bad->second};
        return result;
      }
    }
  return result;
}

/// Cohen-Macaulayness of R/I over `field`: compress exponents (optional),
/// polarize, and apply Reisner's criterion to the Stanley-Reisner complex.
/// The zero ideal gives a polynomial ring, which is Cohen-Macaulay.
inline OracleResult is_cohen_macaulay(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::rationals(),
                                      const OracleOptions& options = {}) {
  if (ideal.is_unit()) throw UnitIdeal();
  if (ideal.is_zero()) return {};
  const MonomialIdeal source = options.compress ? compress_exponents(ideal) : ideal;
  Polarization p = polarize(source);
  SimplicialComplex complex = stanley_reisner(p.ideal, options.ambient_bound);
  OracleResult r = reisner_check(complex, field);
  r.polarized_ambient = p.ideal.ambient();
  return r;
}

/// Ambient size the oracle would work in, without building anything.
inline std::size_t oracle_ambient(const MonomialIdeal& ideal, bool compress = true) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal.ambient();
  const MonomialIdeal source = compress ? compress_exponents(ideal) : ideal;
  std::vector<Exponent> top(source.ambient(), 1);
  for (const Monomial& g : source.generators())
    for (const auto& [x, e] : g.terms()) top[x] = std::max(top[x], e);
  std::size_t n = 0;
  for (Exponent e : top) n += e;
  return n;
}

}  // namespace wog

#endif  // WOG_CM_ORACLE_HPP
