#ifndef WOG_MONOMIAL_IDEAL_HPP
#define WOG_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wog/errors.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

using Variable = std::uint32_t;
using Exponent = std::uint64_t;

/// Monomial stored sparsely as (variable, exponent) pairs sorted by variable,
/// with no zero exponents. The empty monomial is 1.
class Monomial {
 public:
  using Term = std::pair<Variable, Exponent>;

  Monomial() = default;

  Monomial(std::initializer_list<Term> terms) : Monomial(std::vector<Term>(terms)) {}

  explicit Monomial(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end());
    for (const Term& t : terms) {
      if (t.second == 0) continue;
      if (!terms_.empty() && terms_.back().first == t.first) {
        terms_.back().second = checked_add(terms_.back().second, t.second);
      } else {
        terms_.push_back(t);
      }
    }
  }

  static Monomial variable(Variable x, Exponent e = 1) { return Monomial({{x, e}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  bool is_pure_power() const { return terms_.size() == 1; }

  bool is_squarefree() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
  }

  Exponent degree(Variable x) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{x, 0});
    return (it != terms_.end() && it->first == x) ? it->second : 0;
  }

  Exponent total_degree() const {
    Exponent d = 0;
    for (const Term& t : terms_) d = checked_add(d, t.second);
    return d;
  }

  /// Largest variable index plus one (0 for the unit monomial).
  std::size_t variable_bound() const { return terms_.empty() ? 0 : terms_.back().first + 1; }

  VertexSet support() const {
    VertexSet s;
    for (const Term& t : terms_) {
      if (t.first >= VertexSet::capacity)
        throw BoundExceeded("support variable index", VertexSet::capacity - 1, t.first);
      s.insert(t.first);
    }
    return s;
  }

  /// Squarefree monomial on the same support.
  Monomial radical() const {
    std::vector<Term> out;
    for (const Term& t : terms_) out.push_back({t.first, 1});
    return Monomial(std::move(out));
  }

  bool divides(const Monomial& other) const {
    auto it = other.terms_.begin();
    for (const Term& t : terms_) {
      while (it != other.terms_.end() && it->first < t.first) ++it;
      if (it == other.terms_.end() || it->first != t.first || it->second < t.second) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return merge(a, b, [](Exponent x, Exponent y) { return checked_add(x, y); });
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    return merge(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    return merge(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
  }

  /// a / gcd(a, b): the generator of (a) : b.
  friend Monomial colon(const Monomial& a, const Monomial& b) {
    std::vector<Term> out;
    for (const Term& t : a.terms_) {
      Exponent e = b.degree(t.first);
      if (t.second > e) out.push_back({t.first, t.second - e});
    }
    Monomial m;
    m.terms_ = std::move(out);
    return m;
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  static Exponent checked_add(Exponent x, Exponent y) {
    if (x > std::numeric_limits<Exponent>::max() - y) throw ExponentOverflow();
    return x + y;
  }

  template <class Op>
  static Monomial merge(const Monomial& a, const Monomial& b, Op op) {
    std::vector<Term> out;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        out.push_back({i->first, op(i->second, 0)});
        ++i;
      } else if (i == a.terms_.end() || j->first < i->first) {
        out.push_back({j->first, op(0, j->second)});
        ++j;
      } else {
        out.push_back({i->first, op(i->second, j->second)});
        ++i;
        ++j;
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    Monomial m;
    m.terms_ = std::move(out);
    return m;
  }

  std::vector<Term> terms_;
};

/// Monomial ideal in `ambient` variables, kept as its minimal generating set
/// in ascending Monomial order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::size_t ambient, std::vector<Monomial> generators)
      : ambient_(ambient), generators_(std::move(generators)) {
    for (const Monomial& m : generators_)
      if (m.variable_bound() > ambient_)
        throw PreconditionError("VariableRange", "generator uses a variable outside the ring");
    minimalize_in_place();
  }

  static MonomialIdeal zero(std::size_t ambient) { return MonomialIdeal(ambient, {}); }

  std::size_t ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }

  bool is_squarefree() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  void minimalize_in_place() {
    std::sort(generators_.begin(), generators_.end(), [](const Monomial& a, const Monomial& b) {
      auto da = a.total_degree(), db = b.total_degree();
      return da != db ? da < db : a < b;
    });
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    std::vector<Monomial> kept;
    // A divisor has total degree no larger than its multiple.
    for (Monomial& m : generators_) {
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Monomial& k) { return k.divides(m); });
      if (!redundant) kept.push_back(std::move(m));
    }
    std::sort(kept.begin(), kept.end());
    generators_ = std::move(kept);
  }

  std::size_t ambient_ = 0;
  std::vector<Monomial> generators_;
};

inline MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> generators) {
  return MonomialIdeal(ambient, std::move(generators));
}

inline bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

/// Ideal containment: every generator of `inner` lies in `outer`.
inline bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Monomial& g) { return contains(outer, g); });
}

inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) gens.push_back(colon(g, f));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

/// I + (f)
inline MonomialIdeal sum(const MonomialIdeal& a, const Monomial& f) {
  return sum(a, MonomialIdeal(a.ambient(), {f}));
}

inline MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
  std::vector<Monomial> gens;
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) gens.push_back(g.radical());
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

/// The ideal (x_i^{a_i} : i), stored as the monomial prod x_i^{a_i}.
struct IrreducibleComponent {
  Monomial entries;

  MonomialIdeal as_ideal(std::size_t ambient) const {
    std::vector<Monomial> gens;
    for (const auto& [x, e] : entries.terms()) gens.push_back(Monomial::variable(x, e));
    return MonomialIdeal(ambient, std::move(gens));
  }

  VertexSet prime() const { return entries.support(); }

  /// Containment of irreducible ideals: (x^b) subset of (x^a) iff every x^b is
  /// divisible by some generator of the other.
  bool is_contained_in(const IrreducibleComponent& other) const {
    for (const auto& [x, b] : entries.terms()) {
      Exponent a = other.entries.degree(x);
      if (a == 0 || a > b) return false;
    }
    return true;
  }

  auto operator<=>(const IrreducibleComponent&) const = default;
};

inline void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdeal();
  if (ideal.is_unit()) throw UnitIdeal();
}

/// Irredundant irreducible decomposition. Splits I = (I + x^a) cap (I + g/x^a)
/// on the first generator g that is not a pure power, at its lowest variable x.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::set<IrreducibleComponent> found;
  std::function<void(const MonomialIdeal&)> split = [&](const MonomialIdeal& current) {
    // Every component below `current` contains it, so once `current` holds a
    // known component the whole branch is redundant.
    for (const IrreducibleComponent& q : found)
      if (contains(current, q.as_ideal(current.ambient()))) return;
    const auto& gens = current.generators();
    auto mixed = std::find_if(gens.begin(), gens.end(),
                              [](const Monomial& g) { return !g.is_pure_power(); });
    if (mixed == gens.end()) {
      // Minimal pure powers live on distinct variables.
      Monomial entries;
      for (const Monomial& g : gens) entries = entries * g;
      found.insert(IrreducibleComponent{entries});
      return;
    }
    const auto [x, a] = mixed->terms().front();
    Monomial power = Monomial::variable(x, a);
    Monomial rest = colon(*mixed, power);
    split(sum(current, power));
    split(sum(current, rest));
  };
  split(ideal);

  std::vector<IrreducibleComponent> all(found.begin(), found.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j)
      if (j != i && all[j].is_contained_in(all[i])) redundant = true;
    if (!redundant) out.push_back(all[i]);
  }
  return out;
}

/// Radicals of the irredundant irreducible components, deduplicated and sorted.
inline std::vector<VertexSet> associated_primes(const MonomialIdeal& ideal) {
  std::vector<VertexSet> primes;
  for (const IrreducibleComponent& q : irreducible_decomposition(ideal)) primes.push_back(q.prime());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

inline std::size_t height(const MonomialIdeal& ideal) {
  std::size_t h = std::numeric_limits<std::size_t>::max();
  for (VertexSet p : associated_primes(ideal)) h = std::min(h, p.size());
  return h;
}

/// Krull dimension of R/I; the zero ideal gives the full ambient dimension.
inline std::size_t dimension(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal.ambient();
  return ideal.ambient() - height(ideal);
}

inline bool is_unmixed_ideal(const MonomialIdeal& ideal) {
  auto primes = associated_primes(ideal);
  return std::all_of(primes.begin(), primes.end(),
                     [&](VertexSet p) { return p.size() == primes.front().size(); });
}

/// x^2*y*z style rendering; variable names default to x0, x1, ...
inline std::string to_string(const Monomial& m, const std::vector<std::string>& names = {}) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [x, e] : m.terms()) {
    if (!out.empty()) out += '*';
    out += x < names.size() ? names[x] : "x" + std::to_string(x);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& names = {}) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i], names);
  }
  return out + ")";
}

}  // namespace wog

#endif  // WOG_MONOMIAL_IDEAL_HPP
