#ifndef WOG_LINALG_HPP
#define WOG_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wog/errors.hpp"

namespace wog {

/// Row-sparse integer matrix; each row holds (column, value) pairs sorted by
/// column with no zeros.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;
};

/// Field the homology ranks are taken over: the rationals, or GF(p).
struct FieldChoice {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t prime = 0;

  static FieldChoice rationals() { return {}; }
  static FieldChoice gf(std::uint64_t p);

  std::string name() const { return kind == Kind::rationals ? "q" : "p:" + std::to_string(prime); }
  bool operator==(const FieldChoice&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldChoice FieldChoice::gf(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("prime-field", std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw BoundExceeded("prime field modulus", (std::uint64_t{1} << 32) - 1, p);
  return {Kind::prime, p};
}

namespace detail {

/// Arithmetic in GF(p), p < 2^32.
struct ModularArithmetic {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type inverse(value_type a) const {
    // Fermat: a^(p-2).
    value_type result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  using Row = std::vector<std::pair<std::uint32_t, value_type>>;

  /// row -= (row.lead / pivot.lead) * pivot; pivots are stored monic.
  Row eliminate(const Row& row, const Row& pivot) const {
    const value_type factor = row.front().second;
    return combine(row, 1, pivot, factor);
  }

  void normalize(Row& row) const {
    const value_type inv = inverse(row.front().second);
    for (auto& e : row) e.second = mul(e.second, inv);
  }

  /// a * row - b * pivot
  Row combine(const Row& row, value_type a, const Row& pivot, value_type b) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    auto i = row.begin();
    auto j = pivot.begin();
    while (i != row.end() || j != pivot.end()) {
      value_type v;
      std::uint32_t c;
      if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
        c = i->first;
        v = mul(a, i->second);
        ++i;
      } else if (i == row.end() || j->first < i->first) {
        c = j->first;
        v = sub(0, mul(b, j->second));
        ++j;
      } else {
        c = i->first;
        v = sub(mul(a, i->second), mul(b, j->second));
        ++i;
        ++j;
      }
      if (v) out.push_back({c, v});
    }
    return out;
  }
};

/// Fraction-free integer elimination; ranks agree with ranks over Q.
struct IntegerArithmetic {
  using value_type = mpz_class;
  using Row = std::vector<std::pair<std::uint32_t, value_type>>;

  value_type from_int(std::int64_t v) const { return value_type(static_cast<long>(v)); }

  /// pivot.lead * row - row.lead * pivot, divided by its content.
  Row eliminate(const Row& row, const Row& pivot) const {
    const mpz_class g = gcd(row.front().second, pivot.front().second);
    const mpz_class a = pivot.front().second / g;
    const mpz_class b = row.front().second / g;
    Row out;
    out.reserve(row.size() + pivot.size());
    auto i = row.begin();
    auto j = pivot.begin();
    while (i != row.end() || j != pivot.end()) {
      mpz_class v;
      std::uint32_t c;
      if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
        c = i->first;
        v = a * i->second;
        ++i;
      } else if (i == row.end() || j->first < i->first) {
        c = j->first;
        v = -b * j->second;
        ++j;
      } else {
        c = i->first;
        v = a * i->second - b * j->second;
        ++i;
        ++j;
      }
      if (v != 0) out.push_back({c, std::move(v)});
    }
    normalize(out);
    return out;
  }

  void normalize(Row& row) const {
    if (row.empty()) return;
    mpz_class content = 0;
    for (const auto& e : row) content = gcd(content, e.second);
    if (row.front().second < 0) content = -content;
    if (content != 1)
      for (auto& e : row) e.second /= content;
  }
};

/// Online row reduction: each incoming row is reduced against the stored
/// pivot rows (keyed by leading column) and kept if it survives.
template <class Arithmetic>
std::size_t echelon_rank(const SparseMatrix& m, const Arithmetic& arith) {
  using Row = typename Arithmetic::Row;
  std::unordered_map<std::uint32_t, Row> pivots;
  for (const auto& raw : m.entries) {
    Row row;
    row.reserve(raw.size());
    for (const auto& [c, v] : raw) {
      auto value = arith.from_int(v);
      if (value != 0) row.push_back({c, std::move(value)});
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = arith.eliminate(row, it->second);
    }
    if (!row.empty()) {
      arith.normalize(row);
      const std::uint32_t lead = row.front().first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return pivots.size();
}

}  // namespace detail

inline std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  return detail::echelon_rank(m, detail::ModularArithmetic{p});
}

inline std::size_t rank_rational(const SparseMatrix& m) {
  return detail::echelon_rank(m, detail::IntegerArithmetic{});
}

inline std::size_t rank(const SparseMatrix& m, const FieldChoice& field) {
  return field.kind == FieldChoice::Kind::rationals ? rank_rational(m) : rank_mod_p(m, field.prime);
}

}  // namespace wog

#endif  // WOG_LINALG_HPP
