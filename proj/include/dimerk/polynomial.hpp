#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dimerk/rational.hpp"

namespace dimerk {

/// Exact polynomial in one variable (the dimension d for embedding counts,
/// 1/(N-1) for finite-lattice series). Coefficient k multiplies x^k; trailing
/// zeros are never stored, so the zero polynomial has degree -1.
class DimPoly {
 public:
  DimPoly() = default;
  explicit DimPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  /// Newton divided differences through the given (x, y) points, expanded
  /// into the monomial basis. The x values must be distinct.
  static DimPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
    const std::size_t m = points.size();
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level) {
      for (std::size_t i = m - 1; i >= level; --i) {
        const Rational dx = points[i].first - points[i - level].first;
        if (dx == 0) throw std::invalid_argument("interpolation nodes must be distinct");
        dd[i] = (dd[i] - dd[i - 1]) / dx;
      }
    }
    // Horner on the Newton form: p = dd[m-1]; p = p * (x - x_k) + dd[k].
    std::vector<Rational> p;
    for (std::size_t k = m; k-- > 0;) {
      std::vector<Rational> next(p.size() + 1);
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] -= p[j] * points[k].first;
      }
      next[0] += dd[k];
      p = std::move(next);
    }
    return DimPoly(std::move(p));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational coefficient(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const DimPoly&, const DimPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Exact Laurent polynomial in d: map from exponent of d (possibly negative)
/// to coefficient, with no zero entries. 1/(2d) is stored as {-1: 1/2}.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const Rational& coefficient, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
  }

  /// x^shift * poly(d).
  static LaurentPoly from_poly(const DimPoly& poly, int shift = 0) {
    LaurentPoly p;
    for (int k = 0; k <= poly.degree(); ++k) p.add_term(k + shift, poly.coefficient(k));
    return p;
  }

  static LaurentPoly from_terms(const Terms& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }

  std::optional<int> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<int> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& scale) {
    if (scale == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= scale;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(LaurentPoly x, const Rational& s) { return x *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly x) { return x *= s; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) out.add_term(ex + ey, cx * cy);
    }
    return out;
  }

  /// Evaluation at a nonzero rational d.
  Rational operator()(const Rational& d) const {
    if (d == 0 && !terms_.empty() && terms_.begin()->first < 0) {
      throw std::domain_error("Laurent polynomial with negative powers evaluated at d = 0");
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * pow(d, e);
    return acc;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace dimerk
