#pragma once

#include "subreg/qi/gaussian_rational.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace subreg::qi {

using Integer = mpz_class;

/// Sparse multivariate polynomial over Z with exponent vectors packed into
/// one 64-bit key (fixed bits per variable).
class MultiPoly {
 public:
  MultiPoly(std::size_t vars, unsigned bits) : vars_(vars), bits_(bits) {
    if (vars * bits > 64) throw std::length_error("too many variables for packed monomials");
  }

  static MultiPoly constant(std::size_t vars, unsigned bits, const Integer& c) {
    MultiPoly p(vars, bits);
    if (sgn(c) != 0) p.terms_.emplace(0, c);
    return p;
  }

  std::size_t vars() const { return vars_; }
  unsigned bits() const { return bits_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<std::uint64_t, Integer>& terms() const { return terms_; }

  unsigned exponent(std::uint64_t key, std::size_t var) const {
    return static_cast<unsigned>((key >> (var * bits_)) & ((std::uint64_t{1} << bits_) - 1));
  }

  void add_term(std::uint64_t key, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// this += (Σ coeff_v · x_v) · p
  void add_linear_times(const std::vector<std::pair<std::size_t, Integer>>& linear, const MultiPoly& p,
                        int sign) {
    Integer prod;
    for (const auto& [key, c] : p.terms_) {
      for (const auto& [var, coeff] : linear) {
        prod = c * coeff;
        if (sign < 0) prod = -prod;
        add_term(key + (std::uint64_t{1} << (var * bits_)), prod);
      }
    }
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [key, c] : terms_) {
      Rational t(c);
      for (std::size_t v = 0; v < vars_; ++v) {
        unsigned e = exponent(key, v);
        for (unsigned k = 0; k < e; ++k) t *= point[v];
      }
      acc += t;
    }
    return acc;
  }

  /// Deterministic rendering: terms sorted by packed key.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::map<std::uint64_t, Integer> sorted(terms_.begin(), terms_.end());
    std::string out;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.get_str(10) + ")";
      for (std::size_t v = 0; v < vars_; ++v) {
        unsigned e = exponent(it->first, v);
        if (e == 0) continue;
        out += "*" + names.at(v);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  /// Variables that occur in at least one term.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vars_; ++v) {
      for (const auto& [key, c] : terms_) {
        if (exponent(key, v) != 0) {
          out.push_back(v);
          break;
        }
      }
    }
    return out;
  }

 private:
  std::size_t vars_;
  unsigned bits_;
  std::unordered_map<std::uint64_t, Integer> terms_;
};

/// Entry of a matrix whose entries are linear forms Σ coeff · x_var.
using LinearForm = std::vector<std::pair<std::size_t, Integer>>;

/// Pfaffian of an antisymmetric matrix of linear forms (upper triangle
/// given), expanded symbolically along the first row with memoization on
/// the remaining index set. Size must be even and at most 32.
inline MultiPoly symbolic_pfaffian(const std::vector<std::vector<LinearForm>>& upper, std::size_t vars) {
  const std::size_t n = upper.size();
  if (n % 2 != 0) throw std::invalid_argument("Pfaffian of odd-sized matrix");
  if (n > 32) throw std::length_error("Pfaffian too large");
  unsigned degree = static_cast<unsigned>(n / 2);
  unsigned bits = degree == 0 ? 1 : static_cast<unsigned>(std::bit_width(degree));
  std::unordered_map<std::uint32_t, MultiPoly> memo;

  auto entry = [&](std::size_t i, std::size_t j) -> const LinearForm& { return upper[i][j]; };

  std::function<const MultiPoly&(std::uint32_t)> pf = [&](std::uint32_t mask) -> const MultiPoly& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    MultiPoly result(vars, bits);
    if (mask == 0) {
      result = MultiPoly::constant(vars, bits, Integer(1));
    } else {
      std::size_t first = static_cast<std::size_t>(std::countr_zero(mask));
      std::uint32_t rest = mask & ~(std::uint32_t{1} << first);
      int sign = 1;
      for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(scan));
        const LinearForm& a = entry(first, j);
        if (!a.empty()) {
          const MultiPoly& sub = pf(rest & ~(std::uint32_t{1} << j));
          if (!sub.is_zero()) result.add_linear_times(a, sub, sign);
        }
        sign = -sign;
      }
    }
    return memo.emplace(mask, std::move(result)).first->second;
  };

  std::uint32_t full = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  return pf(full);
}

}  // namespace subreg::qi
