#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bom/spectral.hpp"

namespace bom {

/// A multilinear expression in one formal field symbol: leaves are x-derivatives
/// of the symbol, internal nodes apply the Hilbert transform to a subtree or
/// multiply subtrees pointwise.  Trees are immutable once built; no
/// simplification or canonicalization is ever performed.
class TermExpr {
 public:
  enum class Kind { deriv, hilbert, product };

  static TermExpr deriv(int order);
  static TermExpr hilbert_of(TermExpr child);
  static TermExpr product_of(std::vector<TermExpr> children);

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  const std::vector<TermExpr>& children() const { return children_; }

  /// Number of leaves (homogeneity in the field symbol).
  int homogeneity() const;
  /// Largest leaf derivative order.
  int sup_order() const;
  /// Sum of all leaf derivative orders.
  int total_order() const;

  /// The same product with every Hilbert transform erased.
  TermExpr tilde() const;

  /// All leaf derivative orders in depth-first order.
  std::vector<int> leaf_orders() const;

  /// Compact prefix text form, e.g. "P(D2,H(P(D0,H(D1))))".
  std::string to_string() const;
  /// Parses the text form; whitespace-insensitive.  Throws on malformed input.
  static TermExpr parse(std::string_view text);

 private:
  TermExpr() = default;
  Kind kind_ = Kind::deriv;
  int order_ = 0;
  std::vector<TermExpr> children_;
};

struct StructuralNorms {
  int homogeneity;
  int sup_order;
  int total_order;
};

StructuralNorms structural_norms(const TermExpr& p);

/// Substitutes u for the field symbol and evaluates the tree with exact
/// spectral arithmetic.
ComplexField evaluate(const TermExpr& p, const ComplexField& u);

/// Integral over the period of p(u).
double evaluate_integral(const TermExpr& p, const SpectralField& u);

/// Sum over the leaves of p of the integral of the variant in which the
/// chosen leaf's derivative of u is replaced by the same derivative of
/// project_high(u * u_x, N); every Hilbert/product wrapper above the leaf is
/// kept verbatim.  Requires u supported on modes <= N.
double star_substitute(const TermExpr& p, int N, const SpectralField& u);

}  // namespace bom
