#pragma once

#include <memory>
#include <string>

#include "ncrat/machine.hpp"

namespace ncrat {

/// Syntax tree of an element of the Cohn localization: polynomials of
/// A<X> combined by +, -, * and inversion. Nodes are immutable and shared.
class RationalExpr {
public:
  enum class Kind { Atom, IntScalar, Add, Sub, Mul, Inv };

  // Trees are canonical: add/sub/mul of two leaves (Atom or IntScalar) fold
  // into one leaf, and a polynomial that is an integer constant is an
  // IntScalar. Every inversion-free subtree is therefore a single leaf.
  static RationalExpr atom(NcPolynomial p);
  static RationalExpr integer(Integer value);
  static RationalExpr add(RationalExpr a, RationalExpr b);
  static RationalExpr sub(RationalExpr a, RationalExpr b);
  static RationalExpr mul(RationalExpr a, RationalExpr b);
  static RationalExpr inv(RationalExpr child);

  Kind kind() const noexcept { return node_->kind; }
  /// Valid for Atom.
  const NcPolynomial& polynomial() const { return *node_->polynomial; }
  /// Valid for IntScalar.
  const Integer& value() const { return node_->value; }
  /// Valid for Add/Sub/Mul (lhs, rhs) and Inv (lhs).
  const RationalExpr& lhs() const { return *node_->lhs; }
  const RationalExpr& rhs() const { return *node_->rhs; }

  std::size_t depth() const;

  /// Structural equality of the trees.
  friend bool operator==(const RationalExpr& a, const RationalExpr& b);

  /// Fully parenthesized text accepted by parse_expr.
  std::string to_string() const;

private:
  struct Node {
    Kind kind;
    std::shared_ptr<const NcPolynomial> polynomial;
    Integer value;
    std::shared_ptr<const RationalExpr> lhs;
    std::shared_ptr<const RationalExpr> rhs;
  };
  explicit RationalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Direct truncated-series evaluation. Throws NotSigmaInvertible when an
/// Inv child has no invertible augmentation, BoundExceeded, SpecMismatch.
TruncatedSeries evaluate(const RationalExpr& e, const SpecPtr& spec, unsigned mu, std::size_t order);

/// Machine realizing `e` (Schützenberger's construction): polynomial atoms
/// peeled into linear pieces, Inv through the bordered pencil, Add/Sub/Mul
/// through block machines. Same errors as `evaluate`.
LinearMachine linearize(const RationalExpr& e, const SpecPtr& spec, unsigned mu);

/// Linearization of a single polynomial of A<X>.
LinearMachine linearize_polynomial(const NcPolynomial& p);

} // namespace ncrat
