#include "ncrat/rational_expr.hpp"

#include <optional>
#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

RationalExpr RationalExpr::atom(NcPolynomial p) {
  if (p.terms().empty())
    return integer(0);
  if (p.degree() == 0)
    if (auto c = p.constant_term().as_integer())
      return integer(*c);
  return RationalExpr(std::make_shared<const Node>(
      Node{Kind::Atom, std::make_shared<const NcPolynomial>(std::move(p)), 0, nullptr, nullptr}));
}

RationalExpr RationalExpr::integer(Integer value) {
  return RationalExpr(
      std::make_shared<const Node>(Node{Kind::IntScalar, nullptr, std::move(value), nullptr, nullptr}));
}

namespace {

template <class Expr> std::shared_ptr<const Expr> share(Expr e) {
  return std::make_shared<const Expr>(std::move(e));
}

bool is_leaf(const RationalExpr& e) {
  return e.kind() == RationalExpr::Kind::Atom || e.kind() == RationalExpr::Kind::IntScalar;
}

NcPolynomial leaf_polynomial(const RationalExpr& e, const NcPolynomial& partner) {
  if (e.kind() == RationalExpr::Kind::Atom)
    return e.polynomial();
  return NcPolynomial::constant(RingElement(partner.spec(), e.value()), partner.mu());
}

std::optional<RationalExpr> fold(const RationalExpr& a, const RationalExpr& b, RationalExpr::Kind kind) {
  using Kind = RationalExpr::Kind;
  if (!is_leaf(a) || !is_leaf(b))
    return std::nullopt;
  if (a.kind() == Kind::IntScalar && b.kind() == Kind::IntScalar) {
    switch (kind) {
    case Kind::Add: return RationalExpr::integer(a.value() + b.value());
    case Kind::Sub: return RationalExpr::integer(a.value() - b.value());
    default: return RationalExpr::integer(a.value() * b.value());
    }
  }
  const NcPolynomial& partner = a.kind() == Kind::Atom ? a.polynomial() : b.polynomial();
  const NcPolynomial pa = leaf_polynomial(a, partner), pb = leaf_polynomial(b, partner);
  switch (kind) {
  case Kind::Add: return RationalExpr::atom(pa + pb);
  case Kind::Sub: return RationalExpr::atom(pa - pb);
  default: return RationalExpr::atom(pa * pb);
  }
}

} // namespace

RationalExpr RationalExpr::add(RationalExpr a, RationalExpr b) {
  if (auto folded = fold(a, b, Kind::Add))
    return *folded;
  return RationalExpr(std::make_shared<const Node>(
      Node{Kind::Add, nullptr, 0, share(std::move(a)), share(std::move(b))}));
}

RationalExpr RationalExpr::sub(RationalExpr a, RationalExpr b) {
  if (auto folded = fold(a, b, Kind::Sub))
    return *folded;
  return RationalExpr(std::make_shared<const Node>(
      Node{Kind::Sub, nullptr, 0, share(std::move(a)), share(std::move(b))}));
}

RationalExpr RationalExpr::mul(RationalExpr a, RationalExpr b) {
  if (auto folded = fold(a, b, Kind::Mul))
    return *folded;
  return RationalExpr(std::make_shared<const Node>(
      Node{Kind::Mul, nullptr, 0, share(std::move(a)), share(std::move(b))}));
}

RationalExpr RationalExpr::inv(RationalExpr child) {
  return RationalExpr(
      std::make_shared<const Node>(Node{Kind::Inv, nullptr, 0, share(std::move(child)), nullptr}));
}

std::size_t RationalExpr::depth() const {
  switch (kind()) {
  case Kind::Atom:
  case Kind::IntScalar:
    return 1;
  case Kind::Inv:
    return 1 + lhs().depth();
  default:
    return 1 + std::max(lhs().depth(), rhs().depth());
  }
}

bool operator==(const RationalExpr& a, const RationalExpr& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind())
    return false;
  using Kind = RationalExpr::Kind;
  switch (a.kind()) {
  case Kind::Atom:
    return a.polynomial() == b.polynomial();
  case Kind::IntScalar:
    return a.value() == b.value();
  case Kind::Inv:
    return a.lhs() == b.lhs();
  default:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

// One monomial c * w * x-word as a product the parser reads back.
std::string monomial_text(const Integer& c, const Word& w, const IndetWord& x, const RingSpec& spec,
                          bool leading) {
  std::vector<std::string> factors;
  const Integer magnitude = abs(c);
  if (magnitude != 1 || (w.empty() && x.empty()))
    factors.push_back(magnitude.get_str());
  for (Symbol s : w)
    factors.push_back(spec.alphabet()[s]);
  for (auto letter : x)
    factors.push_back("x" + std::to_string(letter + 1));
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i)
    body += (i ? "*" : "") + factors[i];
  if (c < 0)
    return (leading ? "-" : " - ") + body;
  return (leading ? "" : " + ") + body;
}

std::string polynomial_text(const NcPolynomial& p) {
  std::string out;
  std::size_t count = 0;
  for (const auto& [x, coefficient] : p.terms())
    for (const auto& [w, c] : coefficient.terms())
      out += monomial_text(c, w, x, *p.spec(), count++ == 0);
  if (count == 0)
    return "0";
  // A lone positive single-factor term reads back as the same Atom.
  if (count == 1 && out.find_first_of("*- ") == std::string::npos)
    return out;
  return "(" + out + ")";
}

} // namespace

std::string RationalExpr::to_string() const {
  switch (kind()) {
  case Kind::Atom:
    return polynomial_text(polynomial());
  case Kind::IntScalar:
    return value() < 0 ? "(" + value().get_str() + ")" : value().get_str();
  case Kind::Add:
    return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
  case Kind::Sub:
    return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
  case Kind::Mul:
    return "(" + lhs().to_string() + " * " + rhs().to_string() + ")";
  case Kind::Inv:
    return "(" + lhs().to_string() + ")^-1";
  }
  return {};
}

TruncatedSeries evaluate(const RationalExpr& e, const SpecPtr& spec, unsigned mu, std::size_t order) {
  using Kind = RationalExpr::Kind;
  switch (e.kind()) {
  case Kind::Atom:
    require_same_spec(spec, e.polynomial().spec(), "evaluate");
    if (e.polynomial().mu() != mu)
      throw SpecMismatch("evaluate: atom mu differs from context");
    return TruncatedSeries(e.polynomial(), order);
  case Kind::IntScalar:
    return TruncatedSeries::constant(RingElement(spec, e.value()), mu, order);
  case Kind::Add:
    return evaluate(e.lhs(), spec, mu, order) + evaluate(e.rhs(), spec, mu, order);
  case Kind::Sub:
    return evaluate(e.lhs(), spec, mu, order) - evaluate(e.rhs(), spec, mu, order);
  case Kind::Mul:
    return evaluate(e.lhs(), spec, mu, order) * evaluate(e.rhs(), spec, mu, order);
  case Kind::Inv: {
    SeriesMatrix m(spec, mu, order, 1, 1);
    m.set(0, 0, evaluate(e.lhs(), spec, mu, order));
    try {
      return series_mat_inverse(m)(0, 0);
    } catch (const NotUnit&) {
      throw NotSigmaInvertible("augmentation " + series_augment(m(0, 0)).to_string() +
                               " of " + e.lhs().to_string() + " is not a unit");
    }
  }
  }
  throw InvalidArgument("unknown expression node");
}

namespace {

// c * x_w (|w| >= 1), peeling the last letter: (c x_u) * x_j.
LinearMachine monomial_machine(const RingElement& c, const IndetWord& w, unsigned mu) {
  if (w.size() == 1)
    return linear_term_machine(c, mu, w[0]);
  const IndetWord prefix(w.begin(), w.end() - 1);
  return machine_combine(monomial_machine(c, prefix, mu),
                         linear_term_machine(RingElement(c.spec(), 1), mu, w.back()),
                         CombineKind::Mul);
}

} // namespace

LinearMachine linearize_polynomial(const NcPolynomial& p) {
  const unsigned mu = p.mu();
  // Linear part a0 + sum a_i x_i first; then p = rest + b c with b c the
  // highest monomial, which nests to adding monomials in increasing order.
  LinearMachine out = constant_machine(p.constant_term(), mu);
  for (const auto& [w, c] : p.terms())
    if (w.size() == 1)
      out = machine_combine(out, linear_term_machine(c, mu, w[0]), CombineKind::Add);
  for (const auto& [w, c] : p.terms())
    if (w.size() >= 2)
      out = machine_combine(out, monomial_machine(c, w, mu), CombineKind::Add);
  return out;
}

LinearMachine linearize(const RationalExpr& e, const SpecPtr& spec, unsigned mu) {
  using Kind = RationalExpr::Kind;
  switch (e.kind()) {
  case Kind::Atom:
    require_same_spec(spec, e.polynomial().spec(), "linearize");
    if (e.polynomial().mu() != mu)
      throw SpecMismatch("linearize: atom mu differs from context");
    return linearize_polynomial(e.polynomial());
  case Kind::IntScalar:
    return constant_machine(RingElement(spec, e.value()), mu);
  case Kind::Add:
    return machine_combine(linearize(e.lhs(), spec, mu), linearize(e.rhs(), spec, mu),
                           CombineKind::Add);
  case Kind::Sub:
    return machine_combine(linearize(e.lhs(), spec, mu), linearize(e.rhs(), spec, mu),
                           CombineKind::Sub);
  case Kind::Mul:
    return machine_combine(linearize(e.lhs(), spec, mu), linearize(e.rhs(), spec, mu),
                           CombineKind::Mul);
  case Kind::Inv:
    return machine_inverse(linearize(e.lhs(), spec, mu));
  }
  throw InvalidArgument("unknown expression node");
}

} // namespace ncrat
