#include "ncrat/machine.hpp"

#include <sstream>

#include "ncrat/error.hpp"

namespace ncrat {

namespace {

// Copies `src` into `dst` with its top-left corner at (r, c).
void place(RingMatrix& dst, const RingMatrix& src, std::size_t r, std::size_t c) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (!src(i, j).is_zero())
        dst.set(r + i, c + j, src(i, j));
}

void require_compatible(const LinearMachine& a, const LinearMachine& b, std::string_view context) {
  require_same_spec(a.spec(), b.spec(), context);
  if (a.mu() != b.mu())
    throw SpecMismatch(std::string(context) + ": mu " + std::to_string(a.mu()) + " vs " +
                       std::to_string(b.mu()));
}

} // namespace

LinearMachine::LinearMachine(RingMatrix f, std::vector<RingMatrix> s, RingMatrix g)
    : f_(std::move(f)), s_(std::move(s)), g_(std::move(g)) {
  const std::size_t n = f_.cols();
  if (f_.rows() != 1 || g_.cols() != 1 || g_.rows() != n)
    throw DimensionMismatch("machine needs f: 1xn and g: nx1");
  require_same_spec(f_.spec(), g_.spec(), "machine");
  for (const auto& si : s_) {
    if (si.rows() != n || si.cols() != n)
      throw DimensionMismatch("machine transition matrices must be nxn");
    require_same_spec(f_.spec(), si.spec(), "machine");
  }
}

RingElement LinearMachine::weight(const IndetWord& w) const {
  RingMatrix v = f_;
  for (auto letter : w)
    v = v * s_.at(letter);
  return (v * g_)(0, 0);
}

std::string LinearMachine::to_string() const {
  std::ostringstream out;
  out << "dim " << dim() << ", mu " << mu() << " over " << spec()->name() << '\n';
  out << "f = " << f_.to_string() << '\n';
  for (std::size_t i = 0; i < s_.size(); ++i)
    out << "s" << i + 1 << " = " << s_[i].to_string() << '\n';
  out << "g = " << g_.to_string() << '\n';
  return out.str();
}

TruncatedSeries machine_expand(const LinearMachine& m, std::size_t order) {
  TruncatedSeries out(m.spec(), m.mu(), order);
  // Breadth-first over words, carrying the row vector f s_w.
  std::vector<std::pair<IndetWord, RingMatrix>> level;
  level.emplace_back(IndetWord{}, m.f());
  for (std::size_t k = 0;; ++k) {
    for (const auto& [w, row] : level)
      out.add_term(w, (row * m.g())(0, 0));
    if (k == order)
      break;
    std::vector<std::pair<IndetWord, RingMatrix>> next;
    next.reserve(level.size() * m.mu());
    for (const auto& [w, row] : level) {
      if (row.is_zero())
        continue;
      for (unsigned i = 0; i < m.mu(); ++i) {
        IndetWord extended = w;
        extended.push_back(static_cast<std::uint8_t>(i));
        next.emplace_back(std::move(extended), row * m.s(i));
      }
    }
    if (next.empty())
      break;
    level = std::move(next);
  }
  return out;
}

LinearMachine machine_negate(const LinearMachine& a) {
  return LinearMachine(-a.f(), a.s(), a.g());
}

LinearMachine machine_combine(const LinearMachine& a, const LinearMachine& b, CombineKind kind) {
  if (kind == CombineKind::Neg)
    return machine_negate(a);
  require_compatible(a, b, "machine_combine");
  const auto& spec = a.spec();
  const std::size_t n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
  RingMatrix f(spec, 1, n), g(spec, n, 1);
  std::vector<RingMatrix> s(a.mu(), RingMatrix(spec, n, n));
  switch (kind) {
  case CombineKind::Add:
  case CombineKind::Sub:
    place(f, a.f(), 0, 0);
    place(f, kind == CombineKind::Sub ? -b.f() : b.f(), 0, n1);
    for (unsigned i = 0; i < a.mu(); ++i) {
      place(s[i], a.s(i), 0, 0);
      place(s[i], b.s(i), n1, n1);
    }
    place(g, a.g(), 0, 0);
    place(g, b.g(), n1, 0);
    break;
  case CombineKind::Mul: {
    // Pencil [[sigma1, -g1 f2], [0, sigma2]] times the inverse of its
    // unitriangular constant block.
    const RingMatrix coupling = a.g() * b.f();
    place(f, a.f(), 0, 0);
    for (unsigned i = 0; i < a.mu(); ++i) {
      place(s[i], a.s(i), 0, 0);
      place(s[i], coupling * b.s(i), 0, n1);
      place(s[i], b.s(i), n1, n1);
    }
    place(g, coupling * b.g(), 0, 0);
    place(g, b.g(), n1, 0);
    break;
  }
  case CombineKind::Neg:
    break;
  }
  return LinearMachine(std::move(f), std::move(s), std::move(g));
}

LinearMachine constant_machine(const RingElement& a, unsigned mu) {
  const auto& spec = a.spec();
  RingMatrix f(spec, 1, 2), g(spec, 2, 1);
  f.set(0, 0, RingElement(spec, 1));
  g.set(0, 0, a);
  g.set(1, 0, RingElement(spec, 1));
  return LinearMachine(std::move(f), std::vector<RingMatrix>(mu, RingMatrix(spec, 2, 2)),
                       std::move(g));
}

LinearMachine linear_term_machine(const RingElement& a, unsigned mu, unsigned index) {
  if (index >= mu)
    throw UnknownSymbol("indeterminate x" + std::to_string(index + 1) + " with mu = " +
                        std::to_string(mu));
  const auto& spec = a.spec();
  RingMatrix f(spec, 1, 2), g(spec, 2, 1);
  f.set(0, 0, RingElement(spec, 1));
  g.set(1, 0, RingElement(spec, 1));
  std::vector<RingMatrix> s(mu, RingMatrix(spec, 2, 2));
  s[index].set(0, 1, a);
  return LinearMachine(std::move(f), std::move(s), std::move(g));
}

LinearMachine machine_inverse(const LinearMachine& m) {
  const auto& spec = m.spec();
  const std::size_t n = m.dim();
  const RingMatrix a0 = m.f() * m.g();
  RingMatrix a0_inverse(spec, 1, 1);
  try {
    a0_inverse = mat_inverse_graded(a0);
  } catch (const NotUnit&) {
    throw NotSigmaInvertible("augmentation " + a0(0, 0).to_string() +
                             " is not a unit of the coefficient ring");
  }
  // Inverse of the constant block [[I, g], [f, 0]] is
  // [[I - g a f, g a], [a f, -a]] with a = (f g)^{-1}.
  const RingMatrix ga = m.g() * a0_inverse;
  const RingMatrix af = a0_inverse * m.f();
  const RingMatrix top_left = RingMatrix::identity(spec, n) - ga * m.f();

  RingMatrix f(spec, 1, n + 1), g(spec, n + 1, 1);
  f.set(0, n, RingElement(spec, -1));
  place(g, ga, 0, 0);
  place(g, -a0_inverse, n, 0);
  std::vector<RingMatrix> s(m.mu(), RingMatrix(spec, n + 1, n + 1));
  for (unsigned i = 0; i < m.mu(); ++i) {
    place(s[i], top_left * m.s(i), 0, 0);
    place(s[i], af * m.s(i), n, 0);
  }
  return LinearMachine(std::move(f), std::move(s), std::move(g));
}

} // namespace ncrat
