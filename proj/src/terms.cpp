#include "bom/terms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bom {

TermExpr TermExpr::deriv(int order) {
  if (order < 0) throw std::invalid_argument("TermExpr: derivative order must be >= 0");
  TermExpr t;
  t.kind_ = Kind::deriv;
  t.order_ = order;
  return t;
}

TermExpr TermExpr::hilbert_of(TermExpr child) {
  TermExpr t;
  t.kind_ = Kind::hilbert;
  t.children_.push_back(std::move(child));
  return t;
}

TermExpr TermExpr::product_of(std::vector<TermExpr> children) {
  if (children.empty()) throw std::invalid_argument("TermExpr: product needs at least one factor");
  TermExpr t;
  t.kind_ = Kind::product;
  t.children_ = std::move(children);
  return t;
}

int TermExpr::homogeneity() const {
  if (kind_ == Kind::deriv) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.homogeneity();
  return n;
}

int TermExpr::sup_order() const {
  if (kind_ == Kind::deriv) return order_;
  int m = 0;
  for (const auto& c : children_) m = std::max(m, c.sup_order());
  return m;
}

int TermExpr::total_order() const {
  if (kind_ == Kind::deriv) return order_;
  int s = 0;
  for (const auto& c : children_) s += c.total_order();
  return s;
}

TermExpr TermExpr::tilde() const {
  std::vector<int> orders = leaf_orders();
  if (orders.size() == 1) return deriv(orders[0]);
  std::vector<TermExpr> factors;
  factors.reserve(orders.size());
  for (int a : orders) factors.push_back(deriv(a));
  return product_of(std::move(factors));
}

std::vector<int> TermExpr::leaf_orders() const {
  std::vector<int> out;
  if (kind_ == Kind::deriv) {
    out.push_back(order_);
    return out;
  }
  for (const auto& c : children_) {
    auto sub = c.leaf_orders();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string TermExpr::to_string() const {
  switch (kind_) {
    case Kind::deriv:
      return "D" + std::to_string(order_);
    case Kind::hilbert:
      return "H(" + children_[0].to_string() + ")";
    case Kind::product: {
      std::string s = "P(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ",";
        s += children_[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("TermExpr parse: unexpected end of input");
    return s[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("TermExpr parse: expected '") + c + "' at position " +
                                  std::to_string(pos));
    ++pos;
  }

  TermExpr parse_expr() {
    char c = peek();
    if (c == 'D' || c == 'd') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("TermExpr parse: D must be followed by digits");
      return TermExpr::deriv(std::stoi(std::string(s.substr(start, pos - start))));
    }
    if (c == 'H' || c == 'h') {
      ++pos;
      expect('(');
      TermExpr child = parse_expr();
      expect(')');
      return TermExpr::hilbert_of(std::move(child));
    }
    if (c == 'P' || c == 'p') {
      ++pos;
      expect('(');
      std::vector<TermExpr> children;
      children.push_back(parse_expr());
      while (peek() == ',') {
        ++pos;
        children.push_back(parse_expr());
      }
      expect(')');
      return TermExpr::product_of(std::move(children));
    }
    throw std::invalid_argument(std::string("TermExpr parse: unexpected character '") + c + "'");
  }
};

// Evaluates the tree; the leaf whose depth-first index equals target gets
// substituted_base in place of u before its derivative is applied.
ComplexField eval_impl(const TermExpr& p, const ComplexField& u, int target,
                       const ComplexField* substituted_base, int& counter) {
  switch (p.kind()) {
    case TermExpr::Kind::deriv: {
      const ComplexField& base = (counter++ == target && substituted_base) ? *substituted_base : u;
      return derivative(base, p.order());
    }
    case TermExpr::Kind::hilbert:
      return hilbert(eval_impl(p.children()[0], u, target, substituted_base, counter));
    case TermExpr::Kind::product: {
      ComplexField acc = eval_impl(p.children()[0], u, target, substituted_base, counter);
      for (std::size_t i = 1; i < p.children().size(); ++i)
        acc = multiply(acc, eval_impl(p.children()[i], u, target, substituted_base, counter));
      return acc;
    }
  }
  throw std::logic_error("TermExpr: invalid node kind");
}

// Integral of the (possibly substituted) tree.  For a top-level product the
// widest factor is paired against the product of the rest through
// integral_of_product instead of one more full convolution.
double integral_impl(const TermExpr& p, const ComplexField& u, int target,
                     const ComplexField* substituted_base) {
  int counter = 0;
  if (p.kind() == TermExpr::Kind::product && p.children().size() >= 2) {
    std::vector<ComplexField> factors;
    factors.reserve(p.children().size());
    for (const auto& c : p.children())
      factors.push_back(eval_impl(c, u, target, substituted_base, counter));
    std::size_t widest = 0;
    for (std::size_t i = 1; i < factors.size(); ++i)
      if (factors[i].n_max() > factors[widest].n_max()) widest = i;
    ComplexField acc;
    bool first = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i == widest) continue;
      acc = first ? std::move(factors[i]) : multiply(acc, factors[i]);
      first = false;
    }
    return integral_of_product(acc, factors[widest]).real();
  }
  return integrate(eval_impl(p, u, target, substituted_base, counter)).real();
}

}  // namespace

TermExpr TermExpr::parse(std::string_view text) {
  Parser parser{text};
  TermExpr t = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw std::invalid_argument("TermExpr parse: trailing characters after expression");
  return t;
}

StructuralNorms structural_norms(const TermExpr& p) {
  return {p.homogeneity(), p.sup_order(), p.total_order()};
}

ComplexField evaluate(const TermExpr& p, const ComplexField& u) {
  int counter = 0;
  return eval_impl(p, u, -1, nullptr, counter);
}

double evaluate_integral(const TermExpr& p, const SpectralField& u) {
  return integral_impl(p, u.to_complex(), -1, nullptr);
}

double star_substitute(const TermExpr& p, int N, const SpectralField& u) {
  for (int n = N + 1; n <= u.n_max(); ++n)
    if (u.coeff(n) != cplx{})
      throw std::invalid_argument("star_substitute: field has nonzero modes above the truncation");
  const ComplexField uc = u.to_complex();
  const ComplexField base = project_high(multiply(uc, derivative(uc, 1)), N);
  const int leaves = p.homogeneity();
  double total = 0.0;
  for (int i = 0; i < leaves; ++i) total += integral_impl(p, uc, i, &base);
  return total;
}

}  // namespace bom
