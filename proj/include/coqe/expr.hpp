#ifndef COQE_EXPR_HPP
#define COQE_EXPR_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coqe/rational.hpp"

namespace coqe {

enum class Kind { Number, Symbol, Power, Exp, Log, Sin, Cos, Product, Sum };

class Expr;
namespace detail {

struct ExprNode {
  Kind kind;
  Rational value;            // Number payload, Power exponent
  std::string name;          // Symbol payload
  bool nonzero = false;      // symbol assumption flags
  bool positive = false;
  std::vector<Expr> kids;    // Sum/Product children, function arg, Power base
  std::size_t hash = 0;
};

}  // namespace detail

/// Immutable symbolic scalar. Every constructor returns the canonical form:
/// sums and products are flattened, like terms merged, exponents of a common
/// base collected, exp-factors merged, products distributed over sums, and
/// positive integer powers of sums expanded. Rational arithmetic is exact,
/// so no floating point ever enters a canonical expression.
class Expr {
 public:
  Expr() : Expr(Rational(0)) {}
  Expr(long long v) : Expr(Rational(v)) {}  // NOLINT
  Expr(const Rational& v) {                 // NOLINT
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = Kind::Number;
    n->value = v;
    finish(n);
    node_ = n;
  }

  static Expr symbol(const std::string& name, bool nonzero = false,
                     bool positive = false) {
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = Kind::Symbol;
    n->name = name;
    n->nonzero = nonzero || positive;
    n->positive = positive;
    finish(n);
    return Expr(n);
  }

  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr pow(const Expr& base, const Rational& e);
  static Expr exp(const Expr& arg);
  static Expr log(const Expr& arg);
  static Expr sin(const Expr& arg);
  static Expr cos(const Expr& arg);
  static Expr sqrt(const Expr& arg) { return pow(arg, Rational(1, 2)); }

  Kind kind() const { return node_->kind; }
  const Rational& number() const { return node_->value; }
  const Rational& exponent() const { return node_->value; }
  const std::string& symbol_name() const { return node_->name; }
  bool symbol_nonzero() const { return node_->nonzero; }
  bool symbol_positive() const { return node_->positive; }
  const std::vector<Expr>& kids() const { return node_->kids; }
  const Expr& base() const { return node_->kids[0]; }
  const Expr& arg() const { return node_->kids[0]; }
  std::size_t hash() const { return node_->hash; }

  bool is_number() const { return kind() == Kind::Number; }
  bool is_zero_literal() const { return is_number() && number().is_zero(); }
  bool is_one_literal() const { return is_number() && number().is_one(); }

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return structural_equal(a, b);
  }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  /// Total order used for canonical child sorting: by kind, then payload.
  static int compare(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind())
      return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
      case Kind::Number: {
        if (a.number() == b.number()) return 0;
        return a.number() < b.number() ? -1 : 1;
      }
      case Kind::Symbol: {
        int c = a.symbol_name().compare(b.symbol_name());
        return c < 0 ? -1 : (c == 0 ? 0 : 1);
      }
      case Kind::Power: {
        int c = compare(a.base(), b.base());
        if (c) return c;
        if (a.exponent() == b.exponent()) return 0;
        return a.exponent() < b.exponent() ? -1 : 1;
      }
      case Kind::Exp:
      case Kind::Log:
      case Kind::Sin:
      case Kind::Cos:
        return compare(a.arg(), b.arg());
      case Kind::Product:
      case Kind::Sum: {
        std::size_t m = std::min(a.kids().size(), b.kids().size());
        for (std::size_t i = 0; i < m; ++i) {
          int c = compare(a.kids()[i], b.kids()[i]);
          if (c) return c;
        }
        if (a.kids().size() == b.kids().size()) return 0;
        return a.kids().size() < b.kids().size() ? -1 : 1;
      }
    }
    return 0;
  }

  struct Less {
    bool operator()(const Expr& a, const Expr& b) const {
      return compare(a, b) < 0;
    }
  };

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) {
    return sum({a, product({Expr(-1), b})});
  }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) {
    return product({a, pow(b, Rational(-1))});
  }
  Expr operator-() const { return product({Expr(-1), *this}); }

  std::string str() const;

  /// True when the expression is known positive on its whole domain.
  bool known_positive() const {
    switch (kind()) {
      case Kind::Number:
        return number() > Rational(0);
      case Kind::Symbol:
        return symbol_positive();
      case Kind::Exp:
        return true;
      case Kind::Power:
        return base().known_positive();
      case Kind::Product:
      case Kind::Sum: {
        for (const auto& k : kids())
          if (!k.known_positive()) return false;
        return true;
      }
      default:
        return false;
    }
  }

  void collect_symbols(std::map<std::string, std::pair<bool, bool>>& out) const {
    if (kind() == Kind::Symbol) {
      out[symbol_name()] = {symbol_nonzero(), symbol_positive()};
      return;
    }
    for (const auto& k : kids()) k.collect_symbols(out);
  }

  // (coefficient, monomial) decomposition of a canonical non-Sum term;
  // monomial 1 stands for a pure number.
  static std::pair<Rational, Expr> split_coeff(const Expr& e) {
    if (e.kind() == Kind::Number) return {e.number(), Expr(1)};
    if (e.kind() == Kind::Product && e.kids()[0].kind() == Kind::Number) {
      Rational c = e.kids()[0].number();
      if (e.kids().size() == 2) return {c, e.kids()[1]};
      std::vector<Expr> rest(e.kids().begin() + 1, e.kids().end());
      return {c, raw(Kind::Product, std::move(rest))};
    }
    return {Rational(1), e};
  }

  // (base, exponent) view of a canonical monomial factor.
  static std::pair<Expr, Rational> as_power(const Expr& e) {
    if (e.kind() == Kind::Power) return {e.base(), e.exponent()};
    return {e, Rational(1)};
  }

 private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> n) : node_(std::move(n)) {}

  static void finish(const std::shared_ptr<detail::ExprNode>& n) {
    std::size_t h = (static_cast<std::size_t>(n->kind) + 1) * 1099511628211ull;
    switch (n->kind) {
      case Kind::Number:
        h ^= n->value.hash();
        break;
      case Kind::Symbol:
        for (char c : n->name) h = h * 131 + static_cast<unsigned char>(c);
        break;
      case Kind::Power:
        h ^= n->value.hash() * 2654435761u;
        break;
      default:
        break;
    }
    for (const auto& k : n->kids) h = h * 1000003u ^ k.hash();
    n->hash = h;
  }

  static bool structural_equal(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Number:
        return a.number() == b.number();
      case Kind::Symbol:
        return a.symbol_name() == b.symbol_name();
      case Kind::Power:
        if (a.exponent() != b.exponent()) return false;
        break;
      default:
        break;
    }
    if (a.kids().size() != b.kids().size()) return false;
    for (std::size_t i = 0; i < a.kids().size(); ++i)
      if (a.kids()[i] != b.kids()[i]) return false;
    return true;
  }

  static Expr raw(Kind k, std::vector<Expr> kids, Rational value = Rational(0)) {
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = k;
    n->kids = std::move(kids);
    n->value = value;
    finish(n);
    return Expr(n);
  }

  static bool leading_negative(const Expr& e) {
    switch (e.kind()) {
      case Kind::Number:
        return e.number().is_negative();
      case Kind::Product:
      case Kind::Sum:
        return leading_negative(e.kids()[0]);
      default:
        return false;
    }
  }

  static Expr rebuild_term(const Rational& c, const Expr& mono);
  static Expr pow_number(const Rational& base, const Rational& e);
  static void pythagorean_pass(std::map<Expr, Rational, Less>& terms);

  std::shared_ptr<const detail::ExprNode> node_;
};

inline Expr Expr::rebuild_term(const Rational& c, const Expr& mono) {
  if (mono.is_one_literal()) return Expr(c);
  if (c.is_one()) return mono;
  std::vector<Expr> kids;
  kids.push_back(Expr(c));
  if (mono.kind() == Kind::Product)
    for (const auto& k : mono.kids()) kids.push_back(k);
  else
    kids.push_back(mono);
  return raw(Kind::Product, std::move(kids));
}

inline Expr Expr::sum(std::vector<Expr> in) {
  std::map<Expr, Rational, Less> terms;
  std::vector<Expr> queue = std::move(in);
  while (!queue.empty()) {
    Expr e = queue.back();
    queue.pop_back();
    if (e.kind() == Kind::Sum) {
      for (const auto& k : e.kids()) queue.push_back(k);
      continue;
    }
    auto [c, mono] = split_coeff(e);
    if (c.is_zero()) continue;
    auto it = terms.find(mono);
    if (it == terms.end())
      terms.emplace(mono, c);
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  pythagorean_pass(terms);
  if (terms.empty()) return Expr(0);
  if (terms.size() == 1)
    return rebuild_term(terms.begin()->second, terms.begin()->first);
  std::vector<Expr> kids;
  kids.reserve(terms.size());
  for (const auto& [mono, c] : terms) kids.push_back(rebuild_term(c, mono));
  return raw(Kind::Sum, std::move(kids));
}

// c1*sin(u)^2*K + c2*cos(u)^2*K  ->  c2*K + (c1-c2)*sin(u)^2*K
inline void Expr::pythagorean_pass(std::map<Expr, Rational, Less>& terms) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      Expr mono = it->first;
      std::vector<Expr> factors =
          mono.kind() == Kind::Product ? mono.kids() : std::vector<Expr>{mono};
      int sin_idx = -1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto [b, e] = as_power(factors[i]);
        if (b.kind() == Kind::Sin && e == Rational(2)) {
          sin_idx = static_cast<int>(i);
          break;
        }
      }
      if (sin_idx < 0) continue;
      Expr u = as_power(factors[sin_idx]).first.arg();
      std::vector<Expr> partner_factors = factors;
      partner_factors[sin_idx] =
          raw(Kind::Power, {raw(Kind::Cos, {u})}, Rational(2));
      std::sort(partner_factors.begin(), partner_factors.end(),
                [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
      Expr partner = partner_factors.size() == 1
                         ? partner_factors[0]
                         : raw(Kind::Product, std::move(partner_factors));
      auto pit = terms.find(partner);
      if (pit == terms.end()) continue;
      Rational c1 = it->second, c2 = pit->second;
      std::vector<Expr> rest;
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (static_cast<int>(i) != sin_idx) rest.push_back(factors[i]);
      Expr base_mono = rest.empty() ? Expr(1)
                       : rest.size() == 1 ? rest[0]
                                          : raw(Kind::Product, std::move(rest));
      terms.erase(pit);
      terms.erase(it);
      auto bump = [&](const Expr& m, const Rational& c) {
        if (c.is_zero()) return;
        auto jt = terms.find(m);
        if (jt == terms.end())
          terms.emplace(m, c);
        else {
          jt->second = jt->second + c;
          if (jt->second.is_zero()) terms.erase(jt);
        }
      };
      bump(base_mono, c2);
      bump(mono, c1 - c2);
      changed = true;
      break;
    }
  }
}

inline Expr Expr::pow_number(const Rational& r, const Rational& e) {
  if (e.is_integer()) {
    if (!e.num().fits_longlong()) throw Error("exponent too large");
    return Expr(r.pow_int(e.num().to_longlong()));
  }
  if (r.is_zero()) {
    if (e.is_negative()) throw Error("negative power of zero");
    return Expr(0);
  }
  // split integer part: r^e = r^w * r^f with 0 <= f < 1
  BigInt w = e.floor();
  Rational f = e - Rational(w);
  if (!w.fits_longlong()) throw Error("exponent too large");
  Rational out = r.pow_int(w.to_longlong());
  if (!f.num().fits_longlong() || !f.den().fits_longlong())
    throw Error("exponent too large");
  long long pf = f.num().to_longlong(), df = f.den().to_longlong();
  Rational m = r;
  if (r.is_negative()) {
    if (df % 2 == 0) throw Error("fractional power of negative number");
    if (pf % 2 != 0) out = -out;
    m = -r;
  }
  // m^(pf/df) for positive m = n/d: extract what is exact, keep one integer
  // radicand under a 1/df power
  auto root_of_int = [&](const BigInt& n, long long p) {
    Rational rat(1);
    BigInt radicand(1);
    BigInt rest = n;
    for (long long prime = 2;
         prime <= 9973 && BigInt(prime) * BigInt(prime) <= rest;
         prime += (prime == 2 ? 1 : 2)) {
      long long count = 0;
      while (true) {
        BigInt q, rem;
        BigInt::divmod(rest, BigInt(prime), q, rem);
        if (!rem.is_zero()) break;
        rest = q;
        ++count;
      }
      if (count == 0) continue;
      long long total = count * p;
      long long ipart = total / df, frac = total % df;
      if (ipart) rat = rat * Rational(BigInt(prime).pow(ipart));
      if (frac) radicand = radicand * BigInt(prime).pow(frac);
    }
    if (!rest.is_one()) {
      BigInt root;
      if (rest.nth_root(static_cast<unsigned>(df), root)) {
        rat = rat * Rational(root.pow(p));
      } else {
        long long ipart = p / df, frac = p % df;
        if (ipart) rat = rat * Rational(rest.pow(ipart));
        if (frac) radicand = radicand * rest.pow(frac);
      }
    }
    return std::pair<Rational, BigInt>(rat, radicand);
  };
  auto [nrat, nrad] = root_of_int(m.num(), pf);
  // d^(-pf/df) = d^((df-pf)/df) / d
  auto [drat, drad] = root_of_int(m.den(), df - pf);
  Rational coeff = out * nrat * drat / Rational(m.den());
  BigInt radicand = nrad * drad;
  if (radicand.is_one()) return Expr(coeff);
  Expr radical = raw(Kind::Power, {Expr(Rational(radicand))}, Rational(1, df));
  if (coeff.is_one()) return radical;
  return raw(Kind::Product, {Expr(coeff), radical});
}

inline Expr Expr::pow(const Expr& b, const Rational& e) {
  if (e.is_zero()) {
    if (b.is_zero_literal()) throw Error("zero raised to zero power");
    return Expr(1);
  }
  if (e.is_one()) return b;
  switch (b.kind()) {
    case Kind::Number:
      return pow_number(b.number(), e);
    case Kind::Exp:
      return exp(product({Expr(e), b.arg()}));
    case Kind::Power: {
      bool safe = e.is_integer() || !b.exponent().is_integer() ||
                  b.base().known_positive();
      if (safe) return pow(b.base(), b.exponent() * e);
      return raw(Kind::Power, {b}, e);
    }
    case Kind::Product: {
      if (e.is_integer()) {
        std::vector<Expr> fs;
        for (const auto& k : b.kids()) fs.push_back(pow(k, e));
        return product(std::move(fs));
      }
      std::vector<Expr> pos, rest;
      for (const auto& k : b.kids())
        (k.known_positive() ? pos : rest).push_back(k);
      if (pos.empty()) return raw(Kind::Power, {b}, e);
      std::vector<Expr> fs;
      for (const auto& k : pos) fs.push_back(pow(k, e));
      if (!rest.empty()) {
        Expr grouped = rest.size() == 1 ? rest[0] : product(rest);
        fs.push_back(grouped.kind() == Kind::Power || grouped.is_number() ||
                             grouped.kind() == Kind::Exp
                         ? pow(grouped, e)
                         : raw(Kind::Power, {grouped}, e));
      }
      return product(std::move(fs));
    }
    case Kind::Sum: {
      if (e.is_integer() && !e.is_negative()) {
        if (!e.num().fits_longlong()) throw Error("exponent too large");
        long long k = e.num().to_longlong();
        Expr acc(1);
        for (long long i = 0; i < k; ++i) acc = product({acc, b});
        return acc;
      }
      return raw(Kind::Power, {b}, e);
    }
    default:
      return raw(Kind::Power, {b}, e);
  }
}

inline Expr Expr::product(std::vector<Expr> in) {
  Rational coeff(1);
  std::map<Expr, Rational, Less> acc;  // base -> accumulated exponent
  std::vector<Expr> exp_args;
  std::vector<Expr> sums;
  std::vector<Expr> queue = std::move(in);
  std::vector<Expr> factors;  // finished canonical atoms

  auto enqueue_decomposed = [&](const Expr& e) {
    switch (e.kind()) {
      case Kind::Number:
        coeff = coeff * e.number();
        break;
      case Kind::Product:
        for (const auto& k : e.kids()) queue.push_back(k);
        break;
      case Kind::Exp:
        exp_args.push_back(e.arg());
        break;
      case Kind::Sum:
        sums.push_back(e);
        break;
      default:
        queue.push_back(e);
        break;
    }
  };

  for (int guard = 0; guard < 1000; ++guard) {
    while (!queue.empty()) {
      Expr e = queue.back();
      queue.pop_back();
      switch (e.kind()) {
        case Kind::Number:
          coeff = coeff * e.number();
          break;
        case Kind::Product:
          for (const auto& k : e.kids()) queue.push_back(k);
          break;
        case Kind::Exp:
          exp_args.push_back(e.arg());
          break;
        case Kind::Sum:
          sums.push_back(e);
          break;
        case Kind::Power: {
          auto it = acc.find(e.base());
          if (it == acc.end())
            acc.emplace(e.base(), e.exponent());
          else {
            it->second = it->second + e.exponent();
            if (it->second.is_zero()) acc.erase(it);
          }
          break;
        }
        default: {
          auto it = acc.find(e);
          if (it == acc.end())
            acc.emplace(e, Rational(1));
          else {
            it->second = it->second + Rational(1);
            if (it->second.is_zero()) acc.erase(it);
          }
          break;
        }
      }
    }
    if (coeff.is_zero()) return Expr(0);
    // realize accumulated powers; anything that does not stay an atom is
    // re-decomposed and the loop runs again
    bool redo = false;
    for (const auto& [b, q] : acc) {
      Expr f = pow(b, q);
      if (f.kind() == Kind::Power &&
          (f.base() == b && f.exponent() == q)) {
        factors.push_back(f);
      } else if (q.is_one() && f == b && f.kind() != Kind::Sum &&
                 f.kind() != Kind::Product && f.kind() != Kind::Number &&
                 f.kind() != Kind::Exp) {
        factors.push_back(f);
      } else {
        enqueue_decomposed(f);
        redo = true;
      }
    }
    acc.clear();
    // fold the collected exp arguments once the multiplicative part is stable
    if (!redo && !exp_args.empty()) {
      Expr ex = exp(sum(std::move(exp_args)));
      exp_args.clear();
      if (ex.kind() == Kind::Exp) {
        factors.push_back(ex);
      } else {
        enqueue_decomposed(ex);
        redo = !ex.is_number();
      }
    }
    if (!redo && queue.empty()) break;
    if (redo) {
      // re-feed finished factors so exponent merging stays global
      for (const auto& f : factors) queue.push_back(f);
      factors.clear();
    }
  }
  if (coeff.is_zero()) return Expr(0);

  if (!sums.empty()) {
    std::vector<Expr> monos = factors;
    std::sort(monos.begin(), monos.end(),
              [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
    Expr seed;
    if (monos.empty())
      seed = Expr(coeff);
    else if (coeff.is_one() && monos.size() == 1)
      seed = monos[0];
    else {
      std::vector<Expr> kids;
      if (!coeff.is_one()) kids.push_back(Expr(coeff));
      for (auto& f : monos) kids.push_back(f);
      seed = kids.size() == 1 ? kids[0] : raw(Kind::Product, std::move(kids));
    }
    std::vector<Expr> terms{seed};
    for (const auto& s : sums) {
      std::vector<Expr> next;
      next.reserve(terms.size() * s.kids().size());
      for (const auto& t : terms)
        for (const auto& u : s.kids()) next.push_back(product({t, u}));
      terms = std::move(next);
    }
    return sum(std::move(terms));
  }

  std::sort(factors.begin(), factors.end(),
            [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
  if (factors.empty()) return Expr(coeff);
  if (coeff.is_one() && factors.size() == 1) return factors[0];
  std::vector<Expr> kids;
  if (!coeff.is_one()) kids.push_back(Expr(coeff));
  for (auto& f : factors) kids.push_back(f);
  if (kids.size() == 1) return kids[0];
  return raw(Kind::Product, std::move(kids));
}

inline Expr Expr::exp(const Expr& a) {
  if (a.is_zero_literal()) return Expr(1);
  if (a.kind() == Kind::Log) return a.arg();
  // exp(q log u + rest) = u^q exp(rest)
  std::vector<Expr> terms =
      a.kind() == Kind::Sum ? a.kids() : std::vector<Expr>{a};
  std::vector<Expr> factors, rest;
  for (const auto& t : terms) {
    auto [c, mono] = split_coeff(t);
    if (mono.kind() == Kind::Log)
      factors.push_back(pow(mono.arg(), c));
    else
      rest.push_back(t);
  }
  if (factors.empty()) return raw(Kind::Exp, {a});
  if (!rest.empty()) {
    Expr r = sum(std::move(rest));
    factors.push_back(r.is_zero_literal() ? Expr(1) : raw(Kind::Exp, {r}));
  }
  return product(std::move(factors));
}

inline Expr Expr::log(const Expr& a) {
  if (a.is_one_literal()) return Expr(0);
  if (a.kind() == Kind::Exp) return a.arg();
  if (a.is_number() && !(a.number() > Rational(0)))
    throw Error("log of non-positive constant");
  return raw(Kind::Log, {a});
}

inline Expr Expr::sin(const Expr& a) {
  if (a.is_zero_literal()) return Expr(0);
  if (leading_negative(a)) return -raw(Kind::Sin, {-a});
  return raw(Kind::Sin, {a});
}

inline Expr Expr::cos(const Expr& a) {
  if (a.is_zero_literal()) return Expr(1);
  if (leading_negative(a)) return raw(Kind::Cos, {-a});
  return raw(Kind::Cos, {a});
}

// ---------------------------------------------------------------------------
// printing

inline std::string Expr::str() const {
  switch (kind()) {
    case Kind::Number:
      return number().str();
    case Kind::Symbol:
      return symbol_name();
    case Kind::Exp:
      return "exp(" + arg().str() + ")";
    case Kind::Log:
      return "log(" + arg().str() + ")";
    case Kind::Sin:
      return "sin(" + arg().str() + ")";
    case Kind::Cos:
      return "cos(" + arg().str() + ")";
    case Kind::Power: {
      std::string bs = base().str();
      bool atom = base().kind() == Kind::Symbol || base().kind() == Kind::Exp ||
                  base().kind() == Kind::Log || base().kind() == Kind::Sin ||
                  base().kind() == Kind::Cos ||
                  (base().is_number() && base().number().is_integer() &&
                   !base().number().is_negative());
      if (!atom) bs = "(" + bs + ")";
      std::string es = exponent().str();
      if (!(exponent().is_integer() && !exponent().is_negative()))
        es = "(" + es + ")";
      return bs + "^" + es;
    }
    case Kind::Product: {
      auto [c, mono] = split_coeff(*this);
      std::string out;
      if (c == Rational(-1))
        out = "-";
      else if (!c.is_one()) {
        out = c.str();
        if (!c.is_integer() || c.is_negative()) out = "(" + out + ")";
        out += "*";
      }
      std::vector<Expr> fs =
          mono.kind() == Kind::Product ? mono.kids() : std::vector<Expr>{mono};
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += "*";
        std::string s = fs[i].str();
        if (fs[i].kind() == Kind::Sum) s = "(" + s + ")";
        out += s;
      }
      return out;
    }
    case Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < kids().size(); ++i) {
        if (i == 0) {
          out = kids()[i].str();
          continue;
        }
        auto [c, mono] = split_coeff(kids()[i]);
        if (c.is_negative())
          out += " - " + rebuild_term(-c, mono).str();
        else
          out += " + " + kids()[i].str();
      }
      return out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// symbolic zero decision

namespace detail {

/// Rewrites cos(u)^(2m+s) factors to (1 - sin(u)^2)^m cos(u)^s across a
/// canonical expression. Used only inside the zero test.
inline Expr eliminate_cos_squares(const Expr& e) {
  auto term_pass = [](const Expr& term) -> Expr {
    std::vector<Expr> fs = term.kind() == Kind::Product
                               ? term.kids()
                               : std::vector<Expr>{term};
    std::vector<Expr> out;
    bool changed = false;
    for (const auto& f : fs) {
      auto [b, q] = Expr::as_power(f);
      if (b.kind() == Kind::Cos && q.is_integer() && q >= Rational(2) &&
          q.num().fits_longlong()) {
        long long qq = q.num().to_longlong();
        long long m = qq / 2, s = qq % 2;
        Expr repl = Expr::pow(
            Expr(1) - Expr::pow(Expr::sin(b.arg()), Rational(2)), Rational(m));
        if (s) repl = repl * Expr::cos(b.arg());
        out.push_back(repl);
        changed = true;
      } else {
        out.push_back(f);
      }
    }
    if (!changed) return term;
    return Expr::product(std::move(out));
  };
  if (e.kind() != Kind::Sum) return term_pass(e);
  std::vector<Expr> terms;
  for (const auto& t : e.kids()) terms.push_back(term_pass(t));
  return Expr::sum(std::move(terms));
}

}  // namespace detail

/// Expressions are canonical by construction, so simplification is a deep
/// rebuild through the constructors: it returns a structurally equal tree,
/// which is also what makes idempotence trivial to audit.
inline Expr simplify(const Expr& e) {
  switch (e.kind()) {
    case Kind::Number:
    case Kind::Symbol:
      return e;
    case Kind::Sum: {
      std::vector<Expr> kids;
      for (const auto& k : e.kids()) kids.push_back(simplify(k));
      return Expr::sum(std::move(kids));
    }
    case Kind::Product: {
      std::vector<Expr> kids;
      for (const auto& k : e.kids()) kids.push_back(simplify(k));
      return Expr::product(std::move(kids));
    }
    case Kind::Power:
      return Expr::pow(simplify(e.base()), e.exponent());
    case Kind::Exp:
      return Expr::exp(simplify(e.arg()));
    case Kind::Log:
      return Expr::log(simplify(e.arg()));
    case Kind::Sin:
      return Expr::sin(simplify(e.arg()));
    case Kind::Cos:
      return Expr::cos(simplify(e.arg()));
  }
  return e;
}

/// Decides whether a canonical expression is identically zero on the generic
/// domain (denominators taken nonzero). A `true` answer is exact; `false`
/// may occasionally miss a radical identity.
inline bool is_zero(const Expr& e) {
  if (e.is_zero_literal()) return true;
  Expr work = detail::eliminate_cos_squares(e);
  if (work.is_zero_literal()) return true;
  if (work.kind() != Kind::Sum) return false;

  // most negative exponent per base across all terms
  std::map<Expr, Rational, Expr::Less> min_exp;
  for (const auto& t : work.kids()) {
    std::vector<Expr> fs =
        t.kind() == Kind::Product ? t.kids() : std::vector<Expr>{t};
    for (const auto& f : fs) {
      auto [b, q] = Expr::as_power(f);
      if (!q.is_negative()) continue;
      if (b.is_number()) continue;  // rational coefficients never vanish
      auto it = min_exp.find(b);
      if (it == min_exp.end())
        min_exp.emplace(b, q);
      else if (q < it->second)
        it->second = q;
    }
  }
  if (min_exp.empty()) return false;

  // clear denominators term by term so exponents merge before expansion
  std::vector<Expr> cleared_terms;
  for (const auto& t : work.kids()) {
    std::vector<Expr> fs =
        t.kind() == Kind::Product ? t.kids() : std::vector<Expr>{t};
    std::map<Expr, Rational, Expr::Less> remaining = min_exp;
    std::vector<Expr> nf;
    for (const auto& f : fs) {
      auto [b, q] = Expr::as_power(f);
      auto it = remaining.find(b);
      if (it == remaining.end()) {
        nf.push_back(f);
        continue;
      }
      BigInt k = (-it->second).floor();
      if (Rational(k) < -it->second) k = k + BigInt(1);  // ceil
      remaining.erase(it);
      Rational q2 = q + Rational(k);
      if (!q2.is_zero()) nf.push_back(Expr::pow(b, q2));
    }
    for (const auto& [b, mq] : remaining) {
      BigInt k = (-mq).floor();
      if (Rational(k) < -mq) k = k + BigInt(1);
      nf.push_back(Expr::pow(b, Rational(k)));
    }
    cleared_terms.push_back(Expr::product(std::move(nf)));
  }
  Expr cleared = Expr::sum(std::move(cleared_terms));
  cleared = detail::eliminate_cos_squares(cleared);
  return cleared.is_zero_literal();
}

}  // namespace coqe

#endif  // COQE_EXPR_HPP
