#ifndef COQE_EVAL_HPP
#define COQE_EVAL_HPP

#include <cmath>
#include <map>
#include <string>
#include <variant>

#include "coqe/expr.hpp"

namespace coqe {

/// Numeric value that stays exact as long as the computation allows it.
class Value {
 public:
  Value() : exact_(true), q_(0), d_(0) {}
  Value(const Rational& q) : exact_(true), q_(q), d_(q.to_double()) {}  // NOLINT
  Value(double d) : exact_(false), q_(0), d_(d) {}                      // NOLINT

  bool exact() const { return exact_; }
  const Rational& rational() const {
    if (!exact_) throw Error("value is not exact");
    return q_;
  }
  double as_double() const { return exact_ ? q_.to_double() : d_; }
  bool is_zero() const { return exact_ ? q_.is_zero() : d_ == 0.0; }

  friend Value operator+(const Value& a, const Value& b) {
    if (a.exact_ && b.exact_) return Value(a.q_ + b.q_);
    return Value(a.as_double() + b.as_double());
  }
  friend Value operator*(const Value& a, const Value& b) {
    if (a.exact_ && b.exact_) return Value(a.q_ * b.q_);
    return Value(a.as_double() * b.as_double());
  }

 private:
  bool exact_;
  Rational q_;
  double d_;
};

using Bindings = std::map<std::string, Value>;

/// Evaluates a canonical expression. Exact rational results are preserved
/// until a transcendental kernel or an inexact root forces a double.
inline Value eval_at(const Expr& e, const Bindings& b) {
  switch (e.kind()) {
    case Kind::Number:
      return Value(e.number());
    case Kind::Symbol: {
      auto it = b.find(e.symbol_name());
      if (it == b.end()) throw Error("unbound symbol '" + e.symbol_name() + "'");
      const Value& v = it->second;
      if (e.symbol_nonzero() && v.is_zero())
        throw Error("symbol '" + e.symbol_name() + "' is flagged nonzero but bound to 0");
      if (e.symbol_positive() && v.as_double() <= 0.0)
        throw Error("symbol '" + e.symbol_name() +
                    "' is flagged positive but bound to a non-positive value");
      return v;
    }
    case Kind::Sum: {
      Value acc(Rational(0));
      for (const auto& k : e.kids()) acc = acc + eval_at(k, b);
      return acc;
    }
    case Kind::Product: {
      Value acc(Rational(1));
      for (const auto& k : e.kids()) acc = acc * eval_at(k, b);
      return acc;
    }
    case Kind::Power: {
      Value base = eval_at(e.base(), b);
      const Rational& q = e.exponent();
      if (base.is_zero()) {
        if (q.is_negative()) throw Error("division by zero in evaluation");
        return Value(Rational(0));
      }
      if (base.exact()) {
        if (q.is_integer() && q.num().fits_longlong())
          return Value(base.rational().pow_int(q.num().to_longlong()));
        // exact fractional power when both parts have exact roots
        if (q.num().fits_longlong() && q.den().fits_longlong()) {
          const Rational& r = base.rational();
          if (!r.is_negative()) {
            BigInt nr, dr;
            unsigned d = static_cast<unsigned>(q.den().to_longlong());
            if (r.num().nth_root(d, nr) && r.den().nth_root(d, dr))
              return Value(Rational(nr, dr).pow_int(q.num().to_longlong()));
          }
        }
      }
      double bd = base.as_double();
      double qd = q.to_double();
      if (bd < 0 && !q.is_integer())
        throw Error("fractional power of negative value in evaluation");
      double r = std::pow(bd, qd);
      if (!std::isfinite(r)) throw Error("non-finite result in evaluation");
      return Value(r);
    }
    case Kind::Exp: {
      Value a = eval_at(e.arg(), b);
      if (a.exact() && a.rational().is_zero()) return Value(Rational(1));
      return Value(std::exp(a.as_double()));
    }
    case Kind::Log: {
      Value a = eval_at(e.arg(), b);
      if (a.as_double() <= 0) throw Error("log of non-positive value in evaluation");
      if (a.exact() && a.rational().is_one()) return Value(Rational(0));
      return Value(std::log(a.as_double()));
    }
    case Kind::Sin: {
      Value a = eval_at(e.arg(), b);
      if (a.is_zero()) return Value(Rational(0));
      return Value(std::sin(a.as_double()));
    }
    case Kind::Cos: {
      Value a = eval_at(e.arg(), b);
      if (a.is_zero()) return Value(Rational(1));
      return Value(std::cos(a.as_double()));
    }
  }
  throw Error("unreachable expression kind");
}

inline double eval_double(const Expr& e, const Bindings& b) {
  return eval_at(e, b).as_double();
}

}  // namespace coqe

#endif  // COQE_EVAL_HPP
