#include "ckdim/surd.hpp"

#include <sstream>
#include <stdexcept>

namespace ckdim {

namespace {

// Sign of u + v*sqrt(e), e squarefree positive, by squaring once.
int sign_linear_surd(const Rat& u, const Rat& v, long e) {
  const int su = rat_sign(u), sv = rat_sign(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // opposite signs: |u| vs |v|*sqrt(e)
  const Rat uu = u * u;
  const Rat vv = v * v * e;
  if (uu == vv) return 0;
  return uu > vv ? su : sv;
}

}  // namespace

QuadSurd::QuadSurd(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) throw std::invalid_argument("QuadSurd: radicand must be nonnegative");
  if (d_ == 0 && b_ != 0) throw std::invalid_argument("QuadSurd: d = 0 forces b = 0");
  if (d_ == 1) {  // sqrt(1) is rational
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else if (d_ > 1) {
    long e = squarefree_part(d_);
    if (e != d_) {
      long s = 1;
      while (s * s * e != d_) ++s;
      b_ *= s;
      d_ = e;
    }
    if (d_ == 1) {  // the radicand was a perfect square
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
    if (b_ == 0) d_ = 0;
  }
}

int QuadSurd::sign() const { return sign_linear_surd(a_, b_, d_ == 0 ? 1 : d_); }

QuadSurd QuadSurd::operator+(const QuadSurd& other) const {
  if (d_ != 0 && other.d_ != 0 && d_ != other.d_)
    throw std::invalid_argument("QuadSurd: cannot add surds over different radicands");
  long d = d_ != 0 ? d_ : other.d_;
  return QuadSurd(a_ + other.a_, b_ + other.b_, d);
}

QuadSurd QuadSurd::operator*(const QuadSurd& other) const {
  if (d_ != 0 && other.d_ != 0 && d_ != other.d_)
    throw std::invalid_argument("QuadSurd: cannot multiply surds over different radicands");
  long d = d_ != 0 ? d_ : other.d_;
  return QuadSurd(a_ * other.a_ + b_ * other.b_ * d, a_ * other.b_ + b_ * other.a_, d);
}

std::string QuadSurd::str() const {
  std::ostringstream os;
  if (d_ == 0) {
    os << a_;
    return os.str();
  }
  if (a_ != 0) os << a_;
  if (b_ > 0 && a_ != 0) os << "+";
  if (b_ == -1)
    os << "-";
  else if (b_ != 1)
    os << b_ << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

int surd_compare(const QuadSurd& x, const QuadSurd& y) {
  if (x.radicand() == y.radicand() || x.is_rational() || y.is_rational()) {
    return (x - y).sign();
  }
  // a1 + b1 sqrt(D1) vs a2 + b2 sqrt(D2), D1 != D2 both irrational
  const Rat s = x.rational_part() - y.rational_part();
  const Rat& b1 = x.surd_coeff();
  const Rat& b2 = y.surd_coeff();
  const long d1 = x.radicand(), d2 = y.radicand();
  // sign of u = b1 sqrt(D1) - b2 sqrt(D2)
  int su;
  {
    const int s1 = rat_sign(b1), s2 = rat_sign(b2);
    if (s1 == 0)
      su = -s2;
    else if (s2 == 0)
      su = s1;
    else if (s1 != s2)
      su = s1;
    else {
      const Rat lhs = b1 * b1 * d1;
      const Rat rhs = b2 * b2 * d2;
      su = lhs == rhs ? 0 : (lhs > rhs ? s1 : -s1);
    }
  }
  const int ss = rat_sign(s);
  if (ss == 0) return su;
  if (su == 0 || su == ss) return ss;
  // s and u have opposite signs: compare s^2 vs u^2.
  // u^2 = b1^2 D1 + b2^2 D2 - 2 b1 b2 sqrt(D1 D2)
  long e = squarefree_part(d1 * d2);
  long sq = 1;
  while (sq * sq * e != d1 * d2) ++sq;
  const Rat diff_rat = s * s - (b1 * b1 * d1 + b2 * b2 * d2);
  const Rat diff_surd = 2 * b1 * b2 * Rat(sq);
  const int cmp = sign_linear_surd(diff_rat, diff_surd, e);  // sign of s^2 - u^2
  if (cmp == 0) return 0;
  return cmp > 0 ? ss : su;
}

QuadSurd surd_pow(const QuadSurd& base, unsigned long exp) {
  QuadSurd result(Rat(1));
  QuadSurd b = base;
  while (exp > 0) {
    if (exp & 1) result = result * b;
    b = b * b;
    exp >>= 1;
  }
  return result;
}

QuadSurd surface_growth_base(long g) {
  if (g < 1) throw std::invalid_argument("surface_growth_base: need g >= 1");
  return QuadSurd(Rat(g), Rat(1), g * g - 1);
}

}  // namespace ckdim
