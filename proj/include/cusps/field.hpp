#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cusps/error.hpp"

namespace cusps {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool rat_is_int(const Rat& r) { return rat_den(r) == 1; }

// Largest integer n with n <= r.
Int rat_floor(const Rat& r);
// Largest integer n >= 0 with n*n <= v; v must be >= 0.
Int int_sqrt_floor(const Int& v);

// The nine imaginary quadratic fields of class number one.
bool is_supported_field(int d);
void require_supported_field(int d);

// true iff d = 1 mod 4 (the ring of integers is Z[(1+sqrt d)/2]).
bool field_one_mod4(int d);

// An element x + y*sqrt(d) of Q(sqrt d).  d == 0 marks a plain rational,
// compatible with every field; mixed-field arithmetic is a programming error.
class FieldElem {
 public:
  FieldElem() : x_(0), y_(0), d_(0) {}
  FieldElem(int v) : x_(v), y_(0), d_(0) {}           // NOLINT(runtime/explicit)
  FieldElem(const Int& v) : x_(v), y_(0), d_(0) {}    // NOLINT(runtime/explicit)
  FieldElem(const Rat& v) : x_(v), y_(0), d_(0) {}    // NOLINT(runtime/explicit)
  FieldElem(Rat x, Rat y, int d);

  // sqrt(d) itself.
  static FieldElem sqrt_d(int d);
  // The standard module generator: sqrt(d) for d = 2,3 mod 4, (1+sqrt d)/2
  // for d = 1 mod 4.
  static FieldElem omega(int d);

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  int d() const { return d_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }

  FieldElem conj() const { return FieldElem(x_, -y_, d_); }
  Rat norm() const { return x_ * x_ - Rat(d_) * y_ * y_; }
  Rat trace() const { return 2 * x_; }

  FieldElem operator-() const { return FieldElem(-x_, -y_, d_); }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && (a.y_ == 0 || a.d_ == b.d_);
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Total order used only for deterministic output (not algebraic).
  friend bool operator<(const FieldElem& a, const FieldElem& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

 private:
  static int merged_d(const FieldElem& a, const FieldElem& b);
  void normalize() {
    if (y_ == 0) d_ = 0;
  }

  Rat x_, y_;
  int d_;
};

inline FieldElem conj(const FieldElem& z) { return z.conj(); }
inline Rat norm(const FieldElem& z) { return z.norm(); }
inline Rat trace(const FieldElem& z) { return z.trace(); }

// Membership in the ring of integers O_F.
bool is_integral(const FieldElem& z, int d);
// Membership in the inverse different (1/sqrt(d))*O_F resp. (1/(2 sqrt d))*O_F.
bool in_inv_different(const FieldElem& z, int d);
// Generator of the inverse different as an element.
FieldElem inv_different_gen(int d);

// Coordinates (u, v) with z = u + v*omega; requires is_integral.
std::pair<Int, Int> integer_coords(const FieldElem& z, int d);
FieldElem from_integer_coords(const Int& u, const Int& v, int d);
// Rational coordinates (p, q) with z = p + q*omega, for any field element.
std::pair<Rat, Rat> omega_coords(const FieldElem& z, int d);

// The unit group of O_F: {1,-1}, plus i-powers for d = -1, sixth roots for d = -3.
const std::vector<FieldElem>& units(int d);

// The unit multiple of z whose coordinate tuple (sign(u), u, v) is
// lexicographically greatest; fixes a representative per associate class.
FieldElem canonical_associate(const FieldElem& z, int d);

// All nonzero z in O_F with norm(z) <= bound, deterministically ordered.
std::vector<FieldElem> norm_bounded_elements(const Rat& bound, int d);

// Exact divisibility in O_F: a | b (a nonzero, both integral).
bool of_divides(const FieldElem& a, const FieldElem& b, int d);

std::string to_string(const Rat& r);
std::string to_string(const FieldElem& z);
std::ostream& operator<<(std::ostream& os, const FieldElem& z);

// Parses "p/q", "sqrt(d)", "3/2*sqrt(-7)", "1-1/2*sqrt(-3)", ...  Throws
// bad_input on malformed text or a sqrt argument conflicting with expect_d
// (expect_d == 0 accepts any).
FieldElem parse_field_elem(const std::string& text, int expect_d = 0);
Rat parse_rat(const std::string& text);

}  // namespace cusps
