#include "cusps/field.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace cusps {

namespace {
constexpr int kSupported[] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
}

bool is_supported_field(int d) {
  return std::find(std::begin(kSupported), std::end(kSupported), d) != std::end(kSupported);
}

void require_supported_field(int d) {
  if (!is_supported_field(d))
    fail(errc::bad_input, "unsupported field discriminant d=" + std::to_string(d),
         {{"d", d}});
}

bool field_one_mod4(int d) { return ((d % 4) + 4) % 4 == 1; }

Int rat_floor(const Rat& r) {
  Int n = rat_num(r), q = rat_den(r);
  Int f = n / q;
  if (f * q > n) --f;  // round toward minus infinity
  return f;
}

Int int_sqrt_floor(const Int& v) {
  if (v < 0) fail(errc::internal, "int_sqrt_floor of negative value");
  return boost::multiprecision::sqrt(v);
}

FieldElem::FieldElem(Rat x, Rat y, int d) : x_(std::move(x)), y_(std::move(y)), d_(d) {
  if (y_ != 0 && d_ == 0) fail(errc::internal, "irrational element needs a field");
  normalize();
}

FieldElem FieldElem::sqrt_d(int d) { return FieldElem(Rat(0), Rat(1), d); }

FieldElem FieldElem::omega(int d) {
  require_supported_field(d);
  if (field_one_mod4(d)) return FieldElem(Rat(1, 2), Rat(1, 2), d);
  return sqrt_d(d);
}

int FieldElem::merged_d(const FieldElem& a, const FieldElem& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0) return a.d_;
  if (a.d_ != b.d_)
    fail(errc::internal, "mixed-field arithmetic",
         {{"d_lhs", a.d_}, {"d_rhs", b.d_}});
  return a.d_;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  d_ = merged_d(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  d_ = merged_d(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  int d = merged_d(*this, o);
  Rat nx = x_ * o.x_ + Rat(d) * y_ * o.y_;
  Rat ny = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  d_ = d;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (o.is_zero()) fail(errc::internal, "division by zero field element");
  FieldElem num = *this * o.conj();
  Rat n = o.norm();
  x_ = num.x_ / n;
  y_ = num.y_ / n;
  d_ = num.d_;
  normalize();
  return *this;
}

bool is_integral(const FieldElem& z, int d) {
  require_supported_field(d);
  if (z.d() != 0 && z.d() != d) return false;
  if (!field_one_mod4(d)) return rat_is_int(z.x()) && rat_is_int(z.y());
  Rat v = 2 * z.y();
  Rat u = z.x() - z.y();
  return rat_is_int(v) && rat_is_int(u);
}

FieldElem inv_different_gen(int d) {
  FieldElem s = FieldElem::sqrt_d(d);
  FieldElem two_or_one = field_one_mod4(d) ? FieldElem(1) : FieldElem(2);
  return FieldElem(1) / (two_or_one * s);
}

bool in_inv_different(const FieldElem& z, int d) {
  FieldElem scale = field_one_mod4(d) ? FieldElem::sqrt_d(d)
                                      : FieldElem(2) * FieldElem::sqrt_d(d);
  return is_integral(z * scale, d);
}

std::pair<Int, Int> integer_coords(const FieldElem& z, int d) {
  if (!is_integral(z, d))
    fail(errc::internal, "integer_coords of non-integral element", {{"z", to_string(z)}});
  if (!field_one_mod4(d)) return {rat_num(z.x()), rat_num(z.y())};
  Rat v = 2 * z.y();
  Rat u = z.x() - z.y();
  return {rat_num(u), rat_num(v)};
}

FieldElem from_integer_coords(const Int& u, const Int& v, int d) {
  return FieldElem(Rat(u)) + FieldElem(Rat(v)) * FieldElem::omega(d);
}

std::pair<Rat, Rat> omega_coords(const FieldElem& z, int d) {
  if (field_one_mod4(d)) return {z.x() - z.y(), 2 * z.y()};
  return {z.x(), z.y()};
}

const std::vector<FieldElem>& units(int d) {
  require_supported_field(d);
  static const std::vector<FieldElem> gaussian = {
      FieldElem(1), FieldElem(-1), FieldElem::sqrt_d(-1), -FieldElem::sqrt_d(-1)};
  static const std::vector<FieldElem> eisenstein = [] {
    FieldElem w6(Rat(1, 2), Rat(1, 2), -3);  // primitive sixth root of unity
    std::vector<FieldElem> u = {FieldElem(1), FieldElem(-1)};
    u.push_back(w6);
    u.push_back(-w6);
    u.push_back(w6 * w6);
    u.push_back(-(w6 * w6));
    return u;
  }();
  static const std::vector<FieldElem> generic = {FieldElem(1), FieldElem(-1)};
  if (d == -1) return gaussian;
  if (d == -3) return eisenstein;
  return generic;
}

FieldElem canonical_associate(const FieldElem& z, int d) {
  if (z.is_zero()) return FieldElem(0);
  bool have = false;
  FieldElem best;
  std::pair<Int, Int> best_key;
  int best_sign = 0;
  for (const FieldElem& u : units(d)) {
    FieldElem cand = z * u;
    if (!is_integral(cand, d)) continue;  // associates of integral z stay integral
    auto [cu, cv] = integer_coords(cand, d);
    int sign = cu > 0 ? 1 : (cu == 0 ? 0 : -1);
    auto key = std::make_pair(cu, cv);
    if (!have || sign > best_sign || (sign == best_sign && key > best_key)) {
      have = true;
      best = cand;
      best_key = key;
      best_sign = sign;
    }
  }
  if (!have)
    fail(errc::internal, "canonical_associate of non-integral element",
         {{"z", to_string(z)}});
  return best;
}

std::vector<FieldElem> norm_bounded_elements(const Rat& bound, int d) {
  require_supported_field(d);
  std::vector<FieldElem> out;
  if (bound < 0) return out;
  Int nb = rat_floor(bound);
  if (nb < 1) return out;
  // Norm of u + v*omega: (u + v/2)^2 + |d| v^2/4 if d = 1 mod 4, else u^2 + |d| v^2.
  Int ad = -Int(d);
  bool one4 = field_one_mod4(d);
  Int vmax = one4 ? int_sqrt_floor(4 * nb / ad) : int_sqrt_floor(nb / ad);
  for (Int v = -vmax; v <= vmax; ++v) {
    if (one4) {
      // With w = 2u + v the norm is (w^2 + |d| v^2)/4.
      Int rem = 4 * nb - ad * v * v;
      if (rem < 0) continue;
      Int wmax = int_sqrt_floor(rem);
      for (Int w = -wmax; w <= wmax; ++w) {
        if ((w - v) % 2 != 0) continue;
        Int u = (w - v) / 2;
        FieldElem z = from_integer_coords(u, v, d);
        if (!z.is_zero()) out.push_back(z);
      }
    } else {
      Int rem = nb - ad * v * v;
      if (rem < 0) continue;
      Int umax = int_sqrt_floor(rem);
      for (Int u = -umax; u <= umax; ++u) {
        FieldElem z = from_integer_coords(u, v, d);
        if (!z.is_zero()) out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FieldElem& a, const FieldElem& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return a < b;
  });
  return out;
}

bool of_divides(const FieldElem& a, const FieldElem& b, int d) {
  if (a.is_zero()) return b.is_zero();
  return is_integral(b / a, d);
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

std::string to_string(const FieldElem& z) {
  if (z.is_rational()) return to_string(z.x());
  std::string s;
  if (z.x() != 0) s += to_string(z.x());
  std::string ypart;
  if (z.y() == 1)
    ypart = "";
  else if (z.y() == -1)
    ypart = "-";
  else
    ypart = to_string(z.y()) + "*";
  ypart += "sqrt(" + std::to_string(z.d()) + ")";
  if (!s.empty() && ypart[0] != '-') s += "+";
  return s + ypart;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& z) { return os << to_string(z); }

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
};

Int parse_int_digits(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
  if (c.i == start) fail(errc::bad_input, "expected digits in '" + c.s + "'");
  return Int(c.s.substr(start, c.i - start));
}

// number := digits [ '/' digits ]
Rat parse_unsigned_rat(Cursor& c) {
  Int num = parse_int_digits(c);
  c.skip_ws();
  if (c.peek() == '/') {
    ++c.i;
    Int den = parse_int_digits(c);
    if (den == 0) fail(errc::bad_input, "zero denominator in '" + c.s + "'");
    return Rat(num, den);
  }
  return Rat(num);
}

// term := number | [number '*'] 'sqrt(' ['-'] digits ')'
// Returns the term value; sets *term_d when a sqrt appears.
Rat parse_term(Cursor& c, bool* is_sqrt, int* term_d) {
  c.skip_ws();
  *is_sqrt = false;
  Rat coef(1);
  bool saw_coef = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coef = parse_unsigned_rat(c);
    saw_coef = true;
    c.skip_ws();
    if (c.peek() == '*') {
      ++c.i;
      c.skip_ws();
    } else {
      return coef;  // plain rational term
    }
  }
  if (c.s.compare(c.i, 5, "sqrt(") != 0)
    fail(errc::bad_input, "expected sqrt(...) in '" + c.s + "'");
  c.i += 5;
  c.skip_ws();
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.i;
  }
  Int dval = parse_int_digits(c);
  c.skip_ws();
  if (c.peek() != ')') fail(errc::bad_input, "missing ')' in '" + c.s + "'");
  ++c.i;
  if (neg) dval = -dval;
  if (dval < -1000000 || dval > 1000000)
    fail(errc::bad_input, "sqrt argument out of range in '" + c.s + "'");
  *is_sqrt = true;
  *term_d = static_cast<int>(dval);
  (void)saw_coef;
  return coef;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  FieldElem z = parse_field_elem(text, 0);
  if (!z.is_rational()) fail(errc::bad_input, "expected a rational: '" + text + "'");
  return z.x();
}

FieldElem parse_field_elem(const std::string& text, int expect_d) {
  Cursor c{text};
  Rat x(0), y(0);
  int d = 0;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.i;
    } else if (!first) {
      fail(errc::bad_input, "expected '+' or '-' in '" + text + "'");
    }
    bool is_sqrt = false;
    int term_d = 0;
    Rat v = parse_term(c, &is_sqrt, &term_d);
    if (sign < 0) v = -v;
    if (is_sqrt) {
      if (d != 0 && term_d != d)
        fail(errc::bad_input, "conflicting sqrt arguments in '" + text + "'");
      d = term_d;
      y += v;
    } else {
      x += v;
    }
    first = false;
  }
  if (first) fail(errc::bad_input, "empty field element");
  if (expect_d != 0 && d != 0 && d != expect_d)
    fail(errc::bad_input, "element of wrong field in '" + text + "'",
         {{"expected_d", expect_d}, {"got_d", d}});
  if (d == 0 && y != 0) fail(errc::internal, "parser lost sqrt argument");
  if (y == 0) return FieldElem(x);
  return FieldElem(x, y, d);
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_input: return "bad_input";
    case errc::not_hermitian: return "not_hermitian";
    case errc::not_integral: return "not_integral";
    case errc::degenerate: return "degenerate";
    case errc::spec_too_small: return "spec_too_small";
    case errc::unclassifiable_pair: return "unclassifiable_pair";
    case errc::imprimitive_image: return "imprimitive_image";
    case errc::unknown_case: return "unknown_case";
    case errc::size_cap: return "size_cap";
    case errc::internal: return "internal";
  }
  return "internal";
}

int errc_exit_code(errc c) {
  switch (c) {
    case errc::unclassifiable_pair:
    case errc::internal:
      return 2;
    default:
      return 1;
  }
}

}  // namespace cusps
