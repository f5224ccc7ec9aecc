#include "fsn/rational.hpp"

#include <cassert>

namespace fsn::exactq {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InputError("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw InputError("zero denominator in rational \"" + std::string(text) + "\"");
  }
  if (negative) {
    n = -n;
  }
  return make_rational(n, d);
}

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += to_string(v[i]);
  }
  return out + ")";
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) {
  return q < 0 ? Rational(-q) : q;
}

Vector zero_vector(std::size_t n) {
  return Vector(n, Rational(0));
}

Vector unit_vector(std::size_t n, std::size_t i) {
  assert(i < n);
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
  }
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
  }
  return r;
}

Vector scale(const Rational& a, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = a * v[i];
  }
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

Rational l1_norm(const Vector& v) {
  Rational s(0);
  for (const auto& x : v) {
    s += abs(x);
  }
  return s;
}

}  // namespace fsn::exactq
