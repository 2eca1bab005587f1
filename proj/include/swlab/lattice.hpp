#pragma once

// Characters of Res_{F_q/F_p} GL_2, its (extended affine) Weyl group and the
// p-dot action. A character is a vector of f integer pairs (a_i, b_i); the
// fundamental weight omega^(i) is (1,0) in coordinate i and eta = sum omega^(i).

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swlab/error.hpp"

namespace swlab {

using Int = std::int64_t;

class Params {
 public:
  Params(Int p, int f);

  Int p() const { return p_; }
  int f() const { return f_; }
  Int q() const { return q_; }
  // p^f - 1, the order of the central residue group.
  Int modulus() const { return q_ - 1; }
  // p^i mod (p^f - 1)
  Int p_power(int i) const { return powers_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Params& a, const Params& b) {
    return a.p_ == b.p_ && a.f_ == b.f_;
  }

 private:
  Int p_;
  int f_;
  Int q_;
  std::vector<Int> powers_;
};

bool is_prime(Int n);

struct Pair {
  Int a = 0;
  Int b = 0;
  auto operator<=>(const Pair&) const = default;
};

struct Weight {
  std::vector<Pair> coords;

  Weight() = default;
  explicit Weight(std::vector<Pair> c) : coords(std::move(c)) {}

  static Weight zero(int f) { return Weight(std::vector<Pair>(static_cast<std::size_t>(f))); }
  static Weight eta(int f) { return Weight(std::vector<Pair>(static_cast<std::size_t>(f), Pair{1, 0})); }
  // (1,0) in each coordinate whose bit is set.
  static Weight fundamental(int f, std::uint32_t mask);
  // The central character det in coordinate i, (1,1)^(i).
  static Weight central(int f, int i);

  int size() const { return static_cast<int>(coords.size()); }
  const Pair& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  Pair& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight x, const Weight& y) { return x += y; }
  friend Weight operator-(Weight x, const Weight& y) { return x -= y; }
  friend Weight operator-(Weight x);
  friend Weight operator*(Int k, Weight x);

  auto operator<=>(const Weight&) const = default;
};

// Element sum c_i omega^(i) of the weight lattice of the derived group.
struct LambdaWElement {
  std::vector<Int> coeffs;

  LambdaWElement() = default;
  explicit LambdaWElement(std::vector<Int> c) : coeffs(std::move(c)) {}
  static LambdaWElement zero(int f) { return LambdaWElement(std::vector<Int>(static_cast<std::size_t>(f), 0)); }
  static LambdaWElement basis(int f, int i, Int sign = 1);

  int size() const { return static_cast<int>(coeffs.size()); }
  Int operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }

  LambdaWElement& operator+=(const LambdaWElement& o);
  LambdaWElement& operator-=(const LambdaWElement& o);
  friend LambdaWElement operator+(LambdaWElement x, const LambdaWElement& y) { return x += y; }
  friend LambdaWElement operator-(LambdaWElement x, const LambdaWElement& y) { return x -= y; }

  auto operator<=>(const LambdaWElement&) const = default;
};

// W = S_2^f as a bitmask; bit i set means w_0 in coordinate i.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(int f, std::uint32_t flags);

  static WeylElement identity(int f) { return WeylElement(f, 0); }
  static WeylElement longest(int f) { return WeylElement(f, (f >= 32) ? ~0u : ((1u << f) - 1u)); }

  int size() const { return f_; }
  std::uint32_t flags() const { return flags_; }
  bool flag(int i) const { return ((flags_ >> i) & 1u) != 0; }

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const { return *this; }

  Weight act(const Weight& w) const;
  LambdaWElement act(const LambdaWElement& w) const;

  auto operator<=>(const WeylElement&) const = default;

 private:
  int f_ = 0;
  std::uint32_t flags_ = 0;
};

// t_lambda * w, translation on the left.
struct ExtAffineElement {
  Weight translation;
  WeylElement weyl;

  static ExtAffineElement identity(int f) { return {Weight::zero(f), WeylElement::identity(f)}; }
  static ExtAffineElement translation_by(const Weight& t) { return {t, WeylElement::identity(t.size())}; }
  // w * t_nu = t_{w(nu)} * w
  static ExtAffineElement from_right_translation(const WeylElement& w, const Weight& nu);

  ExtAffineElement operator*(const ExtAffineElement& o) const;
  ExtAffineElement inverse() const;

  auto operator<=>(const ExtAffineElement&) const = default;
};

// Complete invariant of X*(T) / (p - pi) X^0(T): the pairing vector together
// with sum b_i p^i mod (p^f - 1). Defined for every character.
struct QuotientClass {
  std::vector<Int> pairings;
  Int d = 0;
  auto operator<=>(const QuotientClass&) const = default;
};

// The isomorphism class of F(lambda) for a p-restricted lambda.
struct SerreWeightClass {
  std::vector<Int> r;
  Int d = 0;
  auto operator<=>(const SerreWeightClass&) const = default;
};

Int pairing(const Weight& w, int i);
std::vector<Int> pairings(const Weight& w);

// Cyclic shift: pi omega^(i) = omega^(i+1).
Weight frobenius(const Weight& w);
Weight frobenius_inverse(const Weight& w);

Weight p_dot(const Params& params, const ExtAffineElement& g, const Weight& w);

bool is_deep(const Params& params, const Weight& w, Int n);
bool is_generic_char(const Params& params, const Weight& w);
bool is_regular(const Params& params, const Weight& w);
bool is_restricted(const Params& params, const Weight& w);

Int central_residue(const Params& params, const Weight& w);
QuotientClass quotient_class(const Params& params, const Weight& w);
SerreWeightClass serre_class(const Params& params, const Weight& w);
// A p-restricted representative: b_0 = d, all other b_i = 0.
Weight lift(const Params& params, const SerreWeightClass& c);
Int dim_serre(const SerreWeightClass& c);
bool is_regular(const Params& params, const SerreWeightClass& c);

// w_0 t_{-eta} and its inverse t_eta w_0.
ExtAffineElement herzig_element(int f);
SerreWeightClass herzig_reflect(const Params& params, const SerreWeightClass& c);
SerreWeightClass herzig_reflect_inverse(const Params& params, const SerreWeightClass& c);

bool stabilizes_base_alcove(const ExtAffineElement& g);

// Text encodings shared by every CLI surface: "4,0" or "3,1;2,0" for weights,
// a string over {e,s} for Weyl elements.
Weight parse_weight(const std::string& text, int f);
std::string format_weight(const Weight& w);
WeylElement parse_weyl(const std::string& text, int f);
std::string format_weyl(const WeylElement& w);
std::string format_class(const SerreWeightClass& c);

}  // namespace swlab
