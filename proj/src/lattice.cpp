#include "swlab/lattice.hpp"

#include <limits>
#include <sstream>

namespace swlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotRestricted: return "NotRestricted";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::CardinalityError: return "CardinalityError";
    case ErrorKind::PresentationError: return "PresentationError";
    case ErrorKind::MultiplicityError: return "MultiplicityError";
    case ErrorKind::MultiplicityViolation: return "MultiplicityViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotRestricted:
    case ErrorKind::NotRegular:
    case ErrorKind::PreconditionViolation:
      return true;
    default:
      return false;
  }
}

namespace {

Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int floor_div(Int x, Int m) {
  Int q = x / m;
  return (x % m != 0 && ((x < 0) != (m < 0))) ? q - 1 : q;
}

void require_size(int got, int want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": expected " + std::to_string(want) +
                    " coordinates, got " + std::to_string(got));
  }
}

}  // namespace

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Params::Params(Int p, int f) : p_(p), f_(f), q_(1) {
  if (!is_prime(p) || p < 5) {
    throw Error(ErrorKind::InvalidArgument, "p must be a prime >= 5, got " + std::to_string(p));
  }
  if (f < 1 || f > 16) {
    throw Error(ErrorKind::InvalidArgument, "f must lie in [1, 16], got " + std::to_string(f));
  }
  // Keep q below 2^31 so products of residues stay inside 64 bits.
  constexpr Int kLimit = Int{1} << 31;
  for (int i = 0; i < f; ++i) {
    if (q_ > kLimit / p) {
      throw Error(ErrorKind::InvalidArgument, "p^f exceeds the supported range");
    }
    q_ *= p;
  }
  powers_.resize(static_cast<std::size_t>(f));
  Int acc = 1 % modulus();
  for (int i = 0; i < f; ++i) {
    powers_[static_cast<std::size_t>(i)] = acc;
    acc = (acc * p) % modulus();
  }
}

Weight Weight::fundamental(int f, std::uint32_t mask) {
  Weight w = zero(f);
  for (int i = 0; i < f; ++i) {
    if ((mask >> i) & 1u) w[i].a = 1;
  }
  return w;
}

Weight Weight::central(int f, int i) {
  Weight w = zero(f);
  w[i] = {1, 1};
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  require_size(o.size(), size(), "weight addition");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i].a += o.coords[i].a;
    coords[i].b += o.coords[i].b;
  }
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_size(o.size(), size(), "weight subtraction");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i].a -= o.coords[i].a;
    coords[i].b -= o.coords[i].b;
  }
  return *this;
}

Weight operator-(Weight x) {
  for (auto& c : x.coords) c = {-c.a, -c.b};
  return x;
}

Weight operator*(Int k, Weight x) {
  for (auto& c : x.coords) c = {k * c.a, k * c.b};
  return x;
}

LambdaWElement LambdaWElement::basis(int f, int i, Int sign) {
  LambdaWElement w = zero(f);
  w[i] = sign;
  return w;
}

LambdaWElement& LambdaWElement::operator+=(const LambdaWElement& o) {
  require_size(o.size(), size(), "lattice addition");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

LambdaWElement& LambdaWElement::operator-=(const LambdaWElement& o) {
  require_size(o.size(), size(), "lattice subtraction");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

WeylElement::WeylElement(int f, std::uint32_t flags) : f_(f), flags_(flags) {
  if (f < 0 || f > 31 || (f < 32 && (flags >> f) != 0)) {
    throw Error(ErrorKind::InvalidArgument, "Weyl flags do not fit in f coordinates");
  }
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  require_size(o.f_, f_, "Weyl composition");
  return WeylElement(f_, flags_ ^ o.flags_);
}

Weight WeylElement::act(const Weight& w) const {
  require_size(w.size(), f_, "Weyl action");
  Weight out = w;
  for (int i = 0; i < f_; ++i) {
    if (flag(i)) std::swap(out[i].a, out[i].b);
  }
  return out;
}

LambdaWElement WeylElement::act(const LambdaWElement& w) const {
  require_size(w.size(), f_, "Weyl action");
  LambdaWElement out = w;
  for (int i = 0; i < f_; ++i) {
    if (flag(i)) out[i] = -out[i];
  }
  return out;
}

ExtAffineElement ExtAffineElement::from_right_translation(const WeylElement& w, const Weight& nu) {
  return {w.act(nu), w};
}

// (t_l v)(t_m w) = t_{l + v(m)} (v w)
ExtAffineElement ExtAffineElement::operator*(const ExtAffineElement& o) const {
  return {translation + weyl.act(o.translation), weyl * o.weyl};
}

// (t_l w)^{-1} = w^{-1} t_{-l} = t_{-w^{-1}(l)} w^{-1}
ExtAffineElement ExtAffineElement::inverse() const {
  WeylElement winv = weyl.inverse();
  return {-winv.act(translation), winv};
}

Int pairing(const Weight& w, int i) {
  if (i < 0 || i >= w.size()) {
    throw Error(ErrorKind::InvalidArgument, "coordinate index " + std::to_string(i) + " out of range");
  }
  return w[i].a - w[i].b;
}

std::vector<Int> pairings(const Weight& w) {
  std::vector<Int> out(w.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = w.coords[i].a - w.coords[i].b;
  return out;
}

Weight frobenius(const Weight& w) {
  const int f = w.size();
  Weight out = Weight::zero(f);
  for (int i = 0; i < f; ++i) out[(i + 1) % f] = w[i];
  return out;
}

Weight frobenius_inverse(const Weight& w) {
  const int f = w.size();
  Weight out = Weight::zero(f);
  for (int i = 0; i < f; ++i) out[i] = w[(i + 1) % f];
  return out;
}

// g . w = g_p (w + eta) - eta, where g_p scales the translation by p.
Weight p_dot(const Params& params, const ExtAffineElement& g, const Weight& w) {
  const int f = w.size();
  require_size(g.translation.size(), f, "p-dot action");
#ifdef SWLAB_FAULT_PDOT_SIGN
  const Int scale = -params.p();
#else
  const Int scale = params.p();
#endif
  Weight out = g.weyl.act(w + Weight::eta(f));
  out += scale * g.translation;
  out -= Weight::eta(f);
  return out;
}

bool is_deep(const Params& params, const Weight& w, Int n) {
  const Int p = params.p();
  for (int i = 0; i < w.size(); ++i) {
    const Int x = pairing(w, i) + 1;
    const Int m = floor_div(x, p);
    if (!(p * m + n < x && x < p * (m + 1) - n)) return false;
  }
  return true;
}

bool is_generic_char(const Params& params, const Weight& w) {
  for (int i = 0; i < w.size(); ++i) {
    const Int r = pairing(w, i);
    if (r < 2 || r > params.p() - 2) return false;
  }
  return true;
}

bool is_regular(const Params& params, const Weight& w) {
  for (int i = 0; i < w.size(); ++i) {
    const Int r = pairing(w, i);
    if (r < 0 || r >= params.p() - 1) return false;
  }
  return true;
}

bool is_restricted(const Params& params, const Weight& w) {
  for (int i = 0; i < w.size(); ++i) {
    const Int r = pairing(w, i);
    if (r < 0 || r > params.p() - 1) return false;
  }
  return true;
}

Int central_residue(const Params& params, const Weight& w) {
  require_size(w.size(), params.f(), "central residue");
  const Int m = params.modulus();
  Int acc = 0;
  for (int i = 0; i < w.size(); ++i) {
    acc = (acc + floor_mod(w[i].b, m) * params.p_power(i)) % m;
  }
  return acc;
}

QuotientClass quotient_class(const Params& params, const Weight& w) {
  return {pairings(w), central_residue(params, w)};
}

SerreWeightClass serre_class(const Params& params, const Weight& w) {
  require_size(w.size(), params.f(), "serre_class");
  if (!is_restricted(params, w)) {
    throw Error(ErrorKind::NotRestricted, "weight " + format_weight(w) + " is not p-restricted");
  }
  return {pairings(w), central_residue(params, w)};
}

Weight lift(const Params& params, const SerreWeightClass& c) {
  require_size(static_cast<int>(c.r.size()), params.f(), "lift");
  Weight w = Weight::zero(params.f());
  for (int i = 0; i < params.f(); ++i) w[i] = {c.r[static_cast<std::size_t>(i)], 0};
  w[0].a += c.d;
  w[0].b += c.d;
  return w;
}

Int dim_serre(const SerreWeightClass& c) {
  Int dim = 1;
  for (Int r : c.r) dim *= (r + 1);
  return dim;
}

bool is_regular(const Params& params, const SerreWeightClass& c) {
  for (Int r : c.r) {
    if (r < 0 || r >= params.p() - 1) return false;
  }
  return true;
}

ExtAffineElement herzig_element(int f) {
  return ExtAffineElement::from_right_translation(WeylElement::longest(f), -Weight::eta(f));
}

SerreWeightClass herzig_reflect(const Params& params, const SerreWeightClass& c) {
  if (!is_regular(params, c)) {
    throw Error(ErrorKind::NotRegular, "class " + format_class(c) + " is not regular");
  }
  return serre_class(params, p_dot(params, herzig_element(params.f()), lift(params, c)));
}

SerreWeightClass herzig_reflect_inverse(const Params& params, const SerreWeightClass& c) {
  if (!is_regular(params, c)) {
    throw Error(ErrorKind::NotRegular, "class " + format_class(c) + " is not regular");
  }
  return serre_class(params, p_dot(params, herzig_element(params.f()).inverse(), lift(params, c)));
}

// Per coordinate y -> p<t, alpha_i> + sign_i y must map (0, p) onto itself.
bool stabilizes_base_alcove(const ExtAffineElement& g) {
  for (int i = 0; i < g.translation.size(); ++i) {
    const Int t = pairing(g.translation, i);
    const bool flipped = g.weyl.flag(i);
    if (!((t == 0 && !flipped) || (t == 1 && flipped))) return false;
  }
  return true;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

Int parse_int(const std::string& s) {
  std::size_t pos = 0;
  std::string t;
  for (char ch : s) {
    if (ch != ' ') t.push_back(ch);
  }
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + s + "'");
  }
  if (pos != t.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + s + "'");
  return v;
}

}  // namespace

Weight parse_weight(const std::string& text, int f) {
  const auto parts = split(text, ';');
  if (static_cast<int>(parts.size()) != f) {
    throw Error(ErrorKind::InvalidArgument, "weight '" + text + "' must have " + std::to_string(f) +
                                                " ';'-separated coordinates");
  }
  Weight w = Weight::zero(f);
  for (int i = 0; i < f; ++i) {
    const auto ab = split(parts[static_cast<std::size_t>(i)], ',');
    if (ab.size() != 2) {
      throw Error(ErrorKind::InvalidArgument, "coordinate '" + parts[static_cast<std::size_t>(i)] +
                                                  "' must be a pair a,b");
    }
    w[i] = {parse_int(ab[0]), parse_int(ab[1])};
  }
  return w;
}

std::string format_weight(const Weight& w) {
  std::ostringstream out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) out << ';';
    out << w[i].a << ',' << w[i].b;
  }
  return out.str();
}

WeylElement parse_weyl(const std::string& text, int f) {
  if (static_cast<int>(text.size()) != f) {
    throw Error(ErrorKind::InvalidArgument, "Weyl element '" + text + "' must have length " + std::to_string(f));
  }
  std::uint32_t flags = 0;
  for (int i = 0; i < f; ++i) {
    const char ch = text[static_cast<std::size_t>(i)];
    if (ch == 's') {
      flags |= 1u << i;
    } else if (ch != 'e') {
      throw Error(ErrorKind::InvalidArgument, "Weyl element letters must be 'e' or 's'");
    }
  }
  return WeylElement(f, flags);
}

std::string format_weyl(const WeylElement& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) s.push_back(w.flag(i) ? 's' : 'e');
  return s;
}

std::string format_class(const SerreWeightClass& c) {
  std::ostringstream out;
  out << "r=[";
  for (std::size_t i = 0; i < c.r.size(); ++i) {
    if (i) out << ',';
    out << c.r[i];
  }
  out << "], d=" << c.d;
  return out.str();
}

}  // namespace swlab
