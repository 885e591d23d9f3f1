#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "covforms/report.hpp"
#include "covforms/scalars/param_scalar.hpp"

namespace covforms::exterior {

// Index subsets I of {0..n-1} are bitmasks; bit j stands for e_{j+1}^*.
using Mask = std::uint32_t;

inline constexpr int kMaxExteriorDim = 16;

inline int degree_of(Mask m) { return std::popcount(m); }

// (-1)^{#{i in I : i < j}}: the sign picked up when e_j^* is moved into
// position inside e_I^*.
inline int sign_before(Mask m, int j) {
  return (std::popcount(m & ((Mask{1} << j) - 1)) & 1) ? -1 : 1;
}

// All size-k subsets of {0..n-1}, in increasing bitmask order. Empty for k
// outside [0, n].
std::vector<Mask> basis(int n, int k);

// "e_{1,3}" style label, indices 1-based.
std::string mask_label(Mask m);

// Wedge of two basis monomials: e_I^* ^ e_J^* = sign * e_{I|J}^*, sign 0 when
// the subsets overlap.
int wedge_sign(Mask a, Mask b);

// Constant vector (the argument of iota_v, eps_v).
using Vector = std::vector<ParamScalar>;

class Multivector {
 public:
  explicit Multivector(int n);
  static Multivector basis_element(int n, Mask m, ParamScalar c = ParamScalar(1));

  int dim() const noexcept { return n_; }
  const std::map<Mask, ParamScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ParamScalar coeff(Mask m) const;
  Multivector part(int k) const;

  void add_term(Mask m, const ParamScalar& c);
  Multivector& operator+=(const Multivector& o);
  Multivector operator-() const;
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a += -b; }
  Multivector scaled(const ParamScalar& c) const;
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::map<Mask, ParamScalar> terms_;
};

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector interior(const Vector& v, const Multivector& a);
Multivector exterior_mul(const Vector& v, const Multivector& a);

// Letters of a word in the exterior/interior products. `vec` empty means the
// basis vector e_{index+1}; otherwise the constant vector `vec`.
struct Letter {
  enum class Kind { Eps, Iota } kind;
  int index = 0;
  Vector vec;

  static Letter eps(int j) { return {Kind::Eps, j, {}}; }
  static Letter iota(int j) { return {Kind::Iota, j, {}}; }
  static Letter eps(Vector v) { return {Kind::Eps, -1, std::move(v)}; }
  static Letter iota(Vector v) { return {Kind::Iota, -1, std::move(v)}; }
};
using Word = std::vector<Letter>;

// Linear map Lambda^{src} -> Lambda^{tgt} of R^n, or a map between
// Lambda^{k}(x)Lambda^{l} spaces when built by tensor(). Entry keys pack
// (out, in) masks per tensor factor.
class Endo {
 public:
  Endo(int n, int src, int tgt);
  Endo(int n, int src0, int tgt0, int src1, int tgt1);

  static Endo identity(int n, int k);
  static Endo scalar(int n, int k, const ParamScalar& c);

  int dim() const noexcept { return n_; }
  int factors() const noexcept { return factors_; }
  int src(int factor = 0) const { return src_[factor]; }
  int tgt(int factor = 0) const { return tgt_[factor]; }

  static std::uint64_t key(Mask out, Mask in) { return std::uint64_t{out} | (std::uint64_t{in} << 16); }
  static std::uint64_t key(Mask out0, Mask in0, Mask out1, Mask in1) {
    return key(out0, in0) | (key(out1, in1) << 32);
  }
  const std::map<std::uint64_t, ParamScalar>& entries() const noexcept { return entries_; }
  ParamScalar entry(Mask out, Mask in) const;
  void add_entry(std::uint64_t k, const ParamScalar& c);

  Endo& operator+=(const Endo& o);
  friend Endo operator+(Endo a, const Endo& b) { return a += b; }
  friend Endo operator-(Endo a, const Endo& b) { return a += b.scaled(ParamScalar(-1)); }
  Endo scaled(const ParamScalar& c) const;
  bool is_zero() const noexcept { return entries_.empty(); }
  friend bool operator==(const Endo& a, const Endo& b);

 private:
  void check_compatible(const Endo& o) const;

  int n_;
  int factors_;
  int src_[2];
  int tgt_[2];
  std::map<std::uint64_t, ParamScalar> entries_;
};

// Matrix of the word acting on Lambda^k; the rightmost letter acts first.
Endo endo_of(const Word& word, int n, int k);
Endo compose(const Endo& a, const Endo& b);
Endo tensor(const Endo& a, const Endo& b);
Multivector apply(const Endo& e, const Multivector& v);

// Elements of Lambda^k (x) Lambda^l keyed by (mask in first factor, mask in
// second factor).
using TensorMultivector = std::map<std::pair<Mask, Mask>, ParamScalar>;

// Exact checks of the exterior-algebra relations on random rational vectors
// (anticommutation, the rank identities, the ιε/ει product rules).
Report verify_exterior_relations(int n, int trials, std::uint64_t seed);

}  // namespace covforms::exterior
