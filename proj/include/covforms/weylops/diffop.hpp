#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "covforms/exterior/exterior.hpp"
#include "covforms/scalars/param_scalar.hpp"

namespace covforms::weyl {

using exterior::Mask;

inline constexpr int kMaxDim = 8;

// X: operators/forms in one set of variables x. XY: two sets (x, y). Both
// act on Lambda^k (x) Lambda^l; with X and l = 0 this is just Lambda^k.
enum class VarSet : std::uint8_t { X, XY };

struct Bideg {
  int k = 0;
  int l = 0;
  friend bool operator==(const Bideg& a, const Bideg& b) { return a.k == b.k && a.l == b.l; }
  friend bool operator!=(const Bideg& a, const Bideg& b) { return !(a == b); }
};

using Exps = std::array<std::uint8_t, kMaxDim>;

// c * x^x y^y dx^dx dy^dy (E_{xo,xi} (x) E_{yo,yi}); multiplications left of
// differentiations.
struct OpKey {
  Exps x{};
  Exps y{};
  Exps dx{};
  Exps dy{};
  std::uint16_t xo = 0;
  std::uint16_t xi = 0;
  std::uint16_t yo = 0;
  std::uint16_t yi = 0;

  friend bool operator==(const OpKey& a, const OpKey& b) { return std::memcmp(&a, &b, sizeof(OpKey)) == 0; }
  friend bool operator<(const OpKey& a, const OpKey& b);
  int order() const;
};
static_assert(sizeof(OpKey) == 40);

struct OpKeyHash {
  std::size_t operator()(const OpKey& k) const noexcept;
};

// Process-wide hash-consing table: every key stored in a DiffOp points into
// it, so equal keys are pointer-equal. Safe under concurrent insertion.
class TermTable {
 public:
  static const OpKey* intern(const OpKey& k);
  static std::size_t size();
};

class DiffOp {
 public:
  struct Term {
    const OpKey* key;
    ParamScalar coeff;
  };

  DiffOp(int n, VarSet vars, Bideg src, Bideg tgt);

  int dim() const noexcept { return n_; }
  VarSet vars() const noexcept { return vars_; }
  Bideg src() const noexcept { return src_; }
  Bideg tgt() const noexcept { return tgt_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  int order() const;
  bool is_real() const;
  // Coefficient of a key (zero when absent).
  ParamScalar coeff(const OpKey& k) const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp scaled(const ParamScalar& c) const;
  DiffOp map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const;
  friend bool operator==(const DiffOp& a, const DiffOp& b);
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  // Space identity check shared by +, compose and equality.
  bool same_space(const DiffOp& o) const {
    return n_ == o.n_ && vars_ == o.vars_ && src_ == o.src_ && tgt_ == o.tgt_;
  }

 private:
  friend class DiffOpBuilder;
  int n_;
  VarSet vars_;
  Bideg src_;
  Bideg tgt_;
  std::vector<Term> terms_;  // sorted by key content
};

// Accumulates terms in any order; finish() cancels, interns and sorts.
class DiffOpBuilder {
 public:
  DiffOpBuilder(int n, VarSet vars, Bideg src, Bideg tgt) : op_(n, vars, src, tgt) {}
  explicit DiffOpBuilder(const DiffOp& like) : op_(like.dim(), like.vars(), like.src(), like.tgt()) {}

  void add(const OpKey& k, const ParamScalar& c);
  void add(const DiffOp& o, const ParamScalar& scale = ParamScalar(1));
  std::size_t size() const { return acc_.size(); }
  DiffOp finish();

 private:
  DiffOp op_;
  std::unordered_map<OpKey, ParamScalar, OpKeyHash> acc_;
};

// Short human-readable rendering of a key, used in counterexample reports.
std::string key_text(const OpKey& k, int n, VarSet vars);
// Term-level difference summary: first few keys where a and b differ.
std::string diff_summary(const DiffOp& a, const DiffOp& b, std::size_t max_terms = 3,
                         const ParamNames& names = st_names());

}  // namespace covforms::weyl
