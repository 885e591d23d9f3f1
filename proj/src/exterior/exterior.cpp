#include "covforms/exterior/exterior.hpp"

#include <random>
#include <sstream>

#include "covforms/error.hpp"

namespace covforms::exterior {

std::vector<Mask> basis(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (degree_of(m) == k) out.push_back(m);
  }
  return out;
}

std::string mask_label(Mask m) {
  if (m == 0) return "1";
  std::string out = "e_{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!(m & (Mask{1} << j))) continue;
    if (!first) out += ",";
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

Multivector::Multivector(int n) : n_(n) {
  if (n < 1 || n > kMaxExteriorDim) throw DimensionMismatch("exterior dimension out of range: " + std::to_string(n));
}

Multivector Multivector::basis_element(int n, Mask m, ParamScalar c) {
  Multivector v(n);
  v.add_term(m, c);
  return v;
}

ParamScalar Multivector::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar() : it->second;
}

Multivector Multivector::part(int k) const {
  Multivector out(n_);
  for (const auto& [m, c] : terms_) {
    if (degree_of(m) == k) out.terms_.emplace(m, c);
  }
  return out;
}

void Multivector::add_term(Mask m, const ParamScalar& c) {
  if (c.is_zero()) return;
  if (m >> n_) throw DimensionMismatch("basis index beyond dimension");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (o.n_ != n_) throw DimensionMismatch("multivector dimensions differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Multivector Multivector::operator-() const { return scaled(ParamScalar(-1)); }

Multivector Multivector::scaled(const ParamScalar& c) const {
  Multivector out(n_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")" << mask_label(m);
    first = false;
  }
  return os.str();
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of multivectors in different dimensions");
  Multivector out(a.dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sg = wedge_sign(ma, mb);
      if (sg != 0) out.add_term(ma | mb, (ca * cb).scaled(GaussRat(sg)));
    }
  }
  return out;
}

namespace {

void check_vector(const Vector& v, int n) {
  if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector length differs from dimension");
}

}  // namespace

Multivector interior(const Vector& v, const Multivector& a) {
  check_vector(v, a.dim());
  Multivector out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    for (int j = 0; j < a.dim(); ++j) {
      if (v[j].is_zero() || !(m & (Mask{1} << j))) continue;
      out.add_term(m & ~(Mask{1} << j), (c * v[j]).scaled(GaussRat(sign_before(m, j))));
    }
  }
  return out;
}

Multivector exterior_mul(const Vector& v, const Multivector& a) {
  check_vector(v, a.dim());
  Multivector out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    for (int j = 0; j < a.dim(); ++j) {
      if (v[j].is_zero() || (m & (Mask{1} << j))) continue;
      out.add_term(m | (Mask{1} << j), (c * v[j]).scaled(GaussRat(sign_before(m, j))));
    }
  }
  return out;
}

namespace {

void check_degree(int n, int k) {
  // Degrees outside [0, n] denote the zero space; they appear as
  // intermediate targets such as d on top-degree forms.
  if (k < -n - 2 || k > 2 * n + 2) throw DegreeError("form degree " + std::to_string(k) + " out of range for n=" + std::to_string(n));
}

}  // namespace

Endo::Endo(int n, int src, int tgt) : n_(n), factors_(1), src_{src, 0}, tgt_{tgt, 0} {
  if (n < 1 || n > kMaxExteriorDim) throw DimensionMismatch("exterior dimension out of range");
  check_degree(n, src);
  check_degree(n, tgt);
}

Endo::Endo(int n, int src0, int tgt0, int src1, int tgt1)
    : n_(n), factors_(2), src_{src0, src1}, tgt_{tgt0, tgt1} {
  if (n < 1 || n > kMaxExteriorDim) throw DimensionMismatch("exterior dimension out of range");
  for (int d : {src0, tgt0, src1, tgt1}) check_degree(n, d);
}

Endo Endo::identity(int n, int k) { return scalar(n, k, ParamScalar(1)); }

Endo Endo::scalar(int n, int k, const ParamScalar& c) {
  Endo e(n, k, k);
  for (Mask m : basis(n, k)) e.add_entry(key(m, m), c);
  return e;
}

ParamScalar Endo::entry(Mask out, Mask in) const {
  auto it = entries_.find(key(out, in));
  return it == entries_.end() ? ParamScalar() : it->second;
}

void Endo::add_entry(std::uint64_t k, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void Endo::check_compatible(const Endo& o) const {
  if (o.n_ != n_ || o.factors_ != factors_ || o.src_[0] != src_[0] || o.tgt_[0] != tgt_[0] ||
      o.src_[1] != src_[1] || o.tgt_[1] != tgt_[1]) {
    throw DegreeError("endomorphisms act between different spaces");
  }
}

Endo& Endo::operator+=(const Endo& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.entries_) add_entry(k, c);
  return *this;
}

Endo Endo::scaled(const ParamScalar& c) const {
  Endo out = *this;
  out.entries_.clear();
  if (c.is_zero()) return out;
  for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * c);
  return out;
}

bool operator==(const Endo& a, const Endo& b) {
  return a.n_ == b.n_ && a.factors_ == b.factors_ && a.src_[0] == b.src_[0] && a.tgt_[0] == b.tgt_[0] &&
         a.src_[1] == b.src_[1] && a.tgt_[1] == b.tgt_[1] && a.entries_ == b.entries_;
}

namespace {

// Output/input mask pair of factor f inside a packed key.
Mask out_mask(std::uint64_t k, int f) { return static_cast<Mask>((k >> (32 * f)) & 0xffff); }
Mask in_mask(std::uint64_t k, int f) { return static_cast<Mask>((k >> (32 * f + 16)) & 0xffff); }

Endo letter_endo(const Letter& l, int n, int k) {
  bool eps = l.kind == Letter::Kind::Eps;
  Endo e(n, k, eps ? k + 1 : k - 1);
  Vector v = l.vec;
  if (v.empty()) {
    if (l.index < 0 || l.index >= n) throw DimensionMismatch("basis index out of range");
    v.assign(n, ParamScalar());
    v[l.index] = ParamScalar(1);
  }
  check_vector(v, n);
  for (Mask m : basis(n, k)) {
    for (int j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      bool has = m & (Mask{1} << j);
      if (eps == has) continue;
      Mask out = eps ? (m | (Mask{1} << j)) : (m & ~(Mask{1} << j));
      e.add_entry(Endo::key(out, m), v[j].scaled(GaussRat(sign_before(m, j))));
    }
  }
  return e;
}

}  // namespace

Endo endo_of(const Word& word, int n, int k) {
  Endo acc = Endo::identity(n, k);
  int deg = k;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Endo l = letter_endo(*it, n, deg);
    deg = l.tgt();
    acc = compose(l, acc);
  }
  return acc;
}

Endo compose(const Endo& a, const Endo& b) {
  if (a.dim() != b.dim() || a.factors() != b.factors()) throw DimensionMismatch("cannot compose endomorphisms");
  for (int f = 0; f < a.factors(); ++f) {
    if (a.src(f) != b.tgt(f)) throw DegreeError("degree mismatch in endomorphism composition");
  }
  Endo out = a.factors() == 1 ? Endo(a.dim(), b.src(0), a.tgt(0))
                              : Endo(a.dim(), b.src(0), a.tgt(0), b.src(1), a.tgt(1));
  std::multimap<std::uint64_t, const std::pair<const std::uint64_t, ParamScalar>*> by_input;
  for (const auto& e : a.entries()) {
    std::uint64_t in = std::uint64_t{in_mask(e.first, 0)} | (std::uint64_t{in_mask(e.first, 1)} << 32);
    by_input.emplace(in, &e);
  }
  for (const auto& [kb, cb] : b.entries()) {
    std::uint64_t mid = std::uint64_t{out_mask(kb, 0)} | (std::uint64_t{out_mask(kb, 1)} << 32);
    auto range = by_input.equal_range(mid);
    for (auto it = range.first; it != range.second; ++it) {
      std::uint64_t ka = it->second->first;
      std::uint64_t k = Endo::key(out_mask(ka, 0), in_mask(kb, 0), out_mask(ka, 1), in_mask(kb, 1));
      out.add_entry(k, it->second->second * cb);
    }
  }
  return out;
}

Endo tensor(const Endo& a, const Endo& b) {
  if (a.dim() != b.dim() || a.factors() != 1 || b.factors() != 1) {
    throw DimensionMismatch("tensor product needs two single-factor endomorphisms of equal dimension");
  }
  Endo out(a.dim(), a.src(), a.tgt(), b.src(), b.tgt());
  for (const auto& [ka, ca] : a.entries()) {
    for (const auto& [kb, cb] : b.entries()) {
      out.add_entry(ka | (kb << 32), ca * cb);
    }
  }
  return out;
}

Multivector apply(const Endo& e, const Multivector& v) {
  if (e.factors() != 1 || e.dim() != v.dim()) throw DimensionMismatch("cannot apply endomorphism");
  Multivector out(v.dim());
  for (const auto& [k, c] : e.entries()) {
    Mask in = in_mask(k, 0);
    ParamScalar x = v.coeff(in);
    if (!x.is_zero()) out.add_term(out_mask(k, 0), c * x);
  }
  for (const auto& [m, c] : v.terms()) {
    if (degree_of(m) != e.src()) throw DegreeError("multivector degree does not match endomorphism source");
  }
  return out;
}

namespace {

Vector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Vector v;
  for (int j = 0; j < n; ++j) v.emplace_back(Rational(num(rng), den(rng)));
  return v;
}

Multivector random_form(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<int> num(-9, 9);
  Multivector v(n);
  for (Mask m : basis(n, k)) v.add_term(m, ParamScalar(num(rng)));
  return v;
}

ParamScalar dot(const Vector& x, const Vector& y) {
  ParamScalar acc;
  for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * y[j];
  return acc;
}

// Accumulates per-identity pass/fail over the random trials, keeping the
// first counterexample.
struct Tally {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string vec_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + v[j].to_string();
  return s + ")";
}

}  // namespace

Report verify_exterior_relations(int n, int trials, std::uint64_t seed) {
  Report rep;
  rep.name = "exterior relations n=" + std::to_string(n);
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 7919u);
  for (int k = 0; k <= n; ++k) {
    std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
    Endo id = Endo::identity(n, k);

    Endo sum_ei(n, k, k);
    Endo sum_ie(n, k, k);
    for (int j = 0; j < n; ++j) {
      sum_ei += endo_of({Letter::eps(j), Letter::iota(j)}, n, k);
      sum_ie += endo_of({Letter::iota(j), Letter::eps(j)}, n, k);
    }
    rep.add("rank identity sum eps_j iota_j = k Id" + tag, sum_ei == Endo::scalar(n, k, ParamScalar(k)));
    rep.add("rank identity sum iota_j eps_j = (n-k) Id" + tag, sum_ie == Endo::scalar(n, k, ParamScalar(n - k)));
    bool anti_basis = true;
    for (int j = 0; j < n; ++j) {
      Endo e = endo_of({Letter::eps(j), Letter::iota(j)}, n, k) + endo_of({Letter::iota(j), Letter::eps(j)}, n, k);
      anti_basis = anti_basis && e == id;
    }
    rep.add("eps_j iota_j + iota_j eps_j = Id" + tag, anti_basis);

    Tally commi, comm, idrel, cor1, cor2, rc1, rc2, rc3, graded;
    for (int trial = 0; trial < trials; ++trial) {
      Vector x = random_vector(rng, n);
      Vector y = random_vector(rng, n);
      std::string where = "x=" + vec_text(x) + " y=" + vec_text(y);
      auto E = [&](std::initializer_list<Letter> w) { return endo_of(Word(w), n, k); };
      Letter ex = Letter::eps(x), ey = Letter::eps(y), ix = Letter::iota(x), iy = Letter::iota(y);
      ParamScalar xy = dot(x, y);
      ParamScalar xx = dot(x, x);

      commi.check((E({ix, iy}) + E({iy, ix})).is_zero(), where);
      comm.check((E({ex, ey}) + E({ey, ex})).is_zero(), where);
      idrel.check(E({ex, iy}) + E({iy, ex}) == Endo::scalar(n, k, xy), where);
      cor1.check(E({ex, iy, ex}) == E({ex}).scaled(xy), where);
      cor2.check(E({iy, ex, iy}) == E({iy}).scaled(xy), where);
      Endo ie = E({ix, ex});
      Endo ei = E({ex, ix});
      rc1.check(compose(ie, ie) == ie.scaled(xx), where);
      rc2.check(compose(ei, ei) == ei.scaled(xx), where);
      rc3.check(compose(ie, ei).is_zero(), where);

      int l = trial % (n + 1);
      Multivector w = random_form(rng, n, k);
      Multivector h = random_form(rng, n, l);
      int sg = (k * l) % 2 ? -1 : 1;
      graded.check(wedge(w, h) == wedge(h, w).scaled(ParamScalar(sg)), "l=" + std::to_string(l));
    }
    rep.add("iota_x iota_y + iota_y iota_x = 0" + tag, commi.ok, commi.detail);
    rep.add("eps_x eps_y + eps_y eps_x = 0" + tag, comm.ok, comm.detail);
    rep.add("eps_x iota_y + iota_y eps_x = <x,y> Id" + tag, idrel.ok, idrel.detail);
    rep.add("eps_x iota_y eps_x = <x,y> eps_x" + tag, cor1.ok, cor1.detail);
    rep.add("iota_y eps_x iota_y = <x,y> iota_y" + tag, cor2.ok, cor2.detail);
    rep.add("(iota_x eps_x)^2 = |x|^2 iota_x eps_x" + tag, rc1.ok, rc1.detail);
    rep.add("(eps_x iota_x)^2 = |x|^2 eps_x iota_x" + tag, rc2.ok, rc2.detail);
    rep.add("(iota_x eps_x)(eps_x iota_x) = 0" + tag, rc3.ok, rc3.detail);
    rep.add("w^h = (-1)^{kl} h^w" + tag, graded.ok, graded.detail);
  }
  return rep;
}

}  // namespace covforms::exterior
