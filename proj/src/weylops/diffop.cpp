#include "covforms/weylops/diffop.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "covforms/error.hpp"

namespace covforms::weyl {

bool operator<(const OpKey& a, const OpKey& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  if (a.dx != b.dx) return a.dx < b.dx;
  if (a.dy != b.dy) return a.dy < b.dy;
  if (a.xo != b.xo) return a.xo < b.xo;
  if (a.xi != b.xi) return a.xi < b.xi;
  if (a.yo != b.yo) return a.yo < b.yo;
  return a.yi < b.yi;
}

int OpKey::order() const {
  int r = 0;
  for (int j = 0; j < kMaxDim; ++j) r += dx[j] + dy[j];
  return r;
}

std::size_t OpKeyHash::operator()(const OpKey& k) const noexcept {
  std::uint64_t w[5];
  std::memcpy(w, &k, sizeof(w));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t v : w) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
  }
  return static_cast<std::size_t>(h);
}

namespace {

struct Shard {
  std::mutex mu;
  std::unordered_set<OpKey, OpKeyHash> keys;
};

constexpr std::size_t kShards = 16;

std::array<Shard, kShards>& shards() {
  static std::array<Shard, kShards> table;
  return table;
}

}  // namespace

const OpKey* TermTable::intern(const OpKey& k) {
  std::size_t h = OpKeyHash{}(k);
  Shard& s = shards()[(h >> 7) % kShards];
  std::lock_guard<std::mutex> lock(s.mu);
  // unordered_set nodes never move, so the address stays valid for the
  // lifetime of the process.
  return &*s.keys.insert(k).first;
}

std::size_t TermTable::size() {
  std::size_t total = 0;
  for (auto& s : shards()) {
    std::lock_guard<std::mutex> lock(s.mu);
    total += s.keys.size();
  }
  return total;
}

DiffOp::DiffOp(int n, VarSet vars, Bideg src, Bideg tgt) : n_(n), vars_(vars), src_(src), tgt_(tgt) {
  if (n < 1 || n > kMaxDim) {
    throw DimensionMismatch("operator dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDim) + "]");
  }
}

int DiffOp::order() const {
  int r = 0;
  for (const auto& t : terms_) r = std::max(r, t.key->order());
  return r;
}

bool DiffOp::is_real() const {
  for (const auto& t : terms_) {
    if (!t.coeff.is_real()) return false;
  }
  return true;
}

ParamScalar DiffOp::coeff(const OpKey& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, const OpKey& v) { return *t.key < v; });
  if (it != terms_.end() && *it->key == k) return it->coeff;
  return ParamScalar();
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

void require_same_space(const DiffOp& a, const DiffOp& b, const char* what) {
  if (!a.same_space(b)) throw DegreeError(std::string("operators act between different spaces in ") + what);
}

}  // namespace

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  require_same_space(*this, o, "sum");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->key == j->key) {
      ParamScalar c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->key, std::move(c)});
      ++i;
      ++j;
    } else if (*i->key < *j->key) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, terms_.end());
  out.insert(out.end(), j, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp DiffOp::scaled(const ParamScalar& c) const {
  DiffOp r(n_, vars_, src_, tgt_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.key, t.coeff * c});
  return r;
}

DiffOp DiffOp::map_coeffs(const std::function<ParamScalar(const ParamScalar&)>& f) const {
  DiffOp r(n_, vars_, src_, tgt_);
  for (const auto& t : terms_) {
    ParamScalar c = f(t.coeff);
    if (!c.is_zero()) r.terms_.push_back({t.key, std::move(c)});
  }
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (!a.same_space(b) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

void DiffOpBuilder::add(const OpKey& k, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(k, c);
  if (!inserted) it->second += c;
}

void DiffOpBuilder::add(const DiffOp& o, const ParamScalar& scale) {
  if (!o.same_space(op_)) throw DegreeError("builder receives an operator between different spaces");
  if (scale.is_zero()) return;
  for (const auto& t : o.terms()) add(*t.key, scale.is_one() ? t.coeff : t.coeff * scale);
}

DiffOp DiffOpBuilder::finish() {
  DiffOp out = op_;
  out.terms_.reserve(acc_.size());
  for (auto& [k, c] : acc_) {
    if (c.is_zero()) continue;
    out.terms_.push_back({TermTable::intern(k), std::move(c)});
  }
  acc_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const DiffOp::Term& a, const DiffOp::Term& b) { return *a.key < *b.key; });
  return out;
}

std::string key_text(const OpKey& k, int n, VarSet vars) {
  std::ostringstream os;
  auto mono = [&](const Exps& e, const char* name) {
    for (int j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      os << name << (j + 1);
      if (e[j] > 1) os << "^" << int(e[j]);
      os << " ";
    }
  };
  mono(k.x, "x");
  if (vars == VarSet::XY) mono(k.y, "y");
  mono(k.dx, "dx");
  if (vars == VarSet::XY) mono(k.dy, "dy");
  os << "E[" << exterior::mask_label(k.xo) << "<-" << exterior::mask_label(k.xi) << "]";
  if (k.yo || k.yi || vars == VarSet::XY) {
    os << "(x)E[" << exterior::mask_label(k.yo) << "<-" << exterior::mask_label(k.yi) << "]";
  }
  return os.str();
}

std::string diff_summary(const DiffOp& a, const DiffOp& b, std::size_t max_terms, const ParamNames& names) {
  if (!a.same_space(b)) return "operators act between different spaces";
  DiffOp d = a - b;
  if (d.is_zero()) return {};
  std::ostringstream os;
  os << d.size() << " differing terms; first:";
  for (std::size_t i = 0; i < std::min(max_terms, d.size()); ++i) {
    const auto& t = d.terms()[i];
    os << " [" << key_text(*t.key, a.dim(), a.vars()) << ": lhs " << a.coeff(*t.key).to_string(names) << ", rhs "
       << b.coeff(*t.key).to_string(names) << "]";
  }
  return os.str();
}

}  // namespace covforms::weyl
