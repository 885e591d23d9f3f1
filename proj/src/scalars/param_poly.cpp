#include "covforms/scalars/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "covforms/error.hpp"

namespace covforms {

ParamPoly::ParamPoly(GaussRat c) {
  if (!c.is_zero()) terms_.push_back({0, std::move(c)});
}

ParamPoly ParamPoly::var(int slot) {
  return monomial(GaussRat(1), slot == 0 ? 1 : 0, slot == 0 ? 0 : 1);
}

ParamPoly ParamPoly::monomial(GaussRat c, unsigned e0, unsigned e1) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.push_back({pack(e0, e1), std::move(c)});
  return p;
}

ParamPoly ParamPoly::from_sorted(std::vector<Term> terms) {
  ParamPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool ParamPoly::is_real() const noexcept {
  for (const auto& t : terms_) {
    if (!t.coeff.is_real()) return false;
  }
  return true;
}

GaussRat ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].exp == 0) return terms_[0].coeff;
  return GaussRat();
}

GaussRat ParamPoly::coeff(unsigned e0, unsigned e1) const {
  std::uint32_t e = pack(e0, e1);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::uint32_t v) { return t.exp < v; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return GaussRat();
}

int ParamPoly::degree(int slot) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) {
    d = std::max<int>(d, static_cast<int>(slot == 0 ? exp0(t.exp) : exp1(t.exp)));
  }
  return d;
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(exp0(t.exp) + exp1(t.exp)));
  return d;
}

ParamPoly ParamPoly::coeff_in(int slot, unsigned d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = slot == 0 ? exp0(t.exp) : exp1(t.exp);
    if (e != d) continue;
    out.push_back({slot == 0 ? pack(0, exp1(t.exp)) : pack(exp0(t.exp), 0), t.coeff});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  return from_sorted(std::move(out));
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty()) return b;
  if (b.terms_.empty()) return a;
  std::vector<ParamPoly::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->exp < j->exp) {
      out.push_back(*i++);
    } else if (j->exp < i->exp) {
      out.push_back(*j++);
    } else {
      GaussRat c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return ParamPoly::from_sorted(std::move(out));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return ParamPoly();
  if (a.terms_.size() == 1 && a.terms_[0].exp == 0) return b.scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1 && b.terms_[0].exp == 0) return a.scaled(b.terms_[0].coeff);
  std::vector<ParamPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
  }
  std::stable_sort(prod.begin(), prod.end(),
                   [](const ParamPoly::Term& p, const ParamPoly::Term& q) { return p.exp < q.exp; });
  std::vector<ParamPoly::Term> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return ParamPoly::from_sorted(std::move(out));
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

ParamPoly ParamPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return ParamPoly();
  if (c.is_one()) return *this;
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

ParamPoly ParamPoly::shifted(unsigned e0, unsigned e1) const {
  ParamPoly r = *this;
  std::uint32_t add = pack(e0, e1);
  for (auto& t : r.terms_) t.exp += add;
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

GaussRat ParamPoly::evaluate(const GaussRat& v0, const GaussRat& v1) const {
  GaussRat acc;
  for (const auto& t : terms_) {
    GaussRat m = t.coeff;
    for (unsigned k = 0; k < exp0(t.exp); ++k) m *= v0;
    for (unsigned k = 0; k < exp1(t.exp); ++k) m *= v1;
    acc += m;
  }
  return acc;
}

ParamPoly ParamPoly::compose(const ParamPoly& f0, const ParamPoly& f1) const {
  if (terms_.empty()) return ParamPoly();
  std::vector<ParamPoly> p0{ParamPoly(1)};
  std::vector<ParamPoly> p1{ParamPoly(1)};
  ParamPoly acc;
  for (const auto& t : terms_) {
    unsigned a = exp0(t.exp);
    unsigned b = exp1(t.exp);
    while (p0.size() <= a) p0.push_back(p0.back() * f0);
    while (p1.size() <= b) p1.push_back(p1.back() * f1);
    acc += (p0[a] * p1[b]).scaled(t.coeff);
  }
  return acc;
}

ParamPoly ParamPoly::swap_params() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({pack(exp1(t.exp), exp0(t.exp)), t.coeff});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  return from_sorted(std::move(out));
}

namespace {

// Splits a coefficient into (is_negative, magnitude text) so that sums can
// be printed as "a - b" instead of "a + -b".
std::pair<bool, std::string> coeff_parts(const GaussRat& c) {
  if (c.im.is_zero()) return {c.re.sign() < 0, (c.re.sign() < 0 ? -c.re : c.re).to_string()};
  if (c.re.is_zero()) {
    Rational m = c.im.sign() < 0 ? -c.im : c.im;
    return {c.im.sign() < 0, m.is_one() ? "i" : m.to_string() + "*i"};
  }
  return {false, c.to_string()};
}

std::string monomial_text(std::uint32_t e, const ParamNames& names) {
  std::string out;
  auto add = [&](unsigned d, const std::string& name) {
    if (d == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (d > 1) out += "^" + std::to_string(d);
  };
  add(ParamPoly::exp0(e), names[0]);
  add(ParamPoly::exp1(e), names[1]);
  return out;
}

}  // namespace

std::string ParamPoly::to_string(const ParamNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [neg, mag] = coeff_parts(it->coeff);
    std::string mono = monomial_text(it->exp, names);
    std::string body;
    if (mono.empty()) {
      body = mag;
    } else if (mag == "1") {
      body = mono;
    } else {
      body = mag + "*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const ParamNames& names) : text_(text), names_(names) {}

  ParamPoly run() {
    ParamPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("parameter polynomial '" + text_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamPoly expr() {
    ParamPoly acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ParamPoly term() {
    ParamPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        ParamPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(GaussRat(1) / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  ParamPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  ParamPoly power() {
    ParamPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  ParamPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ParamPoly(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (name == names_[0]) return ParamPoly::var(0);
      if (name == names_[1]) return ParamPoly::var(1);
      if (name == "i") return ParamPoly(GaussRat::i());
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  const ParamNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(const std::string& text, const ParamNames& names) {
  return PolyParser(text, names).run();
}

std::size_t ParamPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.exp;
    h = h * 1000003u ^ t.coeff.hash();
  }
  return h;
}

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw InvalidScalar("polynomial division by zero");
  if (a.is_zero()) return ParamPoly();
  if (b.is_constant()) return a.scaled(GaussRat(1) / b.constant_term());
  const auto& lb = b.leading();
  unsigned b0 = ParamPoly::exp0(lb.exp);
  unsigned b1 = ParamPoly::exp1(lb.exp);
  ParamPoly rem = a;
  ParamPoly quot;
  while (!rem.is_zero()) {
    const auto& lr = rem.leading();
    unsigned r0 = ParamPoly::exp0(lr.exp);
    unsigned r1 = ParamPoly::exp1(lr.exp);
    if (r0 < b0 || r1 < b1) return std::nullopt;
    ParamPoly q = ParamPoly::monomial(lr.coeff / lb.coeff, r0 - b0, r1 - b1);
    rem -= b * q;
    quot += q;
  }
  return quot;
}

namespace {

ParamPoly make_monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(GaussRat(1) / p.leading().coeff);
}

// Euclid in Q(i)[p_slot] for polynomials that do not involve the other
// parameter.
ParamPoly gcd_univariate(ParamPoly a, ParamPoly b, int slot) {
  while (!b.is_zero()) {
    int db = b.degree(slot);
    GaussRat lb = b.leading().coeff;
    while (!a.is_zero() && a.degree(slot) >= db) {
      int da = a.degree(slot);
      GaussRat q = a.leading().coeff / lb;
      unsigned sh = static_cast<unsigned>(da - db);
      a -= b.shifted(slot == 0 ? sh : 0, slot == 0 ? 0 : sh).scaled(q);
    }
    // Monic remainders keep the rational coefficients from blowing up.
    if (!a.is_zero()) a = make_monic(a);
    std::swap(a, b);
  }
  return make_monic(a);
}

// Content with respect to p0: gcd of the p1-polynomial coefficients.
ParamPoly content0(const ParamPoly& p) {
  ParamPoly g;
  for (int d = p.degree(0); d >= 0; --d) {
    ParamPoly c = p.coeff_in(0, static_cast<unsigned>(d));
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd_univariate(g, c, 1);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly primitive0(const ParamPoly& p) {
  ParamPoly c = content0(p);
  if (c.is_one()) return p;
  return *divide_exact(p, c);
}

// Pseudo-remainder of a by b in (Q(i)[p1])[p0]: lc(b)^(deg a - deg b + 1) a
// reduced modulo b.
ParamPoly prem0(ParamPoly a, const ParamPoly& b) {
  int db = b.degree(0);
  ParamPoly lb = b.coeff_in(0, static_cast<unsigned>(db));
  int e = a.degree(0) - db + 1;
  while (!a.is_zero() && a.degree(0) >= db) {
    int da = a.degree(0);
    ParamPoly la = a.coeff_in(0, static_cast<unsigned>(da));
    a = lb * a - (la * b).shifted(static_cast<unsigned>(da - db), 0);
    --e;
  }
  return e > 0 ? a * lb.pow(static_cast<unsigned>(e)) : a;
}

// True when a and b (primitive with respect to p0, positive p0-degree) are
// coprime, shown by specializing p1 to an integer where the leading
// p0-coefficient of a does not vanish: a common factor of positive p0-degree
// keeps that degree there. False means "undecided".
bool coprime_by_specialization(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly la = a.coeff_in(0, static_cast<unsigned>(a.degree(0)));
  for (long long v : {1, -1, 2, -2, 3, -3, 5, -5, 7, -7}) {
    GaussRat t0(v);
    if (la.evaluate(GaussRat(0), t0).is_zero()) continue;
    ParamPoly as = a.compose(ParamPoly::var(0), ParamPoly(t0));
    ParamPoly bs = b.compose(ParamPoly::var(0), ParamPoly(t0));
    if (bs.is_zero()) return false;
    return gcd_univariate(as, bs, 0).degree(0) == 0;
  }
  return false;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a.degree(0) == 0 && b.degree(0) == 0) return gcd_univariate(a, b, 1);
  if (a.degree(1) == 0 && b.degree(1) == 0) return gcd_univariate(a, b, 0);
  ParamPoly ca = content0(a);
  ParamPoly cb = content0(b);
  ParamPoly c = gcd_univariate(ca, cb, 1);
  ParamPoly pa = ca.is_one() ? a : *divide_exact(a, ca);
  ParamPoly pb = cb.is_one() ? b : *divide_exact(b, cb);
  if (pa.degree(0) < pb.degree(0)) std::swap(pa, pb);
  ParamPoly g;
  if (pb.degree(0) == 0 || coprime_by_specialization(pa, pb)) {
    g = ParamPoly(1);
  } else {
    // Subresultant remainder sequence: the divisions by sg * sh^delta are
    // exact and keep the coefficients in Q(i)[p1] from growing.
    ParamPoly sg(1), sh(1);
    while (true) {
      int delta = pa.degree(0) - pb.degree(0);
      ParamPoly r = prem0(pa, pb);
      if (r.is_zero()) {
        g = pb;
        break;
      }
      if (r.degree(0) == 0) {
        g = ParamPoly(1);
        break;
      }
      pa = std::move(pb);
      pb = *divide_exact(r, sg * sh.pow(static_cast<unsigned>(delta)));
      sg = pa.coeff_in(0, static_cast<unsigned>(pa.degree(0)));
      if (delta == 1) {
        sh = sg;
      } else if (delta > 1) {
        sh = *divide_exact(sg.pow(static_cast<unsigned>(delta)), sh.pow(static_cast<unsigned>(delta - 1)));
      }
    }
  }
  return make_monic(c * primitive0(g));
}

}  // namespace covforms
