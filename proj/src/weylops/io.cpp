#include "covforms/weylops/io.hpp"

#include <cctype>
#include <sstream>

#include "covforms/error.hpp"

namespace covforms::weyl {

namespace {

nlohmann::json exps_json(const Exps& e, int n) {
  nlohmann::json a = nlohmann::json::array();
  for (int j = 0; j < n; ++j) a.push_back(int(e[j]));
  return a;
}

Exps exps_from(const nlohmann::json& a, int n, const char* what) {
  if (!a.is_array() || static_cast<int>(a.size()) != n) {
    throw ParseError(std::string("field '") + what + "' must be an array of length n");
  }
  Exps e{};
  for (int j = 0; j < n; ++j) {
    int v = a[j].get<int>();
    if (v < 0 || v > 255) throw ParseError(std::string("exponent out of range in '") + what + "'");
    e[j] = static_cast<std::uint8_t>(v);
  }
  return e;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Bideg bideg_from(const nlohmann::json& a, const char* what) {
  if (!a.is_array() || a.size() != 2) throw ParseError(std::string("field '") + what + "' must be [k, l]");
  return Bideg{a[0].get<int>(), a[1].get<int>()};
}

}  // namespace

nlohmann::json to_json(const DiffOp& op, const ParamNames& names) {
  const int n = op.dim();
  const bool xy = op.vars() == VarSet::XY;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : op.terms()) {
    const OpKey& k = *t.key;
    nlohmann::json e;
    e["coeff_num"] = t.coeff.num().to_string(names);
    e["coeff_den"] = t.coeff.den().to_string(names);
    e["alpha"] = exps_json(k.x, n);
    e["beta"] = xy ? exps_json(k.y, n) : nlohmann::json::array();
    e["gamma"] = exps_json(k.dx, n);
    e["delta"] = xy ? exps_json(k.dy, n) : nlohmann::json::array();
    e["endo"] = {k.xo, k.xi, k.yo, k.yi};
    terms.push_back(std::move(e));
  }
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = n;
  j["vars"] = xy ? "xy" : "x";
  j["source"] = {op.src().k, op.src().l};
  j["target"] = {op.tgt().k, op.tgt().l};
  j["params"] = {names[0], names[1]};
  j["terms"] = std::move(terms);
  return j;
}

DiffOp from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("operator JSON must be an object");
    int version = field(j, "schema_version").get<int>();
    if (version != kSchemaVersion) throw ParseError("unsupported schema_version " + std::to_string(version));
    int n = field(j, "n").get<int>();
    if (n < 1 || n > kMaxDim) throw ParseError("dimension out of range");
    std::string v = field(j, "vars").get<std::string>();
    if (v != "x" && v != "xy") throw ParseError("vars must be \"x\" or \"xy\"");
    VarSet vars = v == "xy" ? VarSet::XY : VarSet::X;
    Bideg src = bideg_from(field(j, "source"), "source");
    Bideg tgt = bideg_from(field(j, "target"), "target");
    ParamNames names = st_names();
    if (j.contains("params")) {
      const auto& p = j["params"];
      if (!p.is_array() || p.size() != 2) throw ParseError("params must list two names");
      names = {p[0].get<std::string>(), p[1].get<std::string>()};
    }
    DiffOpBuilder b(n, vars, src, tgt);
    const Mask limit = Mask{1} << n;
    for (const auto& t : field(j, "terms")) {
      OpKey k;
      k.x = exps_from(field(t, "alpha"), n, "alpha");
      k.dx = exps_from(field(t, "gamma"), n, "gamma");
      if (vars == VarSet::XY) {
        k.y = exps_from(field(t, "beta"), n, "beta");
        k.dy = exps_from(field(t, "delta"), n, "delta");
      } else if (!field(t, "beta").empty() || !field(t, "delta").empty()) {
        throw ParseError("y exponents given for a single-variable operator");
      }
      const auto& endo = field(t, "endo");
      if (!endo.is_array() || endo.size() != 4) throw ParseError("endo must be [xo, xi, yo, yi]");
      Mask m[4];
      for (int i = 0; i < 4; ++i) {
        m[i] = endo[i].get<Mask>();
        if (m[i] >= limit) throw ParseError("exterior mask beyond the dimension");
      }
      if (exterior::degree_of(m[0]) != tgt.k || exterior::degree_of(m[1]) != src.k ||
          exterior::degree_of(m[2]) != tgt.l || exterior::degree_of(m[3]) != src.l) {
        throw ParseError("exterior mask does not match the declared bidegrees");
      }
      k.xo = static_cast<std::uint16_t>(m[0]);
      k.xi = static_cast<std::uint16_t>(m[1]);
      k.yo = static_cast<std::uint16_t>(m[2]);
      k.yi = static_cast<std::uint16_t>(m[3]);
      ParamPoly num = ParamPoly::parse(field(t, "coeff_num").get<std::string>(), names);
      ParamPoly den = ParamPoly::parse(field(t, "coeff_den").get<std::string>(), names);
      b.add(k, ParamScalar(num, den));
    }
    return b.finish();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed operator JSON: ") + e.what());
  }
}

namespace {

std::string latex_poly(const ParamPoly& p, const ParamNames& names) {
  std::string s = p.to_string(names);
  std::string out;
  // The plain text form uses '*' and '^'; LaTeX wants juxtaposition and
  // braced exponents. Parameter names like "lambda" become commands.
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '*') {
      out += ' ';
    } else if (c == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += c;
    }
  }
  for (const char* greek : {"lambda", "mu"}) {
    std::string g = greek;
    for (std::size_t pos = out.find(g); pos != std::string::npos; pos = out.find(g, pos + g.size() + 1)) {
      if (pos > 0 && out[pos - 1] == '\\') continue;
      out.insert(pos, "\\");
    }
  }
  return out;
}

std::string latex_mask(Mask m) {
  if (m == 0) return "\\varnothing";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < 16; ++j) {
    if (!(m & (Mask{1} << j))) continue;
    if (!first) os << ",";
    first = false;
    os << (j + 1);
  }
  return os.str();
}

}  // namespace

std::string to_latex(const DiffOp& op, const ParamNames& names) {
  if (op.is_zero()) return "0";
  const int n = op.dim();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : op.terms()) {
    const OpKey& k = *t.key;
    if (!first) os << "\n  + ";
    first = false;
    os << "\\left(";
    if (t.coeff.den().is_one()) {
      os << latex_poly(t.coeff.num(), names);
    } else {
      os << "\\frac{" << latex_poly(t.coeff.num(), names) << "}{" << latex_poly(t.coeff.den(), names) << "}";
    }
    os << "\\right)";
    auto mono = [&](const Exps& e, const char* sym) {
      for (int j = 0; j < n; ++j) {
        if (!e[j]) continue;
        os << " " << sym << "_{" << (j + 1) << "}";
        if (e[j] > 1) os << "^{" << int(e[j]) << "}";
      }
    };
    mono(k.x, "x");
    mono(k.y, "y");
    auto parts = [&](const Exps& e, const char* sym) {
      for (int j = 0; j < n; ++j) {
        if (!e[j]) continue;
        os << " \\partial_{" << sym << "_{" << (j + 1) << "}}";
        if (e[j] > 1) os << "^{" << int(e[j]) << "}";
      }
    };
    parts(k.dx, "x");
    parts(k.dy, "y");
    os << " \\, E_{" << latex_mask(k.xo) << " \\leftarrow " << latex_mask(k.xi) << "}";
    if (op.vars() == VarSet::XY || k.yo || k.yi) {
      os << " \\otimes E_{" << latex_mask(k.yo) << " \\leftarrow " << latex_mask(k.yi) << "}";
    }
  }
  return os.str();
}

}  // namespace covforms::weyl
