#include "formsig/scenario.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace formsig {

namespace {

const RationalField qq;

// ---------------------------------------------------------------------------
// Raw parsing: sections of key = value lines, values as nested literals.

struct RawKV {
  std::string key;
  Value value;
  int line;
};

struct RawSection {
  std::string name;
  int line;
  std::vector<RawKV> entries;
};

bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class ValueParser {
 public:
  ValueParser(std::string s, int line) : s_(std::move(s)), line_(line) {}

  Value parse() {
    Value v = parse_value();
    skip_ws();
    if (pos_ != s_.size())
      throw ScenarioError(line_, "trailing characters after value: '" +
                                     s_.substr(pos_) + "'");
    return v;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
  int line_;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= s_.size()) throw ScenarioError(line_, "unexpected end of value");
    return s_[pos_];
  }

  void expect(char c) {
    if (peek() != c)
      throw ScenarioError(line_, std::string("expected '") + c + "'");
    ++pos_;
  }

  Value parse_value() {
    char c = peek();
    Value v;
    v.line = line_;
    if (c == '[') {
      ++pos_;
      Value::List list;
      skip_ws();
      if (peek() == ']') {
        ++pos_;
      } else {
        for (;;) {
          list.push_back(parse_value());
          char d = peek();
          if (d == ',') {
            ++pos_;
            continue;
          }
          expect(']');
          break;
        }
      }
      v.v = std::move(list);
      return v;
    }
    if (c == '{') {
      ++pos_;
      Value::Table table;
      skip_ws();
      if (peek() == '}') {
        ++pos_;
      } else {
        for (;;) {
          skip_ws();
          std::string key;
          while (pos_ < s_.size() && is_key_char(s_[pos_])) key += s_[pos_++];
          if (key.empty()) throw ScenarioError(line_, "expected a key in table");
          expect('=');
          table.emplace_back(std::move(key), parse_value());
          char d = peek();
          if (d == ',') {
            ++pos_;
            continue;
          }
          expect('}');
          break;
        }
      }
      v.v = std::move(table);
      return v;
    }
    if (c == '"') {
      ++pos_;
      std::string out;
      while (pos_ < s_.size() && s_[pos_] != '"') out += s_[pos_++];
      if (pos_ >= s_.size()) throw ScenarioError(line_, "unterminated string");
      ++pos_;
      v.v = std::move(out);
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Bare word, e.g. twist = identity.
      std::string word;
      while (pos_ < s_.size() && is_key_char(s_[pos_])) word += s_[pos_++];
      v.v = std::move(word);
      return v;
    }
    // Rational literal.
    std::string tok;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '/'))
      tok += s_[pos_++];
    if (tok.empty())
      throw ScenarioError(line_, std::string("unexpected character '") + c + "'");
    try {
      v.v = rational_from_string(tok);
    } catch (const std::invalid_argument&) {
      throw ScenarioError(line_, "malformed number: '" + tok + "'");
    }
    return v;
  }
};

std::vector<RawSection> parse_raw(const std::string& text) {
  std::vector<RawSection> sections;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip comments (outside strings) and whitespace.
    std::string stripped;
    bool in_str = false;
    for (char c : line) {
      if (c == '"') in_str = !in_str;
      if (c == '#' && !in_str) break;
      stripped += c;
    }
    std::size_t a = stripped.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = stripped.find_last_not_of(" \t\r");
    stripped = stripped.substr(a, b - a + 1);

    if (stripped.front() == '[') {
      if (stripped.back() != ']')
        throw ScenarioError(line_no, "malformed section header");
      sections.push_back({stripped.substr(1, stripped.size() - 2), line_no, {}});
      continue;
    }
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ScenarioError(line_no, "expected 'key = value'");
    if (sections.empty())
      throw ScenarioError(line_no, "key outside of any section");
    std::string key = stripped.substr(0, eq);
    std::size_t ke = key.find_last_not_of(" \t");
    key = key.substr(0, ke + 1);
    ValueParser vp(stripped.substr(eq + 1), line_no);
    sections.back().entries.push_back({key, vp.parse(), line_no});
  }
  return sections;
}

// ---------------------------------------------------------------------------
// Typed extraction.

const Rational& as_rational(const Value& v) {
  if (!v.is_rational()) throw ScenarioError(v.line, "expected a number");
  return std::get<Rational>(v.v);
}

long long as_int(const Value& v) {
  const Rational& r = as_rational(v);
  if (rat_den(r) != 1) throw ScenarioError(v.line, "expected an integer");
  return static_cast<long long>(rat_num(r));
}

const std::string& as_string(const Value& v) {
  if (!v.is_string()) throw ScenarioError(v.line, "expected a string");
  return std::get<std::string>(v.v);
}

const Value::List& as_list(const Value& v) {
  if (!v.is_list()) throw ScenarioError(v.line, "expected a list");
  return std::get<Value::List>(v.v);
}

bool all_rational(const Value::List& l) {
  for (const auto& e : l)
    if (!e.is_rational()) return false;
  return true;
}

UniPoly unipoly_of(const Value& v) {
  const auto& l = as_list(v);
  UniPoly p;
  for (const auto& e : l) p.push_back(as_rational(e));
  return poly_normalize(qq, std::move(p));
}

EtaleElement etale_elem_of(const EtaleAlgebra& K, const Value& v) {
  if (v.is_rational()) return K.from_rational(as_rational(v));
  const auto& l = as_list(v);
  if (all_rational(l)) {
    if (K.factor_count() != 1)
      throw ScenarioError(
          v.line, "element over a product base needs one list per factor");
    return K.from_parts({unipoly_of(v)});
  }
  if (static_cast<int>(l.size()) != K.factor_count())
    throw ScenarioError(v.line, "element needs one part per base factor");
  std::vector<UniPoly> parts;
  for (const auto& e : l) parts.push_back(unipoly_of(e));
  return K.from_parts(std::move(parts));
}

DElemT<EtaleAlgebra> delem_of(const InvolutiveAlgebra& A, const Value& v) {
  const EtaleAlgebra& K = A.base();
  const int dd = A.d_dim();
  if (dd > 1 && v.is_list()) {
    const auto& l = as_list(v);
    if (static_cast<int>(l.size()) == dd) {
      DElemT<EtaleAlgebra> e;
      for (const auto& c : l) e.c.push_back(etale_elem_of(K, c));
      return e;
    }
  }
  DElemT<EtaleAlgebra> e = A.dzero();
  e.c[0] = etale_elem_of(K, v);
  return e;
}

AlgElemT<EtaleAlgebra> algelem_of(const InvolutiveAlgebra& A, const Value& v) {
  const int n = A.n();
  if (v.is_list()) {
    const auto& rows = as_list(v);
    if (static_cast<int>(rows.size()) == n && !rows.empty() &&
        rows.front().is_list() &&
        static_cast<int>(as_list(rows.front()).size()) == n) {
      bool matrix_shape = true;
      for (const auto& r : rows)
        if (!r.is_list() || static_cast<int>(as_list(r).size()) != n)
          matrix_shape = false;
      if (matrix_shape && n > 1) {
        AlgElemT<EtaleAlgebra> m = A.zero_elem();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            m.at(i, j) = delem_of(A, as_list(rows[static_cast<std::size_t>(i)])
                                         [static_cast<std::size_t>(j)]);
        return m;
      }
    }
  }
  // Scalar lift: d * identity.
  DElemT<EtaleAlgebra> d = delem_of(A, v);
  AlgElemT<EtaleAlgebra> m = A.zero_elem();
  for (int i = 0; i < n; ++i) m.at(i, i) = d;
  return m;
}

const Value* find_key(const RawSection& s, const std::string& key) {
  for (const auto& kv : s.entries)
    if (kv.key == key) return &kv.value;
  return nullptr;
}

const Value& need_key(const RawSection& s, const std::string& key) {
  const Value* v = find_key(s, key);
  if (!v)
    throw ScenarioError(s.line, "section [" + s.name + "] needs '" + key + "'");
  return *v;
}

EtaleAlgebra base_of(const RawSection& s) {
  const Value& v = need_key(s, "factors");
  std::vector<UniPoly> factors;
  for (const auto& f : as_list(v)) factors.push_back(unipoly_of(f));
  try {
    return EtaleAlgebra(std::move(factors));
  } catch (const std::domain_error& e) {
    throw ScenarioError(v.line, e.what());
  }
}

RelativeEtale extension_of(const RawSection& s, const EtaleAlgebra& K) {
  const Value& v = need_key(s, "poly");
  std::vector<EtaleElement> f;
  for (const auto& c : as_list(v)) f.push_back(etale_elem_of(K, c));
  try {
    return RelativeEtale(K, std::move(f));
  } catch (const std::domain_error& e) {
    throw ScenarioError(v.line, e.what());
  }
}

InvolutiveAlgebra algebra_of(const RawSection& s, const EtaleAlgebra& K) {
  int n = 1;
  if (const Value* v = find_key(s, "n")) n = static_cast<int>(as_int(*v));

  DivisionKind kind = DivisionKind::Base;
  EtaleElement d = K.zero(), qa = K.zero(), qb = K.zero();
  if (const Value* v = find_key(s, "division")) {
    if (!v->is_table())
      throw ScenarioError(v->line, "'division' must be a table");
    const auto& table = std::get<Value::Table>(v->v);
    const Value* kind_v = nullptr;
    const Value* d_v = nullptr;
    const Value* a_v = nullptr;
    const Value* b_v = nullptr;
    for (const auto& [k, val] : table) {
      if (k == "kind") kind_v = &val;
      else if (k == "d") d_v = &val;
      else if (k == "a") a_v = &val;
      else if (k == "b") b_v = &val;
      else throw ScenarioError(val.line, "unknown division key '" + k + "'");
    }
    if (!kind_v) throw ScenarioError(v->line, "division needs 'kind'");
    const std::string& ks = as_string(*kind_v);
    if (ks == "base") {
      kind = DivisionKind::Base;
    } else if (ks == "quadratic") {
      kind = DivisionKind::Quadratic;
      if (!d_v) throw ScenarioError(v->line, "quadratic division needs 'd'");
      d = etale_elem_of(K, *d_v);
    } else if (ks == "quaternion") {
      kind = DivisionKind::Quaternion;
      if (!a_v || !b_v)
        throw ScenarioError(v->line, "quaternion division needs 'a' and 'b'");
      qa = etale_elem_of(K, *a_v);
      qb = etale_elem_of(K, *b_v);
    } else {
      throw ScenarioError(kind_v->line, "unknown division kind '" + ks + "'");
    }
  }

  StandardInv standard = kind == DivisionKind::Base ? StandardInv::Transpose
                                                    : StandardInv::ConjTranspose;
  if (const Value* v = find_key(s, "standard")) {
    const std::string& sv = as_string(*v);
    // "transpose" over a noncommutative or quadratic D means the canonical
    // involution composed with the transpose.
    if (sv != "transpose" && sv != "conj-transpose")
      throw ScenarioError(v->line, "standard must be transpose or conj-transpose");
    if (kind == DivisionKind::Base && sv == "conj-transpose")
      standard = StandardInv::Transpose;
  }

  // Twist: identity or an n x n matrix of D-element literals.
  const Value* tw = find_key(s, "twist");
  try {
    InvolutiveAlgebra probe = InvolutiveAlgebra::with_identity_twist(
        K, n, kind, d, qa, qb, standard);
    if (!tw || (tw->is_string() && as_string(*tw) == "identity")) return probe;
    const auto& rows = as_list(*tw);
    if (static_cast<int>(rows.size()) != n)
      throw ScenarioError(tw->line, "twist must be an n x n matrix");
    Mat<DElemT<EtaleAlgebra>> u(n, n, probe.dzero());
    for (int i = 0; i < n; ++i) {
      const auto& row = as_list(rows[static_cast<std::size_t>(i)]);
      if (static_cast<int>(row.size()) != n)
        throw ScenarioError(tw->line, "twist must be an n x n matrix");
      for (int j = 0; j < n; ++j)
        u.at(i, j) = delem_of(probe, row[static_cast<std::size_t>(j)]);
    }
    return InvolutiveAlgebra(K, n, kind, d, qa, qb, standard, std::move(u));
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::domain_error& e) {
    throw ScenarioError(s.line, e.what());
  }
}

HermForm form_of(const RawSection& s, const InvolutiveAlgebra& A) {
  int eps = 1;
  if (const Value* v = find_key(s, "epsilon")) eps = static_cast<int>(as_int(*v));
  try {
    if (const Value* v = find_key(s, "diagonal")) {
      std::vector<AlgElemT<EtaleAlgebra>> d;
      for (const auto& e : as_list(*v)) d.push_back(algelem_of(A, e));
      if (eps != 1)
        throw ScenarioError(v->line, "diagonal forms have epsilon = 1");
      return diagonal_form(A, d);
    }
    if (const Value* v = find_key(s, "gram")) {
      const auto& rows = as_list(*v);
      int m = static_cast<int>(rows.size());
      Mat<AlgElemT<EtaleAlgebra>> g(m, m, A.zero_elem());
      for (int i = 0; i < m; ++i) {
        const auto& row = as_list(rows[static_cast<std::size_t>(i)]);
        if (static_cast<int>(row.size()) != m)
          throw ScenarioError(v->line, "gram must be square");
        for (int j = 0; j < m; ++j)
          g.at(i, j) = algelem_of(A, row[static_cast<std::size_t>(j)]);
      }
      return herm_from_gram(A, eps, std::move(g));
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::domain_error& e) {
    throw ScenarioError(s.line, e.what());
  }
  throw ScenarioError(s.line, "form needs 'diagonal' or 'gram'");
}

QuadForm quadform_of(const RawSection& s, const EtaleAlgebra& K) {
  try {
    if (const Value* v = find_key(s, "diagonal")) {
      std::vector<EtaleElement> d;
      for (const auto& e : as_list(*v)) d.push_back(etale_elem_of(K, e));
      return qf_diagonal(K, d);
    }
    if (const Value* v = find_key(s, "gram")) {
      const auto& rows = as_list(*v);
      int m = static_cast<int>(rows.size());
      Mat<EtaleElement> g(m, m, K.zero());
      for (int i = 0; i < m; ++i) {
        const auto& row = as_list(rows[static_cast<std::size_t>(i)]);
        if (static_cast<int>(row.size()) != m)
          throw ScenarioError(v->line, "gram must be square");
        for (int j = 0; j < m; ++j)
          g.at(i, j) = etale_elem_of(K, row[static_cast<std::size_t>(j)]);
      }
      return qf_from_gram(K, std::move(g));
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::domain_error& e) {
    throw ScenarioError(s.line, e.what());
  }
  throw ScenarioError(s.line, "quadform needs 'diagonal' or 'gram'");
}

ExtendedDiagonal extform_of(const RawSection& s, const RelativeEtale& E,
                            const std::string& name) {
  const Value& v = need_key(s, "diagonal");
  ExtendedDiagonal out;
  out.name = name;
  for (const auto& entry : as_list(v)) {
    std::vector<EtaleElement> coeffs;
    if (entry.is_rational()) {
      coeffs.push_back(E.base().from_rational(as_rational(entry)));
    } else {
      for (const auto& c : as_list(entry))
        coeffs.push_back(etale_elem_of(E.base(), c));
    }
    TotalElement e = E.from_coeffs(coeffs);
    if (!E.is_unit(e))
      throw ScenarioError(entry.line,
                          "extended diagonal entries must be units");
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const HermForm* Scenario::find_form(const std::string& name) const {
  for (const auto& [n, f] : forms)
    if (n == name) return &f;
  return nullptr;
}

const QuadForm* Scenario::find_quadform(const std::string& name) const {
  for (const auto& [n, f] : quadforms)
    if (n == name) return &f;
  return nullptr;
}

const ExtendedDiagonal* Scenario::find_extended(const std::string& name) const {
  for (const auto& f : extended_forms)
    if (f.name == name) return &f;
  return nullptr;
}

Scenario load_scenario_text(const std::string& text) {
  std::vector<RawSection> raw = parse_raw(text);
  Scenario s;

  // First pass: base, then everything that depends on it.
  for (const auto& sec : raw)
    if (sec.name == "base") {
      if (s.base) throw ScenarioError(sec.line, "duplicate [base]");
      s.base = base_of(sec);
    }
  if (!s.base) s.base = EtaleAlgebra::rationals();

  for (const auto& sec : raw) {
    if (sec.name == "base") continue;
    if (sec.name == "extension") {
      if (s.extension) throw ScenarioError(sec.line, "duplicate [extension]");
      s.extension = extension_of(sec, *s.base);
    } else if (sec.name == "algebra") {
      if (s.algebra) throw ScenarioError(sec.line, "duplicate [algebra]");
      s.algebra = algebra_of(sec, *s.base);
    } else if (sec.name == "algebra.target") {
      if (s.algebra_target)
        throw ScenarioError(sec.line, "duplicate [algebra.target]");
      s.algebra_target = algebra_of(sec, *s.base);
    } else if (sec.name.rfind("form.", 0) == 0) {
      if (!s.algebra)
        throw ScenarioError(sec.line, "[form.*] needs an [algebra] section");
      s.forms.emplace_back(sec.name.substr(5), form_of(sec, *s.algebra));
    } else if (sec.name.rfind("quadform.", 0) == 0) {
      s.quadforms.emplace_back(sec.name.substr(9), quadform_of(sec, *s.base));
    } else if (sec.name.rfind("extform.", 0) == 0) {
      if (!s.extension)
        throw ScenarioError(sec.line, "[extform.*] needs an [extension] section");
      s.extended_forms.push_back(
          extform_of(sec, *s.extension, sec.name.substr(8)));
    } else if (sec.name == "check") {
      for (const auto& kv : sec.entries) {
        if (kv.key == "seed") s.seed = static_cast<std::uint64_t>(as_int(kv.value));
        else if (kv.key == "count") s.count = static_cast<int>(as_int(kv.value));
        else if (kv.key == "height") s.budget.height = static_cast<int>(as_int(kv.value));
        else if (kv.key == "pfister") s.budget.pfister_len = static_cast<int>(as_int(kv.value));
        else if (kv.key == "max_m") s.budget.max_m = static_cast<int>(as_int(kv.value));
        else if (kv.key == "total") {
          std::vector<int> t;
          for (const auto& e : as_list(kv.value))
            t.push_back(static_cast<int>(as_int(e)));
          s.target_total = std::move(t);
        } else {
          throw ScenarioError(kv.line, "unknown check key '" + kv.key + "'");
        }
      }
    } else {
      throw ScenarioError(sec.line, "unknown section [" + sec.name + "]");
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_scenario_text(ss.str());
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::string poly_literal(const UniPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(p[i]);
  }
  return out + "]";
}

std::string elem_literal(const EtaleElement& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.parts.size(); ++i) {
    if (i) out += ", ";
    out += poly_literal(e.parts[i]);
  }
  return out + "]";
}

std::string delem_literal(const InvolutiveAlgebra& A,
                          const DElemT<EtaleAlgebra>& d) {
  if (A.d_dim() == 1) return elem_literal(d.c[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (i) out += ", ";
    out += elem_literal(d.c[i]);
  }
  return out + "]";
}

void serialize_algebra(std::ostream& os, const std::string& section,
                       const InvolutiveAlgebra& A) {
  os << "[" << section << "]\n";
  os << "n = " << A.n() << "\n";
  switch (A.kind()) {
    case DivisionKind::Base:
      os << "division = { kind = \"base\" }\n";
      break;
    case DivisionKind::Quadratic:
      os << "division = { kind = \"quadratic\", d = " << elem_literal(A.quad_d())
         << " }\n";
      break;
    case DivisionKind::Quaternion:
      os << "division = { kind = \"quaternion\", a = " << elem_literal(A.quat_a())
         << ", b = " << elem_literal(A.quat_b()) << " }\n";
      break;
  }
  os << "standard = "
     << (A.standard() == StandardInv::Transpose ? "\"transpose\""
                                                : "\"conj-transpose\"")
     << "\n";
  bool is_identity = A.elem_eq(A.twist(), A.identity());
  if (is_identity) {
    os << "twist = \"identity\"\n";
  } else {
    os << "twist = [";
    for (int i = 0; i < A.n(); ++i) {
      if (i) os << ", ";
      os << "[";
      for (int j = 0; j < A.n(); ++j) {
        if (j) os << ", ";
        os << delem_literal(A, A.twist().at(i, j));
      }
      os << "]";
    }
    os << "]\n";
  }
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  if (s.base) {
    os << "[base]\nfactors = [";
    const auto& fs = s.base->factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) os << ", ";
      os << poly_literal(fs[i]);
    }
    os << "]\n\n";
  }
  if (s.extension) {
    os << "[extension]\npoly = [";
    const auto& f = s.extension->rel_poly();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) os << ", ";
      os << elem_literal(f[i]);
    }
    os << "]\n\n";
  }
  if (s.algebra) {
    serialize_algebra(os, "algebra", *s.algebra);
    os << "\n";
  }
  if (s.algebra_target) {
    serialize_algebra(os, "algebra.target", *s.algebra_target);
    os << "\n";
  }
  for (const auto& [name, form] : s.forms) {
    os << "[form." << name << "]\n";
    os << "epsilon = " << form.epsilon << "\n";
    os << "gram = [";
    for (int i = 0; i < form.dim(); ++i) {
      if (i) os << ", ";
      os << "[";
      for (int j = 0; j < form.dim(); ++j) {
        if (j) os << ", ";
        const auto& entry = form.gram.at(i, j);
        os << "[";
        for (int p = 0; p < form.algebra.n(); ++p) {
          if (p) os << ", ";
          os << "[";
          for (int q = 0; q < form.algebra.n(); ++q) {
            if (q) os << ", ";
            os << delem_literal(form.algebra, entry.at(p, q));
          }
          os << "]";
        }
        os << "]";
      }
      os << "]";
    }
    os << "]\n\n";
  }
  for (const auto& [name, q] : s.quadforms) {
    os << "[quadform." << name << "]\n";
    os << "gram = [";
    for (int i = 0; i < q.dim(); ++i) {
      if (i) os << ", ";
      os << "[";
      for (int j = 0; j < q.dim(); ++j) {
        if (j) os << ", ";
        os << elem_literal(q.gram.at(i, j));
      }
      os << "]";
    }
    os << "]\n\n";
  }
  for (const auto& ef : s.extended_forms) {
    os << "[extform." << ef.name << "]\n";
    os << "diagonal = [";
    for (std::size_t i = 0; i < ef.entries.size(); ++i) {
      if (i) os << ", ";
      os << "[";
      const auto& coeffs = ef.entries[i].coeffs;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (j) os << ", ";
        os << elem_literal(coeffs[j]);
      }
      os << "]";
    }
    os << "]\n\n";
  }
  os << "[check]\n";
  os << "seed = " << s.seed << "\n";
  os << "count = " << s.count << "\n";
  os << "height = " << s.budget.height << "\n";
  os << "pfister = " << s.budget.pfister_len << "\n";
  os << "max_m = " << s.budget.max_m << "\n";
  if (s.target_total) {
    os << "total = [";
    for (std::size_t i = 0; i < s.target_total->size(); ++i) {
      if (i) os << ", ";
      os << (*s.target_total)[i];
    }
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Corpus generation.

std::vector<Scenario> corpus_generate(std::uint64_t seed, int size) {
  std::mt19937_64 rng(seed);
  std::vector<Scenario> out;
  EtaleAlgebra Q = EtaleAlgebra::rationals();
  auto rand_range = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                   hi - lo + 1));
  };
  while (static_cast<int>(out.size()) < size) {
    Scenario s;
    s.base = Q;
    s.seed = seed;
    // Extension: random monic separable polynomial of degree 1..4.
    int deg = static_cast<int>(rand_range(1, 4));
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j) f.push_back(Q.from_int(rand_range(-9, 9)));
    f.push_back(Q.one());
    try {
      s.extension = RelativeEtale(Q, f);
    } catch (const std::domain_error&) {
      continue;  // inseparable draw
    }

    // Algebra template.
    switch (rng() % 5) {
      case 0:
        s.algebra = InvolutiveAlgebra::with_identity_twist(
            Q, 1, DivisionKind::Base, Q.zero(), Q.zero(), Q.zero(),
            StandardInv::Transpose);
        break;
      case 1:
        s.algebra = InvolutiveAlgebra::with_identity_twist(
            Q, 2, DivisionKind::Base, Q.zero(), Q.zero(), Q.zero(),
            StandardInv::Transpose);
        break;
      case 2: {
        InvolutiveAlgebra probe = InvolutiveAlgebra::with_identity_twist(
            Q, 1, DivisionKind::Base, Q.zero(), Q.zero(), Q.zero(),
            StandardInv::Transpose);
        Mat<DElemT<EtaleAlgebra>> u(2, 2, probe.dzero());
        u.at(0, 1) = probe.done();
        u.at(1, 0) = probe.dneg(probe.done());
        s.algebra = InvolutiveAlgebra(Q, 2, DivisionKind::Base, Q.zero(),
                                      Q.zero(), Q.zero(),
                                      StandardInv::Transpose, std::move(u));
        break;
      }
      case 3:
        s.algebra = InvolutiveAlgebra::with_identity_twist(
            Q, 1, DivisionKind::Quaternion, Q.zero(), Q.from_int(-1),
            Q.from_int(-1), StandardInv::ConjTranspose);
        break;
      default:
        s.algebra = InvolutiveAlgebra::with_identity_twist(
            Q, 1, DivisionKind::Quadratic, Q.from_int(-1), Q.zero(), Q.zero(),
            StandardInv::ConjTranspose);
        break;
    }

    // Diagonal entries: unit y-polynomials of height <= 5.
    ExtendedDiagonal ef;
    ef.name = "h";
    int dim = static_cast<int>(rand_range(1, 3));
    while (static_cast<int>(ef.entries.size()) < dim) {
      std::vector<EtaleElement> coeffs;
      for (int j = 0; j < deg; ++j)
        coeffs.push_back(Q.from_int(rand_range(-5, 5)));
      TotalElement e = s.extension->from_coeffs(coeffs);
      if (!s.extension->is_unit(e)) continue;
      ef.entries.push_back(std::move(e));
    }
    s.extended_forms.push_back(std::move(ef));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace formsig
