#include "dgideal/document.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgideal {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

std::string want_identifier(int line, const std::string& s, const char* what) {
  if (!is_identifier(s)) fail(line, std::string("'") + s + "' is not a usable " + what);
  return s;
}

int want_int(int line, const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    fail(line, "'" + s + "' is not an integer");
  }
  if (pos != s.size()) fail(line, "'" + s + "' is not an integer");
  return v;
}

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(std::move(t));
  return out;
}

std::string join_from(const std::vector<std::string>& toks, std::size_t start) {
  std::string s;
  for (std::size_t i = start; i < toks.size(); ++i) s += toks[i];
  return s;
}

Term parse_term(const Field& f, const std::string& s, int line) {
  if (s.empty()) fail(line, "missing term");
  Term t;
  if (s == "0") return t;
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string part = s.substr(pos, end - pos);
    if (part.empty()) fail(line, "malformed term '" + s + "'");
    Scalar c = f.one();
    std::string label = part;
    auto star = part.find('*');
    if (star != std::string::npos) {
      try {
        c = f.parse(part.substr(0, star));
      } catch (const std::invalid_argument& e) {
        fail(line, e.what());
      }
      label = part.substr(star + 1);
    }
    if (!is_identifier(label)) fail(line, "'" + label + "' is not a basis id");
    if (neg) c = f.neg(c);
    t.parts.emplace_back(std::move(c), std::move(label));
    if (end == s.size()) break;
    neg = s[end] == '-';
    pos = end + 1;
  }
  return t;
}

std::string render_term(const Field& f, const Term& t) {
  if (t.parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    Scalar c = t.parts[i].first;
    bool neg = c.raw() < 0;
    if (neg) c = f.neg(c);
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (!f.is_one(c)) s += f.str(c) + "*";
    s += t.parts[i].second;
  }
  return s;
}

/* "reduced(M,j=inc)" or "full(R,M,nuL=nl,nuR=nr)", whitespace already gone */
void parse_ideal_rhs(IdealDecl& d, const std::string& s, int line) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    fail(line, "expected reduced(...) or full(...)");
  std::string head = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> args;
  std::size_t pos = 0;
  while (true) {
    auto comma = inner.find(',', pos);
    args.push_back(inner.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  auto keyed = [&](const std::string& arg, const char* key) {
    std::string prefix = std::string(key) + "=";
    if (arg.rfind(prefix, 0) != 0)
      fail(line, "expected " + prefix + "<map>, got '" + arg + "'");
    return want_identifier(line, arg.substr(prefix.size()), "map name");
  };
  if (head == "reduced") {
    if (args.size() != 2) fail(line, "reduced(...) takes a bimodule and j=<map>");
    d.reduced = true;
    d.bim = want_identifier(line, args[0], "bimodule name");
    d.j = keyed(args[1], "j");
  } else if (head == "full") {
    if (args.size() != 4)
      fail(line, "full(...) takes an algebra, a bimodule, nuL=<map>, nuR=<map>");
    d.reduced = false;
    d.dga = want_identifier(line, args[0], "algebra name");
    d.bim = want_identifier(line, args[1], "bimodule name");
    d.nuL = keyed(args[2], "nuL");
    d.nuR = keyed(args[3], "nuR");
  } else {
    fail(line, "expected reduced(...) or full(...), got '" + head + "'");
  }
}

}  // namespace

bool Document::operator==(const Document& o) const {
  return field == o.field && complexes == o.complexes && dgas == o.dgas &&
         maps == o.maps && bimodules == o.bimodules && ideals == o.ideals &&
         order == o.order;
}

Document parse_document(const std::string& text) {
  Document doc;
  enum class Block { None, Complex, Dga, Map, Bimodule };
  Block cur = Block::None;
  bool field_seen = false;

  std::set<std::string> names[5];
  auto declare = [&](DeclKind k, const std::string& name, int line) {
    if (!names[(int)k].insert(name).second)
      fail(line, "'" + name + "' is declared twice");
    doc.order.emplace_back(k, 0);
  };

  std::set<std::pair<std::string, std::string>> seen_pairs;
  std::set<std::string> seen_singles;
  std::set<std::string> complex_labels;

  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::vector<std::string> t = tokenize(raw);
    if (t.empty()) continue;
    const std::string& t0 = t[0];

    if (t0 == "field") {
      if (field_seen) fail(ln, "field is declared twice");
      if (!doc.order.empty()) fail(ln, "field must precede all declarations");
      field_seen = true;
      if (t.size() == 2 && t[1] == "Q") {
        doc.field = Field::rationals();
      } else if (t.size() == 3 && t[1] == "Fp") {
        int p = want_int(ln, t[2]);
        if (p < 2) fail(ln, "'" + t[2] + "' is not a prime");
        try {
          doc.field = Field::prime((std::uint32_t)p);
        } catch (const std::invalid_argument&) {
          fail(ln, "'" + t[2] + "' is not a prime");
        }
      } else {
        fail(ln, "expected 'field Q' or 'field Fp <p>'");
      }
    } else if (t0 == "complex") {
      if (t.size() != 2) fail(ln, "expected 'complex <name>'");
      ComplexDecl d;
      d.name = want_identifier(ln, t[1], "name");
      d.line = ln;
      declare(DeclKind::Complex, d.name, ln);
      doc.order.back().second = (int)doc.complexes.size();
      doc.complexes.push_back(std::move(d));
      cur = Block::Complex;
      seen_singles.clear();
      seen_pairs.clear();
      complex_labels.clear();
    } else if (t0 == "degree") {
      if (cur != Block::Complex) fail(ln, "degree line outside a complex block");
      if (t.size() < 5 || t[2] != "dim" || t[4] != "basis")
        fail(ln, "expected 'degree <n> dim <k> basis <ids>'");
      DegreeLine dl;
      dl.degree = want_int(ln, t[1]);
      dl.line = ln;
      int dim = want_int(ln, t[3]);
      for (std::size_t i = 5; i < t.size(); ++i) {
        dl.basis.push_back(want_identifier(ln, t[i], "basis id"));
        if (!complex_labels.insert(t[i]).second)
          fail(ln, "basis id '" + t[i] + "' is used twice in this complex");
      }
      if ((int)dl.basis.size() != dim)
        fail(ln, "dim " + t[3] + " but " + std::to_string(dl.basis.size()) + " basis ids");
      ComplexDecl& c = doc.complexes.back();
      for (const auto& other : c.degrees)
        if (other.degree == dl.degree)
          fail(ln, "degree " + t[1] + " is declared twice");
      c.degrees.push_back(std::move(dl));
    } else if (t0 == "d") {
      if (cur != Block::Complex) fail(ln, "d line outside a complex block");
      if (t.size() < 4 || t[2] != "=") fail(ln, "expected 'd <basis> = <term>'");
      DLine dl;
      dl.basis = want_identifier(ln, t[1], "basis id");
      dl.rhs = parse_term(doc.field, join_from(t, 3), ln);
      dl.line = ln;
      if (!seen_singles.insert(dl.basis).second)
        fail(ln, "d of '" + dl.basis + "' is given twice");
      doc.complexes.back().d.push_back(std::move(dl));
    } else if (t0 == "dga") {
      if (t.size() != 4 || t[2] != "on") fail(ln, "expected 'dga <name> on <complex>'");
      DgaDecl d;
      d.name = want_identifier(ln, t[1], "name");
      d.complex = want_identifier(ln, t[3], "complex name");
      d.line = ln;
      declare(DeclKind::Dga, d.name, ln);
      doc.order.back().second = (int)doc.dgas.size();
      doc.dgas.push_back(std::move(d));
      cur = Block::Dga;
      seen_pairs.clear();
    } else if (t0 == "unit") {
      if (cur != Block::Dga) fail(ln, "unit line outside a dga block");
      if (t.size() < 3 || t[1] != "=") fail(ln, "expected 'unit = <term>'");
      DgaDecl& d = doc.dgas.back();
      if (d.has_unit) fail(ln, "unit is given twice");
      d.unit = parse_term(doc.field, join_from(t, 2), ln);
      d.has_unit = true;
    } else if (t0 == "mul") {
      if (cur != Block::Dga) fail(ln, "mul line outside a dga block");
      if (t.size() < 5 || t[3] != "=") fail(ln, "expected 'mul <a> <b> = <term>'");
      PairLine p;
      p.a = want_identifier(ln, t[1], "basis id");
      p.b = want_identifier(ln, t[2], "basis id");
      p.rhs = parse_term(doc.field, join_from(t, 4), ln);
      p.line = ln;
      if (!seen_pairs.insert({p.a, p.b}).second)
        fail(ln, "product of '" + p.a + "' and '" + p.b + "' is given twice");
      doc.dgas.back().muls.push_back(std::move(p));
    } else if (t0 == "map") {
      MapDecl d;
      if (t.size() == 6 && t[2] == ":" && t[4] == "->") {
        d.src1 = want_identifier(ln, t[3], "complex name");
        d.dst = want_identifier(ln, t[5], "complex name");
      } else if (t.size() == 8 && t[2] == ":" && t[4] == "*" && t[6] == "->") {
        d.src1 = want_identifier(ln, t[3], "complex name");
        d.src2 = want_identifier(ln, t[5], "complex name");
        d.dst = want_identifier(ln, t[7], "complex name");
      } else {
        fail(ln, "expected 'map <name> : <src> -> <dst>' or 'map <name> : <a> * <b> -> <dst>'");
      }
      d.name = want_identifier(ln, t[1], "name");
      d.line = ln;
      declare(DeclKind::Map, d.name, ln);
      doc.order.back().second = (int)doc.maps.size();
      doc.maps.push_back(std::move(d));
      cur = Block::Map;
      seen_pairs.clear();
      seen_singles.clear();
    } else if (t0 == "bimodule") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "over")
        fail(ln, "expected 'bimodule <name> : <carrier> over <dga>'");
      BimoduleDecl d;
      d.name = want_identifier(ln, t[1], "name");
      d.carrier = want_identifier(ln, t[3], "complex name");
      d.dga = want_identifier(ln, t[5], "dga name");
      d.line = ln;
      declare(DeclKind::Bimodule, d.name, ln);
      doc.order.back().second = (int)doc.bimodules.size();
      doc.bimodules.push_back(std::move(d));
      cur = Block::Bimodule;
      seen_pairs.clear();
    } else if (t0 == "left" || t0 == "right") {
      if (cur != Block::Bimodule) fail(ln, t0 + " line outside a bimodule block");
      if (t.size() < 5 || t[3] != "=")
        fail(ln, "expected '" + t0 + " <a> <b> = <term>'");
      PairLine p;
      p.a = want_identifier(ln, t[1], "basis id");
      p.b = want_identifier(ln, t[2], "basis id");
      p.rhs = parse_term(doc.field, join_from(t, 4), ln);
      p.line = ln;
      if (!seen_pairs.insert({t0 + " " + p.a, p.b}).second)
        fail(ln, t0 + " action on '" + p.a + "', '" + p.b + "' is given twice");
      BimoduleDecl& d = doc.bimodules.back();
      (t0 == "left" ? d.lefts : d.rights).push_back(std::move(p));
    } else if (t0 == "ideal") {
      if (t.size() < 4 || t[2] != "=")
        fail(ln, "expected 'ideal <name> = reduced(...)' or '... = full(...)'");
      IdealDecl d;
      d.name = want_identifier(ln, t[1], "name");
      d.line = ln;
      parse_ideal_rhs(d, join_from(t, 3), ln);
      declare(DeclKind::Ideal, d.name, ln);
      doc.order.back().second = (int)doc.ideals.size();
      doc.ideals.push_back(std::move(d));
      cur = Block::None;
    } else if (t.size() >= 2 && (t[1] == "|->" || (t.size() >= 3 && t[2] == "|->"))) {
      if (cur != Block::Map) fail(ln, "'|->' outside a map block");
      MapDecl& d = doc.maps.back();
      MapLine m;
      m.line = ln;
      if (t[1] == "|->") {
        if (d.src2) fail(ln, "map '" + d.name + "' has a tensor source; give two basis ids");
        if (t.size() < 3) fail(ln, "expected '<basis> |-> <term>'");
        m.a = want_identifier(ln, t[0], "basis id");
        m.rhs = parse_term(doc.field, join_from(t, 2), ln);
        if (!seen_singles.insert(m.a).second)
          fail(ln, "image of '" + m.a + "' is given twice");
      } else {
        if (!d.src2) fail(ln, "map '" + d.name + "' has a plain source; give one basis id");
        if (t.size() < 4) fail(ln, "expected '<basis> <basis> |-> <term>'");
        m.a = want_identifier(ln, t[0], "basis id");
        m.b = want_identifier(ln, t[1], "basis id");
        m.rhs = parse_term(doc.field, join_from(t, 3), ln);
        if (!seen_pairs.insert({m.a, *m.b}).second)
          fail(ln, "image of '" + m.a + "', '" + *m.b + "' is given twice");
      }
      d.lines.push_back(std::move(m));
    } else {
      fail(ln, "cannot make sense of this line");
    }
  }
  return doc;
}

std::string print_document(const Document& doc) {
  const Field& f = doc.field;
  std::ostringstream o;
  if (f.is_prime_field())
    o << "field Fp " << f.characteristic() << "\n";
  else
    o << "field Q\n";

  for (const auto& [kind, idx] : doc.order) {
    o << "\n";
    switch (kind) {
      case DeclKind::Complex: {
        const ComplexDecl& c = doc.complexes[idx];
        o << "complex " << c.name << "\n";
        for (const auto& dl : c.degrees) {
          o << "  degree " << dl.degree << " dim " << dl.basis.size() << " basis";
          for (const auto& b : dl.basis) o << " " << b;
          o << "\n";
        }
        for (const auto& dl : c.d)
          o << "  d " << dl.basis << " = " << render_term(f, dl.rhs) << "\n";
        break;
      }
      case DeclKind::Dga: {
        const DgaDecl& d = doc.dgas[idx];
        o << "dga " << d.name << " on " << d.complex << "\n";
        if (d.has_unit) o << "  unit = " << render_term(f, d.unit) << "\n";
        for (const auto& m : d.muls)
          o << "  mul " << m.a << " " << m.b << " = " << render_term(f, m.rhs) << "\n";
        break;
      }
      case DeclKind::Map: {
        const MapDecl& d = doc.maps[idx];
        o << "map " << d.name << " : " << d.src1;
        if (d.src2) o << " * " << *d.src2;
        o << " -> " << d.dst << "\n";
        for (const auto& m : d.lines) {
          o << "  " << m.a;
          if (m.b) o << " " << *m.b;
          o << " |-> " << render_term(f, m.rhs) << "\n";
        }
        break;
      }
      case DeclKind::Bimodule: {
        const BimoduleDecl& d = doc.bimodules[idx];
        o << "bimodule " << d.name << " : " << d.carrier << " over " << d.dga << "\n";
        for (const auto& m : d.lefts)
          o << "  left " << m.a << " " << m.b << " = " << render_term(f, m.rhs) << "\n";
        for (const auto& m : d.rights)
          o << "  right " << m.a << " " << m.b << " = " << render_term(f, m.rhs) << "\n";
        break;
      }
      case DeclKind::Ideal: {
        const IdealDecl& d = doc.ideals[idx];
        o << "ideal " << d.name << " = ";
        if (d.reduced)
          o << "reduced(" << d.bim << ", j=" << d.j << ")\n";
        else
          o << "full(" << d.dga << ", " << d.bim << ", nuL=" << d.nuL << ", nuR=" << d.nuR
            << ")\n";
        break;
      }
    }
  }
  return o.str();
}

DocRuntime::DocRuntime(Document doc) : doc_(std::move(doc)) {}

std::vector<std::string> DocRuntime::names(DeclKind k) const {
  std::vector<std::string> out;
  switch (k) {
    case DeclKind::Complex:
      for (const auto& d : doc_.complexes) out.push_back(d.name);
      break;
    case DeclKind::Dga:
      for (const auto& d : doc_.dgas) out.push_back(d.name);
      break;
    case DeclKind::Map:
      for (const auto& d : doc_.maps) out.push_back(d.name);
      break;
    case DeclKind::Bimodule:
      for (const auto& d : doc_.bimodules) out.push_back(d.name);
      break;
    case DeclKind::Ideal:
      for (const auto& d : doc_.ideals) out.push_back(d.name);
      break;
  }
  return out;
}

namespace {

/* label -> (degree, index) over a declared complex */
using LabelIndex = std::map<std::string, std::pair<int, int>>;

LabelIndex index_of(const ComplexDecl& c) {
  LabelIndex idx;
  for (const auto& dl : c.degrees)
    for (int i = 0; i < (int)dl.basis.size(); ++i)
      idx[dl.basis[i]] = {dl.degree, i};
  return idx;
}

std::pair<int, int> lookup(const LabelIndex& idx, const std::string& label,
                           const std::string& cname, int line) {
  auto it = idx.find(label);
  if (it == idx.end())
    fail(line, "'" + label + "' is not a basis element of complex '" + cname + "'");
  return it->second;
}

std::vector<Scalar> resolve_term(const Field& f, const LabelIndex& idx,
                                 const std::string& cname, const GradedSpace& space,
                                 int expect_degree, const Term& t, int line) {
  std::vector<Scalar> v(space.dim(expect_degree));
  for (const auto& [c, label] : t.parts) {
    auto [n, i] = lookup(idx, label, cname, line);
    if (n != expect_degree)
      fail(line, "'" + label + "' sits in degree " + std::to_string(n) + ", expected " +
                     std::to_string(expect_degree));
    v[i] = f.add(v[i], c);
  }
  return v;
}

const ComplexDecl* find_complex(const Document& d, const std::string& name) {
  for (const auto& c : d.complexes)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

const ChainComplex& DocRuntime::complex(const std::string& name) {
  auto it = complexes_.find(name);
  if (it != complexes_.end()) return it->second;
  const ComplexDecl* decl = find_complex(doc_, name);
  if (!decl) throw std::invalid_argument("no complex named '" + name + "'");

  std::map<int, std::vector<std::string>> basis;
  for (const auto& dl : decl->degrees)
    if (!dl.basis.empty()) basis[dl.degree] = dl.basis;
  GradedSpace space{basis};
  LabelIndex idx = index_of(*decl);

  GradedMap d(space, space, -1, doc_.field);
  for (const auto& dl : decl->d) {
    auto [n, i] = lookup(idx, dl.basis, name, dl.line);
    std::vector<Scalar> col =
        resolve_term(doc_.field, idx, name, space, n - 1, dl.rhs, dl.line);
    for (int r = 0; r < (int)col.size(); ++r)
      if (!doc_.field.is_zero(col[r])) d.set(n, r, i, col[r]);
  }
  try {
    return complexes_.emplace(name, ChainComplex(std::move(space), std::move(d)))
        .first->second;
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("complex '" + name + "': " + e.what());
  }
}

Verified<DGAStructure>& DocRuntime::check_dga(const std::string& name) {
  auto it = dgas_.find(name);
  if (it != dgas_.end()) return it->second;
  const DgaDecl* decl = nullptr;
  for (const auto& d : doc_.dgas)
    if (d.name == name) decl = &d;
  if (!decl) throw std::invalid_argument("no dga named '" + name + "'");
  if (!decl->has_unit)
    throw std::invalid_argument("dga '" + name + "' has no unit line");

  const ChainComplex& carrier = complex(decl->complex);
  const GradedSpace& s = carrier.space();
  LabelIndex idx = index_of(*find_complex(doc_, decl->complex));
  const Field& f = doc_.field;

  GradedSpace t = tensor_space(s, s);
  GradedMap mult(t, s, 0, f);
  for (const auto& m : decl->muls) {
    auto [na, ia] = lookup(idx, m.a, decl->complex, m.line);
    auto [nb, ib] = lookup(idx, m.b, decl->complex, m.line);
    int n = na + nb;
    int col = t.tensor_rank(n, MultiIndex{{na, ia}, {nb, ib}});
    std::vector<Scalar> v = resolve_term(f, idx, decl->complex, s, n, m.rhs, m.line);
    for (int r = 0; r < (int)v.size(); ++r)
      if (!f.is_zero(v[r])) mult.set(n, r, col, v[r]);
  }
  GradedMap unit(unit_space(), s, 0, f);
  std::vector<Scalar> u =
      resolve_term(f, idx, decl->complex, s, 0, decl->unit, decl->line);
  for (int r = 0; r < (int)u.size(); ++r)
    if (!f.is_zero(u[r])) unit.set(0, r, 0, u[r]);

  return dgas_.emplace(name, verify_dga(carrier, mult, unit)).first->second;
}

const DGAStructure& DocRuntime::dga(const std::string& name) {
  Verified<DGAStructure>& v = check_dga(name);
  if (!v.value) throw DependencyFailure{name, v.report};
  return *v.value;
}

namespace {

/* Raw action maps of a bimodule declaration, shape-correct but unverified. */
std::pair<GradedMap, GradedMap> bimodule_maps(DocRuntime& rt, const BimoduleDecl& decl) {
  const Document& doc = rt.doc();
  const std::string* rname = nullptr;
  for (const auto& d : doc.dgas)
    if (d.name == decl.dga) rname = &d.complex;
  if (!rname) throw std::invalid_argument("no dga named '" + decl.dga + "'");

  const GradedSpace& rs = rt.complex(*rname).space();
  const GradedSpace& ms = rt.complex(decl.carrier).space();
  LabelIndex ridx = index_of(*find_complex(doc, *rname));
  LabelIndex midx = index_of(*find_complex(doc, decl.carrier));
  const Field& f = rt.field();

  GradedSpace tl = tensor_space(rs, ms);
  GradedMap left(tl, ms, 0, f);
  for (const auto& m : decl.lefts) {
    auto [na, ia] = lookup(ridx, m.a, *rname, m.line);
    auto [nb, ib] = lookup(midx, m.b, decl.carrier, m.line);
    int n = na + nb;
    int col = tl.tensor_rank(n, MultiIndex{{na, ia}, {nb, ib}});
    std::vector<Scalar> v = resolve_term(f, midx, decl.carrier, ms, n, m.rhs, m.line);
    for (int r = 0; r < (int)v.size(); ++r)
      if (!f.is_zero(v[r])) left.set(n, r, col, v[r]);
  }
  GradedSpace tr = tensor_space(ms, rs);
  GradedMap right(tr, ms, 0, f);
  for (const auto& m : decl.rights) {
    auto [na, ia] = lookup(midx, m.a, decl.carrier, m.line);
    auto [nb, ib] = lookup(ridx, m.b, *rname, m.line);
    int n = na + nb;
    int col = tr.tensor_rank(n, MultiIndex{{na, ia}, {nb, ib}});
    std::vector<Scalar> v = resolve_term(f, midx, decl.carrier, ms, n, m.rhs, m.line);
    for (int r = 0; r < (int)v.size(); ++r)
      if (!f.is_zero(v[r])) right.set(n, r, col, v[r]);
  }
  return {std::move(left), std::move(right)};
}

}  // namespace

Verified<BimoduleStructure>& DocRuntime::check_bimodule(const std::string& name) {
  auto it = bims_.find(name);
  if (it != bims_.end()) return it->second;
  const BimoduleDecl* decl = nullptr;
  for (const auto& d : doc_.bimodules)
    if (d.name == name) decl = &d;
  if (!decl) throw std::invalid_argument("no bimodule named '" + name + "'");

  const DGAStructure& ring = dga(decl->dga);
  const ChainComplex& carrier = complex(decl->carrier);
  auto [left, right] = bimodule_maps(*this, *decl);
  return bims_.emplace(name, verify_bimodule(ring, carrier, left, right)).first->second;
}

const BimoduleStructure& DocRuntime::bimodule(const std::string& name) {
  Verified<BimoduleStructure>& v = check_bimodule(name);
  if (!v.value) throw DependencyFailure{name, v.report};
  return *v.value;
}

const MapDecl& DocRuntime::map_decl(const std::string& name) {
  for (const auto& d : doc_.maps)
    if (d.name == name) return d;
  throw std::invalid_argument("no map named '" + name + "'");
}

const GradedMap& DocRuntime::map(const std::string& name) {
  auto it = maps_.find(name);
  if (it != maps_.end()) return it->second;
  const MapDecl& decl = map_decl(name);
  const Field& f = doc_.field;

  const GradedSpace& s1 = complex(decl.src1).space();
  LabelIndex idx1 = index_of(*find_complex(doc_, decl.src1));
  const GradedSpace& dst = complex(decl.dst).space();
  LabelIndex didx = index_of(*find_complex(doc_, decl.dst));

  GradedSpace src = s1;
  LabelIndex idx2;
  if (decl.src2) {
    src = tensor_space(s1, complex(*decl.src2).space());
    idx2 = index_of(*find_complex(doc_, *decl.src2));
  }

  GradedMap g(src, dst, 0, f);
  for (const auto& m : decl.lines) {
    int n = 0, col = 0;
    if (decl.src2) {
      auto [na, ia] = lookup(idx1, m.a, decl.src1, m.line);
      auto [nb, ib] = lookup(idx2, *m.b, *decl.src2, m.line);
      n = na + nb;
      col = src.tensor_rank(n, MultiIndex{{na, ia}, {nb, ib}});
    } else {
      std::tie(n, col) = lookup(idx1, m.a, decl.src1, m.line);
    }
    std::vector<Scalar> v = resolve_term(f, didx, decl.dst, dst, n, m.rhs, m.line);
    for (int r = 0; r < (int)v.size(); ++r)
      if (!f.is_zero(v[r])) g.set(n, r, col, v[r]);
  }
  return maps_.emplace(name, std::move(g)).first->second;
}

const IdealDecl& DocRuntime::ideal_decl(const std::string& name) {
  for (const auto& d : doc_.ideals)
    if (d.name == name) return d;
  throw std::invalid_argument("no ideal named '" + name + "'");
}

const IdealData& DocRuntime::reduced_ideal(const std::string& name) {
  auto it = reduced_.find(name);
  if (it != reduced_.end()) return it->second;
  const IdealDecl& decl = ideal_decl(name);
  if (decl.reduced) {
    IdealData d = make_ideal_data(bimodule(decl.bim), map(decl.j));
    return reduced_.emplace(name, std::move(d)).first->second;
  }
  Verified<IdealData>& v = derive_report(name);
  if (!v.value) throw DependencyFailure{name, v.report};
  return reduced_.emplace(name, *v.value).first->second;
}

const SmithIdealData& DocRuntime::full_ideal(const std::string& name) {
  auto it = full_.find(name);
  if (it != full_.end()) return it->second;
  const IdealDecl& decl = ideal_decl(name);
  if (!decl.reduced) {
    const BimoduleDecl* bdecl = nullptr;
    for (const auto& b : doc_.bimodules)
      if (b.name == decl.bim) bdecl = &b;
    if (!bdecl) throw std::invalid_argument("no bimodule named '" + decl.bim + "'");
    if (bdecl->dga != decl.dga)
      throw std::invalid_argument("ideal '" + name + "': bimodule '" + decl.bim +
                                  "' is declared over '" + bdecl->dga + "', not '" +
                                  decl.dga + "'");
    /* The declared actions become mu_L and mu_R unverified: the composition
       diagrams are exactly what verify_ideal reports, so only shapes and
       chain-ness gate the construction itself. */
    const DGAStructure& ring = dga(decl.dga);
    const ChainComplex& carrier = complex(bdecl->carrier);
    auto [left, right] = bimodule_maps(*this, *bdecl);
    SmithIdealData s = make_smith(ring, carrier, std::move(left), std::move(right),
                                  map(decl.nuL), map(decl.nuR));
    return full_.emplace(name, std::move(s)).first->second;
  }
  Verified<SmithIdealData>& v = build_report(name);
  if (!v.value) throw DependencyFailure{name, v.report};
  return full_.emplace(name, *v.value).first->second;
}

Verified<IdealData>& DocRuntime::derive_report(const std::string& name) {
  auto it = derived_.find(name);
  if (it != derived_.end()) return it->second;
  const IdealDecl& decl = ideal_decl(name);
  if (decl.reduced)
    throw std::invalid_argument("ideal '" + name +
                                "' is declared reduced; derive expects a full declaration");
  return derived_.emplace(name, derive_reduced(full_ideal(name))).first->second;
}

Verified<SmithIdealData>& DocRuntime::build_report(const std::string& name) {
  auto it = built_.find(name);
  if (it != built_.end()) return it->second;
  const IdealDecl& decl = ideal_decl(name);
  if (!decl.reduced)
    throw std::invalid_argument("ideal '" + name +
                                "' is declared full; build expects a reduced declaration");
  return built_.emplace(name, build_ideal(reduced_ideal(name))).first->second;
}

DGAMorphism DocRuntime::dga_morphism(const std::string& name) {
  const MapDecl& decl = map_decl(name);
  if (decl.src2)
    throw std::invalid_argument("map '" + name + "' has a tensor source");
  auto unique_dga_on = [&](const std::string& cname) -> const std::string& {
    const std::string* found = nullptr;
    for (const auto& d : doc_.dgas)
      if (d.complex == cname) {
        if (found)
          throw std::invalid_argument("complex '" + cname +
                                      "' carries more than one algebra");
        found = &d.name;
      }
    if (!found)
      throw std::invalid_argument("no algebra is declared on complex '" + cname + "'");
    return *found;
  };
  const DGAStructure& a = dga(unique_dga_on(decl.src1));
  const DGAStructure& b = dga(unique_dga_on(decl.dst));
  Verified<DGAMorphism> v = verify_dga_map(a, b, map(name));
  if (!v.value) throw DependencyFailure{name, v.report};
  return *v.value;
}

}  // namespace dgideal
