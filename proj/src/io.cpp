#include "twistcov/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "twistcov/homotopy.hpp"

namespace twistcov {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& why) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why);
}

std::string reason(const Error& e) {
  const std::string w = e.what();
  const auto colon = w.find(": ");
  return colon == std::string::npos ? w : w.substr(colon + 2);
}

[[noreturn]] void semantic_fail(int line, const std::string& why) {
  throw Error(Errc::SemanticError, "line " + std::to_string(line) + ": " + why);
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) parse_fail(line, "expected an integer, got '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "expected an integer, got '" + tok + "'");
  }
}

std::optional<Domain> domain_from(const std::string& s) {
  if (s == "symbolic") return Domain::Symbolic;
  if (s == "rational") return Domain::Rational;
  if (s == "gaussian") return Domain::Gaussian;
  if (s == "complex") return Domain::Complex;
  return std::nullopt;
}

struct PendingRep {
  RepSpec spec;
  std::map<int, std::pair<int, std::string>> rows;  // generator → (line, matrix text)
  int line = 0;
};

void parse_matrix_into(RepSpec& spec, int line, const std::string& text) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(cur);
  const int m = spec.degree;
  if (static_cast<int>(rows.size()) != m)
    semantic_fail(line, "matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(m));
  Matrix<Gaussian> ex(m, m);
  Matrix<Complex> nu(m, m);
  for (int i = 0; i < m; ++i) {
    auto toks = split_ws(rows[i]);
    if (static_cast<int>(toks.size()) != m)
      semantic_fail(line, "matrix row " + std::to_string(i) + " has " + std::to_string(toks.size()) + " entries");
    for (int j = 0; j < m; ++j) {
      try {
        if (spec.domain == Domain::Complex) {
          nu(i, j) = parse_complex(toks[j]);
        } else {
          ex(i, j) = Gaussian::parse(toks[j]);
          if (spec.domain == Domain::Rational && !ex(i, j).is_real())
            semantic_fail(line, "non-real entry in a rational representation");
        }
      } catch (const Error& e) {
        if (e.code() == Errc::SemanticError) throw;
        parse_fail(line, "bad matrix entry '" + toks[j] + "'");
      }
    }
  }
  if (spec.domain == Domain::Complex) {
    if (nu.rows() > 0 && !nu.fullPivLu().isInvertible()) semantic_fail(line, "generator matrix is singular");
    spec.numeric.push_back(nu);
  } else {
    if (ScalarTraits<Gaussian>::is_zero(det(ex))) semantic_fail(line, "generator matrix is singular");
    spec.exact.push_back(ex);
  }
}

RepSpec finish_rep(PendingRep& p) {
  int expect = 0;
  for (auto& [gen, entry] : p.rows) {
    if (gen != expect) semantic_fail(entry.first, "generator " + std::to_string(expect) + " is missing");
    parse_matrix_into(p.spec, entry.first, entry.second);
    ++expect;
  }
  return p.spec;
}

std::string after_tokens(const std::string& line, int count) {
  std::size_t pos = 0;
  for (int i = 0; i < count; ++i) {
    pos = line.find_first_not_of(" \t", pos);
    pos = line.find_first_of(" \t", pos);
    if (pos == std::string::npos) return {};
  }
  return trim(line.substr(pos));
}

std::string format_rep(const char* keyword, const RepSpec& r) {
  std::ostringstream out;
  out << keyword << ' ' << domain_name(r.domain) << ' ' << r.degree << '\n';
  for (int k = 0; k < r.rank(); ++k) {
    out << "gen " << k;
    for (int i = 0; i < r.degree; ++i) {
      out << (i == 0 ? " " : "; ");
      for (int j = 0; j < r.degree; ++j) {
        if (j > 0) out << ' ';
        out << (r.domain == Domain::Complex ? format_complex(r.numeric[k](i, j)) : format_gaussian(r.exact[k](i, j)));
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Symbolic: return "symbolic";
    case Domain::Rational: return "rational";
    case Domain::Gaussian: return "gaussian";
    case Domain::Complex: return "complex";
  }
  return "?";
}

std::string format_gaussian(const Gaussian& g) {
  if (g.im().is_zero()) return g.re().to_string();
  std::string im = g.im() == Rational(1) ? "" : g.im() == Rational(-1) ? "-" : g.im().to_string();
  if (g.re().is_zero()) return im + "i";
  if (im.empty() || im[0] != '-') im = "+" + im;
  return g.re().to_string() + im + "i";
}

Complex parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty complex number");
  if (s.back() != 'i') {
    std::size_t used = 0;
    double re = 0;
    try {
      re = std::stod(s, &used);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad complex number '" + s + "'");
    }
    if (used != s.size()) throw Error(Errc::ParseError, "bad complex number '" + s + "'");
    return {re, 0.0};
  }
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_value = [&](const std::string& t) {
    const std::string body = t.substr(0, t.size() - 1);
    if (body.empty() || body == "+") return 1.0;
    if (body == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(body, &used);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad complex number '" + s + "'");
    }
    if (used != body.size()) throw Error(Errc::ParseError, "bad complex number '" + s + "'");
    return v;
  };
  if (split == std::string::npos) return {0.0, imag_value(s)};
  const std::string re_part = s.substr(0, split);
  std::size_t used = 0;
  double re = 0;
  try {
    re = std::stod(re_part, &used);
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad complex number '" + s + "'");
  }
  if (used != re_part.size()) throw Error(Errc::ParseError, "bad complex number '" + s + "'");
  return {re, imag_value(s.substr(split))};
}

std::string format_complex(const Complex& z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real();
  if (z.imag() != 0.0) out << (z.imag() < 0 ? "" : "+") << z.imag() << 'i';
  return out.str();
}

Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = identity_permutation(degree);
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  const std::string s = trim(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty permutation");
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '\t') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw Error(Errc::ParseError, "expected '(' in cycle notation");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw Error(Errc::ParseError, "unterminated cycle");
    std::string inner = s.substr(pos + 1, close - pos - 1);
    for (char& c : inner)
      if (c == ',') c = ' ';
    std::vector<int> cyc;
    for (const auto& tok : split_ws(inner)) {
      std::size_t u = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &u);
      } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad point '" + tok + "' in cycle");
      }
      if (u != tok.size()) throw Error(Errc::ParseError, "bad point '" + tok + "' in cycle");
      if (v < 0 || v >= degree) throw Error(Errc::SemanticError, "point " + tok + " outside 0.." + std::to_string(degree - 1));
      if (used[v]) throw Error(Errc::SemanticError, "point " + tok + " appears twice, not a bijection");
      used[v] = 1;
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    pos = close + 1;
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      if (out.back() != '(') out += ' ';
      out += std::to_string(j);
      seen[j] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

InputDocument parse_input(const std::string& text) {
  InputDocument doc;
  std::optional<int> nv;
  std::vector<std::pair<Vertex, Vertex>> edges;
  struct Arc {
    Vertex s, t;
    EdgeId inv;
  };
  std::vector<Arc> arcs;
  std::optional<std::pair<int, std::vector<std::string>>> weight_line;
  std::vector<std::pair<int, std::vector<int>>> rotation_lines;
  std::optional<std::pair<int, int>> voltage_header;  // line, degree
  std::map<int, std::pair<int, std::string>> perms;
  std::vector<std::pair<int, std::vector<int>>> torus_lines;
  std::optional<PendingRep> rep;
  std::vector<PendingRep> irreps;
  PendingRep* current = nullptr;
  bool in_voltage = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    const std::string& kw = tok[0];
    auto need = [&](std::size_t n) {
      if (tok.size() != n) parse_fail(lineno, "'" + kw + "' expects " + std::to_string(n - 1) + " argument(s)");
    };
    auto vertex = [&](const std::string& t) {
      const int v = parse_int(t, lineno);
      if (!nv) parse_fail(lineno, "'vertices' must come first");
      if (v < 0 || v >= *nv) semantic_fail(lineno, "vertex " + t + " out of range");
      return v;
    };
    if (kw != "gen") current = nullptr;
    if (kw != "perm") in_voltage = false;

    if (kw == "vertices") {
      need(2);
      if (nv) parse_fail(lineno, "duplicate 'vertices'");
      nv = parse_int(tok[1], lineno);
      if (*nv < 1) semantic_fail(lineno, "a graph needs at least one vertex");
    } else if (kw == "edge") {
      need(3);
      if (!arcs.empty()) parse_fail(lineno, "cannot mix 'edge' and 'arc'");
      edges.emplace_back(vertex(tok[1]), vertex(tok[2]));
    } else if (kw == "arc") {
      need(4);
      if (!edges.empty()) parse_fail(lineno, "cannot mix 'edge' and 'arc'");
      arcs.push_back({vertex(tok[1]), vertex(tok[2]), parse_int(tok[3], lineno)});
    } else if (kw == "weights") {
      if (tok.size() < 2) parse_fail(lineno, "'weights' needs a domain");
      if (weight_line) parse_fail(lineno, "duplicate 'weights'");
      weight_line = {lineno, tok};
    } else if (kw == "rotation") {
      if (tok.size() < 2) parse_fail(lineno, "'rotation' needs a vertex");
      std::vector<int> vals;
      for (std::size_t k = 1; k < tok.size(); ++k) vals.push_back(parse_int(tok[k], lineno));
      rotation_lines.emplace_back(lineno, vals);
    } else if (kw == "outer-face") {
      need(2);
      doc.outer_face = parse_int(tok[1], lineno);
    } else if (kw == "voltage") {
      need(2);
      if (voltage_header) parse_fail(lineno, "duplicate 'voltage'");
      voltage_header = {lineno, parse_int(tok[1], lineno)};
      if (voltage_header->second < 1) semantic_fail(lineno, "voltage degree must be positive");
      in_voltage = true;
    } else if (kw == "perm") {
      if (!in_voltage) parse_fail(lineno, "'perm' outside a voltage block");
      if (tok.size() < 3) parse_fail(lineno, "'perm' needs a generator and a permutation");
      const int g = parse_int(tok[1], lineno);
      if (perms.count(g)) semantic_fail(lineno, "generator " + tok[1] + " given twice");
      perms[g] = {lineno, after_tokens(line, 2)};
    } else if (kw == "torus") {
      need(4);
      torus_lines.emplace_back(lineno, std::vector<int>{parse_int(tok[1], lineno), parse_int(tok[2], lineno),
                                                        parse_int(tok[3], lineno)});
    } else if (kw == "rep" || kw == "irrep") {
      need(3);
      auto d = domain_from(tok[1]);
      if (!d || *d == Domain::Symbolic) parse_fail(lineno, "unknown representation domain '" + tok[1] + "'");
      PendingRep p;
      p.spec.domain = *d;
      p.spec.degree = parse_int(tok[2], lineno);
      p.line = lineno;
      if (p.spec.degree < 1) semantic_fail(lineno, "representation degree must be positive");
      if (kw == "rep") {
        if (rep) parse_fail(lineno, "duplicate 'rep'");
        rep = p;
        current = &*rep;
      } else {
        irreps.push_back(p);
        current = &irreps.back();
      }
    } else if (kw == "gen") {
      if (!current) parse_fail(lineno, "'gen' outside a rep block");
      if (tok.size() < 3) parse_fail(lineno, "'gen' needs a generator and a matrix");
      const int g = parse_int(tok[1], lineno);
      if (current->rows.count(g)) semantic_fail(lineno, "generator " + tok[1] + " given twice");
      current->rows[g] = {lineno, after_tokens(line, 2)};
    } else if (kw == "subgroup") {
      std::vector<int> h;
      for (std::size_t k = 1; k < tok.size(); ++k) h.push_back(parse_int(tok[k], lineno));
      doc.subgroup = h;
    } else {
      parse_fail(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!nv) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": missing 'vertices'");

  if (!arcs.empty()) {
    doc.undirected = false;
    DirectedGraph dg(*nv);
    std::vector<EdgeId> inverse;
    for (const auto& a : arcs) {
      dg.add_edge(a.s, a.t);
      if (a.inv < 0 || a.inv >= static_cast<int>(arcs.size()))
        throw Error(Errc::SemanticError, "inverse index " + std::to_string(a.inv) + " out of range");
      inverse.push_back(a.inv);
    }
    doc.graph = Graph(std::move(dg), std::move(inverse));
  } else {
    doc.graph = Graph::from_undirected(*nv, edges);
  }
  if (auto rep_issues = validate_graph(doc.graph); !rep_issues.ok())
    throw Error(Errc::SemanticError, rep_issues.issues.front());

  const int nu = doc.graph.num_unoriented();
  if (weight_line) {
    const auto& [wl, wt] = *weight_line;
    auto d = domain_from(wt[1]);
    if (!d) parse_fail(wl, "unknown weight domain '" + wt[1] + "'");
    doc.weight_domain = *d;
    if (*d == Domain::Symbolic) {
      if (wt.size() != 2) parse_fail(wl, "symbolic weights take no values");
    } else {
      if (static_cast<int>(wt.size()) - 2 != nu)
        semantic_fail(wl, "expected " + std::to_string(nu) + " weights, got " + std::to_string(wt.size() - 2));
      for (std::size_t k = 2; k < wt.size(); ++k) {
        try {
          if (*d == Domain::Complex) {
            doc.complex_weights.push_back(parse_complex(wt[k]));
          } else {
            Gaussian g = Gaussian::parse(wt[k]);
            if (*d == Domain::Rational && !g.is_real()) semantic_fail(wl, "non-real rational weight");
            doc.exact_weights.push_back(g);
          }
        } catch (const Error& e) {
          if (e.code() == Errc::SemanticError) throw;
          parse_fail(wl, "bad weight '" + wt[k] + "'");
        }
      }
    }
  }

  if (!rotation_lines.empty()) {
    RotationSystem rot;
    rot.order.assign(*nv, {});
    std::vector<char> seen(*nv, 0);
    for (const auto& [ln, vals] : rotation_lines) {
      const int v = vals[0];
      if (v < 0 || v >= *nv) semantic_fail(ln, "vertex out of range");
      if (seen[v]) semantic_fail(ln, "rotation of vertex " + std::to_string(v) + " given twice");
      seen[v] = 1;
      rot.order[v].assign(vals.begin() + 1, vals.end());
    }
    try {
      check_rotation(doc.graph, rot);
    } catch (const Error& e) {
      throw Error(Errc::SemanticError, e.what());
    }
    doc.rotation = rot;
  }

  if (voltage_header) {
    const auto [vl, d] = *voltage_header;
    if (!is_connected(doc.graph)) semantic_fail(vl, "a voltage needs a connected base graph");
    const int rank = make_presentation(doc.graph, 0).rank();
    VoltageAssignment volt{d, {}};
    int expect = 0;
    for (const auto& [g, entry] : perms) {
      if (g != expect) semantic_fail(entry.first, "generator " + std::to_string(expect) + " is missing");
      try {
        volt.perms.push_back(parse_cycles(entry.second, d));
      } catch (const Error& e) {
        if (e.code() == Errc::SemanticError) semantic_fail(entry.first, reason(e));
        parse_fail(entry.first, reason(e));
      }
      ++expect;
    }
    if (expect != rank)
      semantic_fail(vl, "voltage lists " + std::to_string(expect) + " permutations, the base has " +
                            std::to_string(rank) + " generators");
    doc.voltage = volt;
  }

  if (!torus_lines.empty()) {
    TorusVoltage tv;
    tv.voltage.assign(doc.graph.num_edges(), {0, 0});
    const auto canon = doc.graph.unoriented_edges();
    std::vector<char> seen(nu, 0);
    for (const auto& [ln, v] : torus_lines) {
      if (v[0] < 0 || v[0] >= nu) semantic_fail(ln, "edge out of range");
      if (seen[v[0]]) semantic_fail(ln, "torus voltage of edge " + std::to_string(v[0]) + " given twice");
      seen[v[0]] = 1;
      const EdgeId e = canon[v[0]];
      tv.voltage[e] = {v[1], v[2]};
      tv.voltage[doc.graph.inv(e)] = {-v[1], -v[2]};
    }
    doc.torus = tv;
  }

  if (rep) doc.rep = finish_rep(*rep);
  for (auto& p : irreps) doc.irreducibles.push_back(finish_rep(p));
  return doc;
}

InputDocument read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

std::string serialize(const InputDocument& doc) {
  std::ostringstream out;
  const Graph& g = doc.graph;
  out << "vertices " << g.num_vertices() << '\n';
  if (doc.undirected) {
    for (EdgeId e : g.unoriented_edges()) out << "edge " << g.src(e) << ' ' << g.tgt(e) << '\n';
  } else {
    for (EdgeId e = 0; e < g.num_edges(); ++e) out << "arc " << g.src(e) << ' ' << g.tgt(e) << ' ' << g.inv(e) << '\n';
  }
  out << "weights " << domain_name(doc.weight_domain);
  for (const auto& w : doc.exact_weights) out << ' ' << format_gaussian(w);
  for (const auto& w : doc.complex_weights) out << ' ' << format_complex(w);
  out << '\n';
  if (doc.rotation)
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out << "rotation " << v;
      for (EdgeId e : doc.rotation->order[v]) out << ' ' << e;
      out << '\n';
    }
  if (doc.outer_face) out << "outer-face " << *doc.outer_face << '\n';
  if (doc.voltage) {
    out << "voltage " << doc.voltage->degree << '\n';
    for (std::size_t k = 0; k < doc.voltage->perms.size(); ++k)
      out << "perm " << k << ' ' << format_cycles(doc.voltage->perms[k]) << '\n';
  }
  if (doc.torus) {
    const auto canon = g.unoriented_edges();
    for (std::size_t u = 0; u < canon.size(); ++u) {
      auto [a, b] = doc.torus->voltage[canon[u]];
      out << "torus " << u << ' ' << a << ' ' << b << '\n';
    }
  }
  if (doc.rep) out << format_rep("rep", *doc.rep);
  for (const auto& r : doc.irreducibles) out << format_rep("irrep", r);
  if (doc.subgroup) {
    out << "subgroup";
    for (int h : *doc.subgroup) out << ' ' << h;
    out << '\n';
  }
  return out.str();
}

EdgeWeights<RatPoly> document_weights(const InputDocument& doc) {
  switch (doc.weight_domain) {
    case Domain::Symbolic:
      return symbolic_weights(doc.graph);
    case Domain::Rational:
    case Domain::Gaussian: {
      std::vector<RatPoly> per;
      for (const auto& w : doc.exact_weights) {
        if (!w.is_real()) throw Error(Errc::DomainMismatch, "this command needs real rational weights");
        per.push_back(RatPoly(w.re()));
      }
      return weights_from_unoriented(doc.graph, per);
    }
    case Domain::Complex:
      break;
  }
  throw Error(Errc::DomainMismatch, "this command needs symbolic or rational weights");
}

EdgeWeights<Complex> document_complex_weights(const InputDocument& doc) {
  std::vector<Complex> per;
  switch (doc.weight_domain) {
    case Domain::Symbolic:
      per.assign(doc.graph.num_unoriented(), Complex(1.0, 0.0));
      break;
    case Domain::Rational:
    case Domain::Gaussian:
      for (const auto& w : doc.exact_weights) per.push_back(w.to_complex());
      break;
    case Domain::Complex:
      per = doc.complex_weights;
      break;
  }
  return weights_from_unoriented(doc.graph, per);
}

template <class S>
Representation<S> representation_from_spec(const RepSpec& spec) {
  std::vector<Matrix<S>> gens;
  if constexpr (std::is_same_v<S, Complex>) {
    if (spec.domain == Domain::Complex) {
      gens = spec.numeric;
    } else {
      for (const auto& m : spec.exact) gens.push_back(to_complex(m));
    }
  } else {
    if (spec.domain == Domain::Complex) throw Error(Errc::DomainMismatch, "an exact representation is required");
    for (const auto& m : spec.exact) {
      if constexpr (std::is_same_v<S, Rational>) {
        Matrix<Rational> r(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.size(); ++i) {
          if (!m(i).is_real()) throw Error(Errc::DomainMismatch, "a rational representation is required");
          r(i) = m(i).re();
        }
        gens.push_back(r);
      } else {
        gens.push_back(m);
      }
    }
  }
  return make_representation(spec.degree, std::move(gens));
}

template Representation<Rational> representation_from_spec<Rational>(const RepSpec&);
template Representation<Gaussian> representation_from_spec<Gaussian>(const RepSpec&);
template Representation<Complex> representation_from_spec<Complex>(const RepSpec&);

}  // namespace twistcov
