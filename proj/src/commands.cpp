#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "twistcov/homotopy.hpp"
#include "twistcov/io.hpp"
#include "twistcov/oracles.hpp"
#include "twistcov/theorems.hpp"
#include "twistcov/zeta.hpp"

namespace twistcov {

namespace {

// Largest operator on which a symbolic determinant / characteristic polynomial is attempted.
constexpr int kSymbolicLimit = 24;

void guard_symbolic(Eigen::Index rows, const std::string& what) {
  if (rows > kSymbolicLimit)
    throw Error(Errc::BudgetExceeded, what + " of size " + std::to_string(rows) + " exceeds the symbolic limit " +
                                          std::to_string(kSymbolicLimit));
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s.empty() ? "-" : s;
}

VoltageAssignment cover_voltage(const InputDocument& doc, const RunOptions& opts) {
  if (doc.voltage) return *doc.voltage;
  if (!opts.degree) throw Error(Errc::SemanticError, "a 'voltage' block or --degree is required");
  const int d = *opts.degree;
  if (d < 1) throw Error(Errc::SemanticError, "--degree must be positive");
  const int rank = make_presentation(doc.graph, 0).rank();
  Permutation shift(d);
  for (int i = 0; i < d; ++i) shift[i] = (i + 1) % d;
  return VoltageAssignment{d, std::vector<Permutation>(rank, shift)};
}

CoveringMap document_cover(const InputDocument& doc, const RunOptions& opts, Report& r) {
  if (!is_connected(doc.graph)) throw Error(Errc::NotConnected, "base graph is not connected");
  CoveringMap p = build_cover(make_presentation(doc.graph, 0), cover_voltage(doc, opts));
  r.add("cover degree", std::to_string(p.degree));
  r.add("cover vertices", std::to_string(p.cover.num_vertices()));
  if (!is_cover_connected(p)) throw Error(Errc::CoverNotConnected, "cover disconnected");
  return p;
}

std::string poly_text(const RatPoly& p) { return p.to_string(); }

/// Integrality of a quotient is only meaningful for symbolic or integer edge weights.
bool integral_weights(const InputDocument& doc) {
  if (doc.weight_domain == Domain::Symbolic) return true;
  if (doc.weight_domain == Domain::Complex) return false;
  return std::all_of(doc.exact_weights.begin(), doc.exact_weights.end(),
                     [](const Gaussian& w) { return w.is_integer(); });
}

void check_integral(const InputDocument& doc, Report& r, std::string name, bool ok) {
  if (integral_weights(doc))
    r.check(std::move(name), ok);
  else
    r.add(std::move(name), "not checked (non-integer weights)");
}

std::string series_text(const std::vector<Rational>& s) {
  std::string out;
  for (std::size_t k = 1; k < s.size(); ++k) out += (k > 1 ? " " : "") + s[k].to_string();
  return out;
}

std::string series_text(const std::vector<Gaussian>& s) {
  std::string out;
  for (std::size_t k = 1; k < s.size(); ++k) out += (k > 1 ? " " : "") + format_gaussian(s[k]);
  return out;
}

EdgeWeights<Complex> sample_complex_weights(const InputDocument& doc, unsigned seed) {
  if (doc.weight_domain != Domain::Symbolic) return document_complex_weights(doc);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  std::vector<Complex> per;
  for (int k = 0; k < doc.graph.num_unoriented(); ++k) per.emplace_back(dist(rng), 0.0);
  return weights_from_unoriented(doc.graph, per);
}

// ---------------------------------------------------------------------------

void cmd_validate(const InputDocument& doc, const RunOptions& opts, Report& r) {
  const Graph& g = doc.graph;
  r.add("vertices", std::to_string(g.num_vertices()));
  r.add("directed edges", std::to_string(g.num_edges()));
  r.add("weights", domain_name(doc.weight_domain));
  r.check("involution", validate_graph(g).ok());
  const bool connected = is_connected(g);
  r.check("connected", connected);
  if (connected) r.add("rank", std::to_string(make_presentation(g, 0).rank()));
  if (doc.rotation) {
    FaceStructure fs = faces(g, *doc.rotation);
    r.add("faces", std::to_string(fs.walks.size()));
    r.add("euler characteristic", std::to_string(fs.euler_characteristic));
  }
  if (doc.voltage || opts.degree) {
    CoveringMap p = build_cover(make_presentation(g, 0), cover_voltage(doc, opts));
    ValidationReport vr = validate_covering(p);
    r.check("covering map", vr.ok());
    r.check("cover connected", is_cover_connected(p));
  }
  if (doc.rep) r.add("rep", domain_name(doc.rep->domain) + " degree " + std::to_string(doc.rep->degree) +
                                 " on " + std::to_string(doc.rep->rank()) + " generators");
  if (!doc.irreducibles.empty()) r.add("irreducibles", std::to_string(doc.irreducibles.size()));
}

void cmd_cover(const InputDocument& doc, const RunOptions& opts, Report& r) {
  CoveringMap p = document_cover(doc, opts, r);
  r.check("covering map", validate_covering(p).ok());
  r.add("cover edges", std::to_string(p.cover.num_unoriented()));
  for (EdgeId e : p.cover.unoriented_edges())
    r.add("edge " + std::to_string(e), std::to_string(p.cover.src(e)) + " -> " + std::to_string(p.cover.tgt(e)) +
                                           " over " + std::to_string(p.edge_map[e]));
  NormalityResult nr = is_normal(p);
  r.add("normal", nr.normal ? "yes" : "no");
  if (nr.normal) {
    r.add("galois order", std::to_string(nr.group->order()));
    r.add("galois abelian", nr.group->is_abelian() ? "yes" : "no");
    r.add("generator images", join_ints(nr.group->generator_images));
  }
  CosetData cd = coset_data(p);
  r.add("cover rank", std::to_string(cd.cover_presentation.rank()));
  for (int k = 0; k < cd.num_cosets(); ++k) r.add("coset " + std::to_string(k), to_string(cd.transversal[k]));
}

void cmd_verify_main(const InputDocument& doc, const RunOptions& opts, Report& r) {
  CoveringMap p = document_cover(doc, opts, r);
  CosetData cd = coset_data(p);
  RepSpec spec = doc.rep.value_or(RepSpec{});
  if (!doc.rep) {
    spec.exact.assign(cd.cover_presentation.rank(), identity<Gaussian>(1));
  }
  if (spec.rank() != cd.cover_presentation.rank())
    throw Error(Errc::DimensionMismatch, "rep must give " + std::to_string(cd.cover_presentation.rank()) +
                                             " generators of the cover presentation");
  auto report = [&](const auto& cert) {
    r.add("psi size", std::to_string(cert.psi.rows()) + "x" + std::to_string(cert.psi.cols()));
    r.add("operator size", std::to_string(cert.a_base.rows()));
    r.check("psi invertible", cert.psi_invertible);
    r.check("psi A_cover = A_base psi", cert.commutes);
  };
  if (spec.domain == Domain::Complex || doc.weight_domain == Domain::Complex) {
    auto cert = verify_main(p, cd, representation_from_spec<Complex>(spec), sample_complex_weights(doc, opts.seed), opts.tol);
    report(cert);
    r.add("max deviation", format_complex(Complex(cert.max_deviation, 0.0)));
  } else if (spec.domain == Domain::Gaussian) {
    EdgeWeights<RatPoly> x = document_weights(doc);
    EdgeWeights<GaussPoly> xg{{}, x.symmetry};
    for (const auto& w : x.values) xg.values.push_back(GaussPoly(w));
    report(verify_main(p, cd, representation_from_spec<Gaussian>(spec), xg));
  } else {
    report(verify_main(p, cd, representation_from_spec<Rational>(spec), document_weights(doc)));
  }
}

void cmd_cor1(const InputDocument& doc, const RunOptions& opts, Report& r) {
  CoveringMap p = document_cover(doc, opts, r);
  guard_symbolic(p.cover.num_vertices(), "cover operator");
  Cor1Result c = cor1_certificate(p, coset_data(p), document_weights(doc));
  r.add("base charpoly", poly_text(c.division.divisor));
  r.add("cover charpoly", poly_text(c.division.dividend));
  if (c.division.quotient) r.add("quotient", poly_text(*c.division.quotient));
  r.add("complement charpoly", poly_text(c.complement_charpoly));
  r.check("divides", c.division.verified());
  check_integral(doc, r, "integral quotient", c.division.integral);
  r.check("monic quotient", c.quotient_monic);
  r.check("quotient = complement charpoly", c.quotient_matches_complement);
}

void cmd_cor2(const InputDocument& doc, const RunOptions& opts, Report& r) {
  CoveringMap p = document_cover(doc, opts, r);
  Cor2Result c;
  if (!doc.irreducibles.empty()) {
    std::vector<Representation<Complex>> irr;
    for (const auto& s : doc.irreducibles) irr.push_back(representation_from_spec<Complex>(s));
    c = cor2_certificate(p, document_weights(doc), irr, opts.tol, opts.seed);
  } else {
    guard_symbolic(p.cover.num_vertices(), "cover operator");
    c = cor2_certificate(p, document_weights(doc), opts.tol, opts.seed);
  }
  r.add("mode", c.exact ? "exact" : "numeric");
  r.add("irreducibles", std::to_string(c.num_irreducibles));
  if (c.cover_charpoly) r.add("cover charpoly", c.cover_charpoly->to_string());
  if (c.product) r.add("product", c.product->to_string());
  if (!c.exact) r.add("max relative deviation", format_complex(Complex(c.max_relative_deviation, 0.0)));
  r.check("charpoly factorization", c.pass);
}

void cmd_trees(const InputDocument& doc, const RunOptions& opts, Report& r) {
  CoveringMap p = document_cover(doc, opts, r);
  guard_symbolic(p.cover.num_vertices(), "cover Laplacian");
  TreeResult t = tree_certificates(p, document_weights(doc));
  r.add("Z_ST base", poly_text(t.zst_base));
  r.add("Z_ST cover", poly_text(t.zst_cover));
  if (t.st.quotient) r.add("Z_ST quotient", poly_text(*t.st.quotient));
  r.add("Z_RSF base", poly_text(t.zrsf_base));
  r.add("Z_RSF cover", poly_text(t.zrsf_cover));
  if (t.rsf.quotient) r.add("Z_RSF quotient", poly_text(*t.rsf.quotient));
  check_integral(doc, r, "Z_ST integral", t.zst_integral);
  r.check("Z_ST divides", t.st.verified());
  check_integral(doc, r, "Z_ST quotient integral", t.st.integral);
  r.check("Z_RSF divides", t.rsf.verified());
  check_integral(doc, r, "Z_RSF quotient integral", t.rsf.integral);
}

void cmd_dimer(const InputDocument& doc, const RunOptions& opts, Report& r) {
  if (!doc.rotation) throw Error(Errc::SemanticError, "dimer needs a rotation system");
  CoveringMap p = document_cover(doc, opts, r);
  guard_symbolic(p.cover.num_vertices(), "cover Kasteleyn matrix");
  DimerResult d = dimer_certificate(p, *doc.rotation, document_weights(doc), doc.outer_face);
  std::vector<int> chosen(d.orientation.chosen.begin(), d.orientation.chosen.end());
  r.add("orientation", join_ints(chosen));
  r.add("det base", poly_text(d.det_base));
  r.add("det cover", poly_text(d.det_cover));
  r.add("det complement", poly_text(d.det_complement));
  r.add("Z base", poly_text(d.z_base));
  r.add("Z cover", poly_text(d.z_cover));
  if (d.division.quotient) r.add("Z quotient", poly_text(*d.division.quotient));
  r.check("det factorization", d.det_factorization);
  r.check("Z_base divides Z_cover", d.division.verified());
  check_integral(doc, r, "Z quotient integral", d.division.integral);
  r.check("Z_base^2 = det base", d.kasteleyn_base);
  r.check("Z_cover^2 = det cover", d.kasteleyn_cover);
}

void cmd_kos(const InputDocument& doc, const RunOptions& opts, Report& r) {
  if (!doc.torus) throw Error(Errc::SemanticError, "kos needs 'torus' voltages");
  KosResult k = kos_certificate(doc.graph, *doc.torus, document_complex_weights(doc), opts.m, opts.n, opts.tol);
  r.add("m", std::to_string(opts.m));
  r.add("n", std::to_string(opts.n));
  r.add("det cover", format_complex(k.lhs));
  r.add("product", format_complex(k.rhs));
  r.add("abs deviation", format_complex(Complex(k.abs_deviation, 0.0)));
  r.check("det = product over characters", k.pass);
}

void cmd_zeta_lseries(const InputDocument& doc, const RunOptions& opts, Report& r) {
  const Graph& g = doc.graph;
  Pi1Presentation pres = make_presentation(g, 0);
  EdgeWeights<RatPoly> x = document_weights(doc);
  RegistryPtr reg;
  for (const auto& w : x.values) reg = merge_registries(reg, w.registry());
  reg = extend_registry(reg, "u");
  const RatPoly u = RatPoly::variable(reg, reg->size() - 1);
  for (auto& w : x.values) w = w.with_registry(reg) * u;
  RepSpec spec = doc.rep.value_or(RepSpec{});
  if (!doc.rep) spec.exact.assign(pres.rank(), identity<Gaussian>(1));
  if (spec.rank() != pres.rank()) throw Error(Errc::DimensionMismatch, "rep must give one matrix per base generator");
  guard_symbolic(static_cast<Eigen::Index>(g.num_edges()) * spec.degree, "line operator");
  if (spec.domain == Domain::Rational) {
    r.add("det(I - A_line)", poly_text(l_series_inverse(g, x, pres, representation_from_spec<Rational>(spec))));
  } else if (spec.domain == Domain::Gaussian) {
    EdgeWeights<GaussPoly> xg{{}, x.symmetry};
    for (const auto& w : x.values) xg.values.push_back(GaussPoly(w));
    r.add("det(I - A_line)", l_series_inverse(g, xg, pres, representation_from_spec<Gaussian>(spec)).to_string());
  } else {
    throw Error(Errc::DomainMismatch, "zeta-lseries needs an exact representation");
  }
  if (doc.voltage || opts.degree) {
    CoveringMap p = document_cover(doc, opts, r);
    guard_symbolic(p.cover.num_edges(), "cover line operator");
    Pi1Presentation cp = make_presentation(p.cover, p.lifted_base);
    RatPoly top = l_series_inverse(p.cover, lift_weights(p, x), cp, trivial_representation<Rational>(cp.rank()));
    RatPoly bottom = l_series_inverse(g, x, pres, trivial_representation<Rational>(pres.rank()));
    auto q = top.exact_div(bottom);
    r.add("cover det(I - A_line)", poly_text(top));
    if (q) r.add("quotient", poly_text(*q));
    r.check("base divides cover", q.has_value());
    check_integral(doc, r, "quotient integral", q.has_value() && q->is_integral());
    r.check("line digraph of the cover covers", line_digraph_is_cover(p));
  }
}

template <class S>
void amitsur_into(const Graph& g, const EdgeWeights<S>& x, const Pi1Presentation& pres, const Representation<S>& rho,
                  int L, Report& r) {
  AmitsurReport<S> a = amitsur_check(g, x, pres, rho, L);
  r.add("max length", std::to_string(L));
  r.add("prime cycles", std::to_string(a.num_prime_cycles));
  r.add("trace side", series_text(a.trace_side));
  r.add("cycle side", series_text(a.cycle_side));
  r.add("log det side", series_text(a.log_det_side));
  r.check("coefficientwise equality", a.pass);
}

void cmd_zeta_amitsur(const InputDocument& doc, const RunOptions& opts, Report& r) {
  const Graph& g = doc.graph;
  Pi1Presentation pres = make_presentation(g, 0);
  RepSpec spec = doc.rep.value_or(RepSpec{});
  if (!doc.rep) spec.exact.assign(pres.rank(), identity<Gaussian>(1));
  if (spec.rank() != pres.rank()) throw Error(Errc::DimensionMismatch, "rep must give one matrix per base generator");
  if (doc.weight_domain == Domain::Complex || spec.domain == Domain::Complex)
    throw Error(Errc::DomainMismatch, "zeta-amitsur runs in exact arithmetic");
  std::vector<Gaussian> per = doc.exact_weights;
  if (doc.weight_domain == Domain::Symbolic) {
    per.assign(g.num_unoriented(), Gaussian(1));
    r.add("weights", "unit");
  }
  const bool real = spec.domain == Domain::Rational &&
                    std::all_of(per.begin(), per.end(), [](const Gaussian& w) { return w.is_real(); });
  if (real) {
    std::vector<Rational> rw;
    for (const auto& w : per) rw.push_back(w.re());
    amitsur_into(g, weights_from_unoriented(g, rw), pres, representation_from_spec<Rational>(spec), opts.max_length, r);
  } else {
    amitsur_into(g, weights_from_unoriented(g, per), pres, representation_from_spec<Gaussian>(spec), opts.max_length, r);
  }
}

void cmd_artin(const InputDocument& doc, const RunOptions& opts, Report& r) {
  CoveringMap p = document_cover(doc, opts, r);
  guard_symbolic(p.cover.num_vertices(), "cover operator");
  GaloisGroup g = galois_group(p);
  std::vector<int> h = doc.subgroup.value_or(std::vector<int>{g.identity});
  Tower t = make_tower(p, h);
  r.add("subgroup", join_ints(t.subgroup));
  r.add("quotient vertices", std::to_string(t.lower.cover.num_vertices()));
  ArtinReport a = artin_axioms(t, document_weights(doc));
  for (const auto& c : a.checks) r.check("axiom " + std::to_string(c.axiom) + ": " + c.detail, c.pass);
}

std::vector<RatPoly> unoriented_poly_weights(const InputDocument& doc) {
  return unoriented_weights(doc.graph, document_weights(doc));
}

void cmd_oracle_trees(const InputDocument& doc, const RunOptions&, Report& r) {
  auto res = enum_spanning_trees(doc.graph, unoriented_poly_weights(doc));
  r.add("spanning trees", std::to_string(res.count));
  r.add("Z_ST", poly_text(res.partition));
  if (is_connected(doc.graph)) {
    guard_symbolic(doc.graph.num_vertices(), "Laplacian");
    EdgeWeights<RatPoly> x = document_weights(doc);
    RegistryPtr reg;
    for (const auto& w : x.values) reg = merge_registries(reg, w.registry());
    RatPoly z = zst_from_charpoly(charpoly(laplacian(doc.graph, x), reg), doc.graph.num_vertices());
    r.check("matches (-1)^(n-1) c_1 / n", z == res.partition.with_registry(z.registry()));
  }
}

void cmd_oracle_forests(const InputDocument& doc, const RunOptions&, Report& r) {
  auto res = enum_rooted_forests(doc.graph, unoriented_poly_weights(doc));
  r.add("Z_RSF", poly_text(res.rsf));
  for (std::size_t i = 1; i < res.by_components.size(); ++i)
    r.add("forests with " + std::to_string(i) + " trees", poly_text(res.by_components[i]));
  guard_symbolic(doc.graph.num_vertices(), "Laplacian");
  EdgeWeights<RatPoly> x = document_weights(doc);
  RegistryPtr reg;
  for (const auto& w : x.values) reg = merge_registries(reg, w.registry());
  RatPoly P = charpoly(laplacian(doc.graph, x), reg);
  const int n = doc.graph.num_vertices();
  r.check("matches (-1)^n P(-1)", zrsf_from_charpoly(P, n) == res.rsf.with_registry(P.registry()));
  bool all = true;
  for (int i = 1; i <= n; ++i) {
    RatPoly c = lambda_coefficient(P, i);
    RatPoly f = res.by_components[i].with_registry(c.registry());
    all = all && ((n - i) % 2 == 0 ? c == f : c == -f);
  }
  r.check("c_i = (-1)^(n-i) forests with i trees", all);
}

void cmd_oracle_matchings(const InputDocument& doc, const RunOptions&, Report& r) {
  EdgeWeights<RatPoly> x = document_weights(doc);
  auto res = enum_perfect_matchings(doc.graph, unoriented_weights(doc.graph, x));
  r.add("perfect matchings", std::to_string(res.count));
  r.add("Z", poly_text(res.partition));
  if (doc.rotation) {
    guard_symbolic(doc.graph.num_vertices(), "Kasteleyn matrix");
    Orientation o = kasteleyn_orientation(doc.graph, *doc.rotation, doc.outer_face);
    RatPoly d = det(adjacency(doc.graph, kasteleyn_weights(doc.graph, o, x)));
    r.add("det Kasteleyn", poly_text(d));
    r.check("Z^2 = det Kasteleyn", res.partition * res.partition == d);
  }
}

using Handler = std::function<void(const InputDocument&, const RunOptions&, Report&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"validate", cmd_validate},         {"cover", cmd_cover},
      {"verify-main", cmd_verify_main},   {"cor1", cmd_cor1},
      {"cor2", cmd_cor2},                 {"trees", cmd_trees},
      {"dimer", cmd_dimer},               {"kos", cmd_kos},
      {"zeta-lseries", cmd_zeta_lseries}, {"zeta-amitsur", cmd_zeta_amitsur},
      {"artin-axioms", cmd_artin},        {"oracle-trees", cmd_oracle_trees},
      {"oracle-forests", cmd_oracle_forests}, {"oracle-matchings", cmd_oracle_matchings},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::TooLarge:
    case Errc::TooLargeForExactExpansion:
      return BudgetExceededExit;
    case Errc::InternalCosetError:
    case Errc::TransversalCheckFailed:
    case Errc::DivisionFailed:
    case Errc::QuotientConstructionFailed:
      return Falsified;
    default:
      return InputError;
  }
}

Report run(const std::string& command, const InputDocument& doc, const RunOptions& opts) {
  Report r;
  r.command = command;
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    r.error = "unknown command '" + command + "'";
    r.exit_code = InputError;
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(doc, opts, r);
    r.exit_code = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.second; }) ? Pass : Falsified;
    if (command == "validate" && r.exit_code != Pass) r.exit_code = InputError;
  } catch (const Error& e) {
    r.error = e.what();
    r.exit_code = exit_code_for(e.code());
  }
  if (opts.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string Report::render() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  for (const auto& [k, v] : payload) out << k << ": " << v << '\n';
  int passed = 0;
  for (const auto& [name, ok] : checks) {
    out << "check " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
    passed += ok;
  }
  if (error) out << "error: " << *error << '\n';
  static const char* status[] = {"pass", "falsified", "input-error", "budget-exceeded"};
  out << "status: " << status[exit_code] << '\n';
  if (seconds) out << "time: " << *seconds << " s\n";
  out << "--\n";
  out << "command=" << command << '\n';
  out << "checks_passed=" << passed << '\n';
  out << "checks_total=" << checks.size() << '\n';
  out << "exit_code=" << exit_code << '\n';
  return out.str();
}

}  // namespace twistcov
