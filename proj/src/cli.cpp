#include "tensorforge/cli.hpp"

#include "tensorforge/deformations.hpp"
#include "tensorforge/problem_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

namespace tensorforge {

using nlohmann::json;

int exit_status(Verdict v) {
  switch (v) {
    case Verdict::pass: return exit_pass;
    case Verdict::fail: return exit_fail;
    case Verdict::refused: return exit_refused;
  }
  return exit_input_error;
}

namespace {

json value_json(const Value& v) {
  json coords = json::array();
  for (const Scalar& s : v.coords) coords.push_back(s.str());
  json out{{"rows", v.rows}, {"cols", v.cols}, {"coords", coords}, {"text", v.render()}};
  return out;
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks()) {
    json w = json::array();
    for (const Witness& x : c.witnesses)
      w.push_back(json{{"arguments", x.arguments}, {"lhs", value_json(x.lhs)}, {"rhs", value_json(x.rhs)}});
    checks.push_back(json{{"name", c.name},
                          {"identity", c.identity},
                          {"verdict", c.passed() ? "pass" : "fail"},
                          {"tuples", c.tuples},
                          {"failures", c.failure_count},
                          {"witnesses", w}});
  }
  return json{{"subject", r.subject()}, {"verdict", to_string(r.verdict())}, {"checks", checks}, {"notes", r.notes()}};
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace

std::string render_report(const Report& r) {
  std::ostringstream os;
  os << r.subject() << ": " << upper(to_string(r.verdict())) << '\n';
  for (const CheckResult& c : r.checks()) {
    os << "  [" << (c.passed() ? "pass" : "FAIL") << "] " << c.name << ": " << c.identity << " (" << c.tuples
       << " tuples";
    if (!c.passed()) os << ", " << c.failure_count << " failing";
    os << ")\n";
    for (const Witness& w : c.witnesses) {
      os << "      at (";
      for (std::size_t i = 0; i < w.arguments.size(); ++i) os << (i ? ", " : "") << w.arguments[i];
      os << "): lhs = " << w.lhs.render() << ", rhs = " << w.rhs.render() << '\n';
    }
    if (c.witnesses.size() < c.failure_count)
      os << "      (" << c.failure_count - c.witnesses.size() << " more witnesses omitted)\n";
  }
  for (const std::string& n : r.notes()) os << "  note: " << n << '\n';
  return os.str();
}

std::string render_report_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

namespace {

struct Options {
  std::string file;
  std::vector<std::string> params;
  std::string triples = "all";
  std::string degrees = "1";
  bool json_out = false;
  std::optional<std::size_t> max_witnesses;
  bool all_witnesses = false;
  std::string bracket, tensor, action, trace, derive;
  bool higher_order = false;

  CheckOptions check_options() const {
    CheckOptions o;
    if (max_witnesses) o.max_witnesses = *max_witnesses;
    if (all_witnesses) o.max_witnesses = std::nullopt;
    return o;
  }
};

/// What a command produced: the report and an optional result payload.
struct Output {
  Report report;
  json result;
  std::vector<std::string> lines;  // human form of `result`
};

using Command = std::function<Output(const ProblemFile&, const Options&)>;

std::string pick_bracket(const ProblemFile& p, const std::string& chosen, std::initializer_list<const char*> roles,
                         const std::string& what) {
  if (!chosen.empty()) return chosen;
  for (const char* r : roles)
    if (p.has_bracket(r)) return r;
  std::string names;
  for (const char* r : roles) names += (names.empty() ? "" : ", ") + std::string(r);
  throw InputError("no " + what + " bracket found (looked for " + names + "); use --bracket");
}

std::string or_default(const std::string& s, const char* d) { return s.empty() ? d : s; }

// Trace role for a Lie bracket on `space`: the explicit choice, else the
// first of sigma_L, sigma_H living on that space.
std::string pick_trace(const ProblemFile& p, const std::string& chosen, const std::string& space) {
  if (!chosen.empty()) return chosen;
  for (const char* r : {"sigma_L", "sigma_H"})
    if (p.has_trace(r) && p.traces.at(r).space == space) return r;
  throw InputError("no trace map on " + space + " (looked for sigma_L, sigma_H); use --trace");
}

// Lie-bracket role on the space of a given trace.
std::string lie_on_space(const ProblemFile& p, const std::string& chosen, const std::string& space) {
  if (!chosen.empty()) return chosen;
  for (const char* r : {"lie_L", "lie_H"})
    if (p.has_bracket(r) && p.space_of_bracket(r).name == space) return r;
  throw InputError("no Lie bracket on " + space + " (looked for lie_L, lie_H); use --bracket");
}

void add_ternary_result(Output& o, const std::string& key, const Space& dom, const Space& cod, const TrilinearTable& t,
                        bool increasing, const std::string& open = "[", const std::string& close = "]") {
  json entries = json::object();
  const std::size_t n = dom.dim();
  o.lines.push_back(key + ":");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = increasing ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = increasing ? j + 1 : 0; k < n; ++k) {
        const Vector& v = t.at(i, j, k);
        if (v.is_zero()) continue;
        const std::string text = Value::of(v, cod).render();
        entries[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] = text;
        o.lines.push_back("  " + open + dom.label(i) + "," + dom.label(j) + "," + dom.label(k) + close + " = " + text);
      }
  if (entries.empty()) o.lines.push_back("  (all zero)");
  o.result[key] = entries;
}

void add_matrix_result(Output& o, const std::string& key, const std::string& label, const Matrix& m) {
  json rows = json::array();
  std::string text = Value::of(m).render();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  o.result[key][label] = rows;
  o.lines.push_back("  " + label + " = " + text);
}

CheckResult single_check(std::string name, std::string identity, bool ok) {
  CheckResult c;
  c.name = std::move(name);
  c.identity = std::move(identity);
  c.tuples = 1;
  c.failure_count = ok ? 0 : 1;
  return c;
}

std::vector<std::size_t> parse_degrees(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("--degrees expects a comma-separated list of positive integers, got '" + text + "'");
    std::size_t d = std::stoul(item);
    if (d == 0) throw InputError("cohomology is reported from degree 1");
    out.push_back(d);
  }
  if (out.empty()) throw InputError("--degrees is empty");
  return out;
}

// ---------------------------------------------------------------- commands

EmbeddingTensorProblem net_of(const ProblemFile& p, const Options& o, const char* tensor_default = "Lambda") {
  return p.net(or_default(o.action, "rho"), or_default(o.bracket, "H"), or_default(o.tensor, tensor_default));
}

Output cmd_check_net(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem prob = net_of(p, o);
  const TripleMode mode = o.triples == "increasing" ? TripleMode::increasing : TripleMode::all;
  Output out{check_net(prob, mode, o.check_options()), json::object(), {}};
  if (mode == TripleMode::all && out.report.verdict() == Verdict::fail &&
      check_net(prob, TripleMode::increasing).passed())
    out.report.note("the identity holds on increasing triples but not on all ordered triples: its right-hand side "
                    "is not alternating in the arguments, so the two quantifiers differ");
  return out;
}

Output cmd_hemisemidirect(const ProblemFile& p, const Options& o) {
  const CoherentActionData c = p.coherent_action(or_default(o.action, "rho"), or_default(o.bracket, "H"));
  const ThreeLeibnizAlgebra semi = build_hemisemidirect(c);
  Output out{check_3leibniz(semi, o.check_options()), json::object(), {}};
  out.report.note(std::string("the action is ") + (check_coherent_action(c).passed() ? "" : "not ") + "coherent");
  add_ternary_result(out, "bracket", semi.space, semi.space, semi.bracket, false);
  return out;
}

Output cmd_descendent(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem prob = net_of(p, o);
  const ThreeLeibnizAlgebra d = descendent(prob);
  Output out{check_3leibniz(d, o.check_options()), json::object(), {}};
  Report hom = check_descendent_hom(prob, o.check_options());
  for (const CheckResult& c : hom.checks()) out.report.add(c);
  add_ternary_result(out, "bracket", d.space, d.space, d.bracket, false);
  return out;
}

Output cmd_induce_3ll(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem prob = net_of(p, o);
  const ThreeLeibnizLieAlgebra a = induced_3ll(prob);
  Output out{check_3ll(a, o.check_options()), json::object(), {}};
  if (out.report.passed()) {
    const ThreeLeibnizAlgebra sub = subadjacent(a);
    const TrilinearTable desc = descendent_bracket(prob);
    CheckRecorder rec("subadjacent bracket equals the descendent bracket", "[y1,y2,y3]_H + {y1,y2,y3} = [y1,y2,y3]_L",
                      o.check_options());
    const std::size_t n = a.lie3.space.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          rec.record_vectors(tuple_labels(a.lie3.space, {i, j, k}), sub.bracket.at(i, j, k), desc.at(i, j, k),
                             a.lie3.space);
    out.report.add(std::move(rec).finish());
  }
  add_ternary_result(out, "braces", a.lie3.space, a.lie3.space, a.braces, false, "{", "}");
  return out;
}

Output cmd_induced_rep(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem prob = net_of(p, o);
  const ThreeLeibnizRep r = induced_rep(prob);
  Output out{check_3leibniz_rep(r, o.check_options()), json::object(), {}};
  const Space& H = r.algebra.space;
  out.lines.push_back("operators (nonzero):");
  for (auto [name, table] : {std::pair{"l", &r.l_act}, {"m", &r.m_act}, {"r", &r.r_act}})
    for (std::size_t a = 0; a < H.dim(); ++a)
      for (std::size_t b = 0; b < H.dim(); ++b)
        if (!(*table)[a * H.dim() + b].is_zero())
          add_matrix_result(out, name, std::string(name) + "(" + H.label(a) + "," + H.label(b) + ")",
                            (*table)[a * H.dim() + b]);
  return out;
}

Output cmd_cohomology(const ProblemFile& p, const Options& o) {
  const std::vector<std::size_t> degrees = parse_degrees(o.degrees);
  const CochainComplex cx(net_of(p, o));
  Output out{Report("cohomology of " + cx.problem().H().name + " -> " + cx.problem().L().space.name), json::array(), {}};
  out.lines.push_back("   n   dim C   dim Z   dim B   dim H");
  for (std::size_t n : degrees) {
    const CohomologyDims d = cx.dims(n);
    out.report.add(single_check("coboundaries compose to zero in degree " + std::to_string(n),
                                "delta_" + std::to_string(n) + " delta_" + std::to_string(n - 1) + " = 0",
                                (cx.matrix(n) * cx.matrix(n - 1)).is_zero()));
    out.result.push_back(json{{"degree", n},
                              {"cochains", d.cochains},
                              {"cocycles", d.cocycles},
                              {"coboundaries", d.coboundaries},
                              {"cohomology", d.cohomology()}});
    std::ostringstream row;
    row << std::string(4 - std::min<std::size_t>(3, std::to_string(n).size()), ' ') << n;
    for (std::size_t v : {d.cochains, d.cocycles, d.coboundaries, d.cohomology()}) {
      std::string s = std::to_string(v);
      row << std::string(s.size() < 8 ? 8 - s.size() : 1, ' ') << s;
    }
    out.lines.push_back(row.str());
  }
  return out;
}

Output cmd_classify(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem prob = net_of(p, o);
  const Classification c = classify(prob);
  Output out{Report("infinitesimal deformations of " + prob.H().name + " -> " + prob.L().space.name), json::object(),
             {}};
  out.report.add(single_check("one representative per cohomology dimension", "#representatives = dim H^1",
                              c.representatives.size() == c.dims.cohomology()));
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    CheckResult r = single_check("representative " + std::to_string(i + 1) + " is a cocycle", "delta_1 vec(L1) = 0",
                                 check_infinitesimal(Deformation{prob, c.representatives[i]}).passed());
    out.report.add(std::move(r));
  }
  out.result["dim_H1"] = c.dims.cohomology();
  out.result["dim_Z1"] = c.dims.cocycles;
  out.result["dim_B1"] = c.dims.coboundaries;
  out.lines.push_back("dim H^1 = " + std::to_string(c.dims.cohomology()) + " (dim Z^1 = " +
                      std::to_string(c.dims.cocycles) + ", dim B^1 = " + std::to_string(c.dims.coboundaries) + ")");
  out.result["representatives"] = json::object();
  for (std::size_t i = 0; i < c.representatives.size(); ++i)
    add_matrix_result(out, "representatives", "L1_" + std::to_string(i + 1), c.representatives[i].matrix);
  return out;
}

Output cmd_deform_check(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem base = p.net(or_default(o.action, "rho"), or_default(o.bracket, "H"), "Lambda");
  const Deformation d{base, p.tensor(or_default(o.tensor, "Lambda1"))};
  Output out{check_infinitesimal(d, o.check_options()), json::object(), {}};
  if (o.higher_order) {
    out.lines.push_back("higher-order conditions (reported separately):");
    Report h = check_higher_order(d, o.check_options());
    std::istringstream rendered(render_report(h));
    for (std::string line; std::getline(rendered, line);) out.lines.push_back("  " + line);
    out.result["higher_order"] = report_json(h);
  }
  return out;
}

Output cmd_deform_equiv(const ProblemFile& p, const Options& o) {
  const EmbeddingTensorProblem base = p.net(or_default(o.action, "rho"), or_default(o.bracket, "H"), "Lambda");
  const Deformation d1{base, p.tensor("Lambda1")}, d2{base, p.tensor("Lambda1_prime")};
  auto w = are_equivalent(d1, d2);
  Output out{Report("equivalence of Lambda1 and Lambda1_prime"), json::object(), {}};
  out.report.add(single_check("directions differ by a degree-0 coboundary", "L1 - L1' = delta0(omega)", w.has_value()));
  if (!w) {
    out.report.note("the directions lie in different classes of H^1");
    return out;
  }
  for (const CheckResult& c : w->report.checks()) {
    if (c.name == "coboundary relation") {
      out.report.add(c);
      continue;
    }
    // Informational only; these never decide equivalence.
    out.report.note(c.name + " (informational): " + (c.passed() ? "holds" : std::to_string(c.failure_count) +
                                                                              " of " + std::to_string(c.tuples) +
                                                                              " tuples fail"));
    out.result["informational"][c.name] = c.passed();
  }
  for (const std::string& n : w->report.notes()) out.report.note(n);
  const Space& L = base.L().space;
  const WedgePairBasis wp(L.dim());
  json omega = json::object();
  std::string text;
  for (std::size_t q = 0; q < wp.size(); ++q) {
    const Scalar& c = w->bivector[q];
    if (c.is_zero()) continue;
    auto [a, b] = wp.pair(q);
    omega[std::to_string(a + 1) + "," + std::to_string(b + 1)] = c.str();
    text += (text.empty() ? "" : " + ") + c.str() + "*" + L.label(a) + "^" + L.label(b);
  }
  out.result["bivector"] = omega;
  out.lines.push_back("omega = " + (text.empty() ? std::string("0") : text));
  if (w->factors) {
    out.result["a1"] = Value::of(w->factors->first, L).render();
    out.result["a2"] = Value::of(w->factors->second, L).render();
    out.lines.push_back("a1 = " + Value::of(w->factors->first, L).render() +
                        ", a2 = " + Value::of(w->factors->second, L).render());
  }
  return out;
}

Output cmd_check_trace(const ProblemFile& p, const Options& o) {
  const std::string tname = or_default(o.trace, "sigma_L");
  const TraceMap s = p.trace(tname);
  const std::string lname = lie_on_space(p, o.bracket, s.space.name);
  if (p.has_bracket("triangle") && p.space_of_bracket("triangle").name == s.space.name)
    return Output{check_trace(s, p.leibniz_lie(lname, "triangle"), o.check_options()), json::object(), {}};
  return Output{check_trace(s, p.lie(lname), o.check_options()), json::object(), {}};
}

Output cmd_lie_to_3lie(const ProblemFile& p, const Options& o) {
  const std::string lname = pick_bracket(p, o.bracket, {"lie_L", "lie_H"}, "Lie");
  const LieAlgebra lie = p.lie(lname);
  const ThreeLieAlgebra a = threelie_from_lie(lie, p.trace(pick_trace(p, o.trace, lie.space.name)));
  Output out{check_3lie(a, o.check_options()), json::object(), {}};
  add_ternary_result(out, "bracket", a.space, a.space, a.bracket.as_general(), true);
  return out;
}

Output cmd_rho_sigma(const ProblemFile& p, const Options& o) {
  const LieCoherentAction a = p.lie_action(or_default(o.action, "rho_lie"));
  const CoherentActionData c = sigma_action(a, p.trace(pick_trace(p, "", a.lie_L.space.name)),
                                            p.trace(pick_trace(p, o.trace, a.lie_H.space.name)));
  return Output{check_coherent_action(c, o.check_options()), json::object(), {}};
}

LieNet lie_net_of(const ProblemFile& p, const Options& o) {
  LieCoherentAction a = p.lie_action(or_default(o.action, "rho_lie"));
  LinearMap lam = p.tensor(or_default(o.tensor, "Lambda"));
  return LieNet{std::move(a), std::move(lam)};
}

Output cmd_lift_net(const ProblemFile& p, const Options& o) {
  const LieNet n = lie_net_of(p, o);
  const EmbeddingTensorProblem lifted = lift_net(n, p.trace("sigma_L"), p.trace("sigma_H"));
  return Output{check_net(lifted, TripleMode::all, o.check_options()), json::object(), {}};
}

Output cmd_leibnizlie_to_3ll(const ProblemFile& p, const Options& o) {
  const std::string lname = pick_bracket(p, o.bracket, {"lie_H", "lie_L"}, "Lie");
  const LeibnizLieAlgebra a = p.leibniz_lie(lname, "triangle");
  const ThreeLeibnizLieAlgebra t = three_ll_from_leibniz_lie(a, p.trace(pick_trace(p, o.trace, a.lie.space.name)));
  Output out{check_3ll(t, o.check_options()), json::object(), {}};
  add_ternary_result(out, "braces", t.lie3.space, t.lie3.space, t.braces, false, "{", "}");
  return out;
}

Output cmd_check_net_hom(const ProblemFile& p, const Options& o) {
  const std::string action = or_default(o.action, "rho"), target = or_default(o.bracket, "H");
  NetHomomorphism h{p.tensor("f_L"), p.tensor("f_H"), p.net(action, target, "Lambda"), p.net(action, target, "Lambda2")};
  Output out{check_net_hom(h, o.check_options()), json::object(), {}};
  if (out.report.passed()) {
    Report nat = check_rep_naturality(h, o.check_options());
    for (const CheckResult& c : nat.checks()) out.report.add(c);
  }
  return out;
}

// ---------------------------------------------------------------- emit

ProblemFile derive(const ProblemFile& p, const Options& o) {
  ProblemFile d;
  const std::string& what = o.derive;
  d.name = (p.name.empty() ? std::string("problem") : p.name) + "-" + what;
  auto add_space = [&](const Space& s) { d.spaces.emplace(s.name, s); };
  if (what == "hemisemidirect") {
    const CoherentActionData c = p.coherent_action(or_default(o.action, "rho"), or_default(o.bracket, "H"));
    const ThreeLeibnizAlgebra semi = hemisemidirect(c);
    add_space(semi.space);
    d.brackets.emplace("leibniz", ternary_decl(semi.space.name, semi.bracket, false));
  } else if (what == "descendent") {
    const ThreeLeibnizAlgebra a = descendent(net_of(p, o));
    add_space(a.space);
    d.brackets.emplace("leibniz", ternary_decl(a.space.name, a.bracket, false));
  } else if (what == "induce-3ll") {
    const ThreeLeibnizLieAlgebra a = induced_3ll(net_of(p, o));
    add_space(a.lie3.space);
    d.brackets.emplace("H", ternary_decl(a.lie3.space.name, a.lie3.bracket.as_general(), true));
    d.brackets.emplace("braces", ternary_decl(a.lie3.space.name, a.braces, false));
  } else if (what == "induced-rep") {
    const ThreeLeibnizRep r = induced_rep(net_of(p, o));
    add_space(r.algebra.space);
    add_space(r.carrier);
    d.brackets.emplace("leibniz", ternary_decl(r.algebra.space.name, r.algebra.bracket, false));
    ActionDecl a;
    a.kind = ActionKind::leibniz_rep;
    a.algebra = "leibniz";
    a.carrier = r.carrier.name;
    a.left = r.l_act;
    a.middle = r.m_act;
    a.right = r.r_act;
    d.actions.emplace("rep3", std::move(a));
  } else if (what == "lie-to-3lie") {
    const std::string lname = pick_bracket(p, o.bracket, {"lie_L", "lie_H"}, "Lie");
    const LieAlgebra lie = p.lie(lname);
    const ThreeLieAlgebra a = threelie_from_lie(lie, p.trace(pick_trace(p, o.trace, lie.space.name)));
    add_space(a.space);
    d.brackets.emplace(lname == "lie_H" ? "H" : "L", ternary_decl(a.space.name, a.bracket.as_general(), true));
  } else if (what == "rho-sigma" || what == "lift-net") {
    const LieNet n = lie_net_of(p, o);
    const TraceMap sL = p.trace("sigma_L"), sH = p.trace("sigma_H");
    const CoherentActionData c = sigma_action(n.action, sL, sH);
    add_space(c.rep.algebra.space);
    add_space(c.rep.carrier);
    d.brackets.emplace("L", ternary_decl(c.rep.algebra.space.name, c.rep.algebra.bracket.as_general(), true));
    d.brackets.emplace("H", ternary_decl(c.rep.carrier.name, c.target_bracket.as_general(), true));
    ActionDecl a;
    a.kind = ActionKind::pair;
    a.algebra = "L";
    a.carrier = c.rep.carrier.name;
    a.pair = c.rep.rho;
    d.actions.emplace("rho", std::move(a));
    if (what == "lift-net") d.tensors.emplace("Lambda", tensor_decl(lift_net(n, sL, sH).lambda));
  } else if (what == "leibnizlie-to-3ll") {
    const std::string lname = pick_bracket(p, o.bracket, {"lie_H", "lie_L"}, "Lie");
    const LeibnizLieAlgebra a = p.leibniz_lie(lname, "triangle");
    const ThreeLeibnizLieAlgebra t = three_ll_from_leibniz_lie(a, p.trace(pick_trace(p, o.trace, a.lie.space.name)));
    add_space(t.lie3.space);
    d.brackets.emplace("H", ternary_decl(t.lie3.space.name, t.lie3.bracket.as_general(), true));
    d.brackets.emplace("braces", ternary_decl(t.lie3.space.name, t.braces, false));
  } else {
    throw InputError("unknown --derive target '" + what + "'");
  }
  return d;
}

const std::vector<std::pair<std::string, std::string>>& command_help() {
  static const std::vector<std::pair<std::string, std::string>> h{
      {"check-3lie", "fundamental identity of a 3-Lie bracket (--bracket, default L or H)"},
      {"check-3leibniz", "fundamental identity on all ordered tuples (--bracket, default leibniz, L or H)"},
      {"check-lie", "Jacobi identity (--bracket, default lie_L or lie_H)"},
      {"check-leibniz-lie", "Leibniz-Lie axioms of a Lie bracket with the triangle product"},
      {"check-3ll", "3-Leibniz-Lie axioms of a 3-Lie bracket with the braces"},
      {"check-rep", "representation laws of rho"},
      {"check-action", "coherence of rho on H"},
      {"check-net", "embedding tensor identity for Lambda (--triples)"},
      {"graph-check", "closure of the graph of Lambda in the hemisemidirect product"},
      {"hemisemidirect", "build the hemisemidirect bracket and check it"},
      {"descendent", "build the descendent bracket and check it"},
      {"induce-3ll", "build the induced 3-Leibniz-Lie algebra and check it"},
      {"check-rep-3leibniz", "axioms of a 3-Leibniz representation (rep3)"},
      {"induced-rep", "build the induced representation on L and check it"},
      {"cohomology", "cohomology dimensions (--degrees)"},
      {"classify", "classify infinitesimal deformations"},
      {"deform-check", "check a deformation direction Lambda1 (--higher-order)"},
      {"deform-equiv", "decide whether Lambda1 and Lambda1_prime are equivalent"},
      {"check-trace", "trace map conditions (--trace)"},
      {"lie-to-3lie", "3-Lie algebra from a Lie algebra and a trace map"},
      {"rho-sigma", "induced action of the 3-Lie algebras from a Lie action"},
      {"lift-net", "lift a Lie embedding tensor to the 3-Lie algebras"},
      {"leibnizlie-to-3ll", "3-Leibniz-Lie algebra from a Leibniz-Lie algebra"},
      {"check-net-hom", "homomorphism (f_L, f_H) from Lambda to Lambda2"},
      {"emit", "write the problem (or a --derive result) in canonical form"},
  };
  return h;
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> c{
      {"check-3lie",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_3lie(p.three_lie(pick_bracket(p, o.bracket, {"L", "H"}, "3-Lie")), o.check_options()),
                       json::object(), {}};
       }},
      {"check-3leibniz",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_3leibniz(p.three_leibniz(pick_bracket(p, o.bracket, {"leibniz", "L", "H"}, "ternary")),
                                      o.check_options()),
                       json::object(), {}};
       }},
      {"check-lie",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_lie(p.lie(pick_bracket(p, o.bracket, {"lie_L", "lie_H"}, "Lie")), o.check_options()),
                       json::object(), {}};
       }},
      {"check-leibniz-lie",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_leibniz_lie(p.leibniz_lie(pick_bracket(p, o.bracket, {"lie_H", "lie_L"}, "Lie"), "triangle"),
                                         o.check_options()),
                       json::object(), {}};
       }},
      {"check-3ll",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_3ll(p.three_ll(pick_bracket(p, o.bracket, {"H", "L"}, "3-Lie"), "braces"), o.check_options()),
                       json::object(), {}};
       }},
      {"check-rep",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_representation(p.representation(or_default(o.action, "rho")), o.check_options()),
                       json::object(), {}};
       }},
      {"check-action",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_coherent_action(p.coherent_action(or_default(o.action, "rho"), or_default(o.bracket, "H")),
                                             o.check_options()),
                       json::object(), {}};
       }},
      {"check-net", cmd_check_net},
      {"graph-check",
       [](const ProblemFile& p, const Options& o) {
         return Output{graph_check(net_of(p, o), o.check_options()), json::object(), {}};
       }},
      {"hemisemidirect", cmd_hemisemidirect},
      {"descendent", cmd_descendent},
      {"induce-3ll", cmd_induce_3ll},
      {"check-rep-3leibniz",
       [](const ProblemFile& p, const Options& o) {
         return Output{check_3leibniz_rep(p.leibniz_rep(or_default(o.action, "rep3")), o.check_options()),
                       json::object(), {}};
       }},
      {"induced-rep", cmd_induced_rep},
      {"cohomology", cmd_cohomology},
      {"classify", cmd_classify},
      {"deform-check", cmd_deform_check},
      {"deform-equiv", cmd_deform_equiv},
      {"check-trace", cmd_check_trace},
      {"lie-to-3lie", cmd_lie_to_3lie},
      {"rho-sigma", cmd_rho_sigma},
      {"lift-net", cmd_lift_net},
      {"leibnizlie-to-3ll", cmd_leibnizlie_to_3ll},
      {"check-net-hom", cmd_check_net_hom},
  };
  return c;
}

void print(const Output& o, const Options& opts, std::ostream& out) {
  if (opts.json_out) {
    json j = report_json(o.report);
    if (!o.result.is_null() && !o.result.empty()) j["result"] = o.result;
    out << j.dump(2) << '\n';
    return;
  }
  out << render_report(o.report);
  if (!o.lines.empty()) {
    out << "result:\n";
    for (const std::string& l : o.lines) out << "  " << l << '\n';
  }
}

std::map<std::string, Scalar> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, Scalar> out;
  for (const std::string& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects NAME=RATIONAL, got '" + it + "'");
    out[it.substr(0, eq)] = evaluate_expression(it.substr(eq + 1), {});
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for 3-Lie algebras, coherent actions and nonabelian embedding tensors", "tensorforge"};
  app.require_subcommand(1);
  Options opts;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : command_help()) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", opts.file, "problem file (JSON)")->required();
    s->add_option("--param", opts.params, "NAME=RATIONAL, overrides a declared parameter (repeatable)");
    s->add_flag("--json", opts.json_out, "machine-readable output");
    s->add_option("--max-witnesses", opts.max_witnesses, "witnesses kept per check (default 20)");
    s->add_flag("--all-witnesses", opts.all_witnesses, "keep every witness");
    s->add_option("--bracket", opts.bracket, "bracket name overriding the default role");
    s->add_option("--action", opts.action, "action name overriding the default role");
    s->add_option("--tensor", opts.tensor, "tensor name overriding the default role");
    s->add_option("--trace", opts.trace, "trace map name overriding the default role");
    if (name == "check-net") s->add_option("--triples", opts.triples, "all|increasing")->check(CLI::IsMember({"all", "increasing"}));
    if (name == "cohomology") s->add_option("--degrees", opts.degrees, "comma-separated degrees (default 1)");
    if (name == "deform-check") s->add_flag("--higher-order", opts.higher_order, "also check the higher-order conditions");
    if (name == "emit") s->add_option("--derive", opts.derive, "derived structure to write instead of the input");
    subs[name] = s;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (auto& [name, s] : subs)
      if (s->parsed()) help = s->help();
    err << "error: " << e.what() << '\n';
    if (!help.empty()) err << help;
    return exit_input_error;
  }
  std::string command;
  for (auto& [name, s] : subs)
    if (s->parsed()) command = name;

  try {
    const ProblemFile p = load_problem(opts.file, parse_params(opts.params));
    if (command == "emit") {
      out << emit(opts.derive.empty() ? p : derive(p, opts));
      return exit_pass;
    }
    const Output o = commands().at(command)(p, opts);
    print(o, opts, out);
    return exit_status(o.report.verdict());
  } catch (const PreconditionError& e) {
    Output o{e.report(), json::object(), {}};
    o.report.refuse(e.what());
    print(o, opts, out);
    return exit_refused;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace tensorforge
