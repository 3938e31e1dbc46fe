#include "diffchow/cli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "diffchow/charset.hpp"
#include "diffchow/chow.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/generic.hpp"
#include "diffchow/parser.hpp"

namespace diffchow {

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "Qx") return Field::Qx;
  throw UsageError("unknown field '" + s + "' (expected Q or Qx)");
}

std::string to_string(Field f) { return f == Field::Q ? "Q" : "Qx"; }

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool looks_like_variable(const std::string& s) {
  if (s == "x") return true;
  try {
    parse_var(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Var symbol_from(const std::string& s) {
  Var v;
  try {
    v = parse_var(s);
  } catch (const ParseError&) {
    throw UsageError("'" + s + "' is not a variable name");
  }
  if (v.shift() != 0) throw UsageError("declare '" + s + "' without a shift");
  return v;
}

}  // namespace

Ranking parse_ranking(const std::string& spec, const std::vector<Var>& vars) {
  const auto colon = spec.find(':');
  const std::string kind = trim(spec.substr(0, colon));
  std::vector<Var> order = vars;
  if (colon != std::string::npos) {
    order.clear();
    for (const auto& name : split(spec.substr(colon + 1), '<')) order.push_back(symbol_from(name));
    std::vector<Var> a = order, b = vars;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw UsageError("ranking '" + spec + "' must list every declared variable exactly once");
  }
  if (kind == "orderly") return Ranking::orderly(order);
  if (kind == "elim") return Ranking::elimination(order);
  throw UsageError("unknown ranking '" + spec + "' (expected orderly, orderly:a<b or elim:a<b)");
}

Session parse_session(const std::string& text, std::optional<Field> field_override,
                      std::optional<std::string> ranking_override) {
  Session s;
  std::optional<Field> file_field;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::set<Var> declared;

  auto parse_expr = [&](const std::string& expr, std::size_t offset) {
    ParseOptions po;
    po.allow_x = (field_override ? *field_override : file_field.value_or(Field::Q)) == Field::Qx;
    po.declared = declared;
    po.names = &s.names;
    try {
      return parse_poly(expr, po);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at column "));
      throw ParseError("line " + std::to_string(lineno) + ": " + msg, offset + e.column());
    }
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    const std::size_t kw_start = line.find_first_not_of(" \t");
    const std::size_t kw_end = line.find_first_of(" \t", kw_start);
    const std::string kw = line.substr(kw_start, kw_end == std::string::npos ? std::string::npos : kw_end - kw_start);
    const std::size_t rest_at = kw_end == std::string::npos ? line.size() : kw_end;
    const std::string rest = line.substr(rest_at);

    if (kw == "field") {
      const auto w = words(rest);
      if (w.size() != 1) throw UsageError(where + "field takes one argument");
      file_field = parse_field(w[0]);
    } else if (kw == "vars" || kw == "params") {
      for (const auto& w : words(rest)) {
        const Var v = symbol_from(w);
        if (kw == "vars" && (!v.is_main() || v.block() != 0))
          throw UsageError(where + "'" + w + "' is not a main variable y<j>");
        if (kw == "params" && !v.is_param()) throw UsageError(where + "'" + w + "' is not a parameter u<i>_<j>");
        if (!declared.insert(v).second) throw UsageError(where + "'" + w + "' declared twice");
        (kw == "vars" ? s.vars : s.params).push_back(v);
      }
    } else if (kw == "ranking") {
      s.ranking_text = trim(rest);
    } else if (kw == "let" || kw == "poly") {
      const auto eq = rest.find('=');
      std::string name;
      std::size_t expr_at = rest_at;
      if (eq != std::string::npos) {
        name = trim(rest.substr(0, eq));
        expr_at = rest_at + eq + 1;
      } else if (kw == "let") {
        throw UsageError(where + "let needs NAME = EXPR");
      }
      if (!name.empty()) {
        if (!is_identifier(name) || looks_like_variable(name))
          throw UsageError(where + "'" + name + "' cannot be used as a name");
        if (s.names.count(name)) throw UsageError(where + "name '" + name + "' bound twice");
      }
      const std::string expr = line.substr(expr_at);
      const std::size_t lead = expr.find_first_not_of(" \t");
      if (lead == std::string::npos) throw UsageError(where + "missing expression");
      Poly p = parse_expr(expr.substr(lead), expr_at + lead);
      if (!name.empty()) s.names[name] = p;
      if (kw == "poly") {
        s.polys.push_back(std::move(p));
        s.poly_names.push_back(name);
      }
    } else {
      throw UsageError(where + "unknown statement '" + kw + "'");
    }
  }
  s.field = field_override ? *field_override : file_field.value_or(Field::Q);
  if (s.field == Field::Q)
    for (const auto& p : s.polys)
      if (!p.has_rational_coefficients()) throw UsageError("x occurs but the field is Q");
  if (s.vars.empty()) throw UsageError("no variables declared (use 'vars y1 ...')");
  if (ranking_override) s.ranking_text = *ranking_override;
  s.ranking = parse_ranking(s.ranking_text, s.vars);
  return s;
}

std::vector<std::vector<Coeff>> parse_matrix(const std::string& text, Field field) {
  std::vector<std::vector<Coeff>> rows;
  ParseOptions po;
  po.allow_x = field == Field::Qx;
  po.declared = std::set<Var>{};
  for (const auto& row : split(text, ';')) {
    std::vector<Coeff> r;
    for (const auto& cell : split(row, ',')) {
      if (cell.empty()) throw UsageError("empty matrix entry in '" + text + "'");
      Poly p;
      try {
        p = parse_poly(cell, po);
      } catch (const ParseError& e) {
        throw UsageError("bad matrix entry '" + cell + "': " + e.what());
      }
      if (!p.is_constant()) throw UsageError("matrix entry '" + cell + "' is not a field element");
      r.push_back(p.constant_term());
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw UsageError("matrix '" + text + "' is not square");
  return rows;
}

Node& Node::set(const std::string& key, Node v) {
  auto& m = std::get<Map>(value);
  m.emplace_back(key, std::move(v));
  return m.back().second;
}

Node& Node::push(Node v) {
  auto& l = std::get<List>(value);
  l.push_back(std::move(v));
  return l.back();
}

std::string format_dimension_polynomial(int d, int h) {
  if (d == 0) return std::to_string(h);
  std::string s = d == 1 ? "t" : std::to_string(d) + "*t";
  const int c = d + h;
  if (c != 0) s += "+" + std::to_string(c);
  return s;
}

namespace {

Node poly_list(const std::vector<Poly>& ps) {
  Node l = Node::list();
  for (const auto& p : ps) l.push(Node::str(p.to_string()));
  return l;
}

Node int_list(const std::vector<int>& xs) {
  Node l = Node::list();
  for (int x : xs) l.push(Node::num(x));
  return l;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string var_set(const std::set<Var>& vs) {
  std::string s;
  for (const Var v : vs) s += (s.empty() ? "" : " ") + v.to_string();
  return s.empty() ? "(none)" : s;
}

Node var_list(const std::set<Var>& vs) {
  Node l = Node::list();
  for (const Var v : vs) l.push(Node::str(v.to_string()));
  return l;
}

// y1..yn in increasing index order; throws when the declared variables differ.
std::uint32_t standard_n(const Session& s) {
  std::vector<Var> vs = s.vars;
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] != Var::y(static_cast<std::uint32_t>(i + 1)))
      throw UsageError("this command needs the variables y1..yn");
  return static_cast<std::uint32_t>(vs.size());
}

Chain prime_chain(const Session& s) {
  const Ranking r = orderly_ranking(standard_n(s));
  std::vector<Poly> nz;
  for (const auto& p : s.polys)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) return Chain({}, r);
  return char_set(nz, r).chain;
}

void describe_chow(const ChowData& cd, Outcome& o, const std::string& prefix = "") {
  o.text.push_back(prefix + "F = " + cd.F.to_string());
  for (std::size_t i = 0; i < cd.companions.size(); ++i)
    o.text.push_back(prefix + "companion " + std::to_string(i + 1) + " = " + cd.companions[i].to_string());
  o.text.push_back(prefix + "n=" + std::to_string(cd.n) + " d=" + std::to_string(cd.d) + " h=" + std::to_string(cd.h) +
                   " degree=" + std::to_string(cd.degree) + " euler=" + join_ints(cd.euler_degrees) +
                   " bound=" + std::to_string(cd.bound));
  o.text.push_back(prefix + "certification: " + to_string(cd.certification));
  Node& r = o.result;
  r.set("F", Node::str(cd.F.to_string()));
  r.set("companions", poly_list(cd.companions));
  r.set("n", Node::num(cd.n));
  r.set("d", Node::num(cd.d));
  r.set("h", Node::num(cd.h));
  r.set("degree", Node::num(cd.degree));
  r.set("euler_degrees", int_list(cd.euler_degrees));
  r.set("bound", Node::num(cd.bound));
  r.set("ranking", Node::str(cd.ranking.to_string()));
  r.set("certification", Node::str(to_string(cd.certification)));
  r.set("source", poly_list(cd.source.elements()));
}

void cmd_reduce(const Session& s, const CommandOptions& opts, Outcome& o) {
  if (!opts.target) throw UsageError("reduce needs --target NAME|EXPR");
  Poly f;
  std::vector<Poly> members;
  bool named = false;
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    if (!s.poly_names[i].empty() && s.poly_names[i] == *opts.target) {
      named = true;
      f = s.polys[i];
    } else {
      members.push_back(s.polys[i]);
    }
  }
  if (!named) {
    auto it = s.names.find(*opts.target);
    if (it != s.names.end()) {
      f = it->second;
    } else {
      ParseOptions po;
      po.allow_x = s.field == Field::Qx;
      std::set<Var> decl(s.vars.begin(), s.vars.end());
      decl.insert(s.params.begin(), s.params.end());
      po.declared = decl;
      po.names = &s.names;
      f = parse_poly(*opts.target, po);
    }
  }
  const Chain chain(members, s.ranking);
  PremWitness w;
  const Poly r = diff_prem(f, chain, &w);
  Poly rhs;
  for (const auto& [m, c] : w.terms) rhs += m * c;
  const bool exact = w.multiplier * f - r == rhs;
  const bool reduced = r.is_zero() || is_reduced_wrt(r, chain);
  o.text.push_back("remainder = " + r.to_string());
  o.text.push_back("multiplier = " + w.multiplier.to_string());
  o.text.push_back(std::string("reduced: ") + (reduced ? "yes" : "no") + "  witness: " + (exact ? "exact" : "FAILED"));
  o.result.set("chain", poly_list(chain.elements()));
  o.result.set("target", Node::str(f.to_string()));
  o.result.set("remainder", Node::str(r.to_string()));
  o.result.set("multiplier", Node::str(w.multiplier.to_string()));
  o.result.set("reduced", Node::flag(reduced));
  o.result.set("witness_exact", Node::flag(exact));
  if (!exact || !reduced) throw InvariantViolation("pseudo-remainder contract failed");
}

void cmd_charset(const Session& s, const CommandOptions&, Outcome& o, bool dimord_only) {
  const CharSetResult cs = char_set(s.polys, s.ranking);
  const std::string phi = format_dimension_polynomial(cs.dim, cs.order);
  if (!dimord_only) {
    for (std::size_t i = 0; i < cs.chain.size(); ++i)
      o.text.push_back("A" + std::to_string(i + 1) + " = " + cs.chain[i].to_string());
    o.text.push_back("parametric: " + var_set(cs.parametric_set));
    o.result.set("chain", poly_list(cs.chain.elements()));
    o.result.set("parametric_set", var_list(cs.parametric_set));
  }
  o.text.push_back("dim=" + std::to_string(cs.dim) + " order=" + std::to_string(cs.order) + " phi(t)=" + phi);
  o.result.set("ranking", Node::str(s.ranking.to_string()));
  o.result.set("dim", Node::num(cs.dim));
  o.result.set("order", Node::num(cs.order));
  o.result.set("phi", Node::str(phi));
}

std::uint32_t free_param_block(const Session& s) {
  std::uint32_t b = 0;
  auto see = [&](Var v) {
    if (v.is_param() && !v.is_reserved()) b = std::max(b, v.block() + 1);
  };
  for (const Var v : s.params) see(v);
  for (const auto& p : s.polys)
    for (const Var v : p.variables()) see(v);
  return b;
}

void report_intersection(const IntersectionReport& rep, Outcome& o, Node& node, const std::string& label) {
  std::string line = label + ": ";
  if (rep.unit_ideal)
    line += "unit ideal";
  else
    line += "dim=" + std::to_string(rep.result.dim) + " order=" + std::to_string(rep.result.order);
  line += " (expected " + (rep.expected_dim < 0 ? std::string("unit ideal") : "dim=" + std::to_string(rep.expected_dim) +
                                                                                 " order=" + std::to_string(rep.expected_order)) +
          ") " + (rep.matches ? "match" : "MISMATCH");
  o.text.push_back(line);
  node.set("unit_ideal", Node::flag(rep.unit_ideal));
  if (!rep.unit_ideal) {
    node.set("dim", Node::num(rep.result.dim));
    node.set("order", Node::num(rep.result.order));
    node.set("chain", poly_list(rep.result.chain.elements()));
  }
  node.set("expected_dim", Node::num(rep.expected_dim));
  node.set("expected_order", Node::num(rep.expected_order));
  node.set("matches", Node::flag(rep.matches));
}

void cmd_intersect(const Session& s, const CommandOptions& opts, Outcome& o) {
  const std::uint32_t n = standard_n(s);
  const Chain chain = prime_chain(s);
  const std::uint32_t block = free_param_block(s);
  Poly g;
  std::uint32_t order = opts.order;
  if (opts.hyperplane) {
    g = make_hyperplanes(n, 1, block)[0];
    order = 0;
  } else {
    g = make_generic_poly(n, opts.order, opts.degree, block).poly;
  }
  o.text.push_back("generic: order=" + std::to_string(order) + " degree=" + std::to_string(opts.hyperplane ? 1 : opts.degree) +
                   " terms=" + std::to_string(g.size()));
  o.result.set("generic", Node::str(g.to_string()));
  o.result.set("generic_order", Node::num(order));
  const IntersectionReport rep = intersect_generic(chain, g, order);
  Node& exact = o.result.set("exact", Node::map());
  report_intersection(rep, o, exact, "exact");
  if (opts.seed) {
    const IntersectionReport scr = intersect_generic_numeric(chain, g, order, *opts.seed);
    Node& screen = o.result.set("screen", Node::map());
    screen.set("seed", Node::num(static_cast<long>(*opts.seed)));
    report_intersection(scr, o, screen, "screen");
  }
}

void cmd_chow(const Session& s, const CommandOptions& opts, Outcome& o) {
  ChowOptions co;
  co.bound = opts.bound;
  describe_chow(chow_form(prime_chain(s), co), o);
}

void cmd_verify(const Session& s, const CommandOptions& opts, Outcome& o) {
  ChowOptions co;
  co.bound = opts.bound;
  const ChowData cd = chow_form(prime_chain(s), co);
  o.text.push_back("F = " + cd.F.to_string());
  o.result.set("F", Node::str(cd.F.to_string()));
  Node& checks = o.result.set("checks", Node::list());
  std::string failed;
  for (const auto& c : verify_all(cd)) {
    o.text.push_back(c.name + ": " + (c.ok ? "ok" : "FAILED") + " (" + c.detail + ")");
    Node item = Node::map();
    item.set("name", Node::str(c.name));
    item.set("ok", Node::flag(c.ok));
    item.set("detail", Node::str(c.detail));
    checks.push(std::move(item));
    if (!c.ok && failed.empty()) failed = c.name + ": " + c.detail;
  }
  if (!failed.empty()) throw InvariantViolation(failed);
}

void cmd_transform(const Session& s, const CommandOptions& opts, Outcome& o) {
  if (!opts.matrix) throw UsageError("transform needs --matrix \"a,b;c,d\"");
  const auto A = parse_matrix(*opts.matrix, s.field);
  if (A.size() != standard_n(s)) throw UsageError("matrix size differs from the number of variables");
  ChowOptions co;
  co.bound = opts.bound;
  const ChowData cd = chow_form(prime_chain(s), co);
  ChowData t;
  try {
    t = transform_chow(cd, A);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  o.text.push_back("original F = " + cd.F.to_string());
  o.result.set("original_F", Node::str(cd.F.to_string()));
  describe_chow(t, o);
}

}  // namespace

namespace {

void run_into(const Session& session, const CommandOptions& opts, Outcome& o) {
  o.command = opts.command;
  if (opts.command == "reduce")
    cmd_reduce(session, opts, o);
  else if (opts.command == "charset")
    cmd_charset(session, opts, o, false);
  else if (opts.command == "dimord")
    cmd_charset(session, opts, o, true);
  else if (opts.command == "intersect-generic")
    cmd_intersect(session, opts, o);
  else if (opts.command == "chow")
    cmd_chow(session, opts, o);
  else if (opts.command == "verify")
    cmd_verify(session, opts, o);
  else if (opts.command == "transform")
    cmd_transform(session, opts, o);
  else
    throw UsageError("unknown command '" + opts.command + "'");
}

}  // namespace

Outcome run_command(const Session& session, const CommandOptions& opts) {
  Outcome o;
  run_into(session, opts, o);
  return o;
}

Outcome run_safely(const std::string& session_text, std::optional<Field> field, std::optional<std::string> ranking,
                   const CommandOptions& opts) {
  Outcome o;
  o.command = opts.command;
  auto fail = [&](int code, const std::string& kind, const std::string& msg) {
    // Keep the partial result: it often explains the failure.
    o.exit_code = code;
    o.error_kind = kind;
    o.error_message = msg;
  };
  try {
    const Session s = parse_session(session_text, field, ranking);
    run_into(s, opts, o);
  } catch (const ParseError& e) {
    fail(2, "parse-error", e.what());
  } catch (const UsageError& e) {
    fail(2, "usage-error", e.what());
  } catch (const InvalidArgument& e) {
    fail(2, "invalid-argument", e.what());
  } catch (const InconsistentSystem& e) {
    fail(1, "inconsistent-system", e.what());
  } catch (const UnitIdeal& e) {
    fail(1, "unit-ideal", e.what());
  } catch (const InvariantViolation& e) {
    fail(1, "invariant-violation", e.what());
  } catch (const Error& e) {
    fail(1, "error", e.what());
  }
  return o;
}

std::string render_text(const Outcome& o) {
  std::string out;
  for (const auto& l : o.text) out += l + "\n";
  if (o.exit_code != 0) out += "error (" + o.error_kind + "): " + o.error_message + "\n";
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    if (c == '\n') {
      q += "\\n";
      continue;
    }
    q += c;
  }
  return q + "\"";
}

std::string scalar(const Node::Scalar& s) { return s.quoted ? quote(s.text) : s.text; }

void emit(const Node& n, int indent, std::string& out);

void emit_entry(const std::string& key, const Node& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (auto* s = std::get_if<Node::Scalar>(&v.value)) {
    out += pad + key + ": " + scalar(*s) + "\n";
  } else if (auto* l = std::get_if<Node::List>(&v.value)) {
    if (l->empty()) {
      out += pad + key + ": []\n";
      return;
    }
    out += pad + key + ":\n";
    emit(v, indent + 2, out);
  } else {
    const auto& m = std::get<Node::Map>(v.value);
    if (m.empty()) {
      out += pad + key + ": {}\n";
      return;
    }
    out += pad + key + ":\n";
    emit(v, indent + 2, out);
  }
}

void emit(const Node& n, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (auto* m = std::get_if<Node::Map>(&n.value)) {
    for (const auto& [k, v] : *m) emit_entry(k, v, indent, out);
  } else if (auto* l = std::get_if<Node::List>(&n.value)) {
    for (const auto& item : *l) {
      if (auto* s = std::get_if<Node::Scalar>(&item.value)) {
        out += pad + "- " + scalar(*s) + "\n";
      } else {
        // Map items: first entry on the dash line, the rest aligned under it.
        std::string sub;
        emit(item, indent + 2, sub);
        if (sub.size() >= static_cast<std::size_t>(indent + 2)) sub.replace(static_cast<std::size_t>(indent), 2, "- ");
        out += sub;
      }
    }
  } else {
    out += pad + scalar(std::get<Node::Scalar>(n.value)) + "\n";
  }
}

}  // namespace

std::string render_machine(const Outcome& o) {
  Node doc = Node::map();
  doc.set("diffchow", Node::num(1));
  doc.set("command", Node::str(o.command));
  doc.set("status", Node::str(o.exit_code == 0 ? "ok" : "error"));
  doc.set("exit_code", Node::num(o.exit_code));
  doc.set("result", o.result);
  if (o.exit_code != 0) {
    Node& e = doc.set("error", Node::map());
    e.set("kind", Node::str(o.error_kind));
    e.set("message", Node::str(o.error_message));
  }
  std::string out;
  emit(doc, 0, out);
  return out;
}

}  // namespace diffchow
