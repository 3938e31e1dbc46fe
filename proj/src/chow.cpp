#include "diffchow/chow.hpp"

#include <algorithm>

#include "diffchow/algebra.hpp"
#include "diffchow/elimination.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/generic.hpp"
#include "diffchow/polyalg.hpp"

namespace diffchow {

std::string to_string(Certification c) {
  switch (c) {
    case Certification::PrimitiveSquarefree:
      return "primitive-squarefree (irreducibility unverified)";
    case Certification::RoutesAgree:
      return "groebner and resultant routes agree";
    case Certification::UnivariateOracle:
      return "matches univariate closed form";
  }
  return "?";
}

Chain ChowData::chow_chain() const {
  std::vector<Poly> all{F};
  all.insert(all.end(), companions.begin(), companions.end());
  return Chain(all, ranking);
}

Ranking chow_ranking(int n, int d) {
  std::vector<Var> order;
  for (int i = 0; i <= d; ++i)
    for (int j = 1; j <= n; ++j) order.push_back(Var::u(i, j));
  for (int i = 0; i <= d; ++i) order.push_back(Var::u(i, 0));
  return Ranking::elimination(order);
}

namespace {

Poly normalize_f(const Poly& p) { return squarefree_part(p).primitive(); }

// Primitive with the initial's leading coefficient positive.
Poly normalize_member(const Poly& p, const Ranking& r) {
  Poly q = p.primitive();
  const LeaderParts lp = leader_parts(q, r);
  if (lp.initial.leading_term().coeff.sign() < 0) q = -q;
  return q;
}

bool same_up_to_sign(const Poly& a, const Poly& b) { return a == b || a == -b; }

int universe_size(const Chain& chain) {
  std::vector<Var> ys;
  for (const Var v : chain.ranking().symbols())
    if (v.is_main()) ys.push_back(v);
  if (ys.empty()) throw InvalidArgument("the chain's ranking has no main symbols");
  std::sort(ys.begin(), ys.end());
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (ys[i] != Var::y(static_cast<std::uint32_t>(i + 1)))
      throw InvalidArgument("main symbols must be y1..yn, found " + ys[i].to_string());
  for (const Var v : chain.ranking().symbols())
    if (!v.is_main()) throw InvalidArgument("the ranking universe may only contain y1..yn");
  return static_cast<int>(ys.size());
}

struct Stage {
  Poly F;
  std::vector<Poly> companions;
};

Stage eliminate_at(const Chain& src, const std::vector<Poly>& hyps, const Ranking& R, int B) {
  TruncatedSystem sys = truncate(src, hyps, B);
  sys.keep_order = keep_order_from_ranking(sys.keep_block, R);
  std::vector<Poly> gens;
  for (auto& g : eliminate(sys))
    if (!g.is_zero()) gens.push_back(std::move(g));
  if (gens.empty()) throw InvariantViolation("the elimination ideal is zero at bound " + std::to_string(B));
  const CharSetResult cs = char_set(gens, R);
  if (cs.chain.empty()) throw InvariantViolation("empty characteristic set of the elimination ideal");
  Stage st;
  st.F = normalize_f(cs.chain[0]);
  for (std::size_t i = 1; i < cs.chain.size(); ++i) st.companions.push_back(normalize_member(cs.chain[i], R));
  return st;
}

void fill_euler(ChowData& cd) {
  const EulerReport rep = euler_check(cd);
  cd.euler_degrees = rep.degrees;
  cd.degree = 0;
  for (int r : rep.degrees) cd.degree += r;
}

}  // namespace

ChowData chow_form(const Chain& chain, const ChowOptions& opts) {
  const int n = universe_size(chain);
  const Ranking orderly = orderly_ranking(static_cast<std::uint32_t>(n));
  Chain src = chain.ranking().kind() == Ranking::Kind::Orderly ? chain : char_set(chain.elements(), orderly).chain;
  if (src.empty()) src = Chain({}, orderly);
  const CharSetResult stats = describe_chain(src);
  const int d = stats.dim;
  if (d >= n + 1) throw InvalidArgument("dimension exceeds the number of variables");

  ChowData cd;
  cd.n = n;
  cd.d = d;
  cd.ranking = chow_ranking(n, d);
  cd.source = src;
  cd.hyperplanes = make_hyperplanes(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d + 1));

  int need = stats.order + 1;
  for (const auto& p : src.elements()) need = std::max(need, max_shift(p));
  int B = opts.bound > 0 ? opts.bound : need;

  Stage prev = eliminate_at(src, cd.hyperplanes, cd.ranking, B);
  bool stable = false;
  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    Stage next = eliminate_at(src, cd.hyperplanes, cd.ranking, B + 1);
    if (next.F == prev.F) {
      prev = std::move(next);
      stable = true;
      break;
    }
    prev = std::move(next);
    ++B;
  }
  if (!stable)
    throw InvariantViolation("the eliminant did not stabilize up to bound " + std::to_string(B + 1));
  cd.F = prev.F;
  cd.companions = prev.companions;
  cd.bound = B;
  cd.h = std::max(0, max_shift(cd.F));
  fill_euler(cd);

  if (n == 1 && !src.empty()) {
    try {
      std::vector<Poly> rest(src.elements().begin() + 1, src.elements().end());
      const ChowData oracle = chow_form_univariate(src[0], rest);
      if (same_up_to_sign(oracle.F, cd.F)) cd.certification = Certification::UnivariateOracle;
    } catch (const Error&) {
    }
  }
  if (cd.certification == Certification::PrimitiveSquarefree && opts.cross_check_resultants) {
    TruncatedSystem sys = truncate(src, cd.hyperplanes, B);
    const auto cands = eliminate_by_resultants(sys);
    if (!cands.empty()) {
      try {
        if (same_up_to_sign(normalize_f(minimal_eliminant(cands, cd.ranking)), cd.F))
          cd.certification = Certification::RoutesAgree;
      } catch (const Error&) {
      }
    }
  }
  return cd;
}

ChowData chow_form_univariate(const Poly& g, const std::vector<Poly>& companions) {
  if (g.is_constant()) throw InvalidArgument("g is constant");
  auto check = [](const Poly& p) {
    for (const Var s : symbols_of(p))
      if (s != Var::y(1)) throw InvalidArgument("univariate construction needs polynomials in y1 only, found " + s.to_string());
  };
  check(g);
  for (const auto& c : companions) check(c);

  ChowData cd;
  cd.n = 1;
  cd.d = 0;
  cd.ranking = chow_ranking(1, 0);
  cd.hyperplanes = make_hyperplanes(1, 1);
  const std::map<Var, Poly> num{{Var::y(1), -Poly(Var::u(0, 0))}};
  const Poly den(Var::u(0, 1));
  cd.F = normalize_f(substitute_fraction(g, num, den));
  for (const auto& c : companions) cd.companions.push_back(normalize_member(substitute_fraction(c, num, den), cd.ranking));
  std::vector<Poly> src{g};
  src.insert(src.end(), companions.begin(), companions.end());
  cd.source = Chain(src, orderly_ranking(1));
  cd.h = std::max(0, max_shift(cd.F));
  cd.bound = 0;
  cd.certification = Certification::UnivariateOracle;
  fill_euler(cd);
  return cd;
}

int verify_block_symmetry(const ChowData& cd, int rho, int tau) {
  if (rho < 0 || tau < 0 || rho > cd.d || tau > cd.d)
    throw InvalidArgument("block index out of range 0.." + std::to_string(cd.d));
  if (rho == tau) return 1;
  const auto r = static_cast<std::uint32_t>(rho), t = static_cast<std::uint32_t>(tau);
  const Poly swapped = cd.F.rename([&](Var v) {
    if (!v.is_param() || v.is_reserved()) return v;
    if (v.block() == r) return Var::u(t, v.index(), v.shift());
    if (v.block() == t) return Var::u(r, v.index(), v.shift());
    return v;
  });
  if (swapped == cd.F) return 1;
  if (swapped == -cd.F) return -1;
  throw InvariantViolation("swapping blocks " + std::to_string(rho) + " and " + std::to_string(tau) +
                           " changes F by more than a sign");
}

OrderProfile verify_order_profile(const ChowData& cd) {
  OrderProfile rep;
  rep.h = cd.h;
  for (int i = 0; i <= cd.d; ++i)
    for (int j = 0; j <= cd.n; ++j) {
      const Var v = Var::u(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      const OrderStats st = order_stats(cd.F, v);
      rep.table[v] = st;
      if (st.absent()) {
        if (j == 0) throw InvariantViolation(v.to_string() + " does not occur in F");
        rep.absent.push_back(v);
        continue;
      }
      if (st.ord != cd.h)
        throw InvariantViolation("ord(F, " + v.to_string() + ") = " + std::to_string(st.ord) + " differs from h = " +
                                 std::to_string(cd.h));
      if (st.lord != 0)
        throw InvariantViolation("least order of F in " + v.to_string() + " is " + std::to_string(st.lord));
    }
  return rep;
}

EulerReport euler_check(const ChowData& cd) {
  EulerReport rep;
  const int h = std::max(0, max_shift(cd.F));
  const Coeff lc = cd.F.leading_term().coeff;
  for (int s = 0; s <= cd.d; ++s) {
    std::vector<int> row;
    for (int t = 0; t <= cd.d; ++t)
      for (int k = 0; k <= h; ++k) {
        Poly G;
        for (int j = 0; j <= cd.n; ++j) {
          const auto kk = static_cast<std::uint32_t>(k), jj = static_cast<std::uint32_t>(j);
          G += Poly(Var::u(static_cast<std::uint32_t>(t), jj, kk)) *
               cd.F.partial(Var::u(static_cast<std::uint32_t>(s), jj, kk));
        }
        const std::string where = "(" + std::to_string(s) + "," + std::to_string(t) + ", k=" + std::to_string(k) + ")";
        if (s != t) {
          if (!G.is_zero()) throw InvariantViolation("cross-block Euler sum " + where + " is not zero");
          continue;
        }
        if (G.is_zero()) {
          row.push_back(0);
          continue;
        }
        const Coeff c = G.leading_term().coeff / lc;
        if (!c.is_rational() || c.rational().get_den() != 1 || c.rational() < 0 || G != cd.F.scaled(c))
          throw InvariantViolation("same-block Euler sum " + where + " is not a non-negative integer multiple of F");
        row.push_back(static_cast<int>(c.rational().get_num().get_si()));
      }
    std::set<Var> block;
    for (int j = 0; j <= cd.n; ++j) block.insert(Var::u(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(j)));
    const Homogeneity hom = is_transformally_homogeneous(cd.F, block);
    if (!hom.homogeneous)
      throw InvariantViolation("F is not transformally homogeneous in block " + std::to_string(s));
    for (int k = 0; k <= h; ++k)
      if (static_cast<int>(hom.multiplier.degree(Var::lambda(static_cast<std::uint32_t>(k)))) != row[k])
        throw InvariantViolation("Euler degree r_" + std::to_string(k) + " disagrees with the homogeneity multiplier");
    rep.per_block.push_back(std::move(row));
  }
  for (const auto& row : rep.per_block)
    if (row != rep.per_block[0]) throw InvariantViolation("Euler degrees differ between blocks");
  rep.degrees = rep.per_block[0];
  return rep;
}

int difference_degree(const ChowData& cd) {
  const EulerReport rep = euler_check(cd);
  int r = 0;
  for (int x : rep.degrees) r += x;
  return r;
}

RecoveredPoint recover_point(const ChowData& cd) {
  RecoveredPoint pt;
  pt.denominator = cd.F.partial(Var::u(0, 0));
  const Chain chain = cd.chow_chain();
  if (pt.denominator.is_zero() || diff_prem(pt.denominator, chain).is_zero())
    throw InvariantViolation("dF/du0_0 vanishes modulo the Chow chain");
  std::map<Var, Poly> num;
  for (int r = 1; r <= cd.n; ++r) {
    pt.numerators.push_back(cd.F.partial(Var::u(0, static_cast<std::uint32_t>(r))));
    num[Var::y(static_cast<std::uint32_t>(r))] = pt.numerators.back();
  }
  pt.verified = true;
  for (const auto& p : cd.source.elements()) {
    Poly res = diff_prem(substitute_fraction(p, num, pt.denominator), chain);
    pt.verified = pt.verified && res.is_zero();
    pt.residues.push_back(std::move(res));
  }
  return pt;
}

Chain extend_charset(const ChowData& cd) {
  const Poly D = cd.F.partial(Var::u(0, 0));
  if (D.is_zero() || diff_prem(D, cd.chow_chain()).is_zero())
    throw InvariantViolation("dF/du0_0 vanishes modulo the Chow chain");
  std::vector<Poly> members{cd.F};
  members.insert(members.end(), cd.companions.begin(), cd.companions.end());
  std::vector<Var> order = cd.ranking.symbols();
  for (int r = 1; r <= cd.n; ++r) {
    const Var y = Var::y(static_cast<std::uint32_t>(r));
    members.push_back(D * Poly(y) - cd.F.partial(Var::u(0, static_cast<std::uint32_t>(r))));
    order.push_back(y);
  }
  Chain ext(members, Ranking::elimination(order), Chain::Validation::Triangular);
  auto check = [&](const Poly& p, const std::string& what) {
    if (!diff_prem(p, ext).is_zero()) throw InvariantViolation(what + " does not reduce to zero");
  };
  for (const auto& p : cd.hyperplanes) check(p, "hyperplane " + p.to_string());
  for (const auto& p : cd.source.elements()) check(p, "generator " + p.to_string());
  return ext;
}

std::vector<std::vector<Coeff>> invert_matrix(const std::vector<std::vector<Coeff>>& A) {
  const std::size_t n = A.size();
  for (const auto& row : A)
    if (row.size() != n) throw InvalidArgument("matrix is not square");
  std::vector<std::vector<Coeff>> M = A, I(n, std::vector<Coeff>(n, Coeff(0)));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = Coeff(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c].is_zero()) ++p;
    if (p == n) throw InvalidArgument("matrix is singular");
    std::swap(M[p], M[c]);
    std::swap(I[p], I[c]);
    const Coeff inv = M[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      M[c][j] *= inv;
      I[c][j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c].is_zero()) continue;
      const Coeff f = M[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        M[r][j] -= f * M[c][j];
        I[r][j] -= f * I[c][j];
      }
    }
  }
  return I;
}

ChowData transform_chow(const ChowData& cd, const std::vector<std::vector<Coeff>>& A) {
  if (static_cast<int>(A.size()) != cd.n) throw InvalidArgument("matrix size differs from n");
  const auto Ainv = invert_matrix(A);  // throws when singular

  std::map<Var, Poly> bind;
  for (int i = 0; i <= cd.d; ++i)
    for (int j = 1; j <= cd.n; ++j) {
      Poly img;
      for (int k = 1; k <= cd.n; ++k)
        img += Poly(A[k - 1][j - 1]) * Poly(Var::u(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)));
      bind[Var::u(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j))] = img;
    }
  ChowData out = cd;
  out.F = normalize_f(cd.F.substitute(bind));
  out.companions.clear();
  for (const auto& c : cd.companions) out.companions.push_back(normalize_member(c.substitute(bind), cd.ranking));
  out.chow_chain();  // validates the transformed chain

  // Source of A*V: p(A^{-1} y).
  std::map<Var, Poly> ysub;
  for (int j = 1; j <= cd.n; ++j) {
    Poly img;
    for (int k = 1; k <= cd.n; ++k) img += Poly(Ainv[j - 1][k - 1]) * Poly(Var::y(static_cast<std::uint32_t>(k)));
    ysub[Var::y(static_cast<std::uint32_t>(j))] = img;
  }
  std::vector<Poly> gens;
  for (const auto& p : cd.source.elements()) gens.push_back(p.substitute(ysub));
  const Ranking orderly = orderly_ranking(static_cast<std::uint32_t>(cd.n));
  out.source = gens.empty() ? Chain({}, orderly) : char_set(gens, orderly).chain;
  out.h = std::max(0, max_shift(out.F));
  out.certification = Certification::PrimitiveSquarefree;
  fill_euler(out);
  return out;
}

AlgebraicNumber evaluate_algebraic(const Poly& p, const std::map<Var, AlgebraicNumber>& values, const UPoly& modulus) {
  AlgebraicNumber acc(modulus, Rational(0));
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_rational()) throw InvalidArgument("evaluation needs rational coefficients");
    AlgebraicNumber term(modulus, t.coeff.rational());
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw InvalidArgument("incomplete assignment: no value for " + v.to_string());
      term = term * it->second.pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

bool vanishing_test(const ChowData& cd, const std::map<Var, AlgebraicNumber>& values) {
  const UPoly modulus = values.empty() ? UPoly::x() : values.begin()->second.modulus();
  if (!evaluate_algebraic(cd.F, values, modulus).is_zero()) return false;
  for (const auto& c : cd.companions)
    if (!evaluate_algebraic(c, values, modulus).is_zero()) return false;
  return true;
}

std::vector<CheckResult> verify_all(const ChowData& cd) {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, auto&& fn) {
    CheckResult r{name, false, ""};
    try {
      r.detail = fn();
      r.ok = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };
  run("primitive_squarefree", [&]() -> std::string {
    if (cd.F != cd.F.primitive()) throw InvariantViolation("F is not primitive");
    if (normalize_f(cd.F) != cd.F) throw InvariantViolation("F is not squarefree");
    return "ok";
  });
  run("chain", [&]() -> std::string {
    cd.chow_chain();
    return std::to_string(cd.companions.size() + 1) + " members";
  });
  run("block_symmetry", [&]() -> std::string {
    std::string signs;
    for (int t = 1; t <= cd.d; ++t) signs += (t > 1 ? " " : "") + std::string(verify_block_symmetry(cd, 0, t) > 0 ? "+1" : "-1");
    return cd.d == 0 ? "single block" : signs;
  });
  run("order_profile", [&]() -> std::string {
    const OrderProfile p = verify_order_profile(cd);
    std::string s = "h=" + std::to_string(p.h);
    for (const Var v : p.absent) s += " absent:" + v.to_string();
    return s;
  });
  run("euler", [&]() -> std::string {
    const EulerReport r = euler_check(cd);
    std::string s;
    for (std::size_t k = 0; k < r.degrees.size(); ++k) s += (k ? "," : "") + std::to_string(r.degrees[k]);
    return "r=" + s;
  });
  run("degree", [&]() -> std::string { return std::to_string(difference_degree(cd)); });
  run("recover_point", [&]() -> std::string {
    const RecoveredPoint p = recover_point(cd);
    if (!p.verified) throw InvariantViolation("a source generator does not vanish at the recovered point");
    return std::to_string(p.residues.size()) + " generators vanish";
  });
  run("extend_charset", [&]() -> std::string {
    const Chain c = extend_charset(cd);
    return std::to_string(c.size()) + " members" + (c.triangular_only() ? " (triangular, not ascending)" : "");
  });
  return out;
}

}  // namespace diffchow
