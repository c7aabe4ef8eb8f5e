#include "coxkit/witness.hpp"

#include <fstream>
#include <sstream>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/geom.hpp"

namespace coxkit {

namespace {

void require_connected_kind(const CoxeterSystem& sys, ComponentKind kind,
                            const char* what) {
  if (components(sys).parts.size() != 1)
    throw DomainError("row system must be irreducible");
  if (classify_system(sys).kind != kind)
    throw DomainError(std::string("row system must classify as ") + what);
}

ClauseResult clause(const char* id, bool pass, std::string detail) {
  return ClauseResult{id, pass ? ClauseStatus::Pass : ClauseStatus::Fail,
                      std::move(detail)};
}

ClauseResult skipped(const char* id, std::string detail) {
  return ClauseResult{id, ClauseStatus::Skipped, std::move(detail)};
}

void finish(RowReport& rep) {
  rep.ok = true;
  for (const ClauseResult& c : rep.clauses)
    if (c.status == ClauseStatus::Fail) rep.ok = false;
}

// tau permutes coordinates the same way on roots (tau(alpha_i) =
// alpha_{tau(i)}) and on dual-basis functionals
Vec tau_permute(const GraphAutomorphism& tau, const Vec& v) {
  Vec out = v;
  for (size_t i = 0; i < v.size(); ++i)
    out[static_cast<size_t>(tau(static_cast<int>(i)))] = v[i];
  return out;
}

QuadScalar qmul(const TrigScalar& t, const QuadScalar& q) {
  return QuadScalar(t * q.base(), t * q.coef(), q.radicand());
}

}  // namespace

RowReport verify_affine_row(const WitnessRow& row) {
  require_connected_kind(row.system, ComponentKind::Affine, "affine");
  const CoxeterSystem& sys = row.system;
  (void)certify_root(sys, row.beta);
  (void)certify_root(sys, row.gamma);
  if (row.ann.size() != static_cast<size_t>(sys.rank()))
    throw DomainError("functional has wrong length");

  RowReport rep;
  rep.name = row.name;
  Mat g = gram(sys);
  TrigScalar c = bilinear(g, row.beta, row.gamma);
  rep.clauses.push_back(clause(
      "a", c == TrigScalar::integer(-1, sys.modulus()),
      "<beta,gamma> = " + c.str()));

  Vec null = row.beta;
  for (size_t i = 0; i < null.size(); ++i) null[i] = null[i] + row.gamma[i];
  bool radical = true;
  for (int s = 0; s < sys.rank(); ++s)
    radical = radical &&
              bilinear(g, null, vec_unit(sys.rank(), s, sys.modulus()))
                  .is_zero();
  rep.clauses.push_back(
      clause("b", radical, "beta+gamma pairs to zero with every simple root"));

  Vec gb = g.apply(row.beta);
  bool fzero = true, gbzero = true;
  for (const TrigScalar& x : row.ann) fzero = fzero && x.is_zero();
  for (const TrigScalar& x : gb) gbzero = gbzero && x.is_zero();
  bool prop = !fzero && !gbzero && rank_of({row.ann, gb}) == 1;
  rep.clauses.push_back(clause(
      "c", prop, "functional is proportional to the pairing with beta"));

  if (row.tau) {
    Vec tf = tau_permute(*row.tau, row.ann);
    rep.clauses.push_back(clause("d", rank_of({row.ann, tf}) == 2,
                                 "functional differs from its image"));
  } else {
    rep.clauses.push_back(skipped("d", "no automorphism on this row"));
  }

  bool growth = true;
  Vec v = row.beta;
  for (long k = 1; k <= 10 && growth; ++k) {
    v = reflect(g, row.beta, reflect(g, row.gamma, v));
    Vec expect = row.beta;
    for (size_t i = 0; i < expect.size(); ++i)
      expect[i] = TrigScalar::integer(2 * k + 1, sys.modulus()) * row.beta[i] +
                  TrigScalar::integer(2 * k, sys.modulus()) * row.gamma[i];
    growth = v == expect;
  }
  rep.clauses.push_back(clause(
      "e", growth, "powers carry beta along (2k+1) beta + 2k gamma"));

  finish(rep);
  return rep;
}

RowReport verify_hyperbolic_row(const WitnessRow& row) {
  require_connected_kind(row.system, ComponentKind::CompactHyperbolic,
                         "compact hyperbolic");
  const CoxeterSystem& sys = row.system;
  (void)certify_root(sys, row.beta);
  (void)certify_root(sys, row.gamma);

  RowReport rep;
  rep.name = row.name;
  Mat g = gram(sys);
  TrigScalar c = bilinear(g, row.beta, row.gamma);
  TrigScalar cp1 = c + TrigScalar::integer(1, sys.modulus());
  rep.clauses.push_back(
      clause("a", cp1.sign() == Sign::Negative, "c = " + c.str()));

  bool ortho = true;
  for (int i : row.vprime) {
    Vec ai = vec_unit(sys.rank(), i, sys.modulus());
    ortho = ortho && bilinear(g, ai, row.beta).is_zero() &&
            bilinear(g, ai, row.gamma).is_zero();
  }
  rep.clauses.push_back(
      clause("b", ortho, "V' basis orthogonal to beta and gamma"));

  rep.clauses.push_back(clause(
      "c", sys.rank() - static_cast<int>(row.vprime.size()) == 3,
      "codim V' = " +
          std::to_string(sys.rank() - static_cast<int>(row.vprime.size()))));

  if (row.tau) {
    std::vector<Vec> four{row.beta, row.gamma, tau_permute(*row.tau, row.beta),
                          tau_permute(*row.tau, row.gamma)};
    rep.clauses.push_back(clause("d", rank_of(four) > 2,
                                 "the plane of beta and gamma moves"));
  } else {
    rep.clauses.push_back(skipped("d", "no automorphism on this row"));
  }

  // eigen identities in the quadratic extension by sqrt(c^2 - 1)
  TrigScalar one = TrigScalar::integer(1, sys.modulus());
  TrigScalar two = TrigScalar::integer(2, sys.modulus());
  TrigScalar d = c * c - one;
  bool dpos = d.sign() == Sign::Positive;
  TrigScalar base = two * c * c - one;
  QuadScalar lp(base, -(two * c), d);
  QuadScalar lm(base, two * c, d);
  bool mult = lp * lm == QuadScalar::from_base(one, d);
  bool sum = lp + lm == QuadScalar::from_base(two * base, d);

  Mat w = (reflection_element(sys, row.beta) *
           reflection_element(sys, row.gamma))
              .matrix();
  bool eigen = true;
  for (int sgn = 0; sgn < 2; ++sgn) {
    const QuadScalar& lambda = sgn == 0 ? lp : lm;
    TrigScalar s = sgn == 0 ? one : -one;
    std::vector<QuadScalar> v;
    for (size_t i = 0; i < row.beta.size(); ++i)
      v.push_back(QuadScalar(row.gamma[i] - c * row.beta[i],
                             s * row.beta[i], d));
    for (int i = 0; i < sys.rank() && eigen; ++i) {
      QuadScalar acc = QuadScalar::from_base(TrigScalar::zero(sys.modulus()),
                                             d);
      for (int j = 0; j < sys.rank(); ++j)
        acc = acc + qmul(w.at(i, j), v[static_cast<size_t>(j)]);
      eigen = acc == lambda * v[static_cast<size_t>(i)];
    }
  }
  rep.clauses.push_back(clause(
      "e", dpos && mult && sum && eigen,
      "eigenvalues multiply to 1, sum to 4c^2-2, eigenvectors verified, "
      "c^2-1 > 0"));

  finish(rep);
  return rep;
}

bool certify_trivial_intersection(const CoxeterSystem& sys, const Vec& beta1,
                                  const Vec& gamma1, const Vec& beta2,
                                  const Vec& gamma2) {
  Mat g = gram(sys);
  TrigScalar one = TrigScalar::integer(1, sys.modulus());
  const Vec* bs[2] = {&beta1, &beta2};
  const Vec* gs[2] = {&gamma1, &gamma2};
  for (int k = 0; k < 2; ++k) {
    TrigScalar c = bilinear(g, *bs[k], *gs[k]);
    if ((c + one).sign() != Sign::Negative)
      throw DomainError("pairing is not below -1");
  }
  return rank_of({beta1, gamma1, beta2, gamma2}) > 2;
}

namespace {

TrigScalar parse_coord(const std::string& tok, long mod) {
  if (tok == "sqrt2" || tok == "-sqrt2") {
    if (mod % 4 != 0)
      throw ParseError(0, "sqrt2 needs a modulus divisible by 4");
    TrigScalar r = TrigScalar::integer(2, mod) * TrigScalar::cospi(mod / 4, mod);
    return tok[0] == '-' ? -r : r;
  }
  try {
    mpq_class q(tok);
    q.canonicalize();
    return TrigScalar::rational(q, mod);
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "bad coordinate token: " + tok);
  }
}

Vec parse_coords(const std::vector<std::string>& toks, size_t from,
                 const CoxeterSystem& sys) {
  if (toks.size() - from != static_cast<size_t>(sys.rank()))
    throw ParseError(0, "expected one coordinate per generator");
  Vec v;
  for (size_t i = from; i < toks.size(); ++i)
    v.push_back(parse_coord(toks[i], sys.modulus()));
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// gamma spellings: plain coordinates, "word i ... alpha j" applying the
// named reflections to a simple root, or "highest i ..." for the dominant
// root of the subsystem on the listed generators.
Vec parse_gamma(const std::vector<std::string>& toks,
                const CoxeterSystem& sys) {
  if (toks.size() >= 2 && toks[1] == "word") {
    std::vector<int> word;
    size_t k = 2;
    for (; k < toks.size() && toks[k] != "alpha"; ++k)
      word.push_back(std::stoi(toks[k]) - 1);
    if (k + 1 >= toks.size() || toks[k] != "alpha")
      throw ParseError(0, "word form needs a trailing alpha index");
    int base = std::stoi(toks[k + 1]) - 1;
    if (base < 0 || base >= sys.rank()) throw ParseError(0, "alpha out of range");
    Mat g = gram(sys);
    Vec v = vec_unit(sys.rank(), base, sys.modulus());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it < 0 || *it >= sys.rank())
        throw ParseError(0, "word letter out of range");
      v = simple_reflect(g, *it, v);
    }
    return v;
  }
  if (toks.size() >= 2 && toks[1] == "highest") {
    std::vector<int> subset;
    for (size_t k = 2; k < toks.size(); ++k)
      subset.push_back(std::stoi(toks[k]) - 1);
    std::sort(subset.begin(), subset.end());
    CoxeterSystem sub = subsystem(sys, subset);
    Vec h = highest_root(sub);
    Vec out(static_cast<size_t>(sys.rank()),
            TrigScalar::zero(sys.modulus()));
    for (size_t k = 0; k < subset.size(); ++k)
      out[static_cast<size_t>(subset[k])] = h[k].change_modulus(sys.modulus());
    return out;
  }
  return parse_coords(toks, 1, sys);
}

}  // namespace

std::vector<WitnessRow> parse_rows(const std::string& text,
                                   const std::string& base_dir) {
  std::vector<WitnessRow> rows;
  WitnessRow cur;
  bool open = false;
  bool has_system = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> pending;

  auto flush = [&] {
    if (!open) return;
    if (!has_system) throw ParseError(0, "row without a system: " + cur.name);
    for (const auto& [key, toks] : pending) {
      if (key == "tau") {
        if (toks.size() == 2 && toks[1] == "-")
          cur.tau.reset();
        else {
          std::string rest;
          for (size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
          cur.tau = parse_cycles(cur.system, rest);
        }
      } else if (key == "beta") {
        cur.beta = parse_coords(toks, 1, cur.system);
      } else if (key == "gamma") {
        cur.gamma = parse_gamma(toks, cur.system);
      } else if (key == "ann") {
        cur.ann = parse_coords(toks, 1, cur.system);
        cur.affine = true;
      } else if (key == "vprime") {
        cur.affine = false;
        if (!(toks.size() == 2 && toks[1] == "-"))
          for (size_t i = 1; i < toks.size(); ++i) {
            int s = std::stoi(toks[i]) - 1;
            if (s < 0 || s >= cur.system.rank())
              throw ParseError(0, "vprime index out of range");
            cur.vprime.push_back(s);
          }
      } else {
        throw ParseError(0, "unknown row key: " + key);
      }
    }
    if (cur.beta.empty() || cur.gamma.empty())
      throw ParseError(0, "row misses beta or gamma: " + cur.name);
    rows.push_back(cur);
    cur = WitnessRow{};
    pending.clear();
    open = false;
    has_system = false;
  };

  std::string text2 = text;
  for (char& ch : text2)
    if (ch == ';') ch = '\n';
  std::istringstream in(text2);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "row") {
      flush();
      open = true;
      cur.name = toks.size() > 1 ? toks[1] : "";
      continue;
    }
    if (!open) throw ParseError(0, "data before the first row header");
    if (toks[0] == "system") {
      if (toks.size() != 2) throw ParseError(0, "system wants one path");
      std::string path = toks[1];
      if (!base_dir.empty() && path[0] != '/')
        path = base_dir + "/" + path;
      cur.system = load_system(path);
      has_system = true;
      continue;
    }
    pending.emplace_back(toks[0], toks);
  }
  flush();
  return rows;
}

std::vector<WitnessRow> load_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open rows file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  size_t slash = path.find_last_of('/');
  std::string dir = slash == std::string::npos ? "" : path.substr(0, slash);
  return parse_rows(buf.str(), dir);
}

}  // namespace coxkit
