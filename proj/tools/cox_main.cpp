#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxkit/aci.hpp"
#include "coxkit/classify.hpp"
#include "coxkit/element.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/essential.hpp"
#include "coxkit/fixedpoint.hpp"
#include "coxkit/geom.hpp"
#include "coxkit/jsonout.hpp"
#include "coxkit/system.hpp"
#include "coxkit/witness.hpp"

#ifndef COX_DATA_DIR
#define COX_DATA_DIR "data"
#endif

using namespace coxkit;

namespace {

struct Common {
  bool json = false;
  bool hint = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "machine-readable report on stdout");
  sub->add_flag("--approx", c.hint,
                "attach 12-digit decimal hints (non-authoritative)");
}

std::string vec_str(const Vec& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

std::vector<int> one_based(const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs) out.push_back(x + 1);
  return out;
}

// "w-word ; g-index" with both halves optional; index 0 is the identity.
std::pair<std::vector<int>, int> parse_query(const CoxeterSystem& sys,
                                             const FiniteActionGroup& G,
                                             const std::string& text) {
  std::string wpart = text, gpart;
  size_t semi = text.find(';');
  if (semi != std::string::npos) {
    wpart = text.substr(0, semi);
    gpart = text.substr(semi + 1);
  }
  std::vector<int> word = parse_word(sys, wpart);
  int g = G.identity_index();
  std::istringstream gs(gpart);
  std::string tok;
  if (gs >> tok) {
    try {
      g = std::stoi(tok);
    } catch (const std::exception&) {
      throw DomainError("bad action index '" + tok + "'");
    }
    if (gs >> tok) throw DomainError("trailing text after action index");
    if (g < 0 || g >= G.size())
      throw DomainError("action index out of range 0.." +
                        std::to_string(G.size() - 1));
  }
  return {word, g};
}

void emit(const Common& c, const std::string& verb, ojson inputs,
          ojson result, ojson certificates, bool undecided,
          const std::string& text) {
  if (c.json)
    std::cout << render(report(verb, std::move(inputs), std::move(result),
                               std::move(certificates), undecided));
  else
    std::cout << text;
}

int run_components(const Common& c, const std::string& path) {
  CoxeterSystem sys = load_system(path);
  ComponentDecomposition dec = components(sys);
  ojson parts = ojson::array();
  std::ostringstream text;
  text << "rank " << sys.rank() << ", components " << dec.parts.size() << "\n";
  for (const auto& part : dec.parts) {
    parts.push_back(one_based(part));
    text << "component " << format_subset(part) << "\n";
  }
  ojson result;
  result["rank"] = sys.rank();
  result["components"] = parts;
  emit(c, "components", ojson{{"system", path}}, result, ojson::array(),
       false, text.str());
  return 0;
}

int run_classify(const Common& c, const std::string& path) {
  CoxeterSystem sys = load_system(path);
  auto tags = classify_all(sys);
  ojson rows = ojson::array();
  std::ostringstream text;
  for (const auto& [part, tag] : tags) {
    ojson row;
    row["component"] = one_based(part);
    row["kind"] = kind_str(tag.kind);
    row["name"] = tag.name;
    rows.push_back(row);
    text << "component " << format_subset(part) << ": " << kind_str(tag.kind);
    if (!tag.name.empty()) text << "(" << tag.name << ")";
    text << "\n";
  }
  emit(c, "classify", ojson{{"system", path}}, rows, ojson::array(), false,
       text.str());
  return 0;
}

int run_roots(const Common& c, const std::string& path,
              const std::string& word_text, int depth, long cap) {
  CoxeterSystem sys = load_system(path);
  ojson inputs;
  inputs["system"] = path;
  std::ostringstream text;
  if (!word_text.empty()) {
    inputs["word"] = word_text;
    GroupElement w = GroupElement::from_word(sys, parse_word(sys, word_text));
    std::vector<Vec> inv = inversion_set(w);
    ojson result;
    result["word"] = format_word(w.canonical_word());
    result["length"] = w.length();
    ojson arr = ojson::array();
    text << "length " << w.length() << "\n";
    for (const Vec& g : inv) {
      arr.push_back(vec_json(g, c.hint));
      text << "inversion " << vec_str(g) << "\n";
    }
    result["inversions"] = arr;
    emit(c, "roots", inputs, result, ojson::array(), false, text.str());
    return 0;
  }
  inputs["caps"] = ojson{{"depth", depth}, {"cap", cap}};
  RootEnumeration en =
      enumerate_roots(sys, depth, static_cast<std::size_t>(cap));
  ojson result;
  result["count"] = en.roots.size();
  result["closed"] = en.closed;
  ojson arr = ojson::array();
  text << "enumerated " << en.roots.size() << " positive roots (depth "
       << depth << ", cap " << cap << ", "
       << (en.closed ? "closed" : "truncated") << ")\n";
  for (const RootEntry& r : en.roots) {
    arr.push_back(vec_json(r.coords, c.hint));
    text << "root " << vec_str(r.coords) << "\n";
  }
  result["roots"] = arr;
  emit(c, "roots", inputs, result, ojson::array(), !en.closed, text.str());
  return 0;
}

int run_length(const Common& c, const std::string& path,
               const std::string& word_text) {
  CoxeterSystem sys = load_system(path);
  GroupElement w = GroupElement::from_word(sys, parse_word(sys, word_text));
  ojson result;
  result["word"] = format_word(w.canonical_word());
  result["length"] = w.length();
  emit(c, "length", ojson{{"system", path}, {"word", word_text}}, result,
       ojson::array(), false, "length " + std::to_string(w.length()) + "\n");
  return 0;
}

int run_reduce(const Common& c, const std::string& path,
               const std::string& word_text) {
  CoxeterSystem sys = load_system(path);
  GroupElement w = GroupElement::from_word(sys, parse_word(sys, word_text));
  ojson result;
  result["word"] = format_word(w.canonical_word());
  result["length"] = w.length();
  emit(c, "reduce", ojson{{"system", path}, {"word", word_text}}, result,
       ojson::array(), false, format_word(w.canonical_word()) + "\n");
  return 0;
}

int run_longest(const Common& c, const std::string& path,
                const std::string& subset_text) {
  CoxeterSystem sys = load_system(path);
  std::vector<int> I;
  if (subset_text.empty()) {
    for (int i = 0; i < sys.rank(); ++i) I.push_back(i);
  } else {
    I = parse_word(sys, subset_text);
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
  }
  GroupElement w0 = longest_element(sys, I);
  ojson inputs;
  inputs["system"] = path;
  inputs["subset"] = one_based(I);
  ojson result;
  result["word"] = format_word(w0.canonical_word());
  result["length"] = w0.length();
  emit(c, "longest", inputs, result, ojson::array(), false,
       "word " + format_word(w0.canonical_word()) + "\nlength " +
           std::to_string(w0.length()) + "\n");
  return 0;
}

int run_order(const Common& c, const std::string& path,
              const std::string& word_text, long cap) {
  CoxeterSystem sys = load_system(path);
  GroupElement w = GroupElement::from_word(sys, parse_word(sys, word_text));
  OrderResult r = order_of(w, cap);
  ojson inputs;
  inputs["system"] = path;
  inputs["word"] = word_text;
  inputs["caps"] = ojson{{"cap", cap}};
  ojson result;
  ojson certs = ojson::array();
  std::ostringstream text;
  bool undecided = false;
  switch (r.kind) {
    case OrderResult::Kind::Finite:
      result["order"] = r.order;
      text << "order " << r.order << "\n";
      break;
    case OrderResult::Kind::InfiniteCertified:
      result["order"] = "infinite";
      certs.push_back(r.certificate);
      text << "infinite (certified)\n" << r.certificate << "\n";
      break;
    case OrderResult::Kind::Undecided:
      result["order"] = "undecided";
      undecided = true;
      text << "undecided (cap " << cap << ")\n";
      break;
  }
  emit(c, "order", inputs, result, certs, undecided, text.str());
  return undecided ? 1 : 0;
}

int run_fixed(const Common& c, const std::string& path,
              const std::string& tau_text, int cap) {
  CoxeterSystem sys = load_system(path);
  GraphAutomorphism tau = parse_cycles(sys, tau_text);
  FixedPointPresentation pres = fixed_system(sys, tau, cap);
  ojson inputs;
  inputs["system"] = path;
  inputs["tau"] = tau.cycles_str();
  inputs["caps"] = ojson{{"cap", cap}};

  std::ostringstream text;
  ojson orbits = ojson::array();
  for (size_t k = 0; k < pres.orbits.size(); ++k)
    orbits.push_back(one_based(pres.orbits[k]));
  ojson gens = ojson::array();
  for (size_t a = 0; a < pres.finite_orbits.size(); ++a) {
    const auto& orbit = pres.orbits[static_cast<size_t>(pres.finite_orbits[a])];
    const GroupElement& g = pres.generators[a];
    gens.push_back(format_word(g.canonical_word()));
    text << "orbit " << format_subset(orbit) << ": finite type, generator "
         << format_word(g.canonical_word()) << "\n";
  }
  for (int idx : pres.infinite_orbits)
    text << "orbit " << format_subset(pres.orbits[static_cast<size_t>(idx)])
         << ": infinite type, no generator\n";

  bool undecided = false;
  ojson certs = ojson::array();
  ojson matrix = ojson::array();
  size_t m = pres.finite_orbits.size();
  for (size_t a = 0; a < m; ++a) {
    ojson row = ojson::array();
    for (size_t b = 0; b < m; ++b) {
      const OrbitLabel& lab = pres.labels[a][b];
      if (a == b) {
        row.push_back(1);
        continue;
      }
      switch (lab.kind) {
        case OrbitLabel::Kind::Finite:
          row.push_back(lab.value);
          break;
        case OrbitLabel::Kind::Infinite:
          row.push_back("inf");
          if (!lab.certificate.empty() && a < b)
            certs.push_back(lab.certificate);
          break;
        case OrbitLabel::Kind::Undecided:
          row.push_back("?");
          undecided = true;
          break;
      }
      if (a < b) {
        text << "m(" << a + 1 << "," << b + 1 << ") = ";
        if (lab.kind == OrbitLabel::Kind::Finite)
          text << lab.value;
        else if (lab.kind == OrbitLabel::Kind::Infinite)
          text << "inf";
        else
          text << "undecided (cap " << cap << ")";
        text << "\n";
      }
    }
    matrix.push_back(row);
  }
  ojson result;
  result["orbits"] = orbits;
  result["infinite_orbits"] = one_based(pres.infinite_orbits);
  result["generators"] = gens;
  result["matrix"] = matrix;
  if (!undecided && !pres.generators.empty()) {
    CoxeterSystem fixed = fixed_coxeter_system(pres);
    ojson tags = ojson::array();
    std::string names;
    for (const auto& [part, tag] : classify_all(fixed)) {
      (void)part;
      tags.push_back(tag.name.empty() ? std::string(kind_str(tag.kind))
                                      : tag.name);
      if (!names.empty()) names += " x ";
      names += tag.name.empty() ? kind_str(tag.kind) : tag.name;
    }
    result["fixed_type"] = tags;
    text << "fixed system type: " << names << "\n";
  }
  emit(c, "fixed", inputs, result, certs, undecided, text.str());
  return undecided ? 1 : 0;
}

int run_finite_index(const Common& c, const std::string& path,
                     const std::string& tau_text) {
  CoxeterSystem sys = load_system(path);
  GraphAutomorphism tau = parse_cycles(sys, tau_text);
  bool fin = finite_index_fixed(sys, tau);
  ojson result;
  result["finite_index"] = fin;
  emit(c, "finite-index", ojson{{"system", path}, {"tau", tau.cycles_str()}},
       result, ojson::array(), false,
       std::string("finite index: ") + (fin ? "yes" : "no") + "\n");
  return fin ? 0 : 1;
}

int run_essential(const Common& c, const std::string& path,
                  const std::string& word_text, int depth, long cap) {
  CoxeterSystem sys = load_system(path);
  GroupElement w = GroupElement::from_word(sys, parse_word(sys, word_text));
  PinfResult res = pinf_generates(w, depth, cap);
  ojson inputs;
  inputs["system"] = path;
  inputs["word"] = word_text;
  inputs["caps"] = ojson{{"depth", depth}, {"cap", cap}};
  ojson result;
  ojson certs = ojson::array();
  std::ostringstream text;
  bool yes = res.kind == PinfResult::Kind::Yes;
  result["verdict"] = yes ? "yes" : "undecided";
  result["odd_roots"] = res.odds.odd.size();
  result["undecided_roots"] = res.odds.undecided.size();
  if (yes) {
    ojson ws = ojson::array();
    for (const PinfWitness& wit : res.witness) {
      ojson o;
      o["simple"] = wit.simple + 1;
      o["base"] = vec_json(res.odds.odd[static_cast<size_t>(wit.base)],
                           c.hint);
      ojson steps = ojson::array();
      for (int idx : wit.apply)
        steps.push_back(vec_json(res.odds.odd[static_cast<size_t>(idx)],
                                 c.hint));
      o["reflect_by"] = steps;
      ws.push_back(o);
      certs.push_back("alpha_" + std::to_string(wit.simple + 1) +
                      " reached from an odd root through " +
                      std::to_string(wit.apply.size()) + " reflections");
    }
    result["witnesses"] = ws;
    text << "essential: yes (odd-root reflections generate)\n";
  } else {
    text << "essential: undecided\n";
  }
  text << "odd roots: " << res.odds.odd.size()
       << ", undecided roots: " << res.odds.undecided.size() << " (depth "
       << depth << ", cap " << cap << ")\n";
  emit(c, "essential", inputs, result, certs, !yes, text.str());
  return yes ? 0 : 1;
}

int run_aci(const Common& c, const std::string& path,
            const std::string& action_path, const std::string& query,
            long target, int radius, int closure_cap) {
  CoxeterSystem sys = load_system(path);
  FiniteActionGroup G =
      action_path.empty()
          ? FiniteActionGroup::closure(sys, {}, closure_cap)
          : load_action_group(sys, action_path, closure_cap);
  ojson inputs;
  inputs["system"] = path;
  if (!action_path.empty()) inputs["action"] = action_path;

  if (query.empty()) {
    AciReport rep = aci_subgroup(sys, G);
    ComponentDecomposition dec = components(sys);
    ojson result;
    ojson comps = ojson::array();
    std::ostringstream text;
    text << "O_rho components:";
    if (rep.orho.components.empty()) text << " none";
    for (int ci : rep.orho.components) {
      comps.push_back(one_based(dec.parts[static_cast<size_t>(ci)]));
      text << " " << format_subset(dec.parts[static_cast<size_t>(ci)]);
    }
    text << "\n";
    result["o_rho_components"] = comps;
    result["w_generators"] = one_based(rep.wpart_generators);
    ojson grho = ojson::array();
    text << "G_rho:";
    if (rep.grho.empty()) text << " none";
    for (int gi : rep.grho) {
      grho.push_back(G.at(gi).cycles_str());
      text << " " << G.at(gi).cycles_str();
    }
    text << "\n";
    result["g_rho"] = grho;
    text << "generators: simple reflections "
         << (rep.wpart_generators.empty()
                 ? std::string("none")
                 : format_subset(rep.wpart_generators))
         << (rep.grho.empty() ? "" : " and the G_rho involutions") << "\n";
    emit(c, "aci", inputs, result, ojson::array(), false, text.str());
    return 0;
  }

  inputs["query"] = query;
  inputs["caps"] = ojson{{"radius", radius}, {"target", target}};
  auto [word, gi] = parse_query(sys, G, query);
  SemidirectElement x{GroupElement::from_word(sys, word), gi};
  AciVerdict v = is_aci_involution(sys, G, x);
  ojson result;
  ojson certs = ojson::array();
  std::ostringstream text;
  result["verdict"] = v.aci ? "ACI" : "NotACI";
  text << "verdict: " << (v.aci ? "ACI" : "NotACI") << "\n";
  ojson reasons = ojson::array();
  for (const std::string& r : v.reasons) {
    reasons.push_back(r);
    text << "reason: " << r << "\n";
  }
  result["reasons"] = reasons;
  if (!v.aci) {
    long got = conjugate_growth(sys, G, x, target, radius);
    result["distinct_conjugates"] = got;
    certs.push_back(std::to_string(got) +
                    " distinct conjugates within radius " +
                    std::to_string(radius) + " (target " +
                    std::to_string(target) + ")");
    text << "distinct conjugates: " << got << " (target " << target
         << ", radius " << radius << ")\n";
  }
  emit(c, "aci", inputs, result, certs, false, text.str());
  return v.aci ? 0 : 1;
}

int run_verify_tables(const Common& c, std::vector<std::string> files) {
  if (files.empty()) {
    files.push_back(std::string(COX_DATA_DIR) + "/tables/affine.rows");
    files.push_back(std::string(COX_DATA_DIR) + "/tables/hyperbolic.rows");
  }
  ojson rows_json = ojson::array();
  std::ostringstream text;
  int passed = 0, failed = 0;
  for (const std::string& f : files) {
    for (const WitnessRow& row : load_rows(f)) {
      RowReport rep =
          row.affine ? verify_affine_row(row) : verify_hyperbolic_row(row);
      ojson clauses = ojson::array();
      for (const ClauseResult& cl : rep.clauses) {
        ojson o;
        o["clause"] = cl.clause;
        o["status"] = cl.status == ClauseStatus::Pass     ? "pass"
                      : cl.status == ClauseStatus::Fail   ? "fail"
                                                          : "skipped";
        o["detail"] = cl.detail;
        clauses.push_back(o);
      }
      ojson o;
      o["row"] = rep.name;
      o["ok"] = rep.ok;
      o["clauses"] = clauses;
      rows_json.push_back(o);
      if (rep.ok) {
        ++passed;
        text << "PASS " << rep.name << "\n";
      } else {
        ++failed;
        text << "FAIL " << rep.name;
        for (const ClauseResult& cl : rep.clauses)
          if (cl.status == ClauseStatus::Fail)
            text << " clause " << cl.clause << ": " << cl.detail << ";";
        text << "\n";
      }
    }
  }
  text << passed + failed << " rows: " << passed << " passed, " << failed
       << " failed\n";
  ojson inputs;
  inputs["files"] = files;
  ojson result;
  result["rows"] = rows_json;
  result["passed"] = passed;
  result["failed"] = failed;
  emit(c, "verify-tables", inputs, result, ojson::array(), false, text.str());
  return failed == 0 ? 0 : 1;
}

int run_oracle(const Common& c, const std::string& path,
               const std::string& action_path, const std::string& mode,
               const std::string& query, long target, int radius, long cap) {
  CoxeterSystem sys = load_system(path);
  FiniteActionGroup G = action_path.empty()
                            ? FiniteActionGroup::closure(sys, {}, 5000)
                            : load_action_group(sys, action_path, 5000);
  ojson inputs;
  inputs["system"] = path;
  if (!action_path.empty()) inputs["action"] = action_path;
  inputs["mode"] = mode;
  std::ostringstream text;
  if (mode == "brute") {
    inputs["caps"] = ojson{{"cap", cap}};
    BruteForceResult r = brute_force_aci_finite(sys, G, cap);
    ojson result;
    result["group_size"] = r.group_size;
    result["involutions"] = r.involution_count;
    result["generated_size"] = r.generated_size;
    result["matches_description"] = r.matches_description;
    text << "group size " << r.group_size << ", involutions "
         << r.involution_count << "\n"
         << "generated subgroup size " << r.generated_size << "\n"
         << "matches criterion description: "
         << (r.matches_description ? "yes" : "no") << "\n";
    emit(c, "oracle", inputs, result, ojson::array(), false, text.str());
    return r.matches_description ? 0 : 1;
  }
  if (mode == "growth") {
    inputs["query"] = query;
    inputs["caps"] = ojson{{"radius", radius}, {"target", target}};
    auto [word, gi] = parse_query(sys, G, query);
    SemidirectElement x{GroupElement::from_word(sys, word), gi};
    long got = conjugate_growth(sys, G, x, target, radius);
    ojson result;
    result["distinct_conjugates"] = got;
    result["target"] = target;
    bool reached = got >= target;
    text << "distinct conjugates: " << got << " (target " << target
         << ", radius " << radius << ")\n";
    emit(c, "oracle", inputs, result, ojson::array(), !reached, text.str());
    return reached ? 0 : 1;
  }
  throw DomainError("unknown oracle mode: " + mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for Coxeter systems and diagram actions"};
  app.require_subcommand(1);
  Common common;
  int rc = 0;

  std::string sys_path, word_text, subset_text, tau_text, action_path;
  std::string query, mode = "brute";
  std::vector<std::string> row_files;
  int depth = 8, radius = 60, fixed_cap = 200;
  long cap = 200, target = 25, brute_cap = 10000, root_cap = 1000;

  auto* c_components =
      app.add_subcommand("components", "connected components of the graph");
  c_components->add_option("--system", sys_path, "system file")->required();
  add_common(c_components, common);
  c_components->callback([&] { rc = run_components(common, sys_path); });

  auto* c_classify =
      app.add_subcommand("classify", "type of every component");
  c_classify->add_option("--system", sys_path, "system file")->required();
  add_common(c_classify, common);
  c_classify->callback([&] { rc = run_classify(common, sys_path); });

  auto* c_roots = app.add_subcommand(
      "roots", "positive roots, or the inversion set of a word");
  c_roots->add_option("--system", sys_path, "system file")->required();
  c_roots->add_option("--word", word_text, "1-based word, e.g. \"1 2 1\"");
  c_roots->add_option("--depth", depth, "enumeration depth (default 8)");
  c_roots->add_option("--cap", root_cap, "maximum roots kept (default 1000)");
  add_common(c_roots, common);
  c_roots->callback(
      [&] { rc = run_roots(common, sys_path, word_text, depth, root_cap); });

  auto* c_length = app.add_subcommand("length", "length of a word's element");
  c_length->add_option("--system", sys_path, "system file")->required();
  c_length->add_option("--word", word_text, "1-based word")->required();
  add_common(c_length, common);
  c_length->callback([&] { rc = run_length(common, sys_path, word_text); });

  auto* c_reduce =
      app.add_subcommand("reduce", "canonical reduced word of an element");
  c_reduce->add_option("--system", sys_path, "system file")->required();
  c_reduce->add_option("--word", word_text, "1-based word")->required();
  add_common(c_reduce, common);
  c_reduce->callback([&] { rc = run_reduce(common, sys_path, word_text); });

  auto* c_longest = app.add_subcommand(
      "longest", "longest element of a finite standard parabolic");
  c_longest->add_option("--system", sys_path, "system file")->required();
  c_longest->add_option("--subset", subset_text,
                        "1-based generators (default: all)");
  add_common(c_longest, common);
  c_longest->callback(
      [&] { rc = run_longest(common, sys_path, subset_text); });

  auto* c_order = app.add_subcommand("order", "order of a word's element");
  c_order->add_option("--system", sys_path, "system file")->required();
  c_order->add_option("--word", word_text, "1-based word")->required();
  c_order->add_option("--cap", cap, "power cap (default 200)");
  add_common(c_order, common);
  c_order->callback(
      [&] { rc = run_order(common, sys_path, word_text, cap); });

  auto* c_fixed = app.add_subcommand(
      "fixed", "fixed-point subgroup of a diagram automorphism");
  c_fixed->add_option("--system", sys_path, "system file")->required();
  c_fixed->add_option("--tau", tau_text, "cycles, e.g. \"(1 3)\"")->required();
  c_fixed->add_option("--cap", fixed_cap, "label power cap (default 200)");
  add_common(c_fixed, common);
  c_fixed->callback(
      [&] { rc = run_fixed(common, sys_path, tau_text, fixed_cap); });

  auto* c_findex = app.add_subcommand(
      "finite-index", "is the fixed-point subgroup of finite index");
  c_findex->add_option("--system", sys_path, "system file")->required();
  c_findex->add_option("--tau", tau_text, "cycles")->required();
  add_common(c_findex, common);
  c_findex->callback(
      [&] { rc = run_finite_index(common, sys_path, tau_text); });

  auto* c_essential = app.add_subcommand(
      "essential", "does the odd-root closure reach every simple root");
  c_essential->add_option("--system", sys_path, "system file")->required();
  c_essential->add_option("--word", word_text, "1-based word")->required();
  c_essential->add_option("--depth", depth, "root enumeration depth (default 8)");
  c_essential->add_option("--cap", cap, "per-root power cap (default 200)");
  add_common(c_essential, common);
  c_essential->callback([&] {
    rc = run_essential(common, sys_path, word_text, depth, cap);
  });

  auto* c_aci = app.add_subcommand(
      "aci", "almost-central involutions of the semidirect product");
  c_aci->add_option("--system", sys_path, "system file")->required();
  c_aci->add_option("--action", action_path, "action file (default: trivial)");
  c_aci->add_option("--query", query,
                    "\"w-word ; g-index\"; omit for the subgroup report");
  c_aci->add_option("--target", target, "conjugate target (default 25)");
  c_aci->add_option("--radius", radius, "conjugation radius (default 60)");
  add_common(c_aci, common);
  c_aci->callback([&] {
    rc = run_aci(common, sys_path, action_path, query, target, radius, 5000);
  });

  auto* c_verify = app.add_subcommand(
      "verify-tables", "verify the shipped witness tables row by row");
  c_verify->add_option("--rows", row_files,
                       "row files (default: the shipped tables)");
  add_common(c_verify, common);
  c_verify->callback([&] { rc = run_verify_tables(common, row_files); });

  auto* c_oracle = app.add_subcommand(
      "oracle", "independent cross-checks: brute enumeration or growth");
  c_oracle->add_option("--system", sys_path, "system file")->required();
  c_oracle->add_option("--action", action_path, "action file");
  c_oracle->add_option("--mode", mode, "brute | growth (default brute)");
  c_oracle->add_option("--query", query, "growth mode: \"w-word ; g-index\"");
  c_oracle->add_option("--target", target, "growth target (default 25)");
  c_oracle->add_option("--radius", radius, "growth radius (default 60)");
  c_oracle->add_option("--cap", brute_cap, "enumeration cap (default 10000)");
  add_common(c_oracle, common);
  c_oracle->callback([&] {
    rc = run_oracle(common, sys_path, action_path, mode, query, target,
                    radius, brute_cap);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NonFiniteTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
