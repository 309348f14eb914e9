#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "extlevel/congruence.hpp"
#include "extlevel/diagram.hpp"
#include "extlevel/json_io.hpp"
#include "extlevel/level.hpp"
#include "extlevel/suite.hpp"
#include "extlevel/transvection.hpp"

using namespace extlevel;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a,b,c" or, when any ';' is present, "a;b;c" (for comma-form indices).
std::vector<std::string> split_fields(const std::string& text) {
  char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Ring for symbolic arguments: the given one, else Z[symbols], else Z.
Ring argument_ring(const std::string& ring_name, const std::vector<std::string>& exprs) {
  if (!ring_name.empty()) return parse_ring_name(ring_name);
  std::vector<std::string> vars;
  for (auto& e : exprs)
    for (auto& s : expression_symbols(e))
      if (std::find(vars.begin(), vars.end(), s) == vars.end()) vars.push_back(s);
  return vars.empty() ? Ring::integers() : Ring::poly(vars);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_verify(const std::string& filter, int jobs, bool json, bool list) {
  if (list) {
    for (auto& c : check_registry()) std::cout << c.id << "\t" << c.group << "\t" << c.anchor << "\n";
    return 0;
  }
  auto report = run_all(filter, jobs);
  if (report.reports.empty()) throw UsageError("no check matches '" + filter + "'");
  if (json) {
    print_json(suite_to_json(report));
  } else {
    for (auto& r : report.reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  (" << r.identities << " identities, "
                << static_cast<long>(r.ms) << " ms)  " << r.anchor << "\n";
      if (r.diff) std::cout << "     " << *r.diff << "\n";
    }
    std::cout << report.passed() << "/" << report.reports.size() << " checks pass\n";
  }
  return report.all_pass() ? 0 : 1;
}

int run_wedge(int n, int m, const std::string& ring_name, const std::string& matrix_file,
              const std::string& trans, bool json) {
  WedgeSpec spec(n, m);
  if (matrix_file.empty() == trans.empty()) throw UsageError("give exactly one of --matrix or --transvection");
  if (!matrix_file.empty()) {
    std::optional<Ring> fallback;
    if (!ring_name.empty()) fallback = parse_ring_name(ring_name);
    auto g = matrix_from_json(load_json_file(matrix_file), fallback);
    if (g.dim() != std::size_t(n)) throw UsageError("matrix is not n x n");
    auto w = wedge_matrix(spec, g);
    if (json) print_json(matrix_to_json(w));
    else std::cout << w.to_string();
    return 0;
  }
  auto f = split_fields(trans);
  if (f.size() != 3) throw UsageError("--transvection expects i,j,xi");
  int i = std::stoi(f[0]), j = std::stoi(f[1]);
  auto ring = argument_ring(ring_name, {f[2]});
  auto xi = parse_element(ring, f[2]);
  auto terms = wedge_transvection_formula(spec, i, j, xi);
  bool agrees = realize_terms(spec, ring, terms) == wedge_matrix(spec, ExactMatrix::transvection(n, i, j, xi));
  auto word = TransvectionProduct::from_terms(terms).to_string();
  if (json) {
    Json fs = Json::array();
    for (auto& t : terms) fs.push_back(t.to_string());
    print_json({{"n", n}, {"m", m}, {"factors", fs}, {"count", terms.size()}, {"matches_minors", agrees}});
  } else {
    std::cout << "W t_{" << i << "," << j << "}(" << xi << ") = " << word << "\n"
              << terms.size() << " factors; matches minors: " << (agrees ? "yes" : "NO") << "\n";
  }
  return agrees ? 0 : 1;
}

int run_commute(int n, int m, const std::string& ring_name, const std::string& t_text,
                const std::string& w_text, bool checked, bool json) {
  WedgeSpec spec(n, m);
  auto tf = split_fields(t_text), wf = split_fields(w_text);
  if (tf.size() != 3) throw UsageError("--t expects I,J,xi");
  if (wf.size() != 3) throw UsageError("--wedge expects j,i,zeta");
  auto ring = argument_ring(ring_name, {tf[2], wf[2]});
  TransvectionTerm t{spec.parse_index(tf[0]), spec.parse_index(tf[1]), parse_element(ring, tf[2])};
  WedgeTerm w{std::stoi(wf[0]), std::stoi(wf[1]), parse_element(ring, wf[2])};
  if (w.i < 1 || w.i > n || w.j < 1 || w.j > n || w.i == w.j) throw UsageError("bad wedge transvection indices");
  auto cls = classify_commutator(t.I, t.J, w.i, w.j);
  Json j{{"t", t.to_string()}, {"wedge", w.to_string()}, {"class", tag_name(cls.tag)}};
  int code = 0;
  try {
    auto word = commutator_eval(spec, t, w, checked);
    j["commutator"] = word.empty() ? "e" : word.to_string();
    if (checked) j["checked"] = true;
  } catch (const DegenerateCommutator& e) {
    j["commutator"] = nullptr;
    j["note"] = e.what();
  } catch (const IdentityMismatch& e) {
    j["checked"] = false;
    j["note"] = e.what();
    code = 1;
  }
  if (json) {
    print_json(j);
  } else {
    std::cout << "[" << t.to_string() << ", " << w.to_string() << "]  class " << tag_name(cls.tag) << "\n";
    if (j.contains("commutator") && !j["commutator"].is_null())
      std::cout << "  = " << j["commutator"].get<std::string>() << "\n";
    if (j.contains("note")) std::cout << "  " << j["note"].get<std::string>() << "\n";
    if (checked && code == 0) std::cout << "  matrix check: ok\n";
  }
  return code;
}

RuleSet parse_rules(const std::string& text) {
  if (text.empty() || text == "all") return RuleSet::all();
  if (text == "literal") return RuleSet::literal();
  RuleSet rs;
  for (auto& name : split_fields(text)) rs = rs.with(parse_rule(name));
  return rs;
}

Generator parse_generator(const WedgeSpec& spec, const Ring& ring, const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos) throw UsageError("--gen expects I,J:value");
  auto f = split_fields(text.substr(0, colon));
  if (f.size() != 2) throw UsageError("--gen expects I,J:value");
  return {{spec.parse_index(f[0]), spec.parse_index(f[1])}, parse_element(ring, text.substr(colon + 1))};
}

std::string chain_text(const LevelVerdict& v) {
  if (v.level) return v.level->to_string();
  std::string s;
  for (std::size_t k = 0; k < v.chain.size(); ++k) s += (k ? " >= " : "") + v.chain[k].to_string();
  return s;
}

int run_level(int n, int m, const std::string& ring_name, const std::vector<std::string>& gens,
              const std::string& rules_text, const std::string& trace_file, bool json) {
  WedgeSpec spec(n, m);
  auto ring = parse_ring_name(ring_name.empty() ? "z/9" : ring_name);
  if (ring.kind() != RingKind::Modular) throw UsageError("level engine needs a ring z/q");
  std::vector<Generator> gs;
  for (auto& g : gens) gs.push_back(parse_generator(spec, ring, g));
  auto rules = parse_rules(rules_text);
  auto net = saturate(net_init(spec, ring, gs), rules);
  auto verdict = level_of(net, rules);

  Json j = verdict_to_json(verdict);
  j["rules"] = rules.to_string();
  if (!net.warnings().empty()) j["warnings"] = net.warnings();
  std::optional<bool> literal_same;
  if (rules == RuleSet::all()) {
    auto lit = level_of(saturate(net_init(spec, ring, gs), RuleSet::literal()), RuleSet::literal());
    literal_same = lit.mode == verdict.mode && lit.chain == verdict.chain;
    j["literal_rules_suffice"] = *literal_same;
  }
  if (!trace_file.empty()) {
    std::ofstream out(trace_file);
    if (!out) throw UsageError("cannot write " + trace_file);
    out << trace_to_json(net.trace()).dump(2) << "\n";
  }
  if (json) {
    print_json(j);
  } else {
    for (auto& w : net.warnings()) std::cout << "warning: " << w << "\n";
    std::cout << mode_name(verdict.mode) << " " << chain_text(verdict) << "\n";
    for (auto& a : verdict.audit)
      std::cout << "  audit " << a.name << ": " << (a.pass ? "pass" : "FAIL")
                << (a.detail.empty() ? "" : "  " + a.detail) << "\n";
    if (literal_same) std::cout << "  literal rules alone: " << (*literal_same ? "same verdict" : "differ") << "\n";
    std::cout << "  " << net.trace().size() << " propagations\n";
  }
  return verdict.mode == VerdictMode::Inconsistent ? 1 : 0;
}

int run_reduce(std::uint64_t q, std::uint64_t d, const std::string& matrix_file, int n, int m, bool recognize,
               bool json) {
  auto ring = Ring::modular(q);
  if (d == 0 || q % d) throw UsageError("--ideal must divide --q");
  FiniteIdeal A(ring, d);
  auto g = matrix_from_json(load_json_file(matrix_file), ring);
  if (!(g.ring() == ring)) throw UsageError("matrix ring differs from Z/" + std::to_string(q));
  auto red = reduce_matrix(g, A);
  auto flags = congruence_predicates(g, A);
  Json j{{"reduced", matrix_to_json(red)}, {"principal", flags.principal}, {"full", flags.full}};
  int code = 0;
  if (recognize) {
    if (n == 0 || m == 0) throw UsageError("--recognize needs --n and --m");
    if (!is_prime(d)) throw UsageError("quotient Z/" + std::to_string(d) + " is not a field");
    auto v = in_wedge_image(red, WedgeSpec(n, m));
    j["membership"] = membership_to_json(v);
    code = v.tag == MembershipTag::NotFound ? 1 : 0;
  }
  if (json) {
    print_json(j);
  } else {
    std::cout << red.to_string() << "principal congruence: " << (flags.principal ? "yes" : "no")
              << "\nfull congruence: " << (flags.full ? "yes" : "no") << "\n";
    if (recognize) {
      const auto& mj = j["membership"];
      std::cout << "recognizer: " << mj["tag"].get<std::string>();
      if (mj.contains("lambda")) std::cout << " lambda=" << mj["lambda"].dump();
      if (mj.contains("notes")) std::cout << " (" << mj["notes"].get<std::string>() << ")";
      std::cout << "\n";
    }
  }
  return code;
}

int run_diagram(int n, int m, int root, const std::string& format, const std::string& classify,
                const std::string& out_file) {
  DiagramSpec s;
  s.n = n;
  s.m = m;
  if (root) s.highlight_root = root;
  s.format = parse_format(format);
  if (!classify.empty()) {
    auto f = split_fields(classify);
    if (f.size() != 2) throw UsageError("--classify expects I,J");
    s.classify = WeightPair{WeightIndex::parse(n, f[0]), WeightIndex::parse(n, f[1])};
  }
  auto text = emit_diagram(s);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_file);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exterior powers of elementary groups: identities, level computation, congruence recognition"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  std::string filter;
  int jobs = 1;
  bool json = false, list = false;
  verify->add_option("--filter", filter, "check id or group");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--list", list, "list registered checks");

  int n = 0, m = 0;
  std::string ring_name;
  auto* wedge = app.add_subcommand("wedge", "image of a matrix or transvection");
  std::string matrix_file, trans;
  wedge->add_option("--n", n)->required();
  wedge->add_option("--m", m)->required();
  wedge->add_option("--ring", ring_name, "z/9, int, poly:xi,zeta");
  wedge->add_option("--matrix", matrix_file, "JSON matrix file");
  wedge->add_option("--transvection", trans, "i,j,xi");

  auto* commute = app.add_subcommand("commute", "[t_{I,J}(xi), W t_{j,i}(zeta)]");
  std::string t_text, w_text;
  bool checked = false;
  commute->add_option("--n", n)->required();
  commute->add_option("--m", m)->required();
  commute->add_option("--ring", ring_name);
  commute->add_option("--t", t_text, "I,J,xi")->required();
  commute->add_option("--wedge", w_text, "j,i,zeta")->required();
  commute->add_flag("--checked", checked, "compare with the matrix commutator");

  auto* level = app.add_subcommand("level", "saturate a net of ideals and report its level");
  std::vector<std::string> gens;
  std::string rules_text, trace_file;
  level->add_option("--n", n)->required();
  level->add_option("--m", m)->required();
  level->add_option("--ring", ring_name, "z/q, q odd");
  level->add_option("--gen", gens, "I,J:value (repeatable)");
  level->add_option("--rules", rules_text, "all, literal, or a comma list of rule names");
  level->add_option("--trace", trace_file, "write the propagation trace as JSON");

  auto* reduce = app.add_subcommand("reduce", "reduce modulo an ideal and recognize the image");
  std::uint64_t q = 0, d = 0;
  bool recognize = false;
  reduce->add_option("--q", q)->required();
  reduce->add_option("--ideal", d, "generator d of (d)")->required();
  reduce->add_option("--matrix", matrix_file, "JSON matrix file")->required();
  reduce->add_option("--n", n);
  reduce->add_option("--m", m);
  reduce->add_flag("--recognize", recognize);

  auto* diagram = app.add_subcommand("diagram", "weight diagram of the m-th fundamental representation");
  int root = 0;
  std::string format = "dot", classify, out_file;
  diagram->add_option("--n", n)->required();
  diagram->add_option("--m", m)->required();
  diagram->add_option("--root", root, "highlight the paths of alpha_k");
  diagram->add_option("--format", format, "dot, tikz or json");
  diagram->add_option("--classify", classify, "I,J: annotate commutator scenarios (json)");
  diagram->add_option("--out", out_file);

  for (auto* sub : {verify, wedge, commute, level, reduce, diagram})
    sub->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(filter, jobs, json, list);
    if (*wedge) return run_wedge(n, m, ring_name, matrix_file, trans, json);
    if (*commute) return run_commute(n, m, ring_name, t_text, w_text, checked, json);
    if (*level) return run_level(n, m, ring_name, gens, rules_text, trace_file, json);
    if (*reduce) return run_reduce(q, d, matrix_file, n, m, recognize, json);
    if (*diagram) {
      if (json) format = "json";
      return run_diagram(n, m, root, format, classify, out_file);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LevelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CongruenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
