// koszul: command-line front end for Koszul homology of monomial ideals.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "koszul/betti.hpp"
#include "koszul/error.hpp"
#include "koszul/min_length.hpp"
#include "koszul/parser.hpp"
#include "koszul/pborel.hpp"
#include "koszul/serialize.hpp"
#include "koszul/workbench.hpp"

using namespace koszul;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct Options {
  std::string ideal;
  std::string field = "qq";
  bool json = false;
  std::size_t degree = 1;
  std::string multidegree;
  std::size_t max_length = kMaxSearchLength;
  std::string monomial;
  std::size_t num_vars = 0;
  std::uint64_t p = 2;
  std::string target;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;
  bool verbose = false;
};

// An ideal argument is either grammar text or @path to a file holding it.
MonomialIdeal load_ideal(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ideal(ss.str()).evaluate();
  }
  return parse_ideal(arg).evaluate();
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_betti(const Options& o) {
  const auto I = load_ideal(o.ideal);
  const auto field = FieldSpec::parse(o.field);
  const auto t = betti_table(I, field);
  if (o.json) {
    auto j = to_json(t);
    j["ideal"] = to_json(I);
    if (!t.empty()) {
      j["regularity"] = t.regularity();
      j["projective_dimension"] = t.projective_dimension();
    }
    print(j);
  } else {
    std::cout << "ideal " << render_ideal(I) << "\n" << render_betti_text(t);
    if (!t.empty()) {
      std::cout << "reg(S/I) = " << t.regularity() << ", pd(S/I) = " << t.projective_dimension() << "\n";
    }
  }
  return kExitPass;
}

int cmd_homology(const Options& o) {
  const auto I = load_ideal(o.ideal);
  const auto field = FieldSpec::parse(o.field);
  std::vector<Multidegree> degrees;
  if (!o.multidegree.empty()) {
    degrees.push_back(parse_exponents(o.multidegree, I.num_vars()));
  } else {
    degrees = candidate_multidegrees(I, o.degree);
  }
  json out = {{"schema_version", kSchemaVersion}, {"ideal", to_json(I)}, {"degree", o.degree},
              {"field", field.name()}};
  json strands = json::array();
  for (const auto& a : degrees) {
    const auto h = strand_homology(I, o.degree, a, field);
    if (h.betti == 0 && o.multidegree.empty()) continue;
    json reps = json::array();
    for (const auto& z : h.homology_representatives) reps.push_back(to_json(z));
    strands.push_back({{"multidegree", to_json(a)}, {"betti", h.betti}, {"representatives", reps}});
    if (!o.json) {
      std::cout << "H_" << o.degree << " at " << a.to_string() << ": dim " << h.betti << "\n";
      for (const auto& z : h.homology_representatives) std::cout << "  " << z.to_string() << "\n";
    }
  }
  out["strands"] = strands;
  if (o.json) print(out);
  return kExitPass;
}

int cmd_cycles(const Options& o) {
  const auto I = load_ideal(o.ideal);
  const auto field = FieldSpec::parse(o.field);
  const auto reports = search_min_length_basis(I, o.degree, field, o.max_length);
  bool exceeded = false;
  bool missing = false;
  json arr = json::array();
  for (const auto& r : reports) {
    exceeded = exceeded || r.status == SearchStatus::BoundExceeded;
    missing = missing || r.status == SearchStatus::NoneUpToBound;
    arr.push_back(to_json(r));
    if (!o.json) {
      std::cout << "H_" << o.degree << " at " << r.a.to_string() << ": dim " << r.betti << ", strand "
                << r.dimension << ", ";
      if (r.min_length) {
        std::cout << "spanned by cycles of length <= " << *r.min_length << "\n";
        for (const auto& w : r.witnesses) std::cout << "  " << w.to_string() << "\n";
      } else {
        std::cout << to_string(r.status) << "\n";
      }
    }
  }
  if (o.json) print({{"schema_version", kSchemaVersion}, {"ideal", to_json(I)}, {"strands", arr}});
  if (exceeded) {
    std::cerr << "search bound exceeded: strand dimension above " << kMaxSearchDimension
              << " or length above " << kMaxSearchLength << "\n";
    return kExitBound;
  }
  if (missing && !o.json) std::cout << "no spanning set up to length " << o.max_length << "\n";
  return kExitPass;
}

int cmd_pborel(const Options& o) {
  Monomial u;
  if (o.monomial.find('x') != std::string::npos || o.monomial == "1") {
    if (o.num_vars == 0) throw std::invalid_argument("-n is required for a monomial in x-notation");
    u = parse_monomial(o.monomial, o.num_vars);
  } else {
    const auto n = o.num_vars ? o.num_vars
                              : static_cast<std::size_t>(std::count(o.monomial.begin(), o.monomial.end(), ',')) + 1;
    u = parse_exponents(o.monomial, n);
  }
  const auto F = principal_p_borel(u, o.p);
  const auto I = F.expand();
  if (o.json) {
    print(to_json(F));
  } else {
    std::cout << "generator " << u.to_string() << ", p = " << o.p << "\nfactors:";
    for (std::size_t q = 1; q <= F.num_vars(); ++q) {
      for (std::size_t j = 0; j < F.layers(); ++j) {
        if (const auto a = F.alpha(q, j)) {
          std::cout << " ((x1..x" << q << ")^[" << ipow(o.p, j) << "])^" << a;
        }
      }
    }
    std::cout << "\nideal " << render_ideal(I) << "\n" << I.size() << " generators\n";
  }
  return kExitPass;
}

int cmd_chain(const Options& o) {
  const auto I = load_ideal(o.ideal);
  const auto report = borel_chain(I);
  const auto candidates = extremal_via_chain(I);
  if (o.json) {
    auto j = to_json(report);
    json c = json::array();
    for (const auto& e : candidates) c.push_back({{"t", e.t}, {"r", e.r}, {"dimension", e.dimension}});
    j["borel_type"] = is_borel_type(I);
    j["candidates"] = c;
    print(j);
    return kExitPass;
  }
  std::cout << "ideal " << render_ideal(I) << (is_borel_type(I) ? " (Borel type)" : " (not Borel type)")
            << "\n";
  for (const auto& s : report.stages) {
    std::cout << "stage n_e = " << s.index << ": " << s.ideal.to_string();
    if (s.top_degree) {
      std::cout << ", s = " << *s.top_degree << ", dim = " << s.top_dimension;
    } else {
      std::cout << ", saturated";
    }
    std::cout << "\n";
  }
  for (const auto& e : candidates) {
    std::cout << "candidate corner (" << e.t << ", " << e.r << ") with beta = " << e.dimension << "\n";
  }
  return kExitPass;
}

int cmd_verify(const Options& o) {
  const auto trials = o.trials ? o.trials : default_trials(o.target);
  const auto r = run_suite(o.target, o.seed, trials);
  if (o.json) {
    json refs = json::array();
    for (const auto& x : r.refutations) {
      refs.push_back({{"trial", x.trial}, {"detail", x.detail}, {"replay", x.replay}});
    }
    print({{"schema_version", kSchemaVersion}, {"suite", r.suite},     {"seed", r.seed},
           {"trials", r.trials},               {"checks", r.checks},   {"log", r.log},
           {"refutations", refs},              {"passed", r.passed()}});
  } else {
    if (o.verbose || o.target == "main" || o.target == "lemmas3") {
      for (const auto& line : r.log) std::cout << line << "\n";
    }
    for (const auto& x : r.refutations) {
      std::cout << "REFUTED trial " << x.trial << ": " << x.detail << "\n  replay: " << x.replay << "\n";
    }
    std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.suite << ": " << r.trials << " trials, "
              << r.checks << " checks, " << r.refutations.size() << " refutations (seed " << r.seed << ")\n";
  }
  return r.passed() ? kExitPass : kExitRefuted;
}

int cmd_reproduce(const Options& o) {
  std::vector<std::string> targets;
  if (o.target == "all") {
    targets = example_names();
  } else {
    targets.push_back(o.target);
  }
  bool all = true;
  json arr = json::array();
  for (const auto& t : targets) {
    const auto r = reproduce(t);
    all = all && r.passed();
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
      if (!o.json) {
        std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.label << ": " << c.actual;
        if (!c.pass) std::cout << " (expected " << c.expected << ")";
        std::cout << "\n";
      }
    }
    if (!o.json) std::cout << (r.passed() ? "PASS " : "FAIL ") << t << "\n";
    arr.push_back({{"example", t}, {"passed", r.passed()}, {"checks", checks}});
  }
  if (o.json) print({{"schema_version", kSchemaVersion}, {"examples", arr}, {"passed", all}});
  return all ? kExitPass : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul homology, Betti tables and cycle bases of monomial ideals"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_ideal) {
    if (with_ideal) {
      sub->add_option("ideal", o.ideal, "ideal, e.g. \"n=3; (x1,x2)^2\", or @file")->required();
      sub->add_option("--field", o.field, "qq or gf:<p>")->capture_default_str();
    }
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* betti = app.add_subcommand("betti", "graded Betti table of S/I");
  add_common(betti, true);

  auto* homology = app.add_subcommand("homology", "multigraded Koszul homology with representatives");
  add_common(homology, true);
  homology->add_option("-i,--degree", o.degree, "homological degree")->required();
  homology->add_option("--multidegree", o.multidegree, "exponent vector, e.g. 1,1,0");

  auto* cycles = app.add_subcommand("cycles", "shortest cycles spanning each strand");
  add_common(cycles, true);
  cycles->add_option("-i,--degree", o.degree, "homological degree")->required();
  cycles->add_option("--max-length", o.max_length, "largest cycle length tried")
      ->check(CLI::Range(std::size_t{1}, kMaxSearchLength))
      ->capture_default_str();

  auto* pborel = app.add_subcommand("pborel", "principal p-Borel ideal of a monomial");
  add_common(pborel, false);
  pborel->add_option("--monomial", o.monomial, "x1*x3^2 (with -n) or exponents 1,0,2")->required();
  pborel->add_option("-n,--vars", o.num_vars, "number of variables");
  pborel->add_option("--p", o.p, "prime")->required();

  auto* chain = app.add_subcommand("chain", "Borel chain and extremal Betti numbers");
  add_common(chain, false);
  chain->add_option("ideal", o.ideal, "ideal text or @file")->required();

  auto* verify = app.add_subcommand("verify", "randomized property suite");
  add_common(verify, false);
  verify->add_option("suite", o.target, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_option("--trials", o.trials, "number of trials (suite default when 0)");
  verify->add_flag("-v,--verbose", o.verbose, "print the per-trial log");

  auto* repro = app.add_subcommand("reproduce", "reproduce a worked example");
  add_common(repro, false);
  auto names = example_names();
  names.push_back("all");
  repro->add_option("example", o.target, "example name or all")->required()->check(CLI::IsMember(names));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*betti) return cmd_betti(o);
    if (*homology) return cmd_homology(o);
    if (*cycles) return cmd_cycles(o);
    if (*pborel) return cmd_pborel(o);
    if (*chain) return cmd_chain(o);
    if (*verify) return cmd_verify(o);
    if (*repro) return cmd_reproduce(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
  return kExitUsage;
}
