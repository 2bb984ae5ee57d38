#include "monoclean/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

#include "monoclean/cleanness.hpp"
#include "monoclean/corpus.hpp"
#include "monoclean/decomposition.hpp"
#include "monoclean/errors.hpp"
#include "monoclean/homology.hpp"
#include "monoclean/json_io.hpp"
#include "monoclean/sequences.hpp"
#include "monoclean/stanley.hpp"
#include "monoclean/text.hpp"
#include "monoclean/verify.hpp"

namespace monoclean {

namespace {

struct Args {
  // shared
  std::optional<std::size_t> vars;
  unsigned characteristic = 0;
  bool json = false;
  bool strict = false;
  std::string out_path;

  std::string ideal;
  std::string seq;
  std::string check;
  std::size_t find = 0;
  std::size_t cap = 3;
  std::string mode = "pretty";
  std::string bound;
  bool certify = false;
  bool oracle = false;
  bool on = false;
  bool any_order = false;
  bool maximal = false;
  bool min_dim = false;
  bool formula = false;

  // corpus / verify
  std::string theorem;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  Exponent maxdeg = 2;
  std::size_t gens = 3;
  bool squarefree = false;
  unsigned dropout = 0;
  bool exhaustive = false;
  unsigned threads = 0;
  std::size_t target = 0;
};

class Runner {
 public:
  Runner(const Args& args, std::ostream& out) : a_(args), out_(out) {}

  int status() const { return status_; }

  RingContext ring(std::initializer_list<std::string_view> texts) const {
    std::size_t n = 0;
    for (auto t : texts) n = std::max(n, infer_nvars(t));
    return RingContext(a_.vars.value_or(std::max<std::size_t>(n, 1)), a_.characteristic);
  }

  void boolean(std::string_view kind, bool holds, Json extra = Json::object()) {
    if (a_.json) {
      extra["holds"] = holds;
      out_ << envelope(kind, std::move(extra)).dump(2) << "\n";
    } else {
      out_ << (holds ? "true" : "false") << "\n";
    }
    if (a_.strict && !holds) status_ = exit_code::kFalse;
  }

  void number(std::string_view kind, std::int64_t value, Json extra = Json::object()) {
    if (a_.json) {
      extra["value"] = value;
      out_ << envelope(kind, std::move(extra)).dump(2) << "\n";
    } else {
      out_ << value << "\n";
    }
  }

  void emit_json(std::string_view kind, Json payload) { out_ << envelope(kind, std::move(payload)).dump(2) << "\n"; }

  void dispatch(const std::string& name) {
    if (name == "decompose") return decompose();
    if (name == "ass" || name == "minprimes") return primes(name == "ass");
    if (name == "saturate") return saturate_cmd();
    if (auto mode = parse_mode(name)) return cleanness(*mode);
    if (name == "filtration") return filtration();
    if (name == "filterreg") return filterreg();
    if (name == "regseq") return regseq();
    if (name == "dseq") return dseq();
    if (name == "gcdcond") return gcdcond();
    if (name == "foresttype") return foresttype();
    if (name == "betti") return betti();
    if (name == "depth") return depth_cmd();
    if (name == "sdepth") return sdepth_cmd();
    if (name == "hreg") return hreg();
    if (name == "stanley") return stanley();
    if (name == "gen") return gen();
    if (name == "verify") return verify_cmd();
    throw CLI::ValidationError("unknown subcommand " + name);
  }

 private:
  MonomialIdeal ideal(const RingContext& r) const { return parse_ideal(a_.ideal, r); }

  void decompose() {
    const auto r = ring({a_.ideal});
    const auto d = irreducible_decomposition(ideal(r));
    if (a_.json) return emit_json("decomposition", encode(d, r));
    for (const auto& q : d.components) out_ << format(q.ideal(), r) << "\n";
  }

  void primes(bool all) {
    const auto r = ring({a_.ideal});
    const auto I = ideal(r);
    if (all && a_.maximal) return boolean("has_maximal", has_maximal_in_ass(I));
    const auto ps = all ? associated_primes(I) : minimal_primes(I);
    if (all && a_.min_dim) {
      std::size_t best = r.nvars();
      for (const auto& p : ps) best = std::min(best, p.dim());
      return number("min_dim_ass", static_cast<std::int64_t>(best));
    }
    if (a_.json) {
      Json list = Json::array();
      for (const auto& p : ps) list.push_back(encode(p, r));
      return emit_json(all ? "ass" : "minprimes", {{"primes", list}});
    }
    for (const auto& p : ps) out_ << format(p, r) << "\n";
  }

  void saturate_cmd() {
    const auto r = ring({a_.ideal});
    const auto s = saturate(ideal(r));
    if (a_.json) return emit_json("saturation", encode(s, r));
    out_ << format(s, r) << "\n";
  }

  void cleanness(CleannessMode mode) {
    const auto r = ring({a_.ideal});
    const auto I = ideal(r);
    Json extra = {{"ideal", encode(I, r)}, {"mode", to_string(mode)}, {"method", a_.oracle ? "filtration" : "decomposition"}};
    std::ostringstream cert;
    bool holds = false;
    if (a_.oracle) {
      const auto f = find_filtration(I, mode);
      holds = f.has_value();
      if (f && a_.certify) {
        extra["certificate"] = encode(*f, r);
        for (const auto& s : f->steps) cert << format(s.v, r) << " -> " << format(s.prime, r) << "\n";
      }
    } else {
      const auto v = decide(I, mode);
      holds = v.holds;
      if (v.certificate && a_.certify) {
        extra["certificate"] = encode(*v.certificate, r);
        const auto ts = t_sets(*v.certificate);
        for (std::size_t i = 0; i < ts.size(); ++i) {
          cert << "(" << format(v.certificate->components[i].ideal(), r) << ")  T = {"
               << format(std::span<const Monomial>(ts[i]), r) << "}\n";
        }
      }
    }
    boolean(to_string(mode), holds, std::move(extra));
    if (!a_.json) out_ << cert.str();
  }

  void filtration() {
    const auto r = ring({a_.ideal, a_.bound});
    const auto mode = parse_mode(a_.mode);
    if (!mode) throw CLI::ValidationError("--mode", "expected clean, pretty or almost");
    std::optional<Monomial> bound;
    if (!a_.bound.empty()) bound = parse_monomial(a_.bound, r);
    const auto f = find_filtration(ideal(r), *mode, bound);
    if (a_.json) {
      Json payload = {{"mode", to_string(*mode)}, {"found", f.has_value()}};
      if (f) payload["filtration"] = encode(*f, r);
      emit_json("filtration", std::move(payload));
    } else if (!f) {
      out_ << "none\n";
    } else {
      for (const auto& s : f->steps) out_ << format(s.v, r) << " -> " << format(s.prime, r) << "\n";
    }
    if (a_.strict && !f) status_ = exit_code::kFalse;
  }

  void filterreg() {
    const auto r = ring({a_.ideal, a_.check});
    const auto I = ideal(r);
    if (!a_.check.empty()) {
      const MonomialSequence seq(parse_sequence(a_.check, r));
      return boolean("filterreg", is_filter_regular_sequence(I, seq));
    }
    if (a_.find == 0) throw CLI::ValidationError("filterreg needs --check or --find");
    const auto found = find_filter_regular_sequence(I, a_.find, a_.cap);
    if (a_.json) {
      Json payload = {{"found", found.has_value()}};
      if (found) payload["sequence"] = format(std::span<const Monomial>(found->items()), r);
      emit_json("filterreg", std::move(payload));
    } else {
      out_ << (found ? format(std::span<const Monomial>(found->items()), r) : std::string("none")) << "\n";
    }
    if (a_.strict && !found) status_ = exit_code::kFalse;
  }

  void regseq() {
    const auto r = ring({a_.ideal, a_.check});
    const auto I = ideal(r);
    const MonomialSequence seq(parse_sequence(a_.check, r));
    if (!a_.formula) return boolean("regseq", is_regular_sequence(I, seq));
    MonomialIdeal current = I;
    bool ok = true;
    for (const auto& u : seq) {
      ok = ok && quotient_formula_check(current, u);
      current = sum(current, std::span<const Monomial>(&u, 1));
    }
    boolean("quotient_formula", ok);
  }

  void dseq() {
    const auto r = ring({a_.ideal, a_.seq});
    MonomialIdeal base = MonomialIdeal::zero(r.nvars());
    std::vector<Monomial> items;
    if (a_.on) {
      base = ideal(r);
      items = parse_sequence(a_.seq, r);
    } else {
      items = parse_sequence(a_.seq.empty() ? a_.ideal : a_.seq, r);
    }
    const MonomialSequence seq(std::move(items));
    if (!a_.any_order) return boolean("dseq", is_d_sequence_on(base, seq));
    const auto order = d_sequence_order(base, seq);
    Json extra = Json::object();
    if (order) extra["order"] = format(std::span<const Monomial>(order->items()), r);
    boolean("dseq", order.has_value(), std::move(extra));
  }

  void gcdcond() {
    const auto r = ring({a_.ideal});
    const MonomialSequence seq(parse_sequence(a_.ideal, r));
    if (!a_.any_order) return boolean("gcdcond", gcd_condition(seq));
    const auto order = gcd_condition_order(seq);
    Json extra = Json::object();
    if (order) extra["order"] = format(std::span<const Monomial>(order->items()), r);
    boolean("gcdcond", order.has_value(), std::move(extra));
  }

  void foresttype() {
    const auto r = ring({a_.ideal});
    boolean("foresttype", is_forest_type(ideal(r)));
  }

  void betti() {
    const auto r = ring({a_.ideal});
    const auto table = betti_table(ideal(r), a_.characteristic);
    if (a_.json) return emit_json("betti", encode(table));
    std::uint64_t max_deg = 0;
    for (const auto& [key, v] : table.entries()) max_deg = std::max(max_deg, key.second.degree());
    const std::size_t pd = table.projective_dimension();
    std::size_t width = 1;
    for (const auto& [key, v] : table.entries()) width = std::max(width, std::to_string(v).size());
    out_ << "i\\d";
    for (std::uint64_t d = 0; d <= max_deg; ++d) out_ << ' ' << std::setw(int(width)) << d;
    out_ << "\n";
    for (std::size_t i = 0; i <= pd; ++i) {
      out_ << std::setw(3) << i;
      for (std::uint64_t d = 0; d <= max_deg; ++d) {
        const auto b = table.graded(i, d);
        out_ << ' ' << std::setw(int(width)) << (b ? std::to_string(b) : std::string("."));
      }
      out_ << "\n";
    }
  }

  void depth_cmd() {
    const auto r = ring({a_.ideal});
    number("depth", static_cast<std::int64_t>(depth(ideal(r), a_.characteristic)));
  }

  void sdepth_cmd() {
    const auto r = ring({a_.ideal});
    const auto res = sdepth(ideal(r));
    if (a_.json) return emit_json("sdepth", {{"value", res.value}, {"witness", encode(res.witness)}});
    out_ << res.value << "\n";
    if (a_.certify) {
      for (const auto& iv : res.witness.intervals) {
        out_ << "[" << format(iv.bottom, r) << ", " << format(iv.top, r) << "]\n";
      }
    }
  }

  void hreg() {
    const auto r = ring({a_.ideal});
    boolean("hreg", h_regularity_check(ideal(r), a_.characteristic));
  }

  void stanley() {
    const auto r = ring({a_.ideal});
    boolean("stanley", stanley_conjecture_check(ideal(r), a_.characteristic));
  }

  CorpusSpec spec() const {
    CorpusSpec s;
    s.seed = a_.seed;
    s.nvars = a_.vars.value_or(3);
    s.max_deg = a_.maxdeg;
    s.gen_count = a_.gens;
    s.trials = a_.trials;
    s.squarefree = a_.squarefree;
    s.dropout_pct = a_.dropout;
    return s;
  }

  void gen() {
    const auto s = spec();
    const RingContext r(s.nvars);
    const auto ideals = gen_ideals(s);
    if (a_.json) {
      Json list = Json::array();
      for (const auto& I : ideals) list.push_back(encode(I, r));
      return emit_json("corpus", {{"spec", encode(s)}, {"ideals", list}});
    }
    for (const auto& I : ideals) out_ << format(I, r) << "\n";
  }

  void verify_cmd() {
    const auto theorem = parse_theorem(a_.theorem);
    if (!theorem) throw CLI::ValidationError("unknown theorem id '" + a_.theorem + "'");
    HarnessOptions options;
    options.witness_degree_cap = a_.cap;
    options.exhaustive = a_.exhaustive;
    options.threads = a_.threads;
    options.target_effective = a_.target;
    const auto report = verify(*theorem, spec(), options);
    if (a_.strict && !report.pass()) status_ = exit_code::kFalse;
    if (a_.json) return emit_json("report", encode(report));
    out_ << report.theorem << ": " << (report.pass() ? "PASS" : "FAIL") << "\n";
    out_ << "trials " << report.trials << "  passes " << report.passes << "  failures " << report.failures
         << "  skips " << report.skips << "  vacuous " << report.vacuous << "\n";
    out_ << "seed " << report.spec.seed << "  vars " << report.spec.nvars << "  maxdeg " << report.spec.max_deg
         << "  gens " << report.spec.gen_count << (report.exhaustive ? "  exhaustive" : "") << "\n";
    out_ << "wall " << std::fixed << std::setprecision(3) << report.wall_seconds << " s\n";
    for (const auto& c : report.counterexamples) {
      out_ << "counterexample trial " << c.trial << ": \"" << c.ideal << "\"";
      if (!c.sequence.empty()) {
        out_ << " seq \"";
        for (std::size_t i = 0; i < c.sequence.size(); ++i) out_ << (i ? ", " : "") << c.sequence[i];
        out_ << "\"";
      }
      for (const auto& [k, v] : c.verdicts) out_ << ' ' << k << '=' << v;
      out_ << "\n";
    }
  }

  const Args& a_;
  std::ostream& out_;
  int status_ = exit_code::kOk;
};

void build(CLI::App& app, Args& a) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--vars", a.vars, "number of variables (default: inferred from input)");
  app.add_option("--char", a.characteristic, "field characteristic for homology (0 or a prime)");
  app.add_flag("--json", a.json, "machine-readable output");
  app.add_flag("--strict", a.strict, "exit 1 when a boolean verdict is false");
  app.add_option("--out", a.out_path, "write output to this file");

  auto with_ideal = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("ideal", a.ideal, "comma-separated monomials, 0 for the zero ideal")->required();
    return sub;
  };

  with_ideal("decompose", "irredundant irreducible decomposition");
  auto* ass = with_ideal("ass", "associated primes of S/I");
  ass->add_flag("--maximal", a.maximal, "only report whether m is associated");
  ass->add_flag("--min-dim", a.min_dim, "only report min dim S/p over associated p");
  with_ideal("minprimes", "minimal primes of S/I");
  with_ideal("saturate", "I : m^infinity");
  for (const auto& [mode, help] : {std::pair{"clean", "is S/I clean"}, std::pair{"pretty", "is S/I pretty clean"},
                                    std::pair{"almost", "is S/I almost clean"}}) {
    auto* sub = with_ideal(mode, help);
    sub->add_flag("--certify", a.certify, "print the certificate");
    sub->add_flag("--oracle", a.oracle, "decide by searching prime filtrations instead");
  }
  auto* filt = with_ideal("filtration", "search for a prime filtration");
  filt->add_option("--mode", a.mode, "clean, pretty or almost")->capture_default_str();
  filt->add_option("--bound", a.bound, "candidate box bound (a monomial dividing by lcm)");
  auto* freg = with_ideal("filterreg", "filter-regular sequences on S/I");
  freg->add_option("--check", a.check, "sequence to test");
  freg->add_option("--find", a.find, "search a sequence of this length");
  freg->add_option("--cap", a.cap, "total-degree cap for --find")->capture_default_str();
  auto* reg = with_ideal("regseq", "regular sequences on S/I");
  reg->add_option("--check", a.check, "sequence to test")->required();
  reg->add_flag("--formula", a.formula, "check the Ass/Min/height rules along the sequence");
  auto* dseq = with_ideal("dseq", "d-sequence test (on S unless --on)");
  dseq->add_option("--seq", a.seq, "sequence to test");
  dseq->add_flag("--on", a.on, "test --seq on S/I for the positional ideal");
  dseq->add_flag("--check", [](std::int64_t) {}, "test (default)");
  dseq->add_flag("--any-order", a.any_order, "accept any ordering");
  auto* gcdc = with_ideal("gcdcond", "gcd condition on a sequence");
  gcdc->add_flag("--any-order", a.any_order, "accept any ordering");
  with_ideal("foresttype", "forest type test for G(I)");
  with_ideal("betti", "multigraded Betti table of S/I");
  with_ideal("depth", "depth of S/I");
  auto* sd = with_ideal("sdepth", "Stanley depth of S/I");
  sd->add_flag("--certify", a.certify, "print the witness partition");
  with_ideal("hreg", "Stanley decomposition with generator degrees <= reg");
  with_ideal("stanley", "depth <= sdepth");

  auto corpus = [&](CLI::App* sub) {
    sub->add_option("--seed", a.seed)->capture_default_str();
    sub->add_option("--trials", a.trials)->capture_default_str();
    sub->add_option("--maxdeg", a.maxdeg)->capture_default_str();
    sub->add_option("--gens", a.gens)->capture_default_str();
    sub->add_flag("--squarefree", a.squarefree);
    sub->add_option("--dropout", a.dropout, "percent chance a variable is absent from a trial");
  };
  corpus(app.add_subcommand("gen", "print a seeded ideal corpus"));
  auto* ver = app.add_subcommand("verify", "run a theorem harness");
  ver->add_option("theorem", a.theorem, "harness id")->required();
  corpus(ver);
  ver->add_option("--cap", a.cap, "witness total-degree cap")->capture_default_str();
  ver->add_flag("--exhaustive", a.exhaustive, "oracle-agreement over every ideal in the box");
  ver->add_option("--threads", a.threads);
  ver->add_option("--target", a.target, "draw until this many effective trials");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Cleanness, sequences and Stanley depth for monomial ideals", "monoclean");
  Args a;
  build(app, a);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kUsage;
  }

  std::ostringstream buffer;
  Runner runner(a, buffer);
  try {
    runner.dispatch(app.get_subcommands().front()->get_name());
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_code::kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error: bad input for the requested operation
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  if (a.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(a.out_path);
    if (!file) {
      err << "cannot write " << a.out_path << "\n";
      return exit_code::kUsage;
    }
    file << buffer.str();
  }
  return runner.status();
}

}  // namespace monoclean
