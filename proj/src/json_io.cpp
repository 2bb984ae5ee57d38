#include "monoclean/json_io.hpp"

#include <algorithm>

#include "monoclean/errors.hpp"
#include "monoclean/text.hpp"

namespace monoclean {

namespace {

std::size_t var_index(const RingContext& ring, const std::string& name) {
  const auto& names = ring.names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ParseError("unknown variable", name, 0);
  return static_cast<std::size_t>(it - names.begin());
}

Json encode_component(const IrreducibleComponent& q, const RingContext& ring) {
  Json powers = Json::object();
  for (std::size_t i = 0; i < q.nvars(); ++i) {
    if (q.powers()[i] > 0) powers[ring.name(i)] = q.powers()[i];
  }
  return {{"powers", powers},
          {"radical", encode(q.radical(), ring)},
          {"height", q.height()},
          {"text", format(q.ideal(), ring)}};
}

IrreducibleComponent decode_component(const Json& j, std::size_t nvars) {
  const RingContext ring(nvars);
  std::vector<Exponent> e(nvars, 0);
  for (const auto& [name, power] : j.at("powers").items()) e[var_index(ring, name)] = power.get<Exponent>();
  return IrreducibleComponent(Monomial(std::move(e)));
}

Json encode_sequence(const std::vector<Monomial>& seq) {
  Json out = Json::array();
  for (const auto& m : seq) out.push_back(encode(m));
  return out;
}

}  // namespace

Json encode(const Monomial& m) { return Json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end())); }

template <>
Monomial decode<Monomial>(const Json& j) {
  return Monomial(j.get<std::vector<Exponent>>());
}

Json encode(const MonomialPrime& p, const RingContext& ring) {
  Json vars = Json::array();
  for (std::size_t i : p.vars()) vars.push_back(ring.name(i));
  return {{"nvars", p.nvars()}, {"vars", vars}};
}

template <>
MonomialPrime decode<MonomialPrime>(const Json& j) {
  const std::size_t n = j.at("nvars").get<std::size_t>();
  const RingContext ring(n);
  std::vector<std::size_t> vars;
  for (const auto& v : j.at("vars")) vars.push_back(var_index(ring, v.get<std::string>()));
  return MonomialPrime(n, std::move(vars));
}

Json encode(const MonomialIdeal& ideal, const RingContext& ring) {
  return {{"nvars", ideal.nvars()}, {"generators", encode_sequence(ideal.gens())}, {"text", format(ideal, ring)}};
}

template <>
MonomialIdeal decode<MonomialIdeal>(const Json& j) {
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(decode<Monomial>(g));
  return MonomialIdeal(j.at("nvars").get<std::size_t>(), std::move(gens));
}

Json encode(const Decomposition& decomposition, const RingContext& ring) {
  Json comps = Json::array();
  for (const auto& q : decomposition.components) comps.push_back(encode_component(q, ring));
  return {{"nvars", ring.nvars()}, {"components", comps}};
}

template <>
Decomposition decode<Decomposition>(const Json& j) {
  const std::size_t n = j.at("nvars").get<std::size_t>();
  Decomposition out;
  for (const auto& c : j.at("components")) out.components.push_back(decode_component(c, n));
  return out;
}

Json encode(const OrderedDecomposition& certificate, const RingContext& ring) {
  const auto ts = t_sets(certificate);
  Json comps = Json::array();
  for (std::size_t i = 0; i < certificate.components.size(); ++i) {
    Json c = encode_component(certificate.components[i], ring);
    c["t_set"] = encode_sequence(ts[i]);
    comps.push_back(std::move(c));
  }
  return {{"nvars", ring.nvars()}, {"components", comps}};
}

template <>
OrderedDecomposition decode<OrderedDecomposition>(const Json& j) {
  return OrderedDecomposition{decode<Decomposition>(j).components};
}

Json encode(const PrimeFiltration& filtration, const RingContext& ring) {
  Json steps = Json::array();
  for (const auto& s : filtration.steps) {
    steps.push_back({{"v", encode(s.v)}, {"prime", encode(s.prime, ring)}, {"text", format(s.v, ring)}});
  }
  return {{"nvars", ring.nvars()}, {"steps", steps}};
}

template <>
PrimeFiltration decode<PrimeFiltration>(const Json& j) {
  PrimeFiltration out;
  for (const auto& s : j.at("steps")) {
    out.steps.push_back({decode<Monomial>(s.at("v")), decode<MonomialPrime>(s.at("prime"))});
  }
  return out;
}

Json encode(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({{"i", key.first}, {"degree", encode(key.second)}, {"value", value}});
  }
  return {{"nvars", table.nvars()},
          {"projective_dimension", table.projective_dimension()},
          {"regularity", table.regularity()},
          {"entries", entries}};
}

template <>
BettiTable decode<BettiTable>(const Json& j) {
  BettiTable out(j.at("nvars").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    out.set(e.at("i").get<std::size_t>(), decode<Monomial>(e.at("degree")), e.at("value").get<std::uint64_t>());
  }
  return out;
}

Json encode(const StanleyPartition& partition) {
  Json intervals = Json::array();
  for (const auto& iv : partition.intervals) {
    intervals.push_back({{"bottom", encode(iv.bottom)}, {"top", encode(iv.top)}, {"free", partition.free_vars(iv)}});
  }
  return {{"cap", encode(partition.cap)}, {"sdepth", partition.sdepth()}, {"intervals", intervals}};
}

template <>
StanleyPartition decode<StanleyPartition>(const Json& j) {
  StanleyPartition out{decode<Monomial>(j.at("cap")), {}};
  for (const auto& iv : j.at("intervals")) {
    out.intervals.push_back({decode<Monomial>(iv.at("bottom")), decode<Monomial>(iv.at("top"))});
  }
  return out;
}

Json encode(const CorpusSpec& spec) {
  return {{"seed", spec.seed},           {"nvars", spec.nvars},     {"max_deg", spec.max_deg},
          {"gen_count", spec.gen_count}, {"trials", spec.trials},   {"squarefree", spec.squarefree},
          {"dropout_pct", spec.dropout_pct}};
}

template <>
CorpusSpec decode<CorpusSpec>(const Json& j) {
  CorpusSpec s;
  s.seed = j.at("seed").get<std::uint64_t>();
  s.nvars = j.at("nvars").get<std::size_t>();
  s.max_deg = j.at("max_deg").get<Exponent>();
  s.gen_count = j.at("gen_count").get<std::size_t>();
  s.trials = j.at("trials").get<std::size_t>();
  s.squarefree = j.at("squarefree").get<bool>();
  s.dropout_pct = j.value("dropout_pct", 0u);
  return s;
}

Json encode(const Counterexample& record) {
  return {{"trial", record.trial},
          {"nvars", record.nvars},
          {"ideal", record.ideal},
          {"sequence", record.sequence},
          {"verdicts", record.verdicts}};
}

template <>
Counterexample decode<Counterexample>(const Json& j) {
  Counterexample c;
  c.trial = j.at("trial").get<std::size_t>();
  c.nvars = j.at("nvars").get<std::size_t>();
  c.ideal = j.at("ideal").get<std::string>();
  c.sequence = j.at("sequence").get<std::vector<std::string>>();
  c.verdicts = j.at("verdicts").get<std::map<std::string, std::string>>();
  return c;
}

Json encode(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& c : report.counterexamples) rows.push_back(encode(c));
  return {{"theorem", report.theorem},
          {"spec", encode(report.spec)},
          {"exhaustive", report.exhaustive},
          {"trials", report.trials},
          {"passes", report.passes},
          {"failures", report.failures},
          {"skips", report.skips},
          {"vacuous", report.vacuous},
          {"pass", report.pass()},
          {"counterexamples", rows},
          {"wall_seconds", report.wall_seconds}};
}

template <>
VerificationReport decode<VerificationReport>(const Json& j) {
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.spec = decode<CorpusSpec>(j.at("spec"));
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.trials = j.at("trials").get<std::size_t>();
  r.passes = j.at("passes").get<std::size_t>();
  r.failures = j.at("failures").get<std::size_t>();
  r.skips = j.at("skips").get<std::size_t>();
  r.vacuous = j.at("vacuous").get<std::size_t>();
  for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(decode<Counterexample>(c));
  r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

Json envelope(std::string_view kind, Json payload) {
  Json out = {{"schema", kSchemaVersion}, {"kind", kind}};
  if (payload.is_object()) {
    for (auto& [k, v] : payload.items()) out[k] = v;
  } else {
    out["value"] = std::move(payload);
  }
  return out;
}

}  // namespace monoclean
