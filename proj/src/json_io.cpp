#include "uclab/json_io.hpp"

namespace uclab {

namespace {

Json masks(const GroundSet& g, std::span<const Mask> ms) {
  Json out = Json::array();
  for (Mask m : ms) out.push_back(g.format(m));
  return out;
}

Json masks(const SetFamily& f) { return masks(f.ground(), f.members()); }

Json rational(const Rational& r) { return {{"exact", formatRational(r)}, {"approx", toDouble(r)}}; }

Json perElement(const std::vector<SetFamily>& byElement, const GroundSet& g) {
  Json out = Json::object();
  for (std::size_t a = 0; a < byElement.size(); ++a)
    out[g.label(static_cast<int>(a))] = masks(byElement[a]);
  return out;
}

Json localMap(const SetFamily& domain, const std::vector<Mask>& sigma, const std::vector<Mask>& pi) {
  Json out = Json::array();
  for (std::size_t i = 0; i < domain.size(); ++i)
    out.push_back({{"set", domain.ground().format(domain[i])},
                   {"sigma", domain.ground().format(sigma[i])},
                   {"pi", domain.ground().format(pi[i])}});
  return out;
}

const char* modeName(FamilyMode m) {
  switch (m) {
    case FamilyMode::Exhaustive: return "exhaustive";
    case FamilyMode::Sample: return "sample";
    case FamilyMode::Explicit: return "explicit";
  }
  return "";
}

}  // namespace

Json toJson(const SetFamily& f) {
  return {{"ground", f.ground().labels()}, {"members", masks(f)}};
}

Json toJson(const AssertionReport& r) {
  Json out = Json::array();
  for (const IdentityCheck& c : r.checks) {
    Json j = {{"name", c.name}, {"holds", c.holds}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json toJson(const RisingTranscript& t) {
  const SetFamily& f = t.input();
  Json sections = Json::array();
  for (const SetFamily& s : t.sections()) sections.push_back(masks(s));
  Json trajectories = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) trajectories.push_back(masks(f.ground(), t.trajectory(i)));
  return {{"family", toJson(f)},
          {"word", t.word().format(f.ground())},
          {"sections", std::move(sections)},
          {"trajectories", std::move(trajectories)},
          {"image", masks(t.image())}};
}

Json toJson(const RisingAccounts& a) {
  const GroundSet& g = a.transcript.input().ground();
  return {{"rising", toJson(a.transcript)},
          {"sigma", perElement(a.sigmaByElement, g)},
          {"pi", perElement(a.piByElement, g)},
          {"local", localMap(a.transcript.image(), a.sigmaLocal, a.piLocal)},
          {"checks", toJson(a.checks)}};
}

Json toJson(const HyperAccounts& h) {
  const GroundSet& g = h.family.ground();
  Json fibers = Json::array();
  for (const FiberReport& r : h.fibers)
    fibers.push_back({{"owner", g.format(r.owner)}, {"fiber", masks(r.fiber)}, {"maxFiber", masks(r.maxFiber)}});
  return {{"family", toJson(h.family)},
          {"invariant", masks(h.invariant.family)},
          {"rank", h.invariant.rank},
          {"fibers", std::move(fibers)},
          {"Sigma", perElement(h.sigmaByElement, g)},
          {"Pi", perElement(h.piByElement, g)},
          {"local", localMap(h.family, h.sigmaLocal, h.piLocal)},
          {"checks", toJson(h.checks)}};
}

Json toJson(const AverageReport& r) {
  Json bounds = {{"local", rational(r.boundLocal)},
                 {"general",
                  {{"base", formatRational(r.boundGeneral.base)},
                   {"log2Num", r.boundGeneral.num},
                   {"log2Den", r.boundGeneral.den},
                   {"approx", r.boundGeneral.approx()}}},
                 {"invariant", rational(r.boundInvariant)},
                 {"hyper", rational(r.boundHyper)}};
  if (r.boundMaxAntichain) bounds["maxAntichain"] = rational(*r.boundMaxAntichain);
  if (r.boundMaxAntichainSearch) bounds["maxAntichainSearch"] = rational(*r.boundMaxAntichainSearch);
  return {{"localizer", masks(r.localizer)},
          {"idealSize", r.idealSize},
          {"lengthSum", r.lengthSum},
          {"average", rational(r.average())},
          {"upsetSize", r.upsetSize},
          {"piCount", r.piCount},
          {"sigmaCount", r.sigmaCount},
          {"sigmaS", r.sigmaS},
          {"bounds", std::move(bounds)},
          {"checks", toJson(r.checks)}};
}

Json toJson(const HyperAverageReport& r) {
  return {{"localizer", masks(r.localizer)},
          {"idealSize", r.idealSize},
          {"lengthSum", r.lengthSum},
          {"average", rational(r.average())},
          {"hyperSigmaCount", r.hyperSigmaCount},
          {"hyperPiCount", r.hyperPiCount},
          {"coverUnionCount", r.coverUnionCount},
          {"pureFloor", r.pureFloor},
          {"boundHyper", rational(r.boundHyper)},
          {"boundCovers", rational(r.boundCovers)},
          {"checks", toJson(r.checks)}};
}

Json toJson(const RemovalTrace& t) {
  const GroundSet& g = t.image.ground();
  Json out = {{"removed", g.format(t.removed)},
              {"word", t.word.format(g)},
              {"swapChain", masks(g, t.swapChain)},
              {"swapIndices", t.swapIndices},
              {"missing", masks(g, t.missingElements)},
              {"image", masks(t.image)},
              {"reducedImage", masks(t.reducedImage)},
              {"checks", toJson(t.checks)}};
  if (t.caseTag) out["case"] = *t.caseTag == SwapCase::NoSwap ? "no-swap" : "bar-swap";
  return out;
}

Json toJson(const IrreducibleBoundReport& r) {
  return {{"joinIrreducibles", r.jCount},
          {"minImage", r.minImage},
          {"secondLevel", r.secondLevel},
          {"imageBound", r.imageBound},
          {"spernerBound", r.spernerBound},
          {"checks", toJson(r.checks)}};
}

Json toJson(const AntichainState& s) {
  return {{"antichain", masks(s.antichain)},
          {"firstUpwardLevel", masks(s.nablaBar)},
          {"objective", s.objective},
          {"minLen", s.minLen},
          {"maxLen", s.maxLen}};
}

Json toJson(const MaximizeRun& r) {
  Json steps = Json::array();
  for (const AugmentRecord& s : r.steps)
    steps.push_back({{"kind", s.kind}, {"before", toJson(s.before)}, {"after", toJson(s.after)}});
  return {{"n", r.seed.n()},
          {"seed", masks(r.seed)},
          {"steps", std::move(steps)},
          {"fixpoint", toJson(r.fixpoint)},
          {"best", toJson(r.best)},
          {"bound", r.bound}};
}

Json toJson(const SymmetricChainDecomposition& d) {
  GroundSet g(d.n);
  Json chains = Json::array();
  for (const std::vector<Mask>& c : d.chains) chains.push_back(masks(g, c));
  return {{"n", d.n}, {"chains", std::move(chains)}};
}

Json toJson(const Counterexample& c) {
  Json out = {{"check", c.check}, {"family", c.family}};
  if (c.word) out["word"] = *c.word;
  out["detail"] = c.detail;
  return out;
}

Counterexample counterexampleFromJson(const Json& j) {
  Counterexample c{j.at("check").get<std::string>(), j.at("family").get<std::string>(), std::nullopt,
                   j.value("detail", std::string{})};
  if (j.contains("word")) c.word = j.at("word").get<std::string>();
  return c;
}

Json toJson(const VerificationReport& r) {
  const SuiteConfig& c = r.config;
  Json config = {{"mode", modeName(c.mode)},
                 {"wordMode", c.wordMode == WordMode::All ? "all" : "sample"},
                 {"seed", c.seed}};
  if (c.mode != FamilyMode::Explicit) config["n"] = c.n;
  if (c.mode == FamilyMode::Sample) config["sampleCount"] = c.sampleCount;
  if (c.wordMode == WordMode::Sample) config["wordsPerFamily"] = c.wordsPerFamily;
  Json checks = Json::array();
  for (const CheckTally& t : r.checks) {
    Json j = {{"id", t.id},
              {"evaluated", t.evaluated},
              {"passed", t.evaluated - t.failed - t.findings},
              {"failed", t.failed},
              {"findings", t.findings}};
    if (t.firstFailure) j["counterexample"] = toJson(*t.firstFailure);
    if (t.firstFinding) j["finding"] = toJson(*t.firstFinding);
    checks.push_back(std::move(j));
  }
  return {{"schema", 1},
          {"passed", r.passed()},
          {"config", std::move(config)},
          {"familiesScanned", r.familiesScanned},
          {"seconds", r.seconds},
          {"checks", std::move(checks)}};
}

}  // namespace uclab
