// uclab: command-line front end for the union-closed families toolkit.
//
// Exit status: 0 when everything checked passes, 1 when a check fails,
// 2 on usage or input errors.

#include <algorithm>
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "uclab/json_io.hpp"
#include "uclab/setfam.hpp"

using namespace uclab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int status(bool ok) { return ok ? kPass : kFail; }

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string list(const SetFamily& f) {
  std::string out;
  for (Mask m : f) out += (out.empty() ? "" : " ") + f.ground().format(m);
  return "{" + out + "}";
}

void printChecks(const AssertionReport& r) {
  for (const IdentityCheck& c : r.checks)
    std::cout << "  " << (c.holds ? "ok   " : "FAIL ") << c.name
              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
}

Word wordOrIdentity(const SetFamily& f, const std::string& text) {
  return text.empty() ? Word::identity(f.n()) : Word::parse(f.ground(), text);
}

struct Options {
  // verify
  int n = 3;
  bool exhaustive = false;
  std::size_t sample = 0;
  std::uint64_t seed = 42;
  std::string words;  // empty: all words up to n = 5, sampled beyond
  std::size_t wordsPerFamily = 3;
  std::vector<std::string> checks;
  std::vector<std::string> families;
  unsigned threads = 0;
  bool listOnly = false;
  // shared
  std::string family;
  std::string word;
  std::string json;
  bool asJson = false;
  std::string localizer = "min";
  std::string member;
  std::size_t count = 1000;
  std::string report;
};

int runVerify(const Options& o) {
  if (o.listOnly) {
    for (const CheckInfo& c : listChecks()) std::cout << c.id << "  " << c.description << '\n';
    return kPass;
  }
  SuiteConfig cfg;
  cfg.n = o.n;
  cfg.seed = o.seed;
  cfg.checks = o.checks;
  cfg.threads = o.threads;
  cfg.wordsPerFamily = o.wordsPerFamily;
  cfg.output = o.json;
  if (!o.families.empty()) {
    cfg.mode = FamilyMode::Explicit;
    for (const std::string& p : o.families) cfg.families.push_back(readFamFile(p));
  } else if (o.sample > 0) {
    cfg.mode = FamilyMode::Sample;
    cfg.sampleCount = o.sample;
  } else {
    cfg.mode = FamilyMode::Exhaustive;
  }
  int widest = cfg.n;
  if (!cfg.families.empty()) {
    widest = 0;
    for (const SetFamily& f : cfg.families) widest = std::max(widest, f.n());
  }
  if (o.words == "all" || (o.words.empty() && widest <= 5)) cfg.wordMode = WordMode::All;
  else if (o.words == "sample" || o.words.empty()) cfg.wordMode = WordMode::Sample;
  else throw CLI::ValidationError("--words", "expected 'all' or 'sample'");
  VerificationReport r = runSuite(cfg);
  if (!o.json.empty()) emit(toJson(r), o.json);
  if (o.json != "-") {
    std::cout << r.familiesScanned << " families, " << r.seconds << " s\n";
    for (const CheckTally& t : r.checks) {
      std::cout << (t.failed ? "FAIL " : "ok   ") << t.id << "  " << t.evaluated << " evaluated";
      if (t.failed) std::cout << ", " << t.failed << " failed";
      if (t.findings) std::cout << ", " << t.findings << " findings";
      std::cout << '\n';
      if (t.firstFailure) {
        const Counterexample& c = *t.firstFailure;
        std::cout << "    " << c.detail << (c.word ? "  [word " + *c.word + "]" : "") << '\n';
      }
    }
    std::cout << (r.passed() ? "all checks pass" : "some checks fail") << '\n';
  }
  return status(r.passed());
}

int runRise(const Options& o) {
  SetFamily f = readFamFile(o.family);
  RisingTranscript t = rise(f, wordOrIdentity(f, o.word));
  if (o.asJson) {
    emit(toJson(t), "-");
    return kPass;
  }
  const GroundSet& g = f.ground();
  std::cout << "word " << t.word().format(g) << '\n';
  for (std::size_t i = 0; i < t.sections().size(); ++i)
    std::cout << "F_" << i << " = " << list(t.sections()[i]) << '\n';
  for (std::size_t i = 0; i < f.size(); ++i)
    std::cout << g.format(f[i]) << " -> " << g.format(t.forwardAt(i)) << '\n';
  return kPass;
}

int runAccount(const Options& o) {
  SetFamily f = readFamFile(o.family);
  requireUnionClosed(f);
  const GroundSet& g = f.ground();
  if (o.word.empty()) {
    HyperAccounts h = hyperAccounts(f);
    if (o.asJson) emit(toJson(h), "-");
    else {
      std::cout << "invariant family " << list(h.invariant.family) << ", rank " << h.invariant.rank << '\n';
      for (std::size_t i = 0; i < f.size(); ++i)
        std::cout << g.format(f[i]) << "  Sigma=" << g.format(h.sigmaLocal[i])
                  << "  Pi=" << g.format(h.piLocal[i]) << '\n';
      printChecks(h.checks);
    }
    return status(h.checks.ok());
  }
  RisingAccounts a = risingAccounts(f, Word::parse(g, o.word));
  if (o.asJson) emit(toJson(a), "-");
  else {
    const SetFamily& img = a.transcript.image();
    for (std::size_t i = 0; i < img.size(); ++i)
      std::cout << g.format(img[i]) << "  sigma=" << g.format(a.sigmaLocal[i])
                << "  pi=" << g.format(a.piLocal[i]) << '\n';
    printChecks(a.checks);
  }
  return status(a.checks.ok());
}

int runBounds(const Options& o) {
  SetFamily f = readFamFile(o.family);
  requireUnionClosed(f);
  SetFamily s = o.localizer == "min" ? minimal(f) : readFamFile(o.localizer);
  if (!(s.ground() == f.ground())) throw Error("localizer ground set differs from the family's");
  AverageReport r = averageReport(f, s, wordOrIdentity(f, o.word));
  HyperAverageReport h = hyperAverageReport(f, s);
  const bool ok = r.checks.ok() && h.checks.ok();
  if (o.asJson) {
    Json j = {{"family", toJson(f)}, {"average", toJson(r)}, {"hyper", toJson(h)}, {"reimer", reimerHolds(f)}};
    if (auto w = franklWitness(f)) j["franklWitness"] = f.ground().label(*w);
    emit(j, "-");
    return status(ok);
  }
  std::cout << "localizer " << list(s) << '\n'
            << "average " << formatRational(r.average()) << " (" << toDouble(r.average()) << ")\n"
            << "  local        " << formatRational(r.boundLocal) << '\n'
            << "  general      " << formatRational(r.boundGeneral.base) << " - log2(" << r.boundGeneral.num
            << "/" << r.boundGeneral.den << ")/2 (" << r.boundGeneral.approx() << ")\n";
  if (r.boundMaxAntichain) std::cout << "  antichain    " << formatRational(*r.boundMaxAntichain) << '\n';
  std::cout << "  invariant    " << formatRational(r.boundInvariant) << '\n'
            << "  hyper        " << formatRational(r.boundHyper) << '\n'
            << "  covers       " << formatRational(h.boundCovers) << '\n';
  if (auto w = franklWitness(f)) std::cout << "frankl witness " << f.ground().label(*w) << '\n';
  printChecks(r.checks);
  printChecks(h.checks);
  return status(ok);
}

int runRemove(const Options& o) {
  SetFamily f = readFamFile(o.family);
  RemovalTrace t = removalTrace(f, f.ground().parse(o.member), wordOrIdentity(f, o.word));
  if (o.asJson) {
    emit(toJson(t), "-");
    return status(t.checks.ok());
  }
  const GroundSet& g = f.ground();
  std::cout << "swap chain";
  for (Mask m : t.swapChain) std::cout << ' ' << g.format(m);
  std::cout << "\nswap steps";
  for (int i : t.swapIndices) std::cout << ' ' << i;
  std::cout << "\nremoved image member " << g.format(t.missingElements.back()) << '\n';
  printChecks(t.checks);
  return status(t.checks.ok());
}

int runMaximize(const Options& o) {
  MaximizeRun r = o.family.empty() ? maximizeObjective(o.n) : maximizeObjective(readFamFile(o.family));
  if (o.asJson) emit(toJson(r), "-");
  else {
    for (const AugmentRecord& s : r.steps)
      std::cout << s.kind << ": " << s.before.objective << " -> " << s.after.objective << '\n';
    std::cout << "fixpoint objective " << r.fixpoint.objective << '\n'
              << "best " << list(r.best.antichain) << " objective " << r.best.objective << " (bound "
              << r.bound << ")\n";
  }
  return status(static_cast<std::uint64_t>(r.best.objective) <= r.bound);
}

int runAntichainCheck(const Options& o) {
  SetFamily a = readFamFile(o.family);
  if (!isAntichain(a)) throw Error("family is not an antichain");
  AntichainState s = AntichainState::of(a);
  const bool ok = static_cast<std::uint64_t>(s.objective) <= spernerBound(a.n());
  if (o.asJson) {
    Json j = toJson(s);
    j["augmentable"] = isAugmentable(a);
    j["bound"] = spernerBound(a.n());
    emit(j, "-");
  } else {
    std::cout << "first upward level " << list(s.nablaBar) << '\n'
              << "objective " << s.objective << " (bound " << spernerBound(a.n()) << ")\n"
              << "augmentable " << (isAugmentable(a) ? "yes" : "no") << '\n';
  }
  return status(ok);
}

int runScd(const Options& o) {
  SymmetricChainDecomposition d = symmetricChains(o.n);
  if (o.asJson) emit(toJson(d), "-");
  else {
    GroundSet g(o.n);
    for (const std::vector<Mask>& c : d.chains) {
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " < " : "") << g.format(c[i]);
      std::cout << '\n';
    }
  }
  return kPass;
}

int runSample(const Options& o) {
  std::vector<SetFamily> fs = sampleUnionClosed(o.n, o.count, o.seed);
  if (o.asJson) {
    Json arr = Json::array();
    for (const SetFamily& f : fs) arr.push_back(toJson(f));
    emit(arr, "-");
    return kPass;
  }
  for (std::size_t i = 0; i < fs.size(); ++i) std::cout << (i ? "\n" : "") << formatFam(fs[i]);
  return kPass;
}

int runReplay(const Options& o) {
  std::ifstream in(o.report);
  if (!in) throw Error("cannot open " + o.report);
  Json report = Json::parse(in);
  bool reproduced = false;
  std::size_t total = 0;
  for (const Json& c : report.at("checks")) {
    if (!c.contains("counterexample")) continue;
    ++total;
    Counterexample recorded = counterexampleFromJson(c.at("counterexample"));
    std::optional<Counterexample> again = replay(recorded);
    const bool same = again && *again == recorded;
    reproduced = reproduced || again.has_value();
    std::cout << recorded.check << ": " << (same ? "reproduced" : again ? "differs" : "passes now") << '\n';
    if (again && !same) std::cout << "    " << again->detail << '\n';
  }
  if (total == 0) std::cout << "no counterexamples in report\n";
  return status(!reproduced);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Union-closed family toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run the property suite over a family stream");
  verify->add_option("--n", o.n, "ground set size")->check(CLI::Range(1, 16));
  verify->add_flag("--exhaustive", o.exhaustive, "scan every family on n <= 4 points (default)");
  verify->add_option("--sample", o.sample, "sample this many union-closed families instead");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--words", o.words, "all | sample (default: all when n <= 5)");
  verify->add_option("--words-per-family", o.wordsPerFamily, "words drawn per family in sample mode");
  verify->add_option("--checks", o.checks, "check ids to run (default: all)")->delimiter(',');
  verify->add_option("--family", o.families, "run on these .fam files instead of a stream");
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)");
  verify->add_option("--json", o.json, "write the JSON report here ('-' for stdout)");
  verify->add_flag("--list", o.listOnly, "list the available checks");

  auto* riseCmd = app.add_subcommand("rise", "apply a rising word to a family");
  riseCmd->add_option("--family", o.family, ".fam file")->required();
  riseCmd->add_option("--word", o.word, "word such as acb (default: identity)");
  riseCmd->add_flag("--json", o.asJson, "print JSON");

  auto* account = app.add_subcommand("account", "spurious/pure accounts for one word, or hyper accounts");
  account->add_option("--family", o.family, ".fam file")->required();
  account->add_option("--word", o.word, "word; omit for the word-independent sets");
  account->add_flag("--json", o.asJson, "print JSON");

  auto* bounds = app.add_subcommand("bounds", "localized average and its lower bounds");
  bounds->add_option("--family", o.family, ".fam file")->required();
  bounds->add_option("--localizer", o.localizer, "'min' or a .fam file holding an antichain");
  bounds->add_option("--word", o.word, "word (default: identity)");
  bounds->add_flag("--json", o.asJson, "print JSON");

  auto* remove = app.add_subcommand("remove", "trace the rising run after removing one member");
  remove->add_option("--family", o.family, ".fam file")->required();
  remove->add_option("--member", o.member, "member to remove, e.g. ab or {}")->required();
  remove->add_option("--word", o.word, "word (default: identity)");
  remove->add_flag("--json", o.asJson, "print JSON");

  auto* antichain = app.add_subcommand("antichain", "antichain objective tools");
  antichain->require_subcommand(1);
  auto* maximize = antichain->add_subcommand("maximize", "run the augmentation loop");
  maximize->add_option("--n", o.n, "ground set size")->check(CLI::Range(2, 8));
  maximize->add_option("--seed-family", o.family, "seed antichain .fam (even n)");
  maximize->add_flag("--json", o.asJson, "print JSON");
  auto* check = antichain->add_subcommand("check", "objective of one antichain");
  check->add_option("--family", o.family, ".fam file")->required();
  check->add_flag("--json", o.asJson, "print JSON");
  auto* scd = antichain->add_subcommand("scd", "symmetric chain decomposition");
  scd->add_option("--n", o.n, "ground set size")->required()->check(CLI::Range(1, 16));
  scd->add_flag("--json", o.asJson, "print JSON");

  auto* sample = app.add_subcommand("sample", "print sampled union-closed families");
  sample->add_option("--n", o.n, "ground set size")->required()->check(CLI::Range(1, 16));
  sample->add_option("--count", o.count, "number of families");
  sample->add_option("--seed", o.seed, "random seed");
  sample->add_flag("--json", o.asJson, "print JSON");

  auto* replayCmd = app.add_subcommand("replay", "re-run the counterexamples of a JSON report");
  replayCmd->add_option("--report", o.report, "report written by verify --json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return runVerify(o);
    if (riseCmd->parsed()) return runRise(o);
    if (account->parsed()) return runAccount(o);
    if (bounds->parsed()) return runBounds(o);
    if (remove->parsed()) return runRemove(o);
    if (maximize->parsed()) return runMaximize(o);
    if (check->parsed()) return runAntichainCheck(o);
    if (scd->parsed()) return runScd(o);
    if (sample->parsed()) return runSample(o);
    if (replayCmd->parsed()) return runReplay(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
