#pragma once

// JSON views of the library's reports, used by the CLI.

#include <json.hpp>

#include "uclab/accounting.hpp"
#include "uclab/antichain.hpp"
#include "uclab/bounds.hpp"
#include "uclab/harness.hpp"
#include "uclab/rising.hpp"

namespace uclab {

using Json = nlohmann::ordered_json;

Json toJson(const SetFamily& f);
Json toJson(const AssertionReport& r);
Json toJson(const RisingTranscript& t);
Json toJson(const RisingAccounts& a);
Json toJson(const HyperAccounts& h);
Json toJson(const AverageReport& r);
Json toJson(const HyperAverageReport& r);
Json toJson(const RemovalTrace& t);
Json toJson(const IrreducibleBoundReport& r);
Json toJson(const AntichainState& s);
Json toJson(const MaximizeRun& r);
Json toJson(const SymmetricChainDecomposition& d);
Json toJson(const Counterexample& c);
Json toJson(const VerificationReport& r);

Counterexample counterexampleFromJson(const Json& j);

}  // namespace uclab
