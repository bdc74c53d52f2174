#ifndef BRAIDFORGE_JSON_OUT_HPP
#define BRAIDFORGE_JSON_OUT_HPP

#include <json.hpp>
#include <map>
#include <string>

#include "classify.hpp"
#include "convert.hpp"
#include "enumerate.hpp"
#include "invariants.hpp"
#include "trace.hpp"

namespace braidforge {

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const BraidWord& w);
nlohmann::json to_json(const InvariantProfile& p);
nlohmann::json to_json(const SatelliteWitness& w);
nlohmann::json to_json(const HyperbolicWitness& w);
nlohmann::json to_json(const GeometricVerdict& v);
nlohmann::json to_json(const ConversionTrace& t);

// FNV-1a over the sorted (exponent, coefficient) pairs, as 16 hex digits.
std::string laurent_digest(const LaurentPoly& p);

struct CommandOptions {
  int jones_limit = 16;
};

// Shared document for convert/classify/profile/verify; verify adds the
// cross-presentation equivalence report.
nlohmann::json run_command(const std::string& command, const std::string& spec_text,
                           const CommandOptions& opts);

// One enumeration record: spec text, verdict kind, first rule, alexander
// digest of the minimal braid.
nlohmann::json enumerate_line(const TLinkSpec& t);

nlohmann::json enumerate_summary(long long total,
                                 const std::map<std::string, long long>& kind_counts);

// Full enumeration run: one JSON line per spec (skipping the first `skip`),
// then a summary line. Records are computed by `workers` threads but emitted
// in enumeration order, so output is byte-identical for any worker count.
std::string run_enumeration(const EnumBounds& bounds, long long skip, int workers);

}  // namespace braidforge

#endif
