#pragma once

#include <json.hpp>

#include "msidon/construct.hpp"
#include "msidon/core.hpp"
#include "msidon/exact.hpp"
#include "msidon/matching.hpp"
#include "msidon/primes.hpp"
#include "msidon/sidon.hpp"

namespace msidon {

using json = nlohmann::ordered_json;

/// Malformed input documents.
struct FormatError : DomainError {
  using DomainError::DomainError;
};

// Canonical set form: {"n": int, "elements": [ascending ints]}.
json to_json(const SidonSet& s);
SidonSet sidon_set_from_json(const json& j);

json to_json(const GapReport& g);
json to_json(const ConflictWitness& w);

// {"J": int, "items": [{"a","m","p"}, ...]}; extra keys are ignored on input.
json to_json(const PrivatePrimeCertificate& c);
json to_json(const MatchingCertificate& c);
PrivatePrimeCertificate certificate_from_json(const json& j);
json to_json(const CertificateVerdict& v);

json to_json(const LmSumReport& r);
json to_json(const ShortIntervalScan& s);

json to_json(const ConstructionParams& p);
json to_json(const ConstructionOutcome& o);

// {"left": [ids], "right": [ids], "edges": [{"u","v","w_num","w_den","ms"}]}
// with u, v given as ids. Weights beyond 64 bits are written as strings.
json to_json(const WeightedBipartiteGraph& g);
WeightedBipartiteGraph graph_from_json(const json& j);
json to_json(const WeightedBipartiteGraph& g, const Matching& m);
json to_json(const WeightedBipartiteGraph& g, const DeficiencyWitness& d);
json to_json(const WeightedBipartiteGraph& g, const HallCheck& h);

json to_json(const ExactResult& r);

json parse_json_text(const std::string& text);

}  // namespace msidon
