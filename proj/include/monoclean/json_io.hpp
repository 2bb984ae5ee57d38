#pragma once

// JSON encodings for every value the CLI prints with --json. Each
// encode() has a matching decode<T>() so values round-trip exactly.

#include <json.hpp>

#include "monoclean/cleanness.hpp"
#include "monoclean/corpus.hpp"
#include "monoclean/decomposition.hpp"
#include "monoclean/homology.hpp"
#include "monoclean/monomial.hpp"
#include "monoclean/stanley.hpp"
#include "monoclean/verify.hpp"

namespace monoclean {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json encode(const Monomial& m);
Json encode(const MonomialPrime& p, const RingContext& ring);
Json encode(const MonomialIdeal& ideal, const RingContext& ring);
Json encode(const Decomposition& decomposition, const RingContext& ring);
/// Ordered components, each with its T-set.
Json encode(const OrderedDecomposition& certificate, const RingContext& ring);
Json encode(const PrimeFiltration& filtration, const RingContext& ring);
Json encode(const BettiTable& table);
Json encode(const StanleyPartition& partition);
Json encode(const CorpusSpec& spec);
Json encode(const Counterexample& record);
Json encode(const VerificationReport& report);

template <class T>
T decode(const Json& j);

template <> Monomial decode<Monomial>(const Json& j);
template <> MonomialPrime decode<MonomialPrime>(const Json& j);
template <> MonomialIdeal decode<MonomialIdeal>(const Json& j);
template <> Decomposition decode<Decomposition>(const Json& j);
template <> OrderedDecomposition decode<OrderedDecomposition>(const Json& j);
template <> PrimeFiltration decode<PrimeFiltration>(const Json& j);
template <> BettiTable decode<BettiTable>(const Json& j);
template <> StanleyPartition decode<StanleyPartition>(const Json& j);
template <> CorpusSpec decode<CorpusSpec>(const Json& j);
template <> Counterexample decode<Counterexample>(const Json& j);
template <> VerificationReport decode<VerificationReport>(const Json& j);

/// Wraps a payload as {"schema": 1, "kind": kind, ...payload}.
Json envelope(std::string_view kind, Json payload);

}  // namespace monoclean
