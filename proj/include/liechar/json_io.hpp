#pragma once

#include <string>

#include "json.hpp"

#include "liechar/acceptance.hpp"
#include "liechar/alphabeta.hpp"
#include "liechar/exceptdata.hpp"
#include "liechar/spectra.hpp"
#include "liechar/walks.hpp"

namespace liechar {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "liechar/1";

/// {"num": n, "den": d} in lowest terms.
Json to_json(const Rational& r);
/// Big rationals as strings when they overflow 64 bits.
Json to_json(const BigRational& r);
Json to_json(const Partition& p);
Json to_json(const LeviShape& s);
Json to_json(const JordanType& j);
Json to_json(const AlphaResult& a);
Json to_json(const BetaResult& b);
Json to_json(const Sandwich& s);
Json to_json(const RatioBound& b);
Json to_json(const FBound& f);
Json to_json(const SuppConstants& c);
Json to_json(const ExceptionalAlphaEntry& e);
Json to_json(const E7D6Row& row);
Json to_json(const E7D6Report& rep);
Json to_json(const ClassTable& t);
Json to_json(const CharTable& ct);
Json to_json(const ZetaValue& z);
Json to_json(const CosetReport& r);
Json to_json(const SteinbergReport& r);
Json to_json(const UnipotentDegreeReport& r);
Json to_json(const Main1Audit& a);
Json to_json(const MixingReport& m);
Json to_json(const BoundCatalog& c);
Json to_json(const CriterionResult& r);

/// Row-major entry codes.
Json matrix_json(const MatOps& ops, const Mat& m);

/// Wraps a payload as {"schema": ..., "command": ..., <payload fields>}.
Json envelope(const std::string& command, const Json& payload);

}  // namespace liechar
