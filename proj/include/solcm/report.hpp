#pragma once

#include "solcm/complex.hpp"
#include "solcm/primes.hpp"
#include "solcm/ring.hpp"
#include "solcm/solenoid.hpp"
#include "solcm/tower.hpp"
#include "solcm/verdict.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace solcm {

inline constexpr int kReportSchemaVersion = 1;

/// A value object behind every CLI answer. JSON keys are sorted, integers
/// are emitted as decimal strings, and nothing depends on time or
/// environment, so identical inputs give identical bytes.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  /// Each table: {"name", "title", "cells": [{degree|item, value, text, provenance}]}.
  nlohmann::json tables = nlohmann::json::array();
  std::vector<std::string> notes;
  /// Derivations, emitted only on request.
  nlohmann::json trace = nlohmann::json::array();

  nlohmann::json to_json(bool include_trace) const;
  std::string json_text(bool include_trace) const;
  std::string text(bool include_trace) const;
};

nlohmann::json group_json(const SymbolicGroup& g);

Report lens_report(const Integer& q, const CoefficientRing& ring);
Report suspension_report(const Integer& q, const CoefficientRing& ring);
Report local_report(const PrimeSet& primes, const CoefficientRing& ring);
Report complement_report(const PrimeSet& primes, const CoefficientRing& ring);
Report pair_report(const PrimeSet& primes, const CoefficientRing& ring);
Report clc_report_document(const PrimeSet& primes, const CoefficientRing& ring);
Report classify_report(const PrimeSet& primes, const CoefficientRing& ring);

enum class TowerOp { Lim, LimOne, Colim };
/// The symbolic answer for the multiplication tower over `base`, with the
/// Mittag-Leffler status and, for inverse towers over Z or Z_m, the
/// truncated oracle at `depth` for comparison.
Report tower_report(TowerOp op, const CoefficientRing& base, const PrimeSet& primes,
                    std::size_t depth);

} // namespace solcm
