#pragma once

#include <random>
#include <string>
#include <vector>

#include "ontoterm/formal_context.h"
#include "ontoterm/workspace.h"

namespace ontoterm::testing {

// Ids of the relay fixture.
inline constexpr const char* kRelay = "relay";
inline constexpr const char* kThresholdRelay = "threshold_relay";
inline constexpr const char* kVoltageThresholdRelay = "voltage_threshold_relay";
inline constexpr const char* kDocFr = "doc-fr-1";
inline constexpr const char* kDocEn = "doc-en-1";

// Characters {switching, threshold, voltage}, the chain relay → threshold
// relay → voltage threshold relay named in fr (after_head) and en
// (before_head), with no usage terms and no documents.
ConceptSystem relay_system();

// relay_system() plus the fr usage term "relais de tension" (ellipsis) and,
// when `with_documents`, one fr and one en document on the species.
Snapshot relay_snapshot(bool with_documents = true);

// Path of a file under tests/fixtures.
std::string fixture_path(const std::string& name);

struct RandomSystemOptions {
    std::size_t characters = 10;
    std::size_t max_concepts = 30;
    std::size_t roots = 3;
    double descriptive_ratio = 0.0;
};

// Random chain-structured system built through define_concept, named in
// "fr" (after_head) and "en" (before_head). Each character has a
// single-token modifier word unique to it.
ConceptSystem random_system(std::mt19937& rng, const RandomSystemOptions& options = {});

// Random objects × attributes context with attribute ids a0.. and object ids
// o0.., density in [0, 1].
FormalContext random_context(std::mt19937& rng, std::size_t objects, std::size_t attributes, double density = 0.5);

}  // namespace ontoterm::testing
