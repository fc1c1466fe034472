// Serialization of complexes, homology, Morse traces and sweep reports.

#pragma once

#include <string>

#include "json.hpp"

#include "scrambled/complex.hpp"
#include "scrambled/homology.hpp"
#include "scrambled/morse.hpp"
#include "scrambled/verify.hpp"

namespace scrambled {

using Json = nlohmann::ordered_json;

/// {"word", "f_vector", "cells": [{"id", "dim", "subword"}],
///  "boundary": [{"cell", "face_index", "target"}]} with global cell ids.
Json complex_json(const DeltaComplex& x, const std::string& word);

/// Hasse diagram of the face poset; edges carry coface multiplicities.
std::string complex_dot(const DeltaComplex& x, const std::string& name);

/// All boundary matrices, augmentation first, separated by blank lines.
std::string complex_csv(const DeltaComplex& x);

/// [{"dim", "betti", "torsion"}]
Json homology_json(const HomologyProfile& h);

/// [{"pair": [σ, τ], "dim": dim σ, "rule": tag}]; the empty word is "".
Json matching_json(const Matching& m);
Json alternating_json(const AlternatingCollapse& c);
Json reduction_json(const ReductionTrace& t);

/// Matched pairs written as "σ -> τ  [tag]", one per line.
std::string matching_text(const Matching& m);
std::string alternating_text(const AlternatingCollapse& c);
std::string reduction_text(const ReductionTrace& t);

Json word_report_json(const WordReport& w);
Json sweep_json(const SweepReport& r);
/// One row per word.
std::string sweep_csv(const SweepReport& r);

Json tables_json(const TablesReport& r);

}  // namespace scrambled
