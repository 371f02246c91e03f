#pragma once

#include <json.hpp>

#include "orthokit/completions.hpp"
#include "orthokit/duality.hpp"
#include "orthokit/frame.hpp"
#include "orthokit/lattice.hpp"
#include "orthokit/report.hpp"

namespace ortho::io {

using json = nlohmann::json;

/// Canonical form: keys sorted (nlohmann object order), no wall-clock fields
/// unless with_timing. Byte-identical for identical inputs.
json to_json(const Report& r, bool with_timing = false);
json to_json(const LatticeData& d);
json to_json(const FiniteOrthoLattice& L);
json to_json(const OrthoFrame& f);
json to_json(const CompletionWitness& w, const Report& verification, bool with_timing = false);

std::string dump_canonical(const json& j);

}  // namespace ortho::io
