#pragma once

/**
 * Named parameter substitutions producing well-known minus-one families.
 * Presets that come with a natural Darboux shift carry it in `shift`.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m1poly/lattice.hpp"

namespace m1poly {

struct Preset {
    std::string name;
    ParamSet params;
    std::optional<Scalar> shift;
};

struct PresetInfo {
    std::string name;
    std::vector<std::string> args;
    std::string family;       // which polynomial family the substitution yields
    bool carries_shift;
};

/// All preset names with their argument lists.
const std::vector<PresetInfo>& preset_catalog();

/// Resolves a preset by name.  Throws invalid_params for unknown names,
/// missing/extra arguments, or preset-specific constraint violations.
Preset make_preset(const std::string& name, const std::map<std::string, Scalar>& args);

} // namespace m1poly
