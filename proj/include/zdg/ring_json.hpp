#pragma once

#include <string>
#include <string_view>

#include "zdg/ring_spec.hpp"

namespace zdg {

/// Ring presentation documents. Schema: docs/ring_spec.md.
std::string spec_to_json(const RingSpec& spec, int indent = 2);
/// Throws InvalidSpec on malformed documents.
RingSpec spec_from_json(std::string_view text);

}  // namespace zdg
