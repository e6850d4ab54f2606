#pragma once

#include "germ/json_io.hpp"
#include "germ/resolve.hpp"

#include <optional>
#include <string>

namespace germ::cli {

// Result JSON carries "pass"; false means exit code 1.
Json run_examples(const std::optional<std::string>& id, const ResolveOptions& opts);

Json run_sweep(const Json& config, unsigned threads, const ResolveOptions& opts);

}  // namespace germ::cli
