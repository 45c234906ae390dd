#pragma once

#include <functional>

#include <CLI11.hpp>

namespace iml::tools {

// Adds the per-module subcommands (gen, cycles, tour, color, fam, ext, des,
// perc, gl2). A parsed subcommand stores its work in `action`, which returns
// the exit code.
void add_module_verbs(CLI::App& app, std::function<int()>& action);

}  // namespace iml::tools
