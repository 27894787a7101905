#pragma once

#include <filesystem>
#include <vector>

namespace sfft {

/// Renders the five experiment plots (runtime vs n, runtime vs k, sampling vs
/// n, sampling vs k, l1 vs snr) from a sweep CSV as SVG files in out_dir.
/// Throws SchemaError on a malformed CSV.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& csv, const std::filesystem::path& out_dir);

}  // namespace sfft
