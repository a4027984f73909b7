// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#pragma once

#include <string>
#include <vector>

namespace bgk {

// Round-trip safe decimal rendering, 17 significant digits. NaN of either
// sign renders as "nan" so table diffs stay platform independent.
std::string fmt17(double v);

// One CSV record: cells joined by commas, LF terminated. Cells are written
// verbatim; callers only pass numbers and bare identifiers.
std::string csv_line(const std::vector<std::string>& cells);

// Writes body to path in binary mode, creating parent directories.
// Throws Status::Io when the file cannot be created or written.
void write_file(const std::string& path, const std::string& body);

}  // namespace bgk
