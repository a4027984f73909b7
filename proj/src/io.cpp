// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bgkstab developers
#include "bgkstab/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bgkstab/error.hpp"

namespace bgk {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) fail(Status::Io, "cannot create directory '" + p.parent_path().string() + "'");
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) fail(Status::Io, "cannot open '" + path + "' for writing");
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) fail(Status::Io, "short write to '" + path + "'");
}

}  // namespace bgk
