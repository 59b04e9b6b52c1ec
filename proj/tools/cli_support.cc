// Copyright 2026 The Centering Kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_support.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cli {

int ExitCodeFor(ck_status status) {
  switch (status) {
    case CK_OK:
      return kExitOk;
    case CK_ERR_PARSE:
    case CK_ERR_IO:
      return kExitInput;
    case CK_ERR_EMPTY:
      return kExitEmpty;
    case CK_ERR_DEGENERATE:
      return kExitDegenerate;
    default:
      return kExitFailure;
  }
}

void Check(ck_status status, const std::string &context) {
  if (status == CK_OK) return;
  std::string message = ck_last_error_message();
  if (!context.empty()) message = context + ": " + message;
  throw CliError(ExitCodeFor(status), message);
}

CorpusPtr LoadCorpus(const std::string &path) {
  ck_corpus *c = nullptr;
  Check(ck_corpus_load_file(path.c_str(), &c));
  return CorpusPtr(c);
}

ConfigPtr MakeConfig(const json &config) {
  ck_config *c = nullptr;
  Check(ck_config_from_json(config.dump().c_str(), &c), "config");
  return ConfigPtr(c);
}

std::string TakeString(char *s) {
  std::string out = s != nullptr ? s : "";
  ck_string_free(s);
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path &path, const std::string &content) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) {
    throw CliError(kExitFailure, "cannot write '" + path.string() + "'");
  }
}

std::string CanonicalPath(const std::string &path) {
  return std::filesystem::absolute(path).lexically_normal().string();
}

int CsvTable::Column(const std::string &name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

double CsvTable::Number(size_t row, int column) const {
  const std::string &cell = rows[row][column];
  errno = 0;
  char *end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size() || errno == ERANGE) {
    throw CliError(kExitInput,
                   source + ":" + std::to_string(line_numbers[row]) +
                       ": column '" + header[column] + "' is not a number: '" +
                       cell + "'");
  }
  return v;
}

namespace {

std::vector<std::string> SplitCsvLine(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (auto &c : cells) {
    const size_t b = c.find_first_not_of(" \t");
    const size_t e = c.find_last_not_of(" \t");
    c = b == std::string::npos ? "" : c.substr(b, e - b + 1);
  }
  return cells;
}

}  // namespace

CsvTable ReadCsv(const std::string &path) {
  std::istringstream in(ReadFile(path));
  CsvTable table;
  table.source = path;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = SplitCsvLine(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw CliError(kExitInput, path + ":" + std::to_string(number) +
                                     ": expected " +
                                     std::to_string(table.header.size()) +
                                     " fields, got " +
                                     std::to_string(cells.size()));
    }
    table.rows.push_back(std::move(cells));
    table.line_numbers.push_back(number);
  }
  if (table.header.empty()) {
    throw CliError(kExitInput, path + ": missing header row");
  }
  return table;
}

std::string Fnv1aHex(const std::string &bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json ManifestJson(const Invocation &run,
                  const std::vector<std::string> &outputs) {
  json m;
  m["tool_version"] = ck_version();
  m["command"] = run.command;
  m["args"] = run.args;
  m["config"] = run.config;
  m["plan"] = run.plan;
  m["inputs"] = run.inputs;
  m["outputs"] = outputs;
  return m;
}

std::string ManifestHash(const json &manifest) {
  json copy = manifest;
  copy.erase("manifest_hash");
  return Fnv1aHex(copy.dump());
}

Invocation InvocationFromManifest(const std::string &path) {
  json m;
  try {
    m = json::parse(ReadFile(path));
  } catch (const json::parse_error &e) {
    throw CliError(kExitInput, path + ": not valid JSON: " + e.what());
  }
  auto need = [&](const char *key) -> const json & {
    if (!m.contains(key)) {
      throw CliError(kExitInput,
                     path + ": manifest lacks '" + std::string(key) + "'");
    }
    return m[key];
  };
  Invocation run;
  try {
    run.command = need("command").get<std::string>();
    run.args = need("args");
    run.config = need("config");
    run.plan = need("plan");
    run.inputs = need("inputs").get<std::vector<std::string>>();
  } catch (const json::type_error &e) {
    throw CliError(kExitInput, path + ": malformed manifest: " + e.what());
  }
  if (m.contains("manifest_hash") &&
      m["manifest_hash"] != ManifestHash(m)) {
    throw CliError(kExitInput, path + ": manifest hash does not match");
  }
  return run;
}

std::string FormatFixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace cli
