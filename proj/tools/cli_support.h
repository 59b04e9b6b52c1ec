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

// Plumbing shared by the centering-kit subcommands: exit codes, owning
// wrappers around C handles, files, CSV tables and run manifests.

#ifndef CENTERING_KIT_TOOLS_CLI_SUPPORT_H_
#define CENTERING_KIT_TOOLS_CLI_SUPPORT_H_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "centering_kit.h"
#include "json.hpp"

namespace cli {

using json = nlohmann::json;

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;       // unreadable or malformed input
inline constexpr int kExitEmpty = 3;       // nothing to work on
inline constexpr int kExitDegenerate = 4;  // constant series

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string &message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

int ExitCodeFor(ck_status status);

// Throws CliError carrying the library's last error when status != CK_OK.
void Check(ck_status status, const std::string &context = "");

struct CorpusDeleter {
  void operator()(ck_corpus *c) const { ck_corpus_free(c); }
};
struct ConfigDeleter {
  void operator()(ck_config *c) const { ck_config_free(c); }
};
using CorpusPtr = std::unique_ptr<ck_corpus, CorpusDeleter>;
using ConfigPtr = std::unique_ptr<ck_config, ConfigDeleter>;

CorpusPtr LoadCorpus(const std::string &path);
ConfigPtr MakeConfig(const json &config);

// Takes ownership of a library-allocated string.
std::string TakeString(char *s);

std::string ReadFile(const std::string &path);
void WriteFile(const std::filesystem::path &path, const std::string &content);

// Absolute, normalized form of |path|.
std::string CanonicalPath(const std::string &path);

// A comma-separated table with a header row. No quoting.
struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;  // 1-based, per row

  // Index of |name| in the header, or -1.
  int Column(const std::string &name) const;
  // Throws CliError(kExitInput) naming file and line when unparseable.
  double Number(size_t row, int column) const;
};

CsvTable ReadCsv(const std::string &path);

// Runs body(i) for i in [0, n) on up to |jobs| threads.
template <typename F>
void ParallelFor(size_t n, int jobs, F &&body) {
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) body(i);
  };
  const size_t threads =
      std::min<size_t>(n, static_cast<size_t>(jobs > 1 ? jobs : 1));
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto &t : pool) t.join();
}

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string Fnv1aHex(const std::string &bytes);

// Everything needed to reproduce one run. The output directory and thread
// count are not part of it: neither changes the bytes written.
struct Invocation {
  std::string command;
  json args = json::object();
  json config;  // canonical config object, or null
  json plan;    // permutation plan, or null
  std::vector<std::string> inputs;
  std::filesystem::path out_dir = ".";
  int jobs = 1;
};

// Manifest document without its hash, listing |outputs| by file name.
json ManifestJson(const Invocation &run,
                  const std::vector<std::string> &outputs);
// Hash of a manifest document (the manifest_hash key is ignored).
std::string ManifestHash(const json &manifest);
Invocation InvocationFromManifest(const std::string &path);

// Formats a double the way the library's CSV writers do.
std::string FormatFixed(double value);

}  // namespace cli

#endif  // CENTERING_KIT_TOOLS_CLI_SUPPORT_H_
