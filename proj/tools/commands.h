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

#ifndef CENTERING_KIT_TOOLS_COMMANDS_H_
#define CENTERING_KIT_TOOLS_COMMANDS_H_

#include "cli_support.h"

namespace cli {

// Each runner writes its outputs and manifest.json into run.out_dir and
// returns an exit code; failures are thrown as CliError.
int RunScore(const Invocation &run);
int RunPermute(const Invocation &run);
int RunCorrelate(const Invocation &run);
int RunCorefEval(const Invocation &run);
int RunFitRecency(const Invocation &run);

// Dispatches on run.command.
int RunInvocation(const Invocation &run);

}  // namespace cli

#endif  // CENTERING_KIT_TOOLS_COMMANDS_H_
