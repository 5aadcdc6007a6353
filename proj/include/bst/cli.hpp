// include/bst/cli.hpp

// Copyright 2026  Bangla Speech Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef BST_CLI_HPP_
#define BST_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bst/alignment.hpp"
#include "bst/augment.hpp"
#include "bst/chunking.hpp"
#include "bst/postproc.hpp"
#include "bst/textnorm.hpp"

namespace bst {

// Bundles every module's knobs plus the orchestration-only settings.  Each
// field name doubles as its key in the flat key=value config file.
struct PipelineConfig {
  uint64_t global_seed = 0;
  int workers = 1;
  ChunkConfig chunk;
  AlignConfig align;
  NormConfig norm;
  AugmentConfig augment;
  DedupConfig dedup;
};

// Parses a flat "key = value" config file ('#' starts a comment).  Unknown
// keys are an error so typos never silently fall back to defaults.
PipelineConfig load_pipeline_config(const std::string& path);

// Applies one "key=value" assignment; shared by the file loader and any
// future per-flag overrides.
void apply_config_entry(PipelineConfig* cfg, const std::string& key,
                        const std::string& value);

// Runs one command-line invocation (args exclude the program name).
// Reports go to `out` as JSON, human logs to `err`.  Returns 0 on success,
// 1 on processing failures, and 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace bst

#endif  // BST_CLI_HPP_
