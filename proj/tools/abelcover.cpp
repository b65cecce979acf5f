// Copyright 2026 The abelcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "abelcover/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants of abelian covers of stable surfaces", "abelcover"};
  abelcover::CommandRequest req;
  app.add_option("command", req.command,
                 "validate | classify-point | invariants | glue-check | tables | index | local-eq")
      ->required();
  app.add_option("file", req.file, "input JSON document");
  app.add_option("--point", req.point, "point id");
  app.add_option("--table", req.table, "table number (1..9)");
  app.add_flag("--all", "all tables (default)");
  app.add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--regenerate", req.regenerate, "re-derive tables by enumeration");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  abelcover::CommandOutput out = abelcover::run_command(req);
  (out.error && req.format != "json" ? std::cerr : std::cout) << out.text;
  return out.exit_code;
}
