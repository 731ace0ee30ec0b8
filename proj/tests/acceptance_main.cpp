// Copyright 2026 The mubkit Authors
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

// Acceptance run: one PASS/FAIL line per criterion, followed by the failing
// checks. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "mubkit/acceptance.hpp"

#ifndef MUBKIT_CLI_PATH
#define MUBKIT_CLI_PATH "mubkit"
#endif

int main() {
  using namespace mubkit;
  const auto criteria = acceptance::run_all();
  int failed = 0;
  for (const auto& c : criteria) {
    const auto s = c.report.summary();
    std::printf("[%s] criterion %2d  %-36s %3zu/%-3zu checks  %.3fs", c.pass() ? "PASS" : "FAIL", c.id,
                c.title.c_str(), s.pass, s.pass + s.fail, c.seconds);
    if (c.budget > 0.0) std::printf(" (budget %.0fs)", c.budget);
    std::printf("\n");
    for (const auto& k : c.report.checks()) {
      if (!k.pass) {
        std::printf("         failed %s: measured %s expected %s tolerance %s\n", k.name.c_str(),
                    format_double(k.measured).c_str(), format_double(k.expected).c_str(),
                    format_double(k.tolerance).c_str());
      }
    }
    if (!c.pass()) ++failed;
  }

  const std::string cmd = std::string("\"") + MUBKIT_CLI_PATH + "\" paper-suite --out /dev/null";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int rc = status == -1 ? -1 : WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  const bool ok = rc == 0 && secs < 60.0;
  std::printf("[%s] criterion 11  %-36s exit %d  %.3fs (budget 60s)\n", ok ? "PASS" : "FAIL",
              "paper-suite exits 0", rc, secs);
  if (!ok) ++failed;

  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
