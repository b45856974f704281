/*
 * Copyright 2026 The ergvc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs every acceptance experiment through the C API and prints one
// pass/fail line per criterion. Exit status 0 iff all pass.

#include <cstdio>

#include "ergvc.h"

int main() {
  ergvc_report* report = nullptr;
  const ergvc_status st = ergvc_run("suite", "{}", ergvc_default_workers(), &report);
  if (st != ERGVC_OK) {
    std::fprintf(stderr, "suite failed to run: %s\n", ergvc_last_error());
    return 1;
  }
  std::fputs(ergvc_report_text(report), stdout);
  const int code = ergvc_report_exit_code(report);
  ergvc_report_free(report);
  return code == 0 ? 0 : 1;
}
