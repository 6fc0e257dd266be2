/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Drives the CLI binary and checks that exit codes partition outcomes:
// 0 success, 1 usage error, 2 expression/dimension/data error.
//
//   cli_tests <path-to-cli-binary>

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string g_cli;
int g_failures = 0;

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += (c == '\'') ? std::string("'\\''") : std::string(1, c);
  out += "'";
  return out;
}

struct Run {
  int exit_code;
  std::string output;
};

Run run(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(g_cli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Run r{-1, {}};
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect_exit(const std::vector<std::string>& args, int want) {
  Run r = run(args);
  if (r.exit_code != want) {
    ++g_failures;
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    std::fprintf(stderr, "[FAIL]%s: exit %d, want %d\n", joined.c_str(),
                 r.exit_code, want);
  }
}

void expect_output(const std::vector<std::string>& args,
                   const std::string& want) {
  Run r = run(args);
  if (r.exit_code != 0 || r.output != want) {
    ++g_failures;
    std::fprintf(stderr, "[FAIL] output mismatch: got exit %d, '%s'\n",
                 r.exit_code, r.output.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <cli-binary>\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];

  // success
  expect_exit({"eval", "1 m"}, 0);
  expect_exit({"eval", "1 GW * 10 fs", "--in", "uJ"}, 0);
  expect_exit({"blackhole", "--mass", "1e30 kg"}, 0);
  expect_exit({"blackhole", "--radius", "1 m", "--mu", "1"}, 0);
  expect_exit({"bound", "--length", "0.1 m", "--mass", "1 kg"}, 0);
  expect_exit({"landauer"}, 0);
  expect_exit({"landauer", "--bits", "1e23"}, 0);
  expect_exit({"--help"}, 0);
  expect_exit({"--version"}, 0);

  // usage errors
  expect_exit({}, 1);
  expect_exit({"frobnicate"}, 1);
  expect_exit({"eval"}, 1);
  expect_exit({"eval", "1 m", "--frazzle"}, 1);
  expect_exit({"blackhole"}, 1);
  expect_exit({"blackhole", "--mass", "1 kg", "--radius", "1 m"}, 1);
  expect_exit({"bound", "--mass", "1 kg"}, 1);
  expect_exit({"bound", "--length", "1 m"}, 1);
  expect_exit({"bound", "--length", "1 m", "--mass", "1 kg", "--energy",
               "1 J"}, 1);
  expect_exit({"bound", "--length", "1 m", "--mass", "1 kg", "--format",
               "yaml"}, 1);
  expect_exit({"report"}, 1);
  expect_exit({"landauer", "--mu", "lots"}, 1);

  // expression, dimension and data errors
  expect_exit({"eval", "1 m + 1 J"}, 2);
  expect_exit({"eval", "2 ^ x"}, 2);
  expect_exit({"eval", "1 zorg"}, 2);
  expect_exit({"eval", "1 / (0 * s)"}, 2);
  expect_exit({"eval", "1 m", "--in", "J"}, 2);
  expect_exit({"blackhole", "--mass", "-1 kg"}, 2);
  expect_exit({"blackhole", "--mass", "1 m"}, 2);
  expect_exit({"blackhole", "--mass", "1e30 kg", "--mu", "-1"}, 2);
  expect_exit({"bound", "--length", "1 kg", "--mass", "1 kg"}, 2);
  expect_exit({"bound", "--length", "1 m", "--energy", "1 kg"}, 2);
  expect_exit({"bound", "--length", "1 m", "--mass", "1 kg", "--mu", "0"}, 2);
  expect_exit({"landauer", "--bits", "-1"}, 2);
  expect_exit({"report", "/nonexistent/scenarios.json"}, 2);

  // pinned output stays diff-stable
  expect_output({"eval", "1 GW * 10 fs", "--in", "uJ"}, "10 uJ\n");
  expect_output({"eval", "1 kg * c^2"}, "8.98755e+16 * kg * m^2 * s^-2\n");

  if (g_failures == 0) {
    std::printf("all CLI exit-code checks passed\n");
    return 0;
  }
  std::printf("%d CLI exit-code checks FAILED\n", g_failures);
  return 1;
}
