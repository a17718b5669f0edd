#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"
#include "json.hpp"

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr, merged
};

CliResult run_cli(const std::string& args, const std::string& stdin_text = {},
                  bool give_stdin = false) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  if (give_stdin) {
    std::filesystem::path in = g_tmp / "stdin.txt";
    std::ofstream(in) << stdin_text;
    cmd += " < " + in.string();
  } else {
    cmd += " < /dev/null";
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliResult{code, out};
}

std::string write_corpus(const std::string& name, const std::string& content) {
  std::filesystem::path path = g_tmp / name;
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify prints VALID or INVALID and sets the exit code") {
  CliResult valid = run_cli("verify --scheme airline --digits 123456789012340");
  CHECK(valid.exit_code == 0);
  CHECK(valid.output == "VALID\n");

  CliResult invalid = run_cli("verify --scheme routing --digits 100000000");
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.output == "INVALID\n");

  CHECK(run_cli("verify --scheme routing --digits 388007000").exit_code == 0);
  CHECK(run_cli("verify --scheme luhn --digits 4539148803436467").exit_code ==
        0);
  CHECK(run_cli("verify --scheme isbn10 --digits 0-306-40615-2").exit_code ==
        0);
  CHECK(run_cli("verify --scheme isbn10 --digits 100000001X").exit_code == 0);
  CHECK(run_cli("verify --scheme isbn10 --digits 0306406151").exit_code == 1);
}

TEST_CASE("malformed input and usage problems exit 2") {
  CliResult short_ticket = run_cli("verify --scheme airline --digits 1234");
  CHECK(short_ticket.exit_code == 2);
  CHECK(contains(short_ticket.output, "error:"));

  CliResult bad_digit = run_cli("verify --scheme airline --digits 12345x789012340");
  CHECK(bad_digit.exit_code == 2);
  CHECK(contains(bad_digit.output, "non-digit"));

  CHECK(run_cli("verify --scheme ean13 --digits 1").exit_code == 2);
  CHECK(run_cli("verify --digits 123").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("prop run --name C1 --trials nope").exit_code == 2);
}

TEST_CASE("dash reads the payload from stdin") {
  CliResult r = run_cli("verify --scheme airline --digits -",
                        "123456789012340\n", true);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "VALID\n");
}

TEST_CASE("complete appends the check digit") {
  CHECK(run_cli("complete --scheme airline --digits 10000000000000").output ==
        "100000000000003\n");
  CHECK(run_cli("complete --scheme routing --digits 38800700").output ==
        "388007000\n");
  CHECK(run_cli("complete --scheme luhn --digits 453914880343646").output ==
        "4539148803436467\n");
  CHECK(run_cli("complete --scheme isbn10 --digits 030640615").output ==
        "0306406152\n");
  CHECK(run_cli("complete --scheme isbn10 --digits 100000001").output ==
        "100000001X\n");
  CHECK(run_cli("complete --scheme airline --digits 123").exit_code == 2);
}

TEST_CASE("mutate applies one error") {
  CHECK(run_cli("mutate --op substitute --pos 11 --digit 7 "
                "--digits 420000000000000")
            .output == "420000000007000\n");
  CHECK(run_cli("mutate --op transpose --pos 0 --digits 388007000").output ==
        "838007000\n");
  CHECK(run_cli("mutate --op flipbit --pos 2 --bits 00111").output ==
        "00011\n");

  CHECK(run_cli("mutate --op substitute --pos 0 --digits 421").exit_code == 2);
  CHECK(run_cli("mutate --op substitute --pos 9 --digit 1 --digits 421")
            .exit_code == 2);
  CHECK(run_cli("mutate --op transpose --pos 2 --digits 421").exit_code == 2);
  CHECK(run_cli("mutate --op flipbit --pos 0 --digits 421").exit_code == 2);
  CHECK(run_cli("mutate --op substitute --pos 0 --digit 12 --digits 421")
            .exit_code == 2);
}

TEST_CASE("postnet encode, decode and correct") {
  CliResult enc = run_cli("postnet encode --digits 421");
  CHECK(enc.exit_code == 0);
  CHECK(enc.output == "10110110101110011001\n");

  CliResult dec = run_cli("postnet decode --bits 10110110101110011001");
  CHECK(dec.exit_code == 0);
  CHECK(dec.output == "421\n");

  // A flipped bit makes strict decoding fail but correction succeed.
  CliResult corrupt = run_cli("postnet decode --bits 00110110101110011001");
  CHECK(corrupt.exit_code == 1);
  CHECK(contains(corrupt.output, "error:"));

  CliResult fixed = run_cli("postnet correct --bits 00110110101110011001");
  CHECK(fixed.exit_code == 0);
  CHECK(contains(fixed.output, "corrected block 0: 00110 -> 4"));
  CHECK(contains(fixed.output, "digits: 421"));

  CliResult clean = run_cli("postnet correct --bits 10110110101110011001");
  CHECK(clean.exit_code == 0);
  CHECK(contains(clean.output, "clean"));
  CHECK(contains(clean.output, "digits: 421"));

  // Two flips in one block forge a codeword; the checksum exposes it.
  CliResult forged = run_cli("postnet correct --bits 1001100111");
  CHECK(forged.exit_code == 1);
  CHECK(contains(forged.output, "uncorrectable"));

  CHECK(run_cli("postnet decode --bits 101").exit_code == 2);
  CHECK(run_cli("postnet decode --bits 10110110101110011002").exit_code == 2);
  // Valid codewords whose digit total misses the checksum: strict decode
  // reports corruption, not usage error.
  CHECK(run_cli("postnet decode --bits 10110110101110010110").exit_code == 1);
}

TEST_CASE("prop list names the ten catalog entries") {
  CliResult r = run_cli("prop list");
  CHECK(r.exit_code == 0);
  for (int i = 1; i <= 10; ++i) {
    CHECK(contains(r.output, "C" + std::to_string(i)));
  }
  CHECK(contains(r.output, "airline-substitution"));
  CHECK(contains(r.output, "postnet-correction"));
}

TEST_CASE("prop run emits the cgen block and exit code 1 on counterexamples") {
  CliResult r = run_cli("prop run --name C1 --trials 2000 --seed 42 --format cgen");
  CHECK(r.exit_code == 1);
  CHECK(r.output.rfind("**Summary of Cgen/testing**\n", 0) == 0);
  CHECK(contains(r.output, "We tested 2000 examples across 1 subgoals"));
  CHECK(contains(r.output, "We falsified the conjecture."));
  CHECK(contains(r.output, " [found in : \"top\"]"));
  CHECK(contains(r.output, "Cases in which the conjecture is true include:"));
  std::string tail = "Test? found a counterexample.\n";
  REQUIRE(r.output.size() >= tail.size());
  CHECK(r.output.substr(r.output.size() - tail.size()) == tail);

  // Identical commands give identical output.
  CliResult again = run_cli("prop run --name C1 --trials 2000 --seed 42 --format cgen");
  CHECK(again.output == r.output);

  CliResult ok = run_cli("prop run --name C3 --trials 500 --seed 1");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "Test? succeeded. No counterexamples were found."));

  CHECK(run_cli("prop run --name C99").exit_code == 2);
  CHECK(contains(run_cli("prop run --name C99").output, "unknown property"));
}

TEST_CASE("prop run --format json round-trips the summary fields") {
  CliResult r = run_cli("prop run --name C3 --trials 400 --seed 9 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["mode"] == "random");
  CHECK(j["seed"] == 9);
  CHECK(j["trials"] == 400);
  CHECK(j["tested"] == 400);
  CHECK(j["satisfied"].get<std::uint64_t>() ==
        j["counterexamples"].size() + j["witnesses"].get<std::uint64_t>());
  CHECK(j["satisfied_unique"].get<std::uint64_t>() <=
        j["satisfied"].get<std::uint64_t>());
  CHECK(j["vacuous"] == false);
  CHECK(j["counterexamples"].is_array());
  CHECK(j["counterexamples"].empty());
  CHECK(j["witnesses_sample"].is_array());
  std::vector<std::string> expected_keys = {
      "mode",     "seed",      "trials",           "tested",
      "satisfied", "satisfied_unique", "counterexamples", "witnesses",
      "witnesses_sample", "vacuous"};
  std::vector<std::string> actual_keys;
  for (auto it = j.begin(); it != j.end(); ++it) actual_keys.push_back(it.key());
  std::sort(expected_keys.begin(), expected_keys.end());
  std::sort(actual_keys.begin(), actual_keys.end());
  CHECK(actual_keys == expected_keys);

  CliResult cex = run_cli("prop run --name C1 --trials 2000 --seed 42 --format json");
  CHECK(cex.exit_code == 1);
  auto jc = nlohmann::json::parse(cex.output);
  REQUIRE(jc["counterexamples"].size() > 0);
  auto& first = jc["counterexamples"][0];
  CHECK(first.contains("TICKET"));
  CHECK(first.contains("N"));
  CHECK(first.contains("D"));
  CHECK(first["TICKET"].is_array());
  CHECK(first["TICKET"].size() == 15);
}

TEST_CASE("prop exhaustive restricts instances and enumerates the rest") {
  CliResult r = run_cli(
      "prop exhaustive --name C4 --sample-size 30 --seed 3 --format json");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["mode"] == "exhaustive");
  CHECK_FALSE(j.contains("seed"));
  CHECK(j["tested"] == 30 * 8);
  CHECK(j["counterexamples"].size() > 0);

  CliResult holds = run_cli("prop exhaustive --name C8 --sample-size 20 --seed 3");
  CHECK(holds.exit_code == 0);
  CHECK(contains(holds.output, "Test? succeeded."));

  // C2 has no instance sampler; its full domain is beyond enumeration.
  CliResult huge = run_cli("prop exhaustive --name C2");
  CHECK(huge.exit_code == 2);
  CHECK(contains(huge.output, "error:"));
}

TEST_CASE("corpus verify reports per-line results and a summary") {
  std::string path = write_corpus("mixed.txt",
                                  "123456789012340\n"
                                  "123456789012341\n"
                                  "\n"
                                  "12x456789012340\n"
                                  "123\n");
  CliResult r = run_cli("corpus verify --scheme airline --file " + path);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "1: VALID"));
  CHECK(contains(r.output, "2: INVALID"));
  CHECK(contains(r.output, "4: ERROR(NonDigitCharacter)"));
  CHECK(contains(r.output, "5: ERROR(WrongLength)"));
  CHECK(contains(r.output, "summary: 1/4 valid"));

  std::string good = write_corpus("good.txt", "388007000\n614700000\n494700000\n");
  CliResult ok = run_cli("corpus verify --scheme routing --file " + good);
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "summary: 3/3 valid"));

  std::string empty = write_corpus("empty.txt", "");
  CliResult none = run_cli("corpus verify --scheme luhn --file " + empty);
  CHECK(none.exit_code == 0);
  CHECK(contains(none.output, "summary: 0/0 valid"));

  CHECK(run_cli("corpus verify --scheme luhn --file " +
                (g_tmp / "missing.txt").string())
            .exit_code == 2);

  CliResult stdin_run = run_cli("corpus verify --scheme isbn10 --file -",
                                "0306406152\n100000001X\n", true);
  CHECK(stdin_run.exit_code == 0);
  CHECK(contains(stdin_run.output, "summary: 2/2 valid"));
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];
  g_tmp = std::filesystem::temp_directory_path() /
          ("checksums_cli_" + std::to_string(getpid()));
  std::filesystem::create_directories(g_tmp);
  doctest::Context context;
  int res = context.run();
  std::filesystem::remove_all(g_tmp);
  return res;
}
