#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "checksums/digits.hpp"
#include "checksums/errors.hpp"
#include "checksums/mutate.hpp"
#include "checksums/postnet.hpp"
#include "checksums/properties.hpp"
#include "checksums/proptest.hpp"
#include "checksums/schemes.hpp"

namespace {

using namespace checksums;

std::string trimmed(const std::string& line) {
  const char* ws = " \t\r\n";
  std::size_t first = line.find_first_not_of(ws);
  if (first == std::string::npos) return {};
  std::size_t last = line.find_last_not_of(ws);
  return line.substr(first, last - first + 1);
}

// "-" means: read the payload from standard input.
std::string resolve_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return trimmed(ss.str());
}

std::string error_kind(const Error& e) {
  if (dynamic_cast<const NonDigitCharacter*>(&e)) return "NonDigitCharacter";
  if (dynamic_cast<const NonBitCharacter*>(&e)) return "NonBitCharacter";
  if (dynamic_cast<const EmptyInput*>(&e)) return "EmptyInput";
  if (dynamic_cast<const WrongLength*>(&e)) return "WrongLength";
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
  if (dynamic_cast<const BadLength*>(&e)) return "BadLength";
  if (dynamic_cast<const InvalidCodeword*>(&e)) return "InvalidCodeword";
  if (dynamic_cast<const ChecksumMismatch*>(&e)) return "ChecksumMismatch";
  if (dynamic_cast<const DomainTooLarge*>(&e)) return "DomainTooLarge";
  if (dynamic_cast<const PredicateFailure*>(&e)) return "PredicateFailure";
  return "Error";
}

bool validate_text(SchemeId id, const std::string& text) {
  if (id == SchemeId::isbn10) return validate_isbn10(IsbnBody::parse(text));
  DigitString ds = DigitString::parse(text);
  switch (id) {
    case SchemeId::airline:
      return validate_airline(ds);
    case SchemeId::routing:
      return validate_routing(ds);
    case SchemeId::luhn:
      return validate_luhn(ds);
    default:
      throw Error("unhandled scheme");
  }
}

std::string codeword_str(const Codeword& cw) {
  std::string out;
  for (Bit b : cw) out += static_cast<char>('0' + b);
  return out;
}

int run_verify(const std::string& scheme, const std::string& digits_arg) {
  bool ok = validate_text(scheme_from_name(scheme), resolve_input(digits_arg));
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? 0 : 1;
}

int run_complete(const std::string& scheme, const std::string& body_arg) {
  SchemeId id = scheme_from_name(scheme);
  DigitString body = DigitString::parse(resolve_input(body_arg));
  if (id == SchemeId::isbn10) {
    std::cout << complete_isbn10(body).str() << "\n";
  } else {
    std::cout << complete_check_digit(id, body).str() << "\n";
  }
  return 0;
}

int run_mutate(const std::string& op, std::uint64_t pos, bool has_digit,
               int digit, const std::string& digits_arg,
               const std::string& bits_arg) {
  if (op == "flipbit") {
    if (bits_arg.empty()) throw Error("--op flipbit needs --bits");
    BitString bits = BitString::parse(resolve_input(bits_arg));
    std::cout << flip_bit(bits, pos).str() << "\n";
    return 0;
  }
  if (digits_arg.empty()) throw Error("--op " + op + " needs --digits");
  DigitString ds = DigitString::parse(resolve_input(digits_arg));
  if (op == "substitute") {
    if (!has_digit) throw Error("--op substitute needs --digit");
    std::cout << change_nth_digit(ds, pos, static_cast<Digit>(digit)).str()
              << "\n";
  } else {
    std::cout << transpose_nth(ds, pos).str() << "\n";
  }
  return 0;
}

int run_postnet_encode(const std::string& digits_arg) {
  DigitString ds = DigitString::parse(resolve_input(digits_arg));
  std::cout << encode_message(ds).str() << "\n";
  return 0;
}

int run_postnet_decode(const std::string& bits_arg) {
  BitString bits = BitString::parse(resolve_input(bits_arg));
  try {
    std::cout << decode_message(bits).str() << "\n";
    return 0;
  } catch (const InvalidCodeword& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ChecksumMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_postnet_correct(const std::string& bits_arg) {
  BitString bits = BitString::parse(resolve_input(bits_arg));
  CorrectionReport report = detect_and_correct(bits);
  switch (report.status) {
    case CorrectionReport::Status::clean:
      std::cout << "clean\n";
      std::cout << "digits: " << report.recovered->str() << "\n";
      return 0;
    case CorrectionReport::Status::corrected:
      std::cout << "corrected block " << report.block << ": "
                << codeword_str(report.received) << " -> "
                << static_cast<int>(report.corrected_to) << "\n";
      std::cout << "digits: " << report.recovered->str() << "\n";
      return 0;
    case CorrectionReport::Status::uncorrectable:
      std::cout << "uncorrectable: " << report.reason << "\n";
      return 1;
  }
  throw Error("unhandled correction status");
}

int run_prop_list() {
  for (const prop::CatalogEntry& e : prop::catalog()) {
    std::cout << std::left << std::setw(4) << e.id << std::setw(30) << e.label
              << (e.expected == prop::Expectation::holds
                      ? "[holds]"
                      : "[finds counterexamples]")
              << "\n";
  }
  return 0;
}

prop::SummaryStyle style_of(const std::string& format) {
  return format == "json" ? prop::SummaryStyle::json : prop::SummaryStyle::cgen;
}

int print_summary(const prop::TestSummary& s, const std::string& format) {
  std::string out = prop::format_summary(s, style_of(format));
  std::cout << out;
  if (out.empty() || out.back() != '\n') std::cout << "\n";
  return s.counterexamples.empty() ? 0 : 1;
}

const prop::CatalogEntry& entry_or_throw(const std::string& name) {
  const prop::CatalogEntry* entry = prop::find_entry(name);
  if (!entry) throw Error("unknown property '" + name + "'");
  return *entry;
}

int run_prop_run(const std::string& name, std::uint64_t trials,
                 std::uint64_t seed, const std::string& format) {
  prop::RunOptions options;
  options.trials = trials;
  options.seed = seed;
  prop::TestSummary s = prop::run_property(entry_or_throw(name).property,
                                           options);
  return print_summary(s, format);
}

int run_prop_exhaustive(const std::string& name, std::uint64_t sample_size,
                        std::uint64_t seed, const std::string& format) {
  prop::Property p =
      prop::exhaustive_form(entry_or_throw(name), sample_size, seed);
  return print_summary(prop::run_exhaustive(p), format);
}

int run_corpus_verify(const std::string& scheme, const std::string& path) {
  SchemeId id = scheme_from_name(scheme);
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error("cannot open file '" + path + "'");
    in = &file;
  }
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t checked = 0;
  std::uint64_t valid = 0;
  bool all_valid = true;
  while (std::getline(*in, line)) {
    ++lineno;
    std::string text = trimmed(line);
    if (text.empty()) continue;
    ++checked;
    try {
      bool ok = validate_text(id, text);
      std::cout << lineno << ": " << (ok ? "VALID" : "INVALID") << "\n";
      if (ok) {
        ++valid;
      } else {
        all_valid = false;
      }
    } catch (const Error& e) {
      std::cout << lineno << ": ERROR(" << error_kind(e) << ") " << e.what()
                << "\n";
      all_valid = false;
    }
  }
  std::cout << "summary: " << valid << "/" << checked << " valid\n";
  return all_valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Check-digit schemes, error mutations, a five-bit error-correcting "
      "digit code, and a property-testing engine"};
  app.require_subcommand(1);
  int rc = 0;

  const std::vector<std::string> scheme_names{"airline", "routing", "luhn",
                                              "isbn10"};

  auto* verify = app.add_subcommand("verify", "Validate one identifier");
  std::string v_scheme, v_digits;
  verify->add_option("--scheme", v_scheme, "airline|routing|luhn|isbn10")
      ->required()
      ->check(CLI::IsMember(scheme_names));
  verify->add_option("--digits", v_digits, "digit string ('-' reads stdin)")
      ->required();
  verify->callback([&] { rc = run_verify(v_scheme, v_digits); });

  auto* complete =
      app.add_subcommand("complete", "Append the check digit to a body");
  std::string c_scheme, c_digits;
  complete->add_option("--scheme", c_scheme, "airline|routing|luhn|isbn10")
      ->required()
      ->check(CLI::IsMember(scheme_names));
  complete->add_option("--digits", c_digits, "body digits ('-' reads stdin)")
      ->required();
  complete->callback([&] { rc = run_complete(c_scheme, c_digits); });

  auto* mutate = app.add_subcommand("mutate", "Inject one error into a value");
  std::string m_op, m_digits, m_bits;
  std::uint64_t m_pos = 0;
  int m_digit = 0;
  mutate->add_option("--op", m_op, "substitute|transpose|flipbit")
      ->required()
      ->check(CLI::IsMember({"substitute", "transpose", "flipbit"}));
  mutate->add_option("--pos", m_pos, "zero-based position")->required();
  auto* m_digit_opt = mutate->add_option("--digit", m_digit,
                                         "replacement digit (substitute)")
                          ->check(CLI::Range(0, 9));
  mutate->add_option("--digits", m_digits, "digit string ('-' reads stdin)");
  mutate->add_option("--bits", m_bits, "bit string ('-' reads stdin)");
  mutate->callback([&] {
    rc = run_mutate(m_op, m_pos, m_digit_opt->count() > 0, m_digit, m_digits,
                    m_bits);
  });

  auto* postnet =
      app.add_subcommand("postnet", "Five-bit bar-code encode/decode/correct");
  postnet->require_subcommand(1);
  auto* pn_encode = postnet->add_subcommand(
      "encode", "Encode digits (check digit appended) into bits");
  std::string pn_encode_digits;
  pn_encode
      ->add_option("--digits", pn_encode_digits,
                   "digit string ('-' reads stdin)")
      ->required();
  pn_encode->callback([&] { rc = run_postnet_encode(pn_encode_digits); });
  auto* pn_decode =
      postnet->add_subcommand("decode", "Strictly decode bits into digits");
  std::string pn_decode_bits;
  pn_decode
      ->add_option("--bits", pn_decode_bits, "bit string ('-' reads stdin)")
      ->required();
  pn_decode->callback([&] { rc = run_postnet_decode(pn_decode_bits); });
  auto* pn_correct = postnet->add_subcommand(
      "correct", "Decode bits, repairing up to one flipped bit");
  std::string pn_correct_bits;
  pn_correct
      ->add_option("--bits", pn_correct_bits, "bit string ('-' reads stdin)")
      ->required();
  pn_correct->callback([&] { rc = run_postnet_correct(pn_correct_bits); });

  auto* prop_cmd =
      app.add_subcommand("prop", "Run conjectures from the property catalog");
  prop_cmd->require_subcommand(1);
  auto* prop_list =
      prop_cmd->add_subcommand("list", "List the catalog entries");
  prop_list->callback([&] { rc = run_prop_list(); });

  auto* prop_run = prop_cmd->add_subcommand(
      "run", "Randomized run: generate, filter by hypothesis, check");
  std::string pr_name, pr_format = "cgen";
  std::uint64_t pr_trials = 1000;
  std::uint64_t pr_seed = 0;
  prop_run->add_option("--name", pr_name, "property id or label")->required();
  prop_run->add_option("--trials", pr_trials, "number of trials");
  prop_run->add_option("--seed", pr_seed, "deterministic seed");
  prop_run->add_option("--format", pr_format, "cgen|json")
      ->check(CLI::IsMember({"cgen", "json"}));
  prop_run->callback(
      [&] { rc = run_prop_run(pr_name, pr_trials, pr_seed, pr_format); });

  auto* prop_ex = prop_cmd->add_subcommand(
      "exhaustive",
      "Visit every point of the domain, with scheme instances restricted to "
      "a sampled list");
  std::string pe_name, pe_format = "cgen";
  std::uint64_t pe_samples = 1000;
  std::uint64_t pe_seed = 0;
  prop_ex->add_option("--name", pe_name, "property id or label")->required();
  prop_ex->add_option("--sample-size", pe_samples,
                      "how many valid instances to sample");
  prop_ex->add_option("--seed", pe_seed, "instance-sampling seed");
  prop_ex->add_option("--format", pe_format, "cgen|json")
      ->check(CLI::IsMember({"cgen", "json"}));
  prop_ex->callback([&] {
    rc = run_prop_exhaustive(pe_name, pe_samples, pe_seed, pe_format);
  });

  auto* corpus =
      app.add_subcommand("corpus", "Operate on a line-oriented file of values");
  corpus->require_subcommand(1);
  auto* corpus_verify =
      corpus->add_subcommand("verify", "Validate every line of a file");
  std::string cv_scheme, cv_file;
  corpus_verify
      ->add_option("--scheme", cv_scheme, "airline|routing|luhn|isbn10")
      ->required()
      ->check(CLI::IsMember(scheme_names));
  corpus_verify->add_option("--file", cv_file, "path, or '-' for stdin")
      ->required();
  corpus_verify->callback([&] { rc = run_corpus_verify(cv_scheme, cv_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
