#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "checksums/digits.hpp"
#include "checksums/errors.hpp"
#include "checksums/postnet.hpp"

// Randomized property testing over small typed domains.
//
// Properties follow a generate-then-filter discipline: every trial draws a
// full variable environment, the hypothesis decides whether the trial
// counts as satisfied, and only satisfied trials are judged against the
// conclusion (failing ones are counterexamples, passing ones witnesses).
// A run whose hypothesis never held proves nothing; such summaries are
// flagged vacuous.
//
// Runs are deterministic: each trial's draws come from an RNG derived only
// from (seed, trial index), so equal (property, trials, seed) produce
// byte-identical summaries on any platform and for any worker count.
namespace checksums::prop {

// Deterministic random source. The engine is std::mt19937_64 (whose output
// sequence the standard pins down exactly); bounded draws use an unbiased
// rejection step rather than std::uniform_int_distribution, whose mapping
// is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  bool coin();

 private:
  std::mt19937_64 engine_;
};

class Value;
using Tuple = std::vector<Value>;

// One generated or enumerated test value.
class Value {
 public:
  Value(std::uint64_t n) : v_(n) {}
  Value(int n) : v_(static_cast<std::uint64_t>(n)) {}
  Value(DigitString ds) : v_(std::move(ds)) {}
  Value(BitString bs) : v_(std::move(bs)) {}
  Value(Tuple fields) : v_(std::move(fields)) {}

  bool is_nat() const { return std::holds_alternative<std::uint64_t>(v_); }
  bool is_digits() const { return std::holds_alternative<DigitString>(v_); }
  bool is_bits() const { return std::holds_alternative<BitString>(v_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(v_); }

  std::uint64_t nat() const;
  const DigitString& digits() const;
  const BitString& bits() const;
  const Tuple& tuple() const;

  // List-style text form: naturals plain, sequences quoted, e.g.
  // 7 or '(4 2 0).
  std::string render() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<std::uint64_t, DigitString, BitString, Tuple> v_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// A finite, enumerable value domain.
class TypeDef {
 public:
  // Naturals lo..hi inclusive (lo <= hi).
  static TypeDef nat_range(std::uint64_t lo, std::uint64_t hi);
  // A single digit 0..9.
  static TypeDef digit();
  // Exactly `length` digits.
  static TypeDef digit_list(std::size_t length);
  // Any number of digits from 0 to max_length. Random draws use a
  // short-biased length (each further element with probability 1/2), the
  // way random list generators typically grow lists; enumeration is
  // shortest-first.
  static TypeDef digit_list_bounded(std::size_t max_length);
  // Exactly `length` bits.
  static TypeDef bit_list(std::size_t length);
  // A tuple drawn field by field.
  static TypeDef product(std::vector<TypeDef> fields);
  // An explicit finite domain; enumeration order is list order. Callers
  // should supply distinct values.
  static TypeDef choice(std::vector<Value> values);

  // Number of distinct values, saturating at 2^64 - 1.
  std::uint64_t domain_size() const;

  // The index-th value in enumeration order (ascending for scalars,
  // shortest-first lexicographic for bounded lists, first-field-slowest
  // for products). index must be below domain_size().
  Value value_at(std::uint64_t index) const;

  // Uniform per-component draw (see digit_list_bounded for lengths).
  Value generate(Rng& rng) const;

 private:
  struct NatRangeT {
    std::uint64_t lo, hi;
  };
  struct DigitT {};
  struct DigitListT {
    std::size_t length;
  };
  struct DigitListBoundedT {
    std::size_t max_length;
  };
  struct BitListT {
    std::size_t length;
  };
  struct ProductT {
    std::vector<TypeDef> fields;
  };
  struct ChoiceT {
    std::vector<Value> values;
  };
  using Def = std::variant<NatRangeT, DigitT, DigitListT, DigitListBoundedT,
                           BitListT, ProductT, ChoiceT>;

  explicit TypeDef(Def def) : def_(std::move(def)) {}

  Def def_;
};

// Every value of t in enumeration order. Throws DomainTooLarge above cap.
std::vector<Value> enumerate(const TypeDef& t,
                             std::uint64_t cap = kDefaultEnumerationCap);

// The ordered variable bindings produced for one trial.
class Env {
 public:
  void bind(std::string name, Value v);

  const Value& at(std::string_view name) const;  // throws Error if unbound
  std::uint64_t nat(std::string_view name) const;
  const DigitString& digits(std::string_view name) const;
  const BitString& bits(std::string_view name) const;
  const Tuple& tuple(std::string_view name) const;

  const std::vector<std::pair<std::string, Value>>& vars() const {
    return vars_;
  }

  // Text form in the test log style, most recent binding first:
  // ((D 7) (N 11) (TICKET '(4 2 0 0 0 0 0 0 0 0 0 0 0 0 0)))
  std::string render() const;

  friend bool operator==(const Env&, const Env&) = default;

 private:
  std::vector<std::pair<std::string, Value>> vars_;
};

using Predicate = std::function<bool(const Env&)>;

// A conjecture: for all bindings, hypothesis implies conclusion.
struct Property {
  std::string name;
  std::vector<std::pair<std::string, TypeDef>> bindings;
  Predicate hypothesis;
  Predicate conclusion;
};

enum class RunMode { random, exhaustive };

inline constexpr std::size_t kWitnessSampleCap = 3;

struct TestSummary {
  RunMode mode = RunMode::random;
  std::uint64_t seed = 0;    // random mode only
  std::uint64_t trials = 0;  // random mode only

  std::uint64_t tested = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t satisfied_unique = 0;
  std::vector<Env> counterexamples;  // every failing environment, in order
  std::uint64_t witness_count = 0;
  std::vector<Env> witness_sample;  // first few witnesses, capped
  bool vacuous = true;              // nothing satisfied the hypothesis
};

struct RunOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  // Trials may be evaluated concurrently; the summary is identical for
  // every worker count.
  unsigned workers = 1;
};

// Generate-then-filter run of `trials` independent trials. Throws
// PredicateFailure if the hypothesis or conclusion itself throws.
TestSummary run_property(const Property& p, const RunOptions& options = {});

// Visits every point of the bindings' product domain exactly once, in
// enumeration order, and returns the complete counterexample list. Throws
// DomainTooLarge when the domain exceeds cap.
TestSummary run_exhaustive(const Property& p,
                           std::uint64_t cap = kDefaultEnumerationCap);

enum class SummaryStyle { cgen, json };

std::string format_summary(const TestSummary& s, SummaryStyle style);

// check-expect style unit assertion with rendered operands.
struct UnitResult {
  bool passed;
  std::string actual;
  std::string expected;
};

namespace detail {
template <class T>
std::string render_any(const T& v) {
  std::ostringstream os;
  if constexpr (std::is_same_v<T, bool>) {
    os << (v ? "true" : "false");
  } else if constexpr (std::is_integral_v<T>) {
    os << static_cast<long long>(v);
  } else {
    os << v;
  }
  return os.str();
}
}  // namespace detail

template <class A, class E>
UnitResult check_expect(const A& actual, const E& expected) {
  return UnitResult{actual == expected, detail::render_any(actual),
                    detail::render_any(expected)};
}

}  // namespace checksums::prop
