#include "checksums/properties.hpp"

#include <unordered_set>
#include <utility>

#include "checksums/mutate.hpp"
#include "checksums/postnet.hpp"

namespace checksums::prop {

namespace {

// Property-level validity predicates are total: a string of the wrong
// length is simply not a valid instance, never an error.
bool ticket_valid(const DigitString& ds) {
  return ds.size() == kAirlineLength && validate_airline(ds);
}

bool route_valid(const DigitString& ds) {
  return ds.size() == kRoutingLength && validate_routing(ds);
}

bool card_valid(const DigitString& ds) {
  return ds.size() == kLuhnLength && validate_luhn(ds);
}

// An ISBN instance is a (nine-digit body, check value) pair; mutations act
// on the ten positional values as one sequence.
std::array<std::uint8_t, 10> isbn_values_of(const Tuple& body) {
  const DigitString& ds = body.at(0).digits();
  if (ds.size() != 9) throw WrongLength("ISBN body", 9, ds.size());
  std::array<std::uint8_t, 10> v{};
  for (std::size_t i = 0; i < 9; ++i) v[i] = ds[i];
  v[9] = static_cast<std::uint8_t>(body.at(1).nat());
  return v;
}

bool isbn_seq_valid(const std::array<std::uint8_t, 10>& v) {
  return isbn_weighted_sum(v) % 11 == 0;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : b - a;
}

// Shared suite for the five-bit code: every message of one to three digits,
// plus `count` distinct random longer ones (four to twelve digits).
std::vector<Value> postnet_suite(std::uint64_t count, std::uint64_t seed) {
  std::vector<Value> out;
  for (std::size_t len = 1; len <= 3; ++len) {
    for (Value& v : enumerate(TypeDef::digit_list(len))) {
      out.push_back(std::move(v));
    }
  }
  std::unordered_set<std::string> seen;
  std::uint64_t added = 0;
  for (std::uint64_t i = 0; added < count; ++i) {
    Rng rng(seed, i);
    std::size_t len = 4 + static_cast<std::size_t>(rng.below(9));
    std::vector<Digit> digits(len);
    for (Digit& d : digits) d = static_cast<Digit>(rng.below(10));
    DigitString ds(std::move(digits));
    if (seen.insert(ds.str()).second) {
      out.emplace_back(std::move(ds));
      ++added;
    }
  }
  return out;
}

std::vector<Value> as_values(const std::vector<DigitString>& instances) {
  std::vector<Value> out;
  out.reserve(instances.size());
  for (const DigitString& ds : instances) out.emplace_back(ds);
  return out;
}

std::vector<Value> isbn_values(const std::vector<IsbnBody>& instances) {
  std::vector<Value> out;
  out.reserve(instances.size());
  for (const IsbnBody& body : instances) {
    out.emplace_back(Tuple{Value(body.digits()),
                           Value(static_cast<std::uint64_t>(body.check()))});
  }
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  // C1: a valid ticket with one digit changed can still validate.
  {
    CatalogEntry e;
    e.id = "C1";
    e.label = "airline-substitution";
    e.note =
        "The mod-7 check misses a substitution exactly when the old and new "
        "digits are congruent mod 7, i.e. the pair differs by 7 at a body "
        "position.";
    e.property.name = "C1";
    e.property.bindings = {
        {"ticket", TypeDef::digit_list(kAirlineLength)},
        {"n", TypeDef::nat_range(0, kAirlineLength - 1)},
        {"d", TypeDef::digit()},
    };
    e.property.hypothesis = [](const Env& env) {
      const DigitString& t = env.digits("ticket");
      std::uint64_t n = env.nat("n");
      return ticket_valid(t) && n < t.size() &&
             t[n] != static_cast<Digit>(env.nat("d"));
    };
    e.property.conclusion = [](const Env& env) {
      const DigitString& t = env.digits("ticket");
      DigitString mutated = change_nth_digit(
          t, env.nat("n"), static_cast<Digit>(env.nat("d")));
      return !ticket_valid(mutated);
    };
    e.expected = Expectation::finds_counterexamples;
    e.family = "substituted pair differs by 7, position below 14";
    e.family_check = [](const Env& env) {
      const DigitString& t = env.digits("ticket");
      std::uint64_t n = env.nat("n");
      return n < kAirlineLength - 1 && abs_diff(t[n], env.nat("d")) == 7;
    };
    e.instance_var = "ticket";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return as_values(valid_instance_sampler(SchemeId::airline, seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C2: the same conjecture over variable-length tickets. Random draws
  // essentially never produce a valid 15-digit ticket, so runs are vacuous:
  // they prove nothing, which is the lesson this entry teaches.
  {
    CatalogEntry e;
    e.id = "C2";
    e.label = "airline-substitution-vacuous";
    e.note =
        "Over variable-length digit lists (up to 20) the validity hypothesis "
        "is nearly never satisfied; the run reports vacuous instead of "
        "pretending to have checked something.";
    e.property.name = "C2";
    e.property.bindings = {
        {"ticket", TypeDef::digit_list_bounded(20)},
        {"n", TypeDef::nat_range(0, kAirlineLength - 1)},
        {"d", TypeDef::digit()},
    };
    const CatalogEntry& c1 = entries.back();
    e.property.hypothesis = c1.property.hypothesis;
    e.property.conclusion = c1.property.conclusion;
    e.expected = Expectation::holds;
    entries.push_back(std::move(e));
  }

  // C3: routing weights are all coprime to 10, so no single substitution
  // survives.
  {
    CatalogEntry e;
    e.id = "C3";
    e.label = "routing-substitution";
    e.note =
        "Each weight (7, 3, 9) is coprime to 10, so changing one digit "
        "shifts the weighted sum by a nonzero amount mod 10.";
    e.property.name = "C3";
    e.property.bindings = {
        {"route", TypeDef::digit_list(kRoutingLength)},
        {"n", TypeDef::nat_range(0, kRoutingLength - 1)},
        {"d", TypeDef::digit()},
    };
    e.property.hypothesis = [](const Env& env) {
      const DigitString& r = env.digits("route");
      std::uint64_t n = env.nat("n");
      return route_valid(r) && n < r.size() &&
             r[n] != static_cast<Digit>(env.nat("d"));
    };
    e.property.conclusion = [](const Env& env) {
      DigitString mutated = change_nth_digit(
          env.digits("route"), env.nat("n"),
          static_cast<Digit>(env.nat("d")));
      return !route_valid(mutated);
    };
    e.expected = Expectation::holds;
    e.instance_var = "route";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return as_values(valid_instance_sampler(SchemeId::routing, seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C4: adjacent transpositions slip through the routing check when the
  // two digits differ by 5.
  {
    CatalogEntry e;
    e.id = "C4";
    e.label = "routing-transposition";
    e.note =
        "Swapping adjacent digits changes the sum by (a-b) times a weight "
        "difference of 6 or 8; that is divisible by 10 exactly when a and b "
        "differ by 5.";
    e.property.name = "C4";
    e.property.bindings = {
        {"route", TypeDef::digit_list(kRoutingLength)},
        {"n", TypeDef::nat_range(0, kRoutingLength - 2)},
    };
    e.property.hypothesis = [](const Env& env) {
      const DigitString& r = env.digits("route");
      std::uint64_t n = env.nat("n");
      return route_valid(r) && n + 1 < r.size() && r[n] != r[n + 1];
    };
    e.property.conclusion = [](const Env& env) {
      DigitString mutated = transpose_nth(env.digits("route"), env.nat("n"));
      return !route_valid(mutated);
    };
    e.expected = Expectation::finds_counterexamples;
    e.family = "adjacent digits differing by 5";
    e.family_check = [](const Env& env) {
      const DigitString& r = env.digits("route");
      std::uint64_t n = env.nat("n");
      return abs_diff(r[n], r[n + 1]) == 5;
    };
    e.instance_var = "route";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return as_values(valid_instance_sampler(SchemeId::routing, seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C5: the doubled-digit map is a permutation of 0..9, so substitutions
  // never survive the card check.
  {
    CatalogEntry e;
    e.id = "C5";
    e.label = "luhn-substitution";
    e.note =
        "Plain and doubled positions both apply an injective digit map, so "
        "any single change moves the sum off 0 mod 10.";
    e.property.name = "C5";
    e.property.bindings = {
        {"card", TypeDef::digit_list(kLuhnLength)},
        {"n", TypeDef::nat_range(0, kLuhnLength - 1)},
        {"d", TypeDef::digit()},
    };
    e.property.hypothesis = [](const Env& env) {
      const DigitString& c = env.digits("card");
      std::uint64_t n = env.nat("n");
      return card_valid(c) && n < c.size() &&
             c[n] != static_cast<Digit>(env.nat("d"));
    };
    e.property.conclusion = [](const Env& env) {
      DigitString mutated = change_nth_digit(
          env.digits("card"), env.nat("n"),
          static_cast<Digit>(env.nat("d")));
      return !card_valid(mutated);
    };
    e.expected = Expectation::holds;
    e.instance_var = "card";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return as_values(valid_instance_sampler(SchemeId::luhn, seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C6: the one classical blind spot — transposing adjacent 0 and 9.
  {
    CatalogEntry e;
    e.id = "C6";
    e.label = "luhn-transposition";
    e.note =
        "Swapping adjacent digits cancels out exactly when the pair is "
        "{0, 9}: both leave the same doubled-minus-plain residue.";
    e.property.name = "C6";
    e.property.bindings = {
        {"card", TypeDef::digit_list(kLuhnLength)},
        {"n", TypeDef::nat_range(0, kLuhnLength - 2)},
    };
    e.property.hypothesis = [](const Env& env) {
      const DigitString& c = env.digits("card");
      std::uint64_t n = env.nat("n");
      return card_valid(c) && n + 1 < c.size() && c[n] != c[n + 1];
    };
    e.property.conclusion = [](const Env& env) {
      DigitString mutated = transpose_nth(env.digits("card"), env.nat("n"));
      return !card_valid(mutated);
    };
    e.expected = Expectation::finds_counterexamples;
    e.family = "adjacent 0 and 9 in either order";
    e.family_check = [](const Env& env) {
      const DigitString& c = env.digits("card");
      std::uint64_t n = env.nat("n");
      return (c[n] == 0 && c[n + 1] == 9) || (c[n] == 9 && c[n + 1] == 0);
    };
    e.instance_var = "card";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return as_values(valid_instance_sampler(SchemeId::luhn, seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C7: mod 11 is prime and every weight difference stays below 11, so the
  // ISBN check catches every single substitution — check position included.
  {
    CatalogEntry e;
    e.id = "C7";
    e.label = "isbn-substitution";
    e.note =
        "With a prime modulus of 11 and weights 10..1, a change of delta at "
        "weight w shifts the sum by w*delta, never 0 mod 11.";
    e.property.name = "C7";
    e.property.bindings = {
        {"body", TypeDef::product({TypeDef::digit_list(9),
                                   TypeDef::nat_range(0, 10)})},
        {"n", TypeDef::nat_range(0, 9)},
        {"d", TypeDef::digit()},
    };
    e.property.hypothesis = [](const Env& env) {
      auto v = isbn_values_of(env.tuple("body"));
      std::uint64_t n = env.nat("n");
      return isbn_seq_valid(v) && v[n] != env.nat("d");
    };
    e.property.conclusion = [](const Env& env) {
      auto v = isbn_values_of(env.tuple("body"));
      v[env.nat("n")] = static_cast<std::uint8_t>(env.nat("d"));
      return !isbn_seq_valid(v);
    };
    e.expected = Expectation::holds;
    e.instance_var = "body";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return isbn_values(valid_isbn_sampler(seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C8: adjacent ISBN weights differ by exactly 1, so a transposition
  // shifts the sum by the digit difference itself — at most 10, never a
  // nonzero multiple of 11.
  {
    CatalogEntry e;
    e.id = "C8";
    e.label = "isbn-transposition";
    e.note =
        "Swapping adjacent values changes the sum by their difference, "
        "which cannot reach 11.";
    e.property.name = "C8";
    e.property.bindings = {
        {"body", TypeDef::product({TypeDef::digit_list(9),
                                   TypeDef::nat_range(0, 10)})},
        {"n", TypeDef::nat_range(0, 8)},
    };
    e.property.hypothesis = [](const Env& env) {
      auto v = isbn_values_of(env.tuple("body"));
      std::uint64_t n = env.nat("n");
      return isbn_seq_valid(v) && v[n] != v[n + 1];
    };
    e.property.conclusion = [](const Env& env) {
      auto v = isbn_values_of(env.tuple("body"));
      std::uint64_t n = env.nat("n");
      std::swap(v[n], v[n + 1]);
      return !isbn_seq_valid(v);
    };
    e.expected = Expectation::holds;
    e.instance_var = "body";
    e.sample_instances = [](std::uint64_t count, std::uint64_t seed) {
      return isbn_values(valid_isbn_sampler(seed, count));
    };
    entries.push_back(std::move(e));
  }

  // C9: decoding inverts encoding for every non-empty message.
  {
    CatalogEntry e;
    e.id = "C9";
    e.label = "postnet-roundtrip";
    e.note = "Strict decode returns exactly the digits that were encoded.";
    e.property.name = "C9";
    e.property.bindings = {
        {"ds", TypeDef::digit_list_bounded(12)},
    };
    e.property.hypothesis = [](const Env& env) {
      return !env.digits("ds").empty();
    };
    e.property.conclusion = [](const Env& env) {
      const DigitString& ds = env.digits("ds");
      return decode_message(encode_message(ds)) == ds;
    };
    e.expected = Expectation::holds;
    e.instance_var = "ds";
    e.sample_instances = postnet_suite;
    entries.push_back(std::move(e));
  }

  // C10: any single flipped bit is located and repaired.
  {
    CatalogEntry e;
    e.id = "C10";
    e.label = "postnet-correction";
    e.note =
        "One flip leaves exactly one block off weight 3; the checksum "
        "recovers the digit it held.";
    e.property.name = "C10";
    e.property.bindings = {
        {"ds", TypeDef::digit_list_bounded(12)},
        // Bit index for the longest message: 13 blocks of 5 bits.
        {"i", TypeDef::nat_range(0, 5 * 13 - 1)},
    };
    e.property.hypothesis = [](const Env& env) {
      const DigitString& ds = env.digits("ds");
      return !ds.empty() && env.nat("i") < 5 * (ds.size() + 1);
    };
    e.property.conclusion = [](const Env& env) {
      const DigitString& ds = env.digits("ds");
      BitString corrupted = flip_bit(encode_message(ds), env.nat("i"));
      CorrectionReport report = detect_and_correct(corrupted);
      return report.recovered.has_value() && *report.recovered == ds;
    };
    e.expected = Expectation::holds;
    e.instance_var = "ds";
    e.sample_instances = postnet_suite;
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view id_or_label) {
  for (const CatalogEntry& e : catalog()) {
    if (e.id == id_or_label || e.label == id_or_label) return &e;
  }
  return nullptr;
}

std::vector<DigitString> valid_instance_sampler(SchemeId id,
                                                std::uint64_t seed,
                                                std::uint64_t count) {
  if (id == SchemeId::isbn10) {
    throw Error("ISBN-10 instances carry a check value 0..10; use "
                "valid_isbn_sampler");
  }
  std::size_t body_length = scheme_spec(id).total_length - 1;
  std::vector<DigitString> out;
  std::unordered_set<std::string> seen;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    Rng rng(seed, i);
    std::vector<Digit> body(body_length);
    for (Digit& d : body) d = static_cast<Digit>(rng.below(10));
    DigitString instance =
        complete_check_digit(id, DigitString(std::move(body)));
    if (seen.insert(instance.str()).second) out.push_back(std::move(instance));
  }
  return out;
}

std::vector<IsbnBody> valid_isbn_sampler(std::uint64_t seed,
                                         std::uint64_t count) {
  std::vector<IsbnBody> out;
  std::unordered_set<std::string> seen;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    Rng rng(seed, i);
    std::vector<Digit> body(9);
    for (Digit& d : body) d = static_cast<Digit>(rng.below(10));
    IsbnBody instance = complete_isbn10(DigitString(std::move(body)));
    if (seen.insert(instance.str()).second) out.push_back(std::move(instance));
  }
  return out;
}

Property restrict_to_instances(const CatalogEntry& entry,
                               std::vector<Value> instances) {
  Property p = entry.property;
  if (entry.instance_var.empty()) return p;
  for (auto& [name, type] : p.bindings) {
    if (name == entry.instance_var) {
      type = TypeDef::choice(std::move(instances));
      return p;
    }
  }
  throw Error("property '" + p.name + "' has no binding named '" +
              entry.instance_var + "'");
}

Property exhaustive_form(const CatalogEntry& entry, std::uint64_t sample_count,
                         std::uint64_t seed) {
  if (!entry.sample_instances) return entry.property;
  return restrict_to_instances(entry,
                               entry.sample_instances(sample_count, seed));
}

}  // namespace checksums::prop
