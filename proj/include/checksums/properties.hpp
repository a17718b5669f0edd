#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "checksums/proptest.hpp"
#include "checksums/schemes.hpp"

namespace checksums::prop {

enum class Expectation { holds, finds_counterexamples };

// One named conjecture about a checksum scheme (or the five-bit code),
// together with what running it is expected to show.
struct CatalogEntry {
  std::string id;     // stable identifier, e.g. "C1"
  std::string label;  // e.g. "airline-substitution"
  std::string note;   // what the outcome means

  Property property;  // random-mode form
  Expectation expected;

  // For finds_counterexamples entries: which family of escapes exists and a
  // predicate satisfied by exactly the environments in that family.
  std::string family;
  Predicate family_check;

  // Name of the scheme-instance binding, and a sampler producing `count`
  // distinct valid instances for exhaustive runs. sample_instances is null
  // when the entry has no instance-restricted exhaustive form.
  std::string instance_var;
  std::function<std::vector<Value>(std::uint64_t count, std::uint64_t seed)>
      sample_instances;
};

const std::vector<CatalogEntry>& catalog();

// Looks an entry up by id or label; nullptr when absent.
const CatalogEntry* find_entry(std::string_view id_or_label);

// Scheme-valid instances built by completing random bodies; the result
// holds exactly `count` distinct values. Covers airline, routing and luhn;
// ISBN instances carry a check value of 10 sometimes and come from
// valid_isbn_sampler instead.
std::vector<DigitString> valid_instance_sampler(SchemeId id,
                                                std::uint64_t seed,
                                                std::uint64_t count);
std::vector<IsbnBody> valid_isbn_sampler(std::uint64_t seed,
                                         std::uint64_t count);

// The entry's property with its instance variable restricted to the given
// finite list; positions and payloads keep their full domains.
Property restrict_to_instances(const CatalogEntry& entry,
                               std::vector<Value> instances);

// restrict_to_instances over entry.sample_instances(sample_count, seed);
// entries without a sampler come back unchanged (their domains are already
// finite, if perhaps too large to enumerate).
Property exhaustive_form(const CatalogEntry& entry,
                         std::uint64_t sample_count, std::uint64_t seed);

}  // namespace checksums::prop
