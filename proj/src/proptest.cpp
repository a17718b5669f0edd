#include "checksums/proptest.hpp"

#include <algorithm>
#include <cctype>
#include <thread>
#include <unordered_set>

#include "json.hpp"

namespace checksums::prop {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) + b);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

std::uint64_t pow10_sat(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r = sat_mul(r, 10);
  return r;
}

std::uint64_t pow2_sat(std::size_t n) {
  return n >= 64 ? UINT64_MAX : (std::uint64_t{1} << n);
}

DigitString digits_from_index(std::uint64_t index, std::size_t length) {
  std::vector<Digit> out(length, 0);
  for (std::size_t j = length; j-- > 0;) {
    out[j] = static_cast<Digit>(index % 10);
    index /= 10;
  }
  return DigitString(std::move(out));
}

BitString bits_from_index(std::uint64_t index, std::size_t length) {
  std::vector<Bit> out(length, 0);
  for (std::size_t j = length; j-- > 0;) {
    out[j] = static_cast<Bit>(index & 1);
    index >>= 1;
  }
  return BitString(std::move(out));
}

std::string render_plain(const Value& v) {
  if (v.is_nat()) return std::to_string(v.nat());
  std::string out = "(";
  bool first = true;
  auto add = [&](const std::string& piece) {
    if (!first) out.push_back(' ');
    out += piece;
    first = false;
  };
  if (v.is_digits()) {
    for (Digit d : v.digits()) add(std::string(1, static_cast<char>('0' + d)));
  } else if (v.is_bits()) {
    for (Bit b : v.bits()) add(std::string(1, static_cast<char>('0' + b)));
  } else {
    for (const Value& f : v.tuple()) add(render_plain(f));
  }
  out.push_back(')');
  return out;
}

std::string upper(std::string_view name) {
  std::string out(name);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

nlohmann::ordered_json value_to_json(const Value& v) {
  if (v.is_nat()) return v.nat();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (v.is_digits()) {
    for (Digit d : v.digits()) arr.push_back(static_cast<int>(d));
  } else if (v.is_bits()) {
    for (Bit b : v.bits()) arr.push_back(static_cast<int>(b));
  } else {
    for (const Value& f : v.tuple()) arr.push_back(value_to_json(f));
  }
  return arr;
}

nlohmann::ordered_json env_to_json(const Env& env) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [name, value] : env.vars()) {
    obj[upper(name)] = value_to_json(value);
  }
  return obj;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : Rng(seed, 0) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix64(seed, stream)) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("cannot draw from an empty range");
  // Reject the low sliver that would bias the modulo.
  std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r = next();
  while (r < threshold) r = next();
  return r % bound;
}

bool Rng::coin() { return (next() & 1) != 0; }

std::uint64_t Value::nat() const {
  if (!is_nat()) throw Error("value is not a natural number");
  return std::get<std::uint64_t>(v_);
}

const DigitString& Value::digits() const {
  if (!is_digits()) throw Error("value is not a digit string");
  return std::get<DigitString>(v_);
}

const BitString& Value::bits() const {
  if (!is_bits()) throw Error("value is not a bit string");
  return std::get<BitString>(v_);
}

const Tuple& Value::tuple() const {
  if (!is_tuple()) throw Error("value is not a tuple");
  return std::get<Tuple>(v_);
}

std::string Value::render() const {
  if (is_nat()) return std::to_string(nat());
  return "'" + render_plain(*this);
}

TypeDef TypeDef::nat_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error("nat_range needs lo <= hi");
  return TypeDef(Def{NatRangeT{lo, hi}});
}

TypeDef TypeDef::digit() { return TypeDef(Def{DigitT{}}); }

TypeDef TypeDef::digit_list(std::size_t length) {
  return TypeDef(Def{DigitListT{length}});
}

TypeDef TypeDef::digit_list_bounded(std::size_t max_length) {
  return TypeDef(Def{DigitListBoundedT{max_length}});
}

TypeDef TypeDef::bit_list(std::size_t length) {
  return TypeDef(Def{BitListT{length}});
}

TypeDef TypeDef::product(std::vector<TypeDef> fields) {
  return TypeDef(Def{ProductT{std::move(fields)}});
}

TypeDef TypeDef::choice(std::vector<Value> values) {
  return TypeDef(Def{ChoiceT{std::move(values)}});
}

std::uint64_t TypeDef::domain_size() const {
  return std::visit(
      [](const auto& def) -> std::uint64_t {
        using T = std::decay_t<decltype(def)>;
        if constexpr (std::is_same_v<T, NatRangeT>) {
          if (def.lo == 0 && def.hi == UINT64_MAX) return UINT64_MAX;
          return def.hi - def.lo + 1;
        } else if constexpr (std::is_same_v<T, DigitT>) {
          return 10;
        } else if constexpr (std::is_same_v<T, DigitListT>) {
          return pow10_sat(def.length);
        } else if constexpr (std::is_same_v<T, DigitListBoundedT>) {
          std::uint64_t total = 0;
          for (std::size_t k = 0; k <= def.max_length; ++k) {
            total = sat_add(total, pow10_sat(k));
          }
          return total;
        } else if constexpr (std::is_same_v<T, BitListT>) {
          return pow2_sat(def.length);
        } else if constexpr (std::is_same_v<T, ProductT>) {
          std::uint64_t total = 1;
          for (const TypeDef& f : def.fields) {
            total = sat_mul(total, f.domain_size());
          }
          return total;
        } else {
          return static_cast<const ChoiceT&>(def).values.size();
        }
      },
      def_);
}

Value TypeDef::value_at(std::uint64_t index) const {
  std::uint64_t size = domain_size();
  if (index >= size) throw IndexOutOfRange(index, size);
  return std::visit(
      [&](const auto& def) -> Value {
        using T = std::decay_t<decltype(def)>;
        if constexpr (std::is_same_v<T, NatRangeT>) {
          return Value(def.lo + index);
        } else if constexpr (std::is_same_v<T, DigitT>) {
          return Value(index);
        } else if constexpr (std::is_same_v<T, DigitListT>) {
          return Value(digits_from_index(index, def.length));
        } else if constexpr (std::is_same_v<T, DigitListBoundedT>) {
          // Shortest lengths first, numerically ascending within a length.
          std::size_t len = 0;
          std::uint64_t rest = index;
          while (rest >= pow10_sat(len)) {
            rest -= pow10_sat(len);
            ++len;
          }
          return Value(digits_from_index(rest, len));
        } else if constexpr (std::is_same_v<T, BitListT>) {
          return Value(bits_from_index(index, def.length));
        } else if constexpr (std::is_same_v<T, ProductT>) {
          // First field varies slowest.
          std::vector<std::uint64_t> sizes;
          sizes.reserve(def.fields.size());
          for (const TypeDef& f : def.fields) sizes.push_back(f.domain_size());
          Tuple fields(def.fields.size(), Value(std::uint64_t{0}));
          std::uint64_t rest = index;
          for (std::size_t j = def.fields.size(); j-- > 0;) {
            fields[j] = def.fields[j].value_at(rest % sizes[j]);
            rest /= sizes[j];
          }
          return Value(std::move(fields));
        } else {
          return static_cast<const ChoiceT&>(def).values[index];
        }
      },
      def_);
}

Value TypeDef::generate(Rng& rng) const {
  return std::visit(
      [&](const auto& def) -> Value {
        using T = std::decay_t<decltype(def)>;
        if constexpr (std::is_same_v<T, NatRangeT>) {
          if (def.lo == 0 && def.hi == UINT64_MAX) return Value(rng.next());
          return Value(def.lo + rng.below(def.hi - def.lo + 1));
        } else if constexpr (std::is_same_v<T, DigitT>) {
          return Value(rng.below(10));
        } else if constexpr (std::is_same_v<T, DigitListT>) {
          std::vector<Digit> out(def.length);
          for (Digit& d : out) d = static_cast<Digit>(rng.below(10));
          return Value(DigitString(std::move(out)));
        } else if constexpr (std::is_same_v<T, DigitListBoundedT>) {
          // Short-biased: grow while a fair coin keeps coming up heads.
          std::size_t len = 0;
          while (len < def.max_length && rng.coin()) ++len;
          std::vector<Digit> out(len);
          for (Digit& d : out) d = static_cast<Digit>(rng.below(10));
          return Value(DigitString(std::move(out)));
        } else if constexpr (std::is_same_v<T, BitListT>) {
          std::vector<Bit> out(def.length);
          for (Bit& b : out) b = static_cast<Bit>(rng.below(2));
          return Value(BitString(std::move(out)));
        } else if constexpr (std::is_same_v<T, ProductT>) {
          Tuple fields;
          fields.reserve(def.fields.size());
          for (const TypeDef& f : def.fields) fields.push_back(f.generate(rng));
          return Value(std::move(fields));
        } else {
          const auto& values = static_cast<const ChoiceT&>(def).values;
          if (values.empty()) throw Error("cannot draw from an empty choice");
          return values[rng.below(values.size())];
        }
      },
      def_);
}

std::vector<Value> enumerate(const TypeDef& t, std::uint64_t cap) {
  std::uint64_t size = t.domain_size();
  if (size > cap) throw DomainTooLarge(size, cap);
  std::vector<Value> out;
  out.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) out.push_back(t.value_at(i));
  return out;
}

void Env::bind(std::string name, Value v) {
  vars_.emplace_back(std::move(name), std::move(v));
}

const Value& Env::at(std::string_view name) const {
  for (const auto& [n, v] : vars_) {
    if (n == name) return v;
  }
  throw Error("unbound variable '" + std::string(name) + "'");
}

std::uint64_t Env::nat(std::string_view name) const { return at(name).nat(); }

const DigitString& Env::digits(std::string_view name) const {
  return at(name).digits();
}

const BitString& Env::bits(std::string_view name) const {
  return at(name).bits();
}

const Tuple& Env::tuple(std::string_view name) const {
  return at(name).tuple();
}

std::string Env::render() const {
  std::string out = "(";
  for (std::size_t i = vars_.size(); i-- > 0;) {
    out += "(" + upper(vars_[i].first) + " " + vars_[i].second.render() + ")";
    if (i > 0) out.push_back(' ');
  }
  out.push_back(')');
  return out;
}

namespace {

// Outcome of one evaluated environment.
enum class TrialKind : std::uint8_t { filtered, witness, counterexample };

struct TrialRecord {
  TrialKind kind = TrialKind::filtered;
  std::optional<Env> env;
};

struct EvalFailure {
  std::uint64_t index;
  std::string env_text;
  std::string message;
};

void require_runnable(const Property& p) {
  if (!p.hypothesis || !p.conclusion) {
    throw Error("property '" + p.name + "' is missing a predicate");
  }
}

// Evaluates one environment; returns nullopt on predicate failure.
std::optional<TrialRecord> evaluate(const Property& p, Env env,
                                    std::uint64_t index,
                                    std::optional<EvalFailure>& failure) {
  try {
    if (!p.hypothesis(env)) return TrialRecord{};
    bool holds = p.conclusion(env);
    return TrialRecord{
        holds ? TrialKind::witness : TrialKind::counterexample,
        std::move(env)};
  } catch (const std::exception& ex) {
    if (!failure || index < failure->index) {
      failure = EvalFailure{index, env.render(), ex.what()};
    }
    return std::nullopt;
  }
}

TestSummary aggregate(std::vector<TrialRecord>& records) {
  TestSummary s{};
  s.tested = records.size();
  std::unordered_set<std::string> unique;
  for (TrialRecord& rec : records) {
    if (rec.kind == TrialKind::filtered) continue;
    ++s.satisfied;
    unique.insert(rec.env->render());
    if (rec.kind == TrialKind::witness) {
      ++s.witness_count;
      if (s.witness_sample.size() < kWitnessSampleCap) {
        s.witness_sample.push_back(*rec.env);
      }
    } else {
      s.counterexamples.push_back(std::move(*rec.env));
    }
  }
  s.satisfied_unique = unique.size();
  s.vacuous = s.satisfied == 0;
  return s;
}

}  // namespace

TestSummary run_property(const Property& p, const RunOptions& options) {
  require_runnable(p);
  if (options.trials == 0) throw Error("a run needs at least one trial");

  std::vector<TrialRecord> records(options.trials);
  unsigned workers = std::max(1u, options.workers);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, options.trials));

  auto run_chunk = [&](std::uint64_t begin, std::uint64_t end,
                       std::optional<EvalFailure>& failure) {
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng(options.seed, i);
      Env env;
      for (const auto& [name, type] : p.bindings) {
        env.bind(name, type.generate(rng));
      }
      auto rec = evaluate(p, std::move(env), i, failure);
      if (!rec) break;  // this chunk stops at its first predicate failure
      records[i] = std::move(*rec);
    }
  };

  std::vector<std::optional<EvalFailure>> failures(workers);
  if (workers == 1) {
    run_chunk(0, options.trials, failures[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::uint64_t base = options.trials / workers;
    std::uint64_t rem = options.trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t len = base + (w < rem ? 1 : 0);
      threads.emplace_back(run_chunk, begin, begin + len,
                           std::ref(failures[w]));
      begin += len;
    }
    for (std::thread& t : threads) t.join();
  }

  // Report the failure at the lowest trial index, independent of workers.
  const EvalFailure* first = nullptr;
  for (const auto& f : failures) {
    if (f && (!first || f->index < first->index)) first = &*f;
  }
  if (first) throw PredicateFailure(first->env_text, first->message);

  TestSummary s = aggregate(records);
  s.mode = RunMode::random;
  s.seed = options.seed;
  s.trials = options.trials;
  return s;
}

TestSummary run_exhaustive(const Property& p, std::uint64_t cap) {
  require_runnable(p);

  std::vector<std::uint64_t> sizes;
  sizes.reserve(p.bindings.size());
  std::uint64_t total = 1;
  for (const auto& [name, type] : p.bindings) {
    sizes.push_back(type.domain_size());
    total = sat_mul(total, sizes.back());
  }
  if (total > cap) throw DomainTooLarge(total, cap);

  TestSummary s{};
  s.mode = RunMode::exhaustive;
  s.tested = total;

  std::vector<std::uint64_t> odometer(p.bindings.size(), 0);
  std::optional<EvalFailure> failure;
  for (std::uint64_t count = 0; count < total; ++count) {
    Env env;
    for (std::size_t j = 0; j < p.bindings.size(); ++j) {
      env.bind(p.bindings[j].first, p.bindings[j].second.value_at(odometer[j]));
    }
    auto rec = evaluate(p, std::move(env), count, failure);
    if (!rec) throw PredicateFailure(failure->env_text, failure->message);
    if (rec->kind != TrialKind::filtered) {
      ++s.satisfied;
      if (rec->kind == TrialKind::witness) {
        ++s.witness_count;
        if (s.witness_sample.size() < kWitnessSampleCap) {
          s.witness_sample.push_back(*rec->env);
        }
      } else {
        s.counterexamples.push_back(std::move(*rec->env));
      }
    }
    // Last binding varies fastest.
    for (std::size_t j = p.bindings.size(); j-- > 0;) {
      if (++odometer[j] < sizes[j]) break;
      odometer[j] = 0;
    }
  }

  // Enumeration visits each domain point once, so every satisfied
  // environment is distinct.
  s.satisfied_unique = s.satisfied;
  s.vacuous = s.satisfied == 0;
  return s;
}

std::string format_summary(const TestSummary& s, SummaryStyle style) {
  if (style == SummaryStyle::json) {
    nlohmann::ordered_json j;
    j["mode"] = s.mode == RunMode::random ? "random" : "exhaustive";
    if (s.mode == RunMode::random) {
      j["seed"] = s.seed;
      j["trials"] = s.trials;
    }
    j["tested"] = s.tested;
    j["satisfied"] = s.satisfied;
    j["satisfied_unique"] = s.satisfied_unique;
    nlohmann::ordered_json cex = nlohmann::ordered_json::array();
    for (const Env& env : s.counterexamples) cex.push_back(env_to_json(env));
    j["counterexamples"] = cex;
    j["witnesses"] = s.witness_count;
    nlohmann::ordered_json wit = nlohmann::ordered_json::array();
    for (const Env& env : s.witness_sample) wit.push_back(env_to_json(env));
    j["witnesses_sample"] = wit;
    j["vacuous"] = s.vacuous;
    return j.dump(2);
  }

  std::string out = "**Summary of Cgen/testing**\n";
  out += "We tested " + std::to_string(s.tested) +
         " examples across 1 subgoals, of which " +
         std::to_string(s.satisfied) + " (" +
         std::to_string(s.satisfied_unique) +
         " unique) satisfied the hypotheses, and found " +
         std::to_string(s.counterexamples.size()) + " counterexamples and " +
         std::to_string(s.witness_count) + " witnesses.\n\n";
  if (!s.counterexamples.empty()) {
    out += "We falsified the conjecture. Here are counterexamples:\n";
    out += " [found in : \"top\"]\n";
    for (const Env& env : s.counterexamples) {
      out += " -- " + env.render() + "\n";
    }
    out += "\n";
    if (!s.witness_sample.empty()) {
      out += "Cases in which the conjecture is true include:\n";
      out += " [found in : \"top\"]\n";
      for (const Env& env : s.witness_sample) {
        out += " -- " + env.render() + "\n";
      }
      out += "\n";
    }
    out += "Test? found a counterexample.\n";
  } else {
    out += "Test? succeeded. No counterexamples were found.\n";
  }
  return out;
}

}  // namespace checksums::prop
