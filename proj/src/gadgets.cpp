#include "winsel/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <map>
#include <random>

namespace winsel {

namespace {

void push(IntervalSet& out, double left, double right) {
  out.push_back(Interval::make(left, right, out.size()));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GeneratorError(what);
}

}  // namespace

IntervalSet gen_unit_index(const BitString& x, std::size_t j, std::size_t window) {
  require(window >= 3, "unit_index: L must be at least 3");
  require(x.size() == window - 2, "unit_index: |X| must equal L - 2");
  require(j >= 1 && j <= window - 2, "unit_index: J must lie in [1, L - 2]");

  const double L = static_cast<double>(window);
  const double q = 2.0 * L - 1.0;
  IntervalSet out;
  out.reserve(window - 1 + j);
  // right = left + 1 throughout so every interval is exactly unit length.
  for (std::size_t i = 1; i <= window - 2; ++i) {
    const double left = x[i - 1] ? static_cast<double>(i) / q
                                 : 1.0 - static_cast<double>(i) / (L * L);
    push(out, left, left + 1.0);
  }
  const double probe = 1.0 + static_cast<double>(j) / q + 1.0 / (q * q);
  push(out, probe, probe + 1.0);
  for (std::size_t i = window; i <= window + j - 1; ++i) {
    const double left = static_cast<double>(i) / q;
    push(out, left, left + 1.0);
  }
  return out;
}

IntervalSet gen_chain3(const BitString& x1, const BitString& x2, std::size_t j1, std::size_t j2,
                       std::size_t window) {
  require(window >= 5 && (window - 2) % 3 == 0, "chain3: L - 2 must be a positive multiple of 3");
  const std::size_t n = (window - 2) / 3;
  require(x1.size() == n && x2.size() == n, "chain3: |X1| and |X2| must equal (L - 2) / 3");
  require(j1 >= 1 && j1 <= n && j2 >= 1 && j2 <= n, "chain3: J1 and J2 must lie in [1, n]");
  require(x1[j1 - 1] == x2[j2 - 1], "chain3: X1[J1] and X2[J2] must carry the same bit");

  const double nn = static_cast<double>(n);
  const double jj = static_cast<double>(j1);
  // Endpoints of Bob's short-interval slot i (defined for every i, present
  // in the stream only where X2[i] = 1).
  auto slot_left = [&](double i) { return 1.0 + jj / (3 * nn) + 1.0 / (6 * nn) + (i - 1) / (6 * nn * nn); };
  auto slot_right = [&](double i) { return 2.0 - jj / (3 * nn) - 1.0 / (6 * nn) + (i - 1) / (6 * nn * nn); };

  IntervalSet out;
  out.reserve(window + 2 * (j1 - 1));
  for (std::size_t i = 1; i <= n; ++i) {
    const double d = static_cast<double>(i);
    if (x1[i - 1]) {
      push(out, d / (3 * nn), 1.0 + d / (3 * nn));
      push(out, 2.0 - d / (3 * nn), 3.0 - d / (3 * nn));
    } else {
      push(out, -10.0 - d, 10.0 + d);
      push(out, -11.0 - d, 11.0 + d);
    }
  }
  for (std::size_t i = 1; i <= n + 2 * (j1 - 1); ++i) {
    const double d = static_cast<double>(i);
    if (i <= n && x2[i - 1]) {
      push(out, slot_left(d), slot_right(d));
    } else {
      push(out, -10.0 - d, 11.0 + d);
    }
  }
  // Charlie's pair brackets slot J2: one interval between the left ends of
  // slots J2-1 and J2, one between the right ends of slots J2 and J2+1.
  const double k = static_cast<double>(j2);
  push(out, (2 * slot_left(k - 1) + slot_left(k)) / 3, (slot_left(k - 1) + 2 * slot_left(k)) / 3);
  push(out, (2 * slot_right(k) + slot_right(k + 1)) / 3, (slot_right(k) + 2 * slot_right(k + 1)) / 3);
  return out;
}

IntervalSet HardInstance::a() const {
  IntervalSet out = a1;
  out.insert(out.end(), a2.begin(), a2.end());
  out.insert(out.end(), a3.begin(), a3.end());
  return out;
}

IntervalSet HardInstance::c() const {
  IntervalSet out = c1;
  out.insert(out.end(), c2.begin(), c2.end());
  return out;
}

IntervalSet HardInstance::all() const {
  IntervalSet out = a();
  out.insert(out.end(), b.begin(), b.end());
  const IntervalSet tail = c();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

HardInstance gen_appendix_hard(std::size_t l) {
  require(l >= 3 && l % 3 == 0, "appendix_hard: l must be a positive multiple of 3");
  HardInstance s;
  std::uint64_t next = 0;
  auto add = [&next](IntervalSet& part, double left, double right) {
    part.push_back(Interval::make(left, right, next++));
  };
  for (std::size_t i = 1; i <= l; ++i) {
    const double x = static_cast<double>(i);
    add(s.a1, x + 0.1, x + 1.0);
  }
  for (std::size_t i = 1; i <= l; ++i) {
    const double x = static_cast<double>(i);
    add(s.a2, x + 0.5, x + 0.54);
  }
  for (std::size_t i = 1; i <= l; ++i) {
    const double x = static_cast<double>(i);
    add(s.a3, x + 0.95, x + 1.05);
  }
  // Good regions: x = 3k + 2.
  for (std::size_t i = 2; i <= l; i += 3) {
    const double x = static_cast<double>(i);
    add(s.b, x - 0.1, x + 0.26);
    add(s.b, x + 0.53, x + 0.71);
    add(s.b, x + 0.9, x + 1.1);
  }
  for (std::size_t i = 2; i <= l; i += 3) {
    const double x = static_cast<double>(i);
    add(s.c1, x + 0.06, x + 0.3);
    add(s.c1, x + 0.35, x + 0.75);
  }
  for (std::size_t i = 2; i <= l; i += 3) {
    const double x = static_cast<double>(i);
    add(s.c2, x + 0.06, x + 0.15);
    add(s.c2, x + 0.25, x + 0.35);
    add(s.c2, x + 0.55, x + 0.6);
    add(s.c2, x + 0.7, x + 0.8);
    add(s.c2, x + 0.9, x + 0.94);
  }
  return s;
}

UnitRandom::UnitRandom(std::uint64_t seed) : engine_(seed) {}

std::uint64_t UnitRandom::next_bits() { return engine_(); }

double UnitRandom::next() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }

IntervalSet gen_random_unit(std::size_t count, double lo, double hi, std::uint64_t seed) {
  require(lo <= hi, "random_unit: empty coordinate range");
  UnitRandom rng(seed);
  IntervalSet out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double left = lo + rng.next() * (hi - lo);
    push(out, left, left + 1.0);
  }
  return out;
}

IntervalSet gen_random_arbitrary(std::size_t count, double lo, double hi, double len_lo,
                                 double len_hi, std::uint64_t seed) {
  require(lo <= hi, "random_arbitrary: empty coordinate range");
  require(0.0 <= len_lo && len_lo <= len_hi, "random_arbitrary: bad length range");
  UnitRandom rng(seed);
  IntervalSet out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double left = lo + rng.next() * (hi - lo);
    const double len = len_lo + rng.next() * (len_hi - len_lo);
    push(out, left, left + len);
  }
  return out;
}

BitString parse_hex_bits(std::string_view hex, std::size_t bits) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  require(!hex.empty(), "bit-string: empty hex literal");
  BitString out(bits, false);
  std::size_t position = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, position += 4) {
    int nibble;
    const char c = *it;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
    else throw GeneratorError(std::string("bit-string: invalid hex digit '") + c + "'");
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      require(position + b < bits, "bit-string: set bit beyond the expected length");
      out[position + b] = true;
    }
  }
  return out;
}

std::string format_hex_bits(const BitString& bits) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t pos = 0; pos < bits.size() || pos == 0; pos += 4) {
    int nibble = 0;
    for (std::size_t b = 0; b < 4 && pos + b < bits.size(); ++b) {
      if (bits[pos + b]) nibble |= 1 << b;
    }
    out.insert(out.begin(), digits[nibble]);
  }
  return "0x" + out;
}

namespace {

struct ParsedSpec {
  std::string kind;
  std::map<std::string, std::string, std::less<>> params;

  const std::string& get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw GeneratorError(kind + ": missing parameter '" + key + "'");
    return it->second;
  }

  std::string get_or(const std::string& key, std::string fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, value] : params) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw GeneratorError(kind + ": unknown parameter '" + key + "'");
      }
    }
  }
};

constexpr std::string_view kKinds[] = {"appendix_hard", "unit_index", "chain3", "random_unit",
                                       "random_arbitrary"};

ParsedSpec parse_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  ParsedSpec out;
  out.kind = std::string(spec.substr(0, colon));
  if (colon == std::string_view::npos) return out;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw GeneratorError(out.kind + ": malformed parameter '" + std::string(item) + "'");
    }
    out.params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t to_unsigned(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw GeneratorError("expected a non-negative integer for " + std::string(what) + ", got '" +
                         std::string(text) + "'");
  }
  return value;
}

double to_double(std::string_view text, std::string_view what) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw GeneratorError("expected a number for " + std::string(what) + ", got '" +
                         std::string(text) + "'");
  }
  return value;
}

std::pair<double, double> to_range(std::string_view text, std::string_view what) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw GeneratorError("expected lo..hi for " + std::string(what));
  }
  return {to_double(text.substr(0, dots), what), to_double(text.substr(dots + 2), what)};
}

}  // namespace

bool is_generator_spec(std::string_view source) {
  const auto kind = source.substr(0, source.find(':'));
  for (auto k : kKinds) {
    if (kind == k) return true;
  }
  return false;
}

IntervalSet generate(std::string_view spec) {
  const ParsedSpec p = parse_spec(spec);
  if (p.kind == "appendix_hard") {
    p.allow_only({"l"});
    return gen_appendix_hard(to_unsigned(p.get("l"), "l")).all();
  }
  if (p.kind == "unit_index") {
    p.allow_only({"L", "J", "X"});
    const auto window = to_unsigned(p.get("L"), "L");
    require(window >= 3, "unit_index: L must be at least 3");
    return gen_unit_index(parse_hex_bits(p.get("X"), window - 2), to_unsigned(p.get("J"), "J"),
                          window);
  }
  if (p.kind == "chain3") {
    p.allow_only({"L", "J1", "J2", "X1", "X2"});
    const auto window = to_unsigned(p.get("L"), "L");
    require(window >= 5 && (window - 2) % 3 == 0, "chain3: L - 2 must be a positive multiple of 3");
    const std::size_t n = (window - 2) / 3;
    return gen_chain3(parse_hex_bits(p.get("X1"), n), parse_hex_bits(p.get("X2"), n),
                      to_unsigned(p.get("J1"), "J1"), to_unsigned(p.get("J2"), "J2"), window);
  }
  if (p.kind == "random_unit" || p.kind == "random_arbitrary") {
    if (p.kind == "random_unit") p.allow_only({"n", "range", "seed"});
    else p.allow_only({"n", "range", "len", "seed"});
    const auto count = to_unsigned(p.get("n"), "n");
    const auto [lo, hi] = to_range(p.get_or("range", "0..100"), "range");
    const auto seed = to_unsigned(p.get_or("seed", "0"), "seed");
    if (p.kind == "random_unit") return gen_random_unit(count, lo, hi, seed);
    const auto [len_lo, len_hi] = to_range(p.get_or("len", "0.1..10"), "len");
    return gen_random_arbitrary(count, lo, hi, len_lo, len_hi, seed);
  }
  throw GeneratorError("unknown generator kind '" + p.kind + "'");
}

}  // namespace winsel
