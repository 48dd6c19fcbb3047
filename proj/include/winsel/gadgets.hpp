#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "winsel/interval.hpp"

namespace winsel {

// Bit-string for the lower-bound gadgets. bits[i - 1] holds X[i].
using BitString = std::vector<bool>;

class GeneratorError : public std::invalid_argument {
 public:
  explicit GeneratorError(const std::string& what) : std::invalid_argument(what) {}
};

// Clique gadget for the unit-length lower bound. Emits L-2 intervals encoding
// X, the probe interval placed just right of slot J, then J padding intervals
// so that the final window of length L starts at slot J. All unit length.
// Requires |X| = L - 2 and 1 <= J <= L - 2.
IntervalSet gen_unit_index(const BitString& x, std::size_t j, std::size_t window);

// Three-party chained gadget for the arbitrary-length lower bound, with
// n = (L - 2) / 3. Requires |X1| = |X2| = n, 1 <= J1, J2 <= n and
// X1[J1] == X2[J2]. Emits L + 2(J1 - 1) intervals.
IntervalSet gen_chain3(const BitString& x1, const BitString& x2, std::size_t j1, std::size_t j2,
                       std::size_t window);

// Hard instance for the associated-runs output rule, split into its named parts.
// Arrival indices run consecutively over A1 A2 A3 B C1 C2.
struct HardInstance {
  IntervalSet a1, a2, a3, b, c1, c2;

  IntervalSet a() const;
  IntervalSet c() const;
  IntervalSet all() const;
};

// Requires l >= 3 and l divisible by 3.
HardInstance gen_appendix_hard(std::size_t l);

// Seeded streams. Unit streams have left uniform in [lo, hi) and
// right = left + 1; arbitrary streams draw the length from [len_lo, len_hi).
IntervalSet gen_random_unit(std::size_t count, double lo, double hi, std::uint64_t seed);
IntervalSet gen_random_arbitrary(std::size_t count, double lo, double hi, double len_lo,
                                 double len_hi, std::uint64_t seed);

// Deterministic [0, 1) doubles. std::mt19937_64 output is fixed by the
// standard; the std distributions are not, so the mapping is done here.
class UnitRandom {
 public:
  explicit UnitRandom(std::uint64_t seed);
  double next();
  std::uint64_t next_bits();

 private:
  std::mt19937_64 engine_;
};

// Parses "0x..." hex (bit i-1 of the number is X[i]) into a string of
// exactly `bits` bits. Set bits beyond `bits` are rejected.
BitString parse_hex_bits(std::string_view hex, std::size_t bits);
std::string format_hex_bits(const BitString& bits);

// Generator spec strings:
//   appendix_hard:l=30
//   unit_index:L=64,J=17,X=0x...
//   chain3:L=65,J1=3,J2=5,X1=0x...,X2=0x...
//   random_unit:n=1000,range=0..100,seed=7
//   random_arbitrary:n=1000,range=0..100,len=0.1..10,seed=7
bool is_generator_spec(std::string_view source);
IntervalSet generate(std::string_view spec);

}  // namespace winsel
