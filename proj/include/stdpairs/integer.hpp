#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace stdpairs {

// Degrees, witnesses and solver vectors are 64-bit with checked arithmetic
// (overflow raises ErrorKind::Overflow). Exact linear algebra uses GMP.
using Int = std::int64_t;
using IntVec = std::vector<Int>;
using BigInt = mpz_class;
using BigVec = std::vector<BigInt>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int to_int(const BigInt &x);

IntVec add(const IntVec &a, const IntVec &b);
IntVec sub(const IntVec &a, const IntVec &b);
IntVec scale(Int c, const IntVec &a);
Int dot(const IntVec &a, const IntVec &b);
bool is_zero(const IntVec &a);
// Coordinatewise a <= b.
bool leq(const IntVec &a, const IntVec &b);
Int total(const IntVec &a);
// Total degree first, then lexicographic.
bool graded_less(const IntVec &a, const IntVec &b);

// Keeps the coordinatewise-minimal elements, sorted graded-lex, duplicates
// removed.
std::vector<IntVec> minimal_elements(std::vector<IntVec> vectors);

std::string format_vector(const IntVec &a);

struct IntVecHash {
  std::size_t operator()(const IntVec &v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v) {
      h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

} // namespace stdpairs
